"""List colourings of a wheel, derived constants and a sleeve decomposition.

Run from the repository root:  python demos/colorings_and_sleeves.py
"""

from surfcolor import coloring as col
from surfcolor.families import cylinder_grid, wheel
from surfcolor.hyperbolic import derive_constants
from surfcolor.sleeve import sleeve_decompose, validate_decomposition

five = [frozenset(range(5))] * 6
W = wheel(5)
ring = W.rings[0].vertex_walk
print("wheel with a 5-cycle ring, 5-lists")
print("  critical:", col.is_critical(W, None, five))
for phi in ({v: c for v, c in zip(ring, (0, 1, 0, 1, 2))}, dict(zip(ring, range(5)))):
    print(f"  ring colours {[phi[v] for v in ring]} -> {col.count_extensions(W, five, phi)} extension(s)")
print("  strong linear check:", col.check_strong_linear(W, five).describe())

K = derive_constants(1, 10)
print("\nconstants at c=1, c2=10:", ", ".join(f"{n}={v}" for n, v in K.items()))

G = cylinder_grid(4, 20)
D = sleeve_decompose(G, 1)
print(f"\nC4 x P20: base {D.measured_m} vertices, {D.measured_s} sleeve(s) of "
      f"{[p.graph.vertex_count for p in D.sleeves]} vertices")
print(" ", validate_decomposition(D, G).describe())
