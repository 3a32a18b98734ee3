"""Genus, faces, edge-width and a frame for a few standard embeddings.

Run from the repository root:  python demos/embedded_graphs.py
"""

from surfcolor.families import cylinder_grid, k5_torus, k6_projective, k7_torus, planar_k4
from surfcolor.topology import build_frame, edge_width, optimize_frame, segment_report

for name, G in [("K4 in the plane", planar_k4()), ("K5", k5_torus()),
                ("K6 projective", k6_projective()), ("K7 torus", k7_torus()),
                ("C4 x P6 cylinder", cylinder_grid(4, 6))]:
    ew = edge_width(G)
    print(f"{name:18} V={G.vertex_count:2} E={len(G.edges):2} F={len(G.faces):2} "
          f"{G.summary()}  edge-width {'inf' if ew == float('inf') else int(ew)}")

G = cylinder_grid(4, 6)
F = optimize_frame(G, build_frame(G))
rep = segment_report(G, F)
print(f"\ncylinder frame: {len(F.edges)} edges, {rep.nonring_count} non-ring segment(s), bound {rep.bound}")
