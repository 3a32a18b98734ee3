"""Hyperbolicity checks, discharging verifiers, derived constants and the
structure outcomes of critical kernels."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .coloring import ResourceError
from .surface_core import EGraph, SurgeryError, excise_cylinder
from .topology import (INF, SIGMA, SIGMA_HAT, all_cycles, bfs_distances,
                       enumerate_disk_curves, shortest_nonnull_cycle)
from .verdicts import HYPOTHESIS_FAILURE, PASS, VACUOUS, VIOLATION, Verdict


class PreconditionError(ValueError):
    """A checker was asked to run on input that fails its gate."""


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(x).limit_denominator(10**9)
    return Fraction(str(x).strip())


# exact logarithms


def _pow_le_pow2(x: Fraction, a: Fraction, n: int) -> bool:
    """x**a <= 2**n, decided with integers (x > 0, a > 0)."""
    p, q = a.numerator, a.denominator
    # (xn/xd)^p <= 2^(n q)
    lhs_num, lhs_den = x.numerator ** p, x.denominator ** p
    e = n * q
    if e >= 0:
        return lhs_num <= lhs_den << e
    return lhs_num << (-e) <= lhs_den


def ceil_log2_product(a, x) -> tuple[int, tuple[Fraction, Fraction]]:
    """Return ``n = ceil(a * log2 x)`` plus the exact bracket proving it.

    The bracket ``(lo, hi) = ((n-1)/a, n/a)`` satisfies ``lo < log2 x <= hi``;
    both inequalities are checked with integer arithmetic, the float estimate
    only seeds the search.
    """
    a, x = as_rational(a), as_rational(x)
    if a <= 0 or x <= 0:
        raise ValueError("need a > 0 and x > 0")
    est = float(a) * (math.log2(x.numerator) - math.log2(x.denominator))
    n = math.ceil(est)
    while not _pow_le_pow2(x, a, n):
        n += 1
    while _pow_le_pow2(x, a, n - 1):
        n -= 1
    return n, (Fraction(n - 1) / a, Fraction(n) / a)


def log2_at_least(value, exponent) -> bool:
    """value >= 2**exponent for a positive integer value and rational exponent."""
    e = as_rational(exponent)
    if value <= 0:
        return False
    p, q = e.numerator, e.denominator
    if p <= 0:
        return value ** q >= Fraction(1, 2 ** (-p))
    return value ** q >= 2 ** p


def within_log_bound(dist: int, factor, size: int) -> bool:
    """dist <= factor * log2(size), exactly (factor rational, size >= 1)."""
    f = as_rational(factor)
    if size <= 1:
        return dist <= 0
    # 2^dist <= size^factor  <=>  2^(dist q) <= size^p
    p, q = f.numerator, f.denominator
    return 2 ** (dist * q) <= size ** p


# constants


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


@dataclass(frozen=True)
class Constants:
    c: Fraction
    c2: Fraction | None
    d: int
    l: Fraction
    b: int
    beta: Fraction | None
    k: int | None
    gamma: int | None = None
    kappa: int | None = None
    g: int | None = None
    ring_length: int | None = None
    d_bracket: tuple = ()
    k_bracket: tuple = ()
    exp_strong: Fraction | None = None
    precolor: tuple | None = None
    crossing: tuple | None = None
    unavailable: tuple = ()

    @property
    def log_factor(self) -> Fraction:
        return 2 * self.c + 1

    def l_C(self, ring_len: int, variant: str = "free5", g: int | None = None) -> int:
        if self.beta is None:
            raise PreconditionError("l_C needs c2")
        if variant == "free5":
            return _ceil(2 * self.beta * ring_len)
        if variant == "free6":
            g = self.g if g is None else g
            if g is None:
                raise PreconditionError("free6 l_C needs g")
            return _ceil(self.beta * (g + ring_len))
        raise ValueError(f"unknown variant {variant!r}")

    def sleeve_case(self, g: int, r: int, R: int) -> tuple[int, Fraction, int]:
        """(case number, declared m, declared s) for a connected surface."""
        c, d, l, b = self.c, self.d, self.l, self.b
        if g == 0 and r == 1:
            return 1, (c + 1) * R, 0
        if g == 0 and r == 2:
            return 2, 2 * (c + 1) * (R - 4 * d) + 2 * l, 1
        if g >= 1 or r >= 3:
            m = (c + 1) * (2 * (R - 4 * d) + b * (r - 2) + (44 * d + 12 + 2 * b) * g)
            return 3, m, 3 * (2 * g + r - 2)
        raise ValueError("genus 0 with no rings has no declared decomposition")

    def ewconst_bound(self, R: int, r: int, g: int, h: int) -> Fraction:
        return (self.c + 1) * (2 * R + (32 * self.d + 10) * r + 4 * (4 * self.d + 1) * (3 * g - 2 * h))

    def ewconst_bound_segments(self, R: int, r: int, g: int, h: int) -> Fraction:
        # the same bound with the segment-count factor 3g + 2r - 2h
        return (self.c + 1) * (2 * R + (32 * self.d + 10) * r + 4 * (4 * self.d + 1) * (3 * g + 2 * r - 2 * h))

    def stronghyp_bound(self, g: int, R: int) -> Fraction:
        if self.beta is None:
            raise PreconditionError("needs c2")
        return self.beta * (g + R)

    def items(self) -> list[tuple[str, object]]:
        out = [("c", self.c), ("d", self.d), ("l", self.l), ("b", self.b)]
        if self.c2 is not None:
            out += [("c2", self.c2), ("β", self.beta)]
        if self.g is not None:
            out.append(("g", self.g))
        if self.k is not None:
            out.append(("k", self.k))
        if self.ring_length is not None and self.beta is not None:
            out.append(("l_C", self.l_C(self.ring_length)))
            if self.g is not None:
                out.append(("l_C_free6", self.l_C(self.ring_length, "free6")))
        if self.exp_strong is not None:
            out.append(("exp_strong", self.exp_strong))
        if self.precolor is not None:
            out += [("precolor_D", self.precolor[0]), ("precolor_c", self.precolor[1])]
        if self.crossing is not None:
            out += [("crossing_D", self.crossing[0]), ("crossing_c", self.crossing[1])]
        return out


def derive_constants(c, c2=None, gamma: int | None = None, kappa: int | None = None,
                     g: int | None = None, M: int | None = None) -> Constants:
    """All constants derived from a Cheeger constant ``c``.

    ``c2`` is the strong hyperbolic constant, ``gamma`` and ``kappa`` feed the
    exponential and precoloured constants, ``g`` is the Euler genus used by
    ``k`` and ``M`` a ring length for which ``l_C`` is reported.
    """
    c = as_rational(c)
    if c <= 0:
        raise ValueError("Cheeger constant must be positive")
    if c2 is not None:
        c2 = as_rational(c2)
        if c2 < 0:
            raise ValueError("strong hyperbolic constant must be nonnegative")
    d, d_br = ceil_log2_product(3 * (2 * c + 1), 8 * c + 4)
    l = 4 * (c + 1) * (10 * d + 3)
    b = 312 * d + 94
    beta = 702 * d * (c + 1) + 6 * c2 if c2 is not None else None
    missing = []
    k = None
    k_br = ()
    if g is None:
        missing.append("k")
    elif g < 1:
        raise ValueError("k needs Euler genus g >= 1")
    elif g == 1:
        k, k_br = 4 * d, (Fraction(0), Fraction(0))
    else:
        t, k_br = ceil_log2_product(2 * (2 * c + 1), g)
        k = t + 4 * d
    if beta is None:
        missing += ["β", "l_C"]
    exp_strong = None
    if gamma is not None and kappa is not None:
        exp_strong = 2 * l * kappa * (4 * gamma * d + 2) + 2 * l
    else:
        missing.append("exp_strong")
    precolor = crossing = None
    if gamma is not None:
        # the least integers with D > 8 gamma and c > 5 gamma
        precolor = (8 * gamma + 1, 5 * gamma + 1)
        crossing = (32 * gamma + 3, 17 * gamma)
    else:
        missing += ["precolor", "crossing"]
    return Constants(c, c2, d, l, b, beta, k, gamma, kappa, g, M, d_br, k_br,
                     exp_strong, precolor, crossing, tuple(missing))


# Cheeger and strong hyperbolicity


def check_cheeger(G: EGraph, c, max_curve_len: int) -> Verdict:
    """Every curve with at most ``max_curve_len`` vertices that bounds a
    ring-free disk encloses at most c(|X|-1) vertices."""
    if max_curve_len < 2:
        raise ValueError("max_curve_len must be at least 2")
    c = as_rational(c)
    seen = 0
    worst = None
    for curve, inside in enumerate_disk_curves(G, max_curve_len):
        if not inside:
            continue
        seen += 1
        bound = c * (len(curve.vertices) - 1)
        n = len(inside)
        if n > bound:
            return Verdict(VIOLATION, "cheeger", n, bound, curve,
                           f"curve {curve.serialize()} encloses {n} vertices",
                           {"inside": sorted(inside)})
        if worst is None or Fraction(n) / max(bound, Fraction(1, 10**9)) > worst[0]:
            worst = (Fraction(n) / max(bound, Fraction(1, 10**9)), n, bound)
    status = PASS if seen else VACUOUS
    extra = {"curves": seen, "max_curve_len": max_curve_len}
    if worst:
        return Verdict(status, "cheeger", worst[1], worst[2], None,
                       f"verified up to curve length {max_curve_len}", extra)
    return Verdict(status, "cheeger", None, None, None,
                   f"verified up to curve length {max_curve_len}", extra)


def _norm_cycle(cyc: Sequence[int]) -> tuple[int, ...]:
    n = len(cyc)
    i = cyc.index(min(cyc))
    fw = tuple(cyc[(i + j) % n] for j in range(n))
    bw = tuple(cyc[(i - j) % n] for j in range(n))
    return min(fw, bw)


def cylinder_vertex_count(G: EGraph, C1: Sequence[int], C2: Sequence[int]) -> int | None:
    try:
        return excise_cylinder(G, C1, C2).vertex_count
    except SurgeryError:
        return None


def check_strong_hyperbolic(G: EGraph, c, c2, max_cycle_len: int | None = None,
                            budget: int = 200_000) -> Verdict:
    """Cylinders cobounded by two disjoint cycles of length at most 2d hold at
    most c2 vertices.

    Ring pairs are tried first, then every pair of cycles up to the length
    limit in order of length.  ``budget`` caps the number of enumerated
    cycles and tested pairs.
    """
    K = derive_constants(c, c2)
    limit = 2 * K.d if max_cycle_len is None else min(2 * K.d, max_cycle_len)
    c2 = K.c2
    detail = f"verified for cycles up to length {limit}"
    if G.vertex_count <= c2:
        return Verdict(PASS, "strong", G.vertex_count, c2, None, "graph has at most c2 vertices")
    ring_cycles = [_norm_cycle(list(r.vertex_walk)) for r in G.rings
                   if 3 <= r.order <= limit and len(set(r.vertex_walk)) == r.order]
    tested = 0
    best = None

    def test(C1, C2):
        nonlocal tested, best
        if set(C1) & set(C2):
            return None
        tested += 1
        if tested > budget:
            raise ResourceError("strong hyperbolicity check exceeded its pair budget")
        n = cylinder_vertex_count(G, C1, C2)
        if n is None:
            return None
        if best is None or n > best[0]:
            best = (n, (C1, C2))
        if n > c2:
            return Verdict(VIOLATION, "strong", n, c2, (C1, C2),
                           f"cycles {list(C1)} and {list(C2)} cobound a cylinder with {n} vertices")
        return None

    for i in range(len(ring_cycles)):
        for j in range(i + 1, len(ring_cycles)):
            v = test(ring_cycles[i], ring_cycles[j])
            if v is not None:
                return v
    cycles = set(ring_cycles)
    for cyc in all_cycles(G, limit):
        cycles.add(_norm_cycle(cyc))
        if len(cycles) > budget:
            raise ResourceError("too many short cycles to enumerate")
    ordered = sorted(cycles, key=lambda t: (len(t), t))
    ring_set = set(ring_cycles)
    for j, C2 in enumerate(ordered):
        for C1 in ordered[:j]:
            if C1 in ring_set and C2 in ring_set:
                continue
            v = test(C1, C2)
            if v is not None:
                return v
    status = PASS if best else VACUOUS
    return Verdict(status, "strong", best[0] if best else None, c2,
                   best[1] if best else None, detail, {"pairs": tested})


# discharging verifiers


def _disk_parts(G: EGraph):
    s = G.summary()
    if G.genus_surplus or s.g != 0 or s.h != 1 or s.r != 1:
        return None
    boundary = set(G.rings[0].vertex_walk)
    interior = [v for v in range(G.vertex_count) if v not in boundary]
    return boundary, interior


def _inner_faces(G: EGraph):
    ring_faces = {r.face_id for r in G.rings}
    return [f for i, f in enumerate(G.faces) if i not in ring_faces]


def check_discharging(G: EGraph, kind: str) -> Verdict:
    """Check a discharging lemma's hypotheses, then its conclusion by counting.

    ``deg7`` and ``deg6`` take a connected plane graph whose single ring is
    the boundary of the disk; ``ring44`` takes any embedded graph with rings.
    """
    deg = [G.degree(v) for v in range(G.vertex_count)]
    if kind in ("deg7", "deg6"):
        parts = _disk_parts(G)
        if parts is None:
            return Verdict(HYPOTHESIS_FAILURE, kind, detail="not a connected graph in a disk with one boundary ring")
        boundary, interior = parts
        k, n = len(boundary), len(interior)
        if n == 0:
            return Verdict(VACUOUS, kind, 0, None, detail="no interior vertices")
        if kind == "deg7":
            low = [v for v in interior if deg[v] < 7]
            if low:
                return Verdict(HYPOTHESIS_FAILURE, kind, witness=low[0],
                               detail=f"interior vertex {low[0]} has degree {deg[low[0]]} < 7")
            bound = k - 6
        else:
            low = [v for v in interior if deg[v] < 6]
            if low:
                return Verdict(HYPOTHESIS_FAILURE, kind, witness=low[0],
                               detail=f"interior vertex {low[0]} has degree {deg[low[0]]} < 6")
            big_face = set()
            for f in _inner_faces(G):
                if f.length >= 4:
                    big_face.update(f.vertices)
            adj = G.adjacency
            for v in interior:
                if deg[v] != 6 or v in big_face:
                    continue
                if any(deg[w] >= 7 or w in boundary for w in adj[v]):
                    continue
                return Verdict(HYPOTHESIS_FAILURE, kind, witness=v,
                               detail=f"degree-6 vertex {v} has no face of size >= 4, "
                                      "no neighbour of degree >= 7 and no boundary neighbour")
            bound = 9 * k - 48
        if n > bound:
            return Verdict(VIOLATION, kind, n, bound, None, f"n={n} exceeds bound for k={k}")
        return Verdict(PASS, kind, n, bound, None, f"k={k}")
    if kind == "ring44":
        ring_v = G.ring_vertices
        ring_e = G.ring_edges
        for v in range(G.vertex_count):
            if v not in ring_v and deg[v] < 4:
                return Verdict(HYPOTHESIS_FAILURE, kind, witness=v,
                               detail=f"non-ring vertex {v} has degree {deg[v]} < 4")
        for f in _inner_faces(G):
            if f.length == 3 and not set(f.edge_ids()) & ring_e:
                return Verdict(HYPOTHESIS_FAILURE, kind, witness=f.vertices,
                               detail=f"triangle {list(f.vertices)} has no ring edge")
            if f.length == 4 and not any(deg[v] >= 5 or (v in ring_v and deg[v] >= 1)
                                         for v in f.vertices):
                return Verdict(HYPOTHESIS_FAILURE, kind, witness=f.vertices,
                               detail=f"4-face {list(f.vertices)} has no vertex of degree >= 5 "
                                      "and no ring vertex")
        s = G.summary()
        bound = 20 * (s.g + s.R - 2)
        if G.vertex_count > bound:
            return Verdict(VIOLATION, kind, G.vertex_count, bound, None, f"g={s.g} R={s.R}")
        return Verdict(PASS, kind, G.vertex_count, bound, None, f"g={s.g} R={s.R}")
    raise ValueError(f"unknown discharging kind {kind!r}")


# growth, logdist and related bounds


def check_growth_and_logdist(G: EGraph, c, max_curve_len: int = 6,
                             cheeger: Verdict | None = None) -> Verdict:
    """Exponential growth of spheres around vertices far from rings and short
    non-null-homotopic cycles, and the logarithmic depth of flat separations.

    The call is gated on ``check_cheeger`` at the same constant; pass an
    earlier verdict as ``cheeger`` to skip recomputing it.
    """
    c = as_rational(c)
    if cheeger is None:
        cheeger = check_cheeger(G, c, max_curve_len)
    if not cheeger.ok:
        raise PreconditionError("graph fails the Cheeger check: " + cheeger.describe())
    factor = 2 * c + 1
    p, q = factor.numerator, factor.denominator
    rings = G.ring_vertices
    ring_dist = bfs_distances(G, rings) if rings else {}
    tested = 0
    for v in range(G.vertex_count):
        dist = bfs_distances(G, [v])
        far = ring_dist.get(v, INF) if rings else INF
        radius = max(dist.values())
        k = 1
        while k <= far and k <= radius + 1:
            ball = {u for u, t in dist.items() if t <= k}
            cost, _ = shortest_nonnull_cycle(G, SIGMA, allowed=ball, bound=2 * k)
            if cost <= 2 * k:
                break
            sphere = sum(1 for t in dist.values() if t == k)
            tested += 1
            # sphere >= 2^(k / factor)  <=>  sphere^p >= 2^(k q)
            if sphere ** p < 2 ** (k * q):
                return Verdict(VIOLATION, "growth", sphere, (k, factor), v,
                               f"vertex {v}: {sphere} vertices at distance {k}")
            k += 1
    # flat separations cut out by disk curves
    seps = 0
    for curve, inside in enumerate_disk_curves(G, max_curve_len):
        if not inside:
            continue
        X = set(curve.vertices)
        seps += 1
        dx = bfs_distances(G, X)
        depth = max(dx[u] for u in inside)
        if not within_log_bound(depth, factor, len(X)):
            return Verdict(VIOLATION, "logdist", depth, (factor, len(X)), curve,
                           f"vertex at distance {depth} behind a curve through {len(X)} vertices")
    # the whole graph against its ring when it is a disk
    s = G.summary()
    if s.h == 1 and s.g == 0 and s.r == 1 and not G.genus_surplus:
        ring = G.rings[0].vertex_walk
        depth = max(ring_dist.values())
        seps += 1
        if not within_log_bound(depth, factor, len(set(ring))):
            return Verdict(VIOLATION, "logdist", depth, (factor, len(set(ring))), tuple(ring),
                           f"vertex at distance {depth} from the ring")
    status = PASS if tested or seps else VACUOUS
    return Verdict(status, "growth", tested, None, None,
                   f"{tested} sphere checks, {seps} separations, curves up to length {max_curve_len}",
                   {"spheres": tested, "separations": seps})


def check_linearsep(G: EGraph, c, max_curve_len: int = 6) -> Verdict:
    """|A-B| <= c(|A∩B|-1) over the flat separations found by curve enumeration
    together with the ring separation of a one-ring disk."""
    c = as_rational(c)
    seps = 0
    for curve, inside in enumerate_disk_curves(G, max_curve_len):
        if not inside:
            continue
        seps += 1
        X = set(curve.vertices)
        bound = c * (len(X) - 1)
        if len(inside) > bound:
            return Verdict(VIOLATION, "linearsep", len(inside), bound, curve)
    check = check_onering(G, c)
    if check.status == VIOLATION:
        return check
    if check.status == PASS:
        seps += 1
    return Verdict(PASS if seps else VACUOUS, "linearsep", seps, None, None, f"{seps} separations")


def check_onering(G: EGraph, c) -> Verdict:
    """A connected plane graph with one ring has at most c(R-1) non-ring vertices."""
    c = as_rational(c)
    s = G.summary()
    if not (s.h == 1 and s.g == 0 and s.r == 1 and not G.genus_surplus):
        return Verdict(VACUOUS, "onering", detail="not a connected one-ring plane graph")
    n = G.vertex_count - s.R
    bound = c * (s.R - 1)
    if n > bound and n > 0:
        return Verdict(VIOLATION, "onering", n, bound)
    return Verdict(PASS, "onering", n, bound)


def check_edge_width_bound(G: EGraph, c) -> Verdict:
    """Large graphs contain a short non-null-homotopic cycle avoiding the rings.

    The bound uses the factor 3g-2h; instances where the alternative factor
    3g+2r-2h leads to a different conclusion are flagged in ``extra``.
    """
    K = derive_constants(c)
    s = G.summary()
    genus = G.component_euler_genus()
    ringed = {G.component_of[r.vertex_walk[0]] for r in G.rings}
    if G.genus_surplus or any(gc == 0 and i not in ringed for i, gc in enumerate(genus)):
        return Verdict(HYPOTHESIS_FAILURE, "ewconst", detail="a surface component is a sphere "
                       "or the embedding is not 2-cell")
    bound = K.ewconst_bound(s.R, s.r, s.g, s.h)
    alt = K.ewconst_bound_segments(s.R, s.r, s.g, s.h)
    n = G.vertex_count
    extra = {"alt_bound": alt, "diverges": (n > bound) != (n > alt)}
    if n <= bound:
        return Verdict(VACUOUS, "ewconst", n, bound, None, "below the size threshold", extra)
    allowed = [v for v in range(n) if v not in G.ring_vertices]
    cost, cyc = shortest_nonnull_cycle(G, SIGMA, allowed=allowed, bound=2 * K.d)
    if cyc is None or cost > 2 * K.d:
        return Verdict(VIOLATION, "ewconst", n, bound, None, "no short non-null-homotopic cycle", extra)
    return Verdict(PASS, "ewconst", cost, 2 * K.d, cyc, "", extra)


def check_stronghyp_bound(G: EGraph, c, c2) -> Verdict:
    K = derive_constants(c, c2)
    s = G.summary()
    bound = K.stronghyp_bound(s.g, s.R)
    n = G.vertex_count
    if n > bound:
        return Verdict(VIOLATION, "stronghyp", n, bound)
    return Verdict(PASS, "stronghyp", n, bound)


# structure outcomes


@dataclass
class ComponentOutcome:
    vertices: tuple[int, ...]
    tags: list[str] = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)


@dataclass
class StructureReport:
    a: tuple | None
    components: list[ComponentOutcome]
    variant: str = "free5"

    @property
    def assignable(self) -> bool:
        return self.a is not None or all(c.tags for c in self.components)

    @property
    def status(self) -> str:
        return PASS if self.assignable else "bounds-violated"

    def lines(self) -> list[str]:
        out = []
        if self.a is not None:
            i, j, dist, bound = self.a
            out.append(f"a rings {i} {j} distance {dist} <= {bound}")
        for n, comp in enumerate(self.components):
            tags = ",".join(comp.tags) if comp.tags else "none"
            out.append(f"component {n} ({len(comp.vertices)} vertices): {tags}")
        if not self.assignable:
            out.append("bounds-violated")
        return out


def classify_structure(G: EGraph, constants: Constants, variant: str = "free5") -> StructureReport:
    """Which structural outcomes hold for a kernel with its rings.

    Outcome ``a`` is global; the others are decided per component.  With
    ``variant="free6"`` the ring distances use the genus-dependent l_C and
    the disk outcome carries the tag ``d`` (that variant has no separate
    genus-count outcome).
    """
    K = constants
    if K.beta is None:
        raise PreconditionError("classification needs c2")
    s = G.summary()
    g = s.g
    factor = K.log_factor
    rings = list(G.rings)
    lC = [K.l_C(len(set(r.vertex_walk)), variant, g) for r in rings]
    a = None
    for i in range(len(rings)):
        dist = bfs_distances(G, rings[i].vertex_walk)
        for j in range(i + 1, len(rings)):
            dij = min((dist.get(v, INF) for v in rings[j].vertex_walk), default=INF)
            bound = lC[i] + lC[j] - 1
            if dij <= bound and (a is None or dij < a[2]):
                a = (i, j, dij, bound)
    k = K.k
    if k is None and g >= 1:
        k = derive_constants(K.c, K.c2, g=g).k
    genus = G.component_euler_genus()
    comp_of = G.component_of
    out = []
    for verts in G.components:
        cid = comp_of[verts[0]]
        vs = set(verts)
        here = [i for i, r in enumerate(rings) if r.vertex_walk[0] in vs]
        co = ComponentOutcome(tuple(verts))
        gc = genus[cid]
        if not here:
            if k is not None:
                cost, cyc = shortest_nonnull_cycle(G, SIGMA_HAT, allowed=vs, bound=k + 2)
                if cyc is not None and cost <= k + 2:
                    co.tags.append("b")
                    co.witnesses["b"] = cyc
        if len(here) == 1:
            i = here[0]
            ring = set(rings[i].vertex_walk)
            dist = bfs_distances(G, ring)
            depth = max(dist[v] for v in verts)
            if depth < lC[i]:
                bound = Fraction(2 * lC[i]) + Fraction(len(ring), 2)
                cost, cyc = shortest_nonnull_cycle(G, SIGMA_HAT, allowed=vs, bound=bound)
                if cyc is not None and cost <= bound:
                    co.tags.append("c")
                    co.witnesses["c"] = cyc
            if gc == 0 and within_log_bound(depth, factor, len(ring)):
                tag = "e" if variant == "free5" else "d"
                co.tags.append(tag)
                co.witnesses[tag] = (i, depth)
        if variant == "free5":
            Rc = sum(len(set(rings[i].vertex_walk)) for i in here)
            if 0 < Rc < gc and len(verts) <= K.beta * (gc + Rc):
                co.tags.append("d")
                co.witnesses["d"] = (gc, Rc)
        out.append(co)
    return StructureReport(a, out, variant)
