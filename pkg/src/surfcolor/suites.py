"""Corpus generation and the verification suites run by ``surfcolor verify``.

Each suite walks a deterministic corpus, checks one property per instance and
folds the outcomes into a :class:`SuiteReport`.  Reports carry no timing in
their text form, so reruns with the same parameters compare byte-for-byte.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, fields, replace
from fractions import Fraction
from typing import Callable, Iterator

from . import coloring as col
from .coloring import ColoringError, ResourceError, Subgraph
from .corpus import (DEFAULT_CEILING, CorpusError, SplitMix64, disk_canvases, discharging_candidates,
                     facial_path_vertex_sets, plane_maps, random_lists, random_plane_map,
                     random_type345_lists)
from .families import (cylinder_grid, k5_torus, k6_projective, k7_torus, planar_k4, torus_grid)
from .hyperbolic import (check_cheeger, check_discharging, check_linearsep, check_onering,
                         derive_constants)
from .sleeve import sleeve_decompose, validate_decomposition
from .surface_core import (EGraph, canonical_code, from_rotation_lists, planarize_crossings,
                           surface_summary)
from .topology import (build_frame, check_frame_optimal, edge_width, edge_width_exhaustive,
                       is_frame, optimize_frame, segment_report)
from .verdicts import EXCEPTION, HYPOTHESIS_FAILURE, PASS, VACUOUS, VIOLATION

KINDS = ("plane", "cylinder", "torus", "crossing")
LIST_POLICIES = ("none", "all-5", "type345", "random5")


class UsageError(ValueError):
    """Unknown suite or corpus parameters that make no sense."""


@dataclass(frozen=True)
class CorpusSpec:
    """What to generate.

    For ``plane`` and ``crossing`` the sizes count vertices; for ``cylinder``
    and ``torus`` they count layers, and the ring range gives the cycle length.
    A plane spec without a ring range yields ring-free plane maps.
    """

    kind: str = "plane"
    n_min: int = 1
    n_max: int = 8
    ring_min: int | None = None
    ring_max: int | None = None
    lists: str = "none"
    assignments: int = 1
    seed: int = 0x5EED
    min_interior_degree: int = 2
    ceiling: int = DEFAULT_CEILING
    # ring-designated plane canvases: exhaustive up to this size, then
    # ``samples`` seeded random maps per larger size
    exhaustive_max: int = 8
    samples: int = 0

    def describe(self) -> str:
        return " ".join(f"{f.name}={getattr(self, f.name)}" for f in fields(self))


def _check_spec(spec: CorpusSpec) -> None:
    if spec.kind not in KINDS:
        raise UsageError(f"unknown corpus kind {spec.kind!r}")
    if spec.lists not in LIST_POLICIES:
        raise UsageError(f"unknown list policy {spec.lists!r}")
    if spec.n_max > spec.ceiling:
        raise CorpusError(f"n_max={spec.n_max} exceeds the ceiling {spec.ceiling}")
    if spec.assignments < 1:
        raise UsageError("assignments must be positive")
    if spec.samples < 0:
        raise UsageError("samples must be non-negative")


def _ring_range(spec: CorpusSpec, default: tuple[int, int]) -> range:
    lo = spec.ring_min if spec.ring_min is not None else default[0]
    hi = spec.ring_max if spec.ring_max is not None else (spec.ring_min or default[1])
    return range(lo, hi + 1)


def _plane_graphs(spec: CorpusSpec) -> Iterator[EGraph]:
    if spec.ring_min is None and spec.ring_max is None:
        for G in plane_maps(spec.n_max, max(3, spec.n_min), spec.ceiling):
            yield G
        return
    lengths = _ring_range(spec, (3, 3))
    if spec.min_interior_degree > 2:
        for k in lengths:
            for G in disk_canvases(k, spec.n_max, spec.min_interior_degree, False, spec.ceiling):
                if G.vertex_count >= spec.n_min:
                    yield G
        return
    # every face of every plane map, as outer ring, up to isomorphism
    found = {}
    top = min(spec.n_max, spec.exhaustive_max)
    if top >= max(3, spec.n_min):
        for G in plane_maps(top, max(3, spec.n_min), spec.ceiling):
            for f in G.faces:
                if f.length in lengths:
                    H = G.replace(rings=[f.vertices])
                    found.setdefault(canonical_code(H), H)
    out = sorted(found.values(), key=lambda H: (H.rings[0].order, H.vertex_count, len(H.edges),
                                                canonical_code(H)))
    yield from out
    yield from _sampled_plane_graphs(spec, lengths, set(found))


def _sampled_plane_graphs(spec: CorpusSpec, lengths: range, seen: set) -> Iterator[EGraph]:
    """Seeded random plane maps above the exhaustive size, each with a random
    face of admissible length as ring; isomorphic repeats are skipped."""
    root = SplitMix64(spec.seed).fork(0xD15C)
    for n in range(max(spec.exhaustive_max + 1, spec.n_min, 3), spec.n_max + 1):
        made = tries = 0
        while made < spec.samples and tries < 50 * spec.samples:
            rng = root.fork(n, tries)
            tries += 1
            G = random_plane_map(n, rng)
            faces = [f for f in G.faces if f.length in lengths]
            if not faces:
                continue
            H = G.replace(rings=[faces[rng.below(len(faces))].vertices])
            code = canonical_code(H)
            if code in seen:
                continue
            seen.add(code)
            made += 1
            yield H


def _crossing_graphs(spec: CorpusSpec) -> Iterator[EGraph]:
    """Plane maps with one extra edge drawn across the common edge of two
    adjacent triangles, planarized at the crossing."""
    found = {}
    for G in plane_maps(max(4, spec.n_max - 1), max(4, spec.n_min - 1), spec.ceiling):
        faces = G.faces
        by_edge = {}
        for i, f in enumerate(faces):
            if f.length == 3:
                for e in f.edge_ids():
                    by_edge.setdefault(e, []).append(i)
        nbrs = [G.neighbors_in_order(v) for v in range(G.vertex_count)]
        for e, fs in sorted(by_edge.items()):
            if len(fs) != 2:
                continue
            u, v = G.edges[e]
            a = next(x for x in faces[fs[0]].vertices if x not in (u, v))
            b = next(x for x in faces[fs[1]].vertices if x not in (u, v))
            if a == b or G.edge_between(a, b) is not None:
                continue
            for H in _draw_crossing(nbrs, u, v, a, b):
                found.setdefault(canonical_code(H), H)
    out = sorted(found.values(), key=lambda H: (H.vertex_count, len(H.edges), canonical_code(H)))
    yield from out


def _draw_crossing(nbrs, u, v, a, b) -> Iterator[EGraph]:
    # a sees u and v consecutively (it is the apex of a triangle on uv), so
    # the new edge ab goes between them; likewise at b
    rot = [list(r) for r in nbrs]
    for x, y in ((a, b), (b, a)):
        r = rot[x]
        i, j = r.index(u), r.index(v)
        if (i + 1) % len(r) == j:
            r.insert(j, y)
        else:
            r.insert(i, y)
    drawn = from_rotation_lists(rot)
    e, f = drawn.edge_between(u, v), drawn.edge_between(a, b)
    H = planarize_crossings(drawn, [oriented_crossing(drawn, e, f)])
    if surface_summary(H).g == 0:
        yield H


def oriented_crossing(drawn: EGraph, e: int, f: int) -> tuple[int, int]:
    """Order a crossing pair so the new vertex's rotation matches the drawing.

    With e = pq and f = y0y1, a vertex y0 that sees p, y1, q in turn has the
    crossing point's rotation p, y1, q, y0, which is what (f, e) produces.
    """
    p, q = drawn.edges[e]
    y0, y1 = drawn.edges[f]
    r = drawn.neighbors_in_order(y0)
    i = r.index(y1)
    if r[i - 1] == p and r[(i + 1) % len(r)] == q:
        return f, e
    return e, f


def _graphs(spec: CorpusSpec) -> Iterator[EGraph]:
    if spec.kind == "plane":
        yield from _plane_graphs(spec)
    elif spec.kind == "crossing":
        yield from _crossing_graphs(spec)
    else:
        lo = max(spec.n_min, 2 if spec.kind == "cylinder" else 3)
        for m in _ring_range(spec, (4, 4)):
            for n in range(lo, spec.n_max + 1):
                yield cylinder_grid(m, n) if spec.kind == "cylinder" else torus_grid(m, n)


def _assign(G: EGraph, spec: CorpusSpec, rng: SplitMix64) -> list[frozenset[int]] | None:
    if spec.lists == "none":
        return None
    if spec.lists == "all-5":
        return [frozenset(range(5))] * G.vertex_count
    if spec.lists == "type345":
        return random_type345_lists(G, rng)
    return random_lists(G.vertex_count, rng, 5, 7)


def generate_corpus(spec: CorpusSpec) -> Iterator[EGraph]:
    """Deterministic isomorph-free stream of canvases.

    With a list policy each graph appears ``assignments`` times, carrying
    lists drawn from a generator forked off the seed by (instance, copy).
    """
    _check_spec(spec)
    root = SplitMix64(spec.seed)
    for i, G in enumerate(_graphs(spec)):
        if spec.lists == "none":
            yield G
            continue
        copies = 1 if spec.lists == "all-5" else spec.assignments
        for j in range(copies):
            L = _assign(G, spec, root.fork(i, j))
            yield G.replace(lists=dict(enumerate(L)))


# reports


@dataclass
class SuiteReport:
    suite: str
    params: str = ""
    instances: int = 0
    passed: int = 0
    failed: int = 0
    vacuous: int = 0
    rejected: int = 0
    first_failure: str | None = None
    wall_time: float = field(default=0.0, compare=False)
    _failure_key: tuple | None = field(default=None, repr=False, compare=False)

    def record(self, status: str, key: tuple = (), certificate: str = "") -> None:
        self.instances += 1
        if status == PASS:
            self.passed += 1
        elif status in (VACUOUS, EXCEPTION):
            self.vacuous += 1
        elif status == HYPOTHESIS_FAILURE:
            self.rejected += 1
        else:
            self.failed += 1
            if self._failure_key is None or key < self._failure_key:
                self._failure_key = key
                self.first_failure = certificate or repr(key)

    def merge(self, other: "SuiteReport") -> "SuiteReport":
        for name in ("instances", "passed", "failed", "vacuous", "rejected"):
            setattr(self, name, getattr(self, name) + getattr(other, name))
        if other._failure_key is not None and (self._failure_key is None
                                               or other._failure_key < self._failure_key):
            self._failure_key, self.first_failure = other._failure_key, other.first_failure
        return self

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.instances > 0

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def text(self) -> str:
        lines = [f"suite: {self.suite}", f"params: {self.params}", f"instances: {self.instances}",
                 f"pass: {self.passed}", f"fail: {self.failed}", f"vacuous: {self.vacuous}",
                 f"rejected: {self.rejected}", f"first-failure: {self.first_failure or '-'}",
                 f"result: {'PASS' if self.ok else 'FAIL'}"]
        return "\n".join(lines) + "\n"


# suite bodies; each fills a report


def _peel_core(G: EGraph, size: int, P) -> frozenset[int]:
    """Vertices outside P left after repeatedly deleting one with fewer
    than ``size`` neighbours among P and the undeleted vertices.  Any
    colouring of P extends to the deleted vertices in reverse order."""
    adj = G.adjacency
    alive = set(range(G.vertex_count))
    P = set(P)
    deg = {v: len(adj[v]) for v in alive}
    stack = [v for v in alive if v not in P and deg[v] < size]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in adj[v]:
            if w in alive:
                deg[w] -= 1
                if w not in P and deg[w] < size:
                    stack.append(w)
    return frozenset(alive - P)


def suite_extend4cycle(spec: CorpusSpec, report: SuiteReport, cross_check_n: int = 6) -> None:
    """Every colouring of G[V(P)] extends, for facial paths P of length <= 3."""
    root = SplitMix64(spec.seed)
    for i, G in enumerate(_graphs(spec)):
        paths = facial_path_vertex_sets(G, 3)
        cores: dict[tuple[int, tuple], frozenset[int]] = {}
        for j in range(spec.assignments):
            L = random_type345_lists(G, root.fork(i, j))
            size = len(L[0])
            bad = None
            for P in paths:
                core = cores.get((size, P))
                if core is None:
                    core = cores[(size, P)] = _peel_core(G, size, P)
                plain = G.vertex_count <= cross_check_n and j == 0
                if not core and not plain:
                    continue
                sub = Subgraph.induced(G, set(P) | core)
                for phi in col.iter_colorings(G, L, Subgraph.induced(G, P)):
                    ok = col.extends_to(G, L, phi, sub)
                    if plain and col.extends_to(G, L, phi) != ok:
                        raise AssertionError(f"peeling and plain search disagree on instance {i}")
                    if not ok:
                        bad = (P, phi)
                        break
                if bad:
                    break
            cert = ""
            if bad:
                cert = f"instance {i} assignment {j} path {list(bad[0])} colouring {bad[1]}"
            report.record(VIOLATION if bad else PASS, (i, j), cert)


def _critical_instances(spec: CorpusSpec) -> Iterator[tuple[tuple, EGraph, list]]:
    root = SplitMix64(spec.seed)
    for i, G in enumerate(_graphs(spec)):
        for j in range(spec.assignments):
            L = random_lists(G.vertex_count, root.fork(i, j), 5, 7)
            yield (i, j), G, L


def suite_strong_linear(spec: CorpusSpec, report: SuiteReport) -> None:
    for key, G, L in _critical_instances(spec):
        if not col.is_critical(G, None, L):
            report.record(VACUOUS, key)
            continue
        v = col.check_strong_linear(G, L)
        report.record(v.status, key, f"instance {key}: {v.describe()}")


def suite_cheeger18(spec: CorpusSpec, report: SuiteReport, c=18, max_len: int = 8) -> None:
    for key, G, L in _critical_instances(spec):
        if not col.is_critical(G, None, L):
            continue
        v = check_cheeger(G, c, max_len)
        report.record(v.status, key, f"instance {key}: {v.describe()}")


def _canonical_ring_colorings(G: EGraph, L, C) -> Iterator[dict[int, int]]:
    """Proper colourings of the ring C.

    With identical lists every colouring is a colour permutation of one
    that introduces colours in palette order along C, and extension counts
    are invariant under permuting colours, so those representatives suffice.
    """
    same = all(x == L[0] for x in L)
    palette = sorted(L[0])
    earlier = [[s for s in range(t) if G.edge_between(C[s], C[t]) is not None] for t in range(len(C))]

    def grow(t, used, cur):
        if t == len(C):
            yield dict(zip(C, cur))
            return
        options = palette[:used + 1] if same else sorted(L[C[t]])
        for c in options:
            if any(cur[s] == c for s in earlier[t]):
                continue
            yield from grow(t + 1, max(used, palette.index(c) + 1) if same else used, cur + [c])

    yield from grow(0, 0, [])


def suite_exp_many(spec: CorpusSpec, report: SuiteReport) -> None:
    for i, G in enumerate(generate_corpus(spec)):
        L = col.lists_from(G)
        C = G.rings[0].vertex_walk
        worst = None
        status = PASS
        for phi in _canonical_ring_colorings(G, L, C):
            if col.solve(G, L, phi) is None:
                continue
            v = col.check_exp_lower_bounds(G, phi, L)
            if not v.ok:
                status, worst = v.status, f"instance {i} colouring {phi}: {v.describe()}"
                break
            if v.status == EXCEPTION and status == PASS:
                status = EXCEPTION
        report.record(status, (i,), worst or "")


def _hypothesis_confirmed(G: EGraph, kind: str, v) -> bool:
    """Recheck the clause a rejection names, straight from the graph."""
    s = surface_summary(G)
    if kind in ("deg7", "deg6"):
        if v.witness is None:
            return not (s.g == 0 and s.h == 1 and s.r == 1 and G.genus_surplus == 0)
        w = v.witness
        need = 7 if kind == "deg7" else 6
        if G.degree(w) < need:
            return True
        inner = [f for i, f in enumerate(G.faces) if i != G.rings[0].face_id]
        on_big = any(f.length >= 4 and w in f.vertices for f in inner)
        ring = set(G.rings[0].vertex_walk)
        return (kind == "deg6" and G.degree(w) == 6 and not on_big
                and not any(G.degree(x) >= 7 or x in ring for x in G.adjacency[w]))
    if isinstance(v.witness, int):
        return v.witness not in G.ring_vertices and G.degree(v.witness) < 4
    verts = tuple(v.witness)
    if len(verts) == 3:
        return not any(G.edge_between(verts[a], verts[(a + 1) % 3]) in G.ring_edges for a in range(3))
    return not any(G.degree(x) >= 5 or x in G.ring_vertices for x in verts)


def suite_discharge(kind: str, target: int, seed: int, report: SuiteReport,
                    max_attempts: int = 200000, distinct: bool = True) -> None:
    rng = SplitMix64(seed)
    seen = set()
    for attempt, G in enumerate(discharging_candidates(kind, rng)):
        if report.passed >= target or attempt >= max_attempts:
            break
        if distinct:
            code = canonical_code(G)
            if code in seen:
                continue
            seen.add(code)
        v = check_discharging(G, kind)
        if v.status == HYPOTHESIS_FAILURE and not _hypothesis_confirmed(G, kind, v):
            report.record(VIOLATION, (attempt,), f"attempt {attempt}: wrong rejection {v.describe()}")
            continue
        report.record(v.status, (attempt,), f"attempt {attempt}: {v.describe()}")


def suite_topology(report: SuiteReport, n_max: int = 10) -> None:
    expected = [("planar K4", planar_k4(), 0), ("K5", k5_torus(), 2),
                ("K6 projective", k6_projective(), 1), ("K7 torus", k7_torus(), 2)]
    for name, G, g in expected:
        s = surface_summary(G)
        report.record(PASS if s.g == g else VIOLATION, (0, name), f"{name}: genus {s.g}, expected {g}")
    for n in range(2, n_max + 1):
        G = cylinder_grid(4, n)
        ew, ex = edge_width(G), edge_width_exhaustive(G)
        want = min(4, n - 1)
        ok = ew == ex == want
        report.record(PASS if ok else VIOLATION, (1, n), f"C4xP{n}: edge-width {ew}/{ex}, expected {want}")


def frame_corpus() -> Iterator[tuple[str, EGraph]]:
    for k in (3, 4, 5):
        for G in _plane_graphs(CorpusSpec(n_max=7, ring_min=k, ring_max=k)):
            yield f"plane |C|={k}", G
    for m in (3, 4, 5):
        for n in (2, 3, 4, 6):
            yield f"C{m}xP{n}", cylinder_grid(m, n)
    for m, n in ((3, 3), (3, 4), (4, 4), (4, 5)):
        yield f"torus {m}x{n}", torus_grid(m, n)
    yield "K5", k5_torus()
    yield "K6", k6_projective()
    yield "K7", k7_torus()
    yield "K4", planar_k4(True)


def suite_frames(report: SuiteReport) -> None:
    for i, (name, G) in enumerate(frame_corpus()):
        F = optimize_frame(G, build_frame(G))
        problems = []
        if not is_frame(G, F):
            problems.append("not a frame")
        viol = check_frame_optimal(G, F)
        if viol is not None:
            problems.append(f"optimality: {viol}")
        rep = segment_report(G, F)
        if not rep.within_bound:
            problems.append(f"{rep.nonring_count} non-ring segments > {rep.bound}")
        report.record(VIOLATION if problems else PASS, (i,), f"{name}: " + "; ".join(problems))


def sleeve_corpus(n_max: int = 50, step: int = 1) -> Iterator[tuple[str, EGraph]]:
    for n in range(2, n_max + 1, step):
        yield f"C4xP{n}", cylinder_grid(4, n)
    for n in range(3, n_max + 1, step):
        yield f"torus 4x{n}", torus_grid(4, n)


def suite_sleeves(report: SuiteReport, c=1, n_max: int = 50, step: int = 1) -> None:
    for i, (name, G) in enumerate(sleeve_corpus(n_max, step)):
        D = sleeve_decompose(G, c)
        v = validate_decomposition(D, G)
        report.record(v.status, (i,), f"{name}: {v.describe()}")


def suite_numsleeves(report: SuiteReport, c=1, n_max: int = 12) -> None:
    for i, (name, G) in enumerate(sleeve_corpus(n_max)):
        D = sleeve_decompose(G, c)
        ok = 6 * len(D.sleeves) <= D.base.vertex_count
        report.record(PASS if ok else VIOLATION, (i,),
                      f"{name}: {len(D.sleeves)} sleeves, base {D.base.vertex_count}")


def suite_constants(report: SuiteReport) -> None:
    K = derive_constants(1)
    for name, got, want in (("d", K.d, 33), ("l", K.l, 2664), ("b", K.b, 10390)):
        report.record(PASS if got == want else VIOLATION, (name,), f"{name}={got}, expected {want}")
    beta = derive_constants(1, 10).beta
    report.record(PASS if beta == 46392 else VIOLATION, ("beta",), f"beta={beta}, expected 46392")
    # d = ceil(a log2 x) iff 2^(d-1) < x^a <= 2^d, for integer a and x
    a, x = 3 * (2 * 1 + 1), 8 * 1 + 4
    ok = 2 ** (K.d - 1) < x ** a <= 2 ** K.d
    report.record(PASS if ok else VIOLATION, ("bracket",), f"integer bracket does not decide d={K.d}")


def suite_oracle_count(spec: CorpusSpec, report: SuiteReport) -> None:
    root = SplitMix64(spec.seed)
    for i, G in enumerate(_graphs(spec)):
        if G.vertex_count > 8:
            continue
        for j in range(spec.assignments):
            rng = root.fork(i, j)
            L = random_lists(G.vertex_count, rng, 2 + rng.below(2), 4)
            pre = {}
            if j % 2:
                pre = {0: min(L[0])}
            got, want = col.count_extensions(G, L, pre), col.brute_force_count(G, L, pre)
            report.record(PASS if got == want else VIOLATION, (i, j),
                          f"instance {i} assignment {j}: count {got}, brute force {want}")


def suite_kernel(spec: CorpusSpec, report: SuiteReport, max_ring: int = 6) -> None:
    for i, G in enumerate(generate_corpus(spec)):
        if surface_summary(G).R > max_ring:
            continue
        K = col.extract_kernel(G)
        ok = col.kernel_preserves_extensions(G, K)
        report.record(PASS if ok else VIOLATION, (i,),
                      f"instance {i}: kernel with {len(K.edges)} edges loses an extension")


def suite_hyperbolic(spec: CorpusSpec, report: SuiteReport, c=18, max_len: int = 6) -> None:
    """Linear separation and the one-ring size bound on members passing the
    Cheeger check."""
    for i, G in enumerate(_graphs(spec)):
        if not check_cheeger(G, c, max_len).ok:
            report.record(VACUOUS, (i,))
            continue
        for tag, v in (("linearsep", check_linearsep(G, c, max_len)), ("onering", check_onering(G, c))):
            report.record(v.status, (i, tag), f"instance {i} {tag}: {v.describe()}")


# registry


@dataclass(frozen=True)
class Suite:
    name: str
    run: Callable[[CorpusSpec, SuiteReport], None]
    default: CorpusSpec | None
    about: str


def _s(fn):
    return lambda spec, rep: fn(rep)


SUITES: dict[str, Suite] = {s.name: s for s in [
    Suite("extend4cycle", suite_extend4cycle, CorpusSpec(n_max=8, lists="type345", assignments=50),
          "colourings of short facial paths extend"),
    Suite("strong-linear", suite_strong_linear,
          CorpusSpec(n_max=10, ring_min=4, ring_max=6, lists="random5", assignments=20,
                     min_interior_degree=5),
          "size inequality on C-critical 5-list disks"),
    Suite("exp-many", suite_exp_many,
          CorpusSpec(n_max=12, ring_min=3, ring_max=6, lists="all-5", samples=2000),
          "logarithmic lower bounds on extension counts"),
    Suite("cheeger18", suite_cheeger18,
          CorpusSpec(n_max=10, ring_min=4, ring_max=6, lists="random5", assignments=20,
                     min_interior_degree=5),
          "critical disks enclose at most 18(|X|-1) vertices"),
    Suite("discharge-deg7", lambda spec, rep: suite_discharge("deg7", 200, spec.seed, rep), CorpusSpec(),
          "interior degrees >= 7 give n <= k-6"),
    Suite("discharge-deg6", lambda spec, rep: suite_discharge("deg6", 200, spec.seed, rep), CorpusSpec(),
          "degree-6 conditions give n <= 9k-48"),
    Suite("discharge-ring44", lambda spec, rep: suite_discharge("ring44", 200, spec.seed, rep),
          CorpusSpec(), "degree >= 4 conditions give |V| <= 20(g+R-2)"),
    Suite("topology", lambda spec, rep: suite_topology(rep, max(spec.n_max, 2)), CorpusSpec(n_max=10),
          "genus of named embeddings and cylinder edge-width"),
    Suite("frames", _s(suite_frames), None, "optimized frames and segment counts"),
    Suite("sleeves", lambda spec, rep: suite_sleeves(rep, n_max=spec.n_max), CorpusSpec(n_max=50, ceiling=50),
          "sleeve decompositions of cylinders and tori validate"),
    Suite("numsleeves", lambda spec, rep: suite_numsleeves(rep, n_max=spec.n_max),
          CorpusSpec(n_max=12), "at most m/6 sleeves"),
    Suite("constants", _s(suite_constants), None, "derived constants at c=1"),
    Suite("oracle-count", suite_oracle_count, CorpusSpec(n_max=8, assignments=2),
          "exact counting agrees with product enumeration"),
    Suite("kernel", suite_kernel, CorpusSpec(n_max=6, ring_min=3, ring_max=6, lists="type345", assignments=2),
          "kernels keep every ring colouring extension"),
    Suite("hyperbolic", suite_hyperbolic, CorpusSpec(n_max=6, ring_min=3, ring_max=5),
          "linear separation and one-ring bounds"),
]}


def verify_suite(name: str, spec: CorpusSpec | None = None, **overrides) -> SuiteReport:
    """Run a registered suite.  ``overrides`` replace fields of its default spec."""
    suite = SUITES.get(name)
    if suite is None:
        raise UsageError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    base = spec if spec is not None else (suite.default or CorpusSpec())
    if overrides:
        base = replace(base, **overrides)
    if suite.default is not None:
        _check_spec(base)
    report = SuiteReport(name, base.describe() if suite.default is not None else "")
    t0 = time.perf_counter()
    suite.run(base, report)
    report.wall_time = time.perf_counter() - t0
    return report
