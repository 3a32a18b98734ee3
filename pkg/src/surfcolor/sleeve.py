"""Sleeves (cylinders layered by short disjoint separating cycles) and
decompositions of embedded graphs into a small base with sleeves attached."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .hyperbolic import as_rational, check_cheeger, derive_constants
from .surface_core import (EGraph, SurgeryError, ValidationError, are_isomorphic, cut_cycle,
                           cycle_sign, excise_cylinder, parse_egr, restrict_to_vertices,
                           serialize_egr)
from .topology import SIGMA, SIGMA_HAT, bfs_distances, is_null_homotopic, shortest_nonnull_cycle
from .verdicts import PASS, VIOLATION, Verdict


class SleeveError(ValueError):
    pass


# certificates


@dataclass(frozen=True)
class SleeveCertificate:
    """Cycles C_0..C_n (C_0 and C_n the rings) and the vertex count of each
    cylinder between consecutive cycles, boundaries included."""

    cycles: tuple[tuple[int, ...], ...]
    gap_counts: tuple[int, ...]
    k: int
    l: Fraction
    gap_vertices: tuple[frozenset[int], ...] = field(default=(), compare=False)

    @property
    def n(self) -> int:
        return len(self.cycles) - 1


def _cylinder_rings(G: EGraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    s = G.summary()
    if G.genus_surplus or s.h != 1 or s.g != 0 or s.r != 2:
        raise SleeveError("not a 2-ring cylinder")
    walks = tuple(tuple(r.vertex_walk) for r in G.rings)
    if any(len(w) < 3 for w in walks):
        raise SleeveError("sleeve rings must be cycles")
    return walks


def _between(G: EGraph, C1, C2) -> frozenset[int]:
    _, ids = excise_cylinder(G, C1, C2, return_map=True)
    return frozenset(ids)


def _sweep(G: EGraph, start: Sequence[int], stop: Sequence[int], k: int) -> list[tuple[int, ...]]:
    """Greedy maximal collection of pairwise disjoint separating cycles of
    length at most k between ``start`` and ``stop`` (both excluded).

    Each step takes the shortest separating cycle inside the smallest BFS
    neighbourhood of the previous cycle that contains one.
    """
    out = []
    cur = tuple(start)
    stop_set = set(stop)
    while True:
        side = _between(G, cur, stop)
        region = set(side) - set(cur) - stop_set
        if not region:
            return out
        dist = bfs_distances(G, cur, allowed=region | set(cur))
        depth = max((dist[v] for v in region if v in dist), default=0)
        found = None
        for t in range(1, depth + 1):
            allowed = {v for v in region if dist.get(v, t + 1) <= t}
            cost, cyc = shortest_nonnull_cycle(G, SIGMA, allowed=allowed, bound=k)
            if cyc is not None and cost <= k:
                found = tuple(cyc)
                break
        if found is None:
            return out
        out.append(found)
        cur = found


def find_sleeve(G: EGraph, k: int, l) -> SleeveCertificate | None:
    """A (k, l)-sleeve certificate for a 2-ring cylinder, or None.

    The separating cycles are collected greedily from the first ring.  None
    is returned when a ring is longer than k or when some cylinder between
    consecutive collected cycles holds more than l vertices.
    """
    R1, R2 = _cylinder_rings(G)
    l = as_rational(l)
    if len(R1) > k or len(R2) > k:
        return None
    cycles = [R1] + _sweep(G, R1, R2, k) + [R2]
    gaps, counts = [], []
    for a, b in zip(cycles, cycles[1:]):
        vs = _between(G, a, b)
        gaps.append(vs)
        counts.append(len(vs))
    if any(c > l for c in counts):
        return None
    return SleeveCertificate(tuple(cycles), tuple(counts), k, l, tuple(gaps))


def certificate_problems(G: EGraph, cert: SleeveCertificate) -> list[str]:
    """Every violated certificate condition, as readable strings."""
    try:
        R1, R2 = _cylinder_rings(G)
    except SleeveError as exc:
        return [str(exc)]
    out = []
    cyc = cert.cycles
    if len(cyc) < 2 or set(cyc[0]) != set(R1) or set(cyc[-1]) != set(R2):
        out.append("first and last cycles must be the rings")
    for i, C in enumerate(cyc):
        if len(C) > cert.k:
            out.append(f"cycle {i} has length {len(C)} > {cert.k}")
        for j in range(i):
            if set(C) & set(cyc[j]):
                out.append(f"cycles {j} and {i} intersect")
    if out:
        return out
    for i, C in enumerate(cyc[1:-1], 1):
        try:
            if is_null_homotopic(G, C, SIGMA):
                out.append(f"cycle {i} does not separate the rings")
        except SurgeryError as exc:
            out.append(f"cycle {i}: {exc}")
    if len(cert.gap_counts) != len(cyc) - 1:
        out.append("one gap count per pair of consecutive cycles")
        return out
    covered: set[int] = set()
    for i, (a, b) in enumerate(zip(cyc, cyc[1:])):
        try:
            vs = _between(G, a, b)
        except SurgeryError:
            out.append(f"gap {i}: cycles {i} and {i + 1} do not cobound a cylinder")
            continue
        if len(vs) != cert.gap_counts[i]:
            out.append(f"gap {i}: recorded {cert.gap_counts[i]} vertices, found {len(vs)}")
        if len(vs) > cert.l:
            out.append(f"gap {i}: {len(vs)} vertices exceed l={cert.l}")
        overlap = covered & vs
        if overlap != (set(a) if i else set()):
            out.append(f"gap {i} overlaps the previous gaps outside cycle {i}")
        covered |= vs
    if covered != set(range(G.vertex_count)):
        out.append("gaps do not cover the sleeve")
    return out


# gluing


def _switch(rotation, signs, edges, verts: set[int]) -> None:
    """Reverse the local orientation at ``verts`` in place."""
    for v in verts:
        rotation[v] = list(reversed(rotation[v]))
    for e, (u, w) in enumerate(edges):
        if (u in verts) != (w in verts):
            signs[e] = -signs[e]


def _ring_darts(G: EGraph, ring_index: int):
    """Per ring vertex: (arrival dart, departure dart) of the ring face, and
    the face's orientation; assumes all ring edges are positive."""
    f = G.faces[G.rings[ring_index].face_id]
    darts = f.darts
    o = darts[0][1]
    out = {}
    n = len(darts)
    for i, (h, _) in enumerate(darts):
        v = G.origin(h)
        arrive = darts[i - 1][0] ^ 1
        out[v] = (arrive, h)
    return out, o


def _normalize_ring(rotation, signs, edges, walk) -> None:
    idx = {}
    for e, (u, v) in enumerate(edges):
        idx[(u, v)] = idx[(v, u)] = e
    n = len(walk)
    for i in range(n - 1):
        e = idx[(walk[i], walk[i + 1])]
        if signs[e] == -1:
            _switch(rotation, signs, edges, {walk[i + 1]})
    if signs[idx[(walk[-1], walk[0])]] == -1:
        raise SurgeryError("ring is one-sided")


def _identify(G: EGraph, ia: int, ib: int, phi: dict[int, int]) -> EGraph:
    """Identify ring ``ib`` onto ring ``ia`` along the vertex bijection
    ``phi`` (ring-a vertex -> ring-b vertex); ring-b's vertices disappear."""
    A = G.rings[ia].vertex_walk
    B = G.rings[ib].vertex_walk
    if len(A) != len(B):
        raise SurgeryError(f"ring lengths differ: {len(A)} vs {len(B)}")
    if len(A) < 3:
        raise SurgeryError("only cycle rings can be identified")
    if set(phi) != set(A) or set(phi.values()) != set(B):
        raise SurgeryError("pairing is not a bijection between the ring vertices")
    n = len(A)
    for i in range(n):
        a, a2 = A[i], A[(i + 1) % n]
        if G.edge_between(phi[a], phi[a2]) is None:
            raise SurgeryError("pairing does not map ring edges to ring edges")
    edges = [list(p) for p in G.edges]
    rotation = [list(r) for r in G.rotation]
    signs = list(G.signs)
    rings = [r.vertex_walk for r in G.rings]
    _normalize_ring(rotation, signs, edges, list(A))
    _normalize_ring(rotation, signs, edges, list(B))
    H = EGraph(G.vertex_count, edges, rotation, signs, rings, G.genus_surplus)
    da, oa = _ring_darts(H, ia)
    db, ob = _ring_darts(H, ib)
    # which B dart sits where A's arrival dart lands decides the reading
    # direction of B's sector; flip B's ring vertices when frames disagree
    x = A[0]
    prev_a = H.origin(da[x][0] ^ 1)
    y = phi[x]
    next_b = H.origin(db[y][1] ^ 1)
    forward = phi[prev_a] == next_b
    need_flip = (oa != ob) if forward else (oa == ob)
    if need_flip:
        rotation = [list(r) for r in H.rotation]
        signs = list(H.signs)
        _switch(rotation, signs, edges, set(B))
        H = EGraph(G.vertex_count, edges, rotation, signs, rings, G.genus_surplus)
        db, ob = _ring_darts(H, ib)
    ring_b_edges = set(H.faces[H.rings[ib].face_id].edge_ids())
    bset = set(B)
    inv = {b: a for a, b in phi.items()}
    # keep every vertex outside ring B; ids shift down past removed ones
    keep = [v for v in range(H.vertex_count) if v not in bset]
    vmap = {v: i for i, v in enumerate(keep)}
    for b in B:
        vmap[b] = vmap[inv[b]]
    emap = {}
    new_edges, new_signs = [], []
    for e, (u, w) in enumerate(H.edges):
        if e in ring_b_edges:
            continue
        emap[e] = len(new_edges)
        new_edges.append((vmap[u], vmap[w]))
        new_signs.append(H.signs[e])

    def nd(h):
        return 2 * emap[h >> 1] + (h & 1)

    a_edge = {}
    for e, (u, w) in enumerate(H.edges):
        if u in phi and w in phi:
            a_edge[(u, w)] = e
            a_edge[(w, u)] = e

    def partner(h):
        # B ring dart -> the A ring dart it merges with
        b1, b2 = H.origin(h), H.origin(h ^ 1)
        a1, a2 = inv[b1], inv[b2]
        e = a_edge[(a1, a2)]
        return 2 * e + (0 if H.edges[e][0] == a1 else 1)

    new_rot = [None] * len(keep)
    for v in keep:
        if v not in phi:
            new_rot[vmap[v]] = [nd(h) for h in H.rotation[v]]
            continue
        rot_a = H.rotation[v]
        arr_a, dep_a = da[v]
        d = len(rot_a)
        pa = H.pos[dep_a]
        sector_a = [rot_a[(pa + oa * j) % d] for j in range(d)]
        y = phi[v]
        rot_b = H.rotation[y]
        arr_b, dep_b = db[y]
        d2 = len(rot_b)
        pb = H.pos[dep_b]
        sector_b = [rot_b[(pb + ob * j) % d2] for j in range(d2)]
        inner_b = sector_b[1:-1]
        if partner(sector_b[0]) != arr_a:
            inner_b = inner_b[::-1]
            assert partner(sector_b[-1]) == arr_a
        seq = sector_a + inner_b
        if oa == -1:
            seq = seq[::-1]
        new_rot[vmap[v]] = [nd(h) for h in seq]
    new_rings = [[vmap[v] for v in r] for i, r in enumerate(rings) if i not in (ia, ib)]
    lists = None
    if G.lists is not None:
        lists = {vmap[v]: c for v, c in G.lists.items() if v not in bset}
    try:
        return EGraph(len(keep), new_edges, new_rot, new_signs, new_rings, G.genus_surplus, lists)
    except ValidationError as exc:
        raise SurgeryError(f"identification is not a simple embedded graph: {exc}") from exc


def disjoint_union(G1: EGraph, G2: EGraph) -> EGraph:
    n1, m1 = G1.vertex_count, len(G1.edges)
    edges = list(G1.edges) + [(u + n1, v + n1) for u, v in G2.edges]
    rot = [list(r) for r in G1.rotation] + [[h + 2 * m1 for h in r] for r in G2.rotation]
    rings = [r.vertex_walk for r in G1.rings] + [[v + n1 for v in r.vertex_walk] for r in G2.rings]
    lists = None
    if G1.lists is not None or G2.lists is not None:
        lists = dict(G1.lists or {})
        lists.update({v + n1: c for v, c in (G2.lists or {}).items()})
    return EGraph(n1 + G2.vertex_count, edges, rot, list(G1.signs) + list(G2.signs), rings,
                  G1.genus_surplus + G2.genus_surplus, lists)


def pairing_map(H: EGraph, h_ring: int, S: EGraph, s_ring: int, offset: int, reverse: bool) -> dict[int, int]:
    hw, sw = H.rings[h_ring].vertex_walk, S.rings[s_ring].vertex_walk
    if len(hw) != len(sw):
        raise SurgeryError(f"ring lengths differ: {len(hw)} vs {len(sw)}")
    n = len(hw)
    sgn = -1 if reverse else 1
    return {hw[t]: sw[(offset + sgn * t) % n] for t in range(n)}


def adjoin_sleeve(H: EGraph, S: EGraph, pairing) -> EGraph:
    """Glue the rings of S onto rings of H.

    ``pairing`` lists ``(h_ring, s_ring, offset, reverse)`` entries: position
    t of H's ring walk meets position ``offset ± t`` of S's ring walk.  The
    result carries every ring of H not used by the pairing.
    """
    pairing = list(pairing)
    if not pairing or len(pairing) > len(S.rings):
        raise SurgeryError("pairing must use one or two sleeve rings")
    maps = [pairing_map(H, hr, S, sr, off, rev) for hr, sr, off, rev in pairing]
    return _adjoin_maps(H, S, maps)


def _adjoin_maps(H: EGraph, S: EGraph, maps: list[dict[int, int]]) -> EGraph:
    n1 = H.vertex_count
    U = disjoint_union(H, S)
    pending = [{a: b + n1 for a, b in m.items()} for m in maps]
    while pending:
        m = pending.pop(0)
        ring_of = U.ring_of_vertex
        ia = ring_of[next(iter(m))]
        ib = ring_of[next(iter(m.values()))]
        U = _identify(U, ia, ib, m)
        # the remaining maps point into S; ids beyond the removed ring shift down
        removed = sorted(m.values())
        pending = [{a: b - sum(1 for r in removed if r < b) for a, b in mm.items()} for mm in pending]
    return U


# decomposition


@dataclass
class SleevePiece:
    graph: EGraph
    certificate: SleeveCertificate | None
    # (base ring, sleeve ring, offset, reverse) for each sleeve ring
    attach: tuple[tuple[int, int, int, bool], ...]


@dataclass
class SleeveDecomposition:
    base: EGraph
    sleeves: list[SleevePiece]
    k: int
    l: Fraction
    m: Fraction
    s: int
    case: int
    clamped: bool = False
    log: list[str] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)
    cheeger: Verdict | None = None

    @property
    def measured_m(self) -> int:
        return self.base.vertex_count

    @property
    def measured_s(self) -> int:
        return len(self.sleeves)

    def reassemble(self) -> EGraph:
        G = self.base
        for piece in self.sleeves:
            maps = []
            for br, sr, off, rev in piece.attach:
                maps.append(pairing_map(self.base, br, piece.graph, sr, off, rev))
            G = _adjoin_maps(G, piece.graph, maps)
        return G

    def serialize(self) -> str:
        out = [f"DECOMPOSITION k={self.k} l={self.l} m={self.m} s={self.s} case={self.case}",
               "BASE", serialize_egr(self.base).rstrip("\n"), "END"]
        for i, piece in enumerate(self.sleeves, 1):
            out += [f"SLEEVE {i}", serialize_egr(piece.graph).rstrip("\n"), "END"]
            if piece.certificate is not None:
                cert = piece.certificate
                out.append(f"GAPS {i} " + ",".join(map(str, cert.gap_counts)))
                for C in cert.cycles:
                    out.append(f"CYCLE {i} " + ",".join(map(str, C)))
            for br, sr, off, rev in piece.attach:
                out.append(f"ATTACH {i} {br} {sr} {off} {int(rev)}")
        return "\n".join(out) + "\n"


def parse_decomposition(text: str) -> SleeveDecomposition:
    lines = text.splitlines()
    head = dict(tok.split("=", 1) for tok in lines[0].split()[1:])
    blocks, cur, name = {}, None, None
    attach, gaps, cycles = {}, {}, {}
    for line in lines[1:]:
        if cur is not None:
            if line == "END":
                blocks[name] = parse_egr("\n".join(cur) + "\n")
                cur = None
            else:
                cur.append(line)
            continue
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "BASE":
            name, cur = 0, []
        elif parts[0] == "SLEEVE":
            name, cur = int(parts[1]), []
        elif parts[0] == "ATTACH":
            i, br, sr, off, rev = map(int, parts[1:6])
            attach.setdefault(i, []).append((br, sr, off, bool(rev)))
        elif parts[0] == "GAPS":
            gaps[int(parts[1])] = tuple(int(x) for x in parts[2].split(","))
        elif parts[0] == "CYCLE":
            cycles.setdefault(int(parts[1]), []).append(tuple(int(x) for x in parts[2].split(",")))
    k, l = int(head["k"]), Fraction(head["l"])
    pieces = []
    for i in sorted(x for x in blocks if x):
        cert = None
        if i in gaps:
            cert = SleeveCertificate(tuple(cycles[i]), gaps[i], k, l)
        pieces.append(SleevePiece(blocks[i], cert, tuple(attach.get(i, ()))))
    return SleeveDecomposition(blocks[0], pieces, k, l, Fraction(head["m"]), int(head["s"]), int(head["case"]))


def _is_gamma_cycle(H: EGraph, cyc, ring_index: int) -> bool:
    others = [r.vertex_walk for i, r in enumerate(H.rings) if i != ring_index]
    capped = H.replace(rings=others)
    return is_null_homotopic(capped, cyc, SIGMA)


def _gamma_rings(H: EGraph, cyc) -> list[int]:
    return [i for i in range(len(H.rings)) if _is_gamma_cycle(H, cyc, i)]


def _check_cut(log: list[str], H: EGraph, cyc, cut: EGraph) -> None:
    s, t = H.summary(), cut.summary()
    sign = cycle_sign(H, cyc)
    if t.h == 2:
        ok = t.g == s.g and t.r == s.r + 2
        what = "separating"
    elif sign == -1:
        ok = t.h == 1 and t.g == s.g - 1 and t.r == s.r + 1
        what = "one-sided"
    else:
        ok = t.h == 1 and t.g == s.g - 2 and t.r == s.r + 2
        what = "two-sided"
    log.append(f"cut {what} cycle of length {len(cyc)}: (g={s.g}, r={s.r}, h={s.h}) -> "
               f"(g={t.g}, r={t.r}, h={t.h})")
    if not ok:
        raise AssertionError("genus bookkeeping failed: " + log[-1])


def _components_of(G: EGraph, origin: list[int]):
    for comp in G.components:
        vs = set(comp)
        rings = [r.vertex_walk for r in G.rings if r.vertex_walk[0] in vs]
        sub, verts = restrict_to_vertices(G, vs, rings)
        yield sub, [origin[v] for v in verts]


class _Search:
    def __init__(self, k: int):
        self.k = k
        self.found: list[tuple[tuple[int, ...], tuple[int, ...], frozenset[int]]] = []
        self.log: list[str] = []

    def explore(self, H: EGraph, origin: list[int]) -> None:
        s = H.summary()
        g, r = s.g, s.r
        if g == 0 and r <= 1:
            return
        if g == 0 and r == 2:
            self.cylinder(H, origin)
            return
        cyc = self.non_gamma_cycle(H)
        if cyc is not None:
            cut = cut_cycle(H, cyc)
            _check_cut(self.log, H, cyc, cut)
            o2 = origin + [origin[c] for c in cyc]
            for sub, o3 in _components_of(cut, o2):
                self.explore(sub, o3)
            return
        self.gamma_phase(H, origin)

    def cylinder(self, H: EGraph, origin: list[int], keep_end: bool = False) -> None:
        R1, R2 = (tuple(r.vertex_walk) for r in H.rings)
        coll = _sweep(H, R1, R2, self.k)
        if keep_end:
            coll.append(R2)
        self.log.append(f"cylinder with {H.vertex_count} vertices: {len(coll)} separating cycles")
        if len(coll) >= 2:
            C1, Ct = coll[0], coll[-1]
            inside = _between(H, C1, Ct)
            self.found.append((tuple(origin[v] for v in C1), tuple(origin[v] for v in Ct),
                               frozenset(origin[v] for v in inside)))

    def non_gamma_cycle(self, H: EGraph):
        allowed = [v for v in range(H.vertex_count) if v not in H.ring_vertices]
        cost, cyc = shortest_nonnull_cycle(H, SIGMA_HAT, allowed=allowed, bound=self.k)
        if cyc is not None and cost <= self.k:
            return cyc
        cost, cyc = shortest_nonnull_cycle(H, SIGMA, allowed=allowed, bound=self.k)
        if cyc is not None and cost <= self.k and not _gamma_rings(H, cyc):
            return cyc
        return None

    def gamma_phase(self, H: EGraph, origin: list[int]) -> None:
        used: set[int] = set()
        cuts = []
        for i, ring in enumerate(H.rings):
            coll = self.gamma_collection(H, i, used)
            if not coll:
                continue
            used.update(v for c in coll for v in c)
            cuts.append((i, coll[-1]))
        self.log.append(f"gamma phase: {len(cuts)} maximal gamma-cycles")
        for i, Ct in cuts:
            ring = H.rings[i].vertex_walk
            cyl, ids = excise_cylinder(H, ring, Ct, return_map=True)
            self.cylinder(cyl, [origin[v] for v in ids], keep_end=True)

    def gamma_collection(self, H: EGraph, i: int, used: set[int]) -> list[tuple[int, ...]]:
        ring = tuple(H.rings[i].vertex_walk)
        ring_v = H.ring_vertices
        out = []
        cur = ring
        far = set(range(H.vertex_count)) - ring_v - used
        while True:
            dist = bfs_distances(H, cur, allowed=far | set(cur))
            depth = max((dist[v] for v in far if v in dist), default=0)
            found = None
            for t in range(1, depth + 1):
                allowed = {v for v in far if dist.get(v, t + 1) <= t}
                cost, cyc = shortest_nonnull_cycle(H, SIGMA, allowed=allowed, bound=self.k)
                if cyc is not None and cost <= self.k:
                    found = tuple(cyc)
                    break
            if found is None or not _is_gamma_cycle(H, found, i):
                return out
            if out:
                # nested: the new cycle lies beyond the previous one
                if not set(found) <= far:
                    return out
            out.append(found)
            near = _between(H, ring, found)
            far = far - near
            cur = found


def _align(base_walk, base_origin, sleeve_walk, sleeve_origin) -> tuple[int, bool]:
    n = len(base_walk)
    pos = {sleeve_origin[v]: i for i, v in enumerate(sleeve_walk)}
    t0 = pos[base_origin[base_walk[0]]]
    t1 = pos[base_origin[base_walk[1]]]
    if (t0 + 1) % n == t1:
        return t0, False
    if (t0 - 1) % n == t1:
        return t0, True
    raise SurgeryError("ring walks do not align")


def split_at(G: EGraph, pairs) -> tuple[EGraph, list[tuple[EGraph, tuple]]]:
    """Cut G along every boundary cycle of the given sleeve regions.

    ``pairs`` holds ``(C1, C2, vertices)`` with the vertex set of the region
    between C1 and C2.  Returns the base and per region the sleeve graph with
    its attachment entries.
    """
    H, origin = G, list(range(G.vertex_count))
    for C1, C2, _ in pairs:
        for C in (C1, C2):
            cut = cut_cycle(H, C)
            origin = origin + [origin[c] for c in C]
            H = cut
    comps = [set(c) for c in H.components]
    sleeve_comp = []
    for C1, C2, region in pairs:
        match = [i for i, c in enumerate(comps) if {origin[v] for v in c} == set(region)]
        if len(match) != 1:
            raise SurgeryError("sleeve region is not a component after cutting")
        sleeve_comp.append(match[0])
    base_vs = set().union(*[c for i, c in enumerate(comps) if i not in sleeve_comp]) if \
        len(comps) > len(sleeve_comp) else set()
    base_rings = [r.vertex_walk for r in H.rings if r.vertex_walk[0] in base_vs]
    base, base_ids = restrict_to_vertices(H, base_vs, base_rings)
    base_origin = [origin[v] for v in base_ids]
    out = []
    for (C1, C2, _), ci in zip(pairs, sleeve_comp):
        vs = comps[ci]
        rings = [r.vertex_walk for r in H.rings if r.vertex_walk[0] in vs]
        S, s_ids = restrict_to_vertices(H, vs, rings)
        s_origin = [origin[v] for v in s_ids]
        attach = []
        for sr, ring in enumerate(S.rings):
            orig = {s_origin[v] for v in ring.vertex_walk}
            br = next(i for i, r in enumerate(base.rings)
                      if {base_origin[v] for v in r.vertex_walk} == orig)
            off, rev = _align(base.rings[br].vertex_walk, base_origin, ring.vertex_walk, s_origin)
            attach.append((br, sr, off, rev))
        out.append((S, tuple(attach)))
    return base, out


def sleeve_decompose(G: EGraph, c, cheeger_max_len: int | None = None) -> SleeveDecomposition:
    """Decompose a connected-surface graph into a base and (2d, l)-sleeves.

    Short cycles that are not boundary-parallel are cut first; cylinders are
    swept for separating cycles and the part between the outermost two
    becomes a sleeve.  With ``cheeger_max_len`` the Cheeger check runs first
    and the declared bounds are asserted against the measured ones.
    """
    K = derive_constants(c)
    k, l = 2 * K.d, K.l
    s = G.summary()
    if s.h != 1:
        raise SleeveError("the surface must be connected")
    cheeger = check_cheeger(G, K.c, cheeger_max_len) if cheeger_max_len else None
    violations = []
    if s.g == 0 and s.r == 0:
        violations.append("hypothesis-violated: a sphere without rings is never in a hyperbolic family")
        return SleeveDecomposition(G, [], k, l, Fraction(G.vertex_count), 0, 0, False,
                                   [], violations, cheeger)
    case, m, s_decl = K.sleeve_case(s.g, s.r, s.R)
    search = _Search(k)
    search.explore(G, list(range(G.vertex_count)))
    base, parts = split_at(G, search.found) if search.found else (G, [])
    pieces = []
    for S, attach in parts:
        cert = find_sleeve(S, k, l)
        if cert is None:
            violations.append("hypothesis-violated: a swept cylinder is not a (2d, l)-sleeve")
        pieces.append(SleevePiece(S, cert, attach))
    clamped = False
    if m < 0:
        m, clamped = Fraction(max(base.vertex_count, 0)), True
    D = SleeveDecomposition(base, pieces, k, l, m, s_decl, case, clamped, search.log, violations, cheeger)
    if cheeger is None or cheeger.ok:
        if D.measured_m > D.m:
            violations.append(f"hypothesis-violated: base has {D.measured_m} vertices > m={D.m}")
        if D.measured_s > D.s:
            violations.append(f"hypothesis-violated: {D.measured_s} sleeves > s={D.s}")
    return D


def validate_decomposition(D: SleeveDecomposition, G: EGraph) -> Verdict:
    problems = []
    for i, piece in enumerate(D.sleeves, 1):
        if piece.certificate is None:
            problems.append(f"sleeve {i}: no certificate")
        else:
            cert = piece.certificate
            if cert.k > D.k or cert.l > D.l:
                problems.append(f"sleeve {i}: certificate parameters exceed ({D.k}, {D.l})")
            problems += [f"sleeve {i}: {p}" for p in certificate_problems(piece.graph, cert)]
        if len(piece.attach) != 2:
            problems.append(f"sleeve {i}: needs two attachments")
    if D.base.vertex_count > D.m:
        problems.append(f"base has {D.base.vertex_count} vertices > m={D.m}")
    if 6 * len(D.sleeves) > D.base.vertex_count:
        problems.append(f"sleeve-count bound: {len(D.sleeves)} sleeves > {D.base.vertex_count}/6")
    if not problems:
        try:
            H = D.reassemble()
        except (SurgeryError, ValidationError, KeyError, StopIteration) as exc:
            problems.append(f"reassembly failed: {exc}")
        else:
            if not are_isomorphic(H, G):
                problems.append("reassembly is not isomorphic to the input")
    if problems:
        return Verdict(VIOLATION, "sleeves", len(D.sleeves), None, None, "; ".join(problems),
                       {"problems": problems})
    return Verdict(PASS, "sleeves", len(D.sleeves), Fraction(D.base.vertex_count, 6), None,
                   f"base {D.base.vertex_count} vertices, {len(D.sleeves)} sleeves")
