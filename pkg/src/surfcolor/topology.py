"""Homotopy, edge-width, frames, and disk-bounding curves."""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .surface_core import EGraph, SurgeryError, _cut_along, _cycle_edges, cycle_sign

SIGMA = "sigma"
SIGMA_HAT = "sigma_hat"

INF = math.inf


class FrameError(RuntimeError):
    pass


def _ambient(ambient: str) -> str:
    a = ambient.lower().replace("̂", "_hat")
    if a in ("sigma", "σ", "s"):
        return SIGMA
    if a in ("sigma_hat", "σ_hat", "hat", "capped"):
        return SIGMA_HAT
    raise ValueError(f"unknown ambient surface {ambient!r}")


def _disk_sides(G: EGraph, cycle: Sequence[int], ambient: str) -> list[int]:
    """Indices (0 = left, 1 = right) of the sides of a two-sided cycle that are disks."""
    res = _cut_along(G, cycle)
    if res.one_sided:
        return []
    H = res.graph
    comp = H.component_of
    left, right = comp[res.side_vertices[0][0]], comp[res.side_vertices[1][0]]
    if left == right:
        return []
    genus = H.component_euler_genus()
    ring_comps = set()
    if ambient == SIGMA:
        for ring in G.rings:
            ring_comps.add(comp[res.face_rep[ring.face_id]])
    return [i for i, c in enumerate((left, right)) if genus[c] == 0 and c not in ring_comps]


def is_null_homotopic(G: EGraph, C: Sequence[int], ambient: str = SIGMA) -> bool:
    """True iff the cycle bounds a disk in the chosen surface.

    ``SIGMA`` is the surface with the ring faces removed, ``SIGMA_HAT`` the
    capped surface.  One-sided cycles are never null-homotopic.
    """
    ambient = _ambient(ambient)
    if cycle_sign(G, C) == -1:
        return False
    return bool(_disk_sides(G, C, ambient))


def distance(G: EGraph, S1: Iterable[int], S2: Iterable[int]) -> float:
    S1, S2 = set(S1), set(S2)
    if not S1 or not S2:
        raise ValueError("sets must be nonempty")
    dist = bfs_distances(G, S1)
    best = min((dist.get(v, INF) for v in S2), default=INF)
    return best


def bfs_distances(G: EGraph, sources: Iterable[int], allowed: set[int] | None = None,
                  limit: float = INF) -> dict[int, int]:
    dist = {}
    dq = deque()
    for s in sources:
        if allowed is None or s in allowed:
            dist[s] = 0
            dq.append(s)
    adj = G.adjacency
    while dq:
        u = dq.popleft()
        if dist[u] >= limit:
            continue
        for w in adj[u]:
            if w not in dist and (allowed is None or w in allowed):
                dist[w] = dist[u] + 1
                dq.append(w)
    return dist


# short non-null-homotopic cycles


def _tree_cycles(G: EGraph, root: int, allowed: set[int] | None, weight, bound: float):
    """Fundamental cycles of a shortest-path tree rooted at ``root``, cheapest first."""
    dist = {root: 0}
    parent = {root: None}
    branch = {root: None}
    heap = [(0, root)]
    adj = G.adjacency
    done = set()
    while heap:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        if 2 * d > bound:
            break
        for w in sorted(adj[u]):
            if allowed is not None and w not in allowed:
                continue
            nd = d + weight(G.edge_between(u, w))
            if w not in dist or nd < dist[w]:
                dist[w] = nd
                parent[w] = u
                branch[w] = w if u == root else branch[u]
                heapq.heappush(heap, (nd, w))
    cands = []
    for e, (x, y) in enumerate(G.edges):
        if x not in done or y not in done:
            continue
        if parent.get(x) == y or parent.get(y) == x:
            continue
        if x == root or y == root:
            other = y if x == root else x
            if branch[other] is None:
                continue
        elif branch[x] == branch[y]:
            continue
        cost = dist[x] + dist[y] + weight(e)
        if cost <= bound:
            cands.append((cost, e, x, y))
    cands.sort()
    for cost, e, x, y in cands:
        px = []
        v = x
        while v is not None:
            px.append(v)
            v = parent[v]
        py = []
        v = y
        while v is not None:
            py.append(v)
            v = parent[v]
        cyc = list(reversed(px)) + py[:-1]
        yield cost, cyc


def shortest_nonnull_cycle(G: EGraph, ambient: str = SIGMA, allowed: Iterable[int] | None = None,
                           weight=None, bound: float = INF):
    """Cheapest non-null-homotopic cycle, or (INF, None).

    ``allowed`` restricts the vertices the cycle may use; ``weight`` maps an
    edge id to a positive integer cost (default 1).  The search scans the
    fundamental cycles of a shortest-path tree from every vertex; the family
    of non-null-homotopic cycles has the three-path property, so the
    cheapest one is among them.
    """
    ambient = _ambient(ambient)
    allowed = set(allowed) if allowed is not None else None
    weight = weight or (lambda e: 1)
    best, best_cycle = INF, None
    roots = sorted(allowed) if allowed is not None else range(G.vertex_count)
    for v in roots:
        for cost, cyc in _tree_cycles(G, v, allowed, weight, min(bound, best - 1)):
            if cost >= best:
                break
            if not is_null_homotopic(G, cyc, ambient):
                best, best_cycle = cost, cyc
                break
    return best, best_cycle


def all_cycles(G: EGraph, length_bound: int | None = None, allowed: Iterable[int] | None = None):
    """Every simple cycle of G (as vertex lists), via networkx enumeration."""
    import networkx as nx

    H = nx.Graph()
    verts = set(allowed) if allowed is not None else set(range(G.vertex_count))
    H.add_nodes_from(verts)
    H.add_edges_from((u, v) for u, v in G.edges if u in verts and v in verts)
    for cyc in nx.simple_cycles(H, length_bound=length_bound):
        if len(cyc) >= 3:
            yield cyc


def _all_planar(G: EGraph) -> bool:
    return all(g == 0 for g in G.component_euler_genus())


def edge_width(G: EGraph) -> float:
    """Edge-width of G; ``math.inf`` when no condition constrains it."""
    best = INF
    rings = G.rings
    # distinct rings at distance k
    if len(rings) >= 2:
        for i in range(len(rings)):
            dist = bfs_distances(G, rings[i].vertex_walk)
            for j in range(i + 1, len(rings)):
                for v in rings[j].vertex_walk:
                    best = min(best, dist.get(v, INF))
    # ring-free non-null-homotopic cycles in the surface with holes
    free = set(range(G.vertex_count)) - G.ring_vertices
    if free:
        cost, _ = shortest_nonnull_cycle(G, SIGMA, allowed=free, bound=best)
        best = min(best, cost)
    # non-ring edges of cycles non-null-homotopic in the capped surface
    if not _all_planar(G):
        big = len(G.edges) + 1
        ring_edges = G.ring_edges

        def w(e):
            return 1 if e in ring_edges else big

        bound = (best * big + big - 1) if best < INF else INF
        cost, _ = shortest_nonnull_cycle(G, SIGMA_HAT, weight=w, bound=bound)
        if cost < INF:
            best = min(best, cost // big)
    return best


def edge_width_exhaustive(G: EGraph) -> float:
    """Edge-width by brute-force enumeration of every cycle (test oracle)."""
    best = INF
    rings = G.rings
    for i in range(len(rings)):
        for j in range(i + 1, len(rings)):
            best = min(best, distance(G, rings[i].vertex_walk, rings[j].vertex_walk))
    ring_edges = G.ring_edges
    rv = G.ring_vertices
    planar = _all_planar(G)
    # in the capped sphere every cycle is null-homotopic, so only ring-free
    # cycles no longer than the current best can matter
    bound = int(best) if planar and best < INF else None
    for cyc in all_cycles(G, bound):
        es = _cycle_edges(G, cyc)
        if not set(cyc) & rv and not is_null_homotopic(G, cyc, SIGMA):
            best = min(best, len(cyc))
        if not planar and not is_null_homotopic(G, cyc, SIGMA_HAT):
            best = min(best, sum(1 for e in es if e not in ring_edges))
    return best


# frames


@dataclass(frozen=True)
class Segment:
    vertices: tuple[int, ...]  # walk order; a cycle repeats no vertex
    edges: tuple[int, ...]
    is_cycle: bool
    kind: str  # "ring" or "non-ring"

    @property
    def internal(self) -> tuple[int, ...]:
        if self.is_cycle:
            return self.vertices[1:] if self._has_anchor else self.vertices
        return self.vertices[1:-1]

    _has_anchor: bool = True


@dataclass(frozen=True)
class Frame:
    edges: frozenset[int]
    vertices: frozenset[int]

    def serialize(self) -> str:
        return "FRAME E " + " ".join(map(str, sorted(self.edges)))


def frame_subgraph(G: EGraph, F: Frame) -> tuple[EGraph, list[int]]:
    """The embedded subgraph F of G (rotation of G restricted to F), relabelled."""
    verts = sorted(F.vertices)
    vmap = {v: i for i, v in enumerate(verts)}
    elist = sorted(F.edges)
    emap = {e: i for i, e in enumerate(elist)}
    edges = [(vmap[G.edges[e][0]], vmap[G.edges[e][1]]) for e in elist]
    signs = [G.signs[e] for e in elist]
    rotation = [[2 * emap[h >> 1] + (h & 1) for h in G.rotation[v] if (h >> 1) in F.edges] for v in verts]
    rings = [[vmap[v] for v in r.vertex_walk] for r in G.rings]
    return EGraph(len(verts), edges, rotation, signs, rings, G.genus_surplus), verts


def _frame_problems(G: EGraph, F: Frame) -> list[str]:
    out = []
    for r in G.rings:
        if not set(r.vertex_walk) <= F.vertices:
            out.append("frame misses a ring vertex")
        if not set(G.faces[r.face_id].edge_ids()) <= F.edges:
            out.append("frame misses a ring edge")
    for e in F.edges:
        u, v = G.edges[e]
        if u not in F.vertices or v not in F.vertices:
            out.append("edge end outside frame")
    if out:
        return out
    try:
        H, verts = frame_subgraph(G, F)
    except Exception as exc:  # invalid ring faces etc.
        return [f"frame subgraph invalid: {exc}"]
    gcomp = G.component_of
    ggenus = G.component_euler_genus()
    hcomp = H.component_of
    # each component of G must contain exactly one component of F
    per_g: dict[int, set[int]] = {}
    for i, v in enumerate(verts):
        per_g.setdefault(gcomp[v], set()).add(hcomp[i])
    for c in range(len(G.components)):
        if c not in per_g:
            out.append(f"surface component {c} has no frame vertex")
        elif len(per_g[c]) != 1:
            out.append(f"frame is disconnected in surface component {c}")
    if out:
        return out
    hgenus = H.component_euler_genus()
    ring_faces = {r.face_id for r in H.rings}
    faces_per = {}
    for fid, f in enumerate(H.faces):
        if fid in ring_faces:
            continue
        c = hcomp[f.vertices[0]]
        faces_per[c] = faces_per.get(c, 0) + 1
    ring_only = set()
    for r in H.rings:
        if r.order <= 2 and len(H.components[hcomp[r.vertex_walk[0]]]) == r.order:
            ring_only.add(hcomp[r.vertex_walk[0]])
    for c in range(len(H.components)):
        n_faces = faces_per.get(c, 0)
        if n_faces != 1 and not (n_faces == 0 and c in ring_only):
            out.append(f"frame component {c} has {n_faces} faces")
        g_orig = ggenus[gcomp[verts[H.components[c][0]]]]
        if hgenus[c] != g_orig:
            out.append(f"frame face of component {c} is not simply connected")
    rv = G.ring_vertices
    sphere_free = {c for c in range(len(G.components))
                   if ggenus[c] == 0 and not any(gcomp[r.vertex_walk[0]] == c for r in G.rings)}
    for i, v in enumerate(verts):
        if H.degree(i) <= 1 and v not in rv:
            if H.degree(i) == 0 and gcomp[v] in sphere_free:
                continue
            out.append(f"vertex {v} has degree {H.degree(i)} and is not on a ring")
    return out


def check_frame(G: EGraph, F: Frame) -> None:
    probs = _frame_problems(G, F)
    if probs:
        raise FrameError("; ".join(probs))


def is_frame(G: EGraph, F: Frame) -> bool:
    return not _frame_problems(G, F)


def build_frame(G: EGraph) -> Frame:
    """Delete degree-one non-ring vertices and face-separating edges until one face is left."""
    if G.genus_surplus:
        raise FrameError("embedding is not 2-cell")
    edges = set(range(len(G.edges)))
    verts = set(range(G.vertex_count))
    ring_edges = G.ring_edges
    rv = G.ring_vertices
    while True:
        F = Frame(frozenset(edges), frozenset(verts))
        H, vl = frame_subgraph(G, F)
        leaf = None
        for i, v in enumerate(vl):
            if H.degree(i) == 1 and v not in rv:
                leaf = v
                break
        if leaf is not None:
            e = next(e for e in edges if leaf in G.edges[e])
            edges.discard(e)
            verts.discard(leaf)
            continue
        ring_faces = {r.face_id for r in H.rings}
        elist = sorted(edges)
        fos = H.face_of_state
        chosen = None
        for k, e in enumerate(elist):
            if e in ring_edges:
                continue
            f1 = fos[(2 * k, 1)]
            f2 = fos[(2 * k, -1)]
            if f1 != f2 and f1 not in ring_faces and f2 not in ring_faces:
                chosen = e
                break
        if chosen is None:
            return F
        edges.discard(chosen)


def _smooth(G: EGraph, deg: dict[int, int], v: int) -> bool:
    return deg.get(v, 0) == 2 and v not in G.ring_vertices


def _frame_adjacency(G: EGraph, F: Frame) -> dict[int, list[tuple[int, int]]]:
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in F.vertices}
    for e in sorted(F.edges):
        u, v = G.edges[e]
        adj[u].append((v, e))
        adj[v].append((u, e))
    return adj


def segments(G: EGraph, F: Frame) -> list[Segment]:
    adj = _frame_adjacency(G, F)
    deg = {v: len(a) for v, a in adj.items()}
    ring_edges = G.ring_edges
    used: set[int] = set()
    out: list[Segment] = []

    def kind(es):
        return "ring" if es and all(e in ring_edges for e in es) else "non-ring"

    for v in sorted(F.vertices):
        if _smooth(G, deg, v):
            continue
        if deg[v] == 0:
            out.append(Segment((v,), (), False, "ring" if v in G.ring_vertices else "non-ring"))
            continue
        for w, e in adj[v]:
            if e in used:
                continue
            walk, es = [v], [e]
            used.add(e)
            prev, cur = v, w
            while cur != v and _smooth(G, deg, cur):
                walk.append(cur)
                nxt = [(x, f) for x, f in adj[cur] if f != es[-1]][0]
                used.add(nxt[1])
                es.append(nxt[1])
                prev, cur = cur, nxt[0]
            if cur == v:
                out.append(Segment(tuple(walk), tuple(es), True, kind(es)))
            else:
                walk.append(cur)
                out.append(Segment(tuple(walk), tuple(es), False, kind(es)))
    # cycles made only of smooth vertices
    for v in sorted(F.vertices):
        if not _smooth(G, deg, v):
            continue
        first = adj[v][0][1]
        if first in used:
            continue
        walk, es = [v], [first]
        used.add(first)
        cur = adj[v][0][0]
        while cur != v:
            walk.append(cur)
            nxt = [(x, f) for x, f in adj[cur] if f != es[-1]][0]
            used.add(nxt[1])
            es.append(nxt[1])
            cur = nxt[0]
        out.append(Segment(tuple(walk), tuple(es), True, kind(es), _has_anchor=False))
    return out


@dataclass
class SegmentReport:
    segments: list[Segment]
    nonring_count: int
    bound: int | None  # 3g + 2r - 2h when no component is a sphere

    @property
    def within_bound(self) -> bool:
        return self.bound is None or self.nonring_count <= self.bound


def segment_report(G: EGraph, F: Frame) -> SegmentReport:
    segs = segments(G, F)
    s = sum(1 for x in segs if x.kind == "non-ring")
    ggenus = G.component_euler_genus()
    gcomp = G.component_of
    has_ring = {gcomp[r.vertex_walk[0]] for r in G.rings}
    sphere = any(ggenus[c] == 0 and c not in has_ring for c in range(len(G.components)))
    summ = G.summary()
    bound = None if sphere else 3 * summ.g + 2 * summ.r - 2 * summ.h
    return SegmentReport(segs, s, bound)


# optimality


@dataclass(frozen=True)
class FrameViolation:
    condition: str  # "O1" or "O2"
    segment: int
    path: tuple[int, ...]  # the attached path P
    subpath: tuple[int, ...]  # the segment subpath Q being beaten

    def __str__(self) -> str:
        return (f"{self.condition} violation on segment {self.segment}: "
                f"P={','.join(map(str, self.path))} Q={','.join(map(str, self.subpath))}")


def _attached_paths(G: EGraph, F: Frame, x: int) -> dict[int, list[int]]:
    """Shortest paths from x to every frame vertex y, internally disjoint from F."""
    out: dict[int, list[int]] = {}
    adj = G.adjacency
    parent = {x: None}
    dq = deque([x])
    while dq:
        u = dq.popleft()
        for w in sorted(adj[u]):
            e = G.edge_between(u, w)
            if e in F.edges:
                continue
            if w in F.vertices:
                if w != x and w not in out:
                    path = [w, u]
                    p = parent[u]
                    while p is not None:
                        path.append(p)
                        p = parent[p]
                    out[w] = list(reversed(path))
                continue
            if w not in parent:
                parent[w] = u
                dq.append(w)
    return out


def _subpaths(seg: Segment, x: int, y: int, smooth) -> list[list[int]]:
    """Subpaths of a segment between x and y whose internal vertices are smooth."""
    vs = list(seg.vertices)
    if not seg.is_cycle:
        i, j = vs.index(x), vs.index(y)
        q = vs[min(i, j):max(i, j) + 1]
        return [q if i <= j else list(reversed(q))]
    n = len(vs)
    i, j = vs.index(x), vs.index(y)
    fwd = [vs[(i + k) % n] for k in range((j - i) % n + 1)]
    bwd = [vs[(i - k) % n] for k in range((i - j) % n + 1)]
    return [q for q in (fwd, bwd) if all(smooth(v) for v in q[1:-1])]


def _end_subpaths(seg: Segment, x: int, smooth) -> list[list[int]]:
    """The two subpaths of a segment from an internal vertex x to a non-smooth end."""
    vs = list(seg.vertices)
    if not seg.is_cycle:
        i = vs.index(x)
        return [list(reversed(vs[: i + 1])), vs[i:]]
    n = len(vs)
    i = vs.index(x)
    anchors = [k for k in range(n) if not smooth(vs[k])]
    if not anchors:
        return []
    a = anchors[0]
    return [[vs[(i + k) % n] for k in range((a - i) % n + 1)],
            [vs[(i - k) % n] for k in range((i - a) % n + 1)]]


def frame_violations(G: EGraph, F: Frame, first_only: bool = False) -> list[FrameViolation]:
    segs = segments(G, F)
    adj = _frame_adjacency(G, F)
    deg = {v: len(a) for v, a in adj.items()}

    def smooth(v):
        return _smooth(G, deg, v)

    cache: dict[int, dict[int, list[int]]] = {}

    def paths_from(x):
        if x not in cache:
            cache[x] = _attached_paths(G, F, x)
        return cache[x]

    out = []
    for si, seg in enumerate(segs):
        if not seg.edges:
            continue
        vs = list(dict.fromkeys(seg.vertices))
        for a in range(len(vs)):
            for b in range(a + 1, len(vs)):
                x, y = vs[a], vs[b]
                P = paths_from(x).get(y)
                if P is None:
                    continue
                for Q in _subpaths(seg, x, y, smooth):
                    if len(P) < len(Q):
                        out.append(FrameViolation("O1", si, tuple(P), tuple(Q)))
                        if first_only:
                            return out
        segset = set(seg.vertices)
        for x in vs:
            if not smooth(x):
                continue
            ends = _end_subpaths(seg, x, smooth)
            if len(ends) < 2:
                continue
            lim = min(len(ends[0]), len(ends[1]))
            for y, P in sorted(paths_from(x).items()):
                if y in segset:
                    continue
                if len(P) < lim:
                    Q = min(ends, key=len)
                    out.append(FrameViolation("O2", si, tuple(P), tuple(Q)))
                    if first_only:
                        return out
    return out


def check_frame_optimal(G: EGraph, F: Frame):
    """None when (O1) and (O2) hold, else the first violation found."""
    v = frame_violations(G, F, first_only=True)
    return v[0] if v else None


def _exchange(G: EGraph, F: Frame, remove: Sequence[int], add: Sequence[int]) -> Frame:
    edges = set(F.edges)
    verts = set(F.vertices)
    for a, b in zip(remove, remove[1:]):
        edges.discard(G.edge_between(a, b))
    for v in remove[1:-1]:
        verts.discard(v)
    for a, b in zip(add, add[1:]):
        edges.add(G.edge_between(a, b))
    verts.update(add)
    return Frame(frozenset(edges), frozenset(verts))


def optimize_frame(G: EGraph, F: Frame, step_cap: int | None = None) -> Frame:
    """Apply shortening exchanges until (O1) and (O2) hold."""
    check_frame(G, F)
    cap = step_cap if step_cap is not None else max(1, len(G.edges) ** 2)
    steps = 0
    while True:
        viols = frame_violations(G, F)
        if not viols:
            return F
        moved = False
        segs = segments(G, F)
        adj = _frame_adjacency(G, F)
        deg = {v: len(a) for v, a in adj.items()}
        for viol in viols:
            P = list(viol.path)
            if viol.condition == "O1":
                options = [list(viol.subpath)]
            else:
                seg = segs[viol.segment]
                options = sorted(_end_subpaths(seg, P[0], lambda v: _smooth(G, deg, v)), key=len)
            for Q in options:
                if viol.condition == "O2" and len(P) >= len(Q):
                    continue
                cand = _exchange(G, F, Q, P)
                if len(cand.edges) < len(F.edges) and is_frame(G, cand):
                    F = cand
                    moved = True
                    break
            if moved:
                break
        if not moved:
            raise FrameError(f"no valid exchange for {viols[0]}")
        steps += 1
        if steps > cap:
            raise FrameError("step cap reached while optimizing frame")


# curves


@dataclass(frozen=True)
class Curve:
    """Closed curve v0, f0, v1, f1, ... meeting the graph only at vertices.

    ``corners`` records, for each i, the corner of face f_i at v_i where the
    curve leaves v_i and the corner of f_i at v_{i+1} where it arrives, as
    positions along the face walk.
    """

    vertices: tuple[int, ...]
    faces: tuple[int, ...]
    corners: tuple[tuple[int, int], ...] = field(compare=False, default=())

    @property
    def X(self) -> tuple[int, ...]:
        return self.vertices

    def serialize(self) -> str:
        parts = []
        for v, f in zip(self.vertices, self.faces):
            parts += [str(v), f"f{f}"]
        return "CURVE " + " ".join(parts)


def _corner_gap(G: EGraph, face, k: int) -> tuple[int, int]:
    """(vertex, rotation index after which a dart inserted into this corner goes)."""
    h, o = face.darts[k]
    w = G.origin(h)
    if o == 1:
        x = face.darts[k - 1][0] ^ 1
        return w, G.pos[x]
    return w, G.pos[h]


def curve_augmented(G: EGraph, curve: Curve) -> tuple[EGraph, list[int]]:
    """G plus a subdivided chord for every face passage of the curve; returns the
    augmented graph and the curve as a cycle in it."""
    V, m = G.vertex_count, len(G.edges)
    k = len(curve.vertices)
    edges = list(G.edges)
    signs = list(G.signs)
    inserts: dict[int, list[tuple[int, int]]] = {}
    rotation = [list(r) for r in G.rotation] + [[] for _ in range(k)]
    cyc = []
    for i in range(k):
        v, w = curve.vertices[i], curve.vertices[(i + 1) % k]
        face = G.faces[curve.faces[i]]
        p, q = curve.corners[i]
        mid = V + i
        e1, e2 = len(edges), len(edges) + 1
        edges.append((v, mid))
        edges.append((mid, w))
        op, oq = face.darts[p][1], face.darts[q][1]
        signs.append(1)
        signs.append(op * oq)
        _, gp = _corner_gap(G, face, p)
        _, gq = _corner_gap(G, face, q)
        inserts.setdefault(v, []).append((gp, 2 * e1))
        inserts.setdefault(w, []).append((gq, 2 * e2 + 1))
        rotation[mid] = [2 * e1 + 1, 2 * e2]
        cyc += [v, mid]
    for v, ins in inserts.items():
        base = G.rotation[v]
        if not base:
            rotation[v] = [h for _, h in ins]
            continue
        new = []
        for idx, h in enumerate(base):
            new.append(h)
            new.extend(hh for gap, hh in ins if gap == idx)
        rotation[v] = new
    A = EGraph(V + k, edges, rotation, signs, (), G.genus_surplus)
    return A, cyc


def curve_disk_sides(G: EGraph, curve: Curve) -> list[frozenset[int]]:
    """Interior vertex sets of the sides of the curve that are open disks in the surface."""
    A, cyc = curve_augmented(G, curve)
    if len(A.faces) != len(G.faces) + len(curve.vertices):
        raise ValueError("curve is not simple: its face passages cross")
    if cycle_sign(A, cyc) == -1:
        return []
    res = _cut_along(A, cyc)
    H = res.graph
    comp = H.component_of
    sides = [comp[s[0]] for s in res.side_vertices]
    if sides[0] == sides[1]:
        return []
    genus = H.component_euler_genus()
    ring_comps = set()
    for ring in G.rings:
        fid = A.match_face(ring.vertex_walk)
        ring_comps.add(comp[res.face_rep[fid]])
    on_curve = set(curve.vertices)
    out = []
    for c in sides:
        if genus[c] != 0 or c in ring_comps:
            continue
        inside = frozenset(v for v in range(G.vertex_count) if comp[v] == c and v not in on_curve)
        out.append(inside)
    return out


def _interleaved(a: int, b: int, c: int, d: int, n: int) -> bool:
    def between(x, lo, hi):
        return 0 < (x - lo) % n < (hi - lo) % n

    return between(c, a, b) != between(d, a, b)


def enumerate_curves(G: EGraph, max_len: int) -> Iterator[Curve]:
    """Simple vertex-face curves with at most max_len vertices, each listed once."""
    ring_faces = {r.face_id for r in G.rings}
    corners_at: dict[int, list[tuple[int, int]]] = {v: [] for v in range(G.vertex_count)}
    for fid, f in enumerate(G.faces):
        if fid in ring_faces or not f.darts:
            continue
        for k, v in enumerate(f.vertices):
            corners_at[v].append((fid, k))
    faces = G.faces
    for v0 in range(G.vertex_count):
        for f0, k0 in corners_at[v0]:
            stack = [(v0, f0, k0, [v0], [], [])]
            # each state: at current vertex, leaving through corner (f, k_out)
            while stack:
                v, f, kout, verts, fs, cs = stack.pop()
                face = faces[f]
                for k2, w in enumerate(face.vertices):
                    if k2 == kout:
                        continue
                    used_here = [(p, q) for (ff, (p, q)) in zip(fs, cs) if ff == f]
                    if any(_interleaved(p, q, kout, k2, face.length) or len({p, q, kout, k2}) < 4
                           for p, q in used_here):
                        continue
                    if w == v0:
                        # close up; the arrival corner must differ from the start corner
                        if (f, k2) == (f0, k0):
                            continue
                        nverts, nfs, ncs = verts, fs + [f], cs + [(kout, k2)]
                        if len(nverts) >= 3 and nverts[1] > nverts[-1]:
                            continue
                        if len(nverts) == 2 and (nfs[0], ncs[0]) > (nfs[1], tuple(reversed(ncs[1]))):
                            continue
                        if len(nverts) == 1 and ncs[0][0] > ncs[0][1]:
                            continue
                        yield Curve(tuple(nverts), tuple(nfs), tuple(ncs))
                        continue
                    if w < v0 or w in verts or len(verts) >= max_len:
                        continue
                    for f2, k3 in corners_at[w]:
                        if (f2, k3) == (f, k2):
                            continue
                        stack.append((w, f2, k3, verts + [w], fs + [f], cs + [(kout, k2)]))


def enumerate_disk_curves(G: EGraph, max_len: int) -> Iterator[tuple[Curve, frozenset[int]]]:
    """Curves with |X| <= max_len bounding an open disk free of rings, with the
    set of vertices strictly inside."""
    if max_len < 1:
        return
    for curve in enumerate_curves(G, max_len):
        for inside in curve_disk_sides(G, curve):
            yield curve, inside


@dataclass
class FlatSeparation:
    A: frozenset[int]
    B: frozenset[int]
    witness: Curve | None


def is_flat_separation(G: EGraph, A: Iterable[int], B: Iterable[int], max_len: int | None = None):
    """A FlatSeparation with a disk witness, or None."""
    A, B = frozenset(A), frozenset(B)
    if A | B != frozenset(range(G.vertex_count)):
        raise ValueError("A and B must cover V(G)")
    only_a, only_b = A - B, B - A
    for u, v in G.edges:
        if (u in only_a and v in only_b) or (v in only_a and u in only_b):
            return None
    if not G.ring_vertices <= B:
        return None
    if not only_a:
        # a thin closed disk around a tree through A works; no curve needed
        return FlatSeparation(A, B, None)
    limit = max_len if max_len is not None else max(1, len(A & B))
    for curve, inside in enumerate_disk_curves(G, limit):
        closed = inside | set(curve.vertices)
        if A <= closed and only_a <= inside:
            return FlatSeparation(A, B, curve)
    return None
