"""List colouring: solving, exact counting, criticality and kernels.

Colours are small nonnegative integers.  Internally every list is a bitmask
over the palette (the sorted union of all lists), so the lowest set bit is
the lowest colour.  A colouring is a dict ``vertex -> colour``.

Graphs are taken either as an :class:`EGraph` (whose ``lists`` field is used
when no assignment is passed) or as a :class:`Subgraph` of one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

import networkx as nx

from .surface_core import EGraph
from .verdicts import EXCEPTION, PASS, VACUOUS, VIOLATION, Verdict

DEFAULT_BUDGET = 10 ** 7

C3, C4, C5, OTHER = "C3", "C4", "C5", "other"


class ColoringError(ValueError):
    """Bad list assignment or precolouring."""


class ResourceError(RuntimeError):
    """An enumeration would exceed its configured budget."""


# lists


def lists_from(G: EGraph, L: Mapping[int, Iterable[int]] | Sequence[Iterable[int]] | None = None
               ) -> list[frozenset[int]]:
    """Normalise a list assignment to one frozenset per vertex."""
    if L is None:
        L = G.lists
        if L is None:
            raise ColoringError("graph carries no lists and none were given")
    if isinstance(L, Mapping):
        out = []
        for v in range(G.vertex_count):
            if v not in L:
                raise ColoringError(f"vertex {v} has no list")
            out.append(frozenset(int(c) for c in L[v]))
    else:
        out = [frozenset(int(c) for c in x) for x in L]
        if len(out) != G.vertex_count:
            raise ColoringError("list count does not match vertex count")
    for v, c in enumerate(out):
        if not c:
            raise ColoringError(f"vertex {v} has an empty list")
        if min(c) < 0:
            raise ColoringError(f"vertex {v} has a negative colour")
    return out


def _short_cycle_vertex_sets(G: EGraph, max_len: int) -> list[tuple[int, ...]]:
    """Vertex sequences of all cycles of length <= max_len (each once)."""
    if max_len < 3:
        return []
    adj = G.adjacency
    found = []
    for s in range(G.vertex_count):
        # cycles whose minimum vertex is s, second vertex smaller than last
        stack = [(s, [s])]
        while stack:
            v, path = stack.pop()
            for w in adj[v]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    found.append(tuple(path))
                elif w > s and w not in path and len(path) < max_len:
                    stack.append((w, path + [w]))
    return found


def classify_assignment(G: EGraph, L=None) -> str:
    """Largest k in (5, 4, 3) with the canvas in the family C_k, else "other".

    Membership: non-ring vertices have lists of size >= k and every cycle of
    length <= 7 - k is a ring.
    """
    lists = lists_from(G, L)
    ring_v = G.ring_vertices
    ring_cycles = {frozenset(r.vertex_walk) for r in G.rings if len(r.vertex_walk) >= 3}
    nonring_min = min((len(lists[v]) for v in range(G.vertex_count) if v not in ring_v), default=5)
    for k, tag in ((5, C5), (4, C4), (3, C3)):
        if nonring_min < k:
            continue
        short = _short_cycle_vertex_sets(G, 7 - k)
        if all(frozenset(c) in ring_cycles and _is_ring_cycle(G, c) for c in short):
            return tag
    return OTHER


def _is_ring_cycle(G: EGraph, cyc: Sequence[int]) -> bool:
    for r in G.rings:
        if set(r.vertex_walk) == set(cyc) and len(r.vertex_walk) == len(cyc):
            ring_e = {G.edge_between(r.vertex_walk[i], r.vertex_walk[(i + 1) % len(cyc)])
                      for i in range(len(cyc))}
            cyc_e = {G.edge_between(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))}
            if ring_e == cyc_e:
                return True
    return False


def girth(G: EGraph) -> int | None:
    """Length of a shortest cycle, or None for a forest."""
    best = None
    adj = G.adjacency
    for s in range(G.vertex_count):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for v in queue:
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    L = dist[v] + dist[w] + 1
                    if best is None or L < best:
                        best = L
    return best


def is_type345(G: EGraph, L=None) -> bool:
    """5-lists; or 4-lists and triangle-free; or 3-lists and no cycle of length <= 4."""
    lists = lists_from(G, L)
    k = min((len(c) for c in lists), default=5)
    if k >= 5:
        return True
    gi = girth(G)
    if k == 4:
        return gi is None or gi >= 4
    if k == 3:
        return gi is None or gi >= 5
    return False


# subgraphs


@dataclass(frozen=True)
class Subgraph:
    """Vertex ids and edge ids of a host EGraph."""

    vertices: frozenset
    edges: frozenset

    @classmethod
    def whole(cls, G: EGraph) -> "Subgraph":
        return cls(frozenset(range(G.vertex_count)), frozenset(range(len(G.edges))))

    @classmethod
    def rings_of(cls, G: EGraph) -> "Subgraph":
        return cls(G.ring_vertices, G.ring_edges)

    @classmethod
    def induced(cls, G: EGraph, vertices: Iterable[int]) -> "Subgraph":
        vs = frozenset(vertices)
        es = frozenset(e for e, (u, v) in enumerate(G.edges) if u in vs and v in vs)
        return cls(vs, es)

    @classmethod
    def from_edges(cls, G: EGraph, edges: Iterable[int], vertices: Iterable[int] = ()) -> "Subgraph":
        es = frozenset(edges)
        vs = set(vertices)
        for e in es:
            vs.update(G.edges[e])
        return cls(frozenset(vs), es)

    def issubset(self, other: "Subgraph") -> bool:
        return self.vertices <= other.vertices and self.edges <= other.edges

    def without_edge(self, e: int) -> "Subgraph":
        return Subgraph(self.vertices, self.edges - {e})

    def without_vertex(self, v: int) -> "Subgraph":
        return Subgraph(self.vertices - {v}, self.edges)

    def is_valid_in(self, G: EGraph) -> bool:
        return all(G.edges[e][0] in self.vertices and G.edges[e][1] in self.vertices
                   for e in self.edges)


def _as_subgraph(G: EGraph, H) -> Subgraph:
    if H is None:
        return Subgraph.rings_of(G)
    if isinstance(H, Subgraph):
        return H
    if isinstance(H, EGraph):
        raise ColoringError("pass a Subgraph of the host graph, not a separate EGraph")
    # an iterable of vertex pairs
    es = set()
    vs = set()
    for u, v in H:
        e = G.edge_between(u, v)
        if e is None:
            raise ColoringError(f"{u}-{v} is not an edge of the host graph")
        es.add(e)
        vs.update((u, v))
    return Subgraph(frozenset(vs), frozenset(es))


# the search engine


class _Engine:
    """Bitmask search over one host graph.  Subgraphs are passed as adjacency."""

    def __init__(self, G: EGraph, lists: list[frozenset[int]]):
        self.G = G
        self.lists = lists
        palette = sorted(set().union(*lists)) if lists else []
        self.palette = palette
        self.index = {c: i for i, c in enumerate(palette)}
        self.masks = [sum(1 << self.index[c] for c in cs) for cs in lists]

    def bit(self, color: int) -> int:
        i = self.index.get(color)
        return 0 if i is None else 1 << i

    def color_of(self, bit: int) -> int:
        return self.palette[bit.bit_length() - 1]

    def adjacency(self, sub: Subgraph) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.G.vertex_count)]
        for e in sub.edges:
            u, v = self.G.edges[e]
            adj[u].append(v)
            adj[v].append(u)
        for a in adj:
            a.sort()
        return adj

    def residual(self, adj, vertices, pre_bits: Mapping[int, int]) -> dict[int, int] | None:
        """Masks of the uncoloured vertices after removing precoloured neighbours' colours."""
        masks = {}
        for v in vertices:
            if v in pre_bits:
                # an edge of the host joining two precoloured vertices
                b = pre_bits[v]
                if any(pre_bits.get(w) == b for w in adj[v]):
                    return None
                continue
            m = self.masks[v]
            for w in adj[v]:
                b = pre_bits.get(w)
                if b is not None:
                    m &= ~b
            if not m:
                return None
            masks[v] = m
        return masks

    def check_pre(self, sub: Subgraph, adj, pre: Mapping[int, int]) -> dict[int, int]:
        bits = {}
        for v, c in pre.items():
            if v not in sub.vertices:
                raise ColoringError(f"precoloured vertex {v} is not in the graph")
            if c not in self.lists[v]:
                raise ColoringError(f"colour {c} is not in the list of vertex {v}")
            bits[v] = self.bit(c)
        for v in bits:
            for w in adj[v]:
                if w in bits and bits[w] == bits[v]:
                    raise ColoringError(f"precolouring is improper on edge {v}-{w}")
        return bits


def _peel(adj, masks: dict[int, int]) -> tuple[set[int], list[int]]:
    """Strip vertices with more colours than uncoloured neighbours.

    Such a vertex can always be coloured after the rest, so the core decides
    extendability.  Returns (core, peel order).
    """
    alive = set(masks)
    deg = {v: sum(1 for w in adj[v] if w in alive) for v in alive}
    queue = [v for v in sorted(alive) if masks[v].bit_count() > deg[v]]
    queued = set(queue)
    order = []
    while queue:
        v = queue.pop()
        alive.discard(v)
        order.append(v)
        for w in adj[v]:
            if w in alive:
                deg[w] -= 1
                if w not in queued and masks[w].bit_count() > deg[w]:
                    queued.add(w)
                    queue.append(w)
    return alive, order


def _search(adj, masks: dict[int, int], todo: set[int]) -> dict[int, int] | None:
    """Depth-first search, fewest remaining colours first, ties to the lowest id."""
    if not todo:
        return {}
    v = min(todo, key=lambda x: (masks[x].bit_count(), x))
    rest = todo - {v}
    nbrs = [w for w in adj[v] if w in rest]
    m = masks[v]
    while m:
        b = m & -m
        m ^= b
        changed = []
        dead = False
        for w in nbrs:
            if masks[w] & b:
                masks[w] ^= b
                changed.append(w)
                if not masks[w]:
                    dead = True
                    break
        if not dead:
            sub = _search(adj, masks, rest)
            if sub is not None:
                for w in changed:
                    masks[w] |= b
                sub[v] = b
                return sub
        for w in changed:
            masks[w] |= b
    return None


def _components(adj, todo: set[int]) -> list[set[int]]:
    left = set(todo)
    out = []
    while left:
        s = min(left)
        comp = {s}
        stack = [s]
        left.discard(s)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w in left:
                    left.discard(w)
                    comp.add(w)
                    stack.append(w)
        out.append(comp)
    return out


def _count(adj, masks: dict[int, int], todo: set[int]) -> int:
    if not todo:
        return 1
    comps = _components(adj, todo)
    total = 1
    for comp in comps:
        total *= _count_connected(adj, masks, comp)
        if not total:
            return 0
    return total


def _count_connected(adj, masks, comp: set[int]) -> int:
    if len(comp) == 1:
        (v,) = comp
        return masks[v].bit_count()
    v = min(comp, key=lambda x: (masks[x].bit_count(), x))
    rest = comp - {v}
    nbrs = [w for w in adj[v] if w in rest]
    m = masks[v]
    total = 0
    while m:
        b = m & -m
        m ^= b
        changed = []
        dead = False
        for w in nbrs:
            if masks[w] & b:
                masks[w] ^= b
                changed.append(w)
                if not masks[w]:
                    dead = True
                    break
        if not dead:
            total += _count(adj, masks, rest)
        for w in changed:
            masks[w] |= b
    return total


def _complete(adj, masks: dict[int, int]) -> dict[int, int] | None:
    """A full colouring of the residual problem (bits), or None."""
    core, order = _peel(adj, masks)
    work = {v: masks[v] for v in core}
    found = _search(adj, work, set(core))
    if found is None:
        return None
    for v in reversed(order):
        m = masks[v]
        for w in adj[v]:
            b = found.get(w)
            if b is not None:
                m &= ~b
        found[v] = m & -m
    return found


def _extends(adj, masks: dict[int, int]) -> bool:
    core, _ = _peel(adj, masks)
    if not core:
        return True
    work = {v: masks[v] for v in core}
    return _search(adj, work, set(core)) is not None


# public solving and counting


def _prepare(G: EGraph, L, pre, sub: Subgraph | None = None):
    lists = lists_from(G, L)
    eng = _Engine(G, lists)
    sub = Subgraph.whole(G) if sub is None else sub
    adj = eng.adjacency(sub)
    bits = eng.check_pre(sub, adj, dict(pre or {}))
    return eng, sub, adj, bits


def solve(G: EGraph, L=None, pre: Mapping[int, int] | None = None,
          sub: Subgraph | None = None) -> dict[int, int] | None:
    """An L-colouring of G extending ``pre``, or None.  Deterministic."""
    eng, sub, adj, bits = _prepare(G, L, pre, sub)
    masks = eng.residual(adj, sub.vertices, bits)
    if masks is None:
        return None
    found = _complete(adj, masks)
    if found is None:
        return None
    out = dict(pre or {})
    for v, b in found.items():
        out[v] = eng.color_of(b)
    return dict(sorted(out.items()))


def count_extensions(G: EGraph, L=None, pre: Mapping[int, int] | None = None,
                     sub: Subgraph | None = None) -> int:
    """Exact number of L-colourings of G extending ``pre``."""
    eng, sub, adj, bits = _prepare(G, L, pre, sub)
    masks = eng.residual(adj, sub.vertices, bits)
    if masks is None:
        return 0
    return _count(adj, masks, set(masks))


def brute_force_count(G: EGraph, L=None, pre: Mapping[int, int] | None = None) -> int:
    """Reference count by plain product enumeration.  Only for tiny graphs."""
    lists = lists_from(G, L)
    pre = dict(pre or {})
    free = [v for v in range(G.vertex_count) if v not in pre]
    choices = [sorted(lists[v]) for v in free]
    total = 0
    for combo in itertools.product(*choices):
        col = dict(pre)
        col.update(zip(free, combo))
        if all(col[u] != col[v] for u, v in G.edges) and all(col[v] in lists[v] for v in col):
            total += 1
    return total


def is_proper_coloring(G: EGraph, col: Mapping[int, int], L=None) -> bool:
    lists = lists_from(G, L)
    if set(col) != set(range(G.vertex_count)):
        return False
    return all(col[v] in lists[v] for v in col) and all(col[u] != col[v] for u, v in G.edges)


def iter_colorings(G: EGraph, L=None, sub: Subgraph | None = None,
                   budget: int | None = DEFAULT_BUDGET) -> Iterator[dict[int, int]]:
    """All L-colourings of a subgraph, vertices in increasing id order."""
    lists = lists_from(G, L)
    sub = Subgraph.whole(G) if sub is None else sub
    verts = sorted(sub.vertices)
    if budget is not None:
        size = 1
        for v in verts:
            size *= len(lists[v])
        if size > budget:
            raise ResourceError(f"{size} candidate colourings exceed the budget {budget}")
    eng = _Engine(G, lists)
    adj = eng.adjacency(sub)
    earlier = [[w for w in adj[v] if w < v] for v in range(G.vertex_count)]
    col: dict[int, int] = {}

    def rec(i):
        if i == len(verts):
            yield dict(col)
            return
        v = verts[i]
        for c in sorted(lists[v]):
            if all(col.get(w) != c for w in earlier[v]):
                col[v] = c
                yield from rec(i + 1)
                del col[v]

    yield from rec(0)


def extends_to(G: EGraph, lists, phi: Mapping[int, int], sub: Subgraph | None = None) -> bool:
    """Whether the colouring ``phi`` of some vertices extends to the subgraph."""
    return solve(G, lists, phi, sub) is not None


class _Checker:
    """Repeated extension tests of colourings against subgraphs of one host."""

    def __init__(self, G: EGraph, lists):
        self.G = G
        self.eng = _Engine(G, lists)

    def bits(self, phi: Mapping[int, int]) -> dict[int, int]:
        return {v: self.eng.bit(c) for v, c in phi.items()}

    def extends(self, adj, vertices, bits: Mapping[int, int]) -> bool:
        masks = self.eng.residual(adj, vertices, bits)
        if masks is None:
            return False
        return _extends(adj, masks)

    def count(self, adj, vertices, bits: Mapping[int, int]) -> int:
        masks = self.eng.residual(adj, vertices, bits)
        if masks is None:
            return 0
        return _count(adj, masks, set(masks))


# criticality and kernels


def _bad_colorings(G: EGraph, lists, H: Subgraph, host: Subgraph, budget) -> list[dict[int, int]]:
    chk = _Checker(G, lists)
    adj = chk.eng.adjacency(host)
    bad = []
    for phi in iter_colorings(G, lists, H, budget):
        b = chk.bits(phi)
        if not chk.extends(adj, host.vertices, b):
            bad.append(b)
    return bad


def is_critical(G: EGraph, H=None, L=None, budget: int | None = DEFAULT_BUDGET) -> bool:
    """Whether G is H-critical with respect to L (H defaults to the union of rings).

    Only the maximal proper subgraphs containing H are tried: G - e for an edge
    outside H, and G - v for an isolated vertex outside H.  Every other proper
    subgraph containing H lies inside one of these, and a colouring of H that
    extends to a graph extends to all its subgraphs, so a witness for the
    maximal one serves the smaller one too.
    """
    lists = lists_from(G, L)
    H = _as_subgraph(G, H)
    whole = Subgraph.whole(G)
    if not H.issubset(whole) or not H.is_valid_in(G):
        raise ColoringError("H is not a subgraph of G")
    if H == whole:
        return False
    free_v = whole.vertices - H.vertices
    adjG = G.adjacency
    for v in free_v:
        if not adjG[v]:
            # deleting an isolated vertex never changes extendability
            return False
    bad = _bad_colorings(G, lists, H, whole, budget)
    if not bad:
        return False
    chk = _Checker(G, lists)
    for e in sorted(whole.edges - H.edges):
        smaller = whole.without_edge(e)
        adj = chk.eng.adjacency(smaller)
        if not any(chk.extends(adj, smaller.vertices, b) for b in bad):
            return False
    return True


def _proper_subgraphs_containing(G: EGraph, H: Subgraph, whole: Subgraph, budget: int | None):
    opt_edges = sorted(whole.edges - H.edges)
    opt_vertices = sorted(whole.vertices - H.vertices)
    total = 0
    for k in range(len(opt_edges) + 1):
        for chosen in itertools.combinations(opt_edges, k):
            need = set(H.vertices)
            for e in chosen:
                need.update(G.edges[e])
            spare = [v for v in opt_vertices if v not in need]
            total += 1 << len(spare)
            if budget is not None and total > budget:
                raise ResourceError(f"more than {budget} subgraphs to examine")
            for j in range(len(spare) + 1):
                for extra in itertools.combinations(spare, j):
                    sub = Subgraph(frozenset(need | set(extra)), H.edges | frozenset(chosen))
                    if sub != whole:
                        yield sub


def is_critical_exhaustive(G: EGraph, H=None, L=None, budget: int | None = 10 ** 6) -> bool:
    """Criticality tested over every proper subgraph containing H (reference check)."""
    lists = lists_from(G, L)
    H = _as_subgraph(G, H)
    whole = Subgraph.whole(G)
    if not H.issubset(whole):
        raise ColoringError("H is not a subgraph of G")
    if H == whole:
        return False
    bad = _bad_colorings(G, lists, H, whole, None)
    chk = _Checker(G, lists)
    for sub in _proper_subgraphs_containing(G, H, whole, budget):
        adj = chk.eng.adjacency(sub)
        if not any(chk.extends(adj, sub.vertices, b) for b in bad):
            return False
    return True


def extract_kernel(G: EGraph, L=None, budget: int | None = DEFAULT_BUDGET) -> Subgraph:
    """A subgraph G' containing the rings, minimal under single deletions, such that
    every colouring of the rings that extends to G' extends to G.

    One pass over the edges suffices: if some colouring of the rings that fails on G
    extends to the current graph minus e, it still extends after further
    deletions, so e never becomes deletable later.
    """
    lists = lists_from(G, L)
    H = Subgraph.rings_of(G)
    whole = Subgraph.whole(G)
    bad = _bad_colorings(G, lists, H, whole, budget)
    chk = _Checker(G, lists)
    cur = whole
    for e in sorted(whole.edges - H.edges):
        trial = cur.without_edge(e)
        adj = chk.eng.adjacency(trial)
        if not any(chk.extends(adj, trial.vertices, b) for b in bad):
            cur = trial
    # isolated vertices outside the rings never matter
    used = set(H.vertices)
    for e in cur.edges:
        used.update(G.edges[e])
    return Subgraph(frozenset(used), cur.edges)


def kernel_preserves_extensions(G: EGraph, kernel: Subgraph, L=None,
                                budget: int | None = DEFAULT_BUDGET) -> bool:
    """Exhaustive check: each ring colouring extending to the kernel extends to G."""
    lists = lists_from(G, L)
    chk = _Checker(G, lists)
    adjK = chk.eng.adjacency(kernel)
    adjG = chk.eng.adjacency(Subgraph.whole(G))
    allv = frozenset(range(G.vertex_count))
    for phi in iter_colorings(G, lists, Subgraph.rings_of(G), budget):
        b = chk.bits(phi)
        if chk.extends(adjK, kernel.vertices, b) and not chk.extends(adjG, allv, b):
            return False
    return True


def kernel_graph(G: EGraph, kernel: Subgraph) -> tuple[EGraph, list[int]]:
    from .surface_core import subgraph_embedding

    return subgraph_embedding(G, kernel.vertices, kernel.edges)


# plane canvases with an outer ring


def _outer_cycle(G: EGraph, C: Sequence[int] | None) -> tuple[int, ...]:
    if C is not None:
        return tuple(C)
    cyc = [r for r in G.rings if len(r.vertex_walk) >= 3]
    if len(cyc) != 1:
        raise ColoringError("expected exactly one ring cycle to serve as the outer cycle")
    return cyc[0].vertex_walk


def _plane_2connected(G: EGraph):
    if G.summary().g != 0 or len(G.components) != 1:
        raise ColoringError("needs a connected plane graph")
    nxg = nx.Graph()
    nxg.add_nodes_from(range(G.vertex_count))
    nxg.add_edges_from(G.edges)
    if G.vertex_count < 3 or not nx.is_biconnected(nxg):
        raise ColoringError("needs a 2-connected plane graph")


def internal_faces(G: EGraph, C: Sequence[int] | None = None):
    C = _outer_cycle(G, C)
    outer = G.match_face(C)
    if outer is None:
        raise ColoringError("outer cycle is not a face")
    return [f for i, f in enumerate(G.faces) if i != outer]


def deficiency(G: EGraph, C: Sequence[int] | None = None) -> int:
    """|C| - 3 minus the sum of (|f| - 3) over the internal faces."""
    _plane_2connected(G)
    C = _outer_cycle(G, C)
    return len(C) - 3 - sum(f.length - 3 for f in internal_faces(G, C))


def check_strong_linear(G: EGraph, L=None, C: Sequence[int] | None = None,
                        budget: int | None = DEFAULT_BUDGET) -> Verdict:
    """|V(G) - V(C)|/18 + sum(|f| - 3) <= |C| - 4 on a C-critical 5-list plane canvas."""
    lists = lists_from(G, L)
    _plane_2connected(G)
    C = _outer_cycle(G, C)
    if min(len(x) for x in lists) < 5:
        raise ColoringError("needs a 5-list assignment")
    Csub = Subgraph.induced(G, C)
    Csub = Subgraph(Csub.vertices, frozenset(G.edge_between(C[i], C[(i + 1) % len(C)])
                                             for i in range(len(C))))
    if not is_critical(G, Csub, lists, budget):
        raise ColoringError("the canvas is not C-critical")
    interior = G.vertex_count - len(set(C))
    excess = sum(f.length - 3 for f in internal_faces(G, C))
    lhs = interior + 18 * excess
    rhs = 18 * (len(C) - 4)
    status = PASS if lhs <= rhs else VIOLATION
    return Verdict(status, "strong-linear", Fraction(lhs, 18), len(C) - 4)


def _universal_interior_neighbor(G: EGraph, C: Sequence[int]) -> int | None:
    cs = set(C)
    for v in range(G.vertex_count):
        if v not in cs and cs <= G.adjacency[v]:
            return v
    return None


def _log2_at_least(count: int, num: int, den: int = 1) -> bool:
    """Exact test of log2(count) >= num/den for den > 0."""
    if count <= 0:
        return False
    if num <= 0:
        return True
    return count ** den >= 2 ** num


def check_exp_lower_bounds(G: EGraph, phi: Mapping[int, int], L=None,
                           C: Sequence[int] | None = None) -> Verdict:
    """Lower bounds on the number of extensions of a colouring of the outer cycle.

    Always asserts log2 E >= (|V - C| - 19(|C| - 3))/9; for |C| <= 4 also asserts
    log2 E >= |V - C|/9 unless |C| = 4 and an interior vertex sees all of C, in
    which case the status is "exception".
    """
    lists = lists_from(G, L)
    C = _outer_cycle(G, C)
    if set(phi) != set(C):
        raise ColoringError("phi must colour exactly the outer cycle")
    E = count_extensions(G, lists, phi)
    if E == 0:
        raise ColoringError("phi does not extend")
    interior = G.vertex_count - len(set(C))
    general = interior - 19 * (len(C) - 3)
    if not _log2_at_least(E, general, 9):
        return Verdict(VIOLATION, "exp-many", E, Fraction(general, 9))
    if len(C) <= 4:
        if len(C) == 4 and _universal_interior_neighbor(G, C) is not None:
            return Verdict(EXCEPTION, "exp-four-cycle", E, None,
                           detail="interior vertex adjacent to all of C")
        if not _log2_at_least(E, interior, 9):
            return Verdict(VIOLATION, "exp-four-cycle", E, Fraction(interior, 9))
        return Verdict(PASS, "exp-four-cycle", E, Fraction(interior, 9))
    return Verdict(PASS, "exp-many", E, Fraction(general, 9))


# exponential criticality


def _pow2_at_most(count: int, exponent: Fraction) -> bool:
    """Exact test of 2**exponent <= count."""
    if count <= 0:
        return False
    p, q = exponent.numerator, exponent.denominator
    if p <= 0:
        return True
    return count ** q >= 2 ** p


def is_exp_critical(G: EGraph, eps, alpha, L=None, budget: int | None = 4096,
                    color_budget: int | None = DEFAULT_BUDGET) -> bool:
    """(eps, alpha)-exponential criticality by exact counting.

    No maximal-subgraph shortcut applies here, since the threshold depends on
    the size of the subgraph, so every proper subgraph containing the rings is
    examined; more than ``budget`` of them raises ResourceError.
    """
    eps, alpha = Fraction(eps), Fraction(alpha)
    lists = lists_from(G, L)
    H = Subgraph.rings_of(G)
    whole = Subgraph.whole(G)
    if H == whole:
        return False
    s = G.summary()
    offset = alpha * (s.g + s.R)
    chk = _Checker(G, lists)
    adjG = chk.eng.adjacency(whole)
    full_exp = eps * (G.vertex_count - offset)
    few = []
    for phi in iter_colorings(G, lists, H, color_budget):
        b = chk.bits(phi)
        if not _pow2_at_most(chk.count(adjG, whole.vertices, b), full_exp):
            few.append(b)
    if not few:
        return False
    for sub in _proper_subgraphs_containing(G, H, whole, budget):
        adj = chk.eng.adjacency(sub)
        need = eps * (len(sub.vertices) - offset)
        if not any(_pow2_at_most(chk.count(adj, sub.vertices, b), need) for b in few):
            return False
    return True


# properties used for the exponential bound


def _cycle_subgraph(G: EGraph, C: Sequence[int]) -> Subgraph:
    C = list(C)
    if len(C) == 1:
        return Subgraph(frozenset(C), frozenset())
    es = set()
    for i in range(len(C)):
        e = G.edge_between(C[i], C[(i + 1) % len(C)])
        if e is None:
            raise ColoringError(f"{C[i]}-{C[(i + 1) % len(C)]} is not an edge")
        es.add(e)
    return Subgraph(frozenset(C), frozenset(es))


def extendable_cycle_colorings(G: EGraph, C: Sequence[int], L=None, sub: Subgraph | None = None,
                               budget: int | None = DEFAULT_BUDGET) -> int:
    """Number of L-colourings of the cycle C that extend to the subgraph."""
    lists = lists_from(G, L)
    sub = Subgraph.whole(G) if sub is None else sub
    chk = _Checker(G, lists)
    adj = chk.eng.adjacency(sub)
    return sum(1 for phi in iter_colorings(G, lists, _cycle_subgraph(G, C), budget)
               if chk.extends(adj, sub.vertices, chk.bits(phi)))


def check_property_P1(G: EGraph, C: Sequence[int], L=None, sub: Subgraph | None = None) -> Verdict:
    """At least five colourings of C extend to the planar (sub)graph."""
    if sub is None and G.summary().g != 0:
        raise ColoringError("needs a planar graph")
    n = extendable_cycle_colorings(G, C, L, sub)
    return Verdict(PASS if n >= 5 else VIOLATION, "P1", n, 5)


def check_property_P1_corpus(instances: Iterable[tuple[EGraph, Sequence[int]]]) -> Verdict:
    count = 0
    for G, C in instances:
        v = check_property_P1(G, C)
        count += 1
        if not v:
            return Verdict(VIOLATION, "P1", v.measured, 5, witness=(G, tuple(C)))
    return Verdict(PASS if count else VACUOUS, "P1", count)


def check_property_P2_witness(Gp: EGraph, C1: Sequence[int], C2: Sequence[int],
                              J1: Iterable[int], J2: Iterable[int], L=None,
                              gamma: int = 20, budget: int | None = DEFAULT_BUDGET) -> Verdict:
    """Size bound and extension transfer for candidate subgraphs J1, J2 (vertex sets).

    J_i is taken as the induced subgraph on its vertex set.
    """
    lists = lists_from(Gp, L)
    J1, J2 = frozenset(J1), frozenset(J2)
    if J1 & J2:
        return Verdict(VIOLATION, "P2", detail="J1 and J2 intersect")
    if not set(C1) <= J1 or not set(C2) <= J2:
        return Verdict(VIOLATION, "P2", detail="J_i must contain C_i")
    for name, J, C in (("J1", J1, C1), ("J2", J2, C2)):
        if len(J) > gamma * len(set(C)):
            return Verdict(VIOLATION, "P2", len(J), gamma * len(set(C)), detail=f"{name} too large")
    chk = _Checker(Gp, lists)
    J = Subgraph.induced(Gp, J1 | J2)
    adjJ = chk.eng.adjacency(J)
    whole = Subgraph.whole(Gp)
    adjG = chk.eng.adjacency(whole)
    rings = _cycle_subgraph(Gp, C1)
    r2 = _cycle_subgraph(Gp, C2)
    both = Subgraph(rings.vertices | r2.vertices, rings.edges | r2.edges)
    for phi in iter_colorings(Gp, lists, both, budget):
        b = chk.bits(phi)
        if chk.extends(adjJ, J.vertices, b) and not chk.extends(adjG, whole.vertices, b):
            return Verdict(VIOLATION, "P2", witness=phi, detail="extension does not transfer")
    return Verdict(PASS, "P2")


def permute_colors(L: Sequence[Iterable[int]], perm: Mapping[int, int]) -> list[frozenset[int]]:
    return [frozenset(perm[c] for c in cs) for cs in L]


__all__ = [
    "C3", "C4", "C5", "OTHER", "ColoringError", "ResourceError", "Subgraph",
    "lists_from", "classify_assignment", "is_type345", "girth", "solve",
    "count_extensions", "brute_force_count", "is_proper_coloring", "iter_colorings",
    "extends_to", "is_critical", "is_critical_exhaustive", "extract_kernel",
    "kernel_preserves_extensions", "kernel_graph", "deficiency", "internal_faces",
    "check_strong_linear", "check_exp_lower_bounds", "is_exp_critical",
    "extendable_cycle_colorings", "check_property_P1", "check_property_P1_corpus",
    "check_property_P2_witness", "permute_colors",
]
