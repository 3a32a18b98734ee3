"""Deterministic instance generators used as independent test oracles.

Plane maps are grown from cycles by adding ears inside faces and deduplicated
by canonical embedded-graph codes, so every 2-connected plane graph on the
requested vertex range appears exactly once per embedding (up to mirror).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .surface_core import EGraph, canonical_code, from_rotation_lists

MASK64 = (1 << 64) - 1
DEFAULT_CEILING = 12


class CorpusError(RuntimeError):
    """A corpus request exceeds the configured ceiling."""


class SplitMix64:
    """The split-mix 64-bit generator: same seed, same stream, on every platform."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def sample(self, population: Sequence[int], k: int) -> list[int]:
        pool = list(population)
        for i in range(k):
            j = i + self.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return sorted(pool[:k])

    def fork(self, *salt: int) -> "SplitMix64":
        s = self.state
        for x in salt:
            s = (s * 0x100000001B3 ^ (x & MASK64)) & MASK64
        return SplitMix64(SplitMix64(s).next_u64())


# plane maps as cyclic neighbour lists (all signs positive)


def _faces(rot: list[list[int]]) -> list[list[int]]:
    """Face boundary walks as vertex lists.  The face after dart u->v continues
    along v->w where w follows u in the rotation at v."""
    pos = [{w: i for i, w in enumerate(r)} for r in rot]
    seen = set()
    faces = []
    for u in range(len(rot)):
        for v in rot[u]:
            if (u, v) in seen:
                continue
            walk = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                r = rot[b]
                c = r[(pos[b][a] + 1) % len(r)]
                a, b = b, c
            faces.append(walk)
    return faces


def _add_path(rot: list[list[int]], walk: list[int], i: int, j: int, k: int) -> list[list[int]]:
    """Add a path with k new vertices inside the face ``walk`` from corner i to corner j."""
    rot = [list(r) for r in rot]
    n = len(rot)
    a, b = walk[i], walk[j]
    pa, pb = walk[i - 1], walk[j - 1]
    new = list(range(n, n + k))
    chain = [a] + new + [b]
    # the new neighbour goes right after the face predecessor in the rotation
    rot[a].insert(rot[a].index(pa) + 1, chain[1])
    rot[b].insert(rot[b].index(pb) + 1, chain[-2])
    for t, x in enumerate(new):
        rot.append([chain[t], chain[t + 2]])
    return rot


def _egraph(rot, rings=()) -> EGraph:
    return from_rotation_lists(rot, rings=rings)


@lru_cache(maxsize=None)
def plane_maps(n_max: int, n_min: int = 3, ceiling: int = DEFAULT_CEILING) -> tuple[EGraph, ...]:
    """All 2-connected plane maps with n_min..n_max vertices, one per embedding up to mirror.

    Ordered by (vertex count, edge count, canonical code).
    """
    if n_max > ceiling:
        raise CorpusError(f"n_max={n_max} exceeds the ceiling {ceiling}")
    seen: dict[tuple, EGraph] = {}
    frontier = []
    for k in range(3, n_max + 1):
        rot = [[(i + 1) % k, (i - 1) % k] for i in range(k)]
        G = _egraph(rot)
        code = canonical_code(G)
        seen[code] = G
        frontier.append((rot, G))
    while frontier:
        nxt = []
        for rot, G in frontier:
            n = len(rot)
            adj = [set(r) for r in rot]
            for walk in _faces(rot):
                L = len(walk)
                for i in range(L):
                    for j in range(L):
                        if i == j or walk[i] == walk[j]:
                            continue
                        if j < i:
                            continue
                        for k in range(0, n_max - n + 1):
                            if k == 0 and walk[j] in adj[walk[i]]:
                                continue
                            new_rot = _add_path(rot, walk, i, j, k)
                            H = _egraph(new_rot)
                            code = canonical_code(H)
                            if code not in seen:
                                seen[code] = H
                                nxt.append((new_rot, H))
        frontier = nxt
    out = [G for G in seen.values() if G.vertex_count >= n_min]
    out.sort(key=lambda G: (G.vertex_count, len(G.edges), canonical_code(G)))
    return tuple(out)


def facial_path_vertex_sets(G: EGraph, max_len: int = 3) -> list[tuple[int, ...]]:
    """Vertex sets of the paths with at most max_len edges running along a face walk."""
    out = set((v,) for v in range(G.vertex_count))
    for f in G.faces:
        walk = f.vertices
        L = len(walk)
        if L == 0:
            continue
        for i in range(L):
            seq = [walk[i]]
            for t in range(1, max_len + 1):
                if t >= L:
                    break
                w = walk[(i + t) % L]
                if w in seq:
                    break
                seq.append(w)
                out.add(tuple(sorted(seq)))
    return sorted(out, key=lambda s: (len(s), s))


def random_type345_lists(G: EGraph, rng: SplitMix64, extra_colors: int = 2) -> list[frozenset[int]]:
    """Lists of one common size k chosen among the sizes allowed by the girth."""
    from .coloring import girth

    gi = girth(G)
    sizes = [5]
    if gi is None or gi >= 4:
        sizes.append(4)
    if gi is None or gi >= 5:
        sizes.append(3)
    k = sizes[rng.below(len(sizes))]
    universe = range(k + extra_colors)
    return [frozenset(rng.sample(universe, k)) for _ in range(G.vertex_count)]


def random_lists(n: int, rng: SplitMix64, size: int, universe: int) -> list[frozenset[int]]:
    return [frozenset(rng.sample(range(universe), size)) for _ in range(n)]


def _dart_faces(rot: list[list[int]]) -> tuple[dict[tuple[int, int], int], list[list[int]]]:
    pos = [{w: i for i, w in enumerate(r)} for r in rot]
    face_of = {}
    walks = []
    for u in range(len(rot)):
        for v in rot[u]:
            if (u, v) in face_of:
                continue
            fid = len(walks)
            walk = []
            a, b = u, v
            while (a, b) not in face_of:
                face_of[(a, b)] = fid
                walk.append(a)
                r = rot[b]
                a, b = b, r[(pos[b][a] + 1) % len(r)]
            walks.append(walk)
    return face_of, walks


def _short_cycles(adj: list[set[int]], max_len: int) -> list[list[int]]:
    out = []
    for s in range(len(adj)):
        stack = [[s]]
        while stack:
            path = stack.pop()
            for w in adj[path[-1]]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(path)
                elif w > s and w not in path and len(path) < max_len:
                    stack.append(path + [w])
    return out


def has_short_separating_cycle(rot: list[list[int]], outer: tuple[int, int], max_len: int = 4) -> bool:
    """Whether some cycle of length <= max_len has a vertex strictly inside,
    inside meaning on the side away from the face containing the dart ``outer``."""
    face_of, walks = _dart_faces(rot)
    adj = [set(r) for r in rot]
    start = face_of[outer]
    for cyc in _short_cycles(adj, max_len):
        barrier = set()
        for i in range(len(cyc)):
            a, b = cyc[i], cyc[(i + 1) % len(cyc)]
            barrier.add((a, b))
            barrier.add((b, a))
        reached = {start}
        stack = [start]
        while stack:
            f = stack.pop()
            walk = walks[f]
            for i in range(len(walk)):
                a, b = walk[i], walk[(i + 1) % len(walk)]
                if (a, b) in barrier:
                    continue
                g = face_of[(b, a)]
                if g not in reached:
                    reached.add(g)
                    stack.append(g)
        on_cycle = set(cyc)
        for f, walk in enumerate(walks):
            if f not in reached and any(v not in on_cycle for v in walk):
                return True
    return False


def _corner_subsets(walk: list[int], max_size: int) -> Iterator[tuple[int, ...]]:
    L = len(walk)
    for size in range(1, min(max_size, L) + 1):
        for pick in combinations(range(L), size):
            vs = [walk[i] for i in pick]
            if len(set(vs)) == size:
                yield pick


def _insert_vertex(rot: list[list[int]], walk: list[int], pick: Sequence[int]) -> list[list[int]]:
    rot = [list(r) for r in rot]
    x = len(rot)
    for i in pick:
        a, pa = walk[i], walk[i - 1]
        if len(rot[a]) == 0:
            rot[a].append(x)
        else:
            rot[a].insert(rot[a].index(pa) + 1, x)
    rot.append([walk[i] for i in reversed(pick)])
    return rot


def _chord_sets(k: int) -> list[list[list[int]]]:
    """Rotations of C_k plus every non-crossing chord set, distinct up to symmetry."""
    base = [[(i + 1) % k, (i - 1) % k] for i in range(k)]
    ring = tuple(range(k))
    seen = {}
    todo = [base]
    while todo:
        rot = todo.pop()
        G = _egraph(rot, [ring])
        code = canonical_code(G)
        if code in seen:
            continue
        seen[code] = rot
        adj = [set(r) for r in rot]
        for walk in _faces(rot):
            if sorted(walk) == list(ring) and _is_ring_walk(walk, k):
                continue
            L = len(walk)
            for i in range(L):
                for j in range(i + 1, L):
                    if walk[j] not in adj[walk[i]]:
                        todo.append(_add_path(rot, walk, i, j, 0))
    return [seen[c] for c in sorted(seen)]


def _is_ring_walk(walk, k) -> bool:
    # the outer face of C_k plus chords is traced as 0, k-1, ..., 1 under our rule
    if len(walk) != k:
        return False
    i = walk.index(0)
    w = walk[i:] + walk[:i]
    return w == [0] + list(range(k - 1, 0, -1))


@lru_cache(maxsize=None)
def disk_canvases(k: int, n_max: int, min_interior_degree: int = 5,
                  no_short_separating: bool = True,
                  ceiling: int = DEFAULT_CEILING) -> tuple[EGraph, ...]:
    """2-connected plane graphs with outer ring C_k = (0, ..., k-1) and at most n_max
    vertices, every interior vertex of degree >= min_interior_degree.

    Interior vertices are added one at a time inside bounded faces, attached to
    any set of distinct corners of the face; a partial graph is abandoned once
    some interior vertex can no longer reach the degree bound, since each later
    vertex adds at most one to its degree.  With ``no_short_separating`` a partial
    graph is also abandoned once a cycle of length at most 4 has a vertex inside
    it; later insertions cannot undo that.
    """
    if n_max > ceiling:
        raise CorpusError(f"n_max={n_max} exceeds the ceiling {ceiling}")
    ring = tuple(range(k))
    seen: dict[tuple, EGraph] = {}
    results = []
    frontier = []
    for rot in _chord_sets(k):
        G = _egraph(rot, [ring])
        seen[canonical_code(G)] = G
        frontier.append(rot)
    while frontier:
        nxt = []
        for rot in frontier:
            G = seen_graph = _egraph(rot, [ring])
            results.append(seen_graph)
            n = len(rot)
            if n >= n_max:
                continue
            slack = n_max - n - 1
            for walk in _faces(rot):
                if len(walk) == k and set(walk) == set(ring) and _is_ring_walk(walk, k):
                    continue
                for pick in _corner_subsets(walk, len(walk)):
                    if len(pick) + slack < min_interior_degree:
                        continue
                    new_rot = _insert_vertex(rot, walk, pick)
                    if any(len(new_rot[v]) + slack < min_interior_degree for v in range(k, n + 1)):
                        continue
                    if no_short_separating and has_short_separating_cycle(new_rot, (0, k - 1)):
                        continue
                    H = _egraph(new_rot, [ring])
                    code = canonical_code(H)
                    if code not in seen:
                        seen[code] = H
                        nxt.append(new_rot)
        frontier = nxt
    out = []
    for G in results:
        if all(G.degree(v) >= min_interior_degree for v in range(k, G.vertex_count)) and _biconnected(G):
            out.append(G)
    out.sort(key=lambda G: (G.vertex_count, len(G.edges), canonical_code(G)))
    return tuple(out)


def _biconnected(G: EGraph) -> bool:
    import networkx as nx

    g = nx.Graph()
    g.add_nodes_from(range(G.vertex_count))
    g.add_edges_from(G.edges)
    return G.vertex_count >= 3 and nx.is_biconnected(g)


# disks grown around a core graph, for the discharging suites


def shell_around(core: list[list[int]], walk: list[int], runs: Sequence[int]) -> tuple[list[list[int]], list[int]]:
    """Surround a plane core by a boundary cycle drawn in one of its faces.

    ``walk`` is that face's vertex walk and ``runs[t]`` the number of new
    boundary vertices joined to corner t; consecutive corners share the
    boundary vertex between them, so every new face is a triangle.  Returns
    the rotation and the boundary cycle.
    """
    L = len(walk)
    if len(runs) != L or min(runs) < 1:
        raise ValueError("one positive run length per corner")
    if sum(runs) < 3:
        raise ValueError("the boundary needs at least three vertices")
    rot = [list(r) for r in core]
    n0 = len(rot)
    boundary, owner = [], []
    for t, r in enumerate(runs):
        for j in range(r):
            boundary.append(n0 + len(boundary))
            owner.append((t, j == r - 1))
    K = len(boundary)
    rot.extend([] for _ in range(K))
    start = 0
    for t, r in enumerate(runs):
        w, pred = walk[t], walk[t - 1]
        prev = boundary[start - 1]
        seq = [prev] + boundary[start:start + r]
        i = rot[w].index(pred) + 1 if rot[w] else 0
        rot[w][i:i] = seq
        start += r
    for i, b in enumerate(boundary):
        t, last = owner[i]
        nb = [boundary[(i + 1) % K]]
        if last:
            nb.append(walk[(t + 1) % L])
        nb += [walk[t], boundary[i - 1]]
        rot[b] = nb
    return rot, boundary


def random_plane_map(n: int, rng: SplitMix64, chords: int | None = None) -> EGraph:
    """A seeded 2-connected plane map on n vertices, grown by ears.

    Starts from a cycle, then repeatedly adds a path (possibly a bare chord)
    across a random face until n vertices exist; ``chords`` further chords
    follow (default: a random number up to n).
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    k0 = 3 + rng.below(n - 2)
    rot = [[(i + 1) % k0, (i - 1) % k0] for i in range(k0)]

    def ear(inner_max: int) -> bool:
        faces = _faces(rot)
        walk = faces[rng.below(len(faces))]
        L = len(walk)
        i, j = rng.sample(range(L), 2)
        if walk[i] == walk[j]:
            return False
        k = rng.below(inner_max + 1)
        if k == 0 and walk[j] in rot[walk[i]]:
            return False
        rot[:] = _add_path(rot, walk, i, j, k)
        return True

    while len(rot) < n:
        ear(n - len(rot))
    extra = rng.below(n + 1) if chords is None else chords
    for _ in range(4 * extra):
        if extra == 0:
            break
        if ear(0):
            extra -= 1
    return _egraph(rot)


def random_tree(n: int, rng: SplitMix64) -> list[list[int]]:
    rot = [[] for _ in range(n)]
    for v in range(1, n):
        p = rng.below(v)
        rot[p].append(v)
        rot[v].append(p)
    return rot


def _random_core(rng: SplitMix64, max_core: int):
    """A small plane graph and the walk of the face the boundary will occupy."""
    pick = rng.below(3)
    if pick == 0 or max_core < 3:
        n = 2 + rng.below(max(1, max_core - 1))
        rot = random_tree(n, rng)
    elif pick == 1:
        n = 3 + rng.below(max(1, max_core - 2))
        rot = [[(i + 1) % n, (i - 1) % n] for i in range(n)]
    else:
        maps = [G for G in plane_maps(min(max_core, 6)) if G.vertex_count <= max_core]
        G = maps[rng.below(len(maps))]
        rot = [[G.origin(h ^ 1) for h in G.rotation[v]] for v in range(G.vertex_count)]
    faces = _faces(rot)
    return rot, faces[rng.below(len(faces))]


def discharging_candidates(kind: str, rng: SplitMix64, max_core: int = 6) -> Iterator[EGraph]:
    """An endless stream of disks (and, for ``ring44``, cylinders) shaped so
    that a good share satisfies the hypotheses of the chosen count lemma."""
    from .families import cylinder_grid
    from .surface_core import subgraph_embedding

    while True:
        if kind == "ring44" and rng.below(4) == 0:
            yield cylinder_grid(3 + rng.below(40), 2 + rng.below(2))
            continue
        core, walk = _random_core(rng, max_core)
        top = {"deg7": 7, "deg6": 5, "ring44": 4}[kind]
        runs = [1 + rng.below(top) for _ in walk]
        if sum(runs) < 3:
            runs[0] += 3
        rot, ring = shell_around(core, walk, runs)
        G = from_rotation_lists(rot, rings=[ring])
        drop = set()
        n0 = len(core)
        for e, (u, v) in enumerate(G.edges):
            spoke = (u < n0) != (v < n0)
            if kind == "ring44" and spoke:
                # break the triangles that miss the boundary
                b, w = (v, u) if u < n0 else (u, v)
                if G.degree(b) == 4 and rng.below(4) != 0:
                    drop.add(e)
            elif spoke and rng.below(8) == 0:
                drop.add(e)
        if drop:
            H, _ = subgraph_embedding(G, range(G.vertex_count), [e for e in range(len(G.edges)) if e not in drop])
            if len(H.components) != 1:
                continue
            G = H
        yield G
