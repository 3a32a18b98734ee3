"""Graphs with rings embedded in surfaces.

An :class:`EGraph` is a 2-cell embedding given by a rotation system with
edge signs, plus an integer ``genus_surplus`` standing for extra genus that
the rotation system cannot see.  Edge ``e`` owns the half-edges ``2*e`` (at
``edges[e][0]``) and ``2*e + 1`` (at ``edges[e][1]``), so ``h ^ 1`` is the
opposite half-edge.  Rings are designated faces; removing their open disks
from the capped surface gives the surface with boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class EGRError(ValueError):
    """Base class for errors raised while building or reading an EGraph."""


class ParseError(EGRError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class ValidationError(EGRError):
    def __init__(self, invariant: str, detail: str = ""):
        super().__init__(invariant if not detail else f"{invariant}: {detail}")
        self.invariant = invariant


class SurgeryError(EGRError):
    pass


@dataclass(frozen=True)
class RingSpec:
    face_id: int
    vertex_walk: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.vertex_walk)


@dataclass(frozen=True)
class Face:
    """A traced face.  ``darts`` holds (half-edge, orientation) departure states."""

    darts: tuple[tuple[int, int], ...]
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.darts)

    def edge_ids(self) -> tuple[int, ...]:
        return tuple(h >> 1 for h, _ in self.darts)


# Faces are called FaceWalk in the public vocabulary.
FaceWalk = Face


@dataclass(frozen=True)
class SurfaceSummary:
    h: int
    g: int
    r: int
    R: int

    def __str__(self) -> str:
        return f"g={self.g} h={self.h} r={self.r} R={self.R}"


def _normalize_cyclic(seq: Sequence[int]) -> tuple[int, ...]:
    if not seq:
        return ()
    i = min(range(len(seq)), key=seq.__getitem__)
    return tuple(seq[i:]) + tuple(seq[:i])


def _cyclic_match(walk: Sequence[int], target: Sequence[int]) -> bool:
    n = len(walk)
    if n != len(target):
        return False
    if n == 0:
        return True
    first = target[0]
    for s in range(n):
        if walk[s] == first and all(walk[(s + k) % n] == target[k] for k in range(n)):
            return True
    return False


class EGraph:
    """Immutable embedded graph with rings.

    ``rings`` may be given as RingSpec objects or plain vertex walks; either way
    each is resolved against the traced faces.
    """

    def __init__(
        self,
        vertex_count: int,
        edges: Sequence[tuple[int, int]],
        rotation: Sequence[Sequence[int]],
        signs: Sequence[int] | None = None,
        rings: Iterable = (),
        genus_surplus: int = 0,
        lists: dict[int, frozenset[int]] | None = None,
    ):
        self.vertex_count = int(vertex_count)
        self.edges = tuple((int(u), int(v)) for u, v in edges)
        self.rotation = tuple(_normalize_cyclic([int(h) for h in r]) for r in rotation)
        self.signs = tuple(int(s) for s in signs) if signs is not None else (1,) * len(self.edges)
        self.genus_surplus = int(genus_surplus)
        self.lists = None if lists is None else {int(v): frozenset(c) for v, c in lists.items()}
        self._check_structure()
        self.rings = tuple(self._resolve_ring(r) for r in rings)
        self._check_rings()

    # construction checks

    def _check_structure(self) -> None:
        n, m = self.vertex_count, len(self.edges)
        if n < 0:
            raise ValidationError("vertex-count", "negative")
        if len(self.rotation) != n:
            raise ValidationError("rotation-size", f"{len(self.rotation)} rotations for {n} vertices")
        if len(self.signs) != m or any(s not in (1, -1) for s in self.signs):
            raise ValidationError("edge-signs", "one sign of +1 or -1 per edge")
        if self.genus_surplus < 0:
            raise ValidationError("genus-surplus", "negative")
        seen = set()
        for e, (u, v) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError("edge-endpoints", f"edge {e}")
            if u == v:
                raise ValidationError("no-loops", f"edge {e}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValidationError("no-multi-edges", f"edge {e}")
            seen.add(key)
        slots = [None] * (2 * m)
        for v, rot in enumerate(self.rotation):
            for h in rot:
                if not 0 <= h < 2 * m:
                    raise ValidationError("half-edge-range", f"half-edge {h} at vertex {v}")
                if slots[h] is not None:
                    raise ValidationError("half-edge-unique", f"half-edge {h} appears twice")
                if self.edges[h >> 1][h & 1] != v:
                    raise ValidationError("half-edge-origin", f"half-edge {h} listed at vertex {v}")
                slots[h] = v
        if any(s is None for s in slots):
            missing = slots.index(None)
            raise ValidationError("half-edge-unique", f"half-edge {missing} missing from rotation")
        if self.lists is not None:
            for v, lst in self.lists.items():
                if not 0 <= v < n:
                    raise ValidationError("list-vertex", f"vertex {v}")
                if not lst:
                    raise ValidationError("list-nonempty", f"vertex {v}")

    def _resolve_ring(self, ring) -> RingSpec:
        walk = tuple(ring.vertex_walk) if isinstance(ring, RingSpec) else tuple(int(x) for x in ring)
        fid = self.match_face(walk)
        if fid is None:
            raise ValidationError("ring-not-a-face", f"walk {','.join(map(str, walk))}")
        return RingSpec(fid, self.faces[fid].vertices)

    def _check_rings(self) -> None:
        used: set[int] = set()
        faces = set()
        for ring in self.rings:
            walk = ring.vertex_walk
            if ring.face_id in faces:
                raise ValidationError("ring-distinct-faces")
            faces.add(ring.face_id)
            if len(set(walk)) != len(walk):
                raise ValidationError("ring-shape", "ring walk repeats a vertex")
            if used & set(walk):
                raise ValidationError("rings-vertex-disjoint")
            used |= set(walk)

    # basic accessors

    def __repr__(self) -> str:
        return f"EGraph(V={self.vertex_count}, E={len(self.edges)}, rings={len(self.rings)}, surplus={self.genus_surplus})"

    def key(self) -> tuple:
        lists = None if self.lists is None else tuple(sorted((v, tuple(sorted(c))) for v, c in self.lists.items()))
        return (self.vertex_count, self.edges, self.rotation, self.signs,
                tuple(r.vertex_walk for r in self.rings), self.genus_surplus, lists)

    def __eq__(self, other) -> bool:
        return isinstance(other, EGraph) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def origin(self, h: int) -> int:
        return self.edges[h >> 1][h & 1]

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    @cached_property
    def pos(self) -> list[int]:
        p = [0] * (2 * len(self.edges))
        for rot in self.rotation:
            for i, h in enumerate(rot):
                p[h] = i
        return p

    @cached_property
    def adjacency(self) -> list[frozenset[int]]:
        adj = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return [frozenset(a) for a in adj]

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        idx = {}
        for e, (u, v) in enumerate(self.edges):
            idx[(u, v)] = e
            idx[(v, u)] = e
        return idx

    def edge_between(self, u: int, v: int) -> int | None:
        return self.edge_index.get((u, v))

    def neighbors_in_order(self, v: int) -> list[int]:
        return [self.origin(h ^ 1) for h in self.rotation[v]]

    @cached_property
    def ring_vertices(self) -> frozenset[int]:
        return frozenset(v for r in self.rings for v in r.vertex_walk)

    @cached_property
    def ring_edges(self) -> frozenset[int]:
        return frozenset(e for r in self.rings for e in self.faces[r.face_id].edge_ids())

    @cached_property
    def ring_of_vertex(self) -> dict[int, int]:
        return {v: i for i, r in enumerate(self.rings) for v in r.vertex_walk}

    def is_orientable_signature(self) -> bool:
        return all(s == 1 for s in self.signs)

    # faces and components

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        m2 = 2 * len(self.edges)
        used = set()
        out = []
        rot, pos, signs = self.rotation, self.pos, self.signs
        for h0 in range(m2):
            for o0 in (1, -1):
                if (h0, o0) in used:
                    continue
                darts = []
                verts = []
                h, o = h0, o0
                while True:
                    darts.append((h, o))
                    verts.append(self.origin(h))
                    a = h ^ 1
                    o = o * signs[h >> 1]
                    r = rot[self.origin(a)]
                    h = r[(pos[a] + o) % len(r)]
                    if (h, o) == (h0, o0):
                        break
                    if len(darts) > m2:
                        raise ValidationError("face-tracing", "walk did not close")
                for h, o in darts:
                    used.add((h, o))
                    used.add((h ^ 1, -o * signs[h >> 1]))
                out.append(Face(tuple(darts), tuple(verts)))
        for v in range(self.vertex_count):
            if not self.rotation[v]:
                out.append(Face((), (v,)))
        return tuple(out)

    @cached_property
    def face_of_state(self) -> dict[tuple[int, int], int]:
        """Map each departure state (h, o), and its reverse, to a face id."""
        out = {}
        for i, f in enumerate(self.faces):
            for h, o in f.darts:
                out[(h, o)] = i
                out[(h ^ 1, -o * self.signs[h >> 1])] = i
        return out

    def faces_at_vertex(self, v: int) -> list[int]:
        """Face ids of the corners at v, one entry per corner, in rotation order."""
        rot = self.rotation[v]
        if not rot:
            return [self.isolated_face(v)]
        out = []
        fs = self.face_of_state
        for i in range(len(rot)):
            # the corner between rot[i] and rot[i+1] is used by the state departing on rot[i+1]
            out.append(fs[(rot[(i + 1) % len(rot)], 1)])
        return out

    def isolated_face(self, v: int) -> int:
        for i, f in enumerate(self.faces):
            if not f.darts and f.vertices == (v,):
                return i
        raise KeyError(v)

    def match_face(self, walk: Sequence[int]) -> int | None:
        walk = tuple(walk)
        if not walk:
            return None
        if len(walk) == 1:
            v = walk[0]
            if 0 <= v < self.vertex_count and not self.rotation[v]:
                return self.isolated_face(v)
            return None
        rev = tuple(reversed(walk))
        candidates = [i for i, f in enumerate(self.faces) if f.length == len(walk)]
        for i in candidates:
            if _cyclic_match(self.faces[i].vertices, walk):
                return i
        for i in candidates:
            if _cyclic_match(self.faces[i].vertices, rev):
                return i
        return None

    @cached_property
    def component_of(self) -> list[int]:
        parent = list(range(self.vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
        roots = {}
        comp = []
        for v in range(self.vertex_count):
            r = find(v)
            if r not in roots:
                roots[r] = len(roots)
            comp.append(roots[r])
        return comp

    @cached_property
    def components(self) -> list[list[int]]:
        out: list[list[int]] = []
        for v, c in enumerate(self.component_of):
            if c == len(out):
                out.append([])
            out[c].append(v)
        return out

    def component_euler_genus(self) -> list[int]:
        """Euler genus of each component's 2-cell surface (surplus not included)."""
        k = len(self.components)
        nv = [0] * k
        ne = [0] * k
        nf = [0] * k
        comp = self.component_of
        for v in range(self.vertex_count):
            nv[comp[v]] += 1
        for u, _ in self.edges:
            ne[comp[u]] += 1
        for f in self.faces:
            nf[comp[f.vertices[0]]] += 1
        return [2 - nv[i] + ne[i] - nf[i] for i in range(k)]

    def component_is_orientable(self) -> list[bool]:
        """Whether each component's embedding can be switched to all-positive signs."""
        side = [0] * self.vertex_count
        seen = [False] * self.vertex_count
        ok = [True] * len(self.components)
        for start in range(self.vertex_count):
            if seen[start]:
                continue
            seen[start] = True
            side[start] = 1
            stack = [start]
            while stack:
                u = stack.pop()
                for h in self.rotation[u]:
                    e = h >> 1
                    w = self.origin(h ^ 1)
                    want = side[u] * self.signs[e]
                    if not seen[w]:
                        seen[w] = True
                        side[w] = want
                        stack.append(w)
                    elif side[w] != want:
                        ok[self.component_of[u]] = False
        return ok

    def summary(self) -> SurfaceSummary:
        return surface_summary(self)

    def replace(self, **kw) -> "EGraph":
        args = dict(
            vertex_count=self.vertex_count,
            edges=self.edges,
            rotation=self.rotation,
            signs=self.signs,
            rings=[r.vertex_walk for r in self.rings],
            genus_surplus=self.genus_surplus,
            lists=self.lists,
        )
        args.update(kw)
        return EGraph(**args)


def trace_faces(G: EGraph) -> list[Face]:
    return list(G.faces)


def surface_summary(G: EGraph) -> SurfaceSummary:
    h = len(G.components)
    g = G.genus_surplus + 2 * h - G.vertex_count + len(G.edges) - len(G.faces)
    return SurfaceSummary(h=h, g=g, r=len(G.rings), R=sum(r.order for r in G.rings))


# builders


def from_rotation_lists(
    rot_nbrs: Sequence[Sequence[int]],
    negative: Iterable[tuple[int, int]] = (),
    rings: Iterable = (),
    genus_surplus: int = 0,
    lists: dict[int, Iterable[int]] | None = None,
) -> EGraph:
    """Build an EGraph from cyclic neighbour lists.

    Edges are numbered in lexicographic order of (min, max) endpoint pairs.
    ``negative`` lists the vertex pairs whose edge carries sign -1.
    """
    n = len(rot_nbrs)
    pairs = sorted({(min(u, v), max(u, v)) for u in range(n) for v in rot_nbrs[u]})
    index = {p: i for i, p in enumerate(pairs)}
    for u in range(n):
        for v in rot_nbrs[u]:
            if u not in rot_nbrs[v]:
                raise ValidationError("rotation-symmetric", f"{u}-{v}")
    rotation = []
    for u in range(n):
        hs = []
        for v in rot_nbrs[u]:
            e = index[(min(u, v), max(u, v))]
            hs.append(2 * e + (0 if u < v else 1))
        rotation.append(hs)
    neg = {(min(u, v), max(u, v)) for u, v in negative}
    signs = [-1 if p in neg else 1 for p in pairs]
    return EGraph(n, pairs, rotation, signs, rings, genus_surplus,
                  None if lists is None else {v: frozenset(c) for v, c in lists.items()})


def from_planar_embedding(emb, rings: Iterable = (), lists=None) -> EGraph:
    """Build from a networkx PlanarEmbedding on nodes 0..n-1."""
    n = emb.number_of_nodes()
    rot = [list(emb.neighbors_cw_order(v)) if emb.degree(v) else [] for v in range(n)]
    return from_rotation_lists(rot, rings=rings, lists=lists)


def rotation_neighbor_lists(G: EGraph) -> list[list[int]]:
    return [G.neighbors_in_order(v) for v in range(G.vertex_count)]


# serialization


def parse_egr(text: str | bytes) -> EGraph:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n = None
    edges: dict[int, tuple[int, int, int]] = {}
    rotation: dict[int, list[int]] = {}
    rings: list[list[int]] = []
    surplus = 0
    lists: dict[int, frozenset[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        tag = parts[0]
        try:
            if tag == "V":
                if n is not None:
                    raise ParseError(lineno, "duplicate V line")
                n = int(parts[1])
            elif tag == "E":
                e, u, v, s = (int(x) for x in parts[1:5])
                if len(parts) != 5:
                    raise ValueError
                if e in edges:
                    raise ParseError(lineno, f"duplicate edge {e}")
                edges[e] = (u, v, s)
            elif tag == "R":
                v = int(parts[1])
                hs = [int(x) for x in parts[2].split(",")] if len(parts) > 2 and parts[2] else []
                if len(parts) > 3:
                    raise ValueError
                if v in rotation:
                    raise ParseError(lineno, f"duplicate rotation for vertex {v}")
                rotation[v] = hs
            elif tag == "RING":
                rings.append([int(x) for x in parts[1].split(",")])
                if len(parts) != 2:
                    raise ValueError
            elif tag == "SURPLUS":
                surplus = int(parts[1])
            elif tag == "L":
                v = int(parts[1])
                lists[v] = frozenset(int(x) for x in parts[2].split(","))
                if len(parts) != 3:
                    raise ValueError
            else:
                raise ParseError(lineno, f"unknown record {tag!r}")
        except ParseError:
            raise
        except (ValueError, IndexError):
            raise ParseError(lineno, f"malformed {tag} record") from None
    if n is None:
        raise ParseError(0, "missing V line")
    if n == 0:
        raise ValidationError("non-null required")
    if sorted(edges) != list(range(len(edges))):
        raise ValidationError("edge-ids", "edge ids must be 0..E-1")
    order = [edges[i] for i in range(len(edges))]
    rot = [rotation.get(v, []) for v in range(n)]
    if any(v >= n or v < 0 for v in rotation):
        raise ValidationError("rotation-vertex", "rotation for unknown vertex")
    return EGraph(n, [(u, v) for u, v, _ in order], rot, [s for _, _, s in order],
                  rings, surplus, lists or None)


def serialize_egr(G: EGraph) -> str:
    if G.vertex_count == 0:
        raise ValidationError("non-null required")
    out = [f"V {G.vertex_count}"]
    for e, (u, v) in enumerate(G.edges):
        out.append(f"E {e} {u} {v} {G.signs[e]}")
    for v, rot in enumerate(G.rotation):
        out.append(f"R {v} {','.join(map(str, rot))}" if rot else f"R {v}")
    for r in G.rings:
        out.append("RING " + ",".join(map(str, r.vertex_walk)))
    if G.genus_surplus:
        out.append(f"SURPLUS {G.genus_surplus}")
    if G.lists:
        for v in sorted(G.lists):
            out.append(f"L {v} {','.join(map(str, sorted(G.lists[v])))}")
    return "\n".join(out) + "\n"


# canonical forms


def canonical_code(G: EGraph, roots: Iterable[tuple[int, int]] | None = None) -> tuple:
    """A relabelling- and switching-invariant code for the embedded graph with rings.

    Two EGraphs have equal codes iff they are isomorphic as embedded graphs
    (possibly after mirror reflection), with rings mapped to rings.
    Components are coded separately and sorted.
    """
    if roots is not None:
        roots = list(roots)
        return min(_code_from_root(G, h, o) for h, o in roots)
    parts = []
    for comp in G.components:
        if len(comp) == 1 and not G.rotation[comp[0]]:
            parts.append(((-1, int(comp[0] in G.ring_vertices)),))
            continue
        # only roots with the least isomorphism-invariant signature can give the minimum
        fos = G.face_of_state
        faces = G.faces
        sig = {}
        for v in comp:
            dv = len(G.rotation[v])
            rv = v in G.ring_of_vertex
            for h in G.rotation[v]:
                dw = len(G.rotation[G.origin(h ^ 1)])
                for o in (1, -1):
                    sig[(h, o)] = (dv, dw, rv, faces[fos[(h, o)]].length, faces[fos[(h, -o)]].length)
        low = min(sig.values())
        best = None
        for (h, o), sg in sorted(sig.items()):
            if sg != low:
                continue
            code = _code_from_root(G, h, o, best)
            if code is not None and (best is None or code < best):
                best = code
        parts.append(best)
    parts.sort()
    return tuple(parts)


def _code_from_root(G: EGraph, h0: int, o0: int, bound=None):
    label: dict[int, int] = {}
    orient: dict[int, int] = {}
    entry: dict[int, int] = {}
    v0 = G.origin(h0)
    label[v0] = 0
    orient[v0] = o0
    entry[v0] = h0
    queue = [v0]
    code: list = []
    qi = 0
    ring_of = G.ring_of_vertex
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        rot = G.rotation[v]
        d = len(rot)
        start = G.pos[entry[v]]
        o = orient[v]
        row = [int(v in ring_of)]
        for k in range(d):
            h = rot[(start + o * k) % d]
            w = G.origin(h ^ 1)
            s = G.signs[h >> 1]
            if w not in label:
                label[w] = len(label)
                orient[w] = o * s
                entry[w] = h ^ 1
                queue.append(w)
            twist = o * s * orient[w]
            row.append((label[w], twist))
        code.append(tuple(row))
        if bound is not None and len(bound) >= len(code):
            pref = tuple(code)
            bpref = bound[: len(code)]
            if pref > bpref:
                return None
    rings = []
    for r in G.rings:
        if any(v in label for v in r.vertex_walk):
            rings.append(tuple(sorted(label[v] for v in r.vertex_walk)))
    return tuple(code) + (("rings",) + tuple(sorted(rings)),)


def are_isomorphic(G1: EGraph, G2: EGraph) -> bool:
    if (G1.vertex_count, len(G1.edges), len(G1.rings)) != (G2.vertex_count, len(G2.edges), len(G2.rings)):
        return False
    if G1.genus_surplus != G2.genus_surplus:
        return False
    return canonical_code(G1) == canonical_code(G2)


# surgery


@dataclass
class CutResult:
    graph: EGraph
    one_sided: bool
    side_vertices: tuple[tuple[int, ...], ...]  # ((left copies), (right copies)); one-sided: (all copies,)
    face_rep: list[int]  # per face of the original graph: a vertex of the cut graph on that face


def _cycle_edges(G: EGraph, cycle: Sequence[int]) -> list[int]:
    n = len(cycle)
    if n < 3 or len(set(cycle)) != n:
        raise SurgeryError("cycle must list at least three distinct vertices")
    out = []
    for i in range(n):
        e = G.edge_between(cycle[i], cycle[(i + 1) % n])
        if e is None:
            raise SurgeryError(f"no edge {cycle[i]}-{cycle[(i + 1) % n]}")
        out.append(e)
    return out


def cycle_sign(G: EGraph, cycle: Sequence[int]) -> int:
    s = 1
    for e in _cycle_edges(G, cycle):
        s *= G.signs[e]
    return s


def _cut_along(G: EGraph, cycle: Sequence[int]) -> CutResult:
    """Cut the capped surface open along a cycle; rings are not carried over."""
    C = list(cycle)
    n = len(C)
    ce = _cycle_edges(G, C)
    V, m = G.vertex_count, len(G.edges)
    index = {c: i for i, c in enumerate(C)}

    def dart_at(e, v):
        return 2 * e + (0 if G.edges[e][0] == v else 1)

    a = [dart_at(ce[i - 1], C[i]) for i in range(n)]
    b = [dart_at(ce[i], C[i]) for i in range(n)]
    o = [1] * (n + 1)
    for i in range(n):
        o[i + 1] = o[i] * G.signs[ce[i]]
    tau = o[n]

    def copy(i, side):
        return C[i] if side == 0 else V + i

    # side of every non-cycle dart at a cycle vertex; L is side 0
    dart_side: dict[int, int] = {}
    x_is_left = []
    for i in range(n):
        rot = G.rotation[C[i]]
        d = len(rot)
        pa, pb = G.pos[a[i]], G.pos[b[i]]
        left_x = o[i] == -1
        x_is_left.append(left_x)
        k = (pa + 1) % d
        while k != pb:
            dart_side[rot[k]] = 0 if left_x else 1
            k = (k + 1) % d
        k = (pb + 1) % d
        while k != pa:
            dart_side[rot[k]] = 1 if left_x else 0
            k = (k + 1) % d

    edges = [list(p) for p in G.edges] + [[0, 0] for _ in range(n)]
    signs = list(G.signs) + [G.signs[ce[i]] for i in range(n)]
    for h, side in dart_side.items():
        if side == 1:
            edges[h >> 1][h & 1] = V + index[G.origin(h)]
    # copies of cycle edges: left copy keeps the id, right copy gets m + i
    att_a = {}
    att_b = {}
    for i in range(n):
        j = (i + 1) % n
        flip = 1 if (i == n - 1 and tau == -1) else 0
        for side, eid in ((0, ce[i]), (1, m + i)):
            far = side ^ flip
            bd = 2 * eid + (b[i] & 1)
            ad = 2 * eid + (a[j] & 1)
            edges[eid][b[i] & 1] = copy(i, side)
            edges[eid][a[j] & 1] = copy(j, far)
            att_b[(i, side)] = bd
            att_a[(j, far)] = ad
    rotation = [list(r) for r in G.rotation] + [[] for _ in range(n)]
    for i in range(n):
        rot = G.rotation[C[i]]
        d = len(rot)
        pa, pb = G.pos[a[i]], G.pos[b[i]]
        xs = []
        k = (pa + 1) % d
        while k != pb:
            xs.append(rot[k])
            k = (k + 1) % d
        ys = []
        k = (pb + 1) % d
        while k != pa:
            ys.append(rot[k])
            k = (k + 1) % d
        for side in (0, 1):
            ad, bd = att_a[(i, side)], att_b[(i, side)]
            uses_x = x_is_left[i] == (side == 0)
            rotation[copy(i, side)] = [ad] + xs + [bd] if uses_x else [bd] + ys + [ad]
    H = EGraph(V + n, [tuple(p) for p in edges], rotation, signs, (), G.genus_surplus)

    face_rep = []
    for f in G.faces:
        if not f.darts:
            face_rep.append(f.vertices[0])
            continue
        h0, o0 = f.darts[0]
        w = G.origin(h0)
        if w not in index:
            face_rep.append(w)
            continue
        i = index[w]
        x = f.darts[-1][0] ^ 1
        p = G.pos[x] if o0 == 1 else G.pos[h0]
        d = len(G.rotation[w])
        pa, pb = G.pos[a[i]], G.pos[b[i]]
        in_x = (p - pa) % d < (pb - pa) % d
        side = 0 if in_x == x_is_left[i] else 1
        face_rep.append(copy(i, side))
    if tau == 1:
        sides = (tuple(copy(i, 0) for i in range(n)), tuple(copy(i, 1) for i in range(n)))
    else:
        sides = (tuple(copy(i, 0) for i in range(n)) + tuple(copy(i, 1) for i in range(n)),)
    return CutResult(H, tau == -1, sides, face_rep)


def cut_cycle(G: EGraph, C: Sequence[int]) -> EGraph:
    """Cut the surface open along a non-null-homotopic cycle C disjoint from the rings."""
    from .topology import is_null_homotopic

    C = list(C)
    if set(C) & G.ring_vertices:
        raise SurgeryError("cycle meets a ring")
    if is_null_homotopic(G, C, "sigma"):
        raise SurgeryError("cut-requires-noncontractible")
    res = _cut_along(G, C)
    H = res.graph
    rings = [r.vertex_walk for r in G.rings] + [list(s) for s in res.side_vertices]
    return EGraph(H.vertex_count, H.edges, H.rotation, H.signs, rings, H.genus_surplus,
                  _extend_lists(G, C, H.vertex_count))


def _extend_lists(G: EGraph, C: Sequence[int], n_new: int):
    if G.lists is None:
        return None
    out = dict(G.lists)
    for i, c in enumerate(C):
        if c in G.lists:
            out[G.vertex_count + i] = G.lists[c]
    return out


def curve_cut(G: EGraph) -> EGraph:
    if G.genus_surplus == 0:
        raise SurgeryError("embedding-is-2-cell")
    return G.replace(genus_surplus=G.genus_surplus - 1)


def restrict_to_vertices(G: EGraph, keep: Iterable[int], rings: Iterable[Sequence[int]] = (),
                         origin: Sequence[int] | None = None) -> tuple[EGraph, list[int]]:
    """Restrict to a union of components.  Returns (graph, old vertex id per new id).

    New ids follow the order of ``origin[v]`` (defaults to the old id).
    """
    keep = set(keep)
    key = (lambda v: (origin[v], v)) if origin is not None else (lambda v: v)
    verts = sorted(keep, key=key)
    vmap = {v: i for i, v in enumerate(verts)}
    emap = {}
    new_edges = []
    new_signs = []
    elist = [e for e, (u, v) in enumerate(G.edges) if u in keep]
    for e in elist:
        u, v = G.edges[e]
        if v not in keep:
            raise SurgeryError("restriction must be a union of components")
    ekey = (lambda e: tuple(sorted((origin[G.edges[e][0]], origin[G.edges[e][1]]))) + (e,)) if origin is not None else (lambda e: e)
    for e in sorted(elist, key=ekey):
        emap[e] = len(new_edges)
        u, v = G.edges[e]
        new_edges.append((vmap[u], vmap[v]))
        new_signs.append(G.signs[e])
    rotation = [[2 * emap[h >> 1] + (h & 1) for h in G.rotation[v]] for v in verts]
    new_rings = [[vmap[v] for v in walk] for walk in rings]
    lists = None
    if G.lists is not None:
        lists = {vmap[v]: c for v, c in G.lists.items() if v in keep}
    return EGraph(len(verts), new_edges, rotation, new_signs, new_rings, 0, lists), verts


def excise_cylinder(G: EGraph, C1: Sequence[int], C2: Sequence[int],
                    return_map: bool = False):
    """Return the part of G drawn in the cylinder cobounded by C1 and C2.

    The result carries exactly the rings [C1, C2] (in that order) and its
    vertices are numbered in the order of the original ids.
    """
    C1, C2 = list(C1), list(C2)
    if set(C1) & set(C2):
        raise SurgeryError("not-a-cylinder-pair")
    ring_walk_sets = {frozenset(r.vertex_walk): r for r in G.rings}
    H = G
    origin = list(range(G.vertex_count))
    # per cycle: list of candidate boundary vertex sets in the current graph
    boundaries = []
    for C in (C1, C2):
        _cycle_edges(H, C)
        if frozenset(C) in ring_walk_sets and len(C) == ring_walk_sets[frozenset(C)].order:
            boundaries.append([("ring", tuple(C))])
            continue
        res = _cut_along(H, C)
        if res.one_sided:
            raise SurgeryError("not-a-cylinder-pair")
        n0 = H.vertex_count
        H = res.graph
        origin = origin + [origin[C[i]] for i in range(len(C))]
        assert len(origin) == H.vertex_count == n0 + len(C)
        boundaries.append([("cut", s) for s in res.side_vertices])
    other_ring_vertices = [r.vertex_walk[0] for r in G.rings
                           if not any(b[0] == "ring" and set(b[1]) == set(r.vertex_walk)
                                      for bl in boundaries for b in bl)]
    comp = H.component_of
    genus = H.component_euler_genus()
    for b1 in boundaries[0]:
        for b2 in boundaries[1]:
            c = comp[b1[1][0]]
            if comp[b2[1][0]] != c or genus[c] != 0:
                continue
            holes_here = [b for bl in boundaries for b in bl if comp[b[1][0]] == c]
            if len(holes_here) != 2:
                continue
            if any(comp[v] == c for v in other_ring_vertices):
                continue
            keep = [v for v in range(H.vertex_count) if comp[v] == c]
            walks = []
            for b in (b1, b2):
                fid = H.match_face(b[1])
                if fid is None:
                    break
                walks.append(H.faces[fid].vertices)
            else:
                out, verts = restrict_to_vertices(H, keep, walks, origin)
                old_ids = [origin[v] for v in verts]
                if G.lists is not None:
                    out = out.replace(lists={i: G.lists[o] for i, o in enumerate(old_ids) if o in G.lists})
                return (out, old_ids) if return_map else out
    raise SurgeryError("not-a-cylinder-pair")


def planarize_crossings(G: EGraph, crossings: Sequence[tuple[int, int]]) -> EGraph:
    """Replace each crossing edge pair by a new degree-4 vertex.

    ``G`` carries the rotation system of the drawing; each crossing (e, f)
    with e = u1v1 and f = u2v2 becomes a vertex x with rotation u1, u2, v1, v2.
    Edge e keeps its id for the u1 half and f for the u2 half.
    """
    used = set()
    for e, f in crossings:
        for x in (e, f):
            if x in used:
                raise SurgeryError(f"edge {x} crosses more than one edge")
            used.add(x)
        if len(set(G.edges[e]) | set(G.edges[f])) != 4:
            raise SurgeryError(f"edges {e} and {f} share an endpoint")
    V, m = G.vertex_count, len(G.edges)
    edges = [list(p) for p in G.edges]
    signs = list(G.signs)
    rotation = [list(r) for r in G.rotation]
    for k, (e, f) in enumerate(crossings):
        x = V + k
        u1, v1 = G.edges[e]
        u2, v2 = G.edges[f]
        e2, f2 = len(edges), len(edges) + 1
        # e = (u1, x) keeps dart 2e at u1; the dart 2e+1 moves to x
        edges[e] = [u1, x]
        edges.append([x, v1])
        edges[f] = [u2, x]
        edges.append([x, v2])
        signs.extend([1, 1])
        # dart 2e+1 was at v1; replace it there by the v1 end of the new edge
        rv = rotation[v1]
        rv[rv.index(2 * e + 1)] = 2 * e2 + 1
        rv = rotation[v2]
        rv[rv.index(2 * f + 1)] = 2 * f2 + 1
        rotation.append([2 * e + 1, 2 * f + 1, 2 * e2, 2 * f2])
    return EGraph(V + len(crossings), [tuple(p) for p in edges], rotation, signs, (),
                  G.genus_surplus, G.lists)


def subgraph_embedding(G: EGraph, vertices: Iterable[int], edges: Iterable[int]) -> tuple[EGraph, list[int]]:
    """Embedding induced on a subgraph (vertex ids and edge ids of G).

    Deleted edges merge faces.  Genus the smaller rotation system no longer
    sees is carried in ``genus_surplus`` so the surface is unchanged.  Rings
    lying entirely in the subgraph are kept.  Returns (graph, old id per new id).
    """
    keep = sorted(set(vertices))
    vmap = {v: i for i, v in enumerate(keep)}
    elist = sorted(set(edges))
    for e in elist:
        u, v = G.edges[e]
        if u not in vmap or v not in vmap:
            raise SurgeryError(f"edge {e} has an endpoint outside the subgraph")
    emap = {e: i for i, e in enumerate(elist)}
    new_edges = [(vmap[G.edges[e][0]], vmap[G.edges[e][1]]) for e in elist]
    signs = [G.signs[e] for e in elist]
    rotation = [[2 * emap[h >> 1] + (h & 1) for h in G.rotation[v] if (h >> 1) in emap] for v in keep]
    kept_edges = set(elist)
    rings = []
    for r in G.rings:
        walk = r.vertex_walk
        if all(v in vmap for v in walk) and all(
            G.edge_between(walk[i], walk[(i + 1) % len(walk)]) in kept_edges
            for i in range(len(walk)) if len(walk) > 1
        ):
            rings.append([vmap[v] for v in walk])
    lists = None if G.lists is None else {vmap[v]: c for v, c in G.lists.items() if v in vmap}
    H = EGraph(len(keep), new_edges, rotation, signs, rings, 0, lists)
    lost = G.summary().g - H.summary().g
    if lost > 0:
        H = H.replace(genus_surplus=lost)
    return H, keep
