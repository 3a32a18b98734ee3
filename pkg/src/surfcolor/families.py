"""Named embedded graphs used throughout the tests and demos."""

from __future__ import annotations

from .surface_core import EGraph, from_rotation_lists


def planar_k4(outer_ring: bool = False) -> EGraph:
    # vertex 3 is the centre of the outer triangle 0, 1, 2
    rot = [[1, 3, 2], [2, 3, 0], [0, 3, 1], [0, 1, 2]]
    G = from_rotation_lists(rot)
    if outer_ring:
        G = G.replace(rings=[(0, 1, 2)])
    return G


def k5_torus() -> EGraph:
    # found by local search over rotation systems; 5 faces, Euler genus 2
    rot = [[1, 2, 3, 4], [0, 3, 4, 2], [0, 1, 3, 4], [0, 1, 4, 2], [0, 1, 2, 3]]
    return from_rotation_lists(rot)


def k6_projective() -> EGraph:
    # signed rotation system with 10 triangular faces, Euler genus 1
    rot = [[1, 2, 4, 5, 3], [0, 3, 4, 5, 2], [0, 1, 5, 3, 4], [0, 1, 4, 2, 5],
           [0, 5, 1, 3, 2], [0, 4, 1, 2, 3]]
    neg = [(0, 3), (0, 4), (1, 3), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]
    return from_rotation_lists(rot, negative=neg)


def k7_torus() -> EGraph:
    rot = [[(i + d) % 7 for d in (1, 3, 2, 6, 4, 5)] for i in range(7)]
    return from_rotation_lists(rot)


def grid_id(i: int, j: int, m: int) -> int:
    return j * m + (i % m)


def cylinder_grid(m: int, n: int, rings: bool = True) -> EGraph:
    """C_m x P_n drawn as n concentric m-cycles; ring 0 is the innermost cycle."""
    if m < 3 or n < 1:
        raise ValueError("need m >= 3 and n >= 1")
    rot = []
    for j in range(n):
        for i in range(m):
            nb = []
            if j + 1 < n:
                nb.append(grid_id(i, j + 1, m))
            nb.append(grid_id(i + 1, j, m))
            if j > 0:
                nb.append(grid_id(i, j - 1, m))
            nb.append(grid_id(i - 1, j, m))
            rot.append(nb)
    ring_walks = []
    if rings:
        ring_walks = [tuple(grid_id(i, 0, m) for i in range(m))]
        if n > 1:
            ring_walks.append(tuple(grid_id(i, n - 1, m) for i in range(m)))
    return from_rotation_lists(rot, rings=ring_walks)


def layer(m: int, j: int) -> list[int]:
    return [grid_id(i, j, m) for i in range(m)]


def torus_grid(m: int, n: int) -> EGraph:
    """C_m x C_n on the torus (the cylinder with its end cycles joined)."""
    if m < 3 or n < 3:
        raise ValueError("need m, n >= 3")
    rot = []
    for j in range(n):
        for i in range(m):
            rot.append([grid_id(i, (j + 1) % n, m), grid_id(i + 1, j, m),
                        grid_id(i, (j - 1) % n, m), grid_id(i - 1, j, m)])
    return from_rotation_lists(rot)


def wheel(k: int, ring: bool = True) -> EGraph:
    """Rim cycle 0..k-1 with hub k; the rim is the outer face."""
    rot = [[(i + 1) % k, k, (i - 1) % k] for i in range(k)]
    rot.append(list(range(k)))
    G = from_rotation_lists(rot)
    if ring:
        G = G.replace(rings=[tuple(range(k))])
    return G


def cycle_graph(k: int, ring: bool = False) -> EGraph:
    rot = [[(i + 1) % k, (i - 1) % k] for i in range(k)]
    G = from_rotation_lists(rot)
    if ring:
        G = G.replace(rings=[tuple(range(k))])
    return G


def isolated_vertex(ring: bool = True) -> EGraph:
    G = EGraph(1, [], [[]])
    return G.replace(rings=[(0,)]) if ring else G
