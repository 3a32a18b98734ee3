import networkx as nx
import pytest
from hypothesis import given, strategies as st

from surfcolor.corpus import _add_path, _faces
from surfcolor.families import (cylinder_grid, grid_id, isolated_vertex, k7_torus, layer, planar_k4,
                                torus_grid, wheel)
from surfcolor.surface_core import from_rotation_lists, rotation_neighbor_lists, trace_faces
from surfcolor.topology import (INF, SIGMA, SIGMA_HAT, Frame, all_cycles, build_frame,
                                check_frame_optimal, distance, edge_width, edge_width_exhaustive,
                                enumerate_disk_curves, frame_subgraph, is_flat_separation, is_frame,
                                is_null_homotopic, optimize_frame, segment_report, segments)

from conftest import plane_canvases, plane_maps


def _cylinder_frame(G, path):
    ring_edges = set(G.ring_edges)
    es = {G.edge_between(path[i], path[i + 1]) for i in range(len(path) - 1)}
    verts = set(G.ring_vertices) | set(path)
    return Frame(frozenset(ring_edges | es), frozenset(verts))


# homotopy

@given(plane_maps())
def test_everything_contractible_in_sphere(G):
    for cyc in all_cycles(G, 6):
        assert is_null_homotopic(G, cyc, SIGMA)


def test_cylinder_middle_cycle():
    G = cylinder_grid(4, 10)
    assert not is_null_homotopic(G, layer(4, 5), SIGMA)
    assert is_null_homotopic(G, layer(4, 5), SIGMA_HAT)


def test_k7_triangle_not_contractible():
    G = k7_torus()
    facial = {frozenset(f.vertices) for f in G.faces}
    tri = next(c for c in all_cycles(G, 3) if frozenset(c) not in facial)
    assert not is_null_homotopic(G, tri, SIGMA_HAT)


@given(st.sampled_from([cylinder_grid(3, 4), cylinder_grid(4, 3), torus_grid(3, 4)]), st.data())
def test_disk_in_sigma_is_disk_in_sigma_hat(G, data):
    cycles = list(all_cycles(G, 6))
    cyc = data.draw(st.sampled_from(cycles))
    if is_null_homotopic(G, cyc, SIGMA):
        assert is_null_homotopic(G, cyc, SIGMA_HAT)


@given(plane_canvases())
def test_ringless_facial_cycles_contractible(G):
    ring_face = G.rings[0].face_id
    for i, f in enumerate(G.faces):
        if i != ring_face and len(set(f.vertices)) == f.length >= 3:
            assert is_null_homotopic(G, f.vertices, SIGMA_HAT)


# distances and edge-width

def test_distances():
    G = cylinder_grid(4, 10)
    assert distance(G, [0, 1], [1, 2]) == 0
    assert distance(G, layer(4, 0), layer(4, 9)) == 9
    two = from_rotation_lists([[1], [0], [3], [2]])
    assert distance(two, [0], [3]) == INF


def test_edge_width_planar_no_rings():
    assert edge_width(planar_k4()) == INF


def test_edge_width_c4xp10():
    assert edge_width(cylinder_grid(4, 10)) == 4


def test_edge_width_k7():
    G = k7_torus()
    assert edge_width(G) == 3 == edge_width_exhaustive(G)


@pytest.mark.parametrize("n", range(2, 7))
def test_edge_width_cylinder_matches_exhaustive(n):
    G = cylinder_grid(4, n)
    assert edge_width(G) == edge_width_exhaustive(G) == min(4, n - 1)


@pytest.mark.parametrize("m,n", [(3, 3), (3, 4), (4, 3)])
def test_edge_width_torus_grid_matches_exhaustive(m, n):
    G = torus_grid(m, n)
    assert edge_width(G) == edge_width_exhaustive(G) == min(m, n)


def _add_chord(G, data):
    rot = rotation_neighbor_lists(G)
    rings = {frozenset(r.vertex_walk) for r in G.rings}
    options = []
    for walk in _faces(rot):
        if frozenset(walk) in rings or len(walk) < 4:
            continue
        for i in range(len(walk)):
            for j in range(i + 2, len(walk)):
                if walk[j] not in rot[walk[i]] and walk[i] != walk[j]:
                    options.append((walk, i, j))
    walk, i, j = data.draw(st.sampled_from(options))
    return from_rotation_lists(_add_path(rot, walk, i, j, 0), rings=[r.vertex_walk for r in G.rings])


@given(st.integers(3, 5), st.integers(2, 6), st.data())
def test_edge_width_monotone_under_edge_addition(m, n, data):
    G = cylinder_grid(m, n)
    H = _add_chord(G, data)
    assert len(H.edges) == len(G.edges) + 1
    assert edge_width(H) <= edge_width(G)


# frames

def test_frame_k4_outer_ring():
    G = planar_k4(True)
    F = build_frame(G)
    assert is_frame(G, F)
    H, _ = frame_subgraph(G, F)
    # the ring face and exactly one other
    assert len(trace_faces(H)) == 2


def test_frame_cylinder_is_rings_plus_path():
    G = cylinder_grid(4, 10)
    F = optimize_frame(G, build_frame(G))
    assert is_frame(G, F)
    assert len(F.edges) == 8 + 9
    segs = segments(G, F)
    assert sum(s.kind == "non-ring" for s in segs) == 1
    rep = segment_report(G, F)
    assert rep.nonring_count == 1 and rep.bound == 2


def test_frame_isolated_vertex():
    G = isolated_vertex()
    F = build_frame(G)
    assert F.vertices == frozenset({0}) and not F.edges
    assert segment_report(G, F).nonring_count == 0


def test_frame_single_ring_disk_no_segments():
    G = wheel(5)
    F = optimize_frame(G, build_frame(G))
    assert segment_report(G, F).nonring_count == 0


def test_torus_frame_segment_bound():
    G = torus_grid(4, 4)
    F = optimize_frame(G, build_frame(G))
    rep = segment_report(G, F)
    assert rep.bound == 4 and rep.nonring_count <= 4


def test_detour_frame_is_improved():
    G = cylinder_grid(4, 4)
    zigzag = [grid_id(0, 0, 4), grid_id(0, 1, 4), grid_id(1, 1, 4), grid_id(1, 2, 4), grid_id(1, 3, 4)]
    F = _cylinder_frame(G, zigzag)
    assert is_frame(G, F)
    v = check_frame_optimal(G, F)
    assert v is not None and v.condition in ("O1", "O2")
    F2 = optimize_frame(G, F)
    assert is_frame(G, F2) and check_frame_optimal(G, F2) is None
    assert len(F2.edges) == 8 + 3


def test_optimal_frame_unchanged():
    G = cylinder_grid(4, 4)
    F = _cylinder_frame(G, [grid_id(0, j, 4) for j in range(4)])
    assert check_frame_optimal(G, F) is None
    assert optimize_frame(G, F) == F


def test_cycle_with_ring_frame_vacuous():
    G = wheel(4)
    ring_only = Frame(frozenset(G.ring_edges), frozenset(G.ring_vertices))
    assert is_frame(G, ring_only)
    assert check_frame_optimal(G, ring_only) is None


def test_frame_serialization():
    G = cylinder_grid(3, 2)
    F = build_frame(G)
    assert F.serialize().startswith("FRAME E ")
    assert sorted(int(x) for x in F.serialize().split()[2:]) == sorted(F.edges)


def test_not_a_frame_when_ring_missing():
    G = cylinder_grid(4, 3)
    assert not is_frame(G, Frame(frozenset(), frozenset()))


@given(plane_canvases(n_max=8))
def test_optimized_frames_on_plane_canvases(G):
    F = optimize_frame(G, build_frame(G))
    assert is_frame(G, F)
    assert check_frame_optimal(G, F) is None
    H, _ = frame_subgraph(G, F)
    # one face of F besides the ring face per component
    assert len(H.faces) == 2 or H.vertex_count == 1


@given(st.sampled_from([(3, 3), (3, 4), (4, 4), (4, 5), (5, 3)]))
def test_frame_tori_segment_bound(mn):
    G = torus_grid(*mn)
    F = optimize_frame(G, build_frame(G))
    assert is_frame(G, F) and check_frame_optimal(G, F) is None
    H, _ = frame_subgraph(G, F)
    assert len(H.faces) == 1
    assert segment_report(G, F).within_bound


@given(plane_canvases(n_max=8))
def test_segments_partition_frame(G):
    F = optimize_frame(G, build_frame(G))
    segs = segments(G, F)
    seen = [e for s in segs for e in s.edges]
    assert sorted(seen) == sorted(F.edges)
    for s in segs:
        if s.kind == "non-ring":
            assert not set(s.edges) & G.ring_edges


# curves and flat separations

def test_k4_curve_around_center():
    G = planar_k4(True)
    found = {tuple(sorted(c.vertices)): inside for c, inside in enumerate_disk_curves(G, 3)
             if len(c.vertices) == 3}
    assert found[(0, 1, 2)] == frozenset({3})


def test_curve_serialization():
    G = planar_k4(True)
    c, _ = next(iter(enumerate_disk_curves(G, 3)))
    text = c.serialize().split()
    assert text[0] == "CURVE" and len(text) == 1 + 2 * len(c.vertices)


def test_cylinder_meridians_not_disk_bounding():
    G = cylinder_grid(4, 10)
    layers = [frozenset(layer(4, j)) for j in range(10)]
    for c, _ in enumerate_disk_curves(G, 4):
        assert frozenset(c.vertices) not in layers


@given(plane_canvases(n_max=7))
def test_disk_curve_interiors_avoid_ring(G):
    for c, inside in enumerate_disk_curves(G, 4):
        assert not inside & G.ring_vertices
        assert not inside & set(c.vertices)
        # nothing inside is adjacent to anything outside the closed disk
        closed = inside | set(c.vertices)
        for v in inside:
            assert G.adjacency[v] <= closed


def test_flat_separation_whole_disk():
    G = planar_k4(True)
    assert is_flat_separation(G, range(4), G.ring_vertices) is not None


def test_flat_separation_rejects_crossing_edge():
    G = planar_k4(True)
    # 3 is adjacent to 1, which is in B - A
    assert is_flat_separation(G, {0, 3}, {0, 1, 2}) is None


def test_flat_separation_star():
    G = wheel(5)
    hub = next(v for v in range(G.vertex_count) if v not in G.ring_vertices)
    leaves = set(G.adjacency[hub])
    sep = is_flat_separation(G, leaves | {hub}, set(range(G.vertex_count)) - {hub}, max_len=5)
    assert sep is not None and sep.witness is not None


def test_all_cycles_bound():
    G = cylinder_grid(4, 3)
    H = nx.Graph(G.edges)
    assert sum(1 for _ in all_cycles(G, 4)) == sum(1 for c in nx.simple_cycles(H, length_bound=4) if len(c) >= 3)
