from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from surfcolor.families import (cycle_graph, cylinder_grid, isolated_vertex, k5_torus, k6_projective,
                                k7_torus, layer, planar_k4, torus_grid)
from surfcolor.surface_core import (EGraph, ParseError, SurgeryError, ValidationError, are_isomorphic,
                                    canonical_code, curve_cut, cut_cycle, cycle_sign, excise_cylinder,
                                    from_planar_embedding, from_rotation_lists, parse_egr,
                                    planarize_crossings, serialize_egr, surface_summary, trace_faces)
from surfcolor.suites import oriented_crossing
from surfcolor.topology import SIGMA_HAT, shortest_nonnull_cycle

from conftest import plane_canvases, plane_maps, relabel


def euler_genus(G):
    # independent evaluation of the Euler formula on the traced faces
    h = nx.number_connected_components(_nx(G))
    return G.genus_surplus + 2 * h - G.vertex_count + len(G.edges) - len(trace_faces(G))


def _nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.vertex_count))
    H.add_edges_from(G.edges)
    return H


# parsing and serialization

def test_parse_isolated_ring_vertex():
    G = parse_egr("V 1\nR 0\nRING 0\n")
    assert G.vertex_count == 1 and len(G.edges) == 0
    assert [r.vertex_walk for r in G.rings] == [(0,)]


def test_parse_k4_planar():
    G = parse_egr(serialize_egr(planar_k4()))
    assert surface_summary(G).g == 0


def test_ring_walk_must_be_a_face():
    text = serialize_egr(planar_k4()) + "RING 0,1\n"
    with pytest.raises(ValidationError) as err:
        parse_egr(text)
    assert err.value.invariant == "ring-not-a-face"


def test_parse_error_has_line_number():
    with pytest.raises(ParseError) as err:
        parse_egr("V 2\nE 0 0 1 1\nX 1\n")
    assert err.value.lineno == 3


def test_parse_rejects_bad_half_edge_origin():
    with pytest.raises(ValidationError) as err:
        parse_egr("V 3\nE 0 0 1 1\nE 1 1 2 1\nE 2 0 2 1\nR 0 0,5\nR 1 1,2\nR 2 3,4\n")
    assert err.value.invariant == "half-edge-origin"


def test_parse_rejects_multi_edges_and_loops():
    with pytest.raises(ValidationError):
        EGraph(2, [(0, 1), (1, 0)], [[0, 3], [1, 2]])
    with pytest.raises(ValidationError):
        EGraph(1, [(0, 0)], [[0, 1]])


def test_serialize_empty_graph_rejected():
    with pytest.raises(ValidationError, match="non-null required"):
        serialize_egr(EGraph(0, [], []))


@pytest.mark.parametrize("G", [planar_k4(), cylinder_grid(4, 10), k6_projective(), isolated_vertex()],
                         ids=["k4", "c4xp10", "k6", "k1"])
def test_round_trip_examples(G):
    assert parse_egr(serialize_egr(G)) == G


def test_lists_and_surplus_round_trip():
    G = planar_k4().replace(lists={0: {1, 2}, 3: {4}}, genus_surplus=2)
    H = parse_egr(serialize_egr(G))
    assert H == G and H.genus_surplus == 2 and H.lists[3] == frozenset({4})


@given(plane_canvases())
def test_round_trip_property(G):
    assert parse_egr(serialize_egr(G)) == G


# face tracing and genus

def test_k4_faces():
    faces = trace_faces(planar_k4())
    assert [f.length for f in faces] == [3, 3, 3, 3]


def test_k7_torus_faces():
    # 7 - 21 + F = 0
    assert len(trace_faces(k7_torus())) == 14


def test_single_edge_one_face():
    G = from_rotation_lists([[1], [0]])
    assert [f.length for f in G.faces] == [2]


@pytest.mark.parametrize("G,g", [(planar_k4(), 0), (k5_torus(), 2), (k6_projective(), 1), (k7_torus(), 2)],
                         ids=["k4", "k5", "k6", "k7"])
def test_named_genera(G, g):
    s = surface_summary(G)
    assert (s.g, s.h, s.r, s.R) == (g, 1, 0, 0)
    assert euler_genus(G) == g


def test_summary_counts_rings():
    s = surface_summary(cylinder_grid(4, 3))
    assert (s.g, s.h, s.r, s.R) == (0, 1, 2, 8)


@given(plane_maps())
def test_faces_cover_each_dart_once(G):
    faces = trace_faces(G)
    assert sum(f.length for f in faces) == 2 * len(G.edges)
    # the states of all walks and of their reversals are every
    # (half-edge, direction) pair exactly once
    seen = Counter()
    for f in faces:
        for h, o in f.darts:
            seen[(h, o)] += 1
            seen[(h ^ 1, -o * G.signs[h >> 1])] += 1
    assert set(seen) == {(h, o) for h in range(2 * len(G.edges)) for o in (1, -1)}
    assert set(seen.values()) == {1}


@given(plane_maps(), st.randoms(use_true_random=False))
def test_genus_invariant_under_relabel(G, rnd):
    perm = list(range(G.vertex_count))
    rnd.shuffle(perm)
    shifts = [rnd.randrange(7) for _ in perm]
    H = relabel(G, perm, shifts)
    assert surface_summary(H) == surface_summary(G)
    assert canonical_code(H) == canonical_code(G)
    assert are_isomorphic(G, H)


@given(st.integers(3, 5), st.integers(3, 6), st.randoms(use_true_random=False))
def test_torus_genus_invariant_under_relabel(m, n, rnd):
    G = torus_grid(m, n)
    perm = list(range(G.vertex_count))
    rnd.shuffle(perm)
    H = relabel(G, perm, [rnd.randrange(4) for _ in perm])
    assert surface_summary(H).g == 2
    assert are_isomorphic(G, H)


@given(plane_maps())
def test_euler_formula_matches_summary(G):
    assert surface_summary(G).g == euler_genus(G) == 0


def test_planar_embedding_from_networkx():
    ok, emb = nx.check_planarity(nx.octahedral_graph())
    assert ok
    G = from_planar_embedding(emb)
    assert surface_summary(G).g == 0 and len(G.faces) == 8


def test_mirror_image_is_isomorphic():
    G = torus_grid(3, 4)
    mirror = EGraph(G.vertex_count, G.edges, [list(reversed(r)) for r in G.rotation], G.signs)
    assert are_isomorphic(G, mirror)


def test_different_rings_not_isomorphic():
    G = planar_k4()
    assert not are_isomorphic(G.replace(rings=[G.faces[0].vertices]), G)


# surgery

def test_cut_middle_of_cylinder():
    G = cylinder_grid(4, 10)
    H = cut_cycle(G, layer(4, 5))
    s = surface_summary(H)
    assert (s.g, s.h, s.r, s.R) == (0, 2, 4, 16)
    assert H.vertex_count == G.vertex_count + 4
    assert sorted(len(c) for c in H.components) == [20, 24]


def test_cut_handle_of_k5():
    G = k5_torus()
    _, c = shortest_nonnull_cycle(G, SIGMA_HAT)
    assert cycle_sign(G, c) == 1
    H = cut_cycle(G, c)
    s = surface_summary(H)
    # two-sided, non-separating: two new rings, genus drops by 2
    assert (s.g, s.h, s.r) == (0, 1, 2)
    assert H.vertex_count == 5 + len(c)


def test_cut_one_sided_cycle():
    G = k6_projective()
    _, c = shortest_nonnull_cycle(G, SIGMA_HAT)
    assert cycle_sign(G, c) == -1
    H = cut_cycle(G, c)
    assert [r.order for r in H.rings] == [2 * len(c)]
    assert surface_summary(H).g == 0
    assert H.vertex_count == 6 + len(c)


def test_cut_contractible_rejected():
    with pytest.raises(SurgeryError, match="cut-requires-noncontractible"):
        cut_cycle(planar_k4(), [0, 1, 2])


def test_cut_meeting_ring_rejected():
    with pytest.raises(SurgeryError):
        cut_cycle(cylinder_grid(4, 5), layer(4, 0))


@given(st.integers(3, 5), st.integers(3, 7), st.data())
def test_cut_genus_additive(m, n, data):
    G = torus_grid(m, n)
    j = data.draw(st.integers(0, n - 1))
    H = cut_cycle(G, layer(m, j))
    assert sum(H.component_euler_genus()) <= surface_summary(G).g
    assert len(H.rings) == 2


def test_curve_cut():
    G = planar_k4().replace(genus_surplus=2)
    assert curve_cut(G).genus_surplus == 1
    assert curve_cut(curve_cut(G)).genus_surplus == 0
    with pytest.raises(SurgeryError, match="embedding-is-2-cell"):
        curve_cut(planar_k4())


def test_excise_end_cycles_is_whole():
    G = cylinder_grid(4, 10)
    E = excise_cylinder(G, layer(4, 0), layer(4, 9))
    assert are_isomorphic(E, G)


@pytest.mark.parametrize("i,j", [(2, 6), (0, 3), (4, 9), (1, 2)])
def test_excise_between_copies(i, j):
    G = cylinder_grid(4, 10)
    E, old = excise_cylinder(G, layer(4, i), layer(4, j), return_map=True)
    assert are_isomorphic(E, cylinder_grid(4, j - i + 1))
    # vertex-set oracle: BFS from copy i avoiding copy j (and back) stays between them
    H = _nx(G)
    between = set()
    for a, b in ((i, j), (j, i)):
        sub = H.subgraph(set(H) - set(layer(4, b)))
        for v in layer(4, a):
            between |= nx.node_connected_component(sub, v) & set(
                v for t in range(min(i, j), max(i, j) + 1) for v in layer(4, t))
    assert set(old) == between


def test_excise_non_cylinder_pair():
    G = k7_torus()
    tri = [f.vertices for f in G.faces if len(set(f.vertices)) == 3]
    pair = next((a, b) for a in tri for b in tri if not set(a) & set(b))
    with pytest.raises(SurgeryError, match="not-a-cylinder-pair"):
        excise_cylinder(G, pair[0], pair[1])


def _insert_across(rot, u, v, a, b):
    """Draw edge ab through the two triangles on uv (a and b their apexes)."""
    for x, y in ((a, b), (b, a)):
        r = rot[x]
        i, j = r.index(u), r.index(v)
        r.insert(j if (i + 1) % len(r) == j else i, y)


def _face_apexes(G, u, v):
    return [next(x for x in f.vertices if x not in (u, v)) for f in G.faces
            if f.length == 3 and {u, v} <= set(f.vertices)]


def test_planarize_k5_one_crossing():
    base = nx.complete_graph(5)
    base.remove_edge(0, 1)
    G = from_planar_embedding(nx.check_planarity(base)[1])
    u, v = next((u, v) for u, v in G.edges if sorted(_face_apexes(G, u, v)) == [0, 1])
    rot = [G.neighbors_in_order(x) for x in range(5)]
    _insert_across(rot, u, v, 0, 1)
    drawn = from_rotation_lists(rot)
    H = planarize_crossings(drawn, [oriented_crossing(drawn, drawn.edge_between(u, v),
                                                      drawn.edge_between(0, 1))])
    assert H.vertex_count == 6 and H.degree(5) == 4
    assert surface_summary(H).g == 0
    assert set(H.neighbors_in_order(5)) == {0, 1, u, v}


def test_planarize_wrong_orientation_changes_surface():
    base = nx.complete_graph(5)
    base.remove_edge(0, 1)
    G = from_planar_embedding(nx.check_planarity(base)[1])
    u, v = next((u, v) for u, v in G.edges if sorted(_face_apexes(G, u, v)) == [0, 1])
    rot = [G.neighbors_in_order(x) for x in range(5)]
    _insert_across(rot, u, v, 0, 1)
    drawn = from_rotation_lists(rot)
    e, f = oriented_crossing(drawn, drawn.edge_between(u, v), drawn.edge_between(0, 1))
    assert surface_summary(planarize_crossings(drawn, [(f, e)])).g > 0


def test_planarize_no_crossings_is_identity():
    G = planar_k4()
    assert planarize_crossings(G, []) == G


def test_planarize_k6_three_crossings():
    # K6 = octahedron plus the three antipodal edges, each drawn across one edge
    oct_ = nx.octahedral_graph()
    G = from_planar_embedding(nx.check_planarity(oct_)[1])
    antipodal = [(a, b) for a in range(6) for b in range(a + 1, 6) if not oct_.has_edge(a, b)]
    rot = [G.neighbors_in_order(x) for x in range(6)]
    used, plan = set(), []
    for a, b in antipodal:
        u, v = next((u, v) for u, v in G.edges
                    if sorted(_face_apexes(G, u, v)) == [a, b] and not {u, v} & used)
        used |= {u, v}
        plan.append((u, v, a, b))
    for u, v, a, b in plan:
        _insert_across(rot, u, v, a, b)
    drawn = from_rotation_lists(rot)
    H = planarize_crossings(drawn, [oriented_crossing(drawn, drawn.edge_between(u, v),
                                                      drawn.edge_between(a, b))
                                    for u, v, a, b in plan])
    assert H.vertex_count == 9
    assert sorted(H.degree(x) for x in range(6, 9)) == [4, 4, 4]
    assert surface_summary(H).g == 0


def test_planarize_rejects_shared_endpoint_and_reuse():
    G = planar_k4()
    e, f = G.edge_between(0, 1), G.edge_between(1, 2)
    with pytest.raises(SurgeryError):
        planarize_crossings(G, [(e, f)])
    G = cycle_graph(6)
    a, b, c = G.edge_between(0, 1), G.edge_between(2, 3), G.edge_between(4, 5)
    with pytest.raises(SurgeryError):
        planarize_crossings(G, [(a, b), (a, c)])
