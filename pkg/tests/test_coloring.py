from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from surfcolor import coloring as col
from surfcolor.coloring import ColoringError, Subgraph
from surfcolor.corpus import SplitMix64, facial_path_vertex_sets, random_type345_lists
from surfcolor.families import cycle_graph, cylinder_grid, layer, planar_k4, wheel
from surfcolor.surface_core import EGraph, from_planar_embedding
from surfcolor.verdicts import EXCEPTION, PASS, VIOLATION

from conftest import plane_canvases, plane_maps

FIVE = frozenset(range(5))


def five(G):
    return [FIVE] * G.vertex_count


def chorded_square():
    """C4 ring 0,1,2,3 with the chord 0-2 inside."""
    g = nx.cycle_graph(4)
    g.add_edge(0, 2)
    G = from_planar_embedding(nx.check_planarity(g)[1])
    ring = next(f.vertices for f in G.faces if f.length == 4)
    return G.replace(rings=[ring])


def list_strategy(n, size=(1, 3), universe=4):
    return st.lists(st.frozensets(st.integers(0, universe - 1), min_size=size[0], max_size=size[1]),
                    min_size=n, max_size=n)


@st.composite
def small_list_instances(draw, n_max=7):
    G = draw(plane_maps(3, n_max))
    L = draw(list_strategy(G.vertex_count))
    pre = {}
    for v in draw(st.sets(st.integers(0, G.vertex_count - 1), max_size=2)):
        c = draw(st.sampled_from(sorted(L[v])))
        if all(pre.get(w) != c for w in G.adjacency[v]):
            pre[v] = c
    return G, L, pre


# list classes

def test_classify_all_five():
    assert col.classify_assignment(planar_k4(), five(planar_k4())) == col.C5


def test_classify_triangle_with_four_lists():
    assert col.classify_assignment(planar_k4(), [frozenset(range(4))] * 4) == col.OTHER


def test_classify_girth_five_three_lists():
    G = from_planar_embedding(nx.check_planarity(nx.dodecahedral_graph())[1])
    assert col.girth(G) == 5
    assert col.classify_assignment(G, [frozenset(range(3))] * G.vertex_count) == col.C3


def test_type345():
    assert col.is_type345(planar_k4(), five(planar_k4()))
    assert not col.is_type345(planar_k4(), [frozenset(range(4))] * 4)
    assert col.is_type345(cylinder_grid(4, 3), [frozenset(range(4))] * 12)


def test_lists_must_be_nonempty():
    with pytest.raises(ColoringError):
        col.lists_from(cycle_graph(3), [{1}, set(), {2}])


# solving and counting

def test_solve_triangle():
    T = cycle_graph(3)
    phi = col.solve(T, [{1, 2}, {2, 3}, {1, 3}])
    assert col.is_proper_coloring(T, phi, [{1, 2}, {2, 3}, {1, 3}])
    assert phi == {0: 1, 1: 2, 2: 3}


def test_k4_three_lists_unsolvable():
    assert col.solve(planar_k4(), [{1, 2, 3}] * 4) is None
    assert col.count_extensions(planar_k4(), [{1, 2, 3}] * 4) == 0


def test_single_vertex():
    G = EGraph(1, [], [[]])
    assert col.solve(G, [{7}]) == {0: 7}
    assert col.count_extensions(G, [FIVE]) == 5


def test_triangle_count():
    # chromatic polynomial of K3 at 3
    assert col.count_extensions(cycle_graph(3), [{1, 2, 3}] * 3) == 6


def test_wheel_hub_count():
    G = wheel(3)
    hub = next(v for v in range(4) if v not in G.ring_vertices)
    ring = G.rings[0].vertex_walk
    phi = dict(zip(ring, (0, 1, 2)))
    assert col.count_extensions(G, five(G), phi) == len(FIVE - {0, 1, 2}) == 2
    assert hub not in phi


def test_bad_precoloring_rejected():
    with pytest.raises(ColoringError):
        col.solve(cycle_graph(3), [{1, 2}] * 3, {0: 1, 1: 1})
    with pytest.raises(ColoringError):
        col.solve(cycle_graph(3), [{1, 2}] * 3, {0: 9})


def test_large_counts_are_exact():
    G = EGraph(30, [], [[]] * 30)
    assert col.count_extensions(G, [FIVE] * 30) == 5 ** 30


@given(small_list_instances())
def test_count_matches_product_enumeration(inst):
    G, L, pre = inst
    assert col.count_extensions(G, L, pre) == col.brute_force_count(G, L, pre)


@given(small_list_instances())
def test_solve_iff_count_positive(inst):
    G, L, pre = inst
    phi = col.solve(G, L, pre)
    n = col.count_extensions(G, L, pre)
    assert (phi is not None) == (n > 0)
    if phi is not None:
        assert col.is_proper_coloring(G, phi, L)
        assert all(phi[v] == c for v, c in pre.items())


@given(small_list_instances(), st.permutations(range(4)))
def test_count_invariant_under_renaming_colors(inst, perm):
    G, L, pre = inst
    rename = dict(enumerate(perm))
    L2 = col.permute_colors(L, rename)
    pre2 = {v: rename[c] for v, c in pre.items()}
    assert col.count_extensions(G, L2, pre2) == col.count_extensions(G, L, pre)


def test_iter_colorings_respects_budget():
    G = cylinder_grid(4, 3)
    with pytest.raises(col.ResourceError):
        list(col.iter_colorings(G, five(G), budget=100))


# criticality

def test_triangle_is_edge_critical():
    T = cycle_graph(3)
    L = [{1}, {2}, {1, 2}]
    assert col.is_critical(T, [(0, 1)], L)
    assert col.is_critical_exhaustive(T, [(0, 1)], L)


def test_whole_graph_not_critical():
    T = cycle_graph(3)
    assert not col.is_critical(T, Subgraph.whole(T), [{1}, {2}, {1, 2}])


def test_degree_three_interior_not_critical():
    G = wheel(3)
    assert not col.is_critical(G, None, five(G))


def test_wheel5_is_critical():
    G = wheel(5)
    assert col.is_critical(G, None, five(G))


def test_subgraph_must_be_in_host():
    with pytest.raises(ColoringError):
        col.is_critical(cycle_graph(4), [(0, 2)], [FIVE] * 4)


@given(plane_canvases(n_max=6, ring_max=4), st.integers(0, 2 ** 32))
def test_maximal_subgraph_criticality_matches_full_check(G, seed):
    rng = SplitMix64(seed)
    L = [frozenset(rng.sample(range(4), 2 + rng.below(2))) for _ in range(G.vertex_count)]
    assert col.is_critical(G, None, L) == col.is_critical_exhaustive(G, None, L)


# kernels

def test_kernel_of_bare_ring():
    G = cycle_graph(4, True)
    K = col.extract_kernel(G, five(G))
    assert K == Subgraph.whole(G)


def test_kernel_of_wheel_is_ring():
    G = wheel(4)
    K = col.extract_kernel(G, five(G))
    assert K == Subgraph.rings_of(G)


def test_kernel_of_critical_canvas_is_everything():
    G = chorded_square()
    L = five(G)
    assert col.is_critical(G, None, L)
    assert col.extract_kernel(G, L) == Subgraph.whole(G)


@given(plane_canvases(n_max=7, ring_max=5), st.integers(0, 2 ** 32))
def test_kernel_keeps_extensions_and_is_idempotent(G, seed):
    L = random_type345_lists(G, SplitMix64(seed))
    K = col.extract_kernel(G, L)
    assert Subgraph.rings_of(G).issubset(K)
    assert col.kernel_preserves_extensions(G, K, L)
    H, old = col.kernel_graph(G, K)
    HL = [L[v] for v in old]
    assert col.extract_kernel(H, HL) == Subgraph.whole(H)
    if col.is_critical(G, None, L):
        assert K == Subgraph.whole(G)


# plane canvases

def test_deficiency_examples():
    assert col.deficiency(cycle_graph(3, True)) == 0
    assert col.deficiency(chorded_square()) == 1
    assert col.deficiency(cycle_graph(5, True)) == 0


def test_deficiency_needs_two_connected():
    G = EGraph(3, [(0, 1), (1, 2)], [[0], [1, 2], [3]])
    with pytest.raises(ColoringError):
        col.deficiency(G, [0, 1, 2])


def test_strong_linear_on_critical_wheel():
    v = col.check_strong_linear(wheel(5), five(wheel(5)))
    assert v.status == PASS and v.measured == Fraction(1, 18) and v.bound == 1


def test_strong_linear_four_cycle_is_tight():
    G = chorded_square()
    v = col.check_strong_linear(G, five(G))
    # |C| = 4 forces no interior vertex and only triangles
    assert v.status == PASS and v.measured == 0 and v.bound == 0


def test_strong_linear_needs_criticality():
    with pytest.raises(ColoringError, match="not C-critical"):
        col.check_strong_linear(wheel(4), five(wheel(4)))


def test_exp_bounds_bare_cycle():
    G = cycle_graph(5, True)
    phi = dict(zip(G.rings[0].vertex_walk, (0, 1, 0, 1, 2)))
    v = col.check_exp_lower_bounds(G, phi, five(G))
    assert v.status == PASS and v.measured == 1


def test_exp_bounds_universal_neighbor_exception():
    G = wheel(4)
    phi = dict(zip(G.rings[0].vertex_walk, (0, 1, 2, 3)))
    assert col.check_exp_lower_bounds(G, phi, five(G)).status == EXCEPTION


def test_exp_bounds_triangle_with_hub():
    G = wheel(3)
    phi = dict(zip(G.rings[0].vertex_walk, (0, 1, 2)))
    v = col.check_exp_lower_bounds(G, phi, five(G))
    assert v.status == PASS and v.measured == 2 and v.bound == Fraction(1, 9)


def test_exp_bounds_need_an_extension():
    G = wheel(5)
    phi = dict(zip(G.rings[0].vertex_walk, range(5)))
    with pytest.raises(ColoringError):
        col.check_exp_lower_bounds(G, phi, five(G))


def test_log2_comparison_is_exact():
    # 2^(10/9) is about 2.16
    assert not col._log2_at_least(2, 10, 9)
    assert col._log2_at_least(3, 10, 9)


# exponential criticality

def test_exp_critical_needs_more_than_rings():
    G = cycle_graph(4, True)
    assert not col.is_exp_critical(G, Fraction(1, 18), 0, five(G))


def test_exp_critical_chorded_square():
    G = chorded_square()
    # removing the chord leaves one extension of a bad colouring; with
    # alpha = 1 the threshold exponent eps*(4 - 4) is 0, so 1 >= 2^0 holds
    assert col.is_exp_critical(G, Fraction(1, 1000), 1, five(G))
    # with alpha = 0 the threshold 2^(4/1000) exceeds 1
    assert not col.is_exp_critical(G, Fraction(1, 1000), 0, five(G))


def test_exp_critical_budget():
    G = chorded_square()
    # the ring alone passes, the second subgraph goes over the budget
    with pytest.raises(col.ResourceError):
        col.is_exp_critical(G, Fraction(1, 1000), 1, five(G), budget=1)


# the properties behind the exponential bound

def test_p1_on_k4_triangle():
    G = planar_k4()
    v = col.check_property_P1(G, [0, 1, 2], five(G))
    assert v.status == PASS and v.measured == 5 * 4 * 3


def test_p2_trivial_transfer():
    G = cylinder_grid(4, 2)
    L = [frozenset(range(3))] * 8
    v = col.check_property_P2_witness(G, layer(4, 0), layer(4, 1), layer(4, 0), layer(4, 1), L)
    assert v.status == PASS


def test_p2_size_violation():
    G = cylinder_grid(4, 30)
    J1 = [x for j in range(21) for x in layer(4, j)]
    v = col.check_property_P2_witness(G, layer(4, 0), layer(4, 29), J1, layer(4, 29), five(G))
    assert v.status == VIOLATION and v.measured == 84 and v.bound == 80


# short facial paths extend

@given(plane_maps(3, 8), st.integers(0, 2 ** 32))
def test_short_facial_path_colourings_extend(G, seed):
    L = random_type345_lists(G, SplitMix64(seed))
    for P in facial_path_vertex_sets(G, 3):
        sub = Subgraph.induced(G, P)
        for phi in col.iter_colorings(G, L, sub):
            assert col.solve(G, L, phi) is not None, (P, phi)
