import itertools

import networkx as nx
import pytest

from surfcolor.corpus import CorpusError, SplitMix64, plane_maps
from surfcolor.suites import (SUITES, CorpusSpec, SuiteReport, UsageError, generate_corpus,
                              verify_suite)
from surfcolor.surface_core import canonical_code, from_rotation_lists, surface_summary
from surfcolor.verdicts import HYPOTHESIS_FAILURE, PASS, VACUOUS, VIOLATION


def _rotation_choices(nbrs):
    # cyclic orders with the first neighbour fixed
    first, rest = nbrs[0], nbrs[1:]
    return [[first, *p] for p in itertools.permutations(rest)]


def brute_force_plane_codes(n):
    """Canonical codes of all 2-connected plane maps on n vertices, found by
    trying every rotation system of every 2-connected planar graph."""
    codes = set()
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() != n or not nx.is_connected(g) or not nx.is_biconnected(g):
            continue
        if not nx.check_planarity(g)[0]:
            continue
        nbrs = [sorted(g[v]) for v in range(n)]
        for rot in itertools.product(*(_rotation_choices(r) for r in nbrs)):
            G = from_rotation_lists([list(r) for r in rot])
            if surface_summary(G).g == 0:
                codes.add(canonical_code(G))
    return codes


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_plane_maps_match_rotation_enumeration(n):
    made = {canonical_code(G) for G in plane_maps(n, n)}
    assert len(made) == len(plane_maps(n, n))
    assert made == brute_force_plane_codes(n)


def test_plane_maps_ceiling():
    with pytest.raises(CorpusError):
        plane_maps(13)


def test_corpus_is_deterministic():
    spec = CorpusSpec(n_max=6, ring_min=3, ring_max=5, lists="type345", assignments=2, seed=3)
    a = list(generate_corpus(spec))
    b = list(generate_corpus(spec))
    assert [(canonical_code(G), G.lists) for G in a] == [(canonical_code(G), G.lists) for G in b]
    c = list(generate_corpus(CorpusSpec(n_max=6, ring_min=3, ring_max=5, lists="type345",
                                        assignments=2, seed=4)))
    assert [G.lists for G in a] != [G.lists for G in c]


def test_ring_canvases_respect_parameters():
    spec = CorpusSpec(n_min=4, n_max=6, ring_min=4, ring_max=5)
    seen = set()
    for G in generate_corpus(spec):
        assert 4 <= G.vertex_count <= 6
        assert len(G.rings) == 1 and G.rings[0].order in (4, 5)
        seen.add(canonical_code(G))
    assert len(seen) == sum(1 for _ in generate_corpus(spec))


def test_list_policies():
    spec = CorpusSpec(n_max=5, ring_min=3, ring_max=3, lists="all-5", assignments=3)
    gs = list(generate_corpus(spec))
    # all-5 needs one copy per graph
    assert len(gs) == sum(1 for _ in generate_corpus(CorpusSpec(n_max=5, ring_min=3, ring_max=3)))
    assert all(set(map(frozenset, G.lists.values())) == {frozenset(range(5))} for G in gs)
    for G in generate_corpus(CorpusSpec(n_max=5, ring_min=3, ring_max=3, lists="random5")):
        assert all(len(L) == 5 and set(L) <= set(range(7)) for L in G.lists.values())


def test_sampled_sizes():
    spec = CorpusSpec(n_min=6, n_max=8, ring_min=3, ring_max=6, exhaustive_max=5, samples=4)
    gs = list(generate_corpus(spec))
    by_n = {}
    for G in gs:
        by_n.setdefault(G.vertex_count, set()).add(canonical_code(G))
    assert sorted(by_n) == [6, 7, 8]
    assert all(len(codes) == 4 for codes in by_n.values())
    assert [canonical_code(G) for G in generate_corpus(spec)] == [canonical_code(G) for G in gs]


def test_cylinder_and_torus_corpora():
    cyl = list(generate_corpus(CorpusSpec(kind="cylinder", n_max=5, ring_min=3, ring_max=4)))
    assert [(G.rings[0].order, G.vertex_count) for G in cyl] == \
        [(m, m * n) for m in (3, 4) for n in range(2, 6)]
    tor = list(generate_corpus(CorpusSpec(kind="torus", n_max=4)))
    assert [surface_summary(G).g for G in tor] == [2, 2]


def test_crossing_corpus_is_planar():
    gs = list(generate_corpus(CorpusSpec(kind="crossing", n_max=6)))
    assert gs
    for G in gs:
        assert surface_summary(G).g == 0
        assert any(G.degree(v) == 4 for v in range(G.vertex_count))


def test_bad_specs():
    with pytest.raises(UsageError):
        list(generate_corpus(CorpusSpec(kind="klein")))
    with pytest.raises(UsageError):
        list(generate_corpus(CorpusSpec(lists="six")))
    with pytest.raises(UsageError):
        list(generate_corpus(CorpusSpec(assignments=0)))
    with pytest.raises(UsageError):
        list(generate_corpus(CorpusSpec(samples=-1)))
    with pytest.raises(CorpusError):
        list(generate_corpus(CorpusSpec(n_max=20)))


def test_splitmix_is_reproducible():
    a, b = SplitMix64(42), SplitMix64(42)
    assert [a.below(1000) for _ in range(10)] == [b.below(1000) for _ in range(10)]
    assert SplitMix64(1).fork(2).below(10 ** 9) != SplitMix64(1).fork(3).below(10 ** 9)


# reports

def test_report_counting_and_first_failure():
    rep = SuiteReport("demo")
    rep.record(PASS, (0,))
    rep.record(VACUOUS, (1,))
    rep.record(HYPOTHESIS_FAILURE, (2,))
    rep.record(VIOLATION, (5,), "later")
    rep.record(VIOLATION, (3,), "earlier")
    assert (rep.instances, rep.passed, rep.vacuous, rep.rejected, rep.failed) == (5, 1, 1, 1, 2)
    assert rep.first_failure == "earlier" and rep.exit_code == 1
    lines = rep.text().splitlines()
    assert lines[0] == "suite: demo" and lines[-2] == "first-failure: earlier"
    assert lines[-1] == "result: FAIL"


def test_empty_report_fails():
    assert not SuiteReport("x").ok


def test_merge_keeps_smallest_failure():
    a, b = SuiteReport("a"), SuiteReport("b")
    a.record(VIOLATION, (4,), "four")
    b.record(VIOLATION, (2,), "two")
    b.record(PASS)
    a.merge(b)
    assert a.instances == 3 and a.first_failure == "two"


def test_registry_has_every_suite():
    assert {"extend4cycle", "strong-linear", "exp-many", "cheeger18", "topology", "frames",
            "sleeves", "numsleeves", "constants", "oracle-count", "kernel"} <= set(SUITES)


def test_small_suites_pass():
    for name, kw in [("oracle-count", {"n_max": 5}), ("kernel", {"n_max": 5}),
                     ("extend4cycle", {"n_max": 5}), ("constants", {})]:
        rep = verify_suite(name, **kw)
        assert rep.ok and rep.failed == 0, rep.text()


def test_suite_reports_are_reproducible():
    a = verify_suite("oracle-count", n_max=5).text()
    assert verify_suite("oracle-count", n_max=5).text() == a


def test_unknown_suite():
    with pytest.raises(UsageError):
        verify_suite("nope")
