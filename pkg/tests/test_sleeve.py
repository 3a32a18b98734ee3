from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from surfcolor.families import cylinder_grid, k7_torus, layer, planar_k4, torus_grid, wheel
from surfcolor.sleeve import (SleeveError, adjoin_sleeve, certificate_problems, disjoint_union,
                              find_sleeve, parse_decomposition, sleeve_decompose,
                              validate_decomposition)
from surfcolor.surface_core import SurgeryError, are_isomorphic
from surfcolor.verdicts import PASS, VIOLATION

from conftest import relabel

cylinders = st.tuples(st.integers(3, 5), st.integers(2, 14)).map(lambda mn: cylinder_grid(*mn))
tori = st.tuples(st.integers(3, 4), st.integers(3, 12)).map(lambda mn: torus_grid(*mn))


# certificates

def test_find_sleeve_takes_every_layer():
    G = cylinder_grid(4, 10)
    cert = find_sleeve(G, 4, 8)
    assert cert.cycles == tuple(tuple(layer(4, j)) for j in range(10))
    assert cert.gap_counts == (8,) * 9 and cert.n == 9
    assert certificate_problems(G, cert) == []


def test_find_sleeve_limits():
    G = cylinder_grid(4, 10)
    # gaps of 8 vertices exceed l = 7, and rings of length 4 exceed k = 3
    assert find_sleeve(G, 4, 7) is None
    assert find_sleeve(G, 3, 100) is None


def test_find_sleeve_needs_cylinder():
    with pytest.raises(SleeveError):
        find_sleeve(wheel(5), 10, 10)


def test_certificate_problems_reports_tampering():
    G = cylinder_grid(4, 5)
    cert = find_sleeve(G, 4, 8)
    bad = replace(cert, gap_counts=(8, 8, 9, 8))
    assert any("recorded 9" in p for p in certificate_problems(G, bad))
    skip = replace(cert, cycles=cert.cycles[:2] + cert.cycles[3:], gap_counts=(8, 12, 8))
    assert any("exceed l" in p for p in certificate_problems(G, skip))
    crossed = replace(cert, cycles=(cert.cycles[0], (0, 5, 6, 7)) + cert.cycles[2:])
    assert any("intersect" in p for p in certificate_problems(G, crossed))
    ends = replace(cert, cycles=cert.cycles[1:])
    assert certificate_problems(G, ends) == ["first and last cycles must be the rings"]


# gluing

@pytest.mark.parametrize("offset", range(4))
@pytest.mark.parametrize("reverse", [False, True])
def test_adjoin_cylinders(offset, reverse):
    H, S = cylinder_grid(4, 2), cylinder_grid(4, 3)
    U = adjoin_sleeve(H, S, [(1, 0, offset, reverse)])
    assert str(U.summary()) == "g=0 h=1 r=2 R=8"
    assert are_isomorphic(U, cylinder_grid(4, 4))


def test_adjoin_needs_matching_lengths():
    with pytest.raises(SurgeryError):
        adjoin_sleeve(cylinder_grid(4, 2), cylinder_grid(5, 2), [(0, 0, 0, False)])
    with pytest.raises(SurgeryError):
        adjoin_sleeve(cylinder_grid(4, 2), cylinder_grid(4, 2), [])


def test_disjoint_union():
    U = disjoint_union(planar_k4(), cylinder_grid(3, 2))
    assert U.vertex_count == 10 and len(U.components) == 2
    assert str(U.summary()) == "g=0 h=2 r=2 R=6"


# decompositions

def test_cylinder_decomposition():
    G = cylinder_grid(4, 10)
    D = sleeve_decompose(G, 1)
    # the rings and the two outermost separating layers stay in the base
    assert D.case == 2 and D.s == 1
    assert D.measured_m == 16 and D.measured_s == 1
    assert D.sleeves[0].graph.vertex_count == 32
    assert not D.violations
    v = validate_decomposition(D, G)
    assert v.status == PASS and v.bound == Fraction(16, 6)


def test_short_cylinder_has_no_sleeve():
    D = sleeve_decompose(cylinder_grid(4, 3), 1)
    assert D.measured_s == 0 and D.base.vertex_count == 12


def test_torus_decomposition():
    G = torus_grid(4, 12)
    D = sleeve_decompose(G, 1)
    assert D.case == 3 and D.s == 6
    assert validate_decomposition(D, G).status == PASS
    assert are_isomorphic(D.reassemble(), G)


def test_k7_decomposes_trivially():
    D = sleeve_decompose(k7_torus(), 1)
    assert D.measured_s == 0 and D.base.vertex_count == 7
    assert validate_decomposition(D, k7_torus()).status == PASS


def test_sphere_without_rings_flagged():
    D = sleeve_decompose(planar_k4(), 1)
    assert D.violations and D.violations[0].startswith("hypothesis-violated")


def test_disconnected_surface_rejected():
    with pytest.raises(SleeveError):
        sleeve_decompose(disjoint_union(cylinder_grid(3, 2), cylinder_grid(3, 2)), 1)


def test_cheeger_gate_recorded():
    D = sleeve_decompose(wheel(5), 1, cheeger_max_len=4)
    assert D.cheeger is not None and D.cheeger.ok
    assert D.case == 1 and D.measured_s == 0


def test_validation_catches_wrong_input():
    G = cylinder_grid(4, 10)
    D = sleeve_decompose(G, 1)
    v = validate_decomposition(D, cylinder_grid(4, 11))
    assert v.status == VIOLATION and "not isomorphic" in v.detail


def test_validation_catches_oversized_base():
    G = cylinder_grid(4, 10)
    D = sleeve_decompose(G, 1)
    D.m = Fraction(15)
    assert "m=15" in validate_decomposition(D, G).detail


def test_decomposition_round_trip():
    G = torus_grid(3, 10)
    D = sleeve_decompose(G, 1)
    text = D.serialize()
    E = parse_decomposition(text)
    assert E.serialize() == text
    assert validate_decomposition(E, G).status == PASS


@given(cylinders)
def test_cylinder_decompositions_validate(G):
    D = sleeve_decompose(G, 1)
    assert not D.violations
    assert validate_decomposition(D, G).status == PASS
    assert 6 * D.measured_s <= D.measured_m


@given(tori)
def test_torus_decompositions_validate(G):
    D = sleeve_decompose(G, 1)
    assert not D.violations
    assert validate_decomposition(D, G).status == PASS


@given(cylinders, st.data())
def test_decomposition_independent_of_labels(G, data):
    n = G.vertex_count
    perm = data.draw(st.permutations(range(n)))
    shifts = data.draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))
    H = relabel(G, perm, shifts)
    a, b = sleeve_decompose(G, 1), sleeve_decompose(H, 1)
    assert (a.measured_m, a.measured_s) == (b.measured_m, b.measured_s)
    assert validate_decomposition(b, H).status == PASS
