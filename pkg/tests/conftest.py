import os

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from surfcolor.corpus import SplitMix64, random_plane_map
from surfcolor.surface_core import EGraph

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def plane_maps(draw, n_min=3, n_max=9):
    """Seeded random 2-connected plane maps."""
    n = draw(st.integers(n_min, n_max))
    seed = draw(st.integers(0, 2 ** 32))
    return random_plane_map(n, SplitMix64(seed))


@st.composite
def plane_canvases(draw, n_min=3, n_max=9, ring_max=6):
    """A plane map with one face of length <= ring_max designated as ring."""
    G = draw(plane_maps(n_min, n_max))
    faces = [f for f in G.faces if f.length <= ring_max]
    if not faces:
        faces = list(G.faces)
    f = faces[draw(st.integers(0, len(faces) - 1))]
    return G.replace(rings=[f.vertices])


def relabel(G: EGraph, perm, shifts=None) -> EGraph:
    """Same embedding with vertices renamed by ``perm`` and each rotation
    started at a different position."""
    n = G.vertex_count
    edges = [(perm[u], perm[v]) for u, v in G.edges]
    rot = [None] * n
    for v in range(n):
        r = list(G.rotation[v])
        if shifts and r:
            k = shifts[v] % len(r)
            r = r[k:] + r[:k]
        rot[perm[v]] = r
    rings = [[perm[x] for x in ring.vertex_walk] for ring in G.rings]
    return EGraph(n, edges, rot, G.signs, rings, G.genus_surplus)


@pytest.fixture
def k4_egr(tmp_path):
    from surfcolor.families import planar_k4
    from surfcolor.surface_core import serialize_egr
    p = tmp_path / "k4.egr"
    p.write_text(serialize_egr(planar_k4()))
    return p


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for cid in sorted(RESULTS, key=lambda c: int(c[1:])):
            terminalreporter.write_line(RESULTS[cid])
