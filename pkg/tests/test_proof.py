import random

import pytest

from ramsey_goodness.arrowing import BLUE_PATH, RED_CLIQUE, TwoColoring
from ramsey_goodness.constructions import build_extremal
from ramsey_goodness.errors import InputError, WindowError
from ramsey_goodness.graph import Graph
from ramsey_goodness.proof import (
    case2_diagnostics, chain_closes, check_preconditions, extract, extract_witness,
)
from ramsey_goodness.sweeps import proven_params, random_instance
from ramsey_goodness.thresholds import GoodnessParams


def test_all_blue_complete_gives_path():
    for t in range(2, 5):
        g = Graph.complete(t)
        c = TwoColoring.all_blue(g)
        w = extract_witness(g, c, 2, t)
        assert w.kind == BLUE_PATH and w.vertices == tuple(range(t))
        assert w.verify(c, 2, t)


def test_all_red_complete_gives_clique():
    g = Graph.complete(5)
    ex = extract(g, TwoColoring.all_red(g), 3, 3)
    assert ex.witness.kind == RED_CLIQUE and ex.witness.vertices == (0, 1, 2)
    assert ex.depth == 1


def test_preconditions():
    g = Graph.complete(3)
    with pytest.raises(WindowError):
        extract(g, TwoColoring.all_red(g), 3, 3)
    g = Graph.cycle(8)
    with pytest.raises(InputError, match="below the threshold"):
        check_preconditions(g, TwoColoring.all_red(g), 3, 3)
    # t = 6 needs k >= 3
    g = Graph.complete(6)
    with pytest.raises(InputError, match="proven regime"):
        check_preconditions(g, TwoColoring.all_red(g), 2, 6)


def _repaired_extremal():
    """The (3,3,1) construction plus a red matching between the two cliques of each part."""
    e = build_extremal(3, 3, 1)
    extra = [(0, 2), (1, 3), (4, 6), (5, 7)]
    g = Graph.from_edges(8, e.graph.edges() + extra)
    return g, TwoColoring(g, e.coloring.blue)


def test_repaired_extremal_meets_threshold_and_yields_witness():
    g, c = _repaired_extremal()
    assert g.min_degree() == 6
    ex = extract(g, c, 3, 3)
    assert ex.witness.verify(c, 3, 3)
    assert ex.depth <= 1


def test_extraction_on_random_instances():
    rng = random.Random(99)
    params = proven_params(10)
    for i in range(200):
        p, g, c = random_instance(rng, i, params)
        ex = extract(g, c, p.r, p.t)
        assert ex.witness.verify(c, p.r, p.t)
        assert ex.depth <= p.r - 2
        for f in ex.frames:
            if f.case == "case1":
                assert f.x_next >= f.x and f.k_next >= f.k


def test_case2_diagnostics_on_extremal():
    # below the threshold, so the chain must break at the degree link
    e = build_extremal(3, 3, 1)
    rep = case2_diagnostics(e.graph, e.coloring, e.params)
    assert not rep.checks["delta_G_ge_threshold"]["passed"]
    assert rep.checks["blue_Pt_free"]["passed"] and rep.checks["red_Kr_free"]["passed"]
    assert not chain_closes(rep)


def test_case2_diagnostics_rejects_case1_instances():
    g = Graph.complete(5)
    with pytest.raises(InputError):
        case2_diagnostics(g, TwoColoring.all_red(g), GoodnessParams(3, 3, 1, 5))


def test_case2_diagnostics_breaks_where_a_witness_exists():
    g = Graph.complete(8)
    rep = case2_diagnostics(g, TwoColoring.all_blue(g), GoodnessParams(3, 3, 1, 8))
    assert rep.checks["delta_G_ge_threshold"]["passed"]
    assert rep.checks["delta_B_ge_M"]["passed"] and rep.checks["M_ge_t_minus_2"]["passed"]
    assert not rep.checks["blue_Pt_free"]["passed"]
    assert rep.data["x"] == 4 and rep.data["M"] == 2
    assert not chain_closes(rep)
