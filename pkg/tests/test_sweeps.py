import random

import networkx as nx
import pytest

from ramsey_goodness.enumeration import (
    KNOWN_COUNTS, connected_graphs, graphs, sample_er_min_degree, sample_near_threshold,
    to_networkx,
)
from ramsey_goodness.errors import CapacityError, InputError
from ramsey_goodness.arrowing import verify_certificate
from ramsey_goodness.sweeps import (
    SweepResult,
    brooks_suite, erdos_gallai_suite, partition_suite, path_length_suite, proven_params,
    sweep_verify, threshold_tightness_scan,
)


@pytest.mark.parametrize("n", range(0, 8))
def test_atlas_counts(n):
    assert len(graphs(n)) == KNOWN_COUNTS[n]


def test_order_eight_count_and_uniqueness():
    g8 = graphs(8, 3)
    assert len(g8) == 2590
    # no two survivors may be isomorphic; group by a hash the generator does not use
    groups = {}
    for g in g8:
        h = to_networkx(g)
        groups.setdefault(nx.weisfeiler_lehman_graph_hash(h), []).append(h)
    for hs in groups.values():
        for i, a in enumerate(hs):
            assert not any(nx.is_isomorphic(a, b) for b in hs[i + 1:])


def test_min_degree_filter_is_consistent():
    for n in range(1, 8):
        for d in range(n):
            assert len(graphs(n, d)) == sum(g.min_degree() >= d for g in graphs(n))
    assert len(connected_graphs(5)) == 21
    with pytest.raises(CapacityError):
        graphs(9)


def test_samplers_meet_degree():
    rng = random.Random(0)
    for _ in range(50):
        n = rng.randint(2, 14)
        d = rng.randint(0, n - 1)
        assert sample_er_min_degree(n, d, rng).min_degree() >= d
        assert sample_near_threshold(n, d, rng).min_degree() >= d
    with pytest.raises(InputError):
        sample_near_threshold(4, 4, rng)


def test_sweep_exhaustive():
    res = sweep_verify(2, 4, 1, 6)
    assert res.passed and res.summary["count"] == 19
    assert [ln["graph6"] for ln in res.lines] == sorted(ln["graph6"] for ln in res.lines)
    with pytest.raises(CapacityError):
        sweep_verify(3, 3, 1, 8)


def test_sweep_sample_is_reproducible():
    a = sweep_verify(3, 3, 1, 8, "sample", count=200, seed=42)
    b = sweep_verify(3, 3, 1, 8, "sample", count=200, seed=42, threads=2)
    assert a.to_jsonl() == b.to_jsonl()
    assert a.passed and a.counterexamples == []
    with pytest.raises(InputError):
        sweep_verify(3, 3, 1, 8, "sample", count=5)


def test_sweep_records_undecided_without_passing():
    res = sweep_verify(3, 4, 1, 7, budget=1)
    assert res.summary["undecided"] > 0 and not res.passed


def test_counterexamples_become_certificates():
    summary = {"r": 3, "t": 3, "counterexamples": 1, "passed": False}
    res = SweepResult(summary, [{"i": 0, "graph6": "C~", "verdict": "not_arrows", "nodes": 2,
                                 "prunes": 0, "blue_edges": [[0, 1], [2, 3]]}])
    (cert,) = res.counterexamples
    assert not res.passed and verify_certificate(cert)


def test_tightness_scan():
    rep = threshold_tightness_scan(3, 3, 1)
    assert rep.passed and rep.data["delta"] == 5 and rep.data["threshold"] == 6


def test_lemma_suites_small():
    assert path_length_suite(6, trials=50, seed=1).passed
    assert erdos_gallai_suite(6).passed
    assert partition_suite(6).passed
    rep = brooks_suite(100, seed=3)
    assert rep.passed and rep.data["random_checked"] == 100


def test_proven_params():
    ps = proven_params(12)
    assert all(p.n <= 12 and p.k >= max(1, p.t - 3) for p in ps)
    assert any(p.r == 5 for p in ps)
