"""Property-based checks of kernel invariants against independent checkers."""

import itertools

from hypothesis import given, settings, strategies as st

from ramsey_goodness import verify
from ramsey_goodness.arrowing import TwoColoring, arrows, arrows_exhaustive, check_coloring, verify_certificate
from ramsey_goodness.cliques import clique_number, find_clique, find_independent_set
from ramsey_goodness.coloring import brooks_coloring, chromatic_number
from ramsey_goodness.graph import Graph, complement, is_connected
from ramsey_goodness.graph_io import from_edge_list, from_graph6, to_edge_list, to_graph6
from ramsey_goodness.paths import find_path, longest_path
from ramsey_goodness.proof import extract
from ramsey_goodness.thresholds import GoodnessParams, ceiling_identity_check, degree_threshold


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, c in zip(pairs, chosen) if c])


@st.composite
def colored(draw, max_n=7):
    g = draw(graphs(max_n))
    edges = g.edges()
    mask = draw(st.lists(st.booleans(), min_size=len(edges), max_size=len(edges)))
    return g, TwoColoring(g, frozenset(e for e, b in zip(edges, mask) if b))


@given(graphs(max_n=20))
def test_io_roundtrips(g):
    assert from_graph6(to_graph6(g)) == g
    assert from_edge_list(to_edge_list(g)) == g


@given(graphs(), st.integers(0, 6))
def test_clique_duality(g, s):
    a = find_independent_set(g, s)
    assert a == find_clique(complement(g), s)
    if a is not None:
        assert verify.is_independent(g.edges(), a)
    c = find_clique(g, s)
    if c is not None:
        assert len(c) == s and verify.is_clique(g.edges(), c)


@given(graphs())
def test_longest_path_is_a_path_and_maximal(g):
    p = longest_path(g)
    assert verify.is_path(g.edges(), p)
    assert find_path(g, len(p) + 1) is None
    if g.n:
        assert find_path(g, len(p)) == p


@settings(max_examples=60)
@given(graphs(max_n=8))
def test_chromatic_sandwich(g):
    chi, col = chromatic_number(g)
    assert verify.is_proper_coloring(g.edges(), col.colors)
    assert clique_number(g) <= chi <= (g.max_degree() + 1 if g.n else 0)


@given(graphs(max_n=11))
def test_brooks_bound(g):
    if g.n == 0 or not is_connected(g):
        return
    col = brooks_coloring(g)
    assert verify.is_proper_coloring(g.edges(), col.colors)
    exceptional = g.is_complete() or (g.is_cycle() and g.n % 2 == 1)
    assert col.num_colors <= g.max_degree() + (1 if exceptional else 0)


@settings(max_examples=60)
@given(colored(max_n=6), st.integers(2, 4), st.integers(2, 4))
def test_arrows_matches_oracle(gc, r, t):
    g, _ = gc
    cert = arrows(g, r, t)
    if g.num_edges() <= 12:
        assert cert.arrows is arrows_exhaustive(g, r, t)[0]
    assert verify_certificate(cert)


@given(colored(), st.integers(2, 4), st.integers(2, 5))
def test_check_coloring_witness_verifies(gc, r, t):
    g, c = gc
    w = check_coloring(c, r, t)
    if w is not None:
        assert w.verify(c, r, t)


@given(colored(max_n=9), st.integers(2, 4), st.integers(2, 4))
def test_extract_whenever_preconditions_hold(gc, r, t):
    g, c = gc
    if g.n <= (r - 1) * (t - 1):
        return
    p = GoodnessParams.for_order(r, t, g.n)
    if p.k < max(1, t - 3) or g.min_degree() < degree_threshold(p):
        return
    ex = extract(g, c, r, t)
    assert ex.witness.verify(c, r, t) and ex.depth <= r - 2


@given(st.integers(0, 10**6), st.integers(1, 1000))
def test_ceiling_identity(y, k):
    assert ceiling_identity_check(y, k)
