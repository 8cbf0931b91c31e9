"""Exact trace engine, checked against independent references."""

from __future__ import annotations

from fractions import Fraction

import pytest

from _oracles import matrix_power_sums, star_trace
from conftest import CORPUS
from hyperee.hypergraph import from_edge_list, gen_empty, gen_hyperpath, gen_hyperstar
from hyperee.traces import (
    Budget,
    FeasibilityError,
    TraceSequence,
    trace_d,
    trace_sequence,
    vertex_trace_term,
    vertex_trace_terms,
)

# Anchor values


def test_order_zero_is_eigenvalue_count():
    for h in CORPUS.values():
        assert trace_d(h, 0) == h.eigenvalue_count()


def test_low_orders_vanish():
    """Traces of orders 1..m-1 are zero (no closed walk fits)."""
    for name in ["path-3-2", "rand-3-b", "rand-4-a", "star-4-1"]:
        h = CORPUS[name]
        for d in range(1, h.m):
            assert trace_d(h, d) == 0, (name, d)


def test_order_m_counts_edges():
    """Tr_m = m^(m-1) * (m-1)^(n-m) * q."""
    for name in ["path-3-1", "star-3-3", "rand-4-b", "rand-2-a"]:
        h = CORPUS[name]
        m, n = h.m, h.n
        assert trace_d(h, m) == m ** (m - 1) * (m - 1) ** (n - m) * h.q, name


def test_single_edge_sequence():
    """One 3-edge: Tr_d = 9 when 3 | d, else 0 (d >= 1)."""
    ts = trace_sequence(gen_hyperpath(3, 1), 12)
    assert ts.values[0] == 12
    for d in range(1, 13):
        assert ts.values[d] == (9 if d % 3 == 0 else 0)


def test_empty_traces_vanish():
    ts = trace_sequence(gen_empty(3, 4), 6)
    assert ts.values == (Fraction(32),) + (Fraction(0),) * 6


# Independent references


def test_graph_traces_match_matrix_power_sums():
    """m = 2 traces are adjacency-matrix power sums, exactly."""
    for name in ["star-2-3", "path-2-4", "rand-2-a", "rand-2-b"]:
        h = CORPUS[name]
        want = matrix_power_sums(h, 8)
        ts = trace_sequence(h, 8)
        assert list(ts.values) == want, name


def test_hyperstar_traces_match_spectrum_power_sums():
    """Star traces against the closed-form eigenvalue families."""
    cases = [(3, 2, 12), (3, 3, 9), (4, 1, 8), (2, 6, 8)]
    for m, q, dmax in cases:
        h = gen_hyperstar(m, q)
        for d in range(dmax + 1):
            assert trace_d(h, d) == star_trace(m, q, d), (m, q, d)


def test_tight_overlap_pair():
    """Two edges sharing two vertices: nonzero eigenvalues are the cube
    roots of 4, nine in all, so Tr_d = 9 * 4^(d/3) at multiples of 3."""
    h = from_edge_list(3, 4, [(1, 2, 3), (1, 2, 4)])
    for d, want in [(1, 0), (2, 0), (3, 36), (4, 0), (6, 144), (9, 576)]:
        assert trace_d(h, d) == want


# Per-vertex decomposition


def test_vertex_terms_sum_to_trace():
    for name in ["star-3-2", "tight-pair-3", "rand-2-b", "rand-4-a"]:
        h = CORPUS[name]
        for d in range(h.m + 2):
            terms = vertex_trace_terms(h, d)
            assert sum(terms) == trace_d(h, d), (name, d)


def test_vertex_term_order_zero_share():
    h = CORPUS["rand-3-a"]
    share = Fraction((h.m - 1) ** (h.n - 1))
    assert vertex_trace_terms(h, 0) == (share,) * h.n


def test_vertex_term_single_index():
    h = CORPUS["star-3-2"]
    terms = vertex_trace_terms(h, 6)
    assert vertex_trace_term(h, 6, 1) == terms[0]
    assert vertex_trace_term(h, 6, h.n) == terms[-1]


def test_vertex_terms_follow_symmetry():
    """All leaves of a hyperstar carry the same share."""
    h = gen_hyperstar(3, 2)
    terms = vertex_trace_terms(h, 6)
    leaf_shares = {terms[v] for v in range(1, h.n)}
    assert len(leaf_shares) == 1


# Engine internals exercised through the public surface


def test_internal_walk_cross_check():
    """cross_check re-derives every walk count independently."""
    for name in ["path-3-2", "tight-pair-3", "rand-2-a"]:
        h = CORPUS[name]
        for d in range(h.m, 2 * h.m + 1):
            direct = vertex_trace_terms(h, d)
            checked = vertex_trace_terms(h, d, cross_check=True)
            assert direct == checked, (name, d)


def test_threads_do_not_change_results():
    for name in ["star-3-3", "rand-3-b"]:
        h = CORPUS[name]
        assert trace_d(h, 6, threads=3) == trace_d(h, 6, threads=1), name


def test_selection_budget_trips():
    h = CORPUS["star-3-3"]
    with pytest.raises(FeasibilityError, match="infeasible"):
        trace_d(h, 6, budget=Budget(max_selections=2))


def test_budget_allows_cheap_orders():
    """A tight budget still admits orders with few configurations."""
    h = gen_hyperpath(3, 1)
    assert trace_d(h, 3, budget=Budget(max_selections=50)) == 9


def test_rejects_negative_order():
    with pytest.raises(ValueError):
        trace_d(CORPUS["path-3-1"], -1)
    with pytest.raises(ValueError):
        trace_sequence(CORPUS["path-3-1"], -1)


def test_rejects_vertex_out_of_range():
    with pytest.raises(ValueError, match="outside"):
        vertex_trace_term(CORPUS["path-3-1"], 3, 4)


def test_trace_sequence_metadata():
    ts = trace_sequence(CORPUS["rand-2-c"], 4)
    assert isinstance(ts, TraceSequence)
    assert (ts.m, ts.n) == (2, 5)
    assert all(isinstance(v, Fraction) for v in ts.values)
    assert len(ts.values) == 5


def test_graph_traces_are_integers():
    """Ordinary-graph power sums must come out with denominator 1."""
    ts = trace_sequence(CORPUS["rand-2-b"], 7)
    assert all(v.denominator == 1 for v in ts.values)
