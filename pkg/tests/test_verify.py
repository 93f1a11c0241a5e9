"""Checkers and the small-instance theorem crosscheck."""

import pytest
from hypothesis import given, settings

from dicycles import (
    CyclePartition,
    Dicycle,
    Digraph,
    ImbalanceCertificate,
    brute_force_overloaded,
    check_certificate,
    check_partition,
    decompose,
    exhaustive_decomposition_search,
    is_balanced,
    refine_overloaded,
    saturate_overloaded,
    theorem_crosscheck,
)

from conftest import digraphs

TRIANGLE = [(0, 1), (1, 2), (2, 0)]
BOWTIE = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]


# -- check_partition ---------------------------------------------------------


def test_accepts_decomposer_output():
    g = Digraph(3, TRIANGLE)
    assert check_partition(g, decompose(g)) is None


def test_reports_uncovered_edge():
    g = Digraph(3, TRIANGLE)
    partial = CyclePartition([], {})
    assert "uncovered edge 0" in check_partition(g, partial)


def test_reports_non_simple_cycle():
    # a figure-eight walk through vertex 0 is closed but revisits 0
    edges = [(0, 1), (1, 0), (0, 2), (2, 0)]
    g = Digraph(3, edges)
    walk = CyclePartition(
        [Dicycle((0, 1, 2, 3))], {0: 0, 1: 0, 2: 0, 3: 0}
    )
    assert "non-simple" in check_partition(g, walk)


def test_reports_unclosed_cycle():
    g = Digraph(3, [(0, 1), (1, 2)])
    broken = CyclePartition([Dicycle((0, 1))], {0: 0, 1: 0})
    assert "not closed" in check_partition(g, broken)


def test_reports_duplicate_coverage():
    g = Digraph(1, [(0, 0)])
    doubled = CyclePartition([Dicycle((0,)), Dicycle((0,))], {0: 0})
    assert "appears in cycles 0 and 1" in check_partition(g, doubled)


def test_reports_assignment_mismatch():
    g = Digraph(1, [(0, 0)])
    wrong = CyclePartition([Dicycle((0,))], {0: 3})
    assert "assignment" in check_partition(g, wrong)


# -- check_certificate -----------------------------------------------------------


def test_accepts_decomposer_certificate():
    g = Digraph(3, [(0, 1), (1, 2)])
    assert check_certificate(g, decompose(g)) is None


def test_rejects_balanced_singleton():
    g = Digraph(3, TRIANGLE)
    fake = ImbalanceCertificate("raw", frozenset({1}), 1, 1)
    assert "not overloaded" in check_certificate(g, fake)


def test_rejects_wrong_counts():
    g = Digraph(2, [(0, 1)])
    fake = ImbalanceCertificate("raw", frozenset({1}), 0, 5)
    assert "counts" in check_certificate(g, fake)


def test_rejects_disconnected_refined_x():
    # x = {1, 3} is overloaded but induces two weak components
    g = Digraph(4, [(0, 1), (2, 3), (0, 3)])
    fake = ImbalanceCertificate(
        "refined",
        frozenset({1, 3}),
        0,
        3,
        component=frozenset({0, 1, 2, 3}),
        complement_y=frozenset({0, 2}),
    )
    assert "refinement invariant" in check_certificate(g, fake)


def test_rejects_padded_saturated_x():
    # {1} alone is saturated; padding it with the unreachable vertex 2
    # keeps it overloaded but breaks the closure shape
    g = Digraph(3, [(0, 1)])
    padded = ImbalanceCertificate("saturated", frozenset({1, 2}), 0, 1)
    assert "closure" in check_certificate(g, padded)
    genuine = ImbalanceCertificate("saturated", frozenset({1}), 0, 1)
    assert check_certificate(g, genuine) is None


def test_rejects_unknown_vertex():
    g = Digraph(2, [(0, 1)])
    fake = ImbalanceCertificate("raw", frozenset({9}), 0, 1)
    assert "unknown vertex" in check_certificate(g, fake)


def test_checker_accepts_non_minimal_saturated_shapes():
    # saturating {0, 2, 3} yields {2, 3}; re-running the construction on
    # {2, 3} shrinks it further to {3} (the seed picks a different in-edge),
    # yet {2, 3} is a genuine closure of its own cut and must be accepted
    g = Digraph(4, [(0, 3), (1, 2), (2, 3)])
    cert = saturate_overloaded(g, {0, 2, 3})
    assert cert.x == frozenset({2, 3})
    assert check_certificate(g, cert) is None
    again = saturate_overloaded(g, cert.x)
    assert again.x == frozenset({3})
    assert check_certificate(g, again) is None


@settings(max_examples=150, deadline=None)
@given(digraphs())
def test_checker_accepts_every_emitted_certificate(g):
    witness = brute_force_overloaded(g)
    if witness is None:
        return
    assert check_certificate(g, witness) is None
    refined = refine_overloaded(g, witness.x)
    assert check_certificate(g, refined) is None
    assert check_certificate(g, saturate_overloaded(g, refined.x)) is None
    assert check_certificate(g, saturate_overloaded(g, witness.x)) is None


# -- exhaustive_decomposition_search ------------------------------------------------


def test_search_triangle():
    assert exhaustive_decomposition_search(Digraph(3, TRIANGLE))


def test_search_single_edge():
    assert not exhaustive_decomposition_search(Digraph(2, [(0, 1)]))


def test_search_bowtie():
    assert exhaustive_decomposition_search(Digraph(5, BOWTIE))


def test_search_balanced_but_tricky_multigraph():
    # two parallel digons plus a loop
    g = Digraph(2, [(0, 1), (1, 0), (0, 1), (1, 0), (1, 1)])
    assert exhaustive_decomposition_search(g)


def test_search_bound():
    g = Digraph(4, [(0, 1)] * 15)
    with pytest.raises(ValueError, match="bound"):
        exhaustive_decomposition_search(g)


# -- theorem_crosscheck ----------------------------------------------------------


def test_crosscheck_three_vertices():
    report = theorem_crosscheck(3, 6)
    assert report.discrepancies == []
    assert report.graphs_checked > 400
    assert 0 < report.balanced < report.graphs_checked
    assert report.decomposable == report.balanced


def test_crosscheck_self_loop_world():
    # one vertex, one edge: the empty graph and the lone self-loop, which
    # is a dicycle of length one
    report = theorem_crosscheck(1, 1)
    assert report.graphs_checked == 2
    assert report.balanced == 2
    assert report.discrepancies == []
    assert is_balanced(Digraph(1, [(0, 0)]))
    assert exhaustive_decomposition_search(Digraph(1, [(0, 0)]))


def test_crosscheck_digon_world():
    report = theorem_crosscheck(2, 2)
    assert report.discrepancies == []
    # spot-check the two landmark graphs behind the counts
    assert exhaustive_decomposition_search(Digraph(2, [(0, 1), (1, 0)]))
    assert not exhaustive_decomposition_search(Digraph(2, [(0, 1)]))


def test_crosscheck_default_bounds_clean():
    report = theorem_crosscheck()
    assert report.discrepancies == []
    assert report.graphs_checked > 10_000
