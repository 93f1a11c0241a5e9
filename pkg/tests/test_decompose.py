"""Cycle extraction and full decomposition: the partition/certificate
dichotomy, cycle shapes, determinism and progress."""

import pytest
from hypothesis import given, settings

from dicycles import (
    CyclePartition,
    Digraph,
    ImbalanceCertificate,
    NoDicycleError,
    brute_force_overloaded,
    check_certificate,
    check_partition,
    decompose,
    decompose_component,
    extract_cycle_through,
    is_balanced,
)

from conftest import balanced_digraphs, digraphs

TRIANGLE = [(0, 1), (1, 2), (2, 0)]
# two triangles sharing vertex 0: ids 0..2 on {0,1,2}, ids 3..5 on {0,3,4}
BOWTIE = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]


# -- extract_cycle_through ----------------------------------------------------


def test_extract_triangle_is_the_whole_cycle():
    cycle = extract_cycle_through(Digraph(3, TRIANGLE), 0)
    assert cycle.edge_ids == (0, 1, 2)


def test_extract_digon():
    cycle = extract_cycle_through(Digraph(2, [(0, 1), (1, 0)]), 0)
    assert cycle.edge_ids == (0, 1)


def test_extract_self_loop():
    cycle = extract_cycle_through(Digraph(1, [(0, 0)]), 0)
    assert cycle.edge_ids == (0,)


def test_extract_bowtie_stays_in_its_triangle():
    # from head(0) = 1 the only way onward is 1->2->0; the search never
    # needs the second triangle
    cycle = extract_cycle_through(Digraph(5, BOWTIE), 0)
    assert cycle.edge_ids == (0, 1, 2)


def test_extract_prefers_shortest_return_path():
    # both 1->2->0 and the direct 1->0 close edge 0; BFS takes the digon
    g = Digraph(3, [(0, 1), (1, 2), (2, 0), (1, 0)])
    assert extract_cycle_through(g, 0).edge_ids == (0, 3)


def test_extract_failure_carries_overloaded_reachable_set():
    g = Digraph(3, [(0, 1), (1, 2)])
    with pytest.raises(NoDicycleError) as info:
        extract_cycle_through(g, 0)
    cert = info.value.certificate
    assert cert.form == "raw"
    # everything reachable from head(0), with no way back out
    assert cert.x == frozenset({1, 2})
    assert cert.out_count < cert.in_count
    assert check_certificate(g, cert) is None


# -- decompose -----------------------------------------------------------------


def test_decompose_empty_graph():
    partition = decompose(Digraph(4))
    assert isinstance(partition, CyclePartition)
    assert partition.cycles == [] and partition.assignment == {}


def test_decompose_two_disjoint_triangles():
    g = Digraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    partition = decompose(g)
    assert len(partition.cycles) == 2
    assert sorted(partition.assignment) == list(range(6))
    assert check_partition(g, partition) is None


def test_decompose_bowtie_two_triangles():
    g = Digraph(5, BOWTIE)
    partition = decompose(g)
    assert [c.edge_ids for c in partition.cycles] == [(0, 1, 2), (3, 4, 5)]
    assert check_partition(g, partition) is None


def test_decompose_path_yields_saturated_certificate():
    g = Digraph(3, [(0, 1), (1, 2)])
    cert = decompose(g)
    assert isinstance(cert, ImbalanceCertificate)
    assert cert.form == "saturated"
    assert cert.x == frozenset({2})
    assert check_certificate(g, cert) is None


def test_decompose_digon_and_loop():
    g = Digraph(2, [(0, 1), (1, 0), (0, 0)])
    partition = decompose(g)
    assert check_partition(g, partition) is None
    assert sorted(len(c) for c in partition.cycles) == [1, 2]


# -- decompose_component ----------------------------------------------------------


def test_decompose_component_whole_bowtie():
    g = Digraph(5, BOWTIE)
    partition = decompose_component(g, {0, 1, 2, 3, 4})
    assert [c.edge_ids for c in partition.cycles] == [(0, 1, 2), (3, 4, 5)]


def test_decompose_component_one_of_two():
    g = Digraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    partition = decompose_component(g, {3, 4, 5})
    assert [c.edge_ids for c in partition.cycles] == [(3, 4, 5)]


def test_decompose_component_rejects_non_component():
    g = Digraph(3, TRIANGLE)
    with pytest.raises(ValueError, match="not a weak component"):
        decompose_component(g, {0, 1})


def test_decompose_component_rejects_unbalanced():
    g = Digraph(2, [(0, 1)])
    with pytest.raises(ValueError, match="not balanced"):
        decompose_component(g, {0, 1})


def test_decompose_giant_cycle_without_recursion_limits():
    # one 10000-edge cycle: components, extraction and certificates must all
    # stay iterative
    n = 10_000
    edges = [(i, (i + 1) % n) for i in range(n)]
    g = Digraph(n, edges)
    partition = decompose(g)
    assert len(partition.cycles) == 1
    assert check_partition(g, partition) is None
    assert g.strong_components() == [frozenset(range(n))]

    path = Digraph(n, edges[:-1])
    cert = decompose(path)
    assert isinstance(cert, ImbalanceCertificate)
    assert check_certificate(path, cert) is None


# -- invariants --------------------------------------------------------------------


@settings(max_examples=120, deadline=None)
@given(balanced_digraphs())
def test_decompose_complete_and_sound_on_balanced(g):
    partition = decompose(g)
    assert isinstance(partition, CyclePartition)
    assert check_partition(g, partition) is None
    # progress: every cycle removes at least one edge, so at most |A| cycles
    assert len(partition.cycles) <= g.edge_count
    assert sum(len(c) for c in partition.cycles) == g.edge_count


@settings(max_examples=120, deadline=None)
@given(digraphs())
def test_decompose_dichotomy_matches_balance(g):
    result = decompose(g)
    if is_balanced(g):
        assert isinstance(result, CyclePartition)
    else:
        assert isinstance(result, ImbalanceCertificate)
        assert check_certificate(g, result) is None
        assert brute_force_overloaded(g) is not None


@settings(max_examples=60, deadline=None)
@given(digraphs())
def test_decompose_is_deterministic(g):
    assert decompose(g) == decompose(g.copy())


@settings(max_examples=60, deadline=None)
@given(balanced_digraphs())
def test_decompose_per_component_agrees_with_global(g):
    per_component: dict[int, tuple[int, ...]] = {}
    for comp in g.weak_components():
        partition = decompose_component(g, comp)
        for cycle in partition.cycles:
            per_component[cycle.edge_ids[0]] = cycle.edge_ids
    whole = decompose(g)
    assert {c.edge_ids[0]: c.edge_ids for c in whole.cycles} == per_component
