"""Partition a balanced digraph's edges into simple directed cycles.

The decomposition walks edge ids in ascending order and, for each edge that
is still present, deletes one shortest simple cycle through it.  Deleting a
cycle removes one in-edge and one out-edge from every vertex set it crosses,
so the residual stays balanced and every weak component of it stays strongly
connected; the next pivot edge therefore always lies on a cycle, and the
recursion consumes the whole edge set.

On an unbalanced graph the dichotomy is returned as a value, not raised: the
caller gets a saturated :class:`ImbalanceCertificate` derived from a
degree-imbalanced vertex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .balance import (
    ImbalanceCertificate,
    degree_imbalance,
    refine_overloaded,
    saturate_overloaded,
)
from .digraph import Digraph


@dataclass(frozen=True)
class Dicycle:
    """A simple directed cycle as an edge-id sequence in traversal order.

    Each edge's head is the next edge's tail (cyclically) and no vertex is
    visited twice.  Length 1 is a self-loop; length 2 is a digon of two
    opposite parallel edges.
    """

    edge_ids: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edge_ids)


@dataclass
class CyclePartition:
    """Edge-disjoint cycles covering every alive edge exactly once."""

    cycles: list[Dicycle]
    assignment: dict[int, int]


class NoDicycleError(ValueError):
    """An edge lies on no directed cycle of its graph.

    Carries a raw imbalance certificate: the set of vertices reachable from
    the edge's head has no outgoing edges but is entered by the edge itself,
    so it is overloaded.
    """

    def __init__(self, eid: int, certificate: ImbalanceCertificate) -> None:
        super().__init__(f"edge {eid} is not on any dicycle")
        self.edge_id = eid
        self.certificate = certificate


def _find_cycle(g: Digraph, eid: int) -> tuple[Dicycle | None, frozenset[int] | None]:
    """Shortest cycle through an edge, or the reachable set that blocks it.

    Returns (cycle, None) on success and (None, reach) when no return path
    exists, where reach is everything reachable from the edge's head.  The
    failure branch stays cheap on purpose: the streaming engine probes with
    this on every push.
    """
    tail, head = g.edge(eid)
    if tail == head:
        return Dicycle((eid,)), None
    adjacency = g._out
    parent: dict[int, int] = {head: -1}  # vertex -> edge that discovered it
    queue = deque((head,))
    found = False
    while queue and not found:
        v = queue.popleft()
        out = adjacency.get(v)
        if not out:
            continue
        for e2, w in out.items():
            if w not in parent:
                parent[w] = e2
                if w == tail:
                    found = True
                    break
                queue.append(w)
    if not found:
        return None, frozenset(parent)
    path: list[int] = []
    v = tail
    while v != head:
        e2 = parent[v]
        path.append(e2)
        v = g._edges[e2][0]
    path.reverse()
    return Dicycle((eid, *path)), None


def extract_cycle_through(g: Digraph, eid: int) -> Dicycle:
    """The shortest simple cycle through the given edge.

    Breadth-first search from the edge's head to its tail, scanning
    neighbors in ascending edge-id order, so the result is deterministic
    for a fixed graph.  Raises :class:`NoDicycleError` when no return path
    exists.
    """
    cycle, reach = _find_cycle(g, eid)
    if cycle is None:
        c = g.cut(reach)
        raise NoDicycleError(
            eid,
            ImbalanceCertificate(
                "raw", reach, len(c.out_edges), len(c.in_edges)
            ),
        )
    return cycle


def decompose(g: Digraph) -> CyclePartition | ImbalanceCertificate:
    """Partition the edge set into dicycles, or certify that none exists.

    A balanced graph yields a :class:`CyclePartition`; an unbalanced one
    yields the refined-then-saturated certificate grown from the least
    vertex with more ingoing than outgoing edges.
    """
    imbalance = degree_imbalance(g)
    if imbalance:
        v = min(u for u, d in imbalance.items() if d > 0)
        refined = refine_overloaded(g, {v})
        return saturate_overloaded(g, refined.x)

    residual = g.copy()
    cycles: list[Dicycle] = []
    assignment: dict[int, int] = {}
    for eid in g.edge_ids():
        if not residual.has_edge(eid):
            continue
        cycle = extract_cycle_through(residual, eid)
        index = len(cycles)
        for e2 in cycle.edge_ids:
            assignment[e2] = index
        residual._remove_edges(cycle.edge_ids)
        cycles.append(cycle)
    return CyclePartition(cycles, assignment)


def decompose_component(g: Digraph, component) -> CyclePartition:
    """Partition the edges of one weak component of g.

    The component must be an actual weak component and must be balanced;
    edge ids in the result are g's own.
    """
    component = frozenset(component)
    if component not in g.weak_components():
        raise ValueError("vertex set is not a weak component of the graph")
    sub = g.restrict(component)
    result = decompose(sub)
    if isinstance(result, ImbalanceCertificate):
        raise ValueError(
            f"component is not balanced: out={result.out_count}, "
            f"in={result.in_count} for x={sorted(result.x)}"
        )
    return result
