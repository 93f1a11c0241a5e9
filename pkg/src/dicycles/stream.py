"""Online cycle extraction from an edge stream.

Edges are buffered into a residual digraph as they arrive; ids follow push
order.  Under the default ``eager-oldest`` policy the engine repeatedly
deletes and emits a cycle through the oldest buffered edge for as long as
one exists, mirroring the offline decomposition's ascending-id discipline.
``eager-any`` first tries to close a cycle through the edge that just
arrived; ``lazy`` buffers everything until :meth:`StreamEngine.drain`.

Emitting a cycle removes one in-edge and one out-edge from every vertex set
it meets, so the residual's degree imbalance always equals that of the full
pushed prefix; draining a balanced stream therefore always completes the
partition, and draining an unbalanced one yields a certificate that is also
valid for the whole input.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .balance import ImbalanceCertificate
from .decompose import CyclePartition, Dicycle, _find_cycle, decompose
from .digraph import Digraph

POLICIES = ("eager-oldest", "eager-any", "lazy")


@dataclass(frozen=True)
class StreamStats:
    peak_buffer_edges: int
    current_buffer_edges: int
    cycles_emitted: int


class StreamEngine:
    """Single-owner stream state: residual buffer plus emitted cycles."""

    def __init__(self, policy: str = "eager-oldest") -> None:
        if policy not in POLICIES:
            raise ValueError(f"unknown policy {policy!r}; expected one of {POLICIES}")
        self.policy = policy
        self.emitted: list[Dicycle] = []
        self.next_edge_index = 0
        self._residual = Digraph()
        self._peak = 0
        self._oldest = 0
        # While the oldest edge is blocked, the set of vertices reachable
        # from its head and that edge's tail.  Between extractions the
        # residual only grows, so the set can be maintained incrementally:
        # a pushed edge extends it only when its tail is already inside.
        # The oldest edge becomes closable exactly when its tail appears.
        self._blocked_reach: set[int] | None = None
        self._blocked_tail = -1

    def push(self, tail: int, head: int) -> list[Dicycle]:
        """Buffer one edge; return the cycles this push caused to close."""
        residual = self._residual
        eid = residual._insert_edge(tail, head)
        self.next_edge_index = eid + 1
        if residual.edge_count > self._peak:
            self._peak = residual.edge_count
        if self.policy == "lazy":
            return []

        closed: list[Dicycle] = []
        if self.policy == "eager-any":
            cycle, _ = _find_cycle(residual, eid)
            if cycle is not None:
                self._commit(cycle)
                closed.append(cycle)
        reach = self._blocked_reach
        if reach is not None:  # still valid: any extraction clears it
            if tail in reach and head not in reach:
                self._extend_reach(head)
            if self._blocked_tail not in reach:
                return closed
        closed.extend(self._extract_from_oldest())
        return closed

    def _extend_reach(self, start: int) -> None:
        reach = self._blocked_reach
        out_map = self._residual._out
        reach.add(start)
        queue = deque((start,))
        while queue:
            v = queue.popleft()
            out = out_map.get(v)
            if not out:
                continue
            for w in out.values():
                if w not in reach:
                    reach.add(w)
                    queue.append(w)

    def _extract_from_oldest(self) -> list[Dicycle]:
        """Extract cycles through the oldest buffered edge until it blocks."""
        closed: list[Dicycle] = []
        residual = self._residual
        while residual.edge_count:
            while not residual.has_edge(self._oldest):
                self._oldest += 1
            cycle, reach = _find_cycle(residual, self._oldest)
            if cycle is None:
                self._blocked_reach = set(reach)
                self._blocked_tail = residual.edge(self._oldest)[0]
                break
            self._commit(cycle)
            closed.append(cycle)
        return closed

    def _commit(self, cycle: Dicycle) -> None:
        self._residual._remove_edges(cycle.edge_ids)
        self._blocked_reach = None
        self.emitted.append(cycle)

    def drain(self) -> CyclePartition | ImbalanceCertificate:
        """Decompose the residual and splice the result after the emitted
        cycles, covering every pushed edge; or return the residual's
        certificate if the stream was unbalanced."""
        result = decompose(self._residual)
        if isinstance(result, ImbalanceCertificate):
            return result
        cycles = list(self.emitted)
        cycles.extend(result.cycles)
        assignment: dict[int, int] = {}
        for index, cycle in enumerate(cycles):
            for eid in cycle.edge_ids:
                assignment[eid] = index
        return CyclePartition(cycles, assignment)

    def residual(self) -> Digraph:
        """A snapshot of the not-yet-emitted buffered edges."""
        return self._residual.copy()

    def stats(self) -> StreamStats:
        return StreamStats(
            peak_buffer_edges=self._peak,
            current_buffer_edges=self._residual.edge_count,
            cycles_emitted=len(self.emitted),
        )
