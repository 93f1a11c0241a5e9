"""Directed multigraph with stable integer edge ids.

Edge ids are assigned in insertion order and are never reused or renumbered:
deleting edges leaves the surviving ids untouched, so certificates and cycle
partitions computed on a graph remain meaningful on any graph derived from it
by deletion or restriction.  Parallel edges and self-loops are allowed; each
edge instance carries its own id.

All iteration that can influence output is in ascending edge-id order (the
per-vertex adjacency maps are insertion-ordered and only ever shrink), so
every algorithm built on top of this module is deterministic for a fixed
input.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Cut:
    """The directed cut of a vertex set: outgoing and ingoing edge ids.

    ``out_edges`` hold edges with tail inside ``subject`` and head outside;
    ``in_edges`` the reverse.  Self-loops and internal edges appear in
    neither, so the two sets are disjoint by construction.
    """

    subject: frozenset[int]
    out_edges: frozenset[int]
    in_edges: frozenset[int]


class Digraph:
    """A finite directed multigraph over non-negative integer vertex ids."""

    __slots__ = ("_vertices", "_edges", "_out", "_in", "_next_edge_id")

    def __init__(
        self,
        vertex_count_hint: int = 0,
        edges: Iterable[tuple[int, int]] = (),
    ) -> None:
        """Build a graph with vertices 0..hint-1 plus every mentioned endpoint.

        Edge ids are 0, 1, 2, ... in input order.  Negative vertex
        designators are rejected.
        """
        if vertex_count_hint < 0:
            raise ValueError("vertex count hint must be non-negative")
        self._vertices: set[int] = set(range(vertex_count_hint))
        self._edges: dict[int, tuple[int, int]] = {}
        # vertex -> {edge id: other endpoint}, insertion-ordered by edge id
        self._out: dict[int, dict[int, int]] = {}
        self._in: dict[int, dict[int, int]] = {}
        self._next_edge_id = 0
        for tail, head in edges:
            self._insert_edge(tail, head)

    # -- construction internals ------------------------------------------

    def _insert_edge(self, tail: int, head: int) -> int:
        if tail < 0 or head < 0:
            raise ValueError(f"negative vertex designator in edge ({tail}, {head})")
        eid = self._next_edge_id
        self._next_edge_id = eid + 1
        self._vertices.add(tail)
        self._vertices.add(head)
        self._edges[eid] = (tail, head)
        out = self._out.get(tail)
        if out is None:
            out = self._out[tail] = {}
        out[eid] = head
        inn = self._in.get(head)
        if inn is None:
            inn = self._in[head] = {}
        inn[eid] = tail
        return eid

    def _remove_edge(self, eid: int) -> None:
        tail, head = self._edges.pop(eid)
        del self._out[tail][eid]
        del self._in[head][eid]

    def _remove_edges(self, eids: Iterable[int]) -> None:
        for eid in eids:
            self._remove_edge(eid)

    # -- basic queries -----------------------------------------------------

    @property
    def vertices(self) -> set[int]:
        """The vertex set.  Treat as read-only."""
        return self._vertices

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def edge_ids(self) -> list[int]:
        """All alive edge ids in ascending order."""
        return list(self._edges)

    def edge(self, eid: int) -> tuple[int, int]:
        """(tail, head) of an alive edge; raises ValueError for unknown ids."""
        try:
            return self._edges[eid]
        except KeyError:
            raise ValueError(f"unknown edge id {eid}") from None

    def has_edge(self, eid: int) -> bool:
        return eid in self._edges

    def has_vertex(self, v: int) -> bool:
        return v in self._vertices

    def out_degree(self, v: int) -> int:
        out = self._out.get(v)
        return len(out) if out else 0

    def in_degree(self, v: int) -> int:
        inn = self._in.get(v)
        return len(inn) if inn else 0

    def out_edges(self, v: int) -> Iterator[tuple[int, int]]:
        """(edge id, head) pairs leaving v, ascending by id."""
        out = self._out.get(v)
        return iter(out.items()) if out else iter(())

    def in_edges(self, v: int) -> Iterator[tuple[int, int]]:
        """(edge id, tail) pairs entering v, ascending by id."""
        inn = self._in.get(v)
        return iter(inn.items()) if inn else iter(())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __repr__(self) -> str:
        return f"Digraph(|V|={len(self._vertices)}, |A|={len(self._edges)})"

    # -- derived graphs ----------------------------------------------------

    def copy(self) -> "Digraph":
        g = Digraph.__new__(Digraph)
        g._vertices = set(self._vertices)
        g._edges = dict(self._edges)
        g._out = {v: dict(d) for v, d in self._out.items() if d}
        g._in = {v: dict(d) for v, d in self._in.items() if d}
        g._next_edge_id = self._next_edge_id
        return g

    def delete_edges(self, removed: Iterable[int]) -> "Digraph":
        """A copy with the given edges removed; surviving ids unchanged."""
        removed = set(removed)
        for eid in removed:
            if eid not in self._edges:
                raise ValueError(f"unknown edge id {eid}")
        g = self.copy()
        g._remove_edges(removed)
        return g

    def restrict(self, vs: Iterable[int], es: Iterable[int] | None = None) -> "Digraph":
        """The subgraph on ``vertices & vs`` with edges drawn from ``es``.

        Pure intersection semantics: ids outside this graph are silently
        ignored, and edges survive only when both endpoints survive.
        ``es=None`` means all alive edges.  Edge ids are preserved.
        """
        vs = self._vertices & set(vs)
        g = Digraph.__new__(Digraph)
        g._vertices = vs
        g._edges = {}
        g._out = {}
        g._in = {}
        g._next_edge_id = self._next_edge_id
        if es is None:
            wanted = self._edges.items()
        else:
            es = set(es)
            wanted = ((eid, th) for eid, th in self._edges.items() if eid in es)
        for eid, (tail, head) in wanted:
            if tail in vs and head in vs:
                g._edges[eid] = (tail, head)
                g._out.setdefault(tail, {})[eid] = head
                g._in.setdefault(head, {})[eid] = tail
        return g

    # -- structural queries --------------------------------------------------

    def cut(self, x: Iterable[int]) -> Cut:
        """Outgoing and ingoing edges of the vertex set x."""
        xs = set(x)
        for v in xs:
            if v not in self._vertices:
                raise ValueError(f"unknown vertex id {v}")
        out: list[int] = []
        inn: list[int] = []
        for v in xs:
            o = self._out.get(v)
            if o:
                out.extend(eid for eid, head in o.items() if head not in xs)
            i = self._in.get(v)
            if i:
                inn.extend(eid for eid, tail in i.items() if tail not in xs)
        return Cut(frozenset(xs), frozenset(out), frozenset(inn))

    def weak_components(self) -> list[frozenset[int]]:
        """Maximal vertex sets connected when directions are ignored.

        Ordered by least contained vertex id.
        """
        seen: set[int] = set()
        comps: list[frozenset[int]] = []
        for root in sorted(self._vertices):
            if root in seen:
                continue
            comp = {root}
            seen.add(root)
            queue = deque((root,))
            while queue:
                v = queue.popleft()
                o = self._out.get(v)
                if o:
                    for w in o.values():
                        if w not in seen:
                            seen.add(w)
                            comp.add(w)
                            queue.append(w)
                i = self._in.get(v)
                if i:
                    for w in i.values():
                        if w not in seen:
                            seen.add(w)
                            comp.add(w)
                            queue.append(w)
            comps.append(frozenset(comp))
        return comps

    def strong_components(self) -> list[frozenset[int]]:
        """Maximal strongly connected vertex sets, by least contained id.

        Iterative Tarjan, safe on long paths.
        """
        index: dict[int, int] = {}
        low: dict[int, int] = {}
        on_stack: set[int] = set()
        stack: list[int] = []
        comps: list[frozenset[int]] = []
        counter = 0

        for root in sorted(self._vertices):
            if root in index:
                continue
            work: list[tuple[int, Iterator[int]]] = []
            index[root] = low[root] = counter
            counter += 1
            stack.append(root)
            on_stack.add(root)
            out = self._out.get(root)
            work.append((root, iter(out.values()) if out else iter(())))
            while work:
                v, succ = work[-1]
                advanced = False
                for w in succ:
                    if w not in index:
                        index[w] = low[w] = counter
                        counter += 1
                        stack.append(w)
                        on_stack.add(w)
                        o = self._out.get(w)
                        work.append((w, iter(o.values()) if o else iter(())))
                        advanced = True
                        break
                    if w in on_stack and index[w] < low[v]:
                        low[v] = index[w]
                if advanced:
                    continue
                work.pop()
                if work:
                    parent = work[-1][0]
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                if low[v] == index[v]:
                    comp = set()
                    while True:
                        w = stack.pop()
                        on_stack.discard(w)
                        comp.add(w)
                        if w == v:
                            break
                    comps.append(frozenset(comp))
        comps.sort(key=min)
        return comps

    def reachable_avoiding(
        self, sources: Iterable[int], forbidden: Iterable[int]
    ) -> frozenset[int]:
        """Closure of ``sources`` under tail-to-head traversal of alive
        edges whose ids are not in ``forbidden``."""
        srcs = set(sources)
        for v in srcs:
            if v not in self._vertices:
                raise ValueError(f"unknown vertex id {v}")
        banned = set(forbidden)
        seen = set(srcs)
        queue = deque(srcs)
        while queue:
            v = queue.popleft()
            o = self._out.get(v)
            if not o:
                continue
            for eid, w in o.items():
                if w not in seen and eid not in banned:
                    seen.add(w)
                    queue.append(w)
        return frozenset(seen)

    def edge_connectivity(self, u: int, v: int, undirected: bool = False) -> int:
        """Maximum number of pairwise edge-disjoint u-to-v paths.

        Directed by default; with ``undirected=True`` paths may traverse
        edges against their orientation.  Equals the minimum number of edges
        whose removal separates v from u (unit-capacity max-flow).
        """
        if u == v:
            raise ValueError("endpoints must differ")
        if u not in self._vertices or v not in self._vertices:
            raise ValueError("unknown vertex id")
        residual: dict[int, dict[int, int]] = {}

        def bump(a: int, b: int) -> None:
            fwd = residual.setdefault(a, {})
            fwd[b] = fwd.get(b, 0) + 1
            residual.setdefault(b, {}).setdefault(a, 0)

        for tail, head in self._edges.values():
            if tail == head:
                continue
            bump(tail, head)
            if undirected:
                bump(head, tail)

        flow = 0
        while True:
            parent: dict[int, int] = {u: u}
            queue = deque((u,))
            while queue and v not in parent:
                a = queue.popleft()
                nbrs = residual.get(a)
                if not nbrs:
                    continue
                for b, cap in nbrs.items():
                    if cap > 0 and b not in parent:
                        parent[b] = a
                        if b == v:
                            break
                        queue.append(b)
            if v not in parent:
                return flow
            b = v
            while b != u:
                a = parent[b]
                residual[a][b] -= 1
                residual[b][a] += 1
                b = a
            flow += 1
