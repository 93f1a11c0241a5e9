"""The edge-list text format shared by the library and the CLI.

One edge per line, ``tail head`` as whitespace-separated decimal vertex
ids.  Lines beginning with ``#`` are comments; blank lines are ignored.
An optional header line ``vertices N`` declares vertices 0..N-1 on top of
every id the edges mention.  Edge ids are assigned in file order starting
at 0.
"""

from __future__ import annotations

from typing import Iterable

from .digraph import Digraph


class EdgeListParseError(Exception):
    """Malformed edge-list input, with the offending line number."""

    def __init__(self, lineno: int, reason: str) -> None:
        super().__init__(f"line {lineno}: {reason}")
        self.lineno = lineno
        self.reason = reason


def parse_line(lineno: int, line: str) -> tuple[str, int, int] | None:
    """Classify one line: ("edge", tail, head), ("vertices", n, 0), or None
    for blanks and comments."""
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return None
    tokens = stripped.split()
    if tokens[0] == "vertices":
        if len(tokens) != 2:
            raise EdgeListParseError(lineno, "expected vertex count")
        try:
            n = int(tokens[1])
        except ValueError:
            raise EdgeListParseError(lineno, "expected vertex count") from None
        if n < 0:
            raise EdgeListParseError(lineno, "negative vertex count")
        return ("vertices", n, 0)
    if len(tokens) != 2:
        raise EdgeListParseError(lineno, "expected two integers")
    try:
        tail, head = int(tokens[0]), int(tokens[1])
    except ValueError:
        raise EdgeListParseError(lineno, "expected two integers") from None
    if tail < 0 or head < 0:
        raise EdgeListParseError(lineno, "negative vertex id")
    return ("edge", tail, head)


def parse_edge_list(text: str) -> tuple[int, list[tuple[int, int]]]:
    """Parse a whole document into (vertex count hint, edge pairs)."""
    hint = 0
    edges: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        item = parse_line(lineno, line)
        if item is None:
            continue
        kind, a, b = item
        if kind == "vertices":
            hint = max(hint, a)
        else:
            edges.append((a, b))
    return hint, edges


def load_digraph(text: str) -> Digraph:
    hint, edges = parse_edge_list(text)
    return Digraph(hint, edges)


def format_edge_list(
    g: Digraph, comments: Iterable[str] = ()
) -> str:
    """Render a graph back to the text format.

    The header declares 0..max which is only faithful for graphs with a
    dense vertex universe (everything the generators produce).
    """
    lines = [f"# {c}" for c in comments]
    n = max(g.vertices) + 1 if g.vertices else 0
    lines.append(f"vertices {n}")
    for eid in g.edge_ids():
        tail, head = g.edge(eid)
        lines.append(f"{tail} {head}")
    return "\n".join(lines) + "\n"
