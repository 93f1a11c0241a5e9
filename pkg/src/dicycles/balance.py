"""Balance testing and imbalance certificates.

A vertex set X is *overloaded* when it has strictly fewer outgoing than
ingoing edges; a digraph is *balanced* when no subset is overloaded.  For a
finite digraph that is equivalent to every vertex having equal in- and
out-degree, which is what :func:`is_balanced` checks in linear time.  The
subset-quantified definition survives as :func:`brute_force_overloaded`, an
exponential oracle used to cross-check the cheap test.

An overloaded set can be put into two canonical shapes:

* *refined* - X together with the complement Y of its weak component Z such
  that both induced subgraphs are weakly connected (``refine_overloaded``);
* *saturated* - the reachability closure X' of a small seed set, which is a
  subset of the input set, keeps its outgoing edges, and has at least
  ``|out(X)| + 1`` ingoing edges (``saturate_overloaded``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .digraph import Digraph

RAW = "raw"
REFINED = "refined"
SATURATED = "saturated"


@dataclass(frozen=True)
class ImbalanceCertificate:
    """An overloaded vertex set with its cut counts.

    ``component`` (the weak component Z) and ``complement_y`` (Y = Z minus x)
    are present exactly when ``form == "refined"``.
    """

    form: str
    x: frozenset[int]
    out_count: int
    in_count: int
    component: frozenset[int] | None = None
    complement_y: frozenset[int] | None = None


def degree_imbalance(g: Digraph) -> dict[int, int]:
    """Per-vertex indegree minus outdegree, zero entries omitted.

    Self-loops add to both degrees and so contribute nothing.  The values
    sum to zero over any whole graph.
    """
    touched = set(g._out) | set(g._in)
    imbalance = {}
    for v in sorted(touched):
        d = g.in_degree(v) - g.out_degree(v)
        if d:
            imbalance[v] = d
    return imbalance


def is_balanced(g: Digraph) -> bool:
    """True iff every vertex has equal in- and out-degree.

    For finite graphs this is equivalent to no subset being overloaded
    (cross-checked against :func:`brute_force_overloaded` in the test
    suite).
    """
    return not degree_imbalance(g)


def brute_force_overloaded(
    g: Digraph, max_vertices: int = 20
) -> ImbalanceCertificate | None:
    """Exhaustively search all vertex subsets for an overloaded one.

    Returns the overloaded set minimizing (size, lexicographic vertex
    order), or None if the graph is balanced.  2^|V| enumeration; refuses
    graphs with more than ``max_vertices`` vertices.
    """
    vs = sorted(g.vertices)
    if len(vs) > max_vertices:
        raise ValueError(
            f"{len(vs)} vertices exceeds the brute-force bound {max_vertices}; "
            "use is_balanced instead"
        )
    edges = list(g._edges.values())
    for k in range(1, len(vs) + 1):
        for combo in combinations(vs, k):
            xs = set(combo)
            out = 0
            inn = 0
            for tail, head in edges:
                tin = tail in xs
                hin = head in xs
                if tin and not hin:
                    out += 1
                elif hin and not tin:
                    inn += 1
            if out < inn:
                return ImbalanceCertificate(RAW, frozenset(xs), out, inn)
    return None


def refine_overloaded(g: Digraph, x0) -> ImbalanceCertificate:
    """Shrink an overloaded set to the connected two-sided form.

    Steps: (1) among the weak components of the subgraph induced by x0 pick
    the first overloaded one, X.  (2) among the weak components of the rest
    of the graph pick the first with fewer ingoing than outgoing edges, Y
    (one exists because the in-edges of those components are exactly the
    out-edges of X and vice versa).  (3) let Z be the weak component of the
    whole graph containing Y.  Then Z minus Y is overloaded, both induced
    subgraphs are weakly connected, and (Z minus Y) with Y partitions Z.

    "First" always means the component containing the least vertex id, so
    the result is reproducible.
    """
    x0 = frozenset(x0)
    c0 = g.cut(x0)
    if len(c0.out_edges) >= len(c0.in_edges):
        raise ValueError(
            f"set is not overloaded: out={len(c0.out_edges)}, in={len(c0.in_edges)}"
        )

    xi0 = None
    for comp in g.restrict(x0).weak_components():
        c = g.cut(comp)
        if len(c.out_edges) < len(c.in_edges):
            xi0 = comp
            break
    if xi0 is None:  # impossible: cut counts are additive over components
        raise RuntimeError("no overloaded weak component found")

    yj0 = None
    for comp in g.restrict(g.vertices - xi0).weak_components():
        c = g.cut(comp)
        if len(c.in_edges) < len(c.out_edges):
            yj0 = comp
            break
    if yj0 is None:
        raise RuntimeError("no underloaded complement component found")

    z = None
    anchor = min(yj0)
    for comp in g.weak_components():
        if anchor in comp:
            z = comp
            break
    assert z is not None

    x = z - yj0
    c = g.cut(x)
    return ImbalanceCertificate(
        REFINED,
        frozenset(x),
        len(c.out_edges),
        len(c.in_edges),
        component=z,
        complement_y=yj0,
    )


def saturate_overloaded(g: Digraph, x) -> ImbalanceCertificate:
    """Close an overloaded set under reachability that spares its out-cut.

    Seed S = tails of out(x) plus the heads of the first |out(x)| + 1
    in-edges of x in ascending id order; the result X' is everything
    reachable from S without traversing out(x).  Guarantees: X' is a subset
    of x, out(X') is a subset of out(x), and X' has at least |out(x)| + 1
    ingoing edges, so X' is itself overloaded.
    """
    x = frozenset(x)
    c = g.cut(x)
    n_out = len(c.out_edges)
    if n_out >= len(c.in_edges):
        raise ValueError(
            f"set is not overloaded: out={n_out}, in={len(c.in_edges)}"
        )
    seeds = {g.edge(eid)[0] for eid in c.out_edges}
    for eid in sorted(c.in_edges)[: n_out + 1]:
        seeds.add(g.edge(eid)[1])
    closure = g.reachable_avoiding(seeds, c.out_edges)
    cc = g.cut(closure)
    return ImbalanceCertificate(
        SATURATED, closure, len(cc.out_edges), len(cc.in_edges)
    )
