"""Independent validation of partitions and certificates.

The checkers recompute everything from the graph and share no code with the
producers, so they can serve as acceptance oracles.  They return ``None``
for success or a human-readable violation string for the first failure
found; they never raise on bad data.

:func:`exhaustive_decomposition_search` decides decomposability by exact
cover over all simple cycles, and :func:`theorem_crosscheck` enumerates
every small labeled digraph to confirm that decomposability, degree balance
and the absence of overloaded subsets coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .balance import (
    RAW,
    REFINED,
    SATURATED,
    ImbalanceCertificate,
    brute_force_overloaded,
    is_balanced,
)
from .decompose import CyclePartition, decompose
from .digraph import Digraph


def check_partition(g: Digraph, p: CyclePartition) -> str | None:
    """Verify that p covers every alive edge of g exactly once with closed,
    vertex-simple cycles and a consistent assignment map."""
    seen: dict[int, int] = {}
    for index, cycle in enumerate(p.cycles):
        ids = cycle.edge_ids
        if not ids:
            return f"cycle {index} is empty"
        for eid in ids:
            if not g.has_edge(eid):
                return f"cycle {index} uses unknown edge {eid}"
            if eid in seen:
                return f"edge {eid} appears in cycles {seen[eid]} and {index}"
            seen[eid] = index
        ends = [g.edge(eid) for eid in ids]
        for k in range(len(ids)):
            head = ends[k][1]
            next_tail = ends[(k + 1) % len(ids)][0]
            if head != next_tail:
                return (
                    f"cycle {index} is not closed: edge {ids[k]} ends at "
                    f"{head} but edge {ids[(k + 1) % len(ids)]} starts at {next_tail}"
                )
        tails = [t for t, _ in ends]
        if len(set(tails)) != len(tails):
            dup = next(v for v in tails if tails.count(v) > 1)
            return f"non-simple cycle {index}: vertex {dup} visited twice"
    for eid in g.edge_ids():
        if eid not in seen:
            return f"uncovered edge {eid}"
    if p.assignment != seen:
        for eid, index in seen.items():
            if p.assignment.get(eid) != index:
                return (
                    f"assignment maps edge {eid} to "
                    f"{p.assignment.get(eid)} but it lies in cycle {index}"
                )
        extra = sorted(set(p.assignment) - set(seen))
        return f"assignment mentions unknown edge {extra[0]}"
    return None


def check_certificate(g: Digraph, c: ImbalanceCertificate) -> str | None:
    """Recompute the cut of c.x and verify overloadedness plus the extra
    obligations of the refined and saturated forms."""
    for v in c.x:
        if not g.has_vertex(v):
            return f"certificate mentions unknown vertex {v}"
    cut = g.cut(c.x)
    out, inn = len(cut.out_edges), len(cut.in_edges)
    if (out, inn) != (c.out_count, c.in_count):
        return (
            f"recorded counts out={c.out_count}, in={c.in_count} but the graph "
            f"gives out={out}, in={inn}"
        )
    if out >= inn:
        return f"set is not overloaded: out={out}, in={inn}"

    if c.form == REFINED:
        z, y = c.component, c.complement_y
        if z is None or y is None:
            return "refined certificate lacks component or complement"
        if (c.x | y) != z or (c.x & y):
            return "refinement invariant: x and y do not partition z"
        if z not in g.weak_components():
            return "refinement invariant: z is not a weak component"
        if len(g.restrict(c.x).weak_components()) != 1:
            return "refinement invariant: induced subgraph on x is not weakly connected"
        if len(g.restrict(y).weak_components()) != 1:
            return "refinement invariant: induced subgraph on y is not weakly connected"
    elif c.form == SATURATED:
        if c.component is not None or c.complement_y is not None:
            return "saturated certificate must not carry component or complement"
        # x must be exactly what its own cut can reach: the closure of the
        # out-edge tails and in-edge heads, never using the out-cut.  (The
        # closure of x itself is trivially x; seeding from the cut is what
        # catches padding with unreachable vertices.)
        seeds = {g.edge(eid)[0] for eid in cut.out_edges}
        seeds.update(g.edge(eid)[1] for eid in cut.in_edges)
        if g.reachable_avoiding(seeds, cut.out_edges) != c.x:
            return "saturation invariant: x is not the closure of its own cut"
    elif c.form != RAW:
        return f"unknown certificate form {c.form!r}"
    elif c.component is not None or c.complement_y is not None:
        return "raw certificate must not carry component or complement"
    return None


def _simple_cycle_masks(tails: list[int], heads: list[int]) -> list[int]:
    """Bitmasks over the edge list whose edge sets form one simple dicycle."""
    m = len(tails)
    masks = []
    for mask in range(1, 1 << m):
        outd: dict[int, int] = {}
        ind: dict[int, int] = {}
        succ: dict[int, int] = {}
        ok = True
        bits = mask
        while bits:
            low = bits & -bits
            i = low.bit_length() - 1
            bits ^= low
            t, h = tails[i], heads[i]
            if outd.get(t, 0) or ind.get(h, 0):
                ok = False  # some vertex would get out- or in-degree 2
                break
            outd[t] = 1
            ind[h] = 1
            succ[t] = h
        if not ok or outd.keys() != ind.keys():
            continue
        # exactly one cycle: following successors from any vertex must walk
        # the whole vertex set before returning
        start = next(iter(succ))
        v = succ[start]
        steps = 1
        while v != start:
            v = succ[v]
            steps += 1
        if steps == len(succ):
            masks.append(mask)
    return masks


def exhaustive_decomposition_search(g: Digraph, max_edges: int = 14) -> bool:
    """True iff the edge multiset can be exactly covered by simple dicycles.

    Backtracking over all simple cycles; exponential, so graphs with more
    than ``max_edges`` edges are refused.
    """
    ids = g.edge_ids()
    m = len(ids)
    if m > max_edges:
        raise ValueError(f"{m} edges exceeds the search bound {max_edges}")
    if m == 0:
        return True
    tails = []
    heads = []
    for eid in ids:
        t, h = g.edge(eid)
        tails.append(t)
        heads.append(h)
    cycles = _simple_cycle_masks(tails, heads)
    by_edge: list[list[int]] = [[] for _ in range(m)]
    for mask in cycles:
        for i in range(m):
            if mask >> i & 1:
                by_edge[i].append(mask)

    full = (1 << m) - 1
    dead: set[int] = set()

    def cover(done: int) -> bool:
        if done == full:
            return True
        if done in dead:
            return False
        i = (~done & -~done).bit_length() - 1  # lowest uncovered edge
        for mask in by_edge[i]:
            if not mask & done and cover(done | mask):
                return True
        dead.add(done)
        return False

    return cover(0)


@dataclass
class CrosscheckReport:
    graphs_checked: int
    decomposable: int
    balanced: int
    discrepancies: list[str]

    def summary(self) -> str:
        return (
            f"checked={self.graphs_checked} decomposable={self.decomposable} "
            f"balanced={self.balanced} discrepancies={len(self.discrepancies)}"
        )


def _crosscheck_one(edges: tuple[tuple[int, int], ...], n: int) -> tuple[bool, str | None]:
    g = Digraph(n, edges)
    can = exhaustive_decomposition_search(g)
    bal = is_balanced(g)
    witness = brute_force_overloaded(g)
    result = decompose(g)
    parted = isinstance(result, CyclePartition)
    if not (can == bal == (witness is None) == parted):
        return bal, (
            f"edges={list(edges)}: exhaustive={can} balanced={bal} "
            f"witness={'none' if witness is None else sorted(witness.x)} "
            f"decompose={'partition' if parted else 'certificate'}"
        )
    if parted:
        bad = check_partition(g, result)
    else:
        bad = check_certificate(g, result)
    if bad:
        return bal, f"edges={list(edges)}: {bad}"
    return bal, None


def theorem_crosscheck(max_vertices: int = 4, max_edges: int = 6) -> CrosscheckReport:
    """Enumerate every labeled digraph within the bounds and confirm that
    exhaustive cover search, degree balance, the brute-force overloaded
    oracle and the decomposer all agree.

    The base enumeration takes all edge subsets of the ordered vertex pairs
    (self-loops included); each base graph additionally spawns one variant
    per edge with that edge duplicated, to exercise parallel pairs, kept
    within the same edge budget.
    """
    pairs = [
        (i, j) for i in range(max_vertices) for j in range(max_vertices)
    ]
    report = CrosscheckReport(0, 0, 0, [])
    for k in range(max_edges + 1):
        for base in combinations(pairs, k):
            variants: list[tuple[tuple[int, int], ...]] = [base]
            if k and k < max_edges:
                variants.extend(base + (dup,) for dup in base)
            for edges in variants:
                balanced, problem = _crosscheck_one(edges, max_vertices)
                report.graphs_checked += 1
                if balanced:
                    report.balanced += 1
                    report.decomposable += 1
                if problem:
                    report.discrepancies.append(problem)
    return report
