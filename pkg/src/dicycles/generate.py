"""Seeded construction of test corpora.

Balanced graphs are built as unions of random simple cycles, which pins the
balance property structurally (each cycle contributes one in-edge and one
out-edge to every vertex set it crosses).  Perturbations add or drop random
edges to manufacture unbalanced instances; shuffles produce adversarial
stream orders.  The random source is Python's Mersenne Twister
(``random.Random``), so every output is a pure function of the spec.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .digraph import Digraph

# keeps perturbation draws decoupled from generation draws under one seed
_PERTURB_SALT = 0x5EED5A17


@dataclass(frozen=True)
class GenSpec:
    seed: int
    n_vertices: int
    n_cycles: int = 0
    cycle_len_range: tuple[int, int] = (1, 3)
    add_edges: int | None = None
    drop_edges: int | None = None

    def __post_init__(self) -> None:
        lo, hi = self.cycle_len_range
        if lo < 1 or lo > hi:
            raise ValueError(f"bad cycle length range ({lo}, {hi})")
        if self.n_vertices < 0 or self.n_cycles < 0:
            raise ValueError("counts must be non-negative")
        if self.add_edges is not None and self.drop_edges is not None:
            raise ValueError("choose either add_edges or drop_edges, not both")
        for count in (self.add_edges, self.drop_edges):
            if count is not None and count < 0:
                raise ValueError("perturbation count must be non-negative")

    @property
    def perturbation(self) -> tuple[str, int] | None:
        if self.add_edges is not None:
            return ("add", self.add_edges)
        if self.drop_edges is not None:
            return ("drop", self.drop_edges)
        return None


def random_cycle_union(spec: GenSpec) -> Digraph:
    """A union of ``n_cycles`` seeded random simple cycles; balanced by
    construction and reproducible from the seed."""
    if spec.perturbation is not None:
        raise ValueError("spec carries a perturbation; apply it with perturb()")
    lo, hi = spec.cycle_len_range
    if spec.n_cycles and hi > spec.n_vertices:
        raise ValueError(
            f"cycle length up to {hi} requested but only {spec.n_vertices} vertices"
        )
    rng = random.Random(spec.seed)
    edges: list[tuple[int, int]] = []
    for _ in range(spec.n_cycles):
        length = rng.randint(lo, hi)
        verts = rng.sample(range(spec.n_vertices), length)
        for i in range(length):
            edges.append((verts[i], verts[(i + 1) % length]))
    return Digraph(spec.n_vertices, edges)


def perturb(g: Digraph, spec: GenSpec) -> Digraph:
    """Add or drop the spec's number of seeded random edges.

    Whether the result is unbalanced is a matter of measurement, not
    assumption: callers should recheck (an added edge can complete a cycle,
    a dropped one can cancel another drop's effect).
    """
    kind_count = spec.perturbation
    if kind_count is None:
        raise ValueError("spec carries no perturbation")
    kind, count = kind_count
    rng = random.Random(spec.seed ^ _PERTURB_SALT)
    if kind == "drop":
        alive = g.edge_ids()
        if count > len(alive):
            raise ValueError(f"cannot drop {count} of {len(alive)} edges")
        return g.delete_edges(rng.sample(alive, count))
    vs = sorted(g.vertices)
    if count and not vs:
        raise ValueError("cannot add edges to a graph with no vertices")
    out = g.copy()
    for _ in range(count):
        out._insert_edge(vs[rng.randrange(len(vs))], vs[rng.randrange(len(vs))])
    return out


def shuffle_stream(g: Digraph, seed: int) -> list[tuple[int, int]]:
    """A seeded permutation of g's edges, ready to push into a stream."""
    pairs = [g.edge(eid) for eid in g.edge_ids()]
    random.Random(seed).shuffle(pairs)
    return pairs
