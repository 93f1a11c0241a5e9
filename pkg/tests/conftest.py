"""Shared hypothesis strategies for the test suite."""

import hypothesis.strategies as st

from dicycles import Digraph


@st.composite
def digraphs(draw, max_vertices: int = 6, max_edges: int = 12):
    """Random directed multigraphs: parallels and self-loops included."""
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    edges = draw(
        st.lists(
            st.tuples(
                st.integers(min_value=0, max_value=n - 1),
                st.integers(min_value=0, max_value=n - 1),
            ),
            max_size=max_edges,
        )
    )
    return Digraph(n, edges)


@st.composite
def balanced_digraphs(draw, max_vertices: int = 6, max_cycles: int = 4):
    """Unions of random simple cycles, balanced by construction."""
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    k = draw(st.integers(min_value=0, max_value=max_cycles))
    edges = []
    for _ in range(k):
        length = draw(st.integers(min_value=1, max_value=n))
        verts = draw(st.permutations(range(n)))[:length]
        for i in range(length):
            edges.append((verts[i], verts[(i + 1) % length]))
    return Digraph(n, edges)


def subset_of(data, items):
    """Draw a subset of a (possibly empty) collection."""
    items = sorted(items)
    if not items:
        return set()
    return set(data.draw(st.sets(st.sampled_from(items))))
