"""Small-graph enumeration used by the exhaustive verification suite.

Two sources: every labeled graph on up to 6 vertices (2^(n choose 2) of
them per n), and one representative per isomorphism class for n <= 7 via
the graph atlas shipped with networkx.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .graphs import Graph


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n choose 2) labeled graphs on vertices 0..n-1."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


@lru_cache(maxsize=1)
def _atlas() -> tuple[tuple[int, tuple[tuple[int, int], ...]], ...]:
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for g in graph_atlas_g():
        if g.number_of_nodes() == 0:
            continue
        out.append((g.number_of_nodes(),
                    tuple(sorted(tuple(sorted(e)) for e in g.edges()))))
    return tuple(out)


def atlas_graphs(max_n: int = 7, min_n: int = 1,
                 connected_only: bool = False) -> Iterator[Graph]:
    """One representative per isomorphism class, 1 <= n <= 7."""
    if max_n > 7:
        raise ValueError("the atlas stops at 7 vertices")
    for n, edges in _atlas():
        if not min_n <= n <= max_n:
            continue
        g = Graph(n, edges)
        if connected_only and not g.is_connected:
            continue
        yield g
