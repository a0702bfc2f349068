"""Centers, centered peripheries, the uniform-central test, and the
covering a uniform central graph induces on its centered periphery.

The centered periphery is the union of the eccentric sets of the central
vertices; it can differ from the periphery (the maximum-eccentricity
vertices).  A graph is uniform central (UCG) when every central vertex
has the same eccentric set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .coverings import Covering
from .errors import NotSpanningSubgraphError, NotUcgError, RadiusTooSmallError
from .graphs import INF, Dist, Graph, induced_subgraph, metric_profile


@dataclass(frozen=True)
class UcgAnalysis:
    """Everything the package needs to know about one graph's center.

    ``strata`` lists the sets at distance 0, 1, .., r from the center;
    for a disconnected graph the analysis degenerates by convention: all
    eccentricities are infinite, so every vertex is central, the strata
    collapse to a single class and the graph is not a UCG.
    """

    center: frozenset[int]
    ec_map: Mapping[int, frozenset[int]]
    centered_periphery: frozenset[int]
    intermediate: frozenset[int]
    strata: tuple[frozenset[int], ...]
    is_ucg: bool
    radius: Dist
    diameter: Dist


def eccentric_set(g: Graph, v: int) -> frozenset[int]:
    """EC(v): the vertices realizing v's eccentricity."""
    row = g.dist[v]
    e = g.ecc[v]
    return frozenset(u for u in range(g.n) if row[u] == e)


def ucg_analysis(g: Graph) -> UcgAnalysis:
    prof = metric_profile(g)
    vertices = frozenset(range(g.n))
    center = frozenset(v for v in range(g.n) if g.ecc[v] == prof.radius)
    ec_map = {z: eccentric_set(g, z) for z in sorted(center)}
    cp = frozenset().union(*ec_map.values()) if ec_map else frozenset()
    connected = prof.radius is not INF
    if connected:
        strata = _strata(g, center, int(prof.radius))
        uniform = len({ec for ec in ec_map.values()}) == 1
    else:
        strata = (vertices,)
        uniform = False
    return UcgAnalysis(
        center=center,
        ec_map=ec_map,
        centered_periphery=cp,
        intermediate=vertices - center - cp,
        strata=strata,
        is_ucg=uniform,
        radius=prof.radius,
        diameter=prof.diameter,
    )


def _strata(g: Graph, center: frozenset[int], radius: int) -> tuple[frozenset[int], ...]:
    d_to_center = [min(g.dist[z][v] for z in center) for v in range(g.n)]
    return tuple(frozenset(v for v in range(g.n) if d_to_center[v] == m)
                 for m in range(radius + 1))


@dataclass(frozen=True)
class InducedCoverResult:
    """The covering a UCG induces on its centered periphery.

    ``d1`` lists the distance-1 stratum vertices whose block is nonempty,
    aligned with ``blocks``; vertex sets use the host graph's ids.
    ``kept`` indexes an irredundant subcovering, each kept block holding a
    private vertex (its witness) that no other kept block contains.
    """

    d1: tuple[int, ...]
    blocks: tuple[frozenset[int], ...]
    kept: tuple[int, ...]
    witnesses: Mapping[int, int]


def induced_covering(h: Graph, analysis: UcgAnalysis | None = None) -> InducedCoverResult:
    """Blocks P_i = {p in CP : d(x_i, p) = r - 1} for x_i in the first
    stratum, empty blocks dropped, then a greedy irredundant reduction.

    A distance-1 vertex has a central neighbor, so prepending that
    neighbor to a shortest x_i -> p path of length r - 1 produces a
    radial path; conversely a radial path through x_i must have it in
    position 1, since x_i's central neighbor would otherwise see the far
    endpoint at distance below the radius.
    """
    a = analysis or ucg_analysis(h)
    if not a.is_ucg:
        raise NotUcgError("induced covering requires a uniform central graph")
    if a.radius <= 1:
        raise RadiusTooSmallError(f"need radius >= 2, got {a.radius}")
    r = int(a.radius)
    cp = a.centered_periphery
    d1 = []
    blocks = []
    for x in sorted(a.strata[1]):
        blk = frozenset(p for p in cp if h.dist[x][p] == r - 1)
        if blk:
            d1.append(x)
            blocks.append(blk)
    kept = list(range(len(blocks)))
    # repeatedly drop the lowest-indexed block swallowed by the others
    while True:
        for pos, i in enumerate(kept):
            rest = frozenset().union(*(blocks[j] for j in kept if j != i)) \
                if len(kept) > 1 else frozenset()
            if blocks[i] <= rest:
                del kept[pos]
                break
        else:
            break
    witnesses = {}
    for i in kept:
        others = frozenset().union(*(blocks[j] for j in kept if j != i)) \
            if len(kept) > 1 else frozenset()
        witnesses[i] = min(blocks[i] - others)
    return InducedCoverResult(tuple(d1), tuple(blocks), tuple(kept), witnesses)


def periphery_covering(h: Graph, kept_only: bool = False) -> tuple[Graph, Covering, tuple[int, ...]]:
    """The induced subgraph on the centered periphery plus the induced
    covering relabeled into it.  Returns (P, covering, original ids)."""
    a = ucg_analysis(h)
    res = induced_covering(h, a)
    sub, old = induced_subgraph(h, sorted(a.centered_periphery))
    index = {o: i for i, o in enumerate(old)}
    chosen = res.kept if kept_only else range(len(res.blocks))
    blocks = tuple(frozenset(index[v] for v in res.blocks[i]) for i in chosen)
    return sub, Covering(sub, blocks), old


def distance_preserving_spanning_check(h: Graph, g: Graph,
                                       center_set: frozenset[int] | set[int]) -> bool:
    """True when g preserves h's distances from every vertex of
    ``center_set``.  When h is a UCG with that center, a true result
    means g is a UCG with the same center and centered periphery."""
    if g.n != h.n:
        raise NotSpanningSubgraphError("vertex sets differ")
    if not set(g.edges) <= set(h.edges):
        raise NotSpanningSubgraphError("edge set is not a subset of the host's")
    return all(g.dist[c][x] == h.dist[c][x]
               for c in center_set for x in range(g.n))
