"""Independent reference implementations used only to check the library.

Everything here is written the slow, literal way - dict-based
Floyd-Warshall distances, set arithmetic straight off the condition
texts, explicit path enumeration - so a bug in the library's bitmask
machinery cannot hide behind itself.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import inf

from ucgkit import Covering, Graph, RefinedCovering


@lru_cache(maxsize=4096)
def floyd_distances(g: Graph) -> dict[tuple[int, int], float]:
    n = g.n
    d = {(u, v): (0 if u == v else inf) for u in range(n) for v in range(n)}
    for u, v in g.edges:
        d[u, v] = d[v, u] = 1
    for k in range(n):
        for i in range(n):
            dik = d[i, k]
            if dik is inf:
                continue
            for j in range(n):
                alt = dik + d[k, j]
                if alt < d[i, j]:
                    d[i, j] = alt
    return d


def eccentricities(g: Graph) -> list[float]:
    d = floyd_distances(g)
    return [max(d[v, u] for u in range(g.n)) for v in range(g.n)]


def dset(d, sources, target) -> float:
    return min((d[s, target] for s in sources), default=inf)


def dsets(d, a, b) -> float:
    return min((d[u, v] for u in a for v in b), default=inf)


# --- literal condition checkers -------------------------------------------

def cond_A(g: Graph, blocks) -> bool:
    d = floyd_distances(g)
    vs = set(range(g.n))
    return all(any(dset(d, blk, q) >= 2 for q in vs - set(blk)) for blk in blocks)


def cond_B(g: Graph, blocks) -> bool:
    d = floyd_distances(g)
    vs = set(range(g.n))
    for i, blk in enumerate(blocks):
        for p in blk:
            one = any(d[p, q] >= 3 for q in vs - set(blk))
            two = any(j != i and dset(d, blocks[j], p) >= 2
                      for j in range(len(blocks)))
            if not (one or two):
                return False
    return True


def cond_Aprime(g: Graph, blocks) -> bool:
    d = floyd_distances(g)
    vs = set(range(g.n))
    for i, blk in enumerate(blocks):
        one = any(dset(d, blk, q) >= 3 for q in vs - set(blk))
        two = any(j != i and dsets(d, blk, blocks[j]) >= 2
                  for j in range(len(blocks)))
        if not (one or two):
            return False
    return True


def cond_Bprime(g: Graph, blocks) -> bool:
    d = floyd_distances(g)
    for i, blk in enumerate(blocks):
        for p in blk:
            if not any(j != i and dset(d, blocks[j], p) >= 2
                       for j in range(len(blocks))):
                return False
    return True


def cond_Adp(g: Graph, blocks, iota, q0, q1) -> bool:
    d = floyd_distances(g)
    vs = set(range(g.n))
    k = len(blocks)
    for i in range(k):
        if i == iota:
            continue
        a = any(dset(d, blocks[i], p) >= 3 for p in vs - set(blocks[i]))
        b = any(j != iota and dsets(d, blocks[i], blocks[j]) >= 2 for j in range(k))
        c = any(dsets(d, blocks[i], ql) >= 2 for ql in (q0, q1))
        if not (a or b or c):
            return False
    for ql in (q0, q1):
        a = any(dset(d, ql, p) >= 3 for p in vs - set(blocks[iota]))
        b = any(j != iota and dsets(d, ql, blocks[j]) >= 2 for j in range(k))
        if not (a or b):
            return False
    return True


def cond_Bdp(g: Graph, blocks, iota, q0, q1) -> bool:
    d = floyd_distances(g)
    k = len(blocks)
    for i in range(k):
        if i == iota:
            continue
        for p in blocks[i]:
            a = any(j != iota and dset(d, blocks[j], p) >= 2 for j in range(k))
            b = dset(d, q0, p) >= 2 and dset(d, q1, p) >= 2
            c = any(dset(d, ql, p) >= 3 for ql in (q0, q1))
            dd = any(dset(d, ql, p) >= 2 and any(d[p, q] >= 4 for q in ql)
                     for ql in (q0, q1))
            if not (a or b or c or dd):
                return False
    for ql, qo in ((q0, q1), (q1, q0)):
        for p in ql:
            a = any(j != iota and dset(d, blocks[j], p) >= 2 for j in range(k))
            b = any(d[p, q] >= 4 and dset(d, qo, p) >= 2
                    for q in set(blocks[iota]) - set(ql))
            if not (a or b):
                return False
    return True


# --- covering enumeration ---------------------------------------------------

def all_coverings(g: Graph, k: int):
    """All ordered k-tuples of nonempty sets with union V (blocks may
    overlap), as tuples of frozensets."""
    n = g.n
    patterns = itertools.product(range(1, 1 << k), repeat=n)
    for pat in patterns:
        blocks = tuple(frozenset(v for v in range(n) if pat[v] >> i & 1)
                       for i in range(k))
        if all(blocks):
            yield blocks


def all_splits(block):
    """All (q0, q1) with q0 | q1 == block and q0 nonempty."""
    vs = sorted(block)
    for pat in itertools.product((1, 2, 3), repeat=len(vs)):
        q0 = frozenset(v for v, c in zip(vs, pat) if c & 1)
        q1 = frozenset(v for v, c in zip(vs, pat) if c & 2)
        if q0:
            yield q0, q1


def min_cover_A_naive(g: Graph, k_max: int) -> int | None:
    """Smallest k <= k_max admitting a condition-A covering, by direct
    enumeration."""
    for k in range(1, k_max + 1):
        for blocks in all_coverings(g, k):
            if cond_A(g, blocks):
                return k
    return None


# --- radial paths -----------------------------------------------------------

def radial_paths(g: Graph):
    """Every shortest path of the graph's radius length starting at a
    central vertex, as vertex tuples."""
    d = floyd_distances(g)
    ecc = [max(d[v, u] for u in range(g.n)) for v in range(g.n)]
    r = min(ecc)
    if r is inf:
        return
    center = [v for v in range(g.n) if ecc[v] == r]

    def extend(path, target):
        u = path[-1]
        if u == target:
            yield tuple(path)
            return
        for w in sorted(g.adj[u]):
            if d[path[0], w] == len(path) and d[w, target] == d[u, target] - 1:
                yield from extend(path + [w], target)

    for c in center:
        for t in range(g.n):
            if d[c, t] == r:
                yield from extend([c], t)


def radial_blocks(g: Graph, center, cp, d1) -> list[frozenset[int]]:
    """For each first-stratum vertex, the centered-periphery vertices
    lying on some radial path through it (the path-enumeration oracle for
    the induced covering)."""
    hits: dict[int, set[int]] = {x: set() for x in d1}
    for path in radial_paths(g):
        onpath = set(path)
        for x in d1:
            if x in onpath:
                hits[x].update(onpath & set(cp))
    return [frozenset(hits[x]) for x in sorted(d1)]
