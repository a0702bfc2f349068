"""Coverings of a graph and the distance conditions on them.

A covering is a family of nonempty vertex sets whose union is the whole
vertex set; blocks may overlap.  Six conditions (A, B, A', B', A'', B'')
constrain how blocks sit inside the host metric; the package decides, at
desk scale, the minimum covering sizes under several condition sets:

* ``cov_A`` is solved exactly for any size via a reduction to set cover
  by complements of closed neighborhoods.
* The compound condition sets couple blocks to each other, so they are
  decided by a bounded exhaustive search over block-membership patterns
  (``decide_cover_k``), run in lexicographic order with sound pruning so
  the first witness found is the lexicographically first one.

All distances are taken in the host graph; infinity satisfies every
threshold, and the distance from an empty set is infinite.  Clauses that
demand a witness *inside* a set are false for the empty set.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BoundExceededError, InternalCheckError, PreconditionError
from .graphs import INF, Graph, bits, mask_of, metric_profile

CONDITIONS = ("A", "B", "A'", "B'", "A''", "B''")

#: Largest vertex count accepted by ``decide_cover_k`` per block count.
DEFAULT_DECIDE_BOUNDS = {2: 14, 3: 10}
_FALLBACK_DECIDE_BOUND = 10


@dataclass(frozen=True)
class Covering:
    """Blocks P_1..P_k over a host graph; union is V, blocks nonempty."""

    host: Graph
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        if not self.blocks:
            raise ValueError("covering needs at least one block")
        union = 0
        for blk in self.blocks:
            if not blk:
                raise ValueError("covering blocks must be nonempty")
            m = mask_of(blk)
            if m & ~self.host.full_mask:
                raise ValueError("block contains out-of-range vertices")
            union |= m
        if union != self.host.full_mask:
            raise ValueError("covering blocks must cover every vertex")

    @property
    def k(self) -> int:
        return len(self.blocks)

    def block_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(b) for b in self.blocks)

    def to_json(self) -> dict:
        return {"blocks": [sorted(b) for b in self.blocks]}


@dataclass(frozen=True)
class RefinedCovering:
    """A covering plus a split Q_0 | Q_1 of its block ``iota``.

    Q_0 must be nonempty; Q_1 may be empty; the two may overlap.
    """

    base: Covering
    iota: int
    q0: frozenset[int]
    q1: frozenset[int]

    def __post_init__(self):
        if not 0 <= self.iota < self.base.k:
            raise ValueError("iota out of range")
        if not self.q0:
            raise ValueError("q0 must be nonempty")
        if self.q0 | self.q1 != self.base.blocks[self.iota]:
            raise ValueError("q0 and q1 must union to the refined block")

    def to_json(self) -> dict:
        d = self.base.to_json()
        d.update({"iota": self.iota, "q0": sorted(self.q0), "q1": sorted(self.q1)})
        return d


def covering_from_json(host: Graph, data: dict) -> Covering | RefinedCovering:
    cov = Covering(host, tuple(frozenset(b) for b in data["blocks"]))
    if data.get("iota") is None:
        return cov
    return RefinedCovering(cov, int(data["iota"]),
                           frozenset(data.get("q0") or ()),
                           frozenset(data.get("q1") or ()))


def singleton_covering(host: Graph) -> Covering:
    return Covering(host, tuple(frozenset((v,)) for v in range(host.n)))


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of one condition check; violations name exact sub-clauses."""

    condition: str
    passed: bool
    violations: tuple[tuple[str, str], ...] = ()


class _Infeasible:
    __slots__ = ()

    def __repr__(self):
        return "INFEASIBLE"


#: No covering of the requested kind exists (at the requested size, for
#: the bounded deciders; at any size, for ``cov_A``).
INFEASIBLE = _Infeasible()


@dataclass(frozen=True)
class Unknown:
    """Value not settled within enumeration bounds; carries what is known."""

    lo: int
    hi: int | None
    bound: int

    def __repr__(self):
        return f"UNKNOWN(lo={self.lo}, hi={self.hi}, bound={self.bound})"


@dataclass(frozen=True)
class CovSizeResult:
    """A minimum-covering-size answer with provenance and witness."""

    which: str
    value: object  # int | INFEASIBLE | Unknown
    witness: Covering | RefinedCovering | None
    method: str

    @property
    def found(self) -> bool:
        return isinstance(self.value, int)

    def to_json(self) -> dict:
        if isinstance(self.value, int):
            val: object = self.value
        elif isinstance(self.value, Unknown):
            val = {"unknown": True, "lo": self.value.lo, "hi": self.value.hi,
                   "bound": self.value.bound}
        else:
            val = "infeasible"
        return {
            "which": self.which,
            "value": val,
            "method": self.method,
            "witness": self.witness.to_json() if self.witness is not None else None,
        }


# --------------------------------------------------------------------------
# set-mask helpers

def _union_ball(per_vertex: Sequence[int], set_mask: int) -> int:
    out = 0
    m = set_mask
    while m:
        low = m & -m
        out |= per_vertex[low.bit_length() - 1]
        m ^= low
    return out


def _geometry(g: Graph):
    return (g.full_mask, g.closed_masks, g.ball_masks(2), g.far_masks(3), g.far_masks(4))


# --------------------------------------------------------------------------
# fast pass/fail predicates on block masks (used by the decision engine)

def _passes_A(g: Graph, bm: Sequence[int]) -> bool:
    full, closed = g.full_mask, g.closed_masks
    return all(_union_ball(closed, m) != full for m in bm)


def _passes_B(g: Graph, bm: Sequence[int]) -> bool:
    closed, far3 = g.closed_masks, g.far_masks(3)
    for i, m in enumerate(bm):
        for p in bits(m):
            if far3[p] & ~m:
                continue
            if any(j != i and not (bm[j] & closed[p]) for j in range(len(bm))):
                continue
            return False
    return True


def _passes_Aprime(g: Graph, bm: Sequence[int]) -> bool:
    full, closed, ball2 = g.full_mask, g.closed_masks, g.ball_masks(2)
    for i, m in enumerate(bm):
        if _union_ball(ball2, m) != full:
            continue
        nb1 = _union_ball(closed, m)
        if any(j != i and not (bm[j] & nb1) for j in range(len(bm))):
            continue
        return False
    return True


def _passes_Bprime(g: Graph, bm: Sequence[int]) -> bool:
    closed = g.closed_masks
    for i, m in enumerate(bm):
        for p in bits(m):
            if not any(j != i and not (bm[j] & closed[p]) for j in range(len(bm))):
                return False
    return True


def _passes_Adp(g: Graph, bm: Sequence[int], iota: int, q0: int, q1: int) -> bool:
    full, closed, ball2 = g.full_mask, g.closed_masks, g.ball_masks(2)
    k = len(bm)
    for i in range(k):
        if i == iota:
            continue
        if full & ~_union_ball(ball2, bm[i]):                    # A''-1a
            continue
        nb1 = _union_ball(closed, bm[i])
        if any(j != iota and not (bm[j] & nb1) for j in range(k)):  # A''-1b
            continue
        if not (q0 & nb1) or not (q1 & nb1):                     # A''-1c
            continue
        return False
    for ql in (q0, q1):
        if full & ~bm[iota] & ~_union_ball(ball2, ql):           # A''-2a
            continue
        nbq = _union_ball(closed, ql)
        if any(j != iota and not (bm[j] & nbq) for j in range(k)):  # A''-2b
            continue
        return False
    return True


def _passes_Bdp(g: Graph, bm: Sequence[int], iota: int, q0: int, q1: int) -> bool:
    closed, ball2, far4 = g.closed_masks, g.ball_masks(2), g.far_masks(4)
    k = len(bm)
    for i in range(k):
        if i == iota:
            continue
        for p in bits(bm[i]):
            if any(j != iota and not (bm[j] & closed[p]) for j in range(k)):  # B''-1a
                continue
            if not (q0 & closed[p]) and not (q1 & closed[p]):    # B''-1b
                continue
            if not (q0 & ball2[p]) or not (q1 & ball2[p]):       # B''-1c
                continue
            if any(not (ql & closed[p]) and (ql & far4[p])       # B''-1d
                   for ql in (q0, q1)):
                continue
            return False
    for ql, qo in ((q0, q1), (q1, q0)):
        for p in bits(ql):
            if any(j != iota and not (bm[j] & closed[p]) for j in range(k)):  # B''-2a
                continue
            if (far4[p] & bm[iota] & ~ql) and not (qo & closed[p]):  # B''-2b
                continue
            return False
    return True


# --------------------------------------------------------------------------
# public condition checkers with violation reports

def check_A(c: Covering) -> ConditionReport:
    """Condition A: every block has an outside vertex at distance >= 2."""
    g = c.host
    bad = []
    for i, m in enumerate(c.block_masks()):
        if _union_ball(g.closed_masks, m) == g.full_mask:
            bad.append((f"block {i}", "A"))
    return ConditionReport("A", not bad, tuple(bad))


def check_B(c: Covering) -> ConditionReport:
    """Condition B: each vertex of each block escapes, either via some
    vertex outside the block at distance >= 3 (B-1) or via a sibling
    block entirely at distance >= 2 (B-2)."""
    g = c.host
    bm = c.block_masks()
    closed, far3 = g.closed_masks, g.far_masks(3)
    bad = []
    for i, m in enumerate(bm):
        for p in bits(m):
            c1 = bool(far3[p] & ~m)
            c2 = any(j != i and not (bm[j] & closed[p]) for j in range(len(bm)))
            if not (c1 or c2):
                subject = f"vertex {p} in block {i}"
                bad.append((subject, "B-1"))
                bad.append((subject, "B-2"))
    return ConditionReport("B", not bad, tuple(bad))


def check_Aprime(c: Covering) -> ConditionReport:
    """Condition A': every block has an outside vertex at distance >= 3
    (A'-1) or a sibling block entirely at distance >= 2 (A'-2)."""
    g = c.host
    bm = c.block_masks()
    bad = []
    for i, m in enumerate(bm):
        c1 = bool(g.full_mask & ~_union_ball(g.ball_masks(2), m))
        nb1 = _union_ball(g.closed_masks, m)
        c2 = any(j != i and not (bm[j] & nb1) for j in range(len(bm)))
        if not (c1 or c2):
            bad.append((f"block {i}", "A'-1"))
            bad.append((f"block {i}", "A'-2"))
    return ConditionReport("A'", not bad, tuple(bad))


def check_Bprime(c: Covering) -> ConditionReport:
    """Condition B': every vertex of every block has a sibling block
    entirely at distance >= 2."""
    g = c.host
    bm = c.block_masks()
    closed = g.closed_masks
    bad = []
    for i, m in enumerate(bm):
        for p in bits(m):
            if not any(j != i and not (bm[j] & closed[p]) for j in range(len(bm))):
                bad.append((f"vertex {p} in block {i}", "B'"))
    return ConditionReport("B'", not bad, tuple(bad))


def check_AdpBdp(rc: RefinedCovering) -> tuple[ConditionReport, ConditionReport]:
    """Conditions A'' and B'' on a refined covering, clause by clause.

    Distances from an empty Q_1 are infinite, so threshold clauses about
    it hold vacuously; clauses demanding a witness inside Q_1 fail.
    """
    g = rc.base.host
    bm = rc.base.block_masks()
    iota = rc.iota
    q0, q1 = mask_of(rc.q0), mask_of(rc.q1)
    full, closed, ball2 = g.full_mask, g.closed_masks, g.ball_masks(2)
    far4 = g.far_masks(4)
    k = len(bm)

    a_bad: list[tuple[str, str]] = []
    for i in range(k):
        if i == iota:
            continue
        c1a = bool(full & ~_union_ball(ball2, bm[i]))
        nb1 = _union_ball(closed, bm[i])
        c1b = any(j != iota and not (bm[j] & nb1) for j in range(k))
        c1c = not (q0 & nb1) or not (q1 & nb1)
        if not (c1a or c1b or c1c):
            subject = f"block {i}"
            a_bad += [(subject, "A''-1a"), (subject, "A''-1b"), (subject, "A''-1c")]
    for l, ql in ((0, q0), (1, q1)):
        c2a = bool(full & ~bm[iota] & ~_union_ball(ball2, ql))
        nbq = _union_ball(closed, ql)
        c2b = any(j != iota and not (bm[j] & nbq) for j in range(k))
        if not (c2a or c2b):
            a_bad += [(f"Q{l}", "A''-2a"), (f"Q{l}", "A''-2b")]

    b_bad: list[tuple[str, str]] = []
    for i in range(k):
        if i == iota:
            continue
        for p in bits(bm[i]):
            c1a = any(j != iota and not (bm[j] & closed[p]) for j in range(k))
            c1b = not (q0 & closed[p]) and not (q1 & closed[p])
            c1c = not (q0 & ball2[p]) or not (q1 & ball2[p])
            c1d = any(not (ql & closed[p]) and (ql & far4[p]) for ql in (q0, q1))
            if not (c1a or c1b or c1c or c1d):
                subject = f"vertex {p} in block {i}"
                b_bad += [(subject, "B''-1a"), (subject, "B''-1b"),
                          (subject, "B''-1c"), (subject, "B''-1d")]
    for l, ql, qo in ((0, q0, q1), (1, q1, q0)):
        for p in bits(ql):
            c2a = any(j != iota and not (bm[j] & closed[p]) for j in range(k))
            c2b = bool(far4[p] & bm[iota] & ~ql) and not (qo & closed[p])
            if not (c2a or c2b):
                subject = f"vertex {p} in Q{l}"
                b_bad += [(subject, "B''-2a"), (subject, "B''-2b")]

    return (ConditionReport("A''", not a_bad, tuple(a_bad)),
            ConditionReport("B''", not b_bad, tuple(b_bad)))


_CHECKERS = {"A": check_A, "B": check_B, "A'": check_Aprime, "B'": check_Bprime}


def covering_passes(c: Covering | RefinedCovering, conds: Iterable[str]) -> bool:
    """Re-verify a covering (or refined covering) against named conditions."""
    conds = set(conds)
    base = c.base if isinstance(c, RefinedCovering) else c
    for tag in sorted(conds & set(_CHECKERS)):
        if not _CHECKERS[tag](base).passed:
            return False
    if conds & {"A''", "B''"}:
        if not isinstance(c, RefinedCovering):
            return False
        ra, rb = check_AdpBdp(c)
        if "A''" in conds and not ra.passed:
            return False
        if "B''" in conds and not rb.passed:
            return False
    return True


# --------------------------------------------------------------------------
# cov_A: exact minimum via set cover over closed-neighborhood complements

def cov_A(p: Graph) -> CovSizeResult:
    """Smallest covering satisfying condition A, exactly, any size.

    Every condition-A block avoids the closed neighborhood of its witness
    vertex, and every closed-neighborhood complement is itself a valid
    block; so the minimum equals a minimum set cover by the (nonempty)
    complements V \\ N[q].  Infeasible exactly when the radius is <= 1.
    """
    if metric_profile(p).radius <= 1:
        return CovSizeResult("A", INFEASIBLE, None, "set-cover")
    full = p.full_mask
    cands = sorted({full & ~c for c in p.closed_masks})
    cands = [m for m in cands
             if not any(o != m and m & ~o == 0 for o in cands)]
    best = _min_set_cover(cands, full)
    blocks = tuple(frozenset(bits(m)) for m in sorted(best, key=lambda m: min(bits(m))))
    witness = Covering(p, blocks)
    if not check_A(witness).passed:
        raise InternalCheckError("set-cover witness failed condition A re-check")
    return CovSizeResult("A", len(best), witness, "set-cover")


def _min_set_cover(cands: list[int], universe: int) -> list[int]:
    """Exact minimum set cover by branch and bound (inputs are tiny)."""
    # greedy upper bound
    greedy: list[int] = []
    left = universe
    while left:
        pick = max(cands, key=lambda m: (m & left).bit_count())
        greedy.append(pick)
        left &= ~pick
    best: list[list[int]] = [greedy]

    cover_count = {v: sum(1 for m in cands if m >> v & 1) for v in bits(universe)}
    max_size = max(m.bit_count() for m in cands)

    def rec(left: int, chosen: list[int]):
        if not left:
            if len(chosen) < len(best[0]):
                best[0] = list(chosen)
            return
        lower = len(chosen) + -(-left.bit_count() // max_size)
        if lower >= len(best[0]):
            return
        v = min(bits(left), key=lambda u: (cover_count[u], u))
        options = sorted((m for m in cands if m >> v & 1),
                         key=lambda m: (-(m & left).bit_count(), m))
        for m in options:
            chosen.append(m)
            rec(left & ~m, chosen)
            chosen.pop()

    rec(universe, [])
    return best[0]


# --------------------------------------------------------------------------
# decide_cover_k: bounded exhaustive decision for the compound conditions

def _decide_bound(k: int) -> int:
    env = os.environ.get("UCG_BOUND")
    if env:
        return int(env)
    return DEFAULT_DECIDE_BOUNDS.get(k, _FALLBACK_DECIDE_BOUND)


def conds_tag(conds: Iterable[str]) -> str:
    order = {t: i for i, t in enumerate(CONDITIONS)}
    return ",".join(sorted(set(conds), key=order.__getitem__))


def iter_covering_witnesses(p: Graph, k: int, conds: Iterable[str],
                            refine: bool = False, bound: int | None = None):
    """Lazily yield every size-k covering of ``p`` meeting ``conds``, in
    lexicographic order of the per-vertex block-membership patterns (and,
    under ``refine``, of the (Q_0, Q_1) split patterns of block 0)."""
    conds = frozenset(conds)
    unknown = conds - set(CONDITIONS)
    if unknown:
        raise ValueError(f"unknown conditions: {sorted(unknown)}")
    if (conds & {"A''", "B''"}) and not refine:
        raise ValueError("conditions A''/B'' require refine=True")
    if refine and not (conds & {"A''", "B''"}):
        raise ValueError("refine=True without A''/B'' conditions")
    if k < 1:
        raise ValueError("k must be at least 1")
    if bound is None:
        bound = _decide_bound(k)
    if p.n > bound:
        raise BoundExceededError(
            f"decide_cover_k: n={p.n} exceeds bound {bound} for k={k}")

    for bm, split in _decide_dfs(p, k, conds, refine):
        cov = Covering(p, tuple(frozenset(bits(m)) for m in bm))
        witness: Covering | RefinedCovering = cov
        if refine:
            q0m, q1m = split
            witness = RefinedCovering(cov, 0, frozenset(bits(q0m)),
                                      frozenset(bits(q1m)))
        if not covering_passes(witness, conds):
            raise InternalCheckError("decide witness failed public re-check")
        yield witness


def decide_cover_k(p: Graph, k: int, conds: Iterable[str], refine: bool = False,
                   bound: int | None = None) -> CovSizeResult:
    """Is there a size-k covering of ``p`` meeting all of ``conds``?

    Enumerates per-vertex block-membership patterns (3^n ordered pairs
    with union V for k=2, 7^n for k=3, and so on) depth-first in
    lexicographic order, so the returned witness is the lexicographically
    first one regardless of any internal work partitioning.  With
    ``refine`` the first block additionally gets every (Q_0, Q_1) split
    enumerated for the A''/B'' clauses.

    The search is cut by two sound prunes: every block of a covering
    passing A (or A', which implies A) must avoid some closed
    neighborhood entirely, and under B' no vertex can belong to all k
    blocks.  Pruned subtrees contain no witnesses, so lexicographic order
    is preserved.
    """
    conds = frozenset(conds)
    witness = next(iter_covering_witnesses(p, k, conds, refine=refine,
                                           bound=bound), None)
    tag = conds_tag(conds)
    if witness is None:
        return CovSizeResult(tag, INFEASIBLE, None, "exhausted")
    return CovSizeResult(tag, k, witness, "decide-k")


def _decide_dfs(host: Graph, k: int, conds: frozenset, refine: bool):
    n = host.n
    full = host.full_mask
    closed = host.closed_masks
    need_a = bool(conds & {"A", "A'"})
    skip_full = "B'" in conds and k >= 2
    full_pat = (1 << k) - 1
    blocks = [0] * k
    wit = [full] * k

    def leaf():
        bm = tuple(blocks)
        if "A" in conds and not _passes_A(host, bm):
            return
        if "A'" in conds and not _passes_Aprime(host, bm):
            return
        if "B" in conds and not _passes_B(host, bm):
            return
        if "B'" in conds and not _passes_Bprime(host, bm):
            return
        if not refine:
            yield bm, None
            return
        for q0m, q1m in _splits(bm[0]):
            if "A''" in conds and not _passes_Adp(host, bm, 0, q0m, q1m):
                continue
            if "B''" in conds and not _passes_Bdp(host, bm, 0, q0m, q1m):
                continue
            yield bm, (q0m, q1m)

    def rec(v: int):
        if v == n:
            if not any(b == 0 for b in blocks):
                yield from leaf()
            return
        if sum(1 for b in blocks if b == 0) > n - v:
            return
        vb = 1 << v
        nclosed = ~closed[v]
        for pat in range(1, full_pat + 1):
            if skip_full and pat == full_pat:
                continue
            saved = []
            alive = True
            m = pat
            while m:
                low = m & -m
                i = low.bit_length() - 1
                m ^= low
                saved.append((i, blocks[i], wit[i]))
                blocks[i] |= vb
                if need_a:
                    wit[i] &= nclosed
                    if not wit[i]:
                        alive = False
                        break
            if alive:
                yield from rec(v + 1)
            for i, b, w in reversed(saved):
                blocks[i] = b
                wit[i] = w
        return

    return rec(0)


def _splits(mask: int):
    """All (Q0, Q1) with Q0 | Q1 == mask and Q0 nonempty, up to swapping
    the two sides: the lowest vertex is pinned into Q0.  Lexicographic in
    the per-vertex pattern vector (Q0-only, Q1-only, both)."""
    vs = list(bits(mask))
    head_bit = 1 << vs[0]
    rest = vs[1:]
    for head_pat in (1, 3):
        hq1 = head_bit if head_pat == 3 else 0
        for combo in itertools.product((1, 2, 3), repeat=len(rest)):
            q0, q1 = head_bit, hq1
            for v, c in zip(rest, combo):
                if c & 1:
                    q0 |= 1 << v
                if c & 2:
                    q1 |= 1 << v
            yield q0, q1


# --------------------------------------------------------------------------
# structural shortcuts

def two_ball_triple_check(p: Graph) -> tuple[bool, tuple[int, int, int] | None]:
    """Does some vertex triple have empty common closed 2-neighborhood
    intersection?  Returns the first such triple in lexicographic order."""
    ball2 = p.ball_masks(2)
    n = p.n
    if n < 3:
        return False, None
    for x1 in range(n):
        b1 = ball2[x1]
        for x2 in range(x1 + 1, n):
            b12 = b1 & ball2[x2]
            if not b12:
                x3 = next(v for v in range(n) if v not in (x1, x2))
                return True, tuple(sorted((x1, x2, x3)))  # type: ignore[return-value]
            for x3 in range(x2 + 1, n):
                if not (b12 & ball2[x3]):
                    return True, (x1, x2, x3)
    return False, None


def construct_AB_bipartition(p: Graph) -> Covering:
    """Two-block covering meeting conditions A and B, built recursively.

    Requires diameter >= 4 and radius >= 3 (infinite values qualify).
    Start from the closed neighborhoods of a vertex pair at distance
    exactly 4 (falling back to a cross-component pair when no finite
    pair exists), then sweep the unassigned vertices in index order:

    1. a vertex with some assigned-to-block-2 vertex at distance >= 3
       joins block 1;
    2. else one with some block-1 vertex at distance >= 3 joins block 2;
    3. else it joins block 1 together with its smallest-index unassigned
       vertex at distance >= 3, which joins block 2.

    The result is re-checked against A and B; failure raises, it is never
    returned silently.
    """
    prof = metric_profile(p)
    if not (prof.diameter >= 4 and prof.radius >= 3):
        raise PreconditionError(
            f"need diameter >= 4 and radius >= 3, got diameter={prof.diameter},"
            f" radius={prof.radius}")
    dist = p.dist
    n = p.n
    pair = next(((u, v) for u in range(n) for v in range(u + 1, n)
                 if dist[u][v] == 4), None)
    if pair is None:
        pair = next((u, v) for u in range(n) for v in range(u + 1, n)
                    if dist[u][v] is INF)
    x, y = pair
    p1 = p.closed_masks[x]
    p2 = p.closed_masks[y]
    for z in range(n):
        assigned = p1 | p2
        if assigned >> z & 1:
            continue
        row = dist[z]
        if any(row[q] >= 3 for q in bits(p2)):
            p1 |= 1 << z
        elif any(row[q] >= 3 for q in bits(p1)):
            p2 |= 1 << z
        else:
            far = next(q for q in range(n)
                       if not (assigned >> q & 1) and q != z and row[q] >= 3)
            p1 |= 1 << z
            p2 |= 1 << far
    cov = Covering(p, (frozenset(bits(p1)), frozenset(bits(p2))))
    if not (check_A(cov).passed and check_B(cov).passed):
        raise InternalCheckError("recursive bipartition failed its A/B re-check")
    return cov


# --------------------------------------------------------------------------
# the covering-size profile

PROFILE_KEYS = ("A", "AB", "A'", "A'B'", "AA''B''")

_PROFILE_CONDS = {
    "AB": frozenset(("A", "B")),
    "A'": frozenset(("A'",)),
    "A'B'": frozenset(("A'", "B'")),
    "AA''B''": frozenset(("A", "A''", "B''")),
}


def _component_split(p: Graph) -> Covering:
    comp = mask_of(v for v in range(p.n) if p.dist[0][v] is not INF)
    return Covering(p, (frozenset(bits(comp)),
                        frozenset(bits(p.full_mask & ~comp))))


def cov_profile(p: Graph, bound: int | None = None) -> dict[str, CovSizeResult]:
    """Minimum covering sizes for all condition sets, shortcuts first.

    Structural facts settle most cases: diameter >= 3 forces cov_A = 2;
    a recursive bipartition gives cov_AB = 2 whenever diameter >= 4 and
    radius >= 3, while radius 2 forbids it; cov_{A'B'} = 2 exactly for
    disconnected graphs; cov_{A'} = 2 exactly for diameter >= 5; and
    cov_{AA''B''} = 2 needs diameter >= 4, radius >= 3 and (at diameter
    exactly 4) a vertex triple with empty common 2-ball intersection.
    Everything left over goes to the bounded decision procedure; what it
    cannot settle is reported UNKNOWN with the bound that stopped it.
    """
    res_a = cov_A(p)
    if not res_a.found:
        return {key: CovSizeResult(key, INFEASIBLE, None, "radius<=1")
                for key in PROFILE_KEYS}
    out = {"A": res_a}
    kappa = res_a.value
    prof = metric_profile(p)
    n = p.n
    disconnected = not p.is_connected

    def settle(key: str, lo: int, shortcut: str | None, refine: bool) -> CovSizeResult:
        conds = _PROFILE_CONDS[key]
        lo = max(lo, kappa)
        if kappa == n:
            # singleton blocks satisfy every condition set when the radius
            # is >= 2 (for A''/B'' via the trivial split Q0 = block, Q1 = {}),
            # and nothing smaller than kappa can satisfy a set containing A
            base = singleton_covering(p)
            wit: Covering | RefinedCovering = base
            if key == "AA''B''":
                wit = RefinedCovering(base, 0, base.blocks[0], frozenset())
            if covering_passes(wit, conds):
                return CovSizeResult(key, n, wit, "shortcut-singletons")
        ks = sorted({k for k in (2, 3) if k >= lo} | ({kappa} if kappa > 3 else set()))
        ks = [k for k in ks if k >= lo]
        method = shortcut or "decide-k"
        for k in ks:
            try:
                dec = decide_cover_k(p, k, conds, refine=refine, bound=bound)
            except BoundExceededError:
                return CovSizeResult(key, Unknown(lo, n, _decide_bound(k)), None,
                                     method if shortcut else f"bound@k={k}")
            if dec.found:
                return CovSizeResult(key, k, dec.witness,
                                     "decide-k" if shortcut is None else
                                     f"{shortcut}+decide-k")
            lo = k + 1
        return CovSizeResult(key, Unknown(lo, n, _decide_bound(max(ks, default=3))),
                             None, method)

    # cov_AB ------------------------------------------------------------
    if prof.diameter >= 4 and prof.radius >= 3:
        out["AB"] = CovSizeResult("AB", 2, construct_AB_bipartition(p),
                                  "shortcut-bipartition")
    elif prof.radius == 2:
        out["AB"] = settle("AB", 3, "shortcut-r2", refine=False)
    else:
        out["AB"] = settle("AB", 2, None, refine=False)

    # cov_A' -------------------------------------------------------------
    if prof.diameter >= 5:
        if disconnected:
            wit: Covering = _component_split(p)
        else:
            u, v = next((a, b) for a in range(n) for b in range(n)
                        if p.dist[a][b] >= 5)
            m = p.ball_masks(2)[u]
            wit = Covering(p, (frozenset(bits(m)),
                               frozenset(bits(p.full_mask & ~m))))
        if not check_Aprime(wit).passed:
            raise InternalCheckError("diameter>=5 split failed A' re-check")
        out["A'"] = CovSizeResult("A'", 2, wit, "shortcut-diam>=5")
    else:
        out["A'"] = settle("A'", 3, "shortcut-diam<5", refine=False)

    # cov_A'B' -----------------------------------------------------------
    if disconnected:
        wit = _component_split(p)
        if not (check_Aprime(wit).passed and check_Bprime(wit).passed):
            raise InternalCheckError("component split failed A'/B' re-check")
        out["A'B'"] = CovSizeResult("A'B'", 2, wit, "shortcut-disconnected")
    else:
        out["A'B'"] = settle("A'B'", 3, "shortcut-connected", refine=False)

    # cov_AA''B'' ----------------------------------------------------------
    if disconnected:
        base = _component_split(p)
        wit_r = RefinedCovering(base, 0, base.blocks[0], frozenset())
        if not covering_passes(wit_r, ("A", "A''", "B''")):
            raise InternalCheckError("component split failed A''/B'' re-check")
        out["AA''B''"] = CovSizeResult("AA''B''", 2, wit_r, "shortcut-disconnected")
    elif prof.radius == 2 or prof.diameter <= 3:
        out["AA''B''"] = settle("AA''B''", 3, "shortcut-r2-or-diam<=3", refine=True)
    elif prof.diameter == 4 and not two_ball_triple_check(p)[0]:
        out["AA''B''"] = settle("AA''B''", 3, "shortcut-two-balls", refine=True)
    else:
        out["AA''B''"] = settle("AA''B''", 2, None, refine=True)

    return out
