"""Interval orders: construction, validation, and order-theoretic profiles.

Elements are labeled 1..n. The relation is kept transitively closed; an
order is accepted iff it contains no 2+2, equivalently iff its distinct
down-sets form a chain under inclusion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    MalformedInterval,
    NotAscentSequence,
    NotIntervalOrder,
    NotIrreflexive,
    SizeMismatch,
)

__all__ = [
    "IntervalOrder",
    "OrderProfile",
    "from_relations",
    "from_intervals",
    "from_ascent_sequence",
    "profile",
    "isomorphic",
]


@dataclass(frozen=True)
class IntervalOrder:
    """A strict (2+2)-free partial order on {1, .., n}."""

    n: int
    rel: frozenset[tuple[int, int]]

    def precedes(self, x: int, y: int) -> bool:
        return (x, y) in self.rel

    def incomparable(self, x: int, y: int) -> bool:
        return x != y and (x, y) not in self.rel and (y, x) not in self.rel

    def down_set(self, x: int) -> frozenset[int]:
        return frozenset(a for (a, b) in self.rel if b == x)

    def up_set(self, x: int) -> frozenset[int]:
        return frozenset(b for (a, b) in self.rel if a == x)

    def elements(self) -> range:
        return range(1, self.n + 1)


@dataclass(frozen=True)
class OrderProfile:
    """Down-set and up-set chains plus width data of an interval order."""

    downsets: tuple[frozenset[int], ...]
    upsets: tuple[frozenset[int], ...]
    magnitude: int
    width: int
    minimals: frozenset[int]


def _succ_masks(n: int, pairs) -> list[int]:
    succ = [0] * (n + 1)
    for x, y in pairs:
        if not (1 <= x <= n and 1 <= y <= n):
            raise ValueError(f"element label {(x, y)} outside 1..{n}")
        if x == y:
            raise NotIrreflexive(x)
        succ[x] |= 1 << y
    return succ


def _close(n: int, succ: list[int]) -> list[int]:
    # Warshall on successor bitmasks.
    succ = list(succ)
    for k in range(1, n + 1):
        bit = 1 << k
        sk = succ[k]
        for x in range(1, n + 1):
            if succ[x] & bit:
                succ[x] |= sk
    return succ


def _pred_masks(n: int, succ: list[int]) -> list[int]:
    pred = [0] * (n + 1)
    for x in range(1, n + 1):
        m = succ[x]
        while m:
            y = m.bit_length() - 1
            pred[y] |= 1 << x
            m &= m - 1
    return pred


def _bits(mask: int):
    while mask:
        b = mask.bit_length() - 1
        yield b
        mask &= mask - 1


def _check_two_plus_two(n: int, pred: list[int]) -> None:
    """Raise NotIntervalOrder with a certificate unless the distinct
    down-sets form a chain."""
    order = sorted(range(1, n + 1), key=lambda x: bin(pred[x]).count("1"))
    for s, t in zip(order, order[1:]):
        db, dd = pred[s], pred[t]
        if db & ~dd:
            # db not a subset of dd, and |db| <= |dd| forces dd & ~db != 0.
            b, d = s, t
            a = next(x for x in _bits(db & ~dd) if x != d)
            c = next(x for x in _bits(dd & ~db) if x != b)
            raise NotIntervalOrder((a, b, c, d))


def _make(n: int, succ: list[int]) -> IntervalOrder:
    rel = frozenset((x, y) for x in range(1, n + 1) for y in _bits(succ[x]))
    return IntervalOrder(n, rel)


def from_relations(n: int, pairs, closure: bool = True) -> IntervalOrder:
    """Build an interval order from a generating set of ordered pairs.

    With ``closure`` the transitive closure is taken first (so Hasse/cover
    pairs are fine as input); otherwise ``pairs`` must already be closed.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    succ = _succ_masks(n, pairs)
    closed = _close(n, succ)
    for x in range(1, n + 1):
        if closed[x] >> x & 1:
            raise NotIrreflexive(x)
    if not closure and closed != succ:
        raise ValueError("relation is not transitively closed")
    _check_two_plus_two(n, _pred_masks(n, closed))
    return _make(n, closed)


def from_intervals(intervals) -> tuple[IntervalOrder, "IntervalRepresentation"]:
    """Read off the order of a family of integer intervals [l, r]:
    x precedes y iff r_x < l_y."""
    from .canonical import IntervalRepresentation

    left, right = [], []
    for idx, (lo, hi) in enumerate(intervals, start=1):
        if lo < 0 or hi < lo:
            raise MalformedInterval(idx, (lo, hi))
        left.append(int(lo))
        right.append(int(hi))
    n = len(left)
    succ = [0] * (n + 1)
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            if right[x - 1] < left[y - 1]:
                succ[x] |= 1 << y
    order = _make(n, succ)
    return order, IntervalRepresentation(tuple(left), tuple(right))


def from_ascent_sequence(seq) -> IntervalOrder:
    """Decode an ascent sequence into the corresponding unlabeled
    (2+2)-free poset; element i is the one added at step i.

    The decoder maintains the canonical intervals of the poset built so
    far. A non-ascent value a inserts the interval [a, max(a, m-2)]. An
    ascent value a < m opens a new level at a: intervals left-anchored at
    a or later shift right by one, the elements added since the last
    ascent whose right endpoint is a-1 stretch to cover the new level,
    and the new element lands on [a, .] with its right end set so that
    the stretched block stays beside it.
    """
    seq = list(seq)
    if not seq or seq[0] != 0:
        raise NotAscentSequence(0)
    items: list[list[int]] = [[0, 0]]
    run: set[int] = set()
    m = 1
    for i in range(1, len(seq)):
        a, prev = seq[i], seq[i - 1]
        if not isinstance(a, int) or a < 0 or a > m:
            raise NotAscentSequence(i)
        if a > prev:
            if a == m:
                z = [a, a]
            else:
                ext = [j for j in run if items[j][1] == a - 1]
                diag = any(items[j] == [a - 1, a - 1] for j in run)
                under = a - prev >= 2 and diag
                for it in items:
                    if it[0] >= a:
                        it[0] += 1
                        it[1] += 1
                for j in ext:
                    items[j][1] = a
                z = [a, a] if (under or not ext) else [a, a + 1]
            m += 1
            run = {i}
        else:
            z = [a, max(a, m - 2)]
            run.add(i)
        items.append(z)
    order, _ = from_intervals([tuple(it) for it in items])
    return order


def profile(P: IntervalOrder) -> OrderProfile:
    """Down-set chain, up-set chain, magnitude, exact width, minimals."""
    n = P.n
    succ = [0] * (n + 1)
    for x, y in P.rel:
        succ[x] |= 1 << y
    pred = _pred_masks(n, succ)

    down_masks = sorted(set(pred[1:] or [0]), key=lambda m: bin(m).count("1"))
    up_masks = sorted(set(succ[1:] or [0]), key=lambda m: -bin(m).count("1"))
    if n == 0:
        down_masks, up_masks = [], []
    downsets = tuple(frozenset(_bits(m)) for m in down_masks)
    upsets = tuple(frozenset(_bits(m)) for m in up_masks)
    minimals = frozenset(x for x in P.elements() if pred[x] == 0)
    return OrderProfile(downsets, upsets, len(downsets), _width(n, succ, pred), minimals)


def _width(n: int, succ: list[int], pred: list[int]) -> int:
    """Maximum antichain size by branch and bound on incomparability."""
    if n == 0:
        return 0
    inc = [0] * (n + 1)
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            if y != x and not (succ[x] >> y & 1) and not (pred[x] >> y & 1):
                inc[x] |= 1 << y
    best = 1

    def grow(current: int, cand: int) -> None:
        nonlocal best
        size = bin(current).count("1")
        if size + bin(cand).count("1") <= best:
            return
        if not cand:
            best = max(best, size)
            return
        v = cand.bit_length() - 1
        grow(current | (1 << v), cand & inc[v])
        grow(current, cand & ~(1 << v))

    grow(0, (1 << (n + 1)) - 2)
    return best


def isomorphic(
    P: IntervalOrder, Q: IntervalOrder
) -> tuple[bool, tuple[int, ...] | None]:
    """Decide order isomorphism; on success also return a permutation
    ``perm`` with ``perm[x-1]`` the image of x. Intended for small n."""
    if P.n != Q.n:
        raise SizeMismatch(P.n, Q.n)
    n = P.n

    def signatures(R: IntervalOrder):
        downs = {x: R.down_set(x) for x in R.elements()}
        ups = {x: R.up_set(x) for x in R.elements()}
        return downs, ups, {x: (len(downs[x]), len(ups[x])) for x in R.elements()}

    pd, pu, psig = signatures(P)
    qd, qu, qsig = signatures(Q)
    if sorted(psig.values()) != sorted(qsig.values()):
        return False, None

    candidates = {x: [y for y in Q.elements() if qsig[y] == psig[x]] for x in P.elements()}
    order = sorted(P.elements(), key=lambda x: len(candidates[x]))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int) -> bool:
        if k == n:
            return True
        x = order[k]
        for y in candidates[x]:
            if y in used:
                continue
            ok = all(
                ((a, x) in P.rel) == ((b, y) in Q.rel)
                and ((x, a) in P.rel) == ((y, b) in Q.rel)
                for a, b in mapping.items()
            )
            if ok:
                mapping[x] = y
                used.add(y)
                if extend(k + 1):
                    return True
                del mapping[x]
                used.remove(y)
        return False

    if extend(0):
        return True, tuple(mapping[x] for x in range(1, n + 1))
    return False, None
