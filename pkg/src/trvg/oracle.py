"""Exhaustive first-principles check for small graphs.

Instead of searching edge labelings, enumerate every combinatorially
distinct layout directly: an axis is described by a weak ordering of the
2n interval endpoints (lo strictly before hi per rectangle), which fixes
exactly which open intervals overlap.  A layout is a pair of axis
orderings; in interior-disjoint mode a pair of rectangles must not overlap
on both axes.  The oracle answers by membership of the canonical edge set
among all unions of two axis overlap relations.

This shares no code with the labeling search or the interval-graph
recognizer, so agreement between the two is meaningful evidence.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import TooLarge
from .geometry import Mode
from .graphs import Graph

DEFAULT_ORACLE_CAP = 4


def _pair_bits(n: int) -> list[list[int]]:
    pb = [[0] * n for _ in range(n)]
    bit = 0
    for i in range(n):
        for j in range(i + 1, n):
            pb[i][j] = pb[j][i] = 1 << bit
            bit += 1
    return pb


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@lru_cache(maxsize=8)
def _axis_relations(n: int) -> frozenset[int]:
    """All achievable open-overlap relations of n intervals, as pair masks."""
    pb = _pair_bits(n)
    # row_bits[i][mask]: pair bits joining i with every member of mask
    row_bits = [
        [0] * (1 << n) for _ in range(n)
    ]
    for i in range(n):
        for mask in range(1 << n):
            acc = 0
            rest = mask
            while rest:
                j = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if j != i:
                    acc |= pb[i][j]
            row_bits[i][mask] = acc

    memo: dict[tuple[int, int], frozenset[int]] = {}

    def futures(unstarted: int, open_: int) -> frozenset[int]:
        if unstarted == 0 and open_ == 0:
            return frozenset((0,))
        key = (unstarted, open_)
        hit = memo.get(key)
        if hit is not None:
            return hit
        out: set[int] = set()
        for ends in _submasks(open_):
            # intervals ending here overlap each other and everything
            # still open afterwards; strictness of lo < hi holds because
            # newly started intervals only join open_ for the next rank
            recorded = 0
            rest = ends
            while rest:
                i = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                recorded |= row_bits[i][open_ & ~(1 << i)]
            for starts in _submasks(unstarted):
                if ends == 0 and starts == 0:
                    continue
                tail = futures(unstarted & ~starts, (open_ & ~ends) | starts)
                for mask in tail:
                    out.add(mask | recorded)
        result = frozenset(out)
        memo[key] = result
        return result

    return futures((1 << n) - 1, 0)


def _canonicalize(mask: int, n: int, pb: list[list[int]]) -> int:
    best = None
    for perm in itertools.permutations(range(n)):
        out = 0
        rest = mask
        for i in range(n):
            for j in range(i + 1, n):
                if mask & pb[i][j]:
                    out |= pb[perm[i]][perm[j]]
        if best is None or out < best:
            best = out
        if best == 0:
            break
    return best if best is not None else 0


@lru_cache(maxsize=16)
def _canonical_members(n: int, mode: Mode) -> frozenset[int]:
    pb = _pair_bits(n)
    rels = _axis_relations(n)
    canon_cache: dict[int, int] = {}
    out: set[int] = set()
    for mx in rels:
        for my in rels:
            if mode is Mode.DISJOINT and mx & my:
                continue
            union = mx | my
            c = canon_cache.get(union)
            if c is None:
                c = _canonicalize(union, n, pb)
                canon_cache[union] = c
            out.add(c)
    return frozenset(out)


def geometric_oracle(
    g: Graph, mode: Mode = Mode.DISJOINT, cap: int = DEFAULT_ORACLE_CAP
) -> bool:
    """Whether some layout extracts to a graph isomorphic to g.

    Enumerates every layout shape outright, so the cost grows violently
    with n; the default cap is 4 and callers opting into 5 should budget
    minutes, not seconds.
    """
    if g.n > cap:
        raise TooLarge(f"oracle capped at n <= {cap}, got {g.n}")
    if g.n == 0:
        return True
    pb = _pair_bits(g.n)
    mask = 0
    for u, v in g.edges:
        mask |= pb[u][v]
    return _canonicalize(mask, g.n, pb) in _canonical_members(g.n, mode)
