"""Interval graph recognition with exact open-interval models.

A graph is an interval graph exactly when its maximal cliques admit a linear
order in which the cliques containing any one vertex are consecutive.  The
recognizer here searches instead for a vertex order with the umbrella
property (u < v < w and uw an edge imply uv an edge); such an order exists
iff the graph is interval, and it yields a consecutive clique order by
sorting maximal cliques by their latest-starting member.  The enumeration
oracle used by the tests checks clique orders directly by brute force.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import TooLarge, TooManyCliques
from .graphs import Graph


@dataclass(frozen=True)
class IntervalModel:
    """Open interval per vertex; intersection graph equals the source graph."""

    intervals: tuple[tuple[Fraction, Fraction], ...]

    def overlaps(self, u: int, v: int) -> bool:
        (a_lo, a_hi) = self.intervals[u]
        (b_lo, b_hi) = self.intervals[v]
        return a_lo < b_hi and b_lo < a_hi


def maximal_cliques(g: Graph, cap: int = 32) -> list[tuple[int, ...]]:
    """All maximal cliques, as sorted tuples in lexicographic order."""
    if g.n > cap:
        raise TooLarge(f"clique enumeration capped at {cap} vertices")
    adj = g.adjacency_masks()
    full = (1 << g.n) - 1
    out: list[tuple[int, ...]] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(tuple(i for i in range(g.n) if r >> i & 1))
            return
        # pivot with most candidates removed
        pool = p | x
        pivot = max(
            (i for i in range(g.n) if pool >> i & 1),
            key=lambda i: bin(p & adj[i]).count("1"),
        )
        cand = p & ~adj[pivot]
        while cand:
            bit = cand & -cand
            cand ^= bit
            v = bit.bit_length() - 1
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit
    if g.n:
        expand(0, full, 0)
    return sorted(out)


def _umbrella_order(adj: Sequence[int], full: int) -> Optional[list[int]]:
    """Vertex order with the umbrella property, or None.

    Once a placed vertex still has an unplaced neighbor, every vertex placed
    after it must be adjacent to it; the first order found over ascending
    vertex choices is returned, so the result is deterministic.
    """
    order: list[int] = []
    failed: set[int] = set()

    def grow(placed: int) -> bool:
        if placed == full:
            return True
        if placed in failed:
            return False
        rem = full & ~placed
        required = 0
        t = placed
        while t:
            bit = t & -t
            t ^= bit
            if adj[bit.bit_length() - 1] & rem:
                required |= bit
        cand = rem
        while cand:
            bit = cand & -cand
            cand ^= bit
            v = bit.bit_length() - 1
            if adj[v] & required == required:
                order.append(v)
                if grow(placed | bit):
                    return True
                order.pop()
        failed.add(placed)
        return False

    return order if grow(0) else None


def is_interval_masks(adj: Sequence[int], full: int) -> bool:
    """Fast boolean interval test over adjacency bitmasks."""
    return _umbrella_order(adj, full) is not None


def recognize_interval(g: Graph, cap: int = 32) -> Optional[IntervalModel]:
    """An exact open-interval model when g is an interval graph, else None.

    The model assigns vertex v the open interval (first, last + 1) over the
    positions of the maximal cliques containing v in a consecutive clique
    order, so adjacent vertices share a whole unit gap and non-adjacent
    vertices meet at most at integer boundary points.
    """
    if g.n > cap:
        raise TooLarge(f"interval recognition capped at {cap} vertices")
    if g.n == 0:
        return IntervalModel(())
    adj = g.adjacency_masks()
    full = (1 << g.n) - 1
    order = _umbrella_order(adj, full)
    if order is None:
        return None
    pos = {v: i for i, v in enumerate(order)}
    cliques = maximal_cliques(g, cap)
    # In the order's canonical model each maximal clique is the set of
    # intervals alive just after its latest-starting member begins, and
    # those start points are pairwise distinct.
    keyed = sorted(cliques, key=lambda c: max(pos[v] for v in c))
    first = [None] * g.n
    last = [None] * g.n
    for idx, clique in enumerate(keyed):
        for v in clique:
            if first[v] is None:
                first[v] = idx
            elif last[v] != idx - 1:
                raise AssertionError("clique order not consecutive")
            last[v] = idx
    model = IntervalModel(
        tuple(
            (Fraction(first[v]), Fraction(last[v] + 1))
            for v in range(g.n)
        )
    )
    # the construction is exact by the consecutive-ones argument; verify anyway
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if model.overlaps(u, v) != g.has_edge(u, v):
                raise AssertionError("clique-position model mismatch")
    return model


def is_interval_oracle(g: Graph, max_cliques: int = 9) -> bool:
    """Brute-force reference: search all consecutive clique orders.

    Enumerates permutations of the maximal cliques with early pruning: a
    clique may extend the order only if each of its already-seen vertices
    occurs in the immediately preceding clique.  Independent of the
    production recognizer.
    """
    cliques = maximal_cliques(g)
    k = len(cliques)
    if k > max_cliques:
        raise TooManyCliques(f"{k} maximal cliques exceeds cap {max_cliques}")
    if k <= 1:
        return True
    members = [frozenset(c) for c in cliques]

    def extend(used: list[int], seen: frozenset[int]) -> bool:
        if len(used) == k:
            return True
        lastset = members[used[-1]] if used else frozenset()
        for i in range(k):
            if i in used:
                continue
            if any(v in seen and v not in lastset for v in members[i]):
                continue
            used.append(i)
            if extend(used, seen | members[i]):
                return True
            used.pop()
        return False

    return extend([], frozenset())
