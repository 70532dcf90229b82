"""Shared fixtures: the small-graph corpus and a random layout generator."""

import itertools
import random
from fractions import Fraction

import numpy as np
import pytest

from trvg import Graph, Layout, Mode, Rect

# Non-isomorphic simple graph counts for n = 1..7.
CORPUS_COUNTS = [1, 2, 4, 11, 34, 156, 1044]


def _build_corpus(nmax):
    """All non-isomorphic graphs per vertex count, by vertex augmentation.

    Canonical form: minimum over all vertex permutations of the edge set
    packed into an integer.  Deterministic output order.
    """
    by_n = {1: [frozenset()]}
    for n in range(2, nmax + 1):
        pairs = list(itertools.combinations(range(n), 2))
        perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
        iu = np.triu_indices(n, 1)
        weights = np.int64(1) << np.arange(len(pairs), dtype=np.int64)
        seen = {}
        for edges in by_n[n - 1]:
            base = np.zeros((n, n), dtype=bool)
            for u, v in edges:
                base[u, v] = base[v, u] = True
            for nb in range(1 << (n - 1)):
                mat = base.copy()
                for u in range(n - 1):
                    if nb >> u & 1:
                        mat[u, n - 1] = mat[n - 1, u] = True
                permuted = mat[perms[:, :, None], perms[:, None, :]]
                bits = permuted[:, iu[0], iu[1]].astype(np.int64)
                key = int((bits * weights).sum(axis=1).min())
                if key not in seen:
                    seen[key] = frozenset(
                        p for i, p in enumerate(pairs) if key >> i & 1
                    )
        by_n[n] = sorted(seen.values(), key=lambda es: (len(es), sorted(es)))
    return {n: [Graph(n, es) for es in by_n[n]] for n in by_n}


@pytest.fixture(scope="session")
def corpus():
    graphs = _build_corpus(7)
    assert [len(graphs[n]) for n in range(1, 8)] == CORPUS_COUNTS
    return graphs


def make_random_layout(rng: random.Random, n: int, mode: Mode = Mode.DISJOINT) -> Layout:
    """Random integer-coordinate layout; Disjoint mode rejects interior overlap."""
    span = 4 * n + 4
    rects = []
    while len(rects) < n:
        w = rng.randint(1, max(2, span // 3))
        h = rng.randint(1, max(2, span // 3))
        x0 = rng.randint(0, span - w)
        y0 = rng.randint(0, span - h)
        cand = Rect(
            f"r{len(rects)}",
            Fraction(x0), Fraction(x0 + w), Fraction(y0), Fraction(y0 + h),
        )
        if mode is Mode.DISJOINT and any(
            cand.x_lo < r.x_hi and r.x_lo < cand.x_hi
            and cand.y_lo < r.y_hi and r.y_lo < cand.y_hi
            for r in rects
        ):
            continue
        rects.append(cand)
    return Layout(tuple(rects), mode)


@pytest.fixture
def random_layout():
    return make_random_layout
