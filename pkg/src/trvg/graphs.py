"""Small simple graphs on vertices 0..n-1, plus the generators used here."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import SearchBudgetExceeded, TooLarge, TooSmall

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; labels are optional per-vertex strings."""

    n: int
    edges: frozenset[Edge]
    labels: Optional[tuple[str, ...]] = None

    def __init__(self, n: int, edges: Iterable[Edge], labels: Optional[Sequence[str]] = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        es = frozenset(_norm_edge(u, v) for u, v in edges)
        for u, v in es:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("label list length must equal n")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", es)
        object.__setattr__(self, "labels", labels)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and _norm_edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def adjacency_masks(self) -> list[int]:
        """Neighborhoods as bitmasks, for the search kernels."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def edge_count(self) -> int:
        return len(self.edges)


def validate_parts(parts: Sequence[int]) -> tuple[int, ...]:
    """Nondecreasing positive part sizes."""
    parts = tuple(parts)
    if not parts:
        raise TooSmall("at least one part is required")
    if any(p < 1 for p in parts):
        raise TooSmall("part sizes must be positive")
    if any(a > b for a, b in zip(parts, parts[1:])):
        raise ValueError("part sizes must be nondecreasing")
    return parts


def _part_letter(i: int) -> str:
    return chr(ord("A") + i) if i < 26 else f"P{i}"


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph; labels record part membership (A1, B2, ...)."""
    parts = validate_parts(parts)
    n = sum(parts)
    starts: list[int] = []
    s = 0
    for p in parts:
        starts.append(s)
        s += p
    labels = []
    part_of = []
    for i, p in enumerate(parts):
        for j in range(p):
            labels.append(f"{_part_letter(i)}{j + 1}")
            part_of.append(i)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if part_of[u] != part_of[v]
    ]
    return Graph(n, edges, labels)


def part_assignment(parts: Sequence[int]) -> list[int]:
    """Part index per vertex, in complete_multipartite's vertex order."""
    parts = validate_parts(parts)
    out: list[int] = []
    for i, p in enumerate(parts):
        out.extend([i] * p)
    return out


def cycle_square_complement(n: int) -> Graph:
    """Complement of the square of the n-cycle: i ~ j iff cyclic distance >= 3.

    Needs n >= 5 (below that the square of the cycle is complete).  Edge
    count is n(n-1)/2 - 2n.
    """
    if n < 5:
        raise TooSmall(f"need n >= 5, got {n}")
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            d = min(j - i, n - (j - i))
            if d >= 3:
                edges.append((i, j))
    return Graph(n, edges, tuple(f"v{i + 1}" for i in range(n)))


def induced(g: Graph, verts: Iterable[int]) -> Graph:
    """Induced subgraph on `verts`, relabeled 0..m-1 in ascending vertex order.

    Original identities are kept as labels (the original label when present,
    else the original index).
    """
    vs = sorted(set(verts))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(vs)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges
        if u in index and v in index
    ]
    labels = tuple(
        g.labels[v] if g.labels is not None else str(v) for v in vs
    )
    return Graph(len(vs), edges, labels)


def _refine_colors(g: Graph) -> list[int]:
    """Iterated neighborhood-degree refinement; canonical color ids."""
    adj = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    colors = [0] * g.n
    for _ in range(g.n):
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in adj[v])))
            for v in range(g.n)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if new == colors:
            break
        colors = new
    return colors


def isomorphic(g1: Graph, g2: Graph, cap: int = 16) -> Optional[list[int]]:
    """Bijection g1 -> g2 preserving adjacency, or None.

    Returns the lexicographically least bijection (as a list indexed by g1's
    vertices) under the fixed vertex order.  Raises TooLarge above `cap`.
    """
    if g1.n > cap or g2.n > cap:
        raise TooLarge(f"isomorphism search capped at {cap} vertices")
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return None
    c1, c2 = _refine_colors(g1), _refine_colors(g2)
    if sorted(c1) != sorted(c2):
        return None
    adj1, adj2 = g1.adjacency_masks(), g2.adjacency_masks()
    n = g1.n
    mapping = [-1] * n
    used = 0

    def place(u: int) -> bool:
        nonlocal used
        if u == n:
            return True
        for w in range(n):
            bit = 1 << w
            if used & bit or c1[u] != c2[w]:
                continue
            ok = True
            for p in range(u):
                if ((adj1[u] >> p) & 1) != ((adj2[w] >> mapping[p]) & 1):
                    ok = False
                    break
            if ok:
                mapping[u] = w
                used |= bit
                if place(u + 1):
                    return True
                used &= ~bit
                mapping[u] = -1
        return False

    return mapping if place(0) else None


def find_induced_k333(
    g: Graph, max_nodes: Optional[int] = None
) -> Optional[tuple[int, ...]]:
    """A 9-vertex subset inducing the complete tripartite graph 3+3+3, or None.

    Searches triples of independent triples that are pairwise completely
    joined.  With `max_nodes` set, raises SearchBudgetExceeded when the
    budget runs out, which is distinct from a definite absence.
    """
    n = g.n
    adj = g.adjacency_masks()
    nodes = 0

    def spend(k: int = 1) -> None:
        nonlocal nodes
        nodes += k
        if max_nodes is not None and nodes > max_nodes:
            raise SearchBudgetExceeded(nodes)

    triples: list[tuple[int, int, int]] = []
    masks: list[int] = []
    doms: list[int] = []
    for i in range(n):
        for j in range(i + 1, n):
            if adj[i] >> j & 1:
                continue
            for k in range(j + 1, n):
                spend()
                if (adj[i] >> k & 1) or (adj[j] >> k & 1):
                    continue
                triples.append((i, j, k))
                masks.append(1 << i | 1 << j | 1 << k)
                doms.append(adj[i] & adj[j] & adj[k])

    m = len(triples)
    for a in range(m):
        dom_a = doms[a]
        if bin(dom_a).count("1") < 6:
            continue
        for b in range(a + 1, m):
            spend()
            if masks[b] & dom_a != masks[b]:
                continue
            dom_ab = dom_a & doms[b]
            if bin(dom_ab).count("1") < 3:
                continue
            for c in range(b + 1, m):
                spend()
                if masks[c] & dom_ab == masks[c]:
                    return tuple(sorted(triples[a] + triples[b] + triples[c]))
    return None


def greedy_coloring(g: Graph) -> list[int]:
    """Proper coloring in vertex order, each vertex taking the least free color."""
    adj = g.adjacency_masks()
    colors = [-1] * g.n
    for v in range(g.n):
        taken = {colors[u] for u in range(v) if adj[v] >> u & 1}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return colors
