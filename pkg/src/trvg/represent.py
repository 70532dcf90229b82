"""Extraction, verification, realization and the representability search.

A graph has a transparent rectangle representation with interior-disjoint
rectangles exactly when its edge set splits into two spanning subgraphs that
are both interval graphs: the horizontal class is realized by the open
y-projections, the vertical class by the open x-projections, and a pair may
not lie in both classes (that would make the interiors intersect).  Allowing
a pair in both classes is precisely the intersecting variant, so the same
search decides both modes: labels {H, V} partition the edges in disjoint
mode, labels {H, V, Both} cover them in intersecting mode.

The search assigns labels vertex-incrementally (vertices in descending
degree order, ties by index); after all edges between the new vertex and the
processed prefix are labeled, both colored prefix subgraphs must be interval
graphs, else the branch is pruned.  Inside a stage, an assignment that
creates an induced 4-cycle in a class is rejected immediately; this is an
early application of the same criterion, since no interval graph contains an
induced 4-cycle.  The first processed edge is pinned to H (swapping the axes
of any layout is a validity-preserving bijection), so an exhausted search
has covered the full space.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Union

from .errors import (
    InvalidModels,
    OverlapViolation,
    SearchBudgetExceeded,
    SizeMismatch,
)
from .geometry import Axis, Layout, Mode, Rect, sees
from .graphs import Edge, Graph, find_induced_k333, greedy_coloring, isomorphic
from .intervals import IntervalModel, is_interval_masks, recognize_interval


class Label(enum.Enum):
    H = "h"
    V = "v"
    BOTH = "both"


@dataclass(frozen=True)
class EdgeAssignment:
    """Label per edge; BOTH is only legal in intersecting mode."""

    mode: Mode
    labels: Mapping[Edge, Label]

    def __post_init__(self):
        if self.mode is Mode.DISJOINT and Label.BOTH in self.labels.values():
            raise ValueError("BOTH labels are not allowed in disjoint mode")

    def class_edges(self, axis: Axis) -> frozenset[Edge]:
        keep = (Label.H, Label.BOTH) if axis is Axis.H else (Label.V, Label.BOTH)
        return frozenset(e for e, l in self.labels.items() if l in keep)


@dataclass(frozen=True)
class Budget:
    """Deterministic node cap plus a wall-clock stop."""

    max_nodes: int = 10**8
    max_seconds: float = 60.0

    def __post_init__(self):
        if self.max_nodes < 1 or self.max_seconds <= 0:
            raise ValueError("budget must be positive")


@dataclass(frozen=True)
class Screens:
    """Optional refutation shortcuts, both off by default."""

    edge_bound: bool = False
    induced_k333: bool = False


class Outcome(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Exhausted:
    """The labeled search space was covered completely."""


@dataclass(frozen=True)
class EdgeBoundEvidence:
    """e > 2(k-1)n - k(k-1) for a proper k-partition, so no representation."""

    k: int
    n: int
    e: int
    bound: int


@dataclass(frozen=True)
class InducedK333Evidence:
    """Vertex set inducing the complete tripartite 3+3+3 obstruction."""

    witness: tuple[int, ...]


Evidence = Union[Exhausted, EdgeBoundEvidence, InducedK333Evidence, None]


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    certificate: Optional[Layout]
    evidence: Evidence
    nodes: int

    def to_json_dict(self) -> dict:
        from .serialization import layout_to_doc

        out: dict = {"outcome": self.outcome.value, "nodes": self.nodes}
        if self.evidence is not None:
            if isinstance(self.evidence, Exhausted):
                out["evidence"] = {"kind": "exhausted"}
            elif isinstance(self.evidence, EdgeBoundEvidence):
                out["evidence"] = {
                    "kind": "edge_bound",
                    "k": self.evidence.k,
                    "n": self.evidence.n,
                    "e": self.evidence.e,
                    "bound": self.evidence.bound,
                }
            else:
                out["evidence"] = {
                    "kind": "induced_k333",
                    "witness": list(self.evidence.witness),
                }
        if self.certificate is not None:
            out["certificate"] = layout_to_doc(self.certificate)
        return out


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of checking a layout against a target graph."""

    ok: bool
    missing: tuple[Edge, ...]
    extra: tuple[Edge, ...]
    bijection: Optional[tuple[int, ...]] = None

    def to_json_dict(self) -> dict:
        out: dict = {
            "ok": self.ok,
            "missing": [list(e) for e in self.missing],
            "extra": [list(e) for e in self.extra],
        }
        if self.bijection is not None:
            out["bijection"] = list(self.bijection)
        return out


def extract(layout: Layout) -> Graph:
    """Visibility graph of the layout; vertex i is the i-th rectangle.

    In disjoint mode a pair seeing both ways means intersecting interiors
    and raises OverlapViolation naming the pair.
    """
    rects = layout.rects
    n = len(rects)
    edges: list[Edge] = []
    for i in range(n):
        for j in range(i + 1, n):
            h = sees(rects[i], rects[j], Axis.H)
            v = sees(rects[i], rects[j], Axis.V)
            if h and v and layout.mode is Mode.DISJOINT:
                raise OverlapViolation(rects[i].id, rects[j].id)
            if h or v:
                edges.append((i, j))
    return Graph(n, edges, tuple(r.id for r in rects))


def _identity_mapping(layout: Layout, target: Graph) -> dict[str, int]:
    ids = layout.ids()
    if target.labels is not None and set(ids) == set(target.labels):
        index = {lab: i for i, lab in enumerate(target.labels)}
        return {rid: index[rid] for rid in ids}
    return {rid: i for i, rid in enumerate(ids)}


def verify(
    layout: Layout,
    target: Graph,
    mapping: Union[None, str, Mapping[str, int]] = None,
) -> VerifyReport:
    """Check that the layout realizes exactly the target graph.

    With a mapping (rect id -> vertex, or "identity" to map by matching
    labels, else by position) the report lists missing and extra edges.
    Without one, an isomorphism between the extracted and target graphs is
    searched and returned; the diff lists are only populated for explicit
    mappings.
    """
    if len(layout) != target.n:
        raise SizeMismatch(
            f"layout has {len(layout)} rectangles, target has {target.n} vertices"
        )
    extracted = extract(layout)
    if mapping is None:
        bij = isomorphic(extracted, target)
        if bij is None:
            return VerifyReport(False, (), ())
        return VerifyReport(True, (), (), tuple(bij))
    if mapping == "identity":
        mapping = _identity_mapping(layout, target)
    to_vertex = [mapping[rid] for rid in layout.ids()]
    if sorted(to_vertex) != list(range(target.n)):
        raise SizeMismatch("mapping is not a bijection onto the target vertices")
    realized = frozenset(
        (min(to_vertex[u], to_vertex[v]), max(to_vertex[u], to_vertex[v]))
        for u, v in extracted.edges
    )
    missing = tuple(sorted(target.edges - realized))
    extra = tuple(sorted(realized - target.edges))
    return VerifyReport(not missing and not extra, missing, extra, tuple(to_vertex))


def realize(
    n: int,
    assignment: EdgeAssignment,
    models: tuple[IntervalModel, IntervalModel],
    ids: Optional[Sequence[str]] = None,
) -> Layout:
    """Layout from one interval model per axis.

    models is (horizontal, vertical): the horizontal model supplies the open
    y-projections and must realize exactly the H-class edges, the vertical
    model supplies the x-projections for the V-class.  The result extracts
    to the union of the classes by construction.
    """
    h_model, v_model = models
    if len(h_model.intervals) != n or len(v_model.intervals) != n:
        raise InvalidModels(f"models must cover all {n} vertices")
    h_edges = assignment.class_edges(Axis.H)
    v_edges = assignment.class_edges(Axis.V)
    for u in range(n):
        for v in range(u + 1, n):
            if h_model.overlaps(u, v) != ((u, v) in h_edges):
                raise InvalidModels(f"horizontal model wrong on pair ({u}, {v})")
            if v_model.overlaps(u, v) != ((u, v) in v_edges):
                raise InvalidModels(f"vertical model wrong on pair ({u}, {v})")
    if ids is None or len(set(ids)) != n:
        ids = [f"r{i}" for i in range(n)]
    rects = []
    for i in range(n):
        x_lo, x_hi = v_model.intervals[i]
        y_lo, y_hi = h_model.intervals[i]
        rects.append(Rect(ids[i], x_lo, x_hi, y_lo, y_hi))
    return Layout(rects, assignment.mode)


class _BudgetHit(Exception):
    pass


class _Searcher:
    """Vertex-incremental label search over one graph."""

    def __init__(self, g: Graph, budget: Budget, cover: bool):
        self.g = g
        self.budget = budget
        self.cover = cover
        n = g.n
        degree = [0] * n
        for u, v in g.edges:
            degree[u] += 1
            degree[v] += 1
        self.order = sorted(range(n), key=lambda v: (-degree[v], v))
        pos = {v: i for i, v in enumerate(self.order)}
        adj = [0] * n
        for u, v in g.edges:
            adj[pos[u]] |= 1 << pos[v]
            adj[pos[v]] |= 1 << pos[u]
        self.adj = adj
        proc: list[tuple[int, int]] = []
        stage_at: dict[int, int] = {}
        for t in range(1, n):
            had = False
            for p in range(t):
                if adj[t] >> p & 1:
                    proc.append((t, p))
                    had = True
            if had:
                stage_at[len(proc) - 1] = t
        self.proc = proc
        self.stage_at = stage_at
        self.nodes = 0
        self.deadline = 0.0
        self.adj_h = [0] * n
        self.adj_v = [0] * n
        self.labels: list[Label] = []
        self._interval_cache: dict[tuple[int, ...], bool] = {}

    def _interval_prefix(self, adj_cls: list[int], upto: int) -> bool:
        key = tuple(adj_cls[: upto + 1])
        cached = self._interval_cache.get(key)
        if cached is None:
            cached = is_interval_masks(key, (1 << (upto + 1)) - 1)
            self._interval_cache[key] = cached
        return cached

    def _creates_c4(self, adj_cls: list[int], t: int, p: int) -> bool:
        # induced 4-cycle through the fresh edge (t, p): x ~ p only, y ~ t
        # only, and x ~ y, all inside the class.  Non-adjacency of x and t
        # must be settled: pairs (t, x) with x > p are unlabeled in this
        # stage and could still become the chord, so they are excluded.
        pending = self.adj[t] & ~((1 << (p + 1)) - 1)
        xs = adj_cls[p] & ~adj_cls[t] & ~(1 << t) & ~pending
        ys = adj_cls[t] & ~adj_cls[p] & ~(1 << p)
        if not xs or not ys:
            return False
        while xs:
            bit = xs & -xs
            xs ^= bit
            if adj_cls[bit.bit_length() - 1] & ys:
                return True
        return False

    def run(self) -> Optional[list[Label]]:
        """First satisfying label vector in lexicographic order, else None."""
        self.deadline = time.perf_counter() + self.budget.max_seconds
        if not self.proc:
            return []
        try:
            if self._grow(0):
                return list(self.labels)
            return None
        except _BudgetHit:
            raise SearchBudgetExceeded(self.nodes) from None

    def _spend(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise _BudgetHit
        if self.nodes % 4096 == 0 and time.perf_counter() > self.deadline:
            raise _BudgetHit

    def _grow(self, i: int) -> bool:
        t, p = self.proc[i]
        tbit = 1 << t
        pbit = 1 << p
        adj_h, adj_v = self.adj_h, self.adj_v
        if i == 0:
            choices = (Label.H, Label.BOTH) if self.cover else (Label.H,)
        elif self.cover:
            choices = (Label.H, Label.V, Label.BOTH)
        else:
            choices = (Label.H, Label.V)
        stage_vertex = self.stage_at.get(i)
        last = i + 1 == len(self.proc)
        for label in choices:
            self._spend()
            in_h = label is not Label.V
            in_v = label is not Label.H
            if in_h and self._creates_c4(adj_h, t, p):
                continue
            if in_v and self._creates_c4(adj_v, t, p):
                continue
            if in_h:
                adj_h[t] |= pbit
                adj_h[p] |= tbit
            if in_v:
                adj_v[t] |= pbit
                adj_v[p] |= tbit
            ok = True
            if stage_vertex is not None:
                if adj_h[stage_vertex]:
                    ok = self._interval_prefix(adj_h, stage_vertex)
                if ok and adj_v[stage_vertex]:
                    ok = self._interval_prefix(adj_v, stage_vertex)
            if ok:
                if last:
                    self.labels.append(label)
                    return True
                self.labels.append(label)
                if self._grow(i + 1):
                    return True
                self.labels.pop()
            if in_h:
                adj_h[t] &= ~pbit
                adj_h[p] &= ~tbit
            if in_v:
                adj_v[t] &= ~pbit
                adj_v[p] &= ~tbit
        return False

    def assignment(self, labels: Sequence[Label]) -> EdgeAssignment:
        mapping: dict[Edge, Label] = {}
        for (t, p), label in zip(self.proc, labels):
            u, v = self.order[t], self.order[p]
            mapping[(min(u, v), max(u, v))] = label
        return EdgeAssignment(
            Mode.INTERSECTING if self.cover else Mode.DISJOINT, mapping
        )


def _certificate(g: Graph, assignment: EdgeAssignment) -> Layout:
    from .geometry import normalize

    h_graph = Graph(g.n, assignment.class_edges(Axis.H))
    v_graph = Graph(g.n, assignment.class_edges(Axis.V))
    h_model = recognize_interval(h_graph)
    v_model = recognize_interval(v_graph)
    if h_model is None or v_model is None:
        raise AssertionError("search accepted a non-interval class")
    layout = realize(g.n, assignment, (h_model, v_model), ids=g.labels)
    if extract(layout).edges != g.edges:
        raise AssertionError("certificate does not extract to the input graph")
    return normalize(layout)


def _decide(g: Graph, budget: Budget, cover: bool) -> Verdict:
    searcher = _Searcher(g, budget, cover)
    try:
        labels = searcher.run()
    except SearchBudgetExceeded:
        return Verdict(Outcome.UNKNOWN, None, None, searcher.nodes)
    if labels is None:
        return Verdict(Outcome.NO, None, Exhausted(), searcher.nodes)
    certificate = _certificate(g, searcher.assignment(labels))
    return Verdict(Outcome.YES, certificate, None, searcher.nodes)


def decide_trvg(
    g: Graph,
    budget: Optional[Budget] = None,
    screens: Optional[Screens] = None,
) -> Verdict:
    """Decide interior-disjoint representability.

    Yes comes with a verified, normalized certificate layout; No(Exhausted)
    only after the full labeled space was covered under the axis-swap
    symmetry; Unknown exactly when the budget ran out.  Optional screens
    refute first without searching: the k-partite edge bound (on a greedy
    proper coloring) and the induced complete-tripartite 3+3+3 obstruction.
    """
    budget = budget or Budget()
    screens = screens or Screens()
    if screens.edge_bound and g.n >= 2:
        colors = greedy_coloring(g)
        k = max(colors) + 1
        if k >= 2:
            bound = 2 * (k - 1) * g.n - k * (k - 1)
            e = g.edge_count()
            if e > bound:
                return Verdict(
                    Outcome.NO, None, EdgeBoundEvidence(k, g.n, e, bound), 0
                )
    if screens.induced_k333 and g.n >= 9:
        try:
            witness = find_induced_k333(g, max_nodes=10**6)
        except SearchBudgetExceeded:
            witness = None
        if witness is not None:
            return Verdict(Outcome.NO, None, InducedK333Evidence(witness), 0)
    return _decide(g, budget, cover=False)


def decide_itrvg(g: Graph, budget: Optional[Budget] = None) -> Verdict:
    """Decide representability with intersections allowed (edge cover search).

    Every disjoint-mode Yes is also a Yes here; certificates are
    intersecting-mode layouts.
    """
    return _decide(g, budget or Budget(), cover=True)
