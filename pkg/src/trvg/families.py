"""Classification, edge bounds, sight-count inequalities and constructions
for the graph families with a settled representability status."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from .errors import (
    NotKPartite,
    NotRepresentable,
    SamePartVisibility,
    TooSmall,
    UnknownFixture,
)
from .geometry import Axis, Layout, Mode, Rect, bounding_box, sees
from .graphs import Graph, complete_multipartite, validate_parts
from .represent import Budget, Outcome, decide_trvg

_REPRESENTABLE_TRIPLES = {(1, 3, 3), (1, 3, 4), (2, 3, 3), (2, 3, 4)}


def classify_bipartite(p: int, q: int) -> bool:
    """Whether the complete bipartite graph on parts p, q is representable.

    True exactly when min(p, q) <= 2 or {p, q} is {3, 3} or {3, 4}.
    """
    if p < 1 or q < 1:
        raise TooSmall("part sizes must be positive")
    p, q = min(p, q), max(p, q)
    return p <= 2 or (p, q) in {(3, 3), (3, 4)}


def classify_multipartite(parts: Sequence[int]) -> bool:
    """Whether the complete multipartite graph on `parts` is representable.

    Parts must be nondecreasing.  A single part is edgeless and trivially
    representable; two parts delegate to the bipartite rule; for k >= 3 the
    graph is representable iff the second-largest part is at most 2 or the
    three largest parts are (1,3,3), (1,3,4), (2,3,3) or (2,3,4).
    """
    parts = validate_parts(parts)
    k = len(parts)
    if k == 1:
        return True
    if k == 2:
        return classify_bipartite(parts[0], parts[1])
    if parts[-2] <= 2:
        return True
    return tuple(parts[-3:]) in _REPRESENTABLE_TRIPLES


class KnownStatus(enum.Enum):
    KNOWN_YES = "known-yes"
    OPEN = "open"
    KNOWN_NO = "known-no"


def status_label(value: Union[bool, "KnownStatus"]) -> str:
    """Reporting string for a representability status: TRVG, non-TRVG or open."""
    if value is True or value is KnownStatus.KNOWN_YES:
        return "TRVG"
    if value is False or value is KnownStatus.KNOWN_NO:
        return "non-TRVG"
    return "open"


def classify_cycle_square_complement(n: int) -> KnownStatus:
    """Status of the complement of the squared n-cycle.

    Representable for n <= 9, not representable for n >= 15 (it then
    contains an induced complete tripartite 3+3+3), open in between.
    """
    if n < 5:
        raise TooSmall(f"need n >= 5, got {n}")
    if n <= 9:
        return KnownStatus.KNOWN_YES
    if n <= 14:
        return KnownStatus.OPEN
    return KnownStatus.KNOWN_NO


def edge_bound(n: int, k: int) -> int:
    """Maximum edge count of a representable k-partite graph on n vertices."""
    if k < 2 or n < k:
        raise TooSmall("need 2 <= k <= n")
    return 2 * (k - 1) * n - k * (k - 1)


@dataclass(frozen=True)
class BoundCheck:
    within: bool
    k: int
    n: int
    e: int
    bound: int

    def to_json_dict(self) -> dict:
        return {
            "within": self.within,
            "k": self.k,
            "n": self.n,
            "e": self.e,
            "bound": self.bound,
        }


def bound_check(g: Graph, parts: Sequence[int]) -> BoundCheck:
    """Compare g's edge count against the k-partite bound.

    `parts` assigns a part index to every vertex; an edge inside a part
    raises NotKPartite.  Violated (within=False) certifies that g has no
    interior-disjoint representation.
    """
    if len(parts) != g.n:
        raise ValueError("part assignment length must equal n")
    distinct = sorted(set(parts))
    if distinct != list(range(len(distinct))):
        raise ValueError("part indices must be 0..k-1 with every part used")
    k = len(distinct)
    if k < 2:
        raise TooSmall("need at least two parts")
    for u, v in sorted(g.edges):
        if parts[u] == parts[v]:
            raise NotKPartite(parts[u], u, v)
    e = g.edge_count()
    bound = edge_bound(g.n, k)
    return BoundCheck(e <= bound, k, g.n, e, bound)


@dataclass(frozen=True)
class VisibilityCounts:
    """Per-rectangle sight counts between ordered part pairs.

    x_count(i, j)[l] is how many part-j rectangles the l-th rectangle of
    part i sees horizontally; y_count the same vertically.  Indices follow
    layout order within each part.
    """

    part_sizes: tuple[int, ...]
    x_counts: dict[tuple[int, int], tuple[int, ...]]
    y_counts: dict[tuple[int, int], tuple[int, ...]]


def visibility_counts(
    layout: Layout, coloring: Union[Mapping[str, int], Sequence[int]]
) -> VisibilityCounts:
    """Count per-rectangle sights between all ordered part pairs.

    The coloring maps rectangle ids to part indices, either as an id-keyed
    mapping or as a sequence in layout order.  It must be proper: two
    same-part rectangles seeing each other (either axis) raise
    SamePartVisibility.
    """
    rects = layout.rects
    if isinstance(coloring, Mapping):
        missing = [r.id for r in rects if r.id not in coloring]
        if missing or len(coloring) != len(rects):
            raise ValueError("coloring keys must be exactly the rectangle ids")
        coloring = [coloring[r.id] for r in rects]
    if len(coloring) != len(rects):
        raise ValueError("coloring length must equal the rectangle count")
    distinct = sorted(set(coloring))
    if distinct != list(range(len(distinct))):
        raise ValueError("part indices must be 0..k-1 with every part used")
    k = len(distinct)
    members: list[list[int]] = [[] for _ in range(k)]
    for idx, part in enumerate(coloring):
        members[part].append(idx)
    for part, mem in enumerate(members):
        for a in range(len(mem)):
            for b in range(a + 1, len(mem)):
                ra, rb = rects[mem[a]], rects[mem[b]]
                if sees(ra, rb, Axis.H) or sees(ra, rb, Axis.V):
                    raise SamePartVisibility(ra.id, rb.id)
    x_counts: dict[tuple[int, int], tuple[int, ...]] = {}
    y_counts: dict[tuple[int, int], tuple[int, ...]] = {}
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            xs, ys = [], []
            for a in members[i]:
                xs.append(sum(1 for b in members[j] if sees(rects[a], rects[b], Axis.H)))
                ys.append(sum(1 for b in members[j] if sees(rects[a], rects[b], Axis.V)))
            x_counts[(i, j)] = tuple(xs)
            y_counts[(i, j)] = tuple(ys)
    return VisibilityCounts(tuple(len(m) for m in members), x_counts, y_counts)


def counts_bound_holds(
    counts: VisibilityCounts, i: int, j: int, axis: Axis
) -> bool:
    """Sight-count inequality for the ordered pair (i, j) along one axis.

    In any layout with a proper coloring, the part-j size is at least the
    total number of part-j rectangles seen from part i along one axis minus
    (|part i| - 1): consecutive same-axis runs can share at most one gap.
    """
    per_rect = counts.x_counts[(i, j)] if axis is Axis.H else counts.y_counts[(i, j)]
    n_i = counts.part_sizes[i]
    n_j = counts.part_sizes[j]
    return n_j >= sum(per_rect) - (n_i - 1)


def staircase(m: int, ids: Optional[Sequence[str]] = None, mode: Mode = Mode.DISJOINT) -> Layout:
    """m unit squares along the diagonal: pairwise non-seeing."""
    if m < 0:
        raise TooSmall("need m >= 0")
    if ids is None:
        ids = [f"A{i + 1}" for i in range(m)]
    return Layout(
        (Rect(ids[i], i, i + 1, i, i + 1) for i in range(m)),
        mode,
    )


def extend_cover(layout: Layout, count: int) -> Layout:
    """Add a part of 1 or 2 rectangles seeing everything, not each other.

    The first new rectangle sits one normalized unit right of the bounding
    box with exactly its y-extent, so it sees every rectangle horizontally
    and none vertically; the second sits one unit above with exactly the
    x-extent, seeing everything vertically.  The two never see each other.
    """
    if count not in (1, 2):
        raise ValueError("count must be 1 or 2")
    bb = bounding_box(layout)
    used = set(layout.ids())
    fresh = []
    serial = 1
    while len(fresh) < 2:
        cand = f"x{serial}"
        if cand not in used:
            fresh.append(cand)
        serial += 1
    one = Fraction(1)
    new_rects = [
        Rect(fresh[0], bb.x_hi + one, bb.x_hi + 2 * one, bb.y_lo, bb.y_hi)
    ]
    if count == 2:
        new_rects.append(
            Rect(fresh[1], bb.x_lo, bb.x_hi, bb.y_hi + one, bb.y_hi + 2 * one)
        )
    return Layout(layout.rects + tuple(new_rects), layout.mode)


def _rename(layout: Layout, mapping: dict[str, str]) -> Layout:
    return Layout(
        (
            Rect(mapping.get(r.id, r.id), r.x_lo, r.x_hi, r.y_lo, r.y_hi)
            for r in layout.rects
        ),
        layout.mode,
    )


def _part_letter(i: int) -> str:
    return chr(ord("A") + i) if i < 26 else f"P{i}"


def construct_multipartite(
    parts: Sequence[int], budget: Optional[Budget] = None
) -> Layout:
    """Layout for a representable complete multipartite graph.

    The two largest parts are realized by the decision search; every other
    part (size 1 or 2 whenever the classifier says yes) is added largest
    first with extend_cover.  Raises NotRepresentable otherwise.
    """
    parts = validate_parts(parts)
    if not classify_multipartite(parts):
        raise NotRepresentable(f"no representation exists for parts {tuple(parts)}")
    k = len(parts)
    if k == 1:
        return staircase(parts[0])
    base_graph = complete_multipartite(parts[-2:])
    verdict = decide_trvg(base_graph, budget)
    if verdict.outcome is not Outcome.YES:
        raise AssertionError("classifier and search disagree on the base case")
    layout = verdict.certificate
    assert layout is not None
    # base labels use letters A/B; move them to the final two part letters
    a, b = parts[-2], parts[-1]
    mapping = {f"A{j + 1}": f"{_part_letter(k - 2)}{j + 1}" for j in range(a)}
    mapping.update({f"B{j + 1}": f"{_part_letter(k - 1)}{j + 1}" for j in range(b)})
    layout = _rename(layout, mapping)
    for i in range(k - 3, -1, -1):
        before = set(layout.ids())
        layout = extend_cover(layout, parts[i])
        new_ids = [rid for rid in layout.ids() if rid not in before]
        layout = _rename(
            layout,
            {rid: f"{_part_letter(i)}{j + 1}" for j, rid in enumerate(new_ids)},
        )
    return layout


_FIXTURE_NAMES = ("fig1_k5", "fig6a_G", "fig6b_itrvg", "fig7a_Gprime", "graph_Gprime")


def fixture(name: str) -> Union[Layout, Graph]:
    """A published example by name: layouts and graphs used across the tests."""
    from importlib.resources import files

    from .serialization import graph_from_doc, layout_from_doc, parse_json

    if name not in _FIXTURE_NAMES:
        raise UnknownFixture(name)
    text = (files("trvg") / "fixtures" / f"{name}.json").read_text()
    doc = parse_json(text)
    if "rects" in doc:
        return layout_from_doc(doc)
    return graph_from_doc(doc)
