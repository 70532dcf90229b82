"""Axis-parallel rectangles with exact rational coordinates.

Visibility is an open-interval notion throughout: two rectangles see each
other horizontally when their open y-projections intersect, vertically when
their open x-projections intersect.  Boundary contact never counts, so
abutting rectangles neither see each other nor violate interior-disjointness.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    DuplicateId,
    EmptyLayout,
    InvalidRect,
    NoStrip,
    UnknownId,
)

Coord = Union[int, str, Fraction]


class Axis(enum.Enum):
    """Sight-line direction: H is a horizontal line, V a vertical one."""

    H = "h"
    V = "v"


class Mode(enum.Enum):
    """Layout discipline: Disjoint forbids interior intersections."""

    DISJOINT = "trvg"
    INTERSECTING = "itrvg"


class Coverage(enum.Enum):
    ENTIRE = "entire"
    PARTIAL = "partial"
    NONE = "none"


def _frac(value: Coord) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise InvalidRect(f"coordinate {value!r} is not an int, decimal string or Fraction")


@dataclass(frozen=True)
class Rect:
    """Closed axis-parallel rectangle [x_lo, x_hi] x [y_lo, y_hi], positive area."""

    id: str
    x_lo: Fraction
    x_hi: Fraction
    y_lo: Fraction
    y_hi: Fraction

    def __init__(self, id: str, x_lo: Coord, x_hi: Coord, y_lo: Coord, y_hi: Coord):
        object.__setattr__(self, "id", id)
        object.__setattr__(self, "x_lo", _frac(x_lo))
        object.__setattr__(self, "x_hi", _frac(x_hi))
        object.__setattr__(self, "y_lo", _frac(y_lo))
        object.__setattr__(self, "y_hi", _frac(y_hi))
        if not self.x_lo < self.x_hi:
            raise InvalidRect(f"rectangle {id!r}: x_lo must be < x_hi")
        if not self.y_lo < self.y_hi:
            raise InvalidRect(f"rectangle {id!r}: y_lo must be < y_hi")

    def interval(self, axis: Axis) -> tuple[Fraction, Fraction]:
        """Projection relevant for sight lines along `axis` (H -> y, V -> x)."""
        if axis is Axis.H:
            return (self.y_lo, self.y_hi)
        return (self.x_lo, self.x_hi)


@dataclass(frozen=True)
class Strip:
    """Open band strictly between the facing sides of two rectangles."""

    orientation: Axis  # V: vertical band between x-extents; H: horizontal band
    lo: Fraction
    hi: Fraction
    between: tuple[str, str]


@dataclass(frozen=True)
class Layout:
    """Finite set of rectangles with distinct ids."""

    rects: tuple[Rect, ...]
    mode: Mode = Mode.DISJOINT

    def __init__(self, rects: Iterable[Rect], mode: Mode = Mode.DISJOINT):
        rects = tuple(rects)
        seen: set[str] = set()
        for r in rects:
            if r.id in seen:
                raise DuplicateId(f"duplicate rectangle id {r.id!r}")
            seen.add(r.id)
        object.__setattr__(self, "rects", rects)
        object.__setattr__(self, "mode", mode)

    def __len__(self) -> int:
        return len(self.rects)

    def by_id(self, rect_id: str) -> Rect:
        for r in self.rects:
            if r.id == rect_id:
                return r
        raise UnknownId(rect_id)

    def ids(self) -> tuple[str, ...]:
        return tuple(r.id for r in self.rects)


def _open_overlap(a_lo: Fraction, a_hi: Fraction, b_lo: Fraction, b_hi: Fraction) -> bool:
    return a_lo < b_hi and b_lo < a_hi


def sees(a: Rect, b: Rect, axis: Axis) -> bool:
    """True when an axis-parallel open sight line meets both interiors.

    Horizontal visibility compares open y-projections, vertical visibility
    open x-projections.  Transparency means no third rectangle can block,
    so the predicate is purely pairwise.
    """
    (a_lo, a_hi) = a.interval(axis)
    (b_lo, b_hi) = b.interval(axis)
    return _open_overlap(a_lo, a_hi, b_lo, b_hi)


def interiors_disjoint(a: Rect, b: Rect) -> bool:
    """Open interiors intersect exactly when the pair sees both ways."""
    return not (sees(a, b, Axis.H) and sees(a, b, Axis.V))


def bounding_box(layout: Layout) -> Rect:
    """Smallest rectangle containing every rectangle of the layout."""
    if not layout.rects:
        raise EmptyLayout("bounding box of an empty layout")
    return Rect(
        "__bbox__",
        min(r.x_lo for r in layout.rects),
        max(r.x_hi for r in layout.rects),
        min(r.y_lo for r in layout.rects),
        max(r.y_hi for r in layout.rects),
    )


def normalize(layout: Layout) -> Layout:
    """Map coordinates to small nonnegative integers, preserving per-axis order.

    Visibility depends only on the per-axis order type, so the normalized
    layout extracts to the same graph.  Already-canonical integer layouts map
    to themselves.
    """
    xs = sorted({c for r in layout.rects for c in (r.x_lo, r.x_hi)})
    ys = sorted({c for r in layout.rects for c in (r.y_lo, r.y_hi)})
    x_rank = {c: Fraction(i) for i, c in enumerate(xs)}
    y_rank = {c: Fraction(i) for i, c in enumerate(ys)}
    return Layout(
        (
            Rect(r.id, x_rank[r.x_lo], x_rank[r.x_hi], y_rank[r.y_lo], y_rank[r.y_hi])
            for r in layout.rects
        ),
        layout.mode,
    )


def _staircase_order(
    rects: Sequence[Rect], axis: Axis
) -> list[Rect]:
    """Selected rectangles sorted along one axis; projections must be disjoint."""
    key_lo = (lambda r: r.y_lo) if axis is Axis.H else (lambda r: r.x_lo)
    ordered = sorted(rects, key=key_lo)
    for prev, cur in zip(ordered, ordered[1:]):
        if sees(prev, cur, axis):
            name = "horizontal" if axis is Axis.H else "vertical"
            raise NoStrip(name, prev.id, cur.id, "projections overlap")
    return ordered

def strips(layout: Layout, ids: Sequence[str]) -> list[Strip]:
    """Open bands between consecutive selected rectangles, per axis.

    Requires a staircase-like selection: pairwise disjoint projections on
    both axes.  k rectangles yield k-1 vertical strips (left to right) then
    k-1 horizontal strips (bottom to top).  A zero-width gap (abutting
    sides) has no strip.
    """
    chosen = [layout.by_id(i) for i in ids]
    out: list[Strip] = []
    for axis, name in ((Axis.V, "vertical"), (Axis.H, "horizontal")):
        ordered = _staircase_order(chosen, axis)
        for prev, cur in zip(ordered, ordered[1:]):
            lo, hi = prev.interval(axis)[1], cur.interval(axis)[0]
            if not lo < hi:
                raise NoStrip(name, prev.id, cur.id, "facing sides touch")
            out.append(Strip(axis, lo, hi, (prev.id, cur.id)))
    return out


def contains_strip(rect: Rect, strip: Strip) -> bool:
    """Strict containment of the strip's band in the rectangle's extent.

    A rectangle containing a vertical strip spans strictly past both of its
    bounding abscissae, so any rectangle crossing the strip is seen.
    """
    if strip.orientation is Axis.V:
        return rect.x_lo < strip.lo and strip.hi < rect.x_hi
    return rect.y_lo < strip.lo and strip.hi < rect.y_hi


def coverage(a: Rect, b: Rect, axis: Axis) -> Coverage:
    """How much of a's open projection lies inside b's, along `axis`.

    ENTIRE means every sight line through a's interior along the axis also
    crosses b; PARTIAL means some do, some do not; NONE means none do.
    """
    a_lo, a_hi = a.interval(axis)
    b_lo, b_hi = b.interval(axis)
    if not _open_overlap(a_lo, a_hi, b_lo, b_hi):
        return Coverage.NONE
    if b_lo <= a_lo and a_hi <= b_hi:
        return Coverage.ENTIRE
    return Coverage.PARTIAL
