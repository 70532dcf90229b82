"""Transparent rectangle visibility graphs.

Rectangles see each other along an axis when an axis-parallel open sight
line meets both interiors; transparency means nothing blocks.  This package
extracts visibility graphs from layouts, verifies layouts against target
graphs, decides representability (with interiors disjoint or allowed to
intersect), classifies the closed-form families, checks edge-count bounds
and renders layouts to SVG, all with exact rational coordinates.
"""

from .errors import (
    DuplicateId,
    EmptyLayout,
    InvalidModels,
    InvalidRect,
    NoStrip,
    NotKPartite,
    NotRepresentable,
    OverlapViolation,
    SamePartVisibility,
    SchemaError,
    SearchBudgetExceeded,
    SizeMismatch,
    TooLarge,
    TooManyCliques,
    TooSmall,
    TrvgError,
    UnknownFixture,
    UnknownId,
)
from .families import (
    BoundCheck,
    KnownStatus,
    VisibilityCounts,
    bound_check,
    classify_bipartite,
    classify_cycle_square_complement,
    classify_multipartite,
    construct_multipartite,
    counts_bound_holds,
    edge_bound,
    extend_cover,
    fixture,
    staircase,
    status_label,
    visibility_counts,
)
from .geometry import (
    Axis,
    Coverage,
    Layout,
    Mode,
    Rect,
    Strip,
    bounding_box,
    contains_strip,
    coverage,
    interiors_disjoint,
    normalize,
    sees,
    strips,
)
from .graphs import (
    Graph,
    complete_multipartite,
    cycle_square_complement,
    find_induced_k333,
    greedy_coloring,
    induced,
    isomorphic,
)
from .intervals import (
    IntervalModel,
    is_interval_oracle,
    maximal_cliques,
    recognize_interval,
)
from .oracle import geometric_oracle
from .represent import (
    Budget,
    EdgeAssignment,
    EdgeBoundEvidence,
    Exhausted,
    InducedK333Evidence,
    Label,
    Outcome,
    Screens,
    Verdict,
    VerifyReport,
    decide_itrvg,
    decide_trvg,
    extract,
    realize,
    verify,
)
from .serialization import (
    coord_from_json,
    coord_to_json,
    graph_from_doc,
    graph_to_doc,
    layout_from_doc,
    layout_to_doc,
    parse_graph,
    parse_layout,
    serialize_graph,
    serialize_layout,
)
from .svg import render_svg

__version__ = "0.1.0"

__all__ = [
    "Axis",
    "BoundCheck",
    "Budget",
    "Coverage",
    "DuplicateId",
    "EdgeAssignment",
    "EdgeBoundEvidence",
    "EmptyLayout",
    "Exhausted",
    "Graph",
    "InducedK333Evidence",
    "IntervalModel",
    "InvalidModels",
    "InvalidRect",
    "KnownStatus",
    "Label",
    "Layout",
    "Mode",
    "NoStrip",
    "NotKPartite",
    "NotRepresentable",
    "Outcome",
    "OverlapViolation",
    "Rect",
    "SamePartVisibility",
    "SchemaError",
    "Screens",
    "SearchBudgetExceeded",
    "SizeMismatch",
    "Strip",
    "TooLarge",
    "TooManyCliques",
    "TooSmall",
    "TrvgError",
    "UnknownFixture",
    "UnknownId",
    "Verdict",
    "VerifyReport",
    "VisibilityCounts",
    "bound_check",
    "bounding_box",
    "classify_bipartite",
    "classify_cycle_square_complement",
    "classify_multipartite",
    "complete_multipartite",
    "construct_multipartite",
    "contains_strip",
    "coord_from_json",
    "coord_to_json",
    "counts_bound_holds",
    "coverage",
    "cycle_square_complement",
    "decide_itrvg",
    "decide_trvg",
    "edge_bound",
    "extend_cover",
    "extract",
    "find_induced_k333",
    "fixture",
    "geometric_oracle",
    "graph_from_doc",
    "graph_to_doc",
    "greedy_coloring",
    "induced",
    "interiors_disjoint",
    "is_interval_oracle",
    "isomorphic",
    "layout_from_doc",
    "layout_to_doc",
    "maximal_cliques",
    "normalize",
    "parse_graph",
    "parse_layout",
    "realize",
    "recognize_interval",
    "render_svg",
    "sees",
    "serialize_graph",
    "serialize_layout",
    "staircase",
    "status_label",
    "strips",
    "verify",
    "visibility_counts",
]
