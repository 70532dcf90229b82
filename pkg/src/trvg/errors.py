"""Exception types shared across the toolkit."""


class TrvgError(Exception):
    """Base class for all toolkit errors."""


class InvalidRect(TrvgError, ValueError):
    """Rectangle with a degenerate or reversed extent."""


class DuplicateId(TrvgError, ValueError):
    """Layout with two rectangles sharing an id."""


class EmptyLayout(TrvgError, ValueError):
    """Operation that needs at least one rectangle got none."""


class UnknownId(TrvgError, KeyError):
    """Rectangle id not present in the layout."""


class NoStrip(TrvgError, ValueError):
    """Strip undefined: projections overlap or the gap has zero width."""

    def __init__(self, axis: str, id_a: str, id_b: str, reason: str):
        self.axis = axis
        self.pair = (id_a, id_b)
        super().__init__(f"no {axis} strip between {id_a!r} and {id_b!r}: {reason}")


class OverlapViolation(TrvgError, ValueError):
    """Disjoint-mode layout with two rectangles whose interiors intersect."""

    def __init__(self, id_a: str, id_b: str):
        self.pair = (id_a, id_b)
        super().__init__(f"interiors of {id_a!r} and {id_b!r} intersect")


class TooSmall(TrvgError, ValueError):
    """Parameter below the smallest supported value."""


class TooLarge(TrvgError, ValueError):
    """Instance above the supported size cap."""


class TooManyCliques(TrvgError, ValueError):
    """Clique count above the enumeration oracle's cap."""


class InvalidModels(TrvgError, ValueError):
    """Interval models that do not realize the assigned edge classes."""


class NotKPartite(TrvgError, ValueError):
    """Partition with an edge inside one of its parts."""

    def __init__(self, part: int, u: int, v: int):
        self.part = part
        self.edge = (u, v)
        super().__init__(f"edge ({u}, {v}) lies inside part {part}")


class SamePartVisibility(TrvgError, ValueError):
    """Coloring where two same-part rectangles see each other."""

    def __init__(self, id_a: str, id_b: str):
        self.pair = (id_a, id_b)
        super().__init__(f"rectangles {id_a!r} and {id_b!r} share a part but see each other")


class NotRepresentable(TrvgError, ValueError):
    """Construction requested for a family member with no representation."""


class SearchBudgetExceeded(TrvgError, RuntimeError):
    """Raised internally when a search runs out of nodes or time."""

    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__(f"search budget exhausted after {nodes} nodes")


class SizeMismatch(TrvgError, ValueError):
    """Layout and target graph with different sizes."""


class SchemaError(TrvgError, ValueError):
    """Document that does not match the published JSON schema."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class UnknownFixture(TrvgError, KeyError):
    """Fixture name outside the published set."""
