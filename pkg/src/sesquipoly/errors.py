"""Exception types shared across the package.

The CLI maps these onto its exit codes: parse errors to 1, points outside
the certified region to 2, exceeded caps to 3.
"""


class GraphParseError(ValueError):
    """Malformed graph input (bad line, self-loop, negative or oversized id)."""


class SizeLimitError(RuntimeError):
    """Exact enumeration refused: the graph exceeds the configured cap."""

    def __init__(self, n, limit):
        super().__init__(
            f"graph has {n} vertices but exact enumeration is capped at {limit}; "
            f"raise the cap explicitly if you really want this"
        )
        self.n = n
        self.limit = limit


class UnsupportedDegreeError(ValueError):
    """Region analytics need a degree bound of at least 2.

    Graphs with max degree 0 or 1 have trivially computable polynomials;
    evaluate them exactly instead.
    """


class PointOutsideRegionError(ValueError):
    """The evaluation point is not (strictly) inside the certified region."""

    def __init__(self, message, reason):
        super().__init__(message)
        self.reason = reason  # "x-condition" | "main-inequality"


class DivergentBoundError(ValueError):
    """|x| <= (degree bound - 1) e^a: the geometric cycle series diverges."""


class TruncationCapError(RuntimeError):
    """The required truncation order exceeds the configured cap."""

    def __init__(self, m, cap):
        super().__init__(
            f"required truncation order m={m} exceeds the cap {cap}; "
            f"increase epsilon, pick a different a, or raise --m-cap"
        )
        self.m = m
        self.cap = cap
