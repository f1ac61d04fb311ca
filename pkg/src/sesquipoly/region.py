"""Zero-free-region analytics for the sesquivalent polynomial.

For a graph of maximum degree at most D >= 2 and any a > 0, the polynomial
cannot vanish when |x| > (D-1)e^a and

    |y| + ((D-1)e^a / (|x| - (D-1)e^a)) |z|  <=  alpha (e^a - 1),

with alpha = (D-1)^2 / D. The proof bounds the vertex-anchored polymer sum
(edges with activity |y|/|x|^2, k-cycles with activity |z|/|x|^k) by a
geometric series; both the exact anchored sum and the closed-form bound are
implemented here, along with the optimisation of the auxiliary parameter a.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import (
    DivergentBoundError,
    PointOutsideRegionError,
    UnsupportedDegreeError,
)
from .graph import Graph, cycles_through_vertex


@dataclass(frozen=True)
class RegionParams:
    """Derived constants of the certified region at a degree bound and a."""

    delta_max: int
    a: float
    alpha: float  # (D-1)^2 / D
    c: float  # (D-1) e^a
    budget: float  # alpha (e^a - 1), right-hand side of the main inequality
    girth: Optional[float] = None

    @classmethod
    def derive(cls, delta_max: int, a: float, girth=None) -> "RegionParams":
        if delta_max < 2:
            raise UnsupportedDegreeError(
                f"degree bound {delta_max} < 2 is outside the certified regime; "
                "graphs this sparse should be evaluated exactly"
            )
        if not a > 0:
            raise ValueError("auxiliary parameter a must be positive")
        if girth is not None and girth < 3:
            raise ValueError("girth must be at least 3")
        alpha = (delta_max - 1) ** 2 / delta_max
        ea = math.exp(a)
        return cls(delta_max, a, alpha, (delta_max - 1) * ea, alpha * (ea - 1.0), girth)


@dataclass(frozen=True)
class RegionCertificate:
    """Outcome of a membership test, with every derived quantity exposed."""

    inside: bool
    lhs: float
    rhs: float
    delta_slack: float
    a: float
    c: float
    alpha: float
    failed: Optional[str] = None

    def to_json_dict(self) -> dict:
        return {
            "inside": self.inside,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "delta_slack": self.delta_slack,
            "a": self.a,
            "c": self.c,
            "alpha": self.alpha,
            "failed": self.failed,
        }


def certify_region(delta_max: int, a: float, x, y, z, girth=None) -> RegionCertificate:
    """Membership test for the certified zero-free region.

    A girth bound g > 3 scales the cycle coefficient by r^(g-3) with
    r = c/|x| < 1, which can only enlarge the certified set. Equality in
    the main inequality counts as inside.
    """
    params = RegionParams.derive(delta_max, a, girth)
    ax, ay, az = abs(x), abs(y), abs(z)
    slack = params.budget - ay
    if ax <= params.c:
        return RegionCertificate(
            False, math.inf, params.budget, slack, a, params.c, params.alpha,
            "x-condition",
        )
    scale = 1.0
    if girth is not None and girth > 3:
        scale = (params.c / ax) ** (girth - 3)
    lhs = ay + (params.c / (ax - params.c)) * scale * az
    if lhs <= params.budget:
        return RegionCertificate(
            True, lhs, params.budget, slack, a, params.c, params.alpha, None
        )
    return RegionCertificate(
        False, lhs, params.budget, slack, a, params.c, params.alpha,
        "main-inequality",
    )


def fp_sum_exact(graph: Graph, x, y, z, a: float, v: int) -> float:
    """Exact anchored polymer sum at vertex v.

    Sums |y|/|x|^2 e^{2a} over incident edges and |z|/|x|^k e^{ak} over the
    cycles through v, using the canonical cycle enumeration.
    """
    if x == 0:
        raise ValueError("x must be nonzero")
    if not 0 <= v < graph.n:
        raise ValueError(f"vertex {v} out of range for n={graph.n}")
    ax = abs(x)
    total = graph.degree(v) * (abs(y) / ax**2) * math.exp(2.0 * a)
    az = abs(z)
    for cyc in cycles_through_vertex(graph, v, graph.n):
        k = len(cyc)
        total += (az / ax**k) * math.exp(a * k)
    return total


def fp_sum_bound(delta_max: int, x, y, z, a: float, girth=None) -> float:
    """Closed-form upper bound on the anchored sum under a degree bound.

    At most D edges meet a vertex and at most D(D-1)^(k-2) k-cycles pass
    through it; summing the resulting geometric series needs
    |x| > (D-1)e^a. A girth bound g replaces r^3/(1-r) by r^g/(1-r).
    """
    params = RegionParams.derive(delta_max, a, girth)
    ax = abs(x)
    if ax <= params.c:
        raise DivergentBoundError(
            f"|x|={ax:g} <= (degree-1)e^a={params.c:g}: cycle series diverges"
        )
    r = params.c / ax
    g = girth if girth is not None else 3
    edge_term = delta_max * math.exp(2.0 * a) * abs(y) / ax**2
    cycle_term = (delta_max * abs(z) / (delta_max - 1) ** 2) * r**g / (1.0 - r)
    return edge_term + cycle_term


class OptimalA(NamedTuple):
    a: float
    t: float
    admissible: bool


def optimal_a(delta_max: int, abs_x: float, abs_y: float) -> OptimalA:
    """Maximizer of the cycle budget over the auxiliary parameter.

    The budget g(t) = (c/t - 1)(alpha (t-1) - |y|) with t = e^a and
    c = |x|/(D-1) is strictly concave; its unique critical point is the
    geometric mean t* = sqrt(c (1 + |y|/alpha)), admissible exactly when
    the interval (1 + |y|/alpha, c) is nonempty.
    """
    if delta_max < 2:
        raise UnsupportedDegreeError(
            f"degree bound {delta_max} < 2 is outside the certified regime"
        )
    if not abs_x > 0:
        raise ValueError("need |x| > 0")
    if abs_y < 0:
        raise ValueError("|y| must be non-negative")
    alpha = (delta_max - 1) ** 2 / delta_max
    cap = abs_x / (delta_max - 1)
    lo = 1.0 + abs_y / alpha
    t_star = math.sqrt(cap * lo)
    return OptimalA(math.log(t_star), t_star, lo < t_star < cap)


def z_budget(delta_max: int, abs_x: float, abs_y: float, t: float) -> float:
    """Certified cycle-activity budget at t = e^a.

    Negative outside the admissible interval (1 + |y|/alpha, |x|/(D-1));
    callers decide whether to clamp.
    """
    if delta_max < 2:
        raise UnsupportedDegreeError(
            f"degree bound {delta_max} < 2 is outside the certified regime"
        )
    if not t > 0:
        raise ValueError("t must be positive")
    alpha = (delta_max - 1) ** 2 / delta_max
    cap = abs_x / (delta_max - 1)
    return (cap / t - 1.0) * (alpha * (t - 1.0) - abs_y)


def z_max(delta_max: int, abs_x: float, abs_y: float, a: Optional[float] = None) -> float:
    """Largest certified |z| at the given a, or at the optimal a if omitted.

    Non-positive budgets are clamped to zero with a warning. With a
    omitted and no admissible parameter at all, raises
    PointOutsideRegionError.
    """
    if delta_max < 2:
        raise UnsupportedDegreeError(
            f"degree bound {delta_max} < 2 is outside the certified regime"
        )
    if a is None:
        opt = optimal_a(delta_max, abs_x, abs_y)
        if not opt.admissible:
            raise PointOutsideRegionError(
                "point outside all certified regions: no admissible a",
                reason="main-inequality",
            )
        t = opt.t
    else:
        if not a > 0:
            raise ValueError("auxiliary parameter a must be positive")
        t = math.exp(a)
    cap = abs_x / (delta_max - 1)
    if t >= cap:
        warnings.warn(
            "x-window empty at this a (|x| <= (degree-1)e^a); budget clamped to 0",
            RuntimeWarning,
            stacklevel=2,
        )
        return 0.0
    val = z_budget(delta_max, abs_x, abs_y, t)
    if val <= 0.0:
        warnings.warn(
            "non-positive cycle budget at this a; clamped to 0",
            RuntimeWarning,
            stacklevel=2,
        )
        return 0.0
    return val


def resolve_a(delta_max: int, abs_x: float, abs_y: float, abs_z: float = 0.0) -> float:
    """Auxiliary parameter whose budget strictly exceeds |z|.

    Because the budget is strictly concave in t with its maximizer interior
    whenever any admissible t exists, the optimal parameter decides the
    question outright.
    """
    opt = optimal_a(delta_max, abs_x, abs_y)
    if not opt.admissible:
        if abs_x <= delta_max - 1:
            raise PointOutsideRegionError(
                "|x| <= degree bound - 1: the x-condition fails for every a > 0",
                reason="x-condition",
            )
        raise PointOutsideRegionError(
            "no auxiliary parameter admits this |y|", reason="main-inequality"
        )
    if not z_budget(delta_max, abs_x, abs_y, opt.t) > abs_z:
        raise PointOutsideRegionError(
            "cycle activity exceeds the certified budget at every a",
            reason="main-inequality",
        )
    return opt.a
