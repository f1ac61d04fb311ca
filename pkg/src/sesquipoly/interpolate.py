"""Certified Taylor-interpolation pipeline.

The canonical interpolation F(t) = t^n phi(x/t, y, z) has F(0) = x^n and
F(1) = phi(x, y, z). For points strictly inside the certified region, F is
zero-free on the disk |t| <= rho with rho = |x| / (c (1 + |z|/delta)) > 1,
so log F is analytic there; truncating its Taylor series after m terms
approximates log F(1) within n / ((m+1)(rho-1) rho^m). The coefficients of
the normalized series are exact weighted sums over induced vertex subsets,
computed without ever enumerating the whole subgraph family.
"""

from __future__ import annotations

import cmath
import math
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Tuple

from .errors import PointOutsideRegionError, TruncationCapError
from .exact import DEFAULT_ENUM_LIMIT, phi_eval
from .graph import Graph, _rooted_cycles
from .region import RegionParams, resolve_a

DEFAULT_M_CAP = 12


@dataclass(frozen=True)
class InterpolationPlan:
    """Analytic state of one approximation run."""

    x: complex
    y: complex
    z: complex
    n: int
    delta_max: int
    a: float
    c: float
    budget: float
    delta_slack: float
    rho: float
    m: int
    epsilon: float

    def to_json_dict(self) -> dict:
        return {
            "x": [self.x.real, self.x.imag],
            "y": [self.y.real, self.y.imag],
            "z": [self.z.real, self.z.imag],
            "n": self.n,
            "delta": self.delta_max,
            "a": self.a,
            "c": self.c,
            "budget": self.budget,
            "delta_slack": self.delta_slack,
            "rho": self.rho,
            "m": self.m,
            "epsilon": self.epsilon,
        }


@dataclass(frozen=True)
class TruncatedLogSeries:
    """Coefficients b_0..b_m of log F at t = 0 plus the certified tail."""

    b: Tuple[complex, ...]
    tail_bound: float

    def power_sums(self) -> Tuple[complex, ...]:
        """Inverse power sums p_j = -j b_j of the zeros, j = 1..m."""
        return tuple(-j * bj for j, bj in enumerate(self.b))[1:]


@dataclass(frozen=True)
class ApproxResult:
    phi_hat: complex
    plan: InterpolationPlan
    series: TruncatedLogSeries


def make_plan(
    graph: Graph,
    x,
    y,
    z,
    epsilon: float,
    a: Optional[float] = None,
    delta_max: Optional[int] = None,
    m_cap: int = DEFAULT_M_CAP,
) -> InterpolationPlan:
    """Build the interpolation plan for a strictly interior point.

    With a omitted, the budget-maximizing auxiliary parameter is used.
    The analytic degree bound defaults to the graph's max degree (lifted
    to 2, the smallest degree the region theory covers).
    """
    if not 0.0 < epsilon < 1.0:
        raise ValueError("epsilon must lie in (0, 1)")
    if m_cap < 0:
        raise ValueError("m_cap must be non-negative")
    true_deg = graph.max_degree()
    if delta_max is None:
        delta_max = max(2, true_deg)
    elif delta_max < true_deg:
        raise ValueError(
            f"analytic degree bound {delta_max} is below the graph's "
            f"max degree {true_deg}"
        )
    if a is None:
        a = resolve_a(delta_max, abs(x), abs(y), abs(z))
    params = RegionParams.derive(delta_max, a)
    ax, ay, az = abs(x), abs(y), abs(z)
    if ax <= params.c:
        raise PointOutsideRegionError(
            f"|x|={ax:g} <= c={params.c:g}; outside the x-window",
            reason="x-condition",
        )
    lhs = ay + (params.c / (ax - params.c)) * az
    if not lhs < params.budget:
        raise PointOutsideRegionError(
            "point not strictly inside the certified region",
            reason="main-inequality",
        )
    slack = params.budget - ay
    rho = ax / (params.c * (1.0 + az / slack))
    n = graph.n
    if n == 0:
        m = 0
    else:
        m = max(0, math.ceil(math.log(n / ((rho - 1.0) * epsilon)) / math.log(rho)))
    if m > m_cap:
        raise TruncationCapError(m, m_cap)
    return InterpolationPlan(
        complex(x), complex(y), complex(z), n, delta_max, a,
        params.c, params.budget, slack, rho, m, epsilon,
    )


def interpolation_value(graph: Graph, plan: InterpolationPlan, t, limit: int = DEFAULT_ENUM_LIMIT) -> complex:
    """Reference evaluation of F(t) = t^n phi(x/t, y, z); F(0) = x^n."""
    t = complex(t)
    if t == 0:
        return plan.x**graph.n
    return t**graph.n * phi_eval(graph, plan.x / t, plan.y, plan.z, limit=limit)


@lru_cache(maxsize=None)
def _cover_items(graph: Graph, mask: int) -> tuple:
    """Ways to cover exactly `mask` by vertex-disjoint edges and cycles,
    tallied by (edge components, cycle components). Exact integers."""
    if mask == 0:
        return (((0, 0), 1),)
    acc: dict[tuple[int, int], int] = defaultdict(int)
    adjacency = graph.adjacency
    v = (mask & -mask).bit_length() - 1
    rest = mask ^ (1 << v)
    for u in adjacency[v]:
        ubit = 1 << u
        if rest & ubit:
            for (e, c), ways in _cover_items(graph, rest ^ ubit):
                acc[(e + 1, c)] += ways
    for cyc in _rooted_cycles(adjacency, v, rest, graph.n):
        cmask = 0
        for w in cyc:
            cmask |= 1 << w
        for (e, c), ways in _cover_items(graph, mask ^ cmask):
            acc[(e, c + 1)] += ways
    return tuple(sorted(acc.items()))


def lambda_weight(graph_j: Graph, x, y, z) -> complex:
    """Induced-subgraph weight: x^{-k} times the (y, z)-generating sum over
    spanning edge/cycle covers of the k-vertex graph with no isolated
    vertex. Zero whenever some vertex cannot be covered."""
    if x == 0:
        raise ValueError("x must be nonzero")
    k = graph_j.n
    acc = 0j
    y, z = complex(y), complex(z)
    for (e, c), ways in _cover_items(graph_j, (1 << k) - 1):
        acc += ways * y**e * z**c
    return acc / complex(x) ** k


def _colex_subsets(n: int, k: int):
    """Size-k subsets of range(n) in colexicographic order."""
    if k == 0:
        yield ()
        return
    for top in range(k - 1, n):
        for rest in _colex_subsets(top, k - 1):
            yield rest + (top,)


@lru_cache(maxsize=None)
def _subset_cover_totals(graph: Graph, k: int) -> tuple:
    """Aggregated cover tallies over all k-subsets of the vertex set.

    Subsets containing a vertex with no neighbor inside are pruned; their
    weight is identically zero.
    """
    masks = graph.neighbor_masks
    acc: dict[tuple[int, int], int] = defaultdict(int)
    for combo in _colex_subsets(graph.n, k):
        cmask = 0
        for v in combo:
            cmask |= 1 << v
        if any(not (masks[v] & cmask) for v in combo):
            continue
        for (e, c), ways in _cover_items(graph, cmask):
            acc[(e, c)] += ways
    return tuple(sorted(acc.items()))


def series_coefficients(graph: Graph, plan: InterpolationPlan) -> list[complex]:
    """Taylor coefficients a_0..a_m of the normalized interpolation
    polynomial, via weighted sums over induced vertex subsets.

    Never touches the global subgraph enumeration: for each subset size k
    the exact integer tallies are aggregated once per graph, then evaluated
    at the plan's point in a fixed order.
    """
    x, y, z = plan.x, plan.y, plan.z
    out = [1 + 0j]
    for k in range(1, plan.m + 1):
        acc = 0j
        for (e, c), ways in _subset_cover_totals(graph, k):
            acc += ways * y**e * z**c
        out.append(acc / x**k)
    return out


def series_log(coeffs: Sequence[complex]) -> list[complex]:
    """Formal power-series logarithm of a series with constant term 1.

    Uses the recurrence k b_k = k a_k - sum_{j=1}^{k-1} j b_j a_{k-j};
    equivalently b_j = -p_j / j for the inverse power sums of the zeros.
    """
    coeffs = [complex(v) for v in coeffs]
    if not coeffs or coeffs[0] != 1:
        raise ValueError("series must be normalized with constant term 1")
    m = len(coeffs) - 1
    b = [0j] * (m + 1)
    for k in range(1, m + 1):
        s = k * coeffs[k]
        for j in range(1, k):
            s -= j * b[j] * coeffs[k - j]
        b[k] = s / k
    return b[1:]


def approximate_phi(
    graph: Graph,
    x,
    y,
    z,
    epsilon: float,
    a: Optional[float] = None,
    delta_max: Optional[int] = None,
    m_cap: int = DEFAULT_M_CAP,
) -> ApproxResult:
    """Certified multiplicative approximation of the polynomial.

    For points strictly inside the certified region the output satisfies
    phi_hat = phi(x, y, z) e^eta with |eta| <= epsilon. The log branch is
    fixed by b_0 = n Log x (principal); all error statements are about the
    branch-free ratio phi_hat / phi.
    """
    plan = make_plan(
        graph, x, y, z, epsilon, a=a, delta_max=delta_max, m_cap=m_cap
    )
    coeffs = series_coefficients(graph, plan)
    b_rest = series_log(coeffs)
    b0 = graph.n * cmath.log(plan.x)
    b = (b0, *b_rest)
    total = 0j
    for val in b:
        total += val
    phi_hat = cmath.exp(total)
    if graph.n:
        tail = graph.n / ((plan.m + 1) * (plan.rho - 1.0) * plan.rho**plan.m)
    else:
        tail = 0.0
    return ApproxResult(phi_hat, plan, TruncatedLogSeries(b, tail))
