"""Corpus validation suites.

Each suite checks one family of identities or guarantees over a graph
corpus and returns SuiteResult objects; the CLI `validate` command prints
one line per suite and the acceptance tests run the same functions at
their full scale. All sampling is seeded and reproducible.
"""

from __future__ import annotations

import cmath
import math
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from .corpus import approximation_corpus, standard_corpus
from .exact import (
    char_poly_det_oracle,
    char_poly_sachs,
    derivative_identity_residual,
    matching_poly,
    matching_poly_direct,
    phi_polynomial,
)
from .graph import Graph, enumerate_cycles
from .interpolate import approximate_phi, make_plan, series_coefficients
from .region import optimal_a, z_budget, z_max

DEFAULT_SEED = 2025
MAX_MESSAGES = 12


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    messages: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def check(self, condition: bool, message: str = "") -> bool:
        if condition:
            self.passed += 1
        else:
            self.failed += 1
            if message and len(self.messages) < MAX_MESSAGES:
                self.messages.append(message)
        return condition

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f", {self.failed} failures" if self.failed else ""
        return f"{self.name}: {status} ({self.passed} checks{extra})"


def _interior_samples(
    delta_max,
    rng,
    count,
    rho_min=1.05,
    rho_max=8.0,
    a_low=0.2,
    a_high=1.5,
    y_frac=0.9,
    z_ratio_max=3.0,
):
    """Sample complex (x, y, z) and a strictly inside the certified region.

    |y| stays below the budget by construction and |x| exceeds
    c (1 + |z|/slack) by the sampled factor rho, which doubles as the
    zero-free disk radius of the induced interpolation plan.
    """
    a = rng.uniform(a_low, a_high, count)
    alpha = (delta_max - 1) ** 2 / delta_max
    c = (delta_max - 1) * np.exp(a)
    budget = alpha * np.expm1(a)
    ay = rng.uniform(0.0, y_frac, count) * budget
    ratio = rng.uniform(0.0, z_ratio_max, count)
    az = ratio * (budget - ay)
    ax = rng.uniform(rho_min, rho_max, count) * c * (1.0 + ratio)
    x = ax * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, count))
    y = ay * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, count))
    z = az * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, count))
    return x, y, z, a


def _cycle_length_counts(graph: Graph) -> np.ndarray:
    """counts[v, k] = number of k-cycles through vertex v."""
    counts = np.zeros((graph.n, graph.n + 1), dtype=float)
    for cyc in enumerate_cycles(graph, graph.n):
        k = len(cyc)
        for v in cyc:
            counts[v, k] += 1.0
    return counts


def char_specialization_suite(corpus=None) -> SuiteResult:
    """(y, z) = (-1, -2) equals det(xI - A), integer-exact."""
    if corpus is None:
        corpus = standard_corpus(12)
    result = SuiteResult("char-specialization")
    for name, graph in corpus:
        same = char_poly_sachs(graph) == char_poly_det_oracle(graph)
        result.check(same, f"{name}: characteristic coefficients differ")
    return result


def matching_specialization_suite(
    corpus=None, imag_tol=1e-7, bound_tol=1e-9
) -> SuiteResult:
    """(y, z) = (-1, 0) equals the directly enumerated matching polynomial;
    roots are real and within the classical degree-based band."""
    if corpus is None:
        corpus = standard_corpus(12)
    result = SuiteResult("matching-specialization")
    for name, graph in corpus:
        coeffs = matching_poly(graph)
        result.check(
            coeffs == matching_poly_direct(graph),
            f"{name}: matching coefficients differ",
        )
        if graph.edge_count == 0:
            continue
        roots = np.roots(np.array(coeffs, dtype=float))
        result.check(
            bool(np.all(np.abs(roots.imag) < imag_tol)),
            f"{name}: matching roots not real",
        )
        dmax = graph.max_degree()
        if dmax >= 2:
            band = 2.0 * math.sqrt(dmax - 1) + bound_tol
            result.check(
                bool(np.all(np.abs(roots.real) <= band)),
                f"{name}: matching root outside the degree band",
            )
    return result


def derivative_suite(corpus=None, max_n=8) -> SuiteResult:
    """d(phi)/dx equals the sum of vertex-deleted polynomials, exactly."""
    if corpus is None:
        corpus = standard_corpus(max_n)
    result = SuiteResult("derivative-identity")
    for name, graph in corpus:
        if graph.n > max_n:
            continue
        residual = derivative_identity_residual(graph)
        result.check(not residual, f"{name}: nonzero residual {residual}")
    return result


def region_suite(
    corpus=None,
    samples=1000,
    seed=DEFAULT_SEED,
    max_n=12,
    ratio_floor=1e-10,
    chain_rtol=1e-12,
) -> list[SuiteResult]:
    """Empirical zero-freeness at interior samples, plus the anchored-sum
    chain: exact sum <= closed-form bound <= e^a - 1."""
    if corpus is None:
        corpus = standard_corpus(max_n)
    zero_free = SuiteResult("zero-freeness")
    chain = SuiteResult("fp-chain")
    for idx, (name, graph) in enumerate(corpus):
        n = graph.n
        dmax = graph.max_degree()
        if n == 0 or n > max_n or dmax < 2:
            continue
        rng = np.random.default_rng(seed + 977 * idx)
        x, y, z, a = _interior_samples(dmax, rng, samples)
        ax, ay, az = np.abs(x), np.abs(y), np.abs(z)
        c = (dmax - 1) * np.exp(a)
        budget = ((dmax - 1) ** 2 / dmax) * np.expm1(a)
        inside = (ax > c) & (ay + (c / (ax - c)) * az <= budget)
        zero_free.check(bool(inside.all()), f"{name}: sampler left the region")

        poly = phi_polynomial(graph)
        vals = poly.eval_many(x, y, z)
        ratios = np.abs(vals) / ax**n
        zero_free.check(
            bool((ratios > ratio_floor).all()),
            f"{name}: |phi|/|x|^n dipped to {ratios.min():.3e}",
        )

        counts = _cycle_length_counts(graph)
        degs = np.array([graph.degree(v) for v in range(n)], dtype=float)
        edge_part = (ay / ax**2) * np.exp(2.0 * a)
        ks = np.nonzero(counts.any(axis=0))[0]
        if len(ks):
            powers = (np.exp(a) / ax)[None, :] ** ks[:, None]
            cyc_part = counts[:, ks] @ powers
        else:
            cyc_part = np.zeros((n, len(a)))
        exact = degs[:, None] * edge_part[None, :] + az[None, :] * cyc_part
        bound = dmax * np.exp(2.0 * a) / ax**2 * (ay + az * c / (ax - c))
        chain.check(
            bool((exact <= bound[None, :] * (1.0 + chain_rtol)).all()),
            f"{name}: exact anchored sum exceeded the bound",
        )
        chain.check(
            bool((bound <= np.expm1(a) * (1.0 + chain_rtol)).all()),
            f"{name}: bound exceeded e^a - 1 inside the region",
        )
    return [zero_free, chain]


def optimality_suite(configs=50, grid=1000, seed=DEFAULT_SEED, rtol=1e-12) -> SuiteResult:
    """The closed-form optimizer beats a fine grid, the budget is strictly
    concave, and the worked value at degree 3, |x| = 20, |y| = 1 matches."""
    result = SuiteResult("optimal-a")
    rng = np.random.default_rng(seed)
    for _ in range(configs):
        dmax = int(rng.integers(2, 7))
        ay = float(rng.uniform(0.0, 4.0))
        alpha = (dmax - 1) ** 2 / dmax
        lo = 1.0 + ay / alpha
        cap = lo * float(rng.uniform(1.3, 60.0))
        ax = cap * (dmax - 1)
        opt = optimal_a(dmax, ax, ay)
        result.check(opt.admissible, f"optimizer inadmissible at D={dmax}")
        gstar = z_budget(dmax, ax, ay, opt.t)
        ts = lo + (cap - lo) * (np.arange(grid) + 0.5) / grid
        gv = (cap / ts - 1.0) * (alpha * (ts - 1.0) - ay)
        result.check(
            bool((gv <= gstar * (1.0 + rtol)).all()),
            f"grid beat the optimizer at D={dmax}, |x|={ax:g}, |y|={ay:g}",
        )
        q1, q3 = lo + (cap - lo) * 0.25, lo + (cap - lo) * 0.75
        mid = 0.5 * (q1 + q3)
        gmid = z_budget(dmax, ax, ay, mid)
        result.check(
            gmid > 0.5 * (z_budget(dmax, ax, ay, q1) + z_budget(dmax, ax, ay, q3)),
            f"concavity violated at D={dmax}",
        )
    worked = z_max(3, 20.0, 1.0)
    result.check(
        abs(worked - 4.5111) <= 1e-3,
        f"worked optimum {worked:.6f} is not 4.5111 within 1e-3",
    )
    return result


def asymptotics_suite() -> SuiteResult:
    """The optimal cycle budget grows linearly in |x| with slope
    (D-1)/D after removing the sqrt correction."""
    result = SuiteResult("linear-z")
    xs = np.array([1e2, 1e3, 1e4, 1e5])
    zs = np.array([z_max(3, float(v), 1.0) for v in xs])
    design = np.stack([xs, np.sqrt(xs), np.ones_like(xs)], axis=1)
    coef, *_ = np.linalg.lstsq(design, zs, rcond=None)
    slope = float(coef[0])
    result.check(
        abs(slope - 2.0 / 3.0) <= 0.01 * (2.0 / 3.0),
        f"fitted slope {slope:.6f} is not within 1% of 2/3",
    )
    ratio = float(zs[-1] / xs[-1])
    result.check(
        abs(ratio - 2.0 / 3.0) <= 0.01,
        f"raw ratio {ratio:.6f} at |x|=1e5 strays beyond 0.01 of 2/3",
    )
    return result


def approximation_suite(
    corpus=None,
    points=10,
    epsilons=(0.1, 0.01),
    seed=DEFAULT_SEED,
    tail_atol=1e-9,
) -> list[SuiteResult]:
    """The certified approximation against the exact enumeration oracle,
    and the truncation tail bound it relies on."""
    if corpus is None:
        corpus = approximation_corpus()
    guarantee = SuiteResult("approx-guarantee")
    tail = SuiteResult("tail-bound")
    for idx, (name, graph) in enumerate(corpus):
        dmax = max(2, graph.max_degree())
        rng = np.random.default_rng(seed + 1303 * idx)
        x, y, z, a = _interior_samples(
            dmax, rng, points, rho_min=2.0, rho_max=6.0, z_ratio_max=1.5
        )
        poly = phi_polynomial(graph)
        for i in range(points):
            xi, yi, zi = complex(x[i]), complex(y[i]), complex(z[i])
            phi_exact = poly.evaluate(xi, yi, zi)
            for eps in epsilons:
                res = approximate_phi(
                    graph, xi, yi, zi, eps, a=float(a[i]), delta_max=dmax
                )
                eta = abs(cmath.log(res.phi_hat / phi_exact))
                guarantee.check(
                    eta <= eps,
                    f"{name}: |eta|={eta:.3e} exceeds eps={eps}",
                )
                tail.check(
                    eta <= res.series.tail_bound + tail_atol,
                    f"{name}: |eta|={eta:.3e} above tail bound "
                    f"{res.series.tail_bound:.3e}",
                )
    return [guarantee, tail]


def coefficient_suite(
    corpus=None,
    points=20,
    seed=DEFAULT_SEED,
    max_n=12,
    epsilon=0.01,
    rtol=1e-10,
) -> SuiteResult:
    """Series coefficients from induced-subgraph sums against the exact
    polynomial regrouped by non-isolated support size."""
    if corpus is None:
        corpus = standard_corpus(max_n)
    result = SuiteResult("coefficients")
    for idx, (name, graph) in enumerate(corpus):
        n = graph.n
        if n == 0 or n > max_n:
            continue
        dmax = max(2, graph.max_degree())
        poly = phi_polynomial(graph)
        groups: dict[int, list] = defaultdict(list)
        for (v, e, c), coef in sorted(poly.coeffs.items()):
            groups[n - v].append(((e, c), coef))
        for group in groups.values():
            group.sort()
        rng = np.random.default_rng(seed + 557 * idx)
        x, y, z, a = _interior_samples(dmax, rng, points, rho_min=2.0, rho_max=6.0)
        for i in range(points):
            xi, yi, zi = complex(x[i]), complex(y[i]), complex(z[i])
            plan = make_plan(graph, xi, yi, zi, epsilon, a=float(a[i]), delta_max=dmax)
            coeffs = series_coefficients(graph, plan)
            ok = True
            for k in range(plan.m + 1):
                acc = 0j
                for (e, c), coef in groups.get(k, ()):
                    acc += coef * yi**e * zi**c
                oracle = acc / xi**k
                if abs(coeffs[k] - oracle) > rtol * max(1.0, abs(oracle)):
                    ok = False
                    break
            result.check(ok, f"{name}: coefficient mismatch at point {i}")
    return result


def run_suites(
    names=("all",),
    seed=DEFAULT_SEED,
    samples=200,
    points=6,
    configs=50,
    grid=1000,
    max_n=12,
    extra_graphs=(),
) -> list[SuiteResult]:
    """Run the selected suites at the given scale.

    `extra_graphs` are (name, Graph) pairs appended to the small-graph
    corpora wherever they fit the suite's size bounds.
    """
    selected = set()
    for raw in names:
        name = raw.removesuffix("-only")
        if name == "all":
            selected.update(
                {"specialization", "derivative", "region", "optimality", "approx"}
            )
        else:
            selected.add(name)
    unknown = selected - {
        "specialization", "derivative", "region", "optimality", "approx"
    }
    if unknown:
        raise ValueError(f"unknown suites: {sorted(unknown)}")

    base = standard_corpus(max_n)
    corpus = base + [
        (nm, g) for nm, g in extra_graphs if 0 < g.n <= max_n
    ]
    results: list[SuiteResult] = []
    if "specialization" in selected:
        results.append(char_specialization_suite(corpus))
        results.append(matching_specialization_suite(corpus))
    if "derivative" in selected:
        small = [(nm, g) for nm, g in corpus if g.n <= 8]
        results.append(derivative_suite(small, max_n=8))
    if "region" in selected:
        results.extend(
            region_suite(corpus, samples=samples, seed=seed, max_n=max_n)
        )
    if "optimality" in selected:
        results.append(optimality_suite(configs=configs, grid=grid, seed=seed))
        results.append(asymptotics_suite())
    if "approx" in selected:
        results.extend(approximation_suite(points=points, seed=seed))
        results.append(
            coefficient_suite(corpus, points=points, seed=seed, max_n=max_n)
        )
    return results
