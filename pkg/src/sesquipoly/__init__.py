"""Exact and certified-approximate evaluation of the sesquivalent graph
polynomial: enumeration, classical specializations, zero-free-region
certificates, and a deterministic interpolation-based approximation with a
proven multiplicative error bound on bounded-degree graphs."""

from .errors import (
    DivergentBoundError,
    GraphParseError,
    PointOutsideRegionError,
    SizeLimitError,
    TruncationCapError,
    UnsupportedDegreeError,
)
from .exact import (
    SesquivalentPolynomial,
    SesquivalentSubgraph,
    char_poly_det_oracle,
    char_poly_sachs,
    derivative_identity_residual,
    enumerate_sesquivalent,
    matching_counts,
    matching_poly,
    matching_poly_direct,
    phi_eval,
    phi_polynomial,
)
from .graph import (
    Graph,
    cycles_through_vertex,
    disjoint_union,
    enumerate_cycles,
    induced_subgraph,
    load_graph,
    parse_edge_list,
    parse_graph_json,
    vertex_deleted,
)
from .interpolate import (
    ApproxResult,
    InterpolationPlan,
    TruncatedLogSeries,
    approximate_phi,
    interpolation_value,
    lambda_weight,
    make_plan,
    series_coefficients,
    series_log,
)
from .region import (
    OptimalA,
    RegionCertificate,
    RegionParams,
    certify_region,
    fp_sum_bound,
    fp_sum_exact,
    optimal_a,
    resolve_a,
    z_budget,
    z_max,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxResult",
    "DivergentBoundError",
    "Graph",
    "GraphParseError",
    "InterpolationPlan",
    "OptimalA",
    "PointOutsideRegionError",
    "RegionCertificate",
    "RegionParams",
    "SesquivalentPolynomial",
    "SesquivalentSubgraph",
    "SizeLimitError",
    "TruncatedLogSeries",
    "TruncationCapError",
    "UnsupportedDegreeError",
    "approximate_phi",
    "certify_region",
    "char_poly_det_oracle",
    "char_poly_sachs",
    "cycles_through_vertex",
    "derivative_identity_residual",
    "disjoint_union",
    "enumerate_cycles",
    "enumerate_sesquivalent",
    "fp_sum_bound",
    "fp_sum_exact",
    "induced_subgraph",
    "interpolation_value",
    "lambda_weight",
    "load_graph",
    "make_plan",
    "matching_counts",
    "matching_poly",
    "matching_poly_direct",
    "optimal_a",
    "parse_edge_list",
    "parse_graph_json",
    "phi_eval",
    "phi_polynomial",
    "resolve_a",
    "series_coefficients",
    "series_log",
    "vertex_deleted",
    "z_budget",
    "z_max",
]
