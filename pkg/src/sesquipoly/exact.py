"""Exact engine for the sesquivalent polynomial.

A sesquivalent subgraph is a spanning subgraph whose connected components
are isolated vertices, single edges, or simple cycles. The generating
polynomial weights each subgraph by x^(isolated) y^(edge components)
z^(cycle components); its coefficients are exact integers. Substituting
(y, z) = (-1, -2) gives the characteristic polynomial of the adjacency
matrix, and (y, z) = (-1, 0) the matching polynomial; both substitutions
are backed here by independent oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Tuple

import numpy as np

from .errors import SizeLimitError
from .graph import Graph, _rooted_cycles, vertex_deleted

DEFAULT_ENUM_LIMIT = 16


@dataclass(frozen=True)
class SesquivalentSubgraph:
    """One spanning subgraph: explicit edge and cycle components.

    Isolated vertices are implied (every vertex not covered by a component).
    """

    n: int
    edge_components: Tuple[Tuple[int, int], ...]
    cycle_components: Tuple[Tuple[int, ...], ...]

    def covered_vertices(self):
        out = set()
        for u, v in self.edge_components:
            out.add(u)
            out.add(v)
        for cyc in self.cycle_components:
            out.update(cyc)
        return out

    def isolated_vertices(self):
        covered = self.covered_vertices()
        return tuple(v for v in range(self.n) if v not in covered)

    def exponents(self) -> Tuple[int, int, int]:
        """(isolated count, edge-component count, cycle-component count)."""
        e = len(self.edge_components)
        c = len(self.cycle_components)
        v = self.n - 2 * e - sum(len(cyc) for cyc in self.cycle_components)
        return v, e, c


def _structures(adjacency, mask, allow_isolated, max_len):
    """Yield (edges, cycles) component tuples covering `mask`.

    Branches on the smallest uncovered vertex: leave it isolated (when
    allowed), match it to a larger uncovered neighbor, or make it the
    minimum vertex of a canonical cycle. Each structure appears exactly
    once, in a deterministic order.
    """
    if mask == 0:
        yield (), ()
        return
    v = (mask & -mask).bit_length() - 1
    rest = mask ^ (1 << v)
    if allow_isolated:
        yield from _structures(adjacency, rest, allow_isolated, max_len)
    for u in adjacency[v]:
        ubit = 1 << u
        if rest & ubit:
            for es, cs in _structures(adjacency, rest ^ ubit, allow_isolated, max_len):
                yield ((v, u),) + es, cs
    for cyc in _rooted_cycles(adjacency, v, rest, max_len):
        cmask = 0
        for w in cyc:
            cmask |= 1 << w
        for es, cs in _structures(adjacency, mask ^ cmask, allow_isolated, max_len):
            yield es, (cyc,) + cs


def enumerate_sesquivalent(
    graph: Graph, limit: int = DEFAULT_ENUM_LIMIT
) -> Iterator[SesquivalentSubgraph]:
    """Stream every sesquivalent spanning subgraph exactly once."""
    if graph.n > limit:
        raise SizeLimitError(graph.n, limit)
    full = (1 << graph.n) - 1
    for es, cs in _structures(graph.adjacency, full, True, graph.n):
        yield SesquivalentSubgraph(graph.n, es, cs)


class SesquivalentPolynomial:
    """Sparse exact trivariate polynomial: (x, y, z) exponents -> count.

    Coefficients are arbitrary-precision integers. Evaluation sums
    monomials in ascending lexicographic exponent order so floating-point
    results are reproducible; serialization lists terms in descending
    order (leading x^n term first).
    """

    def __init__(self, n: int, coeffs):
        self.n = n
        self.coeffs = {tuple(k): int(v) for k, v in dict(coeffs).items() if v}

    __hash__ = None

    def terms(self):
        """Term list ((v, e, c), coefficient) in descending lex order."""
        return sorted(self.coeffs.items(), reverse=True)

    def evaluate(self, x, y, z) -> complex:
        x, y, z = complex(x), complex(y), complex(z)
        keys = sorted(self.coeffs)
        xp = _pow_table(x, max((k[0] for k in keys), default=0))
        yp = _pow_table(y, max((k[1] for k in keys), default=0))
        zp = _pow_table(z, max((k[2] for k in keys), default=0))
        total = 0j
        for key in keys:
            v, e, c = key
            total += self.coeffs[key] * xp[v] * yp[e] * zp[c]
        return total

    def eval_many(self, xs, ys, zs) -> np.ndarray:
        """Vectorized evaluate over aligned point arrays (same term order)."""
        xs = np.asarray(xs, dtype=complex)
        ys = np.asarray(ys, dtype=complex)
        zs = np.asarray(zs, dtype=complex)
        keys = sorted(self.coeffs)
        xp = _pow_columns(xs, max((k[0] for k in keys), default=0))
        yp = _pow_columns(ys, max((k[1] for k in keys), default=0))
        zp = _pow_columns(zs, max((k[2] for k in keys), default=0))
        total = np.zeros(np.broadcast(xs, ys, zs).shape, dtype=complex)
        for key in keys:
            v, e, c = key
            total = total + self.coeffs[key] * xp[v] * yp[e] * zp[c]
        return total

    def derivative_x(self) -> dict:
        """Exponent map of the x-derivative."""
        return {
            (v - 1, e, c): coef * v
            for (v, e, c), coef in self.coeffs.items()
            if v
        }

    def specialize_yz(self, y: int, z: int) -> list[int]:
        """Integer coefficients of the univariate polynomial in x at fixed
        integer (y, z), listed from x^n down to the constant term."""
        out = [0] * (self.n + 1)
        for (v, e, c), coef in sorted(self.coeffs.items()):
            out[self.n - v] += coef * (y**e) * (z**c)
        return out

    def subgraph_count(self) -> int:
        """Total number of sesquivalent subgraphs (value at (1, 1, 1))."""
        return sum(self.coeffs.values())

    def __mul__(self, other):
        if not isinstance(other, SesquivalentPolynomial):
            return NotImplemented
        acc = {}
        for (v1, e1, c1), a in self.coeffs.items():
            for (v2, e2, c2), b in other.coeffs.items():
                key = (v1 + v2, e1 + e2, c1 + c2)
                acc[key] = acc.get(key, 0) + a * b
        return SesquivalentPolynomial(self.n + other.n, acc)

    def __eq__(self, other):
        if not isinstance(other, SesquivalentPolynomial):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __repr__(self):
        return f"SesquivalentPolynomial(n={self.n}, terms={len(self.coeffs)})"

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"v": v, "e": e, "c": c, "coef": str(coef)}
                for (v, e, c), coef in self.terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data) -> "SesquivalentPolynomial":
        coeffs = {
            (t["v"], t["e"], t["c"]): int(t["coef"]) for t in data["terms"]
        }
        return cls(data["n"], coeffs)


def _pow_table(base: complex, top: int) -> list[complex]:
    out = [1 + 0j]
    for _ in range(top):
        out.append(out[-1] * base)
    return out


def _pow_columns(arr: np.ndarray, top: int) -> list[np.ndarray]:
    out = [np.ones_like(arr)]
    for _ in range(top):
        out.append(out[-1] * arr)
    return out


@lru_cache(maxsize=None)
def _phi_cached(graph: Graph) -> SesquivalentPolynomial:
    full = (1 << graph.n) - 1
    counts: dict[tuple[int, int, int], int] = {}
    for es, cs in _structures(graph.adjacency, full, True, graph.n):
        e = len(es)
        c = len(cs)
        v = graph.n - 2 * e - sum(len(cyc) for cyc in cs)
        key = (v, e, c)
        counts[key] = counts.get(key, 0) + 1
    return SesquivalentPolynomial(graph.n, counts)


def phi_polynomial(graph: Graph, limit: int = DEFAULT_ENUM_LIMIT) -> SesquivalentPolynomial:
    """The exact sesquivalent polynomial of the graph."""
    if graph.n > limit:
        raise SizeLimitError(graph.n, limit)
    return _phi_cached(graph)


def phi_eval(graph: Graph, x, y, z, limit: int = DEFAULT_ENUM_LIMIT) -> complex:
    """Evaluate the polynomial at a complex point (fixed summation order)."""
    return phi_polynomial(graph, limit).evaluate(x, y, z)


def char_poly_sachs(graph: Graph, limit: int = DEFAULT_ENUM_LIMIT) -> list[int]:
    """Characteristic polynomial via the substitution (y, z) = (-1, -2)."""
    return phi_polynomial(graph, limit).specialize_yz(-1, -2)


def char_poly_det_oracle(graph: Graph) -> list[int]:
    """Characteristic polynomial of the adjacency matrix, det(x I - A).

    Faddeev-LeVerrier over exact integers; never touches the subgraph
    enumeration, so it is an independent oracle for char_poly_sachs.
    Coefficients listed from x^n down to the constant term.
    """
    n = graph.n
    a = [[0] * n for _ in range(n)]
    for u, v in graph.edges:
        a[u][v] = 1
        a[v][u] = 1
    coeffs = [1]
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        am = _int_matmul(a, m)
        for i in range(n):
            am[i][i] += coeffs[-1]
        m = am
        trace = sum(
            sum(a[i][j] * m[j][i] for j in range(n)) for i in range(n)
        )
        q, r = divmod(-trace, k)
        if r:
            raise ArithmeticError("non-integer trace division; adjacency corrupt")
        coeffs.append(q)
    return coeffs


def _int_matmul(a, b):
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(n):
            aik = ai[k]
            if aik:
                bk = b[k]
                for j in range(n):
                    oi[j] += aik * bk[j]
    return out


def matching_poly(graph: Graph, limit: int = DEFAULT_ENUM_LIMIT) -> list[int]:
    """Matching polynomial via the substitution (y, z) = (-1, 0)."""
    return phi_polynomial(graph, limit).specialize_yz(-1, 0)


def matching_counts(graph: Graph) -> list[int]:
    """Number of k-edge matchings for k = 0..floor(n/2).

    Independent of the sesquivalent enumeration: dynamic programming on
    vertex bitmasks (smallest free vertex left unmatched or matched).
    """
    masks = graph.neighbor_masks

    @lru_cache(maxsize=None)
    def rec(mask):
        if mask == 0:
            return (1,)
        v = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << v)
        counts = list(rec(rest))
        avail = masks[v] & rest
        while avail:
            ubit = avail & -avail
            avail ^= ubit
            sub = rec(rest ^ ubit)
            if len(counts) < len(sub) + 1:
                counts.extend([0] * (len(sub) + 1 - len(counts)))
            for i, w in enumerate(sub):
                counts[i + 1] += w
        return tuple(counts)

    out = list(rec((1 << graph.n) - 1))
    rec.cache_clear()
    return out


def matching_poly_direct(graph: Graph) -> list[int]:
    """Matching polynomial assembled from matching_counts (oracle route)."""
    n = graph.n
    out = [0] * (n + 1)
    for k, mk in enumerate(matching_counts(graph)):
        out[2 * k] = (-1) ** k * mk
    return out


def derivative_identity_residual(graph: Graph, limit: int = DEFAULT_ENUM_LIMIT) -> dict:
    """Exponent map of d(phi)/dx minus the sum of vertex-deleted phis.

    The contract is that this is identically zero; any surviving term is
    returned so tests can show exactly where the identity broke.
    """
    residual = dict(phi_polynomial(graph, limit).derivative_x())
    for v in range(graph.n):
        deleted = phi_polynomial(vertex_deleted(graph, v), limit)
        for key, coef in deleted.coeffs.items():
            residual[key] = residual.get(key, 0) - coef
    return {k: c for k, c in residual.items() if c}
