"""Named graph families and small-graph corpora for the validation suites."""

from __future__ import annotations

import random
from functools import lru_cache

from .graph import Graph


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite_graph(p: int, q: int) -> Graph:
    return Graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def cube_graph() -> Graph:
    """The 3-dimensional hypercube: vertices are 3-bit strings."""
    edges = []
    for v in range(8):
        for bit in (1, 2, 4):
            u = v ^ bit
            if u > v:
                edges.append((v, u))
    return Graph(8, edges)


def petersen_graph() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))  # outer pentagon
        edges.append((i, i + 5))  # spokes
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
    return Graph(10, edges)


def random_max_degree_graph(n: int, max_degree: int, seed: int) -> Graph:
    """Random graph with all degrees at most max_degree (greedy insertion)."""
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    deg = [0] * n
    edges = []
    for u, v in pairs:
        if deg[u] < max_degree and deg[v] < max_degree:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph(n, edges)


@lru_cache(maxsize=None)
def connected_graphs_up_to(max_n: int = 7) -> tuple[Graph, ...]:
    """Every connected graph on 1..max_n vertices, one per isomorphism class.

    Backed by the stored atlas of all graphs on up to seven vertices.
    """
    if max_n > 7:
        raise ValueError("the stored atlas covers at most 7 vertices")
    import networkx as nx

    out = []
    for g in nx.graph_atlas_g():
        size = g.number_of_nodes()
        if size == 0 or size > max_n:
            continue
        if not nx.is_connected(g):
            continue
        nodes = sorted(g.nodes())
        index = {u: i for i, u in enumerate(nodes)}
        out.append(Graph(size, [(index[u], index[v]) for u, v in g.edges()]))
    return tuple(out)


def standard_corpus(max_n: int = 12, atlas_max_n: int = 7) -> list[tuple[str, Graph]]:
    """The labeled validation corpus.

    Every connected graph up to atlas_max_n vertices, plus complete graphs
    K2..K6, cycles C3..C12, paths P2..P12, and the Petersen graph, filtered
    to at most max_n vertices.
    """
    items: list[tuple[str, Graph]] = []
    counter: dict[int, int] = {}
    for g in connected_graphs_up_to(min(atlas_max_n, max_n, 7)):
        idx = counter.get(g.n, 0)
        counter[g.n] = idx + 1
        items.append((f"conn{g.n}.{idx}", g))
    for n in range(2, 7):
        if n <= max_n:
            items.append((f"K{n}", complete_graph(n)))
    for n in range(3, 13):
        if n <= max_n:
            items.append((f"C{n}", cycle_graph(n)))
    for n in range(2, 13):
        if n <= max_n:
            items.append((f"P{n}", path_graph(n)))
    if max_n >= 10:
        items.append(("petersen", petersen_graph()))
    return items


def approximation_corpus() -> list[tuple[str, Graph]]:
    """Graphs on up to 14 vertices with max degree at most 4."""
    items = [
        ("petersen", petersen_graph()),
        ("cube", cube_graph()),
        ("K4", complete_graph(4)),
        ("K5", complete_graph(5)),
        ("K33", complete_bipartite_graph(3, 3)),
        ("C12", cycle_graph(12)),
        ("C14", cycle_graph(14)),
        ("P14", path_graph(14)),
        ("rand12d3", random_max_degree_graph(12, 3, seed=7)),
        ("rand13d4", random_max_degree_graph(13, 4, seed=11)),
        ("rand14d3", random_max_degree_graph(14, 3, seed=17)),
        ("rand14d4", random_max_degree_graph(14, 4, seed=13)),
    ]
    for name, g in items:
        assert g.max_degree() <= 4, name
    return items
