"""Shared fixtures and independent brute-force oracles.

The oracles deliberately use different algorithms from the package:
permutation search for cycles and edge-subset filtering for spanning
structures, so agreement is meaningful.
"""

from collections import Counter
from itertools import combinations, permutations

import pytest

from sesquipoly import Graph
from sesquipoly.corpus import (
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def petersen():
    return petersen_graph()


def brute_cycles(graph, max_len=None):
    """All simple cycles by checking every permutation of every subset."""
    n = graph.n
    if max_len is None:
        max_len = n
    adj = {v: set(graph.neighbors(v)) for v in range(n)}
    found = set()
    for k in range(3, max_len + 1):
        for subset in combinations(range(n), k):
            root = subset[0]
            for perm in permutations(subset[1:]):
                seq = (root,) + perm
                if seq[1] > seq[-1]:
                    continue  # keep one orientation
                if all(seq[i + 1] in adj[seq[i]] for i in range(k - 1)) and seq[
                    0
                ] in adj[seq[-1]]:
                    found.add(seq)
    return sorted(found)


def brute_sesquivalent_counts(graph):
    """(isolated, edges, cycles) histogram via edge-subset brute force."""
    n, edges = graph.n, graph.edges
    hist = Counter()
    for r in range(len(edges) + 1):
        for chosen in combinations(edges, r):
            deg = [0] * n
            ok = True
            for u, v in chosen:
                deg[u] += 1
                deg[v] += 1
                if deg[u] > 2 or deg[v] > 2:
                    ok = False
                    break
            if not ok:
                continue
            parent = list(range(n))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for u, v in chosen:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
            comp_edges = Counter()
            comp_verts = Counter()
            covered = set()
            for u, v in chosen:
                comp_edges[find(u)] += 1
                covered.add(u)
                covered.add(v)
            for u in covered:
                comp_verts[find(u)] += 1
            e_count = c_count = 0
            valid = True
            for root, ec in comp_edges.items():
                vc = comp_verts[root]
                if vc == 2 and ec == 1:
                    e_count += 1
                elif vc == ec and vc >= 3:
                    c_count += 1
                else:
                    valid = False
                    break
            if not valid:
                continue
            hist[(n - len(covered), e_count, c_count)] += 1
    return dict(hist)


def canonical_cycle(seq):
    """Canonical tuple of an arbitrary cyclic vertex sequence."""
    k = len(seq)
    i = seq.index(min(seq))
    fwd = tuple(seq[(i + j) % k] for j in range(k))
    bwd = tuple(seq[(i - j) % k] for j in range(k))
    return min(fwd, bwd)


def relabel(graph, perm):
    """Graph with vertex v renamed perm[v]."""
    return Graph(graph.n, [(perm[u], perm[v]) for u, v in graph.edges])
