"""Immutable simple graphs plus the cycle and subgraph enumerators.

Vertices are dense integers 0..n-1. A cycle is represented as a tuple of
distinct vertices in canonical form: the minimum vertex first, followed by
the smaller of its two neighbors on the cycle, so every undirected simple
cycle has exactly one representation and enumeration order is deterministic.
"""

from __future__ import annotations

import json
import math
from collections import deque
from typing import Iterable, Sequence, Tuple

from .errors import GraphParseError

Cycle = Tuple[int, ...]


class Graph:
    """Simple undirected graph with sorted adjacency lists.

    Construction validates vertex ranges, rejects self-loops, and
    deduplicates edges. Instances are immutable and hashable, so expensive
    enumeration results can be cached against them.
    """

    __slots__ = ("n", "edges", "adjacency", "_hash", "_masks")

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        dedup = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            dedup.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(dedup)))
        adj = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "_hash", hash((n, self.edges)))
        masks = []
        for nbrs in self.adjacency:
            m = 0
            for u in nbrs:
                m |= 1 << u
            masks.append(m)
        object.__setattr__(self, "_masks", tuple(masks))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    @property
    def neighbor_masks(self) -> Tuple[int, ...]:
        """Per-vertex neighborhoods as bitmasks (bit u set iff u adjacent)."""
        return self._masks

    def girth(self):
        """Length of the shortest simple cycle, or math.inf for forests.

        BFS from every vertex; each non-tree edge (u, w) closes a walk of
        length dist[u] + dist[w] + 1 through the root. Every such walk
        contains a simple cycle no longer than itself, and for a root lying
        on a shortest cycle the walk realizes that cycle exactly, so the
        minimum over all roots is the girth.
        """
        best = math.inf
        for root in range(self.n):
            dist = [-1] * self.n
            parent = [-1] * self.n
            dist[root] = 0
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif w != parent[u]:
                        length = dist[u] + dist[w] + 1
                        if length < best:
                            best = length
        return best

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def _rooted_cycles(adjacency, root, allowed_mask, max_len):
    """Canonical cycles through `root` with interior vertices in allowed_mask.

    Callers guarantee allowed_mask excludes the root and contains only
    vertices greater than it. A cycle is emitted once: when the closing edge
    back to the root is seen and the second path vertex is smaller than the
    last (killing the reversed duplicate). DFS over sorted adjacency yields
    the cycles in lexicographic order of their canonical tuples.
    """
    if max_len < 3:
        return []
    cycles = []
    path = [root]

    def extend(u, used):
        for w in adjacency[u]:
            if w == root:
                if len(path) >= 3 and path[1] < path[-1]:
                    cycles.append(tuple(path))
            else:
                bit = 1 << w
                if (allowed_mask & bit) and not (used & bit) and len(path) < max_len:
                    path.append(w)
                    extend(w, used | bit)
                    path.pop()

    extend(root, 0)
    return cycles


def enumerate_cycles(graph: Graph, max_len: int | None = None) -> list[Cycle]:
    """Every simple cycle of length 3..max_len, canonical, lex sorted."""
    n = graph.n
    if max_len is None:
        max_len = n
    out = []
    full = (1 << n) - 1
    for root in range(n):
        allowed = full & ~((1 << (root + 1)) - 1)
        out.extend(_rooted_cycles(graph.adjacency, root, allowed, max_len))
    return out


def cycles_through_vertex(graph: Graph, v: int, max_len: int | None = None) -> list[Cycle]:
    """The cycles from enumerate_cycles that contain v, in the same order."""
    if not 0 <= v < graph.n:
        raise ValueError(f"vertex {v} out of range for n={graph.n}")
    return [c for c in enumerate_cycles(graph, max_len) if v in c]


def induced_subgraph(graph: Graph, vertices: Iterable[int]):
    """Induced subgraph relabeled 0..k-1 by ascending original id.

    Returns (subgraph, originals) where originals[i] is the original id of
    the new vertex i.
    """
    originals = tuple(sorted(set(vertices)))
    for v in originals:
        if not 0 <= v < graph.n:
            raise ValueError(f"vertex {v} out of range for n={graph.n}")
    index = {v: i for i, v in enumerate(originals)}
    keep = set(originals)
    edges = [
        (index[u], index[v]) for u, v in graph.edges if u in keep and v in keep
    ]
    return Graph(len(originals), edges), originals


def vertex_deleted(graph: Graph, v: int) -> Graph:
    """The graph with vertex v removed and the rest relabeled densely."""
    if not 0 <= v < graph.n:
        raise ValueError(f"vertex {v} out of range for n={graph.n}")
    sub, _ = induced_subgraph(graph, (u for u in range(graph.n) if u != v))
    return sub


def disjoint_union(first: Graph, second: Graph) -> Graph:
    shift = first.n
    edges = list(first.edges) + [(u + shift, v + shift) for u, v in second.edges]
    return Graph(first.n + second.n, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse the line-oriented edge-list format.

    Optional first content line "n <N>" declares the vertex count; comment
    lines start with "#"; every other line is "u v". Without a header the
    vertex count is 1 + the largest id seen. Duplicate edges are collapsed.
    """
    declared = None
    edges = []
    max_id = -1
    saw_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if not saw_content and len(parts) == 2 and parts[0] == "n":
            try:
                declared = int(parts[1])
            except ValueError:
                raise GraphParseError(f"line {lineno}: bad header {raw!r}") from None
            if declared < 0:
                raise GraphParseError(f"line {lineno}: negative vertex count")
            saw_content = True
            continue
        saw_content = True
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(
                f"line {lineno}: non-integer vertex id in {raw!r}"
            ) from None
        if u < 0 or v < 0:
            raise GraphParseError(f"line {lineno}: negative vertex id in {raw!r}")
        if u == v:
            raise GraphParseError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
        if u > max_id:
            max_id = u
        if v > max_id:
            max_id = v
    n = declared if declared is not None else max_id + 1
    if max_id >= n:
        raise GraphParseError(
            f"vertex id {max_id} out of range for declared vertex count {n}"
        )
    return Graph(n, edges)


def parse_graph_json(text: str) -> Graph:
    """Parse the JSON graph format {"n": int, "edges": [[u, v], ...]}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"invalid JSON graph: {exc}") from None
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise GraphParseError('JSON graph needs keys "n" and "edges"')
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise GraphParseError('"n" must be a non-negative integer')
    edges = []
    for i, pair in enumerate(data["edges"]):
        if (
            not isinstance(pair, (list, tuple))
            or len(pair) != 2
            or not all(isinstance(u, int) for u in pair)
        ):
            raise GraphParseError(f"edge #{i} must be a pair of integers, got {pair!r}")
        edges.append((pair[0], pair[1]))
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise GraphParseError(str(exc)) from None


def load_graph(path) -> Graph:
    """Load a graph file, sniffing JSON versus edge-list text."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        if text.lstrip().startswith("{"):
            return parse_graph_json(text)
        return parse_edge_list(text)
    except GraphParseError as exc:
        raise GraphParseError(f"{path}: {exc}") from None
