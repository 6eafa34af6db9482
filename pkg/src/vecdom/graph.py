"""Simple undirected graphs and the handful of operations the solvers need.

Vertices are the integers ``0 .. n-1``.  Graphs are immutable once built;
every mutation-like operation returns a new graph.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateEdgeError,
    NotATreeError,
    OutOfRangeError,
    SelfLoopError,
)

__all__ = [
    "Graph",
    "build_graph",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "star_graph",
    "disjoint_union",
    "join",
    "induced_subgraph",
    "reverse_bfs_order",
]


class Graph:
    """An undirected simple graph with a fixed vertex set ``0 .. n-1``."""

    __slots__ = ("n", "m", "_adj", "_maxdeg")

    def __init__(self, adjacency: tuple[tuple[int, ...], ...], m: int) -> None:
        self.n = len(adjacency)
        self.m = m
        self._adj = adjacency
        self._maxdeg = max((len(row) for row in adjacency), default=0)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return self._maxdeg

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self._adj)

    def has_edge(self, u: int, v: int) -> bool:
        row = self._adj[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, sorted."""
        for u, row in enumerate(self._adj):
            for v in row:
                if u < v:
                    yield (u, v)

    def vertices(self) -> range:
        return range(self.n)

    def is_complete(self) -> bool:
        return 2 * self.m == self.n * (self.n - 1)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(_bfs_order(self, 0)) == self.n

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate and build a graph on ``n`` vertices from an edge list.

    Raises:
        OutOfRangeError: an endpoint is not in ``0 .. n-1``.
        SelfLoopError: an edge joins a vertex to itself.
        DuplicateEdgeError: an unordered edge repeats, in either orientation.
    """
    if n < 0:
        raise OutOfRangeError(f"vertex count must be non-negative, got {n}")
    adj: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    m = 0
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRangeError(f"edge ({u}, {v}) leaves the range 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"edge ({u}, {v}) appears more than once")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
        m += 1
    for row in adj:
        row.sort()
    return Graph(tuple(tuple(row) for row in adj), m)


def _graph_from_sorted_adjacency(adj: Sequence[Sequence[int]], m: int) -> Graph:
    """Fast path for callers that construct valid sorted adjacency directly."""
    return Graph(tuple(tuple(row) for row in adj), m)


def complete_graph(n: int) -> Graph:
    adj = tuple(tuple(u for u in range(n) if u != v) for v in range(n))
    return Graph(adj, n * (n - 1) // 2)


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise OutOfRangeError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Star with centre 0 and the given number of leaves."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(graphs: Sequence[Graph]) -> tuple[Graph, tuple[dict[int, int], ...]]:
    """Place the graphs side by side.

    Returns the combined graph together with one relabelling map per input
    graph, sending each original vertex to its new id.
    """
    adj: list[tuple[int, ...]] = []
    maps: list[dict[int, int]] = []
    offset = 0
    m = 0
    for g in graphs:
        maps.append({v: v + offset for v in range(g.n)})
        for v in range(g.n):
            adj.append(tuple(u + offset for u in g.neighbors(v)))
        offset += g.n
        m += g.m
    return Graph(tuple(adj), m), tuple(maps)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides.

    Vertices of ``g1`` keep their ids; vertices of ``g2`` are shifted up
    by ``g1.n``.
    """
    n1 = g1.n
    right = tuple(range(n1, n1 + g2.n))
    left = tuple(range(n1))
    adj: list[tuple[int, ...]] = []
    for v in range(n1):
        adj.append(g1.neighbors(v) + right)
    for v in range(g2.n):
        adj.append(left + tuple(u + n1 for u in g2.neighbors(v)))
    return Graph(tuple(adj), g1.m + g2.m + n1 * g2.n)


def induced_subgraph(g: Graph, keep: Sequence[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``keep`` (must be sorted, duplicate-free).

    Returns the subgraph plus the tuple mapping each new id to its old id.
    """
    old_of_new = tuple(keep)
    new_of_old = {old: new for new, old in enumerate(old_of_new)}
    adj: list[tuple[int, ...]] = []
    m = 0
    for old in old_of_new:
        row = tuple(new_of_old[u] for u in g.neighbors(old) if u in new_of_old)
        adj.append(row)
        m += len(row)
    return Graph(tuple(adj), m // 2), old_of_new


def _bfs_order(g: Graph, root: int) -> list[int]:
    seen = bytearray(g.n)
    seen[root] = 1
    order = [root]
    queue = deque((root,))
    adj = g._adj
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if not seen[u]:
                seen[u] = 1
                order.append(u)
                queue.append(u)
    return order


def reverse_bfs_order(g: Graph, root: int = 0) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Reverse breadth-first order of a tree, leaves first, root last.

    Returns ``(order, parent)`` where ``parent[root] == root`` and every
    other vertex points at its BFS predecessor.

    Raises:
        NotATreeError: the graph is disconnected or contains a cycle.
        OutOfRangeError: the root id is invalid.
    """
    if not (0 <= root < g.n):
        raise OutOfRangeError(f"root {root} is not a vertex")
    if g.m != g.n - 1:
        raise NotATreeError(f"a tree on {g.n} vertices has {g.n - 1} edges, got {g.m}")
    parent = list(range(g.n))
    seen = bytearray(g.n)
    seen[root] = 1
    order = [root]
    queue = deque((root,))
    adj = g._adj
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if not seen[u]:
                seen[u] = 1
                parent[u] = v
                order.append(u)
                queue.append(u)
    if len(order) < g.n:
        raise NotATreeError("graph is disconnected")
    order.reverse()
    return tuple(order), tuple(parent)
