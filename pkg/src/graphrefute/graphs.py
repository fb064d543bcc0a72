"""Immutable simple graphs, search moves, and deterministic generators.

Vertices are always labeled 0..n-1 and edges are unordered pairs of distinct
vertices. Every mutating operation returns a fresh graph, which keeps search
code free of aliasing bugs. Randomised helpers take an explicit
``random.Random`` so a whole run replays from one seed.
"""

from __future__ import annotations

import heapq
import random
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

import numpy as np


class GraphError(ValueError):
    """Invalid parameter or violated contract in a graph operation."""


class InvalidMoveError(GraphError):
    """Raised when a move does not apply to the given graph."""


class SearchSpace(Enum):
    """Feasible set that a search walks through."""

    TREES = "trees"
    CONNECTED = "connected"


class MoveKind(Enum):
    ADD_LEAF = "add-leaf"
    SUBDIVIDE = "subdivide"
    ADD_EDGE = "add-edge"
    REMOVE_LEAF = "remove-leaf"
    SMOOTH = "smooth"


# Kinds that grow the graph; the rest shrink it.
FORWARD_KINDS = frozenset({MoveKind.ADD_LEAF, MoveKind.SUBDIVIDE, MoveKind.ADD_EDGE})


@dataclass(frozen=True)
class Move:
    """One atomic search step.

    ``u`` is the anchor vertex (ADD_LEAF), the leaf (REMOVE_LEAF), the
    degree-2 vertex (SMOOTH), or the smaller endpoint (SUBDIVIDE, ADD_EDGE).
    ``v`` is the larger endpoint for two-vertex kinds and -1 otherwise.
    """

    kind: MoveKind
    u: int
    v: int = -1

    @staticmethod
    def add_leaf(u: int) -> "Move":
        return Move(MoveKind.ADD_LEAF, u)

    @staticmethod
    def subdivide(u: int, v: int) -> "Move":
        return Move(MoveKind.SUBDIVIDE, min(u, v), max(u, v))

    @staticmethod
    def add_edge(u: int, v: int) -> "Move":
        return Move(MoveKind.ADD_EDGE, min(u, v), max(u, v))

    @staticmethod
    def remove_leaf(u: int) -> "Move":
        return Move(MoveKind.REMOVE_LEAF, u)

    @staticmethod
    def smooth(u: int) -> "Move":
        return Move(MoveKind.SMOOTH, u)


class Graph:
    """Undirected simple graph on vertices 0..n-1, immutable after build."""

    __slots__ = ("n", "m", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise GraphError(f"graph order must be >= 1, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise GraphError(f"loop at vertex {u} not allowed")
            if v in adj[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
            m += 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(s)) for s in adj))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Graph is immutable")

    # -- basic accessors -------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degree_sequence(self) -> tuple[int, ...]:
        """Return vertex degrees in non-increasing order."""
        return tuple(sorted((len(a) for a in self._adj), reverse=True))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in self._adj[u]:
                if v > u:
                    yield (u, v)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- structure predicates --------------------------------------------

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        seen = bytearray(self.n)
        seen[0] = 1
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for v in self._adj[u]:
                if not seen[v]:
                    seen[v] = 1
                    count += 1
                    stack.append(v)
        return count == self.n

    def is_tree(self) -> bool:
        return self.m == self.n - 1 and self.is_connected()


# -- constructors ----------------------------------------------------------


def path(n: int) -> Graph:
    """Return the path P_n with edges (i, i+1)."""
    if n < 1:
        raise GraphError(f"path order must be >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """Return the star S_n with center 0 and leaves 1..n-1."""
    if n < 1:
        raise GraphError(f"star order must be >= 1, got {n}")
    return Graph(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    """Return the complete graph K_n."""
    if n < 1:
        raise GraphError(f"complete graph order must be >= 1, got {n}")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    """Return the cycle C_n; requires n >= 3."""
    if n < 3:
        raise GraphError(f"cycle order must be >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


_CONSTRUCTORS = {
    "path": path,
    "star": star,
    "complete": complete,
    "cycle": cycle,
}


def construct(kind: str, n: int) -> Graph:
    """Build a named graph ('path', 'star', 'complete', 'cycle') of order n."""
    try:
        builder = _CONSTRUCTORS[kind]
    except KeyError:
        raise GraphError(f"unknown graph kind {kind!r}") from None
    return builder(n)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Return a uniformly random labeled tree on n vertices (Pruefer decode)."""
    if n < 1:
        raise GraphError(f"tree order must be >= 1, got {n}")
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    # Repeatedly attach the smallest remaining leaf to the next code symbol.
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, edges)


def connect_at(g: Graph, h: Graph, u: int, v: int) -> Graph:
    """Disjoint union of g and h plus a bridge from g's vertex u to h's v.

    Vertices of h are shifted up by g.n; the result is connected whenever
    both inputs are.
    """
    if not (0 <= u < g.n):
        raise GraphError(f"vertex {u} out of range for first graph")
    if not (0 <= v < h.n):
        raise GraphError(f"vertex {v} out of range for second graph")
    edges = list(g.edges())
    edges += [(a + g.n, b + g.n) for a, b in h.edges()]
    edges.append((u, v + g.n))
    return Graph(g.n + h.n, edges)


# -- moves ------------------------------------------------------------------


def legal_moves(g: Graph, space: SearchSpace) -> list[Move]:
    """Enumerate forward moves available from g in the given space.

    Trees allow leaf additions and edge subdivisions; connected graphs
    additionally allow inserting any non-edge. The order is deterministic:
    leaf anchors ascending, then edges lexicographically, then non-edges
    lexicographically.
    """
    if not g.is_connected():
        raise GraphError("legal_moves requires a connected graph")
    moves = [Move.add_leaf(v) for v in range(g.n)]
    moves += [Move.subdivide(u, v) for u, v in g.edges()]
    if space is SearchSpace.CONNECTED:
        adj = g._adj
        for u in range(g.n):
            nbrs = adj[u]
            for v in range(u + 1, g.n):
                if v not in nbrs:
                    moves.append(Move.add_edge(u, v))
    return moves


def _relabel_without(edges: Iterable[tuple[int, int]], gone: int) -> list[tuple[int, int]]:
    """Shift labels above the removed vertex down by one."""
    out = []
    for u, v in edges:
        uu = u - (u > gone)
        vv = v - (v > gone)
        out.append((uu, vv))
    return out


def apply_move(g: Graph, move: Move) -> Graph:
    """Apply a move to g, validating its preconditions."""
    k = move.kind
    if k is MoveKind.ADD_LEAF:
        v = move.u
        if not (0 <= v < g.n):
            raise InvalidMoveError(f"add-leaf anchor {v} out of range")
        return Graph(g.n + 1, list(g.edges()) + [(v, g.n)])
    if k is MoveKind.SUBDIVIDE:
        u, v = move.u, move.v
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise InvalidMoveError(f"subdivide needs an existing edge, got ({u}, {v})")
        edges = [e for e in g.edges() if e != (min(u, v), max(u, v))]
        edges += [(u, g.n), (v, g.n)]
        return Graph(g.n + 1, edges)
    if k is MoveKind.ADD_EDGE:
        u, v = move.u, move.v
        if not (0 <= u < g.n and 0 <= v < g.n) or u == v or g.has_edge(u, v):
            raise InvalidMoveError(f"add-edge needs a non-edge, got ({u}, {v})")
        return Graph(g.n, list(g.edges()) + [(u, v)])
    if k is MoveKind.REMOVE_LEAF:
        v = move.u
        if not (0 <= v < g.n) or g.degree(v) != 1:
            raise InvalidMoveError(f"remove-leaf needs a degree-1 vertex, got {v}")
        if g.n == 1:
            raise InvalidMoveError("cannot remove the last vertex")
        edges = [e for e in g.edges() if v not in e]
        return Graph(g.n - 1, _relabel_without(edges, v))
    if k is MoveKind.SMOOTH:
        w = move.u
        if not (0 <= w < g.n) or g.degree(w) != 2:
            raise InvalidMoveError(f"smooth needs a degree-2 vertex, got {w}")
        a, b = g.neighbors(w)
        if g.has_edge(a, b):
            raise InvalidMoveError(f"smooth at {w} would create a parallel edge")
        edges = [e for e in g.edges() if w not in e]
        edges.append((a, b))
        return Graph(g.n - 1, _relabel_without(edges, w))
    raise InvalidMoveError(f"unknown move kind {k!r}")


def removable_vertices(g: Graph) -> list[Move]:
    """List backward moves: leaf removals and smoothings, anchors ascending.

    A degree-2 vertex is smoothable only when its neighbors are non-adjacent,
    so the result stays simple. Both kinds preserve connectivity and map
    trees to trees.
    """
    out = []
    for v in range(g.n):
        d = g.degree(v)
        if d == 1 and g.n > 1:
            out.append(Move.remove_leaf(v))
        elif d == 2:
            a, b = g.neighbors(v)
            if not g.has_edge(a, b):
                out.append(Move.smooth(v))
    return out


def random_playout(g: Graph, depth: int, space: SearchSpace, rng: random.Random) -> Graph:
    """Apply `depth` uniformly random forward moves to g."""
    for _ in range(depth):
        moves = legal_moves(g, space)
        g = apply_move(g, rng.choice(moves))
    return g


# -- distances ---------------------------------------------------------------

# Below this order a plain BFS beats the vectorised sweep.
_BFS_CUTOFF = 64


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Return the n x n integer distance matrix of a connected graph."""
    n = g.n
    if n <= _BFS_CUTOFF:
        dist = np.full((n, n), -1, dtype=np.int64)
        adj = g._adj
        for s in range(n):
            row = dist[s]
            row[s] = 0
            q = deque([s])
            while q:
                u = q.popleft()
                du = row[u] + 1
                for v in adj[u]:
                    if row[v] < 0:
                        row[v] = du
                        q.append(v)
        if dist.min() < 0:
            raise GraphError("distance matrix requires a connected graph")
        return dist
    # Level-synchronous BFS from all sources at once via boolean matmul.
    a = np.zeros((n, n), dtype=np.float32)
    for u, v in g.edges():
        a[u, v] = 1.0
        a[v, u] = 1.0
    dist = np.zeros((n, n), dtype=np.int64)
    reach = np.eye(n, dtype=bool)
    frontier = reach
    d = 0
    while True:
        d += 1
        nxt = ((frontier.astype(np.float32) @ a) > 0) & ~reach
        if not nxt.any():
            break
        dist[nxt] = d
        reach |= nxt
        frontier = nxt
    if not reach.all():
        raise GraphError("distance matrix requires a connected graph")
    return dist
