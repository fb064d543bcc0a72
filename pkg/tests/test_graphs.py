"""Graph container, constructors, moves, and distance computation."""

from __future__ import annotations

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_connected_graph, to_networkx
from graphrefute.graphs import (
    Graph,
    GraphError,
    InvalidMoveError,
    Move,
    MoveKind,
    SearchSpace,
    all_pairs_distances,
    apply_move,
    complete,
    connect_at,
    construct,
    cycle,
    legal_moves,
    path,
    random_playout,
    random_tree,
    removable_vertices,
    star,
)


def test_graph_basics():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert g.m == 3
    assert g.neighbors(1) == (0, 2)
    assert g.degree(0) == 1
    assert g.degree_sequence() == (2, 2, 1, 1)
    assert g.has_edge(2, 1)
    assert not g.has_edge(0, 3)
    assert list(g.edges()) == [(0, 1), (1, 2), (2, 3)]


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(-1)


def test_graph_equality_and_hash():
    a = Graph(3, [(0, 1), (1, 2)])
    b = Graph(3, [(1, 2), (0, 1)])
    assert a == b
    assert hash(a) == hash(b)
    assert a != Graph(3, [(0, 1)])
    assert len({a, b}) == 1


def test_constructors():
    p = path(5)
    assert (p.n, p.m) and p.is_tree() and p.degree_sequence() == (2, 2, 2, 1, 1)
    s = star(6)
    assert s.is_tree() and s.degree(0) == 5
    k = complete(4)
    assert k.m == 6 and not k.is_tree() and k.is_connected()
    c = cycle(5)
    assert c.m == 5 and all(c.degree(v) == 2 for v in range(5))
    assert construct("path", 3) == path(3)
    with pytest.raises(GraphError):
        construct("wheel", 5)
    with pytest.raises(GraphError):
        cycle(2)
    with pytest.raises(GraphError):
        path(0)


def test_connectivity_and_tree_checks():
    assert path(1).is_connected()
    assert path(1).is_tree()
    disconnected = Graph(4, [(0, 1), (2, 3)])
    assert not disconnected.is_connected()
    assert not disconnected.is_tree()
    assert not cycle(4).is_tree()


def test_random_tree_is_deterministic_and_valid():
    a = random_tree(10, random.Random(7))
    b = random_tree(10, random.Random(7))
    assert a == b
    assert a.is_tree()
    assert random_tree(1, random.Random(0)).n == 1
    assert random_tree(2, random.Random(0)).m == 1


def test_random_tree_hits_every_labeled_tree_on_four_vertices():
    # Cayley: 16 labeled trees on 4 vertices; a long sample should see all.
    rng = random.Random(3)
    seen = {random_tree(4, rng) for _ in range(2000)}
    assert len(seen) == 16


def test_connect_at():
    g = connect_at(path(3), path(2), 2, 0)
    assert g.n == 5
    assert g.m == 4
    assert g.has_edge(2, 3)
    assert g.is_tree()
    with pytest.raises(GraphError):
        connect_at(path(3), path(2), 5, 0)


def test_legal_moves_tree_space_counts_and_order():
    g = path(3)
    moves = legal_moves(g, SearchSpace.TREES)
    # n add-leaf moves then m subdivide moves, each block in ascending order.
    assert moves == [
        Move.add_leaf(0),
        Move.add_leaf(1),
        Move.add_leaf(2),
        Move.subdivide(0, 1),
        Move.subdivide(1, 2),
    ]


def test_legal_moves_connected_space_adds_edge_moves():
    g = path(3)
    moves = legal_moves(g, SearchSpace.CONNECTED)
    assert Move.add_edge(0, 2) in moves
    assert moves.index(Move.subdivide(1, 2)) < moves.index(Move.add_edge(0, 2))
    k = complete(4)
    assert all(m.kind is not MoveKind.ADD_EDGE for m in legal_moves(k, SearchSpace.CONNECTED))


def test_legal_moves_rejects_disconnected():
    with pytest.raises(GraphError):
        legal_moves(Graph(4, [(0, 1), (2, 3)]), SearchSpace.TREES)


def test_apply_move_add_leaf_and_subdivide():
    g = path(3)
    g2 = apply_move(g, Move.add_leaf(1))
    assert g2.n == 4 and g2.has_edge(1, 3)
    g3 = apply_move(g, Move.subdivide(0, 1))
    assert g3.n == 4 and g3.m == 3
    assert not g3.has_edge(0, 1)
    assert g3.has_edge(0, 3) and g3.has_edge(1, 3)


def test_apply_move_add_edge_and_validation():
    g = path(4)
    g2 = apply_move(g, Move.add_edge(0, 3))
    assert g2 == cycle(4)
    with pytest.raises(InvalidMoveError):
        apply_move(g, Move.add_edge(0, 1))  # already present
    with pytest.raises(InvalidMoveError):
        apply_move(g, Move.subdivide(0, 2))  # not an edge
    with pytest.raises(InvalidMoveError):
        apply_move(g, Move.add_leaf(9))  # out of range


def test_apply_move_remove_leaf_inverts_add_leaf():
    g = path(4)
    grown = apply_move(g, Move.add_leaf(2))
    shrunk = apply_move(grown, Move.remove_leaf(4))
    assert shrunk == g
    with pytest.raises(InvalidMoveError):
        apply_move(path(4), Move.remove_leaf(1))  # degree 2, not a leaf


def test_apply_move_smooth_inverts_subdivide():
    g = path(2)
    sub = apply_move(g, Move.subdivide(0, 1))
    back = apply_move(sub, Move.smooth(2))
    assert back == g
    # Smoothing a degree-2 vertex whose neighbors are adjacent would create
    # a multi-edge, so it is not allowed.
    with pytest.raises(InvalidMoveError):
        apply_move(cycle(3), Move.smooth(0))
    with pytest.raises(InvalidMoveError):
        apply_move(path(4), Move.smooth(0))  # leaf, not degree 2


def test_removable_vertices():
    assert [m.u for m in removable_vertices(path(5))] == [0, 1, 2, 3, 4]
    assert all(
        m.kind is MoveKind.SMOOTH for m in removable_vertices(path(5)) if m.u in (1, 2, 3)
    )
    s = star(5)
    assert [m.u for m in removable_vertices(s)] == [1, 2, 3, 4]
    assert removable_vertices(complete(3)) == []


def test_random_playout_stays_in_space_and_adds_depth_vertices_or_edges():
    rng = random.Random(5)
    for _ in range(25):
        t = random_playout(path(4), 6, SearchSpace.TREES, rng)
        assert t.is_tree()
        assert t.n == 10
        g = random_playout(path(4), 6, SearchSpace.CONNECTED, rng)
        assert g.is_connected()
        assert (g.n - 4) + (g.m - (g.n - 1)) == 6


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=2, max_value=9))
def test_forward_moves_preserve_space_membership(seed, n):
    rng = random.Random(seed)
    t = random_tree(n, rng)
    for move in legal_moves(t, SearchSpace.TREES):
        assert apply_move(t, move).is_tree()
    g = random_connected_graph(n, rng)
    for move in legal_moves(g, SearchSpace.CONNECTED):
        assert apply_move(g, move).is_connected()


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=3, max_value=9))
def test_prune_moves_preserve_connectivity(seed, n):
    rng = random.Random(seed)
    g = random_connected_graph(n, rng)
    for move in removable_vertices(g):
        shrunk = apply_move(g, move)
        assert shrunk.n == g.n - 1
        assert shrunk.is_connected()


def test_all_pairs_distances_matches_networkx():
    nx = pytest.importorskip("networkx")
    rng = random.Random(11)
    for n in (2, 5, 9, 13):
        g = random_connected_graph(n, rng)
        dist = all_pairs_distances(g)
        expected = dict(nx.all_pairs_shortest_path_length(to_networkx(g)))
        for u in range(n):
            for v in range(n):
                assert dist[u][v] == expected[u][v]


def test_all_pairs_distances_large_graph_path():
    # Orders above the BFS cutoff go through the matrix-product route.
    n = 80
    g = path(n)
    dist = all_pairs_distances(g)
    assert dist.dtype == np.int64
    for u in range(0, n, 17):
        for v in range(0, n, 13):
            assert dist[u][v] == abs(u - v)


def test_all_pairs_distances_requires_connected():
    with pytest.raises(GraphError):
        all_pairs_distances(Graph(3, [(0, 1)]))
