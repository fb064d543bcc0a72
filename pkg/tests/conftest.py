"""Shared graph builders and conversion helpers for the tests."""

from __future__ import annotations

import random

from graphrefute.graphs import Graph, complete, connect_at, path, random_tree, star


def star_with_two_tails(star_order: int, tail_a: int, tail_b: int) -> Graph:
    """Star whose center carries one pendant path of each given length."""
    g = connect_at(star(star_order), path(tail_a), 0, 0)
    return connect_at(g, path(tail_b), 0, 0)


def two_star_centers_joined(order_a: int, order_b: int) -> Graph:
    """Two star centers, each joined by an edge to one shared new vertex."""
    g = connect_at(path(1), star(order_a), 0, 0)
    return connect_at(g, star(order_b), 0, 0)


def clique_with_tail(clique_order: int, tail: int) -> Graph:
    """Complete graph with a pendant path bridged to one of its vertices."""
    return connect_at(complete(clique_order), path(tail), 0, 0)


def to_networkx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_networkx(h) -> Graph:
    nodes = list(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), [(index[u], index[v]) for u, v in h.edges()])


def random_connected_graph(n: int, rng: random.Random, chord_prob: float = 0.2) -> Graph:
    """Random tree plus random chords; connected by construction."""
    g = random_tree(n, rng)
    edges = set(g.edges())
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < chord_prob:
                edges.add((u, v))
    return Graph(n, sorted(edges))


def write_g6(tmp_path, g: Graph, name: str = "graph.g6") -> str:
    from graphrefute.codec import encode_graph6

    target = tmp_path / name
    target.write_text(encode_graph6(g) + "\n")
    return str(target)
