"""Matrices, spectra, characteristic polynomials, and combinatorial invariants."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import numpy as np
import pytest

from conftest import random_connected_graph
from graphrefute import oracles
from graphrefute.graphs import Graph, complete, cycle, path, random_tree, star
from graphrefute.invariants import (
    PerformanceWarning,
    adjacency_char_poly,
    adjacency_matrix,
    adjacency_spectrum,
    algebraic_connectivity,
    char_poly_exact,
    diameter,
    distance_char_poly,
    distance_matrix,
    distance_spectrum,
    domination_number,
    harmonic,
    harmonic_float,
    independence_number,
    lambda1,
    lambda2,
    laplacian_matrix,
    laplacian_spectrum,
    matching_number,
    modified_second_zagreb,
    peak_stats,
    proximity,
    proximity_float,
    randic,
    randic_general,
    randic_general_exact,
    second_zagreb,
)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def test_matrices():
    g = path(3)
    assert adjacency_matrix(g).tolist() == [[0, 1, 0], [1, 0, 1], [0, 1, 0]]
    assert laplacian_matrix(g).tolist() == [[1, -1, 0], [-1, 2, -1], [0, -1, 1]]
    assert distance_matrix(g).tolist() == [[0, 1, 2], [1, 0, 1], [2, 1, 0]]


def test_adjacency_spectrum_frozen_values():
    s = adjacency_spectrum(path(3))
    assert s.order == "descending"
    assert s.values == pytest.approx((math.sqrt(2), 0.0, -math.sqrt(2)), abs=1e-12)
    k = adjacency_spectrum(complete(4))
    assert k.values == pytest.approx((3.0, -1.0, -1.0, -1.0), abs=1e-12)
    assert lambda1(star(5)) == pytest.approx(2.0, abs=1e-12)


def test_spectrum_error_bounds():
    fast = adjacency_spectrum(path(30))
    assert 0 < fast.residual_bound <= 1e-10 * 30
    polished = adjacency_spectrum(path(30), polish=True)
    assert polished.residual_bound <= 1e-12
    assert polished.values == pytest.approx(fast.values, abs=1e-9)


def test_laplacian_spectrum_and_connectivity():
    s = laplacian_spectrum(complete(3))
    assert s.order == "ascending"
    assert s.values == pytest.approx((0.0, 3.0, 3.0), abs=1e-12)
    assert algebraic_connectivity(complete(3)) == pytest.approx(3.0, abs=1e-12)
    assert algebraic_connectivity(path(2)) == pytest.approx(2.0, abs=1e-12)
    # lambda_2 of the adjacency matrix, not the Laplacian.
    assert lambda2(path(3)) == pytest.approx(0.0, abs=1e-12)


def test_distance_spectrum_descending():
    s = distance_spectrum(path(3))
    assert s.order == "descending"
    assert s.values[0] >= s.values[-1]
    d = np.array([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    expected = sorted(np.linalg.eigvalsh(d), reverse=True)
    assert s.values == pytest.approx(tuple(expected), abs=1e-12)


def test_char_poly_exact_frozen():
    k2 = char_poly_exact([[0, 1], [1, 0]])
    assert k2.coeffs == (-1, 0, 1)
    assert k2.degree == 2
    p3 = adjacency_char_poly(path(3))
    assert p3.coeffs == (0, -2, 0, 1)
    c3 = adjacency_char_poly(cycle(3))
    assert c3.coeffs == (-2, -3, 0, 1)
    assert c3(2) == 0
    assert c3(-1) == 0


def test_char_poly_exact_big_integers():
    # K_25 has adjacency characteristic polynomial (x-24)(x+1)^24 whose
    # coefficients overflow 64-bit arithmetic; the roots must still be exact.
    cp = adjacency_char_poly(complete(25))
    assert cp(24) == 0
    assert cp(-1) == 0
    assert cp.coeffs[-1] == 1
    assert all(isinstance(c, int) for c in cp.coeffs)


def test_char_poly_trace_coefficients():
    rng = random.Random(4)
    for _ in range(10):
        g = random_connected_graph(8, rng)
        cp = adjacency_char_poly(g)
        # Monic; x^{n-1} coefficient is -trace = 0; x^{n-2} one is -m.
        assert cp.coeffs[-1] == 1
        assert cp.coeffs[-2] == 0
        assert cp.coeffs[-3] == -g.m


def test_char_poly_rejects_bad_input():
    with pytest.raises(ValueError):
        char_poly_exact([[0, 1], [2, 0]])  # not symmetric
    with pytest.raises(ValueError):
        char_poly_exact(np.array([[0.5, 0.5], [0.5, 0.5]]))  # not integral
    with pytest.raises(ValueError):
        char_poly_exact([[0, 1]])  # not square


def test_distance_char_poly_matches_floating_roots():
    g = random_tree(7, random.Random(1))
    cp = distance_char_poly(g)
    for lam in distance_spectrum(g).values:
        assert abs(cp(lam)) <= 1e-6 * (1 + abs(lam)) ** g.n


def test_peak_stats_frozen():
    p4 = peak_stats(path(4))
    assert (p4.p_a, p4.m) == (1, 2)
    p3 = peak_stats(path(3))
    assert (p3.p_a, p3.m) == (0, 1)
    assert p3.n == 3
    assert 0 <= p3.p_d <= p3.n - 2
    s5 = peak_stats(star(5))
    assert (s5.p_a, s5.m) == (0, 1)


def test_peak_stats_rejects_non_trees():
    with pytest.raises(ValueError):
        peak_stats(cycle(4))
    with pytest.raises(ValueError):
        peak_stats(Graph(1))


def test_diameter_and_proximity():
    assert diameter(path(5)) == 4
    assert diameter(complete(6)) == 1
    assert proximity(path(3)) == Fraction(1)
    assert proximity(path(4)) == Fraction(4, 3)
    assert proximity(star(9)) == Fraction(1)
    assert proximity_float(path(4)) == pytest.approx(4 / 3, abs=1e-12)


def test_chemical_indices_frozen():
    assert second_zagreb(path(3)) == 4
    assert modified_second_zagreb(path(3)) == 1
    assert harmonic(path(3)) == Fraction(4, 3)
    assert randic(path(3)) == pytest.approx(math.sqrt(2), abs=1e-12)
    assert randic(complete(4)) == pytest.approx(2.0, abs=1e-12)
    assert harmonic_float(path(3)) == pytest.approx(4 / 3, abs=1e-12)


def test_randic_general_matches_exact():
    rng = random.Random(6)
    for _ in range(10):
        g = random_connected_graph(7, rng)
        assert randic_general_exact(g, 1) == second_zagreb(g)
        assert randic_general_exact(g, -1) == modified_second_zagreb(g)
        assert randic_general(g, 1.0) == pytest.approx(float(second_zagreb(g)), rel=1e-12)
        assert randic_general(g, -0.5) == pytest.approx(randic(g), rel=1e-12)


def test_matching_number_needs_blossoms():
    # Odd cycles and the Petersen graph defeat greedy/bipartite algorithms.
    assert matching_number(cycle(5)) == 2
    assert matching_number(cycle(7)) == 3
    assert matching_number(petersen()) == 5
    assert matching_number(complete(6)) == 3
    assert matching_number(star(8)) == 1
    assert matching_number(Graph(1)) == 0


def test_independence_and_domination_frozen():
    assert independence_number(cycle(5)) == 2
    assert independence_number(petersen()) == 4
    assert independence_number(star(8)) == 7
    assert independence_number(complete(5)) == 1
    assert domination_number(star(8)) == 1
    assert domination_number(path(6)) == 2
    assert domination_number(path(7)) == 3
    assert domination_number(cycle(6)) == 2
    assert domination_number(petersen()) == 3


def test_exact_invariants_match_exhaustive_enumeration():
    rng = random.Random(12)
    for _ in range(30):
        g = random_connected_graph(rng.randrange(2, 8), rng)
        assert matching_number(g) == oracles.matching_number_exhaustive(g)
        assert independence_number(g) == oracles.independence_number_exhaustive(g)
        assert domination_number(g) == oracles.domination_number_exhaustive(g)


def test_tree_domination_dynamic_program_matches_exhaustive():
    rng = random.Random(13)
    for _ in range(40):
        t = random_tree(rng.randrange(1, 11), rng)
        assert domination_number(t) == oracles.domination_number_exhaustive(t)


def test_matching_counts_oracle_small():
    # P4 has matchings: 1 empty, 3 single edges, 1 pair of disjoint edges.
    assert oracles.count_matchings_by_size(path(4)) == [1, 3, 1]
    assert oracles.count_matchings_by_size(star(5)) == [1, 4, 0]


def test_size_guard_warns():
    big = path(65)
    with pytest.warns(PerformanceWarning):
        matching_number(big)
    with pytest.warns(PerformanceWarning):
        domination_number(big)
