"""Conjecture registry, score functions, and strict verification."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest

from graphrefute.conjectures import (
    NEG_INF,
    REGISTRY,
    HypothesisError,
    Verdict,
    check_hypotheses,
    get_conjecture,
    is_counterexample,
    score,
    verify_strict,
)
from graphrefute.families import build_family
from graphrefute.graphs import Graph, SearchSpace, complete, cycle, path, random_tree, star


def test_registry_contents():
    assert sorted(REGISTRY) == list(range(1, 11))
    tree_space = {cid for cid, s in REGISTRY.items() if s.space is SearchSpace.TREES}
    assert tree_space == {2, 3, 4, 5, 6}
    assert {cid for cid, s in REGISTRY.items() if s.requires_tree} == {3, 5, 6}
    orders = {cid: s.min_order for cid, s in REGISTRY.items()}
    assert orders == {1: 3, 2: 4, 3: 2, 4: 1, 5: 2, 6: 2, 7: 3, 8: 3, 9: 3, 10: 3}
    assert REGISTRY[2].initial == ("path", 13)
    assert REGISTRY[4].initial == ("star", 5)
    assert REGISTRY[7].initial == ("random-tree", 10)
    for cid in (1, 3, 5, 6, 8, 9, 10):
        assert REGISTRY[cid].initial == ("random-tree", 5)
    with pytest.raises(KeyError):
        get_conjecture(11)


def test_check_hypotheses():
    assert check_hypotheses(1, path(3)) == []
    assert check_hypotheses(1, path(2)) == ["order 2 is below the minimum 3"]
    assert check_hypotheses(5, cycle(4)) == ["graph is not a tree"]
    assert check_hypotheses(1, Graph(4, [(0, 1), (2, 3)])) == ["graph is not connected"]
    # Conjecture 4 is stated for every graph, so disconnected inputs are fine.
    assert check_hypotheses(4, Graph(4, [(0, 1), (2, 3)])) == []


def test_score_raises_named_hypothesis_errors():
    with pytest.raises(HypothesisError, match="tree"):
        score(5, cycle(4))
    with pytest.raises(HypothesisError, match="order"):
        score(1, path(2))
    with pytest.raises(HypothesisError, match="connected"):
        score(1, Graph(4, [(0, 1), (2, 3)]))


def test_rational_scores_are_exact():
    s = score(5, build_family("T1", 2))
    assert s.exact == Fraction(1, 36)
    assert s.value == float(Fraction(1, 36))
    assert s.spectral_error_bound == 0.0
    s6 = score(6, build_family("T2", 2))
    assert s6.exact == Fraction(1, 72)
    s3 = score(3, path(3))
    assert s3.exact == Fraction(2, 3)
    assert score(3, path(5)).exact == Fraction(1, 10)


def test_spectral_scores_carry_error_bounds():
    s = score(1, path(5))
    assert s.exact is None
    assert 0 < s.spectral_error_bound < 1e-9
    polished = score(1, path(5), polish=True)
    assert polished.spectral_error_bound <= s.spectral_error_bound
    assert polished.value == pytest.approx(s.value, abs=1e-10)


def test_score_parts_breakdown():
    s = score(1, path(5))
    assert set(s.parts) == {"lambda_1", "mu", "n", "sqrt(n-1)"}
    assert s.parts["mu"] == 2
    assert s.parts["n"] == 5
    exact = s.exact_parts
    assert set(exact) == {"mu", "n"}


def test_undefined_subterm_scores_are_sentinels():
    # Diameter 1 makes the spectral index floor(2D/3) vanish.
    s = score(2, complete(4))
    assert s.value == NEG_INF
    assert "undefined" in s.parts
    # lambda_2 needs two vertices; conjecture 4 admits K1.
    assert score(4, Graph(1)).value == NEG_INF


def test_star_boundary_equalities():
    for n in range(3, 9):
        assert abs(score(9, star(n)).value) <= 1e-9
        assert abs(score(10, star(n)).value) <= 1e-9


def test_tree_scores_1_and_9_agree():
    # On bipartite graphs the matching and independence numbers are
    # complementary, which collapses the two formulas into one.
    rng = random.Random(3)
    for _ in range(15):
        t = random_tree(rng.randrange(3, 12), rng)
        assert score(1, t).value == pytest.approx(score(9, t).value, abs=1e-9)


def test_is_counterexample():
    assert is_counterexample(5, build_family("T1", 2))
    assert not is_counterexample(5, path(5))
    assert not is_counterexample(5, cycle(4))  # hypothesis failure, no raise
    assert is_counterexample(3, path(5))
    assert not is_counterexample(9, star(6))  # exact zero is not a violation


def test_verify_strict_verdicts():
    assert verify_strict(1, path(3)) is Verdict.REJECTED  # score exactly zero
    assert verify_strict(5, path(5)) is Verdict.REJECTED
    assert verify_strict(5, build_family("T1", 2)) is Verdict.CERTIFIED
    assert verify_strict(6, build_family("T2", 2)) is Verdict.CERTIFIED
    assert verify_strict(3, path(5)) is Verdict.CERTIFIED
    assert verify_strict(9, star(6)) is Verdict.REJECTED
    assert verify_strict(9, build_family("T2B", 9)) is Verdict.CERTIFIED
    assert verify_strict(10, build_family("T2B", 5)) is Verdict.CERTIFIED
    assert verify_strict(5, cycle(4)) is Verdict.REJECTED  # hypothesis failure


def test_score_10_matches_direct_formula():
    g = build_family("T2B", 5)
    s = score(10, g)
    expected = (2 - math.sqrt(2)) * (math.sqrt(5) - 1 / math.sqrt(5)) - 1
    assert s.value == pytest.approx(expected, abs=1e-10)


def test_unknown_conjecture_id():
    with pytest.raises(KeyError):
        score(42, path(5))
