"""The conjecture registry, score functions, and strict verification.

Each conjecture asserts an inequality bound on graph invariants. Its score
function is arranged so that a score strictly greater than zero witnesses a
violation; searches therefore maximize the score. Scores built purely from
rational invariants are carried exactly; spectral scores carry an explicit
error bound so that `verify_strict` can certify the sign of the result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable

import mpmath as mp

from . import invariants as inv
from .graphs import Graph, SearchSpace

NEG_INF = float("-inf")

_MACH_EPS = 2.0 ** -52

# verify_strict escalates to arbitrary precision only below this order;
# larger borderline cases are reported as Uncertain.
MP_MAX_ORDER = 64
_MP_DPS = 60


class HypothesisError(ValueError):
    """A graph fails the hypotheses of the conjecture being scored."""


class Verdict(Enum):
    CERTIFIED = "certified"
    UNCERTAIN = "uncertain"
    REJECTED = "rejected"


@dataclass(frozen=True)
class ConjectureSpec:
    """Static description of one conjecture and its search defaults."""

    id: int
    name: str
    statement: str
    space: SearchSpace
    min_order: int
    requires_tree: bool
    initial: tuple[str, int]  # (recipe kind, order) used when none is given
    formula: str  # rendering of the score whose positivity refutes it


REGISTRY: dict[int, ConjectureSpec] = {
    spec.id: spec
    for spec in [
        ConjectureSpec(
            1,
            "spectral-radius-matching",
            "lambda_1 + mu >= sqrt(n-1) + 1 for connected graphs of order n >= 3",
            SearchSpace.CONNECTED,
            3,
            False,
            ("random-tree", 5),
            "sqrt(n-1) + 1 - lambda_1 - mu",
        ),
        ConjectureSpec(
            2,
            "proximity-distance-eigenvalue",
            "pi + partial_floor(2D/3) > 0 for connected graphs of order n >= 4",
            SearchSpace.TREES,
            4,
            False,
            ("path", 13),
            "-pi - partial_floor(2D/3)",
        ),
        ConjectureSpec(
            3,
            "charpoly-peak-location",
            "p_A / m = 1 - p_D / n for every tree",
            SearchSpace.TREES,
            2,
            True,
            ("random-tree", 5),
            "|p_A/m - 1 + p_D/n|",
        ),
        ConjectureSpec(
            4,
            "second-eigenvalue-harmonic",
            "lambda_2 <= H for every graph",
            SearchSpace.TREES,
            1,
            False,
            ("star", 5),
            "lambda_2 - H",
        ),
        ConjectureSpec(
            5,
            "modified-zagreb-order-bound",
            "mM_2 <= (n+1)/4 for every tree",
            SearchSpace.TREES,
            2,
            True,
            ("random-tree", 5),
            "mM_2 - (n+1)/4",
        ),
        ConjectureSpec(
            6,
            "modified-zagreb-domination",
            "mM_2 >= -(gamma-1)/(2(n-gamma)) + (gamma+1)/2 for every tree",
            SearchSpace.TREES,
            2,
            True,
            ("random-tree", 5),
            "-(gamma-1)/(2(n-gamma)) + (gamma+1)/2 - mM_2",
        ),
        ConjectureSpec(
            7,
            "spectral-radius-proximity",
            "lambda_1 * pi <= n - 1 for connected graphs of order n >= 3",
            SearchSpace.CONNECTED,
            3,
            False,
            ("random-tree", 10),
            "lambda_1 * pi - (n - 1)",
        ),
        ConjectureSpec(
            8,
            "connectivity-proximity-cosine",
            "a * pi >= B(n) for connected graphs of order n >= 3, where B(n) is "
            "n^2(1-cos(pi/n))/(2(n-1)) for even n and (n+1)(1-cos(pi/n))/2 for odd n",
            SearchSpace.CONNECTED,
            3,
            False,
            ("random-tree", 5),
            "B(n) - a * pi",
        ),
        ConjectureSpec(
            9,
            "spectral-radius-independence",
            "lambda_1 - alpha >= sqrt(n-1) - n + 1 for connected graphs of order n >= 3",
            SearchSpace.CONNECTED,
            3,
            False,
            ("random-tree", 5),
            "sqrt(n-1) - n + 1 - lambda_1 + alpha",
        ),
        ConjectureSpec(
            10,
            "randic-independence",
            "R + alpha <= n - 1 + sqrt(n-1) for connected graphs of order n >= 3",
            SearchSpace.CONNECTED,
            3,
            False,
            ("random-tree", 5),
            "R + alpha - (n - 1) - sqrt(n-1)",
        ),
    ]
}


def get_conjecture(conjecture_id: int) -> ConjectureSpec:
    try:
        return REGISTRY[conjecture_id]
    except KeyError:
        raise KeyError(f"unknown conjecture id {conjecture_id}; valid ids are 1..10") from None


@dataclass(frozen=True)
class Score:
    """A score evaluation.

    ``value`` is the float score; ``exact`` is set when the whole score is
    rational and then equals it exactly. ``spectral_error_bound`` bounds the
    absolute error of ``value`` (zero for exact scores). ``parts`` holds the
    named sub-terms that went into the formula; rational ones are kept as
    int/Fraction.
    """

    value: float
    exact: Fraction | None
    spectral_error_bound: float
    parts: dict[str, object]

    @property
    def exact_parts(self) -> dict[str, object]:
        return {
            k: v
            for k, v in self.parts.items()
            if isinstance(v, (int, Fraction)) and not isinstance(v, bool)
        }


def _undefined(reason: str) -> Score:
    """Sentinel for in-hypothesis graphs where a sub-term is undefined."""
    return Score(NEG_INF, None, 0.0, {"undefined": reason})


def _slop(*terms: float) -> float:
    """Rounding allowance for a handful of float operations on `terms`."""
    scale = 1.0
    for t in terms:
        scale += abs(t)
    return 32.0 * _MACH_EPS * scale


def check_hypotheses(conjecture_id: int, g: Graph) -> list[str]:
    """Return the list of violated hypotheses (empty when all hold)."""
    spec = get_conjecture(conjecture_id)
    violations = []
    if g.n < spec.min_order:
        violations.append(f"order {g.n} is below the minimum {spec.min_order}")
    if spec.requires_tree:
        if not g.is_tree():
            violations.append("graph is not a tree")
    elif spec.id != 4 and not g.is_connected():
        # Conjecture 4 is stated for arbitrary graphs; all others need
        # connectivity.
        violations.append("graph is not connected")
    return violations


# -- score functions ----------------------------------------------------------


def _score_1(g: Graph, polish: bool) -> Score:
    sp = inv.adjacency_spectrum(g, polish=polish)
    lam = sp.values[0]
    mu = inv.matching_number(g)
    root = math.sqrt(g.n - 1)
    value = root + 1.0 - lam - mu
    err = sp.residual_bound + _slop(root, lam, mu)
    return Score(value, None, err, {
        "n": g.n, "sqrt(n-1)": root, "lambda_1": lam, "mu": mu,
    })


def _score_2(g: Graph, polish: bool) -> Score:
    dist = inv.distance_matrix(g)
    diam = int(dist.max())
    k = (2 * diam) // 3
    if k < 1:
        return _undefined("floor(2*diameter/3) < 1")
    prox = Fraction(min(int(s) for s in dist.sum(axis=1)), g.n - 1)
    sp = inv.symmetric_spectrum(dist, descending=True, polish=polish)
    partial = sp.values[k - 1]
    value = -float(prox) - partial
    err = sp.residual_bound + _slop(float(prox), partial)
    return Score(value, None, err, {
        "n": g.n, "proximity": prox, "diameter": diam, "k": k,
        "distance_eigenvalue_k": partial,
    })


def _score_3(g: Graph, polish: bool) -> Score:
    ps = inv.peak_stats(g)
    gap = Fraction(ps.p_a, ps.m) - 1 + Fraction(ps.p_d, g.n)
    exact = abs(gap)
    return Score(float(exact), exact, 0.0, {
        "n": g.n, "p_a": ps.p_a, "m": ps.m, "p_d": ps.p_d,
    })


def _score_4(g: Graph, polish: bool) -> Score:
    if g.n < 2:
        return _undefined("lambda_2 needs at least 2 vertices")
    sp = inv.adjacency_spectrum(g, polish=polish)
    lam2 = sp.values[1]
    h = inv.harmonic(g)
    value = lam2 - float(h)
    err = sp.residual_bound + _slop(lam2, float(h))
    return Score(value, None, err, {
        "n": g.n, "lambda_2": lam2, "harmonic": h,
    })


def _score_5(g: Graph, polish: bool) -> Score:
    mz = inv.modified_second_zagreb(g)
    exact = mz - Fraction(g.n + 1, 4)
    return Score(float(exact), exact, 0.0, {
        "n": g.n, "modified_second_zagreb": mz,
    })


def _score_6(g: Graph, polish: bool) -> Score:
    gamma = inv.domination_number(g)
    if gamma == g.n:
        return _undefined("domination number equals the order")
    mz = inv.modified_second_zagreb(g)
    exact = -Fraction(gamma - 1, 2 * (g.n - gamma)) + Fraction(gamma + 1, 2) - mz
    return Score(float(exact), exact, 0.0, {
        "n": g.n, "domination_number": gamma, "modified_second_zagreb": mz,
    })


def _score_7(g: Graph, polish: bool) -> Score:
    sp = inv.adjacency_spectrum(g, polish=polish)
    lam = sp.values[0]
    prox = inv.proximity(g)
    value = lam * float(prox) - g.n + 1
    err = sp.residual_bound * float(prox) + _slop(lam * float(prox), g.n)
    return Score(value, None, err, {
        "n": g.n, "lambda_1": lam, "proximity": prox,
    })


def _cosine_bound(n: int) -> float:
    c = 1.0 - math.cos(math.pi / n)
    if n % 2 == 0:
        return n * n * c / (2.0 * (n - 1))
    return (n + 1) * c / 2.0


def _score_8(g: Graph, polish: bool) -> Score:
    sp = inv.laplacian_spectrum(g, polish=polish)
    a = sp.values[1]
    prox = inv.proximity(g)
    bound = _cosine_bound(g.n)
    value = bound - a * float(prox)
    err = sp.residual_bound * float(prox) + _slop(bound, a * float(prox))
    return Score(value, None, err, {
        "n": g.n, "cosine_bound": bound, "algebraic_connectivity": a,
        "proximity": prox,
    })


def _score_9(g: Graph, polish: bool) -> Score:
    sp = inv.adjacency_spectrum(g, polish=polish)
    lam = sp.values[0]
    alpha = inv.independence_number(g)
    root = math.sqrt(g.n - 1)
    value = root - g.n + 1.0 - lam + alpha
    err = sp.residual_bound + _slop(root, g.n, lam, alpha)
    return Score(value, None, err, {
        "n": g.n, "sqrt(n-1)": root, "lambda_1": lam, "alpha": alpha,
    })


def _score_10(g: Graph, polish: bool) -> Score:
    r = inv.randic(g)
    alpha = inv.independence_number(g)
    root = math.sqrt(g.n - 1)
    value = r + alpha - g.n + 1.0 - root
    err = _slop(r, alpha, g.n, root) + 8.0 * _MACH_EPS * g.m
    return Score(value, None, err, {
        "n": g.n, "randic": r, "alpha": alpha, "sqrt(n-1)": root,
    })


_SCORERS: dict[int, Callable[[Graph, bool], Score]] = {
    1: _score_1, 2: _score_2, 3: _score_3, 4: _score_4, 5: _score_5,
    6: _score_6, 7: _score_7, 8: _score_8, 9: _score_9, 10: _score_10,
}


def score(conjecture_id: int, g: Graph, *, polish: bool = False) -> Score:
    """Score g against a conjecture; positive means the bound is violated.

    Raises HypothesisError when g does not satisfy the conjecture's
    hypotheses. Returns a -inf sentinel score when the hypotheses hold but
    a sub-term is undefined (e.g. the distance-eigenvalue index floor(2D/3)
    vanishes on graphs of diameter 1).
    """
    spec_violations = check_hypotheses(conjecture_id, g)
    if spec_violations:
        raise HypothesisError(
            f"conjecture {conjecture_id}: " + "; ".join(spec_violations)
        )
    return _SCORERS[conjecture_id](g, polish)


def is_counterexample(conjecture_id: int, g: Graph, tau: float = 1e-9) -> bool:
    """True when g meets the hypotheses and scores strictly above tau."""
    if check_hypotheses(conjecture_id, g):
        return False
    return _SCORERS[conjecture_id](g, False).value > tau


# -- strict verification -------------------------------------------------------


def _mp_eigenvalues(matrix_rows: list[list[int]]) -> list:
    e = mp.eigsy(mp.matrix(matrix_rows), eigvals_only=True)
    return sorted(e[i] for i in range(e.rows))


def _mp_score(conjecture_id: int, g: Graph) -> "mp.mpf | None":
    """Re-evaluate a spectral score at 60 significant digits.

    Returns None when the graph is too large for the multiprecision
    eigensolver to be practical.
    """
    if g.n > MP_MAX_ORDER:
        return None
    n = g.n
    with mp.workdps(_MP_DPS):
        if conjecture_id == 1:
            lam = _mp_eigenvalues(inv.adjacency_matrix(g).tolist())[-1]
            return mp.sqrt(n - 1) + 1 - lam - inv.matching_number(g)
        if conjecture_id == 2:
            dist = inv.distance_matrix(g)
            k = (2 * int(dist.max())) // 3
            if k < 1:
                return mp.mpf("-inf")
            prox = Fraction(min(int(s) for s in dist.sum(axis=1)), n - 1)
            eigs = _mp_eigenvalues(dist.tolist())
            partial = eigs[-k]
            return -mp.mpf(prox.numerator) / prox.denominator - partial
        if conjecture_id == 4:
            if n < 2:
                return mp.mpf("-inf")
            lam2 = _mp_eigenvalues(inv.adjacency_matrix(g).tolist())[-2]
            h = inv.harmonic(g)
            return lam2 - mp.mpf(h.numerator) / h.denominator
        if conjecture_id == 7:
            lam = _mp_eigenvalues(inv.adjacency_matrix(g).tolist())[-1]
            prox = inv.proximity(g)
            return lam * mp.mpf(prox.numerator) / prox.denominator - n + 1
        if conjecture_id == 8:
            a = _mp_eigenvalues(inv.laplacian_matrix(g).tolist())[1]
            prox = inv.proximity(g)
            c = 1 - mp.cos(mp.pi / n)
            if n % 2 == 0:
                bound = n * n * c / (2 * (n - 1))
            else:
                bound = (n + 1) * c / 2
            return bound - a * mp.mpf(prox.numerator) / prox.denominator
        if conjecture_id == 9:
            lam = _mp_eigenvalues(inv.adjacency_matrix(g).tolist())[-1]
            alpha = inv.independence_number(g)
            return mp.sqrt(n - 1) - n + 1 - lam + alpha
        if conjecture_id == 10:
            r = mp.fsum(
                1 / mp.sqrt(g.degree(u) * g.degree(v)) for u, v in g.edges()
            )
            alpha = inv.independence_number(g)
            return r + alpha - n + 1 - mp.sqrt(n - 1)
    return None


def verify_strict(conjecture_id: int, g: Graph) -> Verdict:
    """Final arbiter for counterexample candidates.

    Hypotheses are re-checked; rational scores are decided by exact sign.
    Spectral scores are recomputed with tight residual bounds, and when the
    error band still straddles zero the score is re-evaluated at 60 digits,
    which resolves boundary families that are exactly zero in exact
    arithmetic. Uncertain is returned only when the graph is too large for
    that escalation.
    """
    if check_hypotheses(conjecture_id, g):
        return Verdict.REJECTED
    sc = _SCORERS[conjecture_id](g, True)
    if sc.value == NEG_INF:
        return Verdict.REJECTED
    if sc.exact is not None:
        return Verdict.CERTIFIED if sc.exact > 0 else Verdict.REJECTED
    err = sc.spectral_error_bound
    if sc.value - err > 0:
        return Verdict.CERTIFIED
    if sc.value + err < 0:
        return Verdict.REJECTED
    refined = _mp_score(conjecture_id, g)
    if refined is None:
        return Verdict.UNCERTAIN
    # Anything within 10^-45 of zero is treated as exactly zero, which a
    # counterexample must strictly exceed.
    zero_band = mp.mpf(10) ** -45
    return Verdict.CERTIFIED if refined > zero_band else Verdict.REJECTED
