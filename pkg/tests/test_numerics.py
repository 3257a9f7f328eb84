"""Quadrature and root-finder tests."""

import math

import numpy as np
import pytest

from gupdirac.airy import airy, airy_ai, airy_ai_zero
from gupdirac.numerics import (
    Bracket,
    InvalidBracketError,
    NonConvergenceError,
    find_root,
    integrate,
)
from gupdirac.triangular import _matching_residual


def test_polynomial_example():
    result = integrate(lambda x: 3.0 * x * x, 0.0, 1.0, 1e-12)
    assert result.value == pytest.approx(1.0, abs=1e-12)
    assert result.error_estimate >= 0.0
    assert result.evaluations >= 15


def test_polynomial_exactness_up_to_rule_degree():
    # the 15-point Kronrod rule integrates polynomials up to degree 22 exactly,
    # so polynomial values are reproduced to rounding regardless of splitting;
    # the tolerance is scaled to the polynomial's own magnitude
    rng = np.random.default_rng(7)
    for _ in range(20):
        degree = int(rng.integers(0, 16))
        coeffs = rng.uniform(-2.0, 2.0, degree + 1)
        a, b = sorted(rng.uniform(-3.0, 3.0, 2))
        if b - a < 0.5:
            b = a + 0.5
        exact = sum(
            c / (k + 1) * (b ** (k + 1) - a ** (k + 1)) for k, c in enumerate(coeffs)
        )
        scale = sum(
            abs(c) * max(abs(a), abs(b)) ** (k + 1) / (k + 1) for k, c in enumerate(coeffs)
        ) + 1.0
        got = integrate(lambda x: float(np.polyval(coeffs[::-1], x)), a, b, 1e-12 * scale)
        assert got.value == pytest.approx(exact, abs=1e-12 * scale)


def test_interval_additivity():
    f = math.cos
    whole = integrate(f, 0.0, 2.3, 1e-12)
    left = integrate(f, 0.0, 0.9, 1e-12)
    right = integrate(f, 0.9, 2.3, 1e-12)
    assert left.value + right.value == pytest.approx(
        whole.value, abs=left.error_estimate + right.error_estimate + whole.error_estimate + 1e-14
    )


def test_exponential_semi_infinite_both_modes():
    heuristic = integrate(lambda x: math.exp(-x), 0.0, math.inf, 1e-10)
    assert heuristic.value == pytest.approx(1.0, abs=1e-10)
    bounded = integrate(
        lambda x: math.exp(-x), 0.0, math.inf, 1e-10, tail_bound=lambda t: math.exp(-t)
    )
    assert bounded.value == pytest.approx(1.0, abs=1e-10)


def test_airy_square_integral_identity():
    # int_{z_1}^inf Ai^2 = [Ai'(z_1)]^2 ~ 0.491697 = 0.701211^2
    z1 = airy_ai_zero(1).z
    aip = airy(z1).ai_prime
    assert aip == pytest.approx(0.701211, abs=5e-7)

    def tail(t: float) -> float:
        if t < 2.0:
            return math.inf
        xi2 = (4.0 / 3.0) * t**1.5
        return math.exp(-xi2) / (2.0 * math.pi * math.sqrt(t) * (2.0 * math.sqrt(t) - 1.0))

    result = integrate(lambda z: airy_ai(z) ** 2, z1, math.inf, 1e-11, tail_bound=tail)
    assert result.value == pytest.approx(aip * aip, rel=1e-9)
    assert result.value == pytest.approx(0.491697, abs=5e-7)


def test_non_convergence_carries_partial_result():
    with pytest.raises(NonConvergenceError) as excinfo:
        integrate(lambda x: math.sin(50.0 * x), 0.0, 20.0, 1e-14, max_intervals=4)
    partial = excinfo.value.partial
    assert partial is not None
    assert partial.evaluations > 0


def test_invalid_range_rejected():
    with pytest.raises(ValueError):
        integrate(math.exp, 1.0, 0.5, 1e-8)
    with pytest.raises(ValueError):
        integrate(math.exp, 0.0, 1.0, -1e-8)
    with pytest.raises(ValueError):
        integrate(math.exp, -math.inf, 0.0, 1e-8)


def test_root_sqrt2():
    root = find_root(lambda x: x * x - 2.0, Bracket(1.0, 2.0), tol=1e-13)
    assert root == pytest.approx(math.sqrt(2.0), abs=1e-12)


def test_root_airy_zero_matches_dedicated_solver():
    root = find_root(airy_ai, (-3.0, -2.0), tol=1e-14)
    assert root == pytest.approx(airy_ai_zero(1).z, abs=1e-12)


def test_root_triangular_matching_residual():
    # reference ground-state root of the v0=1 even well: zeta0 = -0.826181
    root = find_root(lambda z: _matching_residual(z, 1.0, "even"), (-1.0 + 1e-9, -0.01), tol=1e-13)
    assert root == pytest.approx(-0.826181, abs=1e-6)


def test_root_never_leaves_bracket():
    rng = np.random.default_rng(11)
    for _ in range(25):
        target = float(rng.uniform(-0.9, 0.9))
        root = find_root(
            lambda x: (x - target) * (x * x + 1.0), Bracket(-2.0, 2.0), tol=1e-13
        )
        assert -2.0 <= root <= 2.0
        assert root == pytest.approx(target, abs=1e-11)


def test_root_endpoint_zero_returned():
    assert find_root(lambda x: x, Bracket(0.0, 1.0)) == 0.0


def test_invalid_bracket():
    with pytest.raises(InvalidBracketError):
        find_root(lambda x: x * x + 1.0, Bracket(0.0, 1.0))
    with pytest.raises(ValueError):
        Bracket(2.0, 1.0)
