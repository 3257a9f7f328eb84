"""Deformed phase-space algebra: commutator polynomial, momentum inversion,
uncertainty saturation and the minimal length scale.

Parameters (a, b) deform the momentum operator as P_i = p_i (1 - a p + b p^2);
both carry inverse-momentum units (a) and inverse-momentum-squared units (b)
and are treated as small.  The 1D commutator becomes
[X, P] = i hbar (1 - 2 a P + (3b - 2a^2) P^2), which saturates the uncertainty
product at a finite minimal position spread once 3b - 2a^2 > 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "GupParams",
    "NoMinimumError",
    "commutator_poly_1d",
    "generalized_momentum",
    "invert_momentum",
    "minimal_length",
    "saturation_momentum",
    "saturation_curve",
]


class NoMinimumError(ValueError):
    """The saturation curve has no interior minimum (3b - 2a^2 <= 0)."""


@dataclass(frozen=True)
class GupParams:
    """Deformation constants of the generalized momentum, with hbar."""

    a: float = 0.0
    b: float = 0.0
    hbar: float = 1.0

    def __post_init__(self) -> None:
        if self.a < 0.0 or self.b < 0.0:
            raise ValueError(f"deformation constants must be >= 0, got a={self.a}, b={self.b}")
        if not self.hbar > 0.0:
            raise ValueError(f"hbar must be positive, got {self.hbar}")


def commutator_poly_1d(params: GupParams) -> tuple[float, float, float]:
    """Coefficients (c0, c1, c2) of [X, P] = i hbar (c0 + c1 P + c2 P^2) in 1D.

    Exact polynomials in (a, b): (1, -2a, 3b - 2a^2).
    """
    a, b = params.a, params.b
    return (1.0, -2.0 * a, 3.0 * b - 2.0 * a * a)


def generalized_momentum(
    params: GupParams, p: Sequence[float]
) -> tuple[float, float, float]:
    """Map a standard momentum 3-vector p to P_i = p_i (1 - a|p| + b|p|^2)."""
    px, py, pz = (float(v) for v in p)
    norm = math.sqrt(px * px + py * py + pz * pz)
    factor = 1.0 - params.a * norm + params.b * norm * norm
    return (px * factor, py * factor, pz * factor)


def invert_momentum(params: GupParams, big_p: float) -> float:
    """Standard momentum recovered from a 1D generalized momentum.

    Series inversion to linear order in b and quadratic order in a:
    p = P (1 + a P + (2a^2 - b) P^2).  Valid in the perturbative regime
    |a P| << 1; no hard check is made.
    """
    a, b = params.a, params.b
    return big_p * (1.0 + a * big_p + (2.0 * a * a - b) * big_p * big_p)


def saturation_curve(params: GupParams, dp: float) -> float:
    """Position spread on the saturated uncertainty relation.

    dX(dP) = (hbar/2) (1/dP - 2a + (3b - 2a^2) dP), for dP > 0.
    """
    if not dp > 0.0:
        raise ValueError(f"momentum spread must be positive, got {dp}")
    a, b = params.a, params.b
    return 0.5 * params.hbar * (1.0 / dp - 2.0 * a + (3.0 * b - 2.0 * a * a) * dp)


def saturation_momentum(params: GupParams) -> float:
    """Momentum spread (dP)_ext = (3b - 2a^2)^(-1/2) minimizing the curve."""
    disc = 3.0 * params.b - 2.0 * params.a * params.a
    if disc <= 0.0:
        raise NoMinimumError(
            f"no interior minimum: 3b - 2a^2 = {disc:g} is not positive"
        )
    return 1.0 / math.sqrt(disc)


def minimal_length(params: GupParams) -> float:
    """Minimal position spread hbar (sqrt(3b - 2a^2) - a).

    Requires 3b - 2a^2 > 0 (NoMinimumError otherwise); the value is
    non-negative exactly when b >= a^2.
    """
    disc = 3.0 * params.b - 2.0 * params.a * params.a
    if disc <= 0.0:
        raise NoMinimumError(
            f"no interior minimum: 3b - 2a^2 = {disc:g} is not positive"
        )
    return params.hbar * (math.sqrt(disc) - params.a)
