"""Linear radial potential V(r) = q r at zero angular momentum.

The zeroth-order bound states are Airy functions: the n-th level lives on the
n-th negative zero z_n of Ai, with energy E0 = -(2q)^(2/3) z_n / 2 and radial
profile Ai((2q)^(1/3) r + z_n) / r up to normalization.  First-order
corrections split into a relativistic (small-component) part and a deformation
part proportional to a^2; both reduce to closed forms in z_n:

    <(E-V)^2>_++ = (1/5) (q^(4/3)/2^(2/3)) z_n^2
    <(E+V)>_--   = -(5/6) (q^(4/3)/(2^(2/3) c^2)) z_n     (positive, z_n < 0)
    E1 = -<(E+V)>_-- - 4 m a^2 <(E-V)^2>_++               (both pieces < 0)

radial_brackets_quadrature() re-derives both brackets by direct integration of
the Airy profiles and is the verification route for the closed forms; the
weights (E-V)^2 and (E+V) both act on the large-component density there.  The
strict two-spinor reduction of the small-component expectation instead weights
(E+V) by the derivative profile (d/dz [Ai(z)/(z-z_n)])^2 and does NOT reduce
to an elementary closed form; it is exposed separately as
small_bracket_derivative_form() for sensitivity studies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .airy import airy, airy_ai_zero
from .numerics import integrate

__all__ = [
    "RadialLevel",
    "RadialSpec",
    "radial_brackets_quadrature",
    "radial_level",
    "radial_wavefunction",
    "small_bracket_derivative_form",
]

_CBRT2_SQ = 2.0 ** (2.0 / 3.0)  # 2^(2/3)
_FOUR_PI = 4.0 * math.pi


@dataclass(frozen=True)
class RadialSpec:
    """Potential slope q, speed of light c, deformation a, mass m."""

    q: float = 1.0
    c: float = 1.0
    a: float = 0.0
    m: float = 1.0

    def __post_init__(self) -> None:
        if not self.q > 0.0:
            raise ValueError(f"potential slope q must be positive, got {self.q}")
        if not self.c > 0.0:
            raise ValueError(f"speed of light c must be positive, got {self.c}")
        if self.a < 0.0:
            raise ValueError(f"deformation a must be >= 0, got {self.a}")
        if not self.m > 0.0:
            raise ValueError(f"mass m must be positive, got {self.m}")


@dataclass(frozen=True)
class RadialLevel:
    """One level: Airy zero, zeroth-order energy, normalization, brackets and
    the first-order correction split into its relativistic and deformation
    parts (e1_total = e1_rel + e1_gup exactly)."""

    n: int
    z: float
    energy0: float
    alpha_norm: float
    bracket_ev2: float
    bracket_small: float
    e1_rel: float
    e1_gup: float
    e1_total: float


def radial_level(spec: RadialSpec, n: int) -> RadialLevel:
    """Closed-form level data for the n-th s-wave state (1 <= n <= 50)."""
    z = airy_ai_zero(n).z
    scale = spec.q ** (4.0 / 3.0) / _CBRT2_SQ
    energy0 = -(spec.q ** (2.0 / 3.0)) * z / 2.0 ** (1.0 / 3.0)
    alpha_norm = 1.0 / airy(z).ai_prime
    bracket_ev2 = 0.2 * scale * z * z
    bracket_small = -(5.0 / 6.0) * scale * z / (spec.c * spec.c)
    e1_rel = -bracket_small
    e1_gup = -4.0 * spec.m * spec.a * spec.a * bracket_ev2
    return RadialLevel(
        n=n,
        z=z,
        energy0=energy0,
        alpha_norm=alpha_norm,
        bracket_ev2=bracket_ev2,
        bracket_small=bracket_small,
        e1_rel=e1_rel,
        e1_gup=e1_gup,
        e1_total=e1_rel + e1_gup,
    )


def _ai_over_offset(z: float, zn: float, aip_zn: float) -> float:
    """Ai(z)/(z - z_n) with the removable point filled by a local series."""
    dz = z - zn
    if abs(dz) < 1e-4:
        # Ai about its zero: Ai' * (dz + zn dz^3/6 + dz^4/12 + zn^2 dz^5/120)
        return aip_zn * (1.0 + zn * dz * dz / 6.0 + dz**3 / 12.0 + zn * zn * dz**4 / 120.0)
    return airy(z).ai / dz


def _d_ai_over_offset(z: float, zn: float, aip_zn: float) -> float:
    """d/dz [Ai(z)/(z - z_n)]; has a first-order zero at z = z_n."""
    dz = z - zn
    if abs(dz) < 1e-3:
        # derivative of the local series above
        return aip_zn * dz * (zn / 3.0 + dz / 4.0 + zn * zn * dz * dz / 30.0 + zn * dz**3 / 24.0)
    vals = airy(z)
    return (vals.ai_prime * dz - vals.ai) / (dz * dz)


def radial_wavefunction(spec: RadialSpec, n: int, r: float) -> float:
    """Normalized 3D wavefunction of level n at radius r >= 0 (s-wave, real)."""
    if r < 0.0:
        raise ValueError(f"radius must be >= 0, got {r}")
    z_n = airy_ai_zero(n).z
    aip = airy(z_n).ai_prime
    z = (2.0 * spec.q) ** (1.0 / 3.0) * r + z_n
    prefactor = (1.0 / aip) * math.sqrt(2.0 * spec.q / _FOUR_PI)
    return prefactor * _ai_over_offset(z, z_n, aip)


def _tail_bound_poly_airy_sq(t: float, poly, t_min: float) -> float:
    """Upper bound on int_T^inf poly(z) Ai(z)^2 dz for slowly growing poly.

    Uses Ai(z) <= e^{-xi}/(2 sqrt(pi) z^(1/4)) and d(ln poly)/dz <= 1 on
    [t_min, inf); returns inf below t_min so truncation keeps searching.
    """
    if t < t_min:
        return math.inf
    xi2 = (4.0 / 3.0) * t**1.5
    return 2.0 * poly(t) * math.exp(-xi2) / (4.0 * math.pi * math.sqrt(t) * (2.0 * math.sqrt(t) - 1.0))


def radial_brackets_quadrature(
    spec: RadialSpec, n: int, tol: float = 1e-11
) -> tuple[float, float]:
    """Both first-order brackets by direct quadrature of the Airy profiles.

    Returns (bracket_ev2, bracket_small) from the large-component-density
    integrals

        bracket_ev2   = alpha^2 (q^(4/3)/2^(2/3))      int z^2 Ai(z)^2 dz
        bracket_small = alpha^2 (q^(4/3)/(2^(2/3)c^2)) int (z/2 - z_n) Ai(z)^2 dz

    over [z_n, inf); these reproduce the closed forms of radial_level to well
    within 1e-8 relative and are the verification route for them.
    """
    z_n = airy_ai_zero(n).z
    aip = airy(z_n).ai_prime
    alpha_sq = 1.0 / (aip * aip)
    scale = spec.q ** (4.0 / 3.0) / _CBRT2_SQ

    i_ev2 = integrate(
        lambda z: z * z * airy(z).ai ** 2,
        z_n,
        math.inf,
        tol,
        tail_bound=lambda t: _tail_bound_poly_airy_sq(t, lambda z: z * z, 2.0),
    )
    bracket_ev2 = alpha_sq * scale * i_ev2.value

    zn_abs = abs(z_n)
    i_small = integrate(
        lambda z: (0.5 * z - z_n) * airy(z).ai ** 2,
        z_n,
        math.inf,
        tol,
        tail_bound=lambda t: _tail_bound_poly_airy_sq(
            t, lambda z: 0.5 * z + zn_abs, 2.0
        ),
    )
    bracket_small = alpha_sq * (scale / (spec.c * spec.c)) * i_small.value
    return bracket_ev2, bracket_small


def small_bracket_derivative_form(
    spec: RadialSpec, n: int, tol: float = 1e-11
) -> float:
    """Small-component expectation from the strict two-spinor reduction.

    Evaluates alpha^2 (q^(4/3)/(2^(2/3)c^2)) int (z/2 - z_n) (z - z_n)^2
    (d/dz [Ai(z)/(z - z_n)])^2 dz, i.e. the (E+V) weight on the derivative
    profile that the lower spinor actually carries.  This has no elementary
    closed form and differs from bracket_small (which weights the
    large-component density) by an O(1) factor; radial_level deliberately
    tabulates the latter, so this function exists for sensitivity analysis.
    Cross-check: the same number follows from the operator identity
    (1/2c^2)(E^2 - <V^2>) + (1/(8c^2)) <laplacian V>.
    """
    z_n = airy_ai_zero(n).z
    aip = airy(z_n).ai_prime
    alpha_sq = 1.0 / (aip * aip)
    scale = spec.q ** (4.0 / 3.0) / _CBRT2_SQ
    zn_abs = abs(z_n)

    def integrand(z: float) -> float:
        g = _d_ai_over_offset(z, z_n, aip)
        dz = z - z_n
        return (0.5 * z - z_n) * dz * dz * g * g

    def tail(t: float) -> float:
        # |d/dz Ai/(z-z_n)| <= |Ai'| + Ai/(z-z_n) <= 2 z^(1/4) e^{-xi}/(2 sqrt(pi))
        if t < 4.0:
            return math.inf
        poly = (0.5 * t + zn_abs) * (t + zn_abs) ** 2 * math.sqrt(t) / math.pi
        xi2 = (4.0 / 3.0) * t**1.5
        return 2.0 * poly * math.exp(-xi2) / (2.0 * math.sqrt(t) - 1.0)

    i_val = integrate(integrand, z_n, math.inf, tol, tail_bound=tail)
    return alpha_sq * (scale / (spec.c * spec.c)) * i_val.value
