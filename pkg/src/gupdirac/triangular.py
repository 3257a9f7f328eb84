"""Triangular well along z: bound states, brackets and first-order corrections.

Everything is dimensionless with hbar = m = L = 1: the well is
v(z) = v0 (|z| - 1) on |z| < 1 and 0 outside, energies are eps = 2 E, and the
interior solution is an Airy combination c_a Ai(zeta) + c_b Bi(zeta) in
zeta = v0^(1/3) (|z| - 1 - eps/v0).  Matching the exterior exponential
c exp(-sqrt(-eps) z) at z = 1 together with the parity condition at z = 0
(psi'(0) = 0 even, psi(0) = 0 odd) gives one transcendental equation for
zeta0 = zeta(0); the bound window is -v0^(1/3) < zeta0 < 0.

The matching residual is evaluated in cleared-denominator form

    F(zeta0) = [Ai'(zeta_L) - alpha Ai(zeta_L)] D(zeta0)
             - [Bi'(zeta_L) - alpha Bi(zeta_L)] N(zeta0),

(N, D) = (Ai', Bi') for even parity and (Ai, Bi) for odd, with
alpha = -sqrt(zeta_L); F is pole-free and every zero is a genuine bound state
of the requested parity, so the ground state is simply the root with the
largest zeta0 (lowest eps).

First-order corrections are assembled from three expectation integrals
(brackets) of the normalized state; see well_first_order for the two
prefactor conventions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .airy import airy
from .numerics import Bracket, NonConvergenceError, find_root, integrate

__all__ = [
    "BracketSet",
    "FirstOrderTerms",
    "NoBoundStateError",
    "Table1Row",
    "WellSpec",
    "WellState",
    "solve_well",
    "table1",
    "well_brackets",
    "well_first_order",
    "well_first_order_terms",
    "well_wavefunction",
    "well_wavefunction_derivative",
]

_PARITIES = ("even", "odd")
_CONVENTIONS = ("scaled", "energy")


class NoBoundStateError(RuntimeError):
    """No bound state of the requested parity exists in the well."""


@dataclass(frozen=True)
class WellSpec:
    """Well depth v0 = 2 V0 (dimensionless), parity, and correction inputs.

    px, py are transverse box-mode momenta (n pi / L_x etc.); they only enter
    the first-order correction through E_perp = (px^2 + py^2)/2.
    """

    v0: float
    parity: str = "even"
    c: float = 1.0
    a: float = 0.0
    px: float = 0.0
    py: float = 0.0
    lx: float = 1.0
    ly: float = 1.0

    def __post_init__(self) -> None:
        if not self.v0 > 0.0:
            raise ValueError(f"well depth v0 must be positive, got {self.v0}")
        if self.parity not in _PARITIES:
            raise ValueError(f"parity must be one of {_PARITIES}, got {self.parity!r}")
        if not self.c > 0.0:
            raise ValueError(f"speed of light c must be positive, got {self.c}")
        if self.a < 0.0:
            raise ValueError(f"deformation a must be >= 0, got {self.a}")
        if not (self.lx > 0.0 and self.ly > 0.0):
            raise ValueError("box widths lx, ly must be positive")

    @classmethod
    def with_box_modes(cls, v0: float, nx: int, ny: int, lx: float, ly: float, **kw) -> "WellSpec":
        """Spec with px = nx pi / lx, py = ny pi / ly from the box mode numbers."""
        if nx < 1 or ny < 1:
            raise ValueError("box mode numbers must be >= 1")
        return cls(v0=v0, px=nx * math.pi / lx, py=ny * math.pi / ly, lx=lx, ly=ly, **kw)


@dataclass(frozen=True)
class WellState:
    """Solved bound state: matching root, energy and coefficients.

    zeta_l = zeta0 + v0^(1/3), alpha_match = -sqrt(zeta_l),
    eps_par = -v0 - zeta0 v0^(2/3) (exact), and the interior/exterior
    coefficients are normalized so the full line integral of psi^2 is 1.
    """

    zeta0: float
    zeta_l: float
    alpha_match: float
    eps_par: float
    c_a: float
    c_b: float
    c_out: float


@dataclass(frozen=True)
class BracketSet:
    """The three expectation integrals of the solved state.

    emv_pp  = int (eps - v) psi^2 dz          (large-component density)
    emv2_pp = int (eps - v)^2 psi^2 dz
    epv_mm  = int (eps + v) (dpsi/dz)^2 dz    (small-component density, < 0)
    """

    emv_pp: float
    emv2_pp: float
    epv_mm: float


@dataclass(frozen=True)
class FirstOrderTerms:
    """First-order correction split into its five contributions.

    relativistic + deformation survive at zero transverse momentum; the three
    transverse terms carry E_perp.  small_norm_z and small_norm_perp are the
    two parts of the lower-spinor norm (1/4c^2) [int (dpsi)^2 + (px^2+py^2)],
    reported separately; their sum enters transverse_norm.
    """

    total: float
    relativistic: float
    deformation: float
    transverse_coupling: float
    transverse_norm: float
    transverse_quadratic: float
    small_norm_z: float
    small_norm_perp: float
    e_perp: float


def _parity_pair(vals, parity: str) -> tuple[float, float]:
    """(N, D) of the parity constraint at zeta0: c_b/c_a = -N/D."""
    if parity == "even":
        return vals.ai_prime, vals.bi_prime
    return vals.ai, vals.bi


def _matching_residual(zeta0: float, v13: float, parity: str) -> float:
    zl = zeta0 + v13
    if zl <= 0.0:
        raise ValueError("zeta_l must be positive inside the bound window")
    alpha = -math.sqrt(zl)
    at0 = airy(zeta0)
    atl = airy(zl)
    n0, d0 = _parity_pair(at0, parity)
    return (atl.ai_prime - alpha * atl.ai) * d0 - (atl.bi_prime - alpha * atl.bi) * n0


def _zeta_of(z_abs: float, v13: float, eps: float, v0: float) -> float:
    return v13 * (z_abs - 1.0 - eps / v0)


def solve_well(spec: WellSpec, *, quad_tol: float = 1e-12, scan_points: int = 200) -> WellState:
    """Ground state of the requested parity.

    Scans the cleared-denominator matching residual on the bound window
    (-v0^(1/3), 0), refines every sign change by Brent, and keeps the root
    with the largest zeta0 (the lowest longitudinal energy).  Raises
    NoBoundStateError when the window holds no root (odd parity in a shallow
    well) and NonConvergenceError for wells too deep for double precision
    (v0 beyond ~1e3, where the growing Airy branch swamps the coefficients).
    """
    v13 = spec.v0 ** (1.0 / 3.0)
    delta = 1e-6
    lo = -v13 + delta
    hi = -delta
    if lo >= hi:
        raise NoBoundStateError(f"bound window for v0={spec.v0:g} is empty")

    def f(z0: float) -> float:
        return _matching_residual(z0, v13, spec.parity)

    step = (hi - lo) / (scan_points - 1)
    roots: list[float] = []
    prev_x = lo
    prev_f = f(lo)
    for i in range(1, scan_points):
        x = lo + i * step
        fx = f(x)
        if prev_f == 0.0:
            roots.append(prev_x)
        elif (prev_f > 0.0) != (fx > 0.0):
            roots.append(find_root(f, Bracket(prev_x, x), tol=1e-14))
        prev_x, prev_f = x, fx
    if prev_f == 0.0:
        roots.append(prev_x)
    if not roots:
        raise NoBoundStateError(
            f"no {spec.parity}-parity bound state for v0={spec.v0:g}"
        )
    zeta0 = max(roots)  # ground state: largest zeta0 <=> lowest eps_par
    return _state_from_root(spec, zeta0, quad_tol)


def _state_from_root(spec: WellSpec, zeta0: float, quad_tol: float) -> WellState:
    v13 = spec.v0 ** (1.0 / 3.0)
    zl = zeta0 + v13
    eps = -spec.v0 - zeta0 * spec.v0 ** (2.0 / 3.0)
    kappa = math.sqrt(-eps)
    at0 = airy(zeta0)
    n0, d0 = _parity_pair(at0, spec.parity)
    # The decaying interior branch needs the coefficient ratio N/D to an
    # accuracy ~1/Bi(zeta_l); the root only pins N to ~eps_machine, so for
    # very deep wells rounding noise rides the growing Bi branch and corrupts
    # the state.  Refuse rather than return garbage (limit is v0 ~ 1e3).
    growth = airy(zl).bi
    if 8e-16 * growth > 1e-6 * abs(d0):
        raise NonConvergenceError(
            f"well too deep for double-precision coefficient matching "
            f"(v0={spec.v0:g}): the growing Airy branch at the edge is "
            f"{growth:.2e} times the interior scale"
        )

    # unnormalized parity solution u = D Ai - N Bi (u'(zeta0)=0 even, u(zeta0)=0 odd)
    def u_of_zeta(zeta: float) -> float:
        vals = airy(zeta)
        return d0 * vals.ai - n0 * vals.bi

    def u_of_z(z: float) -> float:
        return u_of_zeta(_zeta_of(z, v13, eps, spec.v0))

    interior = integrate(lambda z: u_of_z(z) ** 2, 0.0, 1.0, quad_tol)
    u1 = u_of_zeta(zl)
    total = 2.0 * (interior.value + u1 * u1 / (2.0 * kappa))
    scale = math.copysign(1.0 / math.sqrt(total), d0)
    return WellState(
        zeta0=zeta0,
        zeta_l=zl,
        alpha_match=-math.sqrt(zl),
        eps_par=eps,
        c_a=scale * d0,
        c_b=-scale * n0,
        c_out=scale * u1 * math.exp(kappa),
    )


def well_wavefunction(state: WellState, spec: WellSpec, z: float) -> float:
    """Normalized bound-state wavefunction at any real z."""
    x = abs(z)
    v13 = spec.v0 ** (1.0 / 3.0)
    if x <= 1.0:
        vals = airy(_zeta_of(x, v13, state.eps_par, spec.v0))
        val = state.c_a * vals.ai + state.c_b * vals.bi
    else:
        val = state.c_out * math.exp(-math.sqrt(-state.eps_par) * x)
    if spec.parity == "odd" and z < 0.0:
        return -val
    return val


def well_wavefunction_derivative(state: WellState, spec: WellSpec, z: float) -> float:
    """d psi / dz at any real z (C^1 across |z| = 1 by construction)."""
    x = abs(z)
    v13 = spec.v0 ** (1.0 / 3.0)
    if x <= 1.0:
        vals = airy(_zeta_of(x, v13, state.eps_par, spec.v0))
        half_deriv = v13 * (state.c_a * vals.ai_prime + state.c_b * vals.bi_prime)
    else:
        kappa = math.sqrt(-state.eps_par)
        half_deriv = -kappa * state.c_out * math.exp(-kappa * x)
    if spec.parity == "even":
        return half_deriv if z >= 0.0 else -half_deriv
    return half_deriv


def _exterior_tail(weight: float, state: WellState) -> Callable[[float], float]:
    kappa = math.sqrt(-state.eps_par)
    c2 = state.c_out * state.c_out

    def tail(t: float) -> float:
        return 1.5 * abs(weight) * c2 * math.exp(-2.0 * kappa * t) / (2.0 * kappa)

    return tail


def well_brackets(state: WellState, spec: WellSpec, tol: float = 1e-10) -> BracketSet:
    """The three first-order brackets by piecewise quadrature.

    Integrands are even in z, so each bracket is 2x the [0, 1] interior piece
    (where v = v0 (z-1)) plus 2x the exterior piece against the exponential
    envelope.  tol is applied relative to each bracket's natural magnitude
    (powers of max(1, v0)), so deep wells converge just as well as shallow
    ones.
    """
    eps = state.eps_par
    v0 = spec.v0
    kappa = math.sqrt(-eps)
    scale = max(1.0, v0)  # bounds |eps - v| and |eps + v| on the support

    def psi(z: float) -> float:
        return well_wavefunction(state, spec, z)

    def dpsi(z: float) -> float:
        return well_wavefunction_derivative(state, spec, z)

    def v_in(z: float) -> float:
        return v0 * (z - 1.0)

    tol_emv = tol * scale
    tol_emv2 = tol * scale * scale
    tol_epv = tol * 2.0 * scale * scale  # (dpsi)^2 integrates to a ~v0 scale

    emv_in = integrate(lambda z: (eps - v_in(z)) * psi(z) ** 2, 0.0, 1.0, tol_emv)
    emv2_in = integrate(lambda z: (eps - v_in(z)) ** 2 * psi(z) ** 2, 0.0, 1.0, tol_emv2)
    epv_in = integrate(lambda z: (eps + v_in(z)) * dpsi(z) ** 2, 0.0, 1.0, tol_epv)

    emv_out = integrate(
        lambda z: eps * psi(z) ** 2, 1.0, math.inf, tol_emv,
        tail_bound=_exterior_tail(eps, state),
    )
    emv2_out = integrate(
        lambda z: eps * eps * psi(z) ** 2, 1.0, math.inf, tol_emv2,
        tail_bound=_exterior_tail(eps * eps, state),
    )
    epv_out = integrate(
        lambda z: eps * dpsi(z) ** 2, 1.0, math.inf, tol_epv,
        tail_bound=_exterior_tail(eps * kappa * kappa, state),
    )
    return BracketSet(
        emv_pp=2.0 * (emv_in.value + emv_out.value),
        emv2_pp=2.0 * (emv2_in.value + emv2_out.value),
        epv_mm=2.0 * (epv_in.value + epv_out.value),
    )


def _small_norm_z(state: WellState, spec: WellSpec, tol: float) -> float:
    """int (dpsi/dz)^2 over the full line."""
    kappa = math.sqrt(-state.eps_par)
    tol_kin = tol * max(1.0, spec.v0)

    def dpsi(z: float) -> float:
        return well_wavefunction_derivative(state, spec, z)

    inner = integrate(lambda z: dpsi(z) ** 2, 0.0, 1.0, tol_kin)
    outer = integrate(
        lambda z: dpsi(z) ** 2, 1.0, math.inf, tol_kin,
        tail_bound=_exterior_tail(kappa * kappa, state),
    )
    return 2.0 * (inner.value + outer.value)


def well_first_order_terms(
    state: WellState,
    spec: WellSpec,
    brackets: BracketSet | None = None,
    *,
    convention: str = "scaled",
    tol: float = 1e-10,
) -> FirstOrderTerms:
    """First-order correction with its full term breakdown.

    Two prefactor conventions are supported; they differ by an overall
    factor 2 (the dimensionless-energy vs plain-energy bookkeeping):

    * "scaled" (default): E1 = -(1/(4c^2)) <eps+v>_-- - 2 a^2 <(eps-v)^2>_++
      at zero transverse momentum; this is the convention of the reference
      ground-state table.
    * "energy": the direct two-spinor reduction, exactly half of "scaled":
      E1 = -(1/(8c^2)) <eps+v>_-- - a^2 <(eps-v)^2>_++.

    With transverse box modes on (E_perp = (px^2 + py^2)/2 > 0), three more
    terms enter: -8 m a^2 E_perp <E-V> coupling, -E_perp times the
    lower-spinor norm, and -4 m a^2 E_perp^2; the lower-spinor norm includes
    both the z-derivative part and the transverse part (reported separately).
    """
    if convention not in _CONVENTIONS:
        raise ValueError(f"convention must be one of {_CONVENTIONS}, got {convention!r}")
    if brackets is None:
        brackets = well_brackets(state, spec, tol)
    factor = 2.0 if convention == "scaled" else 1.0
    c2 = spec.c * spec.c
    a2 = spec.a * spec.a
    e_perp = 0.5 * (spec.px * spec.px + spec.py * spec.py)

    relativistic = -factor * brackets.epv_mm / (8.0 * c2)
    deformation = -factor * a2 * brackets.emv2_pp
    if e_perp == 0.0:
        small_norm_z = small_norm_perp = 0.0
        transverse_coupling = transverse_norm = transverse_quadratic = 0.0
    else:
        small_norm_z = _small_norm_z(state, spec, tol) / (4.0 * c2)
        small_norm_perp = (spec.px * spec.px + spec.py * spec.py) / (4.0 * c2)
        transverse_coupling = -factor * 4.0 * a2 * e_perp * brackets.emv_pp
        transverse_norm = -factor * e_perp * (small_norm_z + small_norm_perp)
        transverse_quadratic = -factor * 4.0 * a2 * e_perp * e_perp
    total = (
        relativistic
        + deformation
        + transverse_coupling
        + transverse_norm
        + transverse_quadratic
    )
    return FirstOrderTerms(
        total=total,
        relativistic=relativistic,
        deformation=deformation,
        transverse_coupling=transverse_coupling,
        transverse_norm=transverse_norm,
        transverse_quadratic=transverse_quadratic,
        small_norm_z=small_norm_z,
        small_norm_perp=small_norm_perp,
        e_perp=e_perp,
    )


def well_first_order(
    state: WellState,
    spec: WellSpec,
    brackets: BracketSet | None = None,
    *,
    convention: str = "scaled",
    tol: float = 1e-10,
) -> float:
    """First-order energy correction (see well_first_order_terms)."""
    return well_first_order_terms(
        state, spec, brackets, convention=convention, tol=tol
    ).total


@dataclass(frozen=True)
class Table1Row:
    """One ground-state row: well depth, solved state and brackets.

    error is None on success; on failure it carries the message and the
    numeric fields are nan.
    """

    v0: float
    zeta0: float
    eps_par: float
    c_a: float
    c_b: float
    c_out: float
    emv_pp: float
    emv2_pp: float
    epv_mm: float
    error: str | None = None


def table1(
    v0_list: list[float],
    *,
    parity: str = "even",
    c: float = 1.0,
    a: float = 0.0,
    tol: float = 1e-10,
) -> list[Table1Row]:
    """Ground-state rows for each requested depth, in input order.

    A failing depth produces a row with error set; remaining rows are still
    computed.
    """
    rows: list[Table1Row] = []
    for v0 in v0_list:
        try:
            spec = WellSpec(v0=v0, parity=parity, c=c, a=a)
            state = solve_well(spec)
            br = well_brackets(state, spec, tol)
            rows.append(
                Table1Row(
                    v0=v0,
                    zeta0=state.zeta0,
                    eps_par=state.eps_par,
                    c_a=state.c_a,
                    c_b=state.c_b,
                    c_out=state.c_out,
                    emv_pp=br.emv_pp,
                    emv2_pp=br.emv2_pp,
                    epv_mm=br.epv_mm,
                )
            )
        except (ValueError, NoBoundStateError, RuntimeError) as exc:
            nan = math.nan
            rows.append(
                Table1Row(
                    v0=v0, zeta0=nan, eps_par=nan, c_a=nan, c_b=nan, c_out=nan,
                    emv_pp=nan, emv2_pp=nan, epv_mm=nan, error=str(exc),
                )
            )
    return rows
