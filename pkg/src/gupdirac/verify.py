"""Acceptance battery: every release criterion as a programmatic check.

Each check returns a CheckResult; run_battery() prints one PASS/FAIL line per
criterion and returns False if any failed.  The CLI `verify` subcommand and
the acceptance test module are both thin wrappers around these functions, so
tolerances live in exactly one place.
"""

from __future__ import annotations

import math
import sys
import time
import warnings
from dataclasses import dataclass, field
from typing import Callable, TextIO

import numpy as np

from .airy import airy, airy_ai, airy_ai_zero, airy_zero_estimate
from .gup import GupParams, minimal_length, saturation_curve, saturation_momentum
from .numerics import integrate
from .radial import RadialSpec, radial_brackets_quadrature, radial_level
from .schrodinger import Grid1D, fd_spectrum
from .triangular import WellSpec, solve_well, table1, well_first_order_terms

__all__ = ["CheckResult", "REFERENCE_TABLE1", "all_checks", "run_battery"]

# Published ground-state reference values for the triangular well, even parity:
# (v0, zeta0, eps, c_a, c_b, c, <eps-v>_++, <(eps-v)^2>_++, <eps+v>_--).
# Carried to the 6 significant figures of the source.
REFERENCE_TABLE1: tuple[tuple[float, ...], ...] = (
    (1.0, -0.826181, -0.173819, 1.02392, 0.170583, 0.661594, 0.123379, 0.132641, -0.0364646),
    (2.0, -0.918052, -0.542683, 1.30148, 0.116604, 0.918542, 0.3108, 0.578932, -0.290765),
    (3.0, -0.956877, -1.00962, 1.46048, 0.0813997, 1.12559, 0.494445, 1.24057, -0.869706),
    (4.0, -0.977389, -1.53713, 1.56976, 0.0588883, 1.3129, 0.665659, 2.04381, -1.79791),
    (5.0, -0.98958, -2.10645, 1.65245, 0.0439097, 1.4908, 0.824469, 2.94726, -3.07349),
    (6.0, -0.997388, -2.7067, 1.71884, 0.033551, 1.66409, 0.972408, 3.92678, -4.68648),
    (7.0, -1.00266, -3.33096, 1.77433, 0.0261487, 1.83537, 1.1111, 4.96745, -6.62507),
    (8.0, -1.00636, -3.97456, 1.82204, 0.0207187, 2.00625, 1.24194, 6.05954, -8.87749),
    (9.0, -1.00904, -4.63414, 1.86397, 0.0166413, 2.17775, 1.3661, 7.19637, -11.4331),
    (10.0, -1.01103, -5.30723, 1.90142, 0.0135208, 2.35058, 1.48452, 8.37319, -14.2822),
)

_TABLE1_COLUMNS = ("zeta0", "eps", "c_a", "c_b", "c", "emv_pp", "emv2_pp", "epv_mm")


@dataclass
class CheckResult:
    criterion: int
    name: str
    passed: bool
    seconds: float
    details: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  criterion {self.criterion}: {self.name}  ({self.seconds:.2f}s)"


def _rel(got: float, expected: float) -> float:
    return abs(got - expected) / abs(expected)


def check_table1_regression() -> CheckResult:
    """Criterion 1: all nine ground-state columns match the reference table to
    5 significant figures (rel 2e-5; 1e-4 for the derivative-based epv_mm
    column), for v0 = 1..10 even parity, in under 5 s."""
    start = time.perf_counter()
    rows = table1([float(v) for v in range(1, 11)])
    seconds = time.perf_counter() - start
    details: list[str] = []
    for row, ref in zip(rows, REFERENCE_TABLE1):
        if row.error is not None:
            details.append(f"v0={ref[0]:g}: solver error: {row.error}")
            continue
        got = (row.zeta0, row.eps_par, row.c_a, row.c_b, row.c_out,
               row.emv_pp, row.emv2_pp, row.epv_mm)
        for col, g, e in zip(_TABLE1_COLUMNS, got, ref[1:]):
            tol = 1e-4 if col == "epv_mm" else 2e-5
            r = _rel(g, e)
            if r > tol:
                details.append(
                    f"v0={ref[0]:g} {col}: got {g:.8g}, reference {e:.8g}, "
                    f"rel {r:.2e} > {tol:g}"
                )
    if seconds >= 5.0:
        details.append(f"runtime {seconds:.2f}s exceeds 5 s")
    return CheckResult(1, "reference table regression (9 columns, v0=1..10)",
                       not details, seconds, details)


def _airy_sq_tail(t: float, poly: Callable[[float], float]) -> float:
    if t < 2.0:
        return math.inf
    return (
        2.0 * poly(t) * math.exp(-(4.0 / 3.0) * t**1.5)
        / (4.0 * math.pi * math.sqrt(t) * (2.0 * math.sqrt(t) - 1.0))
    )


def check_airy_integral_identities() -> CheckResult:
    """Criterion 2: for n = 1..10 quadrature reproduces the three Airy
    integral identities behind the level normalization and both brackets,
    at 1e-9 / 1e-8 / 1e-7 relative, in under 2 s."""
    start = time.perf_counter()
    details: list[str] = []
    for n in range(1, 11):
        zn = airy_ai_zero(n).z
        aip_sq = airy(zn).ai_prime ** 2
        norm = integrate(
            lambda z: airy_ai(z) ** 2, zn, math.inf, 1e-11,
            tail_bound=lambda t: _airy_sq_tail(t, lambda z: 1.0),
        ).value
        if _rel(norm, aip_sq) > 1e-9:
            details.append(f"n={n}: int Ai^2 = {norm!r} vs Ai'(z_n)^2 = {aip_sq!r}")
        moment2 = integrate(
            lambda z: z * z * airy_ai(z) ** 2, zn, math.inf, 1e-11,
            tail_bound=lambda t: _airy_sq_tail(t, lambda z: z * z),
        ).value
        expected2 = 0.2 * aip_sq * zn * zn
        if _rel(moment2, expected2) > 1e-8:
            details.append(f"n={n}: int z^2 Ai^2 = {moment2!r} vs {expected2!r}")
        small = integrate(
            lambda z: (0.5 * z - zn) * airy_ai(z) ** 2, zn, math.inf, 1e-11,
            tail_bound=lambda t: _airy_sq_tail(t, lambda z: 0.5 * z + abs(zn)),
        ).value
        expected_small = -(5.0 / 6.0) * aip_sq * zn
        if _rel(small, expected_small) > 1e-7:
            details.append(f"n={n}: small-component integral {small!r} vs {expected_small!r}")
    seconds = time.perf_counter() - start
    if seconds >= 2.0:
        details.append(f"runtime {seconds:.2f}s exceeds 2 s")
    return CheckResult(2, "Airy integral identities (n=1..10)", not details, seconds, details)


def check_radial_closed_vs_quadrature() -> CheckResult:
    """Criterion 3: closed forms and quadrature agree on both brackets to
    1e-7 relative over (q, n) in {0.5, 1, 2} x {1..5}."""
    start = time.perf_counter()
    details: list[str] = []
    for q in (0.5, 1.0, 2.0):
        spec = RadialSpec(q=q, c=1.0)
        for n in range(1, 6):
            level = radial_level(spec, n)
            b_ev2, b_small = radial_brackets_quadrature(spec, n)
            if _rel(b_ev2, level.bracket_ev2) > 1e-7:
                details.append(f"q={q} n={n}: bracket_ev2 {b_ev2!r} vs {level.bracket_ev2!r}")
            if _rel(b_small, level.bracket_small) > 1e-7:
                details.append(f"q={q} n={n}: bracket_small {b_small!r} vs {level.bracket_small!r}")
    return CheckResult(3, "radial closed form vs quadrature",
                       not details, time.perf_counter() - start, details)


def check_fd_oracle_agreement() -> CheckResult:
    """Criterion 4: finite-difference eigenvalues match analytic values within
    1e-4 for the half-line linear potential (n=1..3, q=1/2) and the
    triangular well (v0 in {1, 4, 10}), at <= 4001 points, in under 30 s."""
    start = time.perf_counter()
    details: list[str] = []
    q = 0.5
    pairs = fd_spectrum(lambda r: q * r, Grid1D(0.0, 30.0, 4001), 3,
                        bc="dirichlet-left", kinetic=0.5)
    for j, pair in enumerate(pairs):
        exact = -((2.0 * q) ** (2.0 / 3.0)) / 2.0 * airy_ai_zero(j + 1).z
        if abs(pair.energy - exact) > 1e-4:
            details.append(
                f"linear n={j + 1}: fd {pair.energy!r} vs analytic {exact!r}"
            )
    for v0 in (1.0, 4.0, 10.0):
        spec = WellSpec(v0=v0)
        state = solve_well(spec)
        half_width = 1.0 + 19.0 / math.sqrt(-state.eps_par)

        def v_of(z: float, v0=v0) -> float:
            return v0 * (abs(z) - 1.0) if abs(z) < 1.0 else 0.0

        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            ground = fd_spectrum(v_of, Grid1D(-half_width, half_width, 4001), 1,
                                 kinetic=1.0)[0]
        if abs(ground.energy - state.eps_par) > 1e-4:
            details.append(
                f"well v0={v0:g}: fd {ground.energy!r} vs analytic {state.eps_par!r}"
            )
    seconds = time.perf_counter() - start
    if seconds >= 30.0:
        details.append(f"runtime {seconds:.2f}s exceeds 30 s")
    return CheckResult(4, "finite-difference oracle agreement", not details, seconds, details)


def check_gup_minimal_length() -> CheckResult:
    """Criterion 5: saturation-curve minimum sits at (3b-2a^2)^(-1/2) (central
    finite-difference derivative <= 1e-8 there), b = 2a^2 gives l_min = hbar a
    to float precision, and l_min >= 0 iff b >= a^2 over 1000 seeded draws."""
    start = time.perf_counter()
    details: list[str] = []
    for a, b in ((0.1, 0.02), (0.0, 0.5), (0.3, 0.4), (0.05, 0.0125)):
        params = GupParams(a=a, b=b)
        dp_ext = saturation_momentum(params)
        h = 1e-4 * dp_ext
        deriv = (
            saturation_curve(params, dp_ext + h) - saturation_curve(params, dp_ext - h)
        ) / (2.0 * h)
        if abs(deriv) > 1e-8:
            details.append(f"a={a} b={b}: derivative at minimum {deriv!r}")
        floor = saturation_curve(params, dp_ext)
        for offset in np.linspace(-0.2, 0.2, 21):
            if offset != 0.0 and saturation_curve(params, dp_ext * (1.0 + offset)) < floor:
                details.append(f"a={a} b={b}: curve dips below value at (dP)_ext")
                break
    for a in (1e-3, 0.07, 0.4, 2.0):
        params = GupParams(a=a, b=2.0 * a * a)
        if _rel(minimal_length(params), params.hbar * a) > 5e-15:
            details.append(f"a={a}: b=2a^2 gave l_min {minimal_length(params)!r} != hbar a")
    rng = np.random.default_rng(20260808)
    checked = 0
    while checked < 1000:
        a = float(rng.uniform(0.0, 1.0))
        b = float(rng.uniform(0.0, 1.0))
        if 3.0 * b - 2.0 * a * a <= 0.0:
            continue
        checked += 1
        positive = minimal_length(GupParams(a=a, b=b)) >= 0.0
        if positive != (b >= a * a):
            details.append(f"a={a} b={b}: positivity mismatch")
    return CheckResult(5, "minimal-length algebra properties",
                       not details, time.perf_counter() - start, details)


def check_fig1_series() -> CheckResult:
    """Criterion 6: the two emitted level-correction series 5 z_n/6 and
    -4 z_n^2/5 are both negative and strictly decreasing for n = 1..10, with
    the quadratic series dominating from n = 2 on; zeros match the asymptotic
    estimate to 1% for n >= 3."""
    start = time.perf_counter()
    details: list[str] = []
    zs = [airy_ai_zero(n).z for n in range(1, 11)]
    lin = [5.0 * z / 6.0 for z in zs]
    quad = [-4.0 * z * z / 5.0 for z in zs]
    if not all(v < 0.0 for v in lin + quad):
        details.append("series values are not all negative")
    if not all(lin[i + 1] < lin[i] for i in range(9)):
        details.append("linear series is not strictly decreasing")
    if not all(quad[i + 1] < quad[i] for i in range(9)):
        details.append("quadratic series is not strictly decreasing")
    if not all(abs(quad[i]) > abs(lin[i]) for i in range(1, 10)):
        details.append("quadratic series does not dominate for n >= 2")
    for n in range(3, 11):
        est = airy_zero_estimate(n)
        if _rel(est, zs[n - 1]) > 0.01:
            details.append(f"n={n}: asymptotic estimate off by more than 1%")
    return CheckResult(6, "level-correction series reproduction",
                       not details, time.perf_counter() - start, details)


def check_sign_structure() -> CheckResult:
    """Criterion 7: with a > 0 both radial correction pieces are negative for
    every computed level, and the two triangular correction terms have
    opposite signs."""
    start = time.perf_counter()
    details: list[str] = []
    for q in (0.5, 1.0, 2.0):
        for c in (1.0, 137.036):
            spec = RadialSpec(q=q, c=c, a=1.0 / c)
            for n in range(1, 11):
                level = radial_level(spec, n)
                if not level.e1_rel < 0.0:
                    details.append(f"radial q={q} c={c} n={n}: e1_rel {level.e1_rel!r} not < 0")
                if not level.e1_gup < 0.0:
                    details.append(f"radial q={q} c={c} n={n}: e1_gup {level.e1_gup!r} not < 0")
    for v0 in (1.0, 4.0, 10.0):
        spec = WellSpec(v0=v0, c=137.036, a=1.0 / 137.036)
        state = solve_well(spec)
        terms = well_first_order_terms(state, spec)
        if not (terms.relativistic > 0.0 and terms.deformation < 0.0):
            details.append(
                f"well v0={v0:g}: terms {terms.relativistic!r}, {terms.deformation!r} "
                "do not have opposite signs"
            )
    return CheckResult(7, "sign structure of first-order corrections",
                       not details, time.perf_counter() - start, details)


def all_checks() -> list[CheckResult]:
    return [
        check_table1_regression(),
        check_airy_integral_identities(),
        check_radial_closed_vs_quadrature(),
        check_fd_oracle_agreement(),
        check_gup_minimal_length(),
        check_fig1_series(),
        check_sign_structure(),
    ]


def run_battery(stream: TextIO = sys.stdout) -> bool:
    """Run every check, print one line per criterion, return overall success."""
    ok = True
    for result in all_checks():
        print(result.line(), file=stream)
        for detail in result.details:
            print(f"      {detail}", file=stream)
        ok = ok and result.passed
    return ok
