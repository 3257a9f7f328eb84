"""Adaptive quadrature and bracketed root finding.

Quadrature is a globally adaptive Gauss-Kronrod (G7, K15) scheme: the interval
with the largest error estimate is bisected until the summed estimate meets the
tolerance.  Semi-infinite upper limits are truncated first, either at the point
where a caller-supplied tail bound drops below tol/10 or, without one, by
integrating doubling chunks until they stop contributing (only safe for
integrands with super-polynomial decay).

Root finding is Brent's method: inverse-quadratic/secant steps guarded by
bisection, so the iterate never leaves the initial bracket and convergence is
guaranteed for any continuous sign-changing function.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

__all__ = [
    "Bracket",
    "InvalidBracketError",
    "NonConvergenceError",
    "QuadratureResult",
    "find_root",
    "integrate",
]


class NonConvergenceError(RuntimeError):
    """Iteration budget exhausted; carries the partial result when available."""

    def __init__(self, message: str, partial: "QuadratureResult | None" = None):
        super().__init__(message)
        self.partial = partial


class InvalidBracketError(ValueError):
    """The supplied interval does not bracket a sign change."""


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError("bracket endpoints must be finite")
        if not self.lo < self.hi:
            raise ValueError(f"bracket requires lo < hi, got [{self.lo}, {self.hi}]")


# 15-point Kronrod extension of 7-point Gauss (positive abscissae; QUADPACK dqk15)
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
)
_WGK_CENTER = 0.209482141084727828012999174891714
_WG = (  # Gauss weights for _XGK indices 1, 3, 5
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
)
_WG_CENTER = 0.417959183673469387755102040816327

_EPS = 2.220446049250313e-16


def _kronrod_panel(f: Callable[[float], float], a: float, b: float):
    """K15 value, error estimate and |f| integral over one panel."""
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fc = f(center)
    resk = _WGK_CENTER * fc
    resg = _WG_CENTER * fc
    resabs = _WGK_CENTER * abs(fc)
    fv = []
    for j, x in enumerate(_XGK):
        dx = half * x
        f1 = f(center - dx)
        f2 = f(center + dx)
        fv.append((f1, f2))
        resk += _WGK[j] * (f1 + f2)
        resabs += _WGK[j] * (abs(f1) + abs(f2))
        if j in (1, 3, 5):
            resg += _WG[(j - 1) // 2] * (f1 + f2)
    reskh = 0.5 * resk
    resasc = _WGK_CENTER * abs(fc - reskh)
    for j, (f1, f2) in enumerate(fv):
        resasc += _WGK[j] * (abs(f1 - reskh) + abs(f2 - reskh))
    value = resk * half
    resabs *= abs(half)
    resasc *= abs(half)
    err = abs((resk - resg) * half)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    err = max(err, 50.0 * _EPS * resabs)
    return value, err, 15


def _integrate_finite(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float,
    max_intervals: int,
) -> QuadratureResult:
    value, err, nev = _kronrod_panel(f, lo, hi)
    heap = [(-err, lo, hi, value, err)]
    total_val = value
    total_err = err
    while total_err > tol and len(heap) < max_intervals:
        _, a, b, v_old, e_old = heapq.heappop(heap)
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:  # interval at float resolution
            heapq.heappush(heap, (0.0, a, b, v_old, e_old))
            break
        v1, e1, n1 = _kronrod_panel(f, a, mid)
        v2, e2, n2 = _kronrod_panel(f, mid, b)
        nev += n1 + n2
        total_val += v1 + v2 - v_old
        total_err += e1 + e2 - e_old
        heapq.heappush(heap, (-e1, a, mid, v1, e1))
        heapq.heappush(heap, (-e2, mid, b, v2, e2))
    # recompute the error sum to shed accumulated cancellation
    total_err = sum(item[4] for item in heap)
    result = QuadratureResult(total_val, total_err, nev)
    if total_err > tol:
        raise NonConvergenceError(
            f"quadrature on [{lo:g}, {hi:g}] stalled at error {total_err:.3e} "
            f"(tolerance {tol:.3e}, {len(heap)} intervals)",
            partial=result,
        )
    return result


def _truncation_point(
    lo: float, tol: float, tail_bound: Callable[[float], float]
) -> float:
    offset = 1.0
    for _ in range(200):
        t = lo + offset
        bound = tail_bound(t)
        if bound <= tol / 10.0:
            return t
        offset *= 2.0
    raise NonConvergenceError(
        f"tail bound never fell below {tol / 10.0:.3e} while searching from {lo:g}"
    )


def integrate(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-10,
    *,
    tail_bound: Callable[[float], float] | None = None,
    max_intervals: int = 4096,
) -> QuadratureResult:
    """Integrate f over [lo, hi]; hi may be math.inf.

    For a semi-infinite range, `tail_bound(T)` must bound |integral of f from T
    to infinity| from above for any probed T > lo; truncation happens where it
    drops below tol/10.  Without a bound, chunks of doubling width are summed
    until one contributes less than tol/8 -- a heuristic that is reliable only
    for integrands with eventually-monotone super-polynomial decay.

    Raises NonConvergenceError (with .partial carrying the best estimate) if
    the subdivision budget is exhausted before the tolerance is met.
    """
    if not tol > 0.0:
        raise ValueError(f"tolerance must be positive, got {tol!r}")
    if math.isinf(lo):
        raise ValueError("lower limit must be finite")
    if not math.isinf(hi):
        if hi <= lo:
            raise ValueError(f"integration range is empty: [{lo}, {hi}]")
        return _integrate_finite(f, lo, hi, tol, max_intervals)

    if tail_bound is not None:
        t = _truncation_point(lo, tol, tail_bound)
        res = _integrate_finite(f, lo, t, 0.9 * tol, max_intervals)
        return QuadratureResult(
            res.value, res.error_estimate + tail_bound(t), res.evaluations
        )

    # heuristic doubling chunks
    total = 0.0
    err = 0.0
    nev = 0
    a = lo
    width = 1.0
    for j in range(64):
        piece = _integrate_finite(f, a, a + width, tol * 0.5 ** (j + 3), max_intervals)
        total += piece.value
        err += piece.error_estimate
        nev += piece.evaluations
        if abs(piece.value) <= tol / 8.0 and j >= 1:
            return QuadratureResult(total, err + tol / 8.0, nev)
        a += width
        width *= 2.0
    raise NonConvergenceError(
        "semi-infinite integral did not settle within 64 doubling chunks",
        partial=QuadratureResult(total, err, nev),
    )


def find_root(
    f: Callable[[float], float],
    bracket: Bracket | tuple[float, float],
    tol: float = 1e-12,
    *,
    max_iter: int = 200,
) -> float:
    """Brent root refinement inside a sign-change bracket.

    Stops once the bracketed interval is narrower than tol (plus the float
    resolution around the iterate) or an exact zero is hit; the returned point
    always lies inside the initial bracket.
    """
    if not isinstance(bracket, Bracket):
        bracket = Bracket(*bracket)
    if not tol >= 0.0:
        raise ValueError(f"tolerance must be >= 0, got {tol!r}")
    a, b = bracket.lo, bracket.hi
    fa = f(a)
    fb = f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa > 0.0) == (fb > 0.0):
        raise InvalidBracketError(
            f"no sign change on [{a:g}, {b:g}]: f(lo)={fa:g}, f(hi)={fb:g}"
        )
    c, fc = a, fa
    e = d = b - a
    for _ in range(max_iter):
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol_eff = 2.0 * _EPS * abs(b) + 0.5 * tol
        m = 0.5 * (c - b)
        if abs(m) <= tol_eff or fb == 0.0:
            return b
        if abs(e) < tol_eff or abs(fa) <= abs(fb):
            e = d = m
        else:
            s = fb / fa
            if a == c:
                p = 2.0 * m * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0.0:
                q = -q
            else:
                p = -p
            s, e = e, d
            if 2.0 * p < 3.0 * m * q - abs(tol_eff * q) and p < abs(0.5 * s * q):
                d = p / q
            else:
                e = d = m
        a, fa = b, fb
        if abs(d) > tol_eff:
            b += d
        else:
            b += tol_eff if m > 0.0 else -tol_eff
        fb = f(b)
        if (fb > 0.0) == (fc > 0.0):
            c, fc = a, fa
            e = d = b - a
    raise NonConvergenceError(
        f"root refinement did not converge within {max_iter} iterations"
    )
