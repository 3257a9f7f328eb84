"""Airy functions Ai, Bi and derivatives on the real line, plus negative zeros of Ai.

Self-contained evaluation (no special-function library):

* ``|x| <= 2``        -- Maclaurin series of the two standard ODE solutions.
* ``2 < |x| < 8``     -- one local Taylor step of the Airy ODE y'' = x*y from the
                         nearest entry of a precomputed knot table (spacing 0.5).
                         The table itself is built by Taylor-stepping along the
                         numerically stable direction for each solution: Bi grows
                         towards +x (forward), Ai towards -x (backward from an
                         asymptotic anchor at x = 12), and both directions are
                         neutral for x < 0.
* ``|x| >= 8``        -- asymptotic expansions, oscillatory form for x < 0,
                         truncated at the smallest term.

The three branches agree to ~1e-13 relative at the seams; accuracy is limited by
float64 cancellation inside the series (seam at 2) and by the e^{-2*xi} optimal
truncation wall of the asymptotic series (seam at 8).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "AiryOverflowError",
    "AiryValues",
    "AiryZero",
    "airy",
    "airy_ai",
    "airy_ai_zero",
    "airy_zero_estimate",
]

# Ai(0) = 3^(-2/3)/Gamma(2/3), Ai'(0) = -3^(-1/3)/Gamma(1/3)
_AI0 = 0.35502805388781723926
_AIP0 = -0.25881940379280679841
_SQRT3 = math.sqrt(3.0)
_SQRTPI = math.sqrt(math.pi)

_SERIES_CUT = 2.0
_ASYMP_CUT = 8.0
_KNOT_STEP = 0.5
# e^xi overflows for xi > ~709, i.e. x > (709 * 3/2)^(2/3)
_BI_OVERFLOW_X = (709.0 * 1.5) ** (2.0 / 3.0)

MAX_ZERO_INDEX = 50


class AiryOverflowError(OverflowError):
    """Bi(x) exceeds the double-precision range (x beyond ~104)."""


@dataclass(frozen=True)
class AiryValues:
    """Ai, Ai', Bi, Bi' at a single real argument."""

    ai: float
    ai_prime: float
    bi: float
    bi_prime: float


@dataclass(frozen=True)
class AiryZero:
    """The n-th negative zero of Ai (n >= 1, z strictly decreasing in n)."""

    n: int
    z: float


def _series(x: float) -> tuple[float, float, float, float]:
    """Maclaurin series for (Ai, Ai', Bi, Bi'); intended for |x| <= ~2.5."""
    x3 = x * x * x
    # f, g solve y'' = x*y with f(0)=1, f'(0)=0 and g(0)=0, g'(0)=1
    tf = 1.0
    f = 1.0
    tg = x
    g = x
    tfp = 0.5 * x * x  # first term (k=1) of f'
    fp = tfp
    tgp = 1.0
    gp = 1.0
    for k in range(1, 48):
        tf *= x3 / (3 * k * (3 * k - 1))
        f += tf
        tg *= x3 / ((3 * k + 1) * (3 * k))
        g += tg
        if k >= 2:
            tfp *= x3 / ((3 * k - 1) * (3 * k - 3))
            fp += tfp
        tgp *= x3 / (3 * k * (3 * k - 2))
        gp += tgp
        if abs(tf) + abs(tg) < 1e-18 * (abs(f) + abs(g)):
            break
    ai = _AI0 * f + _AIP0 * g
    aip = _AI0 * fp + _AIP0 * gp
    bi = _SQRT3 * (_AI0 * f - _AIP0 * g)
    bip = _SQRT3 * (_AI0 * fp - _AIP0 * gp)
    return ai, aip, bi, bip


def _asymptotic_sums(xi: float) -> tuple[float, float, float, float]:
    """Even/odd-k partial sums of u_k/xi^k and v_k/xi^k (positive signs).

    u_0 = 1, u_{k+1}/u_k = (6k+1)(6k+3)(6k+5) / (216 (k+1)(2k+1)),
    v_k = u_k (6k+1)/(1-6k).  Truncated at the smallest term.
    """
    u_even = 1.0
    u_odd = 0.0
    v_even = 1.0
    v_odd = 0.0
    u = 1.0
    prev = math.inf
    for k in range(0, 60):
        u *= (6 * k + 1) * (6 * k + 3) * (6 * k + 5) / (216.0 * (k + 1) * (2 * k + 1))
        kk = k + 1
        term = u / xi**kk
        if term >= prev:  # smallest-term truncation
            break
        v_term = term * (6 * kk + 1) / (1.0 - 6 * kk)
        if kk % 2 == 0:
            u_even += term
            v_even += v_term
        else:
            u_odd += term
            v_odd += v_term
        if term < 1e-18:
            break
        prev = term
    return u_even, u_odd, v_even, v_odd


def _asymptotic_pos(x: float) -> tuple[float, float, float, float]:
    xi = (2.0 / 3.0) * x ** 1.5
    ue, uo, ve, vo = _asymptotic_sums(xi)
    # alternating-sign sums for the recessive solution
    s_ai = ue - uo
    s_aip = ve - vo
    s_bi = ue + uo
    s_bip = ve + vo
    x4 = x ** 0.25
    try:
        epos = math.exp(xi)
    except OverflowError as exc:
        raise AiryOverflowError(f"Bi({x:g}) overflows double precision") from exc
    eneg = math.exp(-xi)
    ai = 0.5 * eneg * s_ai / (_SQRTPI * x4)
    aip = -0.5 * x4 * eneg * s_aip / _SQRTPI
    bi = epos * s_bi / (_SQRTPI * x4)
    bip = x4 * epos * s_bip / _SQRTPI
    return ai, aip, bi, bip


def _asymptotic_neg(x: float) -> tuple[float, float, float, float]:
    t = -x
    xi = (2.0 / 3.0) * t ** 1.5
    pu, qu, pv, qv = _oscillatory_sums(xi)
    theta = xi + 0.25 * math.pi
    sin_t = math.sin(theta)
    cos_t = math.cos(theta)
    t4 = t ** 0.25
    ai = (sin_t * pu - cos_t * qu) / (_SQRTPI * t4)
    aip = -(cos_t * pv + sin_t * qv) * t4 / _SQRTPI
    bi = (cos_t * pu + sin_t * qu) / (_SQRTPI * t4)
    bip = (sin_t * pv - cos_t * qv) * t4 / _SQRTPI
    return ai, aip, bi, bip


def _oscillatory_sums(xi: float) -> tuple[float, float, float, float]:
    """P/Q sums of the oscillatory expansions, smallest-term truncated."""
    pu = 1.0
    qu = 0.0
    pv = 1.0
    qv = 0.0
    u = 1.0
    prev = math.inf
    for k in range(0, 60):
        u *= (6 * k + 1) * (6 * k + 3) * (6 * k + 5) / (216.0 * (k + 1) * (2 * k + 1))
        kk = k + 1
        term = u / xi**kk
        if term >= prev:
            break
        v_term = term * (6 * kk + 1) / (1.0 - 6 * kk)
        sign = -1.0 if (kk // 2) % 2 else 1.0  # (-1)^floor(kk/2)
        if kk % 2 == 0:
            pu += sign * term
            pv += sign * v_term
        else:
            qu += sign * term
            qv += sign * v_term
        if term < 1e-18:
            break
        prev = term
    return pu, qu, pv, qv


def _taylor_step(
    x0: float, y: float, yp: float, h: float
) -> tuple[float, float]:
    """Advance a solution of y'' = x*y from x0 to x0+h by a local Taylor series."""
    if h == 0.0:
        return y, yp
    a_km1 = 0.0  # a_{-1}
    a_k = y
    a_kp1 = yp
    s = y + yp * h
    sp = yp
    hk = h  # h^k for the a_{k+1} term already added
    small_run = 0
    for k in range(0, 48):
        a_kp2 = (x0 * a_k + a_km1) / ((k + 2) * (k + 1))
        hk *= h
        s += a_kp2 * hk
        sp += a_kp2 * (k + 2) * hk / h
        a_km1, a_k, a_kp1 = a_k, a_kp1, a_kp2
        if abs(a_kp2 * hk) < 1e-19 * (abs(s) + 1e-300):
            small_run += 1
            if small_run >= 2 and k > 4:
                break
        else:
            small_run = 0
    return s, sp


def _build_knots() -> dict[int, tuple[float, float, float, float]]:
    """Knot table on multiples of 0.5 covering [-8.5, 12]."""
    knots: dict[int, tuple[float, float, float, float]] = {}

    def put(x: float, vals: tuple[float, float, float, float]) -> None:
        knots[round(x / _KNOT_STEP)] = vals

    # positive side: Bi forward from 2.0, Ai backward from an asymptotic
    # anchor at 12 (e^{-2 xi} ~ 1e-25 there, effectively exact)
    ai, aip, bi, bip = _series(2.0)
    put(2.0, (ai, aip, bi, bip))
    x = 2.0
    b, bp = bi, bip
    while x < 12.0 - 1e-9:
        b, bp = _taylor_step(x, b, bp, _KNOT_STEP)
        x += _KNOT_STEP
        put(x, (math.nan, math.nan, b, bp))
    a, apv, _, _ = _asymptotic_pos(12.0)
    x = 12.0
    entry = knots[round(x / _KNOT_STEP)]
    put(x, (a, apv, entry[2], entry[3]))
    while x > 2.0 + 1e-9:
        a, apv = _taylor_step(x, a, apv, -_KNOT_STEP)
        x -= _KNOT_STEP
        entry = knots[round(x / _KNOT_STEP)]
        put(x, (a, apv, entry[2], entry[3]))

    # negative side: both solutions stepped together from the series anchor
    ai, aip, bi, bip = _series(-2.0)
    put(-2.0, (ai, aip, bi, bip))
    x = -2.0
    while x > -8.5 + 1e-9:
        ai, aip = _taylor_step(x, ai, aip, -_KNOT_STEP)
        bi, bip = _taylor_step(x, bi, bip, -_KNOT_STEP)
        x -= _KNOT_STEP
        put(x, (ai, aip, bi, bip))
    return knots


_KNOTS = _build_knots()


def _knot_eval(x: float) -> tuple[float, float, float, float]:
    idx = round(x / _KNOT_STEP)
    x0 = idx * _KNOT_STEP
    ai0, aip0, bi0, bip0 = _KNOTS[idx]
    h = x - x0
    ai, aip = _taylor_step(x0, ai0, aip0, h)
    bi, bip = _taylor_step(x0, bi0, bip0, h)
    return ai, aip, bi, bip


def airy(x: float) -> AiryValues:
    """Evaluate Ai(x), Ai'(x), Bi(x), Bi'(x).

    Raises AiryOverflowError once Bi leaves the representable range
    (x beyond ~104); all four values are finite for |x| <= 100.
    """
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"airy() requires a finite argument, got {x!r}")
    if x > _BI_OVERFLOW_X:
        raise AiryOverflowError(f"Bi({x:g}) overflows double precision")
    if abs(x) <= _SERIES_CUT:
        vals = _series(x)
    elif abs(x) >= _ASYMP_CUT:
        vals = _asymptotic_pos(x) if x > 0 else _asymptotic_neg(x)
    else:
        vals = _knot_eval(x)
    return AiryValues(*vals)


def airy_ai(x: float) -> float:
    """Ai(x) alone (same evaluation path as airy())."""
    return airy(x).ai


def airy_zero_estimate(n: int) -> float:
    """Asymptotic estimate of the n-th Ai zero; within 1% for n >= 1."""
    t = 3.0 * math.pi * (4 * n - 1) / 8.0
    t2 = t * t
    return -(t ** (2.0 / 3.0)) * (1.0 + 5.0 / (48.0 * t2) - 5.0 / (36.0 * t2 * t2))


@lru_cache(maxsize=None)
def _ai_zero_cached(n: int) -> float:
    est = airy_zero_estimate(n)
    # estimate error is <1e-3 for n=1 and shrinks fast; half-width must stay
    # below the local zero spacing ~ pi/sqrt(|z|) so only z_n is bracketed
    half = 0.4 * math.pi / math.sqrt(abs(est))
    lo, hi = est - half, est + half
    flo = airy_ai(lo)
    fhi = airy_ai(hi)
    widen = 0
    while flo * fhi > 0.0:
        widen += 1
        if widen > 8:
            raise RuntimeError(f"failed to bracket Airy zero n={n}")
        half *= 2.0
        lo, hi = est - half, est + half
        flo = airy_ai(lo)
        fhi = airy_ai(hi)
    # plain bisection: deterministic, ~60 steps to full double resolution
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fm = airy_ai(mid)
        if fm == 0.0:
            return mid
        if flo * fm < 0.0:
            hi = mid
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


def airy_ai_zero(n: int) -> AiryZero:
    """n-th negative zero of Ai, 1 <= n <= 50, refined to |Ai(z)| <= 1e-10."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"zero index must be an int, got {type(n).__name__}")
    if not 1 <= n <= MAX_ZERO_INDEX:
        raise ValueError(f"zero index must be in 1..{MAX_ZERO_INDEX}, got {n}")
    return AiryZero(n=n, z=_ai_zero_cached(n))
