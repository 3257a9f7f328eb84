"""Triangular-well tests: matching roots, states, brackets and corrections."""

import math

import numpy as np
import pytest

from gupdirac.airy import airy
from gupdirac.numerics import integrate
from gupdirac.triangular import (
    NoBoundStateError,
    WellSpec,
    _matching_residual,
    solve_well,
    table1,
    well_brackets,
    well_first_order,
    well_first_order_terms,
    well_wavefunction,
    well_wavefunction_derivative,
)

# even-parity ground roots converged independently at 40-digit precision
CONVERGED_ROOTS = {
    1: -0.82618101245612858,
    2: -0.91805203607059488,
    3: -0.95687709145551688,
    4: -0.97738941079330637,
    5: -0.98957977478427051,
    6: -0.99738790452278336,
    7: -1.0026590756421234,
    8: -1.0063599556879972,
    9: -1.0090389599129484,
    10: -1.0110264748467836,
}
V20_EVEN_ROOT = -1.01750215068023
V20_ODD_ROOT = -2.29347819181908
FIRST_AI_PRIME_ZERO = -1.0187929716474711

# published 6-significant-figure ground-state rows (v0, zeta0, eps, c_a, c_b,
# c, emv_pp, emv2_pp, epv_mm) used for spot regression below
PUBLISHED_ROWS = {
    1.0: (-0.826181, -0.173819, 1.02392, 0.170583, 0.661594, 0.123379, 0.132641, -0.0364646),
    5.0: (-0.98958, -2.10645, 1.65245, 0.0439097, 1.4908, 0.824469, 2.94726, -3.07349),
    9.0: (-1.00904, -4.63414, 1.86397, 0.0166413, 2.17775, 1.3661, 7.19637, -11.4331),
}


@pytest.mark.parametrize("v0, root", sorted(CONVERGED_ROOTS.items()))
def test_ground_roots_match_high_precision(v0, root):
    state = solve_well(WellSpec(v0=float(v0)))
    assert state.zeta0 == pytest.approx(root, abs=1e-12)


def test_state_identities():
    for v0 in (1.0, 4.0, 10.0, 20.0):
        spec = WellSpec(v0=v0)
        state = solve_well(spec)
        v23 = v0 ** (2.0 / 3.0)
        assert state.eps_par == pytest.approx(-v0 - state.zeta0 * v23, rel=1e-14)
        assert -state.eps_par == pytest.approx(v23 * state.zeta_l, rel=1e-12)
        assert state.alpha_match == pytest.approx(-math.sqrt(state.zeta_l), rel=1e-14)
        assert -v0 < state.eps_par < 0.0
        assert -(v0 ** (1.0 / 3.0)) < state.zeta0 < 0.0


def test_matching_residual_small_at_root():
    for v0 in list(range(1, 11)) + [50, 100]:
        spec = WellSpec(v0=float(v0))
        state = solve_well(spec)
        residual = _matching_residual(state.zeta0, v0 ** (1.0 / 3.0), "even")
        assert abs(residual) <= 1e-10


def test_coefficient_relations_and_double_entry_exterior():
    for v0, parity in ((1.0, "even"), (7.0, "even"), (20.0, "odd")):
        spec = WellSpec(v0=v0, parity=parity)
        state = solve_well(spec)
        vals0 = airy(state.zeta0)
        n0, d0 = (
            (vals0.ai_prime, vals0.bi_prime) if parity == "even" else (vals0.ai, vals0.bi)
        )
        assert state.c_b == pytest.approx(-state.c_a * n0 / d0, rel=1e-12)
        # double-entry bookkeeping for the exterior coefficient
        vals_l = airy(state.zeta_l)
        kappa = math.sqrt(-state.eps_par)
        alternate = state.c_a * math.exp(kappa) * (vals_l.ai - vals_l.bi * n0 / d0)
        assert state.c_out == pytest.approx(alternate, rel=1e-12)
        assert state.c_a > 0.0


def test_wavefunction_parity_continuity_normalization():
    rng = np.random.default_rng(5)
    for v0, parity in ((1.0, "even"), (20.0, "odd")):
        spec = WellSpec(v0=v0, parity=parity)
        state = solve_well(spec)
        sign = 1.0 if parity == "even" else -1.0
        for z in rng.uniform(0.0, 4.0, 100):
            z = float(z)
            assert well_wavefunction(state, spec, -z) == pytest.approx(
                sign * well_wavefunction(state, spec, z), rel=1e-12, abs=1e-15
            )
        # C^1 matching at the well edge
        jump = abs(
            well_wavefunction(state, spec, 1.0 - 1e-12)
            - well_wavefunction(state, spec, 1.0 + 1e-12)
        )
        djump = abs(
            well_wavefunction_derivative(state, spec, 1.0 - 1e-12)
            - well_wavefunction_derivative(state, spec, 1.0 + 1e-12)
        )
        assert jump <= 1e-8
        assert djump <= 1e-8
        # parity condition at the origin
        if parity == "even":
            assert abs(well_wavefunction_derivative(state, spec, 0.0)) <= 1e-12
        else:
            assert abs(well_wavefunction(state, spec, 0.0)) <= 1e-12
        # unit norm over the full line
        kappa = math.sqrt(-state.eps_par)
        norm = 2.0 * (
            integrate(lambda z: well_wavefunction(state, spec, z) ** 2, 0.0, 1.0, 1e-11).value
            + integrate(
                lambda z: well_wavefunction(state, spec, z) ** 2, 1.0, math.inf, 1e-11,
                tail_bound=lambda t: state.c_out**2 * math.exp(-2.0 * kappa * t) / kappa,
            ).value
        )
        assert norm == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("v0", sorted(PUBLISHED_ROWS))
def test_brackets_match_published_rows(v0):
    ref = PUBLISHED_ROWS[v0]
    spec = WellSpec(v0=v0)
    state = solve_well(spec)
    brackets = well_brackets(state, spec)
    assert state.zeta0 == pytest.approx(ref[0], rel=2e-5)
    assert state.eps_par == pytest.approx(ref[1], rel=2e-5)
    assert state.c_a == pytest.approx(ref[2], rel=2e-5)
    assert state.c_out == pytest.approx(ref[4], rel=2e-5)
    assert brackets.emv_pp == pytest.approx(ref[5], rel=2e-5)
    assert brackets.emv2_pp == pytest.approx(ref[6], rel=2e-5)
    assert brackets.epv_mm == pytest.approx(ref[7], rel=1e-4)


def test_bracket_sign_structure():
    for v0 in (1.0, 5.0, 10.0):
        spec = WellSpec(v0=v0)
        state = solve_well(spec)
        brackets = well_brackets(state, spec)
        assert brackets.emv_pp > 0.0
        assert brackets.emv2_pp > 0.0
        assert brackets.epv_mm < 0.0


def test_virial_style_sum_check():
    # emv_pp = eps - <v> with <v> computed independently
    for v0 in (1.0, 6.0):
        spec = WellSpec(v0=v0)
        state = solve_well(spec)
        brackets = well_brackets(state, spec)
        v_mean = 2.0 * integrate(
            lambda z: v0 * (z - 1.0) * well_wavefunction(state, spec, z) ** 2,
            0.0, 1.0, 1e-11,
        ).value
        assert brackets.emv_pp == pytest.approx(state.eps_par - v_mean, abs=1e-8)


def test_first_order_examples():
    spec = WellSpec(v0=1.0, c=1.0, a=0.0)
    state = solve_well(spec)
    brackets = well_brackets(state, spec)
    e1 = well_first_order(state, spec, brackets)
    assert e1 == pytest.approx(0.00911615, rel=1e-4)

    c = 137.036
    spec_rel = WellSpec(v0=1.0, c=c, a=1.0 / c)
    e1_rel = well_first_order(state, spec_rel, brackets)
    expected = (0.0364646 / 4.0 - 2.0 * 0.132641) / c**2
    assert e1_rel == pytest.approx(expected, rel=1e-4)
    # the two contributions have opposite signs and counterbalance
    terms = well_first_order_terms(state, spec_rel, brackets)
    assert terms.relativistic > 0.0 > terms.deformation


def test_convention_switch_is_factor_two():
    spec = WellSpec(v0=3.0, c=10.0, a=0.01, px=1.0, py=2.0)
    state = solve_well(spec)
    brackets = well_brackets(state, spec)
    scaled = well_first_order(state, spec, brackets, convention="scaled")
    energy = well_first_order(state, spec, brackets, convention="energy")
    assert scaled == pytest.approx(2.0 * energy, rel=1e-14)
    with pytest.raises(ValueError):
        well_first_order(state, spec, brackets, convention="other")


def test_transverse_terms():
    spec0 = WellSpec(v0=2.0, c=20.0, a=0.01)
    state = solve_well(spec0)
    brackets = well_brackets(state, spec0)
    # E_perp = 0 kills the three transverse terms exactly
    terms0 = well_first_order_terms(state, spec0, brackets)
    assert terms0.e_perp == 0.0
    assert terms0.transverse_coupling == 0.0
    assert terms0.transverse_norm == 0.0
    assert terms0.transverse_quadratic == 0.0
    assert terms0.total == terms0.relativistic + terms0.deformation

    spec = WellSpec(v0=2.0, c=20.0, a=0.01, px=math.pi, py=0.5)
    terms = well_first_order_terms(state, spec, brackets)
    e_perp = 0.5 * (spec.px**2 + spec.py**2)
    assert terms.e_perp == pytest.approx(e_perp, rel=1e-15)
    assert terms.small_norm_perp == pytest.approx(
        (spec.px**2 + spec.py**2) / (4.0 * spec.c**2), rel=1e-15
    )
    assert terms.small_norm_z > 0.0
    assert terms.transverse_quadratic == pytest.approx(
        -2.0 * 4.0 * spec.a**2 * e_perp**2, rel=1e-15
    )
    assert terms.transverse_coupling == pytest.approx(
        -2.0 * 4.0 * spec.a**2 * e_perp * brackets.emv_pp, rel=1e-12
    )
    assert terms.total == pytest.approx(
        terms.relativistic + terms.deformation + terms.transverse_coupling
        + terms.transverse_norm + terms.transverse_quadratic,
        rel=1e-14,
    )


def test_box_mode_helper():
    spec = WellSpec.with_box_modes(4.0, 1, 2, 2.0, 3.0)
    assert spec.px == pytest.approx(math.pi / 2.0)
    assert spec.py == pytest.approx(2.0 * math.pi / 3.0)
    with pytest.raises(ValueError):
        WellSpec.with_box_modes(4.0, 0, 1, 1.0, 1.0)


def test_odd_parity_states():
    state = solve_well(WellSpec(v0=20.0, parity="odd"))
    assert state.zeta0 == pytest.approx(V20_ODD_ROOT, abs=1e-11)
    with pytest.raises(NoBoundStateError):
        solve_well(WellSpec(v0=1.0, parity="odd"))


def test_parity_orthogonality():
    spec_e = WellSpec(v0=20.0, parity="even")
    spec_o = WellSpec(v0=20.0, parity="odd")
    even = solve_well(spec_e)
    odd = solve_well(spec_o)
    assert even.zeta0 == pytest.approx(V20_EVEN_ROOT, abs=1e-11)
    overlap = integrate(
        lambda z: well_wavefunction(even, spec_e, z) * well_wavefunction(odd, spec_o, z),
        -12.0, 12.0, 1e-10,
    )
    assert abs(overlap.value) <= 1e-8


def test_deep_well_limit_approaches_first_ai_prime_zero():
    distances = []
    for v0 in (10.0, 50.0, 100.0):
        state = solve_well(WellSpec(v0=v0))
        distances.append(abs(state.zeta0 - FIRST_AI_PRIME_ZERO))
    assert distances[0] > distances[1] > distances[2]
    assert distances[2] < 2e-3


def test_very_deep_well_still_sound_then_guarded():
    # at v0 = 1000 the kinetic bracket matches its deep-limit estimate
    # (1/3) v0^(2/3) |z'_1| and stays positive
    spec = WellSpec(v0=1000.0)
    state = solve_well(spec)
    brackets = well_brackets(state, spec)
    assert brackets.emv_pp > 0.0
    estimate = 1000.0 ** (2.0 / 3.0) * abs(FIRST_AI_PRIME_ZERO) / 3.0
    assert brackets.emv_pp == pytest.approx(estimate, rel=0.02)
    # beyond ~1e3 the growing Airy branch swamps double precision: refuse
    from gupdirac.numerics import NonConvergenceError

    with pytest.raises(NonConvergenceError):
        solve_well(WellSpec(v0=5000.0))


def test_table1_rows_and_error_handling():
    assert table1([]) == []
    rows = table1([2.0, -1.0, 3.0])
    assert rows[0].error is None
    assert rows[0].zeta0 == pytest.approx(CONVERGED_ROOTS[2], abs=1e-12)
    assert rows[1].error is not None
    assert math.isnan(rows[1].zeta0)
    assert rows[2].error is None  # later rows still computed
    assert rows[2].eps_par == pytest.approx(-1.00962, rel=2e-5)
    # eps consistency identity on the v0=2 row
    assert rows[0].eps_par == pytest.approx(-2.0 - rows[0].zeta0 * 2.0 ** (2.0 / 3.0), rel=1e-6)
    assert rows[0].eps_par == pytest.approx(-0.542683, rel=2e-5)


def test_spec_validation():
    with pytest.raises(ValueError):
        WellSpec(v0=0.0)
    with pytest.raises(ValueError):
        WellSpec(v0=1.0, parity="mixed")
    with pytest.raises(ValueError):
        WellSpec(v0=1.0, c=0.0)
    with pytest.raises(ValueError):
        WellSpec(v0=1.0, a=-1.0)
