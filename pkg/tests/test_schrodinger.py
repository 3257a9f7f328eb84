"""Finite-difference eigensolver tests against textbook and package analytics."""

import math

import numpy as np
import pytest

from gupdirac.radial import RadialSpec, radial_level
from gupdirac.schrodinger import (
    BoundaryDecayWarning,
    EigenPair,
    Grid1D,
    GridTooCoarseError,
    count_nodes,
    fd_spectrum,
)
from gupdirac.triangular import WellSpec, solve_well, well_wavefunction


def _well_potential(v0):
    def v(z: float) -> float:
        return v0 * (abs(z) - 1.0) if abs(z) < 1.0 else 0.0

    return v


def test_harmonic_oscillator():
    pairs = fd_spectrum(lambda x: 0.5 * x * x, Grid1D(-10.0, 10.0, 2001), 3, kinetic=0.5)
    for j, pair in enumerate(pairs):
        assert pair.energy == pytest.approx(j + 0.5, abs=1e-4)
    assert pairs[0].energy == pytest.approx(0.5, abs=1e-5)
    assert [count_nodes(p.wavefunction) for p in pairs] == [0, 1, 2]


def test_half_line_linear_potential_against_closed_form():
    q = 0.5
    pairs = fd_spectrum(
        lambda r: q * r, Grid1D(0.0, 30.0, 4001), 3, bc="dirichlet-left", kinetic=0.5
    )
    spec = RadialSpec(q=q)
    for j, pair in enumerate(pairs):
        assert pair.energy == pytest.approx(radial_level(spec, j + 1).energy0, abs=1e-4)
    assert pairs[0].energy == pytest.approx(1.16905, abs=1e-4)


def test_triangular_well_v0_4_with_boundary_warning():
    # the [-8, 8] box leaves ~1e-4 of the peak at the wall: the eigenvalue is
    # still fine at 1e-4 but the decay warning must fire
    with pytest.warns(BoundaryDecayWarning):
        pairs = fd_spectrum(_well_potential(4.0), Grid1D(-8.0, 8.0, 4001), 1, kinetic=1.0)
    assert pairs[0].energy == pytest.approx(-1.53713, abs=1e-4)


def test_triangular_wells_wide_grid_no_warning():
    import warnings

    for v0 in (1.0, 10.0):
        state = solve_well(WellSpec(v0=v0))
        half_width = 1.0 + 19.0 / math.sqrt(-state.eps_par)
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            pairs = fd_spectrum(
                _well_potential(v0), Grid1D(-half_width, half_width, 4001), 1, kinetic=1.0
            )
        assert pairs[0].energy == pytest.approx(state.eps_par, abs=1e-4)


def test_eigenvalue_convergence_is_second_order():
    exact = radial_level(RadialSpec(q=0.5), 1).energy0
    errors = []
    for points in (1001, 2001, 4001):
        pair = fd_spectrum(
            lambda r: 0.5 * r, Grid1D(0.0, 30.0, points), 1, bc="dirichlet-left", kinetic=0.5
        )[0]
        errors.append(abs(pair.energy - exact))
    assert errors[0] / errors[1] == pytest.approx(4.0, abs=0.5)
    assert errors[1] / errors[2] == pytest.approx(4.0, abs=0.5)


def test_eigenfunction_l2_distance_to_analytic():
    for v0 in (1.0, 5.0, 10.0):
        spec = WellSpec(v0=v0)
        state = solve_well(spec)
        half_width = 1.0 + 19.0 / math.sqrt(-state.eps_par)
        grid = Grid1D(-half_width, half_width, 2001)
        pair = fd_spectrum(_well_potential(v0), grid, 1, kinetic=1.0)[0]
        xs = grid.coordinates()
        analytic = np.array([well_wavefunction(state, spec, float(x)) for x in xs])
        analytic /= math.sqrt(float(np.sum(analytic**2)) * grid.h)
        fd = pair.wavefunction
        if float(np.dot(fd, analytic)) < 0.0:
            fd = -fd
        distance = math.sqrt(float(np.sum((fd - analytic) ** 2)) * grid.h)
        assert distance <= 1e-3


def test_node_counts_match_level_index():
    pairs = fd_spectrum(lambda x: 0.5 * x * x, Grid1D(-12.0, 12.0, 1501), 5, kinetic=0.5)
    for j, pair in enumerate(pairs):
        assert count_nodes(pair.wavefunction) == j


def test_richardson_estimate_and_grid_too_coarse():
    pair = fd_spectrum(
        lambda x: 0.5 * x * x, Grid1D(-10.0, 10.0, 2001), 1, kinetic=0.5, tol=1e-4
    )[0]
    assert pair.error_estimate is not None
    assert pair.error_estimate < 1e-4
    with pytest.raises(GridTooCoarseError):
        fd_spectrum(lambda x: 0.5 * x * x, Grid1D(-10.0, 10.0, 101), 1, kinetic=0.5, tol=1e-8)


def test_normalization_convention():
    grid = Grid1D(-10.0, 10.0, 1201)
    pair = fd_spectrum(lambda x: 0.5 * x * x, grid, 1, kinetic=0.5)[0]
    assert float(np.sum(pair.wavefunction**2)) * grid.h == pytest.approx(1.0, rel=1e-12)
    assert isinstance(pair, EigenPair)


def test_validation_errors():
    grid = Grid1D(-1.0, 1.0, 101)
    with pytest.raises(ValueError):
        fd_spectrum(lambda x: 0.0, grid, 0)
    with pytest.raises(ValueError):
        fd_spectrum(lambda x: 0.0, grid, 1, bc="periodic")
    with pytest.raises(ValueError):
        fd_spectrum(lambda x: 0.0, grid, 1, kinetic=0.0)
    with pytest.raises(ValueError):
        Grid1D(1.0, -1.0, 100)
    with pytest.raises(ValueError):
        Grid1D(-1.0, 1.0, 2)
    with pytest.raises(ValueError):
        # Richardson halving needs an odd point count
        fd_spectrum(lambda x: 0.5 * x * x, Grid1D(-5.0, 5.0, 1000), 1, tol=1e-3)
