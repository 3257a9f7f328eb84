"""Independent verification routes: Airy identities and the grid eigensolver.

Every closed form in the package has a second, independent computation path.
This script runs the main ones side by side: the three Airy integral
identities behind the radial brackets, and the finite-difference eigensolver
against both analytic spectra.
"""

import math

from gupdirac import (
    Grid1D,
    WellSpec,
    airy,
    airy_ai,
    airy_ai_zero,
    fd_spectrum,
    integrate,
    radial_level,
    RadialSpec,
    solve_well,
)


def airy_sq_tail(poly):
    def tail(t: float) -> float:
        if t < 2.0:
            return math.inf
        decay = math.exp(-(4.0 / 3.0) * t**1.5)
        return 2.0 * poly(t) * decay / (4.0 * math.pi * math.sqrt(t) * (2.0 * math.sqrt(t) - 1.0))

    return tail


print("Airy integral identities over [z_n, inf):")
for n in (1, 4, 8):
    zn = airy_ai_zero(n).z
    aip_sq = airy(zn).ai_prime ** 2
    norm = integrate(lambda z: airy_ai(z) ** 2, zn, math.inf, 1e-11,
                     tail_bound=airy_sq_tail(lambda z: 1.0)).value
    mom2 = integrate(lambda z: z * z * airy_ai(z) ** 2, zn, math.inf, 1e-11,
                     tail_bound=airy_sq_tail(lambda z: z * z)).value
    small = integrate(lambda z: (0.5 * z - zn) * airy_ai(z) ** 2, zn, math.inf, 1e-11,
                      tail_bound=airy_sq_tail(lambda z: 0.5 * z + abs(zn))).value
    print(f"  n={n}:")
    print(f"    int Ai^2            = {norm:.12f}   [Ai'(z_n)]^2        = {aip_sq:.12f}")
    print(f"    int z^2 Ai^2        = {mom2:.12f}   (1/5) Ai'^2 z_n^2   = {0.2 * aip_sq * zn * zn:.12f}")
    print(f"    int (z/2 - z_n)Ai^2 = {small:.12f}   -(5/6) Ai'^2 z_n    = {-(5.0 / 6.0) * aip_sq * zn:.12f}")

print("\nfinite-difference eigensolver vs closed forms:")
q = 0.5
pairs = fd_spectrum(lambda r: q * r, Grid1D(0.0, 30.0, 4001), 3, bc="dirichlet-left", kinetic=0.5)
for j, pair in enumerate(pairs):
    exact = radial_level(RadialSpec(q=q), j + 1).energy0
    print(f"  linear q=1/2, n={j + 1}: fd {pair.energy:.7f}  analytic {exact:.7f}"
          f"  diff {pair.energy - exact:+.2e}")

for v0 in (1.0, 4.0, 10.0):
    state = solve_well(WellSpec(v0=v0))
    half_width = 1.0 + 19.0 / math.sqrt(-state.eps_par)

    def v_of(z: float, v0=v0) -> float:
        return v0 * (abs(z) - 1.0) if abs(z) < 1.0 else 0.0

    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        ground = fd_spectrum(v_of, Grid1D(-half_width, half_width, 4001), 1, kinetic=1.0)[0]
    print(f"  well v0={v0:4g}:         fd {ground.energy:.7f}  analytic {state.eps_par:.7f}"
          f"  diff {ground.energy - state.eps_par:+.2e}")
