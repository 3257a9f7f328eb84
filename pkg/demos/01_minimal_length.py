"""Deformed commutator, uncertainty saturation and the minimal length.

Walks the (a, b) deformation of [X, P] = i hbar (1 - 2aP + (3b - 2a^2) P^2):
prints the commutator coefficients, sweeps the saturation curve to show the
minimum position spread, and maps the b >= a^2 positivity frontier.
"""

import numpy as np

from gupdirac import (
    GupParams,
    NoMinimumError,
    commutator_poly_1d,
    minimal_length,
    saturation_curve,
    saturation_momentum,
)

params = GupParams(a=0.1, b=0.02)
c0, c1, c2 = commutator_poly_1d(params)
print(f"commutator polynomial for a={params.a}, b={params.b}:")
print(f"  [X, P] = i hbar ({c0:+g} {c1:+g} P {c2:+g} P^2)")

dp_ext = saturation_momentum(params)
l_min = minimal_length(params)
print(f"\nsaturation minimum: (dP)_ext = {dp_ext:g}, l_min = {l_min:g}")

print("\nsweep of the saturated dX(dP) around the minimum:")
for dp in np.geomspace(0.2 * dp_ext, 5.0 * dp_ext, 9):
    marker = "  <- minimum" if abs(dp - dp_ext) < 1e-9 else ""
    print(f"  dP = {dp:8.4f}   dX = {saturation_curve(params, float(dp)):.6f}{marker}")

# the quadratic special case b = 2 a^2 collapses l_min to hbar a
for a in (0.05, 0.1, 0.2):
    print(f"\nb = 2a^2 with a = {a}: l_min = {minimal_length(GupParams(a=a, b=2 * a * a)):.12g}")

# positivity frontier: l_min >= 0 exactly when b >= a^2
print("\npositivity scan (rows a, columns b):")
bs = [0.0125, 0.025, 0.05, 0.1]
print("          " + "".join(f"b={b:<8g}" for b in bs))
for a in (0.05, 0.1, 0.15, 0.2):
    cells = []
    for b in bs:
        try:
            cells.append("+" if minimal_length(GupParams(a=a, b=b)) >= 0 else "-")
        except NoMinimumError:
            cells.append(".")
    print(f"  a={a:<6g} " + "".join(f"{c:<10}" for c in cells))
print("('+' positive minimal length, '-' negative, '.' no interior minimum)")
