"""Triangular well: ground-state table, parity states and first-order terms.

Reproduces the 9-column ground-state table for v0 = 1..10 (even parity),
shows an odd-parity state in a deeper well, and assembles the first-order
correction with and without transverse box modes.
"""

from gupdirac import (
    WellSpec,
    solve_well,
    table1,
    well_brackets,
    well_first_order_terms,
    well_wavefunction,
)

print("ground states, even parity (dimensionless units, hbar = m = L = 1):\n")
header = ("v0", "zeta0", "eps", "c_a", "c_b", "c", "<e-v>", "<(e-v)^2>", "<e+v>--")
print("".join(f"{h:>11}" for h in header))
for row in table1([float(v) for v in range(1, 11)]):
    cells = (row.v0, row.zeta0, row.eps_par, row.c_a, row.c_b, row.c_out,
             row.emv_pp, row.emv2_pp, row.epv_mm)
    print("".join(f"{c:11.6g}" for c in cells))

print("\nthe deep-well drift of zeta0 heads to the first zero of Ai' (-1.01879...):")
for v0 in (10.0, 50.0, 100.0):
    state = solve_well(WellSpec(v0=v0))
    print(f"  v0 = {v0:5g}: zeta0 = {state.zeta0:.6f}")

# odd parity binds only in a deep enough well
spec_odd = WellSpec(v0=20.0, parity="odd")
odd = solve_well(spec_odd)
print(f"\nv0 = 20 odd ground state: zeta0 = {odd.zeta0:.6f}, eps = {odd.eps_par:.6f}")
print(f"psi(0) = {well_wavefunction(odd, spec_odd, 0.0):.2e} (odd parity node at the origin)")

# first-order correction: the two p_perp = 0 terms counterbalance when a ~ 1/c
c = 137.036
spec = WellSpec(v0=1.0, c=c, a=1.0 / c)
state = solve_well(spec)
brackets = well_brackets(state, spec)
terms = well_first_order_terms(state, spec, brackets)
print(f"\nv0 = 1, c = {c}, a = 1/c:")
print(f"  relativistic term  {terms.relativistic:+.4e}")
print(f"  deformation term   {terms.deformation:+.4e}")
print(f"  E1 total           {terms.total:+.4e}")

# transverse box modes (width-2 boxes in x and y, lowest mode each)
spec_perp = WellSpec.with_box_modes(1.0, 1, 1, 2.0, 2.0, c=c, a=1.0 / c)
terms_perp = well_first_order_terms(state, spec_perp, brackets)
print(f"\nsame well with box modes (E_perp = {terms_perp.e_perp:.4f}):")
print(f"  transverse coupling   {terms_perp.transverse_coupling:+.4e}")
print(f"  lower-spinor norm     {terms_perp.transverse_norm:+.4e}"
      f"  (z part {terms_perp.small_norm_z:.3e}, perp part {terms_perp.small_norm_perp:.3e})")
print(f"  quadratic term        {terms_perp.transverse_quadratic:+.4e}")
print(f"  E1 total              {terms_perp.total:+.4e}")
