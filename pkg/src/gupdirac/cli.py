"""Command-line interface: reproducible table and plot-data generation.

Subcommands
-----------
gup         commutator coefficients, saturation momentum and minimal length
radial      per-level corrections for the linear radial potential
triangular  one triangular-well ground state with brackets and E1
table1      the 9-column ground-state table over a range of depths
fig1        the two level-correction series (5 z_n/6 and -4 z_n^2/5) as CSV
verify      run the acceptance battery; exit 1 on any failure

Output is a pretty table on a terminal and CSV when redirected; `--format`
overrides.  Identical argv always produces byte-identical output: all inputs
come from flags, every float is printed with repr-quality precision, and no
environment or configuration files are consulted.

Exit codes: 0 success, 1 computation failure (diagnostic on stderr),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from .airy import AiryOverflowError, airy_ai_zero
from .gup import (
    GupParams,
    NoMinimumError,
    commutator_poly_1d,
    minimal_length,
    saturation_momentum,
)
from .numerics import NonConvergenceError
from .radial import RadialSpec, radial_brackets_quadrature, radial_level
from .triangular import (
    NoBoundStateError,
    WellSpec,
    solve_well,
    table1,
    well_brackets,
    well_first_order_terms,
)
from .verify import run_battery

__all__ = ["main"]

_FORMATS = ("table", "csv", "json")


def _positive(text: str) -> float:
    value = float(text)
    if not value > 0.0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text}")
    return value


def _nonnegative(text: str) -> float:
    value = float(text)
    if value < 0.0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text}")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def _fmt(value: float) -> str:
    if isinstance(value, float) and math.isnan(value):
        return "nan"
    if value == 0:
        return "0"  # avoid "-0"
    return format(value, ".12g")


def _emit(rows: list[dict], fmt: str, out) -> None:
    """Render a list of homogeneous {column: value} dicts."""
    if not rows:
        if fmt == "json":
            print("[]", file=out)
        return
    columns = list(rows[0].keys())
    if fmt == "json":
        print(json.dumps(rows, indent=2), file=out)
        return
    cells = [[v if isinstance(v, str) else _fmt(v) for v in row.values()] for row in rows]
    if fmt == "csv":
        print(",".join(columns), file=out)
        for row in cells:
            print(",".join(row), file=out)
        return
    widths = [max(len(col), *(len(r[i]) for r in cells)) for i, col in enumerate(columns)]
    print("  ".join(col.rjust(w) for col, w in zip(columns, widths)), file=out)
    for row in cells:
        print("  ".join(cell.rjust(w) for cell, w in zip(row, widths)), file=out)


def _default_format(out) -> str:
    try:
        return "table" if out.isatty() else "csv"
    except (AttributeError, ValueError):
        return "csv"


def _cmd_gup(args, out) -> int:
    params = GupParams(a=args.a, b=args.b, hbar=args.hbar)
    c0, c1, c2 = commutator_poly_1d(params)
    row: dict = {"c0": c0, "c1": c1, "c2": c2}
    try:
        row["dp_ext"] = saturation_momentum(params)
        row["l_min"] = minimal_length(params)
    except NoMinimumError:
        row["dp_ext"] = "NoMinimum" if args.format != "json" else None
        row["l_min"] = "NoMinimum" if args.format != "json" else None
    _emit([row], args.format, out)
    return 0


def _cmd_radial(args, out) -> int:
    spec = RadialSpec(q=args.q, c=args.c, a=args.a)
    rows = []
    for n in range(1, args.levels + 1):
        level = radial_level(spec, n)
        row = {
            "n": level.n,
            "z_n": level.z,
            "E0": level.energy0,
            "E1_rel": level.e1_rel,
            "E1_gup": level.e1_gup,
            "E1_total": level.e1_total,
        }
        if args.quadrature_check:
            b_ev2, b_small = radial_brackets_quadrature(spec, n)
            row["delta_ev2"] = b_ev2 / level.bracket_ev2 - 1.0
            row["delta_small"] = b_small / level.bracket_small - 1.0
        rows.append(row)
    _emit(rows, args.format, out)
    return 0


def _cmd_triangular(args, out) -> int:
    spec = WellSpec(
        v0=args.v0, parity=args.parity, c=args.c, a=args.a,
        px=args.px, py=args.py, lx=args.Lx, ly=args.Ly,
    )
    state = solve_well(spec)
    brackets = well_brackets(state, spec)
    terms = well_first_order_terms(state, spec, brackets)
    rows = [
        {"quantity": "zeta0", "value": state.zeta0},
        {"quantity": "zeta_l", "value": state.zeta_l},
        {"quantity": "alpha_match", "value": state.alpha_match},
        {"quantity": "eps", "value": state.eps_par},
        {"quantity": "c_a", "value": state.c_a},
        {"quantity": "c_b", "value": state.c_b},
        {"quantity": "c", "value": state.c_out},
        {"quantity": "emv_pp", "value": brackets.emv_pp},
        {"quantity": "emv2_pp", "value": brackets.emv2_pp},
        {"quantity": "epv_mm", "value": brackets.epv_mm},
        {"quantity": "E1_rel", "value": terms.relativistic},
        {"quantity": "E1_gup", "value": terms.deformation},
    ]
    if terms.e_perp > 0.0:
        rows += [
            {"quantity": "E_perp", "value": terms.e_perp},
            {"quantity": "E1_perp_coupling", "value": terms.transverse_coupling},
            {"quantity": "E1_perp_norm", "value": terms.transverse_norm},
            {"quantity": "E1_perp_quadratic", "value": terms.transverse_quadratic},
            {"quantity": "small_norm_z", "value": terms.small_norm_z},
            {"quantity": "small_norm_perp", "value": terms.small_norm_perp},
        ]
    rows.append({"quantity": "E1_total", "value": terms.total})
    _emit(rows, args.format, out)
    return 0


def _cmd_table1(args, out) -> int:
    if args.v0_max < args.v0_min:
        raise ValueError("--v0-max must be >= --v0-min")
    depths = []
    v0 = args.v0_min
    while v0 <= args.v0_max + 1e-12:
        depths.append(round(v0, 12))
        v0 += args.step
    rows = []
    failures = 0
    for row in table1(depths):
        if row.error is not None:
            failures += 1
            print(f"v0={row.v0:g}: {row.error}", file=sys.stderr)
        rows.append(
            {
                "v0": row.v0, "zeta0": row.zeta0, "eps": row.eps_par,
                "c_a": row.c_a, "c_b": row.c_b, "c": row.c_out,
                "emv_pp": row.emv_pp, "emv2_pp": row.emv2_pp, "epv_mm": row.epv_mm,
            }
        )
    _emit(rows, args.format, out)
    return 1 if failures else 0


def _cmd_fig1(args, out) -> int:
    rows = [
        {
            "n": n,
            "rel_coeff": 5.0 * airy_ai_zero(n).z / 6.0,
            "gup_coeff": -4.0 * airy_ai_zero(n).z ** 2 / 5.0,
        }
        for n in range(1, args.levels + 1)
    ]
    fmt = "csv" if args.format == "table" else args.format  # plot data: CSV by default
    _emit(rows, fmt, out)
    return 0


def _cmd_verify(args, out) -> int:
    return 0 if run_battery(out) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gupdirac",
        description="Energy-level corrections for the Dirac equation with "
        "deformed momenta in linear potentials",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=_FORMATS, default=None,
                       help="output format (default: table on a tty, csv otherwise)")

    p = sub.add_parser("gup", help="commutator coefficients and minimal length")
    p.add_argument("--a", type=_nonnegative, required=True)
    p.add_argument("--b", type=_nonnegative, required=True)
    p.add_argument("--hbar", type=_positive, default=1.0)
    add_format(p)
    p.set_defaults(run=_cmd_gup)

    p = sub.add_parser("radial", help="linear radial potential levels")
    p.add_argument("--q", type=_positive, default=1.0, help="potential slope")
    p.add_argument("--c", type=_positive, default=1.0, help="speed of light")
    p.add_argument("--a", type=_nonnegative, default=0.0, help="deformation")
    p.add_argument("--levels", type=_positive_int, default=10)
    p.add_argument("--quadrature-check", action="store_true",
                   help="append closed-form vs quadrature relative deltas")
    add_format(p)
    p.set_defaults(run=_cmd_radial)

    p = sub.add_parser("triangular", help="triangular well ground state")
    p.add_argument("--v0", type=_positive, required=True, help="well depth")
    p.add_argument("--parity", choices=("even", "odd"), default="even")
    p.add_argument("--c", type=_positive, default=1.0)
    p.add_argument("--a", type=_nonnegative, default=0.0)
    p.add_argument("--px", type=_nonnegative, default=0.0)
    p.add_argument("--py", type=_nonnegative, default=0.0)
    p.add_argument("--Lx", type=_positive, default=1.0)
    p.add_argument("--Ly", type=_positive, default=1.0)
    add_format(p)
    p.set_defaults(run=_cmd_triangular)

    p = sub.add_parser("table1", help="ground-state table over a depth range")
    p.add_argument("--v0-min", dest="v0_min", type=_positive, default=1.0)
    p.add_argument("--v0-max", dest="v0_max", type=_positive, default=10.0)
    p.add_argument("--step", type=_positive, default=1.0)
    add_format(p)
    p.set_defaults(run=_cmd_table1)

    p = sub.add_parser("fig1", help="level-correction series as plot data")
    p.add_argument("--levels", type=_positive_int, default=10)
    add_format(p)
    p.set_defaults(run=_cmd_fig1)

    p = sub.add_parser("verify", help="run the acceptance battery")
    p.set_defaults(run=_cmd_verify, format="table")

    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "format", None) is None:
        args.format = _default_format(out)
    try:
        return args.run(args, out)
    except (
        AiryOverflowError,
        NoBoundStateError,
        NoMinimumError,
        NonConvergenceError,
        ValueError,
    ) as exc:
        print(f"gupdirac {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
