"""First-order energy corrections for the Dirac equation with deformed
(minimal-length) momenta, for two linear scalar potentials: a radial linear
potential and a 1D triangular well.

The package is organized around self-contained numerics (Airy functions,
adaptive Gauss-Kronrod quadrature, Brent root finding, a Sturm-sequence
finite-difference eigensolver) so every closed form ships with an independent
verification route.
"""

from .airy import (
    AiryOverflowError,
    AiryValues,
    AiryZero,
    airy,
    airy_ai,
    airy_ai_zero,
    airy_zero_estimate,
)
from .gup import (
    GupParams,
    NoMinimumError,
    commutator_poly_1d,
    generalized_momentum,
    invert_momentum,
    minimal_length,
    saturation_curve,
    saturation_momentum,
)
from .numerics import (
    Bracket,
    InvalidBracketError,
    NonConvergenceError,
    QuadratureResult,
    find_root,
    integrate,
)
from .radial import (
    RadialLevel,
    RadialSpec,
    radial_brackets_quadrature,
    radial_level,
    radial_wavefunction,
    small_bracket_derivative_form,
)
from .schrodinger import (
    BoundaryDecayWarning,
    EigenPair,
    Grid1D,
    GridTooCoarseError,
    count_nodes,
    fd_spectrum,
)
from .triangular import (
    BracketSet,
    FirstOrderTerms,
    NoBoundStateError,
    Table1Row,
    WellSpec,
    WellState,
    solve_well,
    table1,
    well_brackets,
    well_first_order,
    well_first_order_terms,
    well_wavefunction,
    well_wavefunction_derivative,
)

__version__ = "0.1.0"

__all__ = [
    "AiryOverflowError",
    "AiryValues",
    "AiryZero",
    "BoundaryDecayWarning",
    "Bracket",
    "BracketSet",
    "EigenPair",
    "FirstOrderTerms",
    "Grid1D",
    "GridTooCoarseError",
    "GupParams",
    "InvalidBracketError",
    "NoBoundStateError",
    "NoMinimumError",
    "NonConvergenceError",
    "QuadratureResult",
    "RadialLevel",
    "RadialSpec",
    "Table1Row",
    "WellSpec",
    "WellState",
    "airy",
    "airy_ai",
    "airy_ai_zero",
    "airy_zero_estimate",
    "commutator_poly_1d",
    "count_nodes",
    "fd_spectrum",
    "find_root",
    "generalized_momentum",
    "integrate",
    "invert_momentum",
    "minimal_length",
    "radial_brackets_quadrature",
    "radial_level",
    "radial_wavefunction",
    "saturation_curve",
    "saturation_momentum",
    "small_bracket_derivative_form",
    "solve_well",
    "table1",
    "well_brackets",
    "well_first_order",
    "well_first_order_terms",
    "well_wavefunction",
    "well_wavefunction_derivative",
]
