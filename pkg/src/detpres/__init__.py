"""Exact multiplication matrices and determinantal presentations.

Construct embedded varieties (products of projective spaces, polytope
dilations, presented rings), build the multiplication matrices of bundle
factorizations, and decide whether the 2-minors present the embedding ideal,
optionally certified by Groebner bases.  All arithmetic is exact over the
rationals.
"""

from .groebner import (
    BudgetExceeded,
    GroebnerBasis,
    GroebnerBudget,
    Ideal,
    buchberger,
    eliminate,
    ideal_contains,
    ideal_equal,
    normal_form,
    ring_map_kernel,
)
from .linalg import RationalMatrix, in_row_space, kernel_basis, matrix_rank
from .orders import GREVLEX, LEX, BlockElimination, Grevlex, Lex, TermOrder, WeightOrder
from .poly import (
    Polynomial,
    PolynomialRing,
    PolynomialSyntaxError,
    format_polynomial,
    parse_polynomial,
)
from .presentation import (
    Factorization,
    MultiplicationMatrix,
    PresentationReport,
    QuadraticPart,
    SoundnessError,
    build_omega,
    check_presentation,
    enumerate_splits,
    homogeneous_ideal,
    minor_span_dim,
    minors,
    one_generic_witness_search,
    quadratic_part,
    theorem_split,
)
from .varieties import (
    CoordinatePresentation,
    EmbeddedVariety,
    ExpansionError,
    LatticePolytope,
    SectionBasis,
    gamma_dim,
    presented_variety,
    segre_veronese,
    toric_variety,
    variety_from_json,
)

__version__ = "0.1.0"

__all__ = [
    "BlockElimination",
    "BudgetExceeded",
    "CoordinatePresentation",
    "EmbeddedVariety",
    "ExpansionError",
    "Factorization",
    "GREVLEX",
    "Grevlex",
    "GroebnerBasis",
    "GroebnerBudget",
    "Ideal",
    "LEX",
    "LatticePolytope",
    "Lex",
    "MultiplicationMatrix",
    "Polynomial",
    "PolynomialRing",
    "PolynomialSyntaxError",
    "PresentationReport",
    "QuadraticPart",
    "RationalMatrix",
    "SectionBasis",
    "SoundnessError",
    "TermOrder",
    "WeightOrder",
    "buchberger",
    "build_omega",
    "check_presentation",
    "eliminate",
    "enumerate_splits",
    "format_polynomial",
    "gamma_dim",
    "homogeneous_ideal",
    "ideal_contains",
    "ideal_equal",
    "in_row_space",
    "kernel_basis",
    "matrix_rank",
    "minor_span_dim",
    "minors",
    "normal_form",
    "one_generic_witness_search",
    "parse_polynomial",
    "presented_variety",
    "quadratic_part",
    "ring_map_kernel",
    "segre_veronese",
    "theorem_split",
    "toric_variety",
    "variety_from_json",
]
