"""Exact computations with quadratic and Hermitian forms."""

from .errors import DimensionError, HermitiaError, ParseError, SingularMatrixError
from .exact import ComplexMatrix, G, GaussianRational, Q, Rational
from .forms import (
    Definiteness,
    HermitianForm,
    QuadraticForm,
    definiteness,
    delta,
    evaluate,
    hermitian_determinant,
    realify_form,
    realify_map,
    transform,
)
from .foursquares import FourSquares, find_alpha_beta, four_squares, hermite_quaternary
from .geometry import (
    MoebiusMap,
    ProjectivePoint,
    apply_map,
    fixed_point_form,
    fubini_R,
    interior_predicate,
    study_distance,
)
from .groups import (
    FiniteMatrixGroup,
    InvarianceCertificate,
    finite_order_normal_form,
    group_closure,
    modulus_one_check,
    moore_average,
)
from .reduction import (
    MinimumWitness,
    ReductionResult,
    hermite_bound,
    lattice_minimum,
    reduce_binary,
    within_hermite_bound,
)

__version__ = "0.1.0"
