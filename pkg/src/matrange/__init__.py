"""Exact-arithmetic solvability analysis of f(X) = A for entire functions of
complex matrices, over the Gaussian rationals Q(i)."""

from .scalars import GaussianRational, Qi, parse_scalar, render_scalar
from .polynomials import (
    Poly,
    RootWithMultiplicity,
    InexactDivisionError,
    gcd_monic,
    squarefree_decomposition,
    gaussian_rational_roots,
    critical_value_polynomial,
)
from .functions import (
    EntireFunction,
    RamificationProfile,
    TheoremCase,
    polynomial_function,
    sin_family,
    exp_poly_family,
    ramification_profile,
    preimage_roots,
    validate,
)
from .matrices import (
    MatrixQi,
    SegrePartition,
    JordanDecomposition,
    char_poly,
    segre_at,
    is_in_E,
    is_in_S,
    jordan_decomposition,
    apply_poly,
    f_of_jordan_block,
)
from .ranges import (
    SplitPattern,
    RangeVerdict,
    split_pattern,
    split_pattern_oracle,
    coverable,
    decide_range,
    build_witness,
    describe_range,
)
from .errors import (
    MatrangeError,
    ParseError,
    PreconditionError,
    InternalInvariantError,
    WitnessUnavailable,
)

__all__ = [name for name in dir() if not name.startswith("_")]
