"""Local dual spaces, intersection multiplicities and ideal membership over Q."""

from .dualspace import (
    DualSpaceBasis,
    apply_functional,
    dual_space,
    is_D_invariant,
    multiple_condition_rows,
    multiplicity,
    paper_condition_rows,
    truncated_dual,
)
from .errors import (
    ArityMismatch,
    BoundViolation,
    DomainError,
    InputError,
    InvalidRoot,
    IrrationalRoots,
    NonIsolatedPoint,
    NotVanishing,
    NotZeroDimensional,
    PolySyntaxError,
    ShapeMismatch,
    UnknownVariable,
    WrongArity,
    ZeroPolynomial,
)
from .exactla import RationalMatrix, null_space, row_space_equal, rref
from .groebner import (
    GREVLEX,
    INFINITE,
    LEX,
    GroebnerBasis,
    MonomialOrder,
    buchberger,
    normal_form,
    quotient_dimension,
    solve_rational,
    standard_monomials,
    univariate_rational_roots,
)
from .polycore import (
    Polynomial,
    degree_and_leading_form,
    differentiate,
    evaluate,
    format_poly,
    parse_poly,
    pow_poly,
    ring_op,
    shift_to_origin,
)
from .theorems import (
    BezoutReport,
    MembershipTester,
    MembershipVerdict,
    PolynomialSystem,
    PowerCertificate,
    Verdict,
    bezout_report,
    dual_member,
    infinity_check_2d,
    nullstellensatz_power,
    verify_common_zero,
)

__version__ = "0.1.0"
