"""Exact desingularization of linear difference and differential operators.

The package works over the rationals with exact arithmetic throughout:
dense polynomials and reduced rational functions (algebra), the skew ring
C(z)[E] with Ez = (z+1)E (shiftop), apparent-singularity analysis through
the epsilon lift (apparent), the desingularization algorithms themselves
(desing), sequence continuation across singularities (continuation), and
the differential-operator analogue (diffop, ddesing).
"""

from .algebra import Poly, PrincipalPart, RatFun, dispersion, laurent_expand
from .apparent import (
    RelationMatrix,
    RSet,
    c_relations,
    choose_q,
    is_apparent_l,
    is_apparent_t,
    r_set,
)
from .continuation import (
    SequenceWindow,
    denominator_primes,
    extend,
    extend_via_desing,
)
from .ddesing import (
    DDesingResult,
    LocalData,
    annihilator_of_ratfuns,
    d_desing,
    is_apparent_diff,
    is_completely_d_desingularizable,
    jet_match,
    local_exponents,
    series_solution_dim,
)
from .desing import (
    DesingResult,
    desing_both,
    is_completely_desingularizable,
    l_desing,
    t_desing,
)
from .diffop import D, DiffOp, diff_mul, diff_right_divrem
from .errors import DesingError, OperatorSyntaxError, UnsupportedAlgebraicPointError
from .parsing import (
    operator_from_json,
    operator_to_json,
    parse_operator,
    print_operator,
)
from .shiftop import (
    E,
    ShiftOp,
    SingularityData,
    op_automorphism,
    op_normalize,
    op_right_divrem,
    singularity_data,
)

__version__ = "0.1.0"

__all__ = [
    "Poly",
    "RatFun",
    "PrincipalPart",
    "dispersion",
    "laurent_expand",
    "ShiftOp",
    "E",
    "SingularityData",
    "singularity_data",
    "op_right_divrem",
    "op_automorphism",
    "op_normalize",
    "RSet",
    "RelationMatrix",
    "choose_q",
    "r_set",
    "c_relations",
    "is_apparent_t",
    "is_apparent_l",
    "DesingResult",
    "t_desing",
    "l_desing",
    "desing_both",
    "is_completely_desingularizable",
    "SequenceWindow",
    "extend",
    "extend_via_desing",
    "denominator_primes",
    "DiffOp",
    "D",
    "diff_mul",
    "diff_right_divrem",
    "LocalData",
    "DDesingResult",
    "local_exponents",
    "series_solution_dim",
    "is_apparent_diff",
    "annihilator_of_ratfuns",
    "jet_match",
    "d_desing",
    "is_completely_d_desingularizable",
    "parse_operator",
    "print_operator",
    "operator_to_json",
    "operator_from_json",
    "DesingError",
    "OperatorSyntaxError",
    "UnsupportedAlgebraicPointError",
    "__version__",
]
