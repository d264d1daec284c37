"""Exact Groebner bases, p-bases, and shortest linear recurrences over Z_{p^r}."""

from .errors import (
    DimensionMismatch,
    EnumerationTooLarge,
    IterationLimitExceeded,
    MixedRings,
    NotAUnit,
    NotInModule,
    NotReducible,
    ParseError,
    PGroebnerError,
    PivotNotUnique,
    RingNotField,
    ValidationFailed,
    ZeroVector,
)
from .groebner import (
    GroebnerBasis,
    LeadData,
    PlmReport,
    buchberger,
    check_plm,
    is_groebner,
    lead_data,
    minimalize,
    module_equal,
    normal_form,
    normalize_lc,
    reduce_step,
)
from .lrr import (
    LrrSolution,
    SequenceInput,
    brute_force_shortest,
    build_module,
    enumerate_shortest,
    is_lrr,
    shortest_lrr,
)
from .pbasis import (
    OrderDiffs,
    PBasis,
    build_p_basis,
    check_p_plm,
    format_p_basis,
    order_differences,
    p_dim,
    p_represent,
)
from .polyvec import (
    POT,
    TOP,
    Monomial,
    MonomialOrder,
    Poly,
    PolyVec,
    compare,
    format_matrix,
    format_poly,
    format_vector,
    parse_matrix,
    parse_poly,
    parse_vector,
)
from .ring import RingElem, Zpr, order, p_adic_expand, unit_inverse

__version__ = "0.1.0"
