"""Symbolic verification engine for continual Lie algebras whose root
spaces are tensor powers of a free noncommutative algebra.

The package builds exact polynomial values over formal words, applies
the catalogued mapping families to generic arguments, and decides the
defining identities by normal-form residuals. Commutative limits are
first-class: they can be printed as classical mapping sets and checked
against the same identities.
"""

from .errors import (
    IndexOutOfOrder,
    NegativePowerGroup,
    NotApplicable,
    OrderMismatch,
    ParseError,
    RootspaceError,
    UnsupportedFamily,
    UnsupportedMapping,
)
from .scalars import Coefficient
from .words import (
    EAtom,
    Generator,
    Grouped,
    apply_derivative,
    eword_product,
    gen_atom,
    gen_word,
    normalize_word,
)
from .tensor import (
    Polynomial,
    ZERO_POLY,
    add,
    d_all,
    d_k,
    glue,
    is_zero,
    mono,
    neg,
    pointwise_product,
    poly_sum,
    polynomial,
    reverse,
    scale,
    sub,
    tensor_commutator,
    tensor_concat,
)
from .catalog import (
    CLASSICAL_FAMILIES,
    FAMILIES,
    NCRS_FAMILIES,
    MappingId,
    apply_mapping,
    family_slots,
    generic_monomial,
    mapping_table,
    parse_mapping,
)
from .limits import (
    LIMIT_MODES,
    ORDER_ONE,
    TENSOR_COLLAPSE,
    ClassicalMappingSet,
    collapse,
    commutativize,
    leibniz_expand,
    limit_applier,
    limit_mapping_set,
)
from .identities import (
    COMMUTATIVE,
    LEIBNIZ,
    NONCOMMUTATIVE,
    IdentityId,
    Mode,
    ProofTrace,
    Report,
    applicable_identities,
    check_suite,
    graded_jacobi_residual,
    parse_identity,
    residual,
    trace_identity,
)
from .textio import parse_poly, print_poly, report_json, report_line

__version__ = "0.1.0"

__all__ = [
    "RootspaceError",
    "IndexOutOfOrder",
    "OrderMismatch",
    "UnsupportedMapping",
    "NotApplicable",
    "NegativePowerGroup",
    "UnsupportedFamily",
    "ParseError",
    "Coefficient",
    "Generator",
    "Grouped",
    "EAtom",
    "gen_atom",
    "gen_word",
    "normalize_word",
    "apply_derivative",
    "eword_product",
    "Polynomial",
    "ZERO_POLY",
    "polynomial",
    "mono",
    "add",
    "sub",
    "neg",
    "scale",
    "poly_sum",
    "is_zero",
    "tensor_concat",
    "glue",
    "d_k",
    "d_all",
    "reverse",
    "tensor_commutator",
    "pointwise_product",
    "FAMILIES",
    "NCRS_FAMILIES",
    "CLASSICAL_FAMILIES",
    "MappingId",
    "parse_mapping",
    "family_slots",
    "apply_mapping",
    "mapping_table",
    "generic_monomial",
    "LIMIT_MODES",
    "ORDER_ONE",
    "TENSOR_COLLAPSE",
    "ClassicalMappingSet",
    "commutativize",
    "leibniz_expand",
    "collapse",
    "limit_applier",
    "limit_mapping_set",
    "Mode",
    "NONCOMMUTATIVE",
    "COMMUTATIVE",
    "LEIBNIZ",
    "IdentityId",
    "parse_identity",
    "Report",
    "ProofTrace",
    "applicable_identities",
    "residual",
    "check_suite",
    "graded_jacobi_residual",
    "trace_identity",
    "parse_poly",
    "print_poly",
    "report_line",
    "report_json",
]
