"""Exact-arithmetic toolkit for entanglement-assisted quantum error-correcting
codes: parameter types, bound checks, concatenation, logical-error composition,
and family scans."""

from .bounds import (
    BoundReport,
    BoundStatus,
    BoundVerdict,
    bound_report,
    classical_griesmer,
    classical_griesmer_based,
    classical_plotkin,
    ea_griesmer,
    ea_griesmer_rains,
    ea_hamming,
    ea_singleton,
    ea_singleton_high_distance,
    hamming_efficiency,
    linear_ea_plotkin,
    max_correctable_errors_cap,
    saturation_trio,
    induced_griesmer_saturation_predicate,
    induced_plotkin_saturation_predicate,
)
from .codes import (
    ClassicalCode,
    CodeError,
    Degeneracy,
    DistanceKind,
    EaCode,
    InvariantError,
    ParseError,
    RateSummary,
    derive_eaqecc,
    extend_code,
    induce_eaqecc,
    parse_code,
    rates,
    render,
    truncate4,
)
from .concat import (
    BothOrders,
    ConcatError,
    ConcatResult,
    Procedure,
    both_orders,
    chain_concat,
    chain_stages,
    concat,
)
from .errormodel import (
    REP_3132_CORRECTABLE,
    CorrectableSet,
    ErrorPolynomial,
    compose,
    curve,
    named_polynomials,
    perfect_t_polynomial,
    polynomial_from_set,
    pseudothreshold,
    rep_3132_discrepancy,
    rep_3132_polynomial,
    rep_3132_set_polynomial,
)
from .families import (
    AuditRow,
    FamilySpec,
    Parity,
    ScanResult,
    ScanRow,
    family,
    family_names,
    griesmer_family_audit,
    plotkin_family_audit,
    reversed_scan_eahb,
    scan_eahb,
)

__version__ = "0.1.0"
