"""Operation handlers: pydantic request in, pydantic response out.

These are plain functions so both the HTTP routes and the CLI call the same
implementation; domain problems surface as ValueError and are mapped to
HTTP 400 or CLI exit code 1 by the respective frontends.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .. import serialize
from ..bounds import bound_report
from ..codes import Degeneracy, EaCode, parse_code, rates, truncate4
from ..concat import Procedure, both_orders, concat
from ..errormodel import (
    ErrorPolynomial,
    compose,
    curve,
    named_polynomials,
    pseudothreshold,
    rep_3132_discrepancy,
)
from ..families import family, reversed_scan_eahb, scan_eahb
from .models import (
    CheckRequest,
    CheckResponse,
    ConcatRequest,
    ConcatResponse,
    CurvePoint,
    CurveRequest,
    CurveResponse,
    FamilyMemberOut,
    FamilyResponse,
    PseudothresholdRequest,
    PseudothresholdResponse,
    RationalIn,
    ScanRequest,
    ScanResponse,
    Table1Response,
    Table1Row,
)

# the worked concatenation examples whose rates the `table1` surface reports
TABLE1_CODES = ("[[9,1,9;8]]", "[[12,1,9;5]]", "[[15,1,9;2]]", "[[16,1,9;5]]", "[[20,1,9;1]]")

_RN_DISCREPANCY_NOTE = (
    "[[15,1,9;2]]: r_n = (k-c)/n = (1-2)/15 = -0.0666; the value -0.6666 "
    "sometimes quoted for this code is inconsistent with that formula"
)

_REP3132_NOTE = (
    "rep3132 uses the closed-form weight-2 coefficient 2/9; enumerating its "
    "16-pattern correctable set gives 2/3 instead (see rep3132_set)"
)


def check(request: CheckRequest) -> CheckResponse:
    code = parse_code(request.code)
    if request.degeneracy is not None:
        if not isinstance(code, EaCode):
            raise ValueError("degeneracy flags apply to EA codes only")
        code = code.with_degeneracy(Degeneracy(request.degeneracy))
    report = bound_report(code)
    payload = serialize.report_dict(report)
    rate_block = serialize.rates_dict(rates(code)) if isinstance(code, EaCode) else None
    return CheckResponse(**payload, rates=rate_block)


def concat_codes(request: ConcatRequest) -> ConcatResponse:
    outer = _parse_ea(request.outer)
    inner = _parse_ea(request.inner)
    force = None
    if request.force is not None:
        force = Procedure.DIVISIBLE if request.force == 1 else Procedure.NON_DIVISIBLE
    if request.both_orders:
        if force is not None:
            raise ValueError("--both-orders uses automatic dispatch; drop the forced procedure")
        orders = both_orders(outer, inner)
        payload = serialize.both_orders_dict(orders)
        return ConcatResponse(**payload)
    result = concat(outer, inner, force=force)
    return ConcatResponse(result=serialize.concat_dict(result))


def _parse_ea(text: str) -> EaCode:
    code = parse_code(text)
    if not isinstance(code, EaCode):
        raise ValueError(f"{text!r} is a classical code; concatenation takes EA codes")
    return code


def _coefficients_from(models: list[RationalIn]) -> ErrorPolynomial:
    coeffs = [Fraction(int(m.num), int(m.den)) for m in models]
    return ErrorPolynomial(tuple(coeffs), label="custom")


def resolve_polynomial(
    outer: Optional[str],
    inner: Optional[str],
    coefficients: Optional[list[RationalIn]],
) -> tuple[ErrorPolynomial, list[str]]:
    """Build the working polynomial from a registry name pair, a single name,
    or explicit coefficients; returns it with any diagnostic notes."""
    if coefficients is not None:
        if outer or inner:
            raise ValueError("give either polynomial names or explicit coefficients, not both")
        return _coefficients_from(coefficients), []
    registry = named_polynomials()
    notes = []

    def lookup(name: str) -> ErrorPolynomial:
        if name not in registry:
            raise ValueError(f"unknown polynomial {name!r}; known: {', '.join(registry)}")
        if name == "rep3132" and _REP3132_NOTE not in notes:
            notes.append(_REP3132_NOTE)
        return registry[name]

    if outer and inner:
        poly = compose(lookup(outer), lookup(inner))
    elif outer:
        poly = lookup(outer)
    else:
        raise ValueError("need an outer polynomial name or explicit coefficients")
    return poly, notes


def pseudothreshold_handler(request: PseudothresholdRequest) -> PseudothresholdResponse:
    poly, notes = resolve_polynomial(request.outer, request.inner, request.coefficients)
    value = pseudothreshold(poly, tol=request.tol)
    if value is None:
        notes = notes + ["no fixed point at or below 0.5"]
    return PseudothresholdResponse(label=poly.label, value=value, tol=request.tol, notes=notes)


def scan(request: ScanRequest) -> ScanResponse:
    fam = family(request.outer_family)
    partner = _resolve_partner(request.inner)
    if request.reversed:
        result = reversed_scan_eahb(partner, fam, request.n_min, request.n_max)
    else:
        result = scan_eahb(fam, partner, request.n_min, request.n_max)
    return ScanResponse(**serialize.scan_dict(result))


def _resolve_partner(text: str) -> EaCode:
    if text.lstrip().startswith("["):
        return _parse_ea(text)
    spec = family(text)
    if spec.n_max is None:
        raise ValueError(f"{text!r} is an indexed family; give a fixed code or constant name")
    return spec.member(spec.n_min)


def family_info(name: str, n_min: Optional[int] = None, n_max: Optional[int] = None) -> FamilyResponse:
    spec = family(name)
    if spec.n_max is not None:
        lo, hi = spec.n_min, spec.n_max
    else:
        lo = spec.n_min if n_min is None else n_min
        hi = n_max if n_max is not None else lo + 20
    members = [
        FamilyMemberOut(n=n, code=serialize.code_dict(spec.member(n)))
        for n in spec.indices(lo, hi)
    ]
    return FamilyResponse(
        name=spec.name,
        parity=spec.parity.value,
        n_min=spec.n_min,
        n_max=spec.n_max,
        description=spec.description,
        members=members,
    )


def table1() -> Table1Response:
    rows = []
    for text in TABLE1_CODES:
        code = parse_code(text)
        summary = rates(code)
        rows.append(
            Table1Row(
                notation=text,
                r=truncate4(summary.r),
                r_e=truncate4(summary.r_e),
                r_n=truncate4(summary.r_n),
                delta=truncate4(summary.delta),
            )
        )
    return Table1Response(rows=rows, notes=[_RN_DISCREPANCY_NOTE])


def curve_handler(request: CurveRequest) -> CurveResponse:
    poly, _ = resolve_polynomial(request.outer, request.inner, request.coefficients)
    points = curve(poly, request.p_min, request.p_max, request.steps)
    return CurveResponse(
        label=poly.label,
        points=[
            CurvePoint(p=serialize.decimal_str(p), p_l=serialize.decimal_str(v)) for p, v in points
        ],
    )


def discrepancy_notes() -> dict:
    return rep_3132_discrepancy()
