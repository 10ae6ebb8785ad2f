"""Exact-arithmetic bound checks for EA and classical code parameter tuples.

Every verdict is decided by integer or rational comparison; floats appear
only in the Hamming-efficiency metric and never influence a status.  Slack
follows the convention (bound side) - (constrained side), so slack >= 0 means
the bound holds and slack == 0 means it is saturated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Mapping, Optional

from .codes import ClassicalCode, Code, Degeneracy, DistanceKind, EaCode


class BoundStatus(Enum):
    NOT_APPLICABLE = "not_applicable"
    SATISFIED = "satisfied"
    SATURATED = "saturated"
    VIOLATED = "violated"


@dataclass(frozen=True)
class BoundVerdict:
    status: BoundStatus
    slack: Optional[Fraction] = None
    reason: Optional[str] = None
    detail: Mapping[str, object] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        """True when the bound is met (satisfied or saturated)."""
        return self.status in (BoundStatus.SATISFIED, BoundStatus.SATURATED)


def _verdict(slack: Fraction, **detail: object) -> BoundVerdict:
    slack = Fraction(slack)
    if slack == 0:
        status = BoundStatus.SATURATED
    elif slack < 0:
        status = BoundStatus.VIOLATED
    else:
        status = BoundStatus.SATISFIED
    return BoundVerdict(status=status, slack=slack, detail=detail)


def _not_applicable(reason: str, **detail: object) -> BoundVerdict:
    return BoundVerdict(status=BoundStatus.NOT_APPLICABLE, reason=reason, detail=detail)


def _require_distance(code: Code) -> int:
    if code.d is None:
        raise ValueError(f"{code.notation()} has no distance; bound needs d")
    return code.d


def _lower_bound_note(code: EaCode, detail: dict) -> None:
    if code.d_kind is DistanceKind.LOWER_BOUND:
        detail["distance_note"] = "at stated lower-bound distance"


# ---------------------------------------------------------------------------
# EA Singleton bound, both regimes
# ---------------------------------------------------------------------------

def _singleton_standard_slack(code: EaCode) -> Fraction:
    # k <= c + n - 2d + 2
    return Fraction(code.c + code.n - 2 * code.d + 2 - code.k)


def _singleton_high_distance_slack(code: EaCode) -> Fraction:
    # k <= (n-d+1)(c+2d-2-n) / (3d-3-n), meaningful only for d >= n/2 + 1
    n, k, d, c = code.n, code.k, code.d, code.c
    rhs = Fraction((n - d + 1) * (c + 2 * d - 2 - n), 3 * d - 3 - n)
    return rhs - k


def ea_singleton(code: EaCode) -> BoundVerdict:
    """EA Singleton bound with degeneracy-aware regime dispatch.

    Nondegenerate codes (and degenerate ones with d <= n/2 + 1) face
    k <= c + n - 2d + 2; degenerate codes with d >= n/2 + 1 face the
    high-distance form instead.  With unknown degeneracy both applicable
    regimes are evaluated and the weaker (larger-slack) verdict is adopted,
    with both slacks recorded in the detail map.
    """
    d = _require_distance(code)
    high_applicable = 2 * d >= code.n + 2  # d >= n/2 + 1
    detail: dict = {}
    _lower_bound_note(code, detail)

    std = _singleton_standard_slack(code)
    detail["standard_slack"] = std
    if high_applicable:
        high = _singleton_high_distance_slack(code)
        detail["high_distance_slack"] = high

    if code.degeneracy is Degeneracy.NONDEGENERATE:
        detail["regime"] = "standard"
        return _verdict(std, **detail)
    if code.degeneracy is Degeneracy.DEGENERATE:
        if high_applicable:
            detail["regime"] = "high_distance"
            return _verdict(high, **detail)
        detail["regime"] = "standard"
        return _verdict(std, **detail)

    # Unknown degeneracy: be conservative, report the regime that is harder
    # to violate.  Below d = n/2 + 1 both degeneracy cases face the standard
    # form anyway.
    if not high_applicable:
        detail["regime"] = "standard"
        return _verdict(std, **detail)
    detail["regime"] = "weaker_of_both"
    return _verdict(max(std, high), **detail)


def ea_singleton_high_distance(code: EaCode) -> BoundVerdict:
    """High-distance EA Singleton regime alone; not applicable below d = n/2 + 1."""
    d = _require_distance(code)
    if 2 * d < code.n + 2:
        return _not_applicable("requires d >= n/2 + 1")
    detail: dict = {}
    _lower_bound_note(code, detail)
    return _verdict(_singleton_high_distance_slack(code), **detail)


# ---------------------------------------------------------------------------
# EA Hamming bound and Hamming efficiency
# ---------------------------------------------------------------------------

def sphere_count(n: int, t: int) -> int:
    """Number of Pauli patterns of weight <= t on n qubits: sum 3^i C(n,i)."""
    return sum(3**i * math.comb(n, i) for i in range(t + 1))


def ea_hamming(code: EaCode) -> BoundVerdict:
    """Binary EA Hamming bound: sum_{i<=t} 3^i C(n,i) <= 2^(n-k+c), t = floor((d-1)/2).

    The bound governs nondegenerate codes, so a violation by a real code
    certifies that it is degenerate.  For lower-bound distances a violation
    is monotone: it persists at any true d at or above the bound.
    """
    d = _require_distance(code)
    if code.q != 2:
        return _not_applicable("stated for binary codes only (weight factor 3)")
    t = (d - 1) // 2
    s = sphere_count(code.n, t)
    budget = 2 ** (code.n - code.k + code.c)
    detail: dict = {"t": t, "sphere_count": s, "budget": budget}
    _lower_bound_note(code, detail)
    if s > budget:
        detail["violation_certifies_degeneracy"] = True
        if code.d_kind is DistanceKind.LOWER_BOUND:
            detail["monotone_note"] = "violated at the lower bound, hence at any true d >= bound"
    return _verdict(Fraction(budget - s), **detail)


def _log2_bigint(value: int) -> float:
    """log2 of a positive integer to well beyond 12 significant digits,
    via bit length plus top-64-bit mantissa extraction."""
    bits = value.bit_length()
    if bits <= 64:
        return math.log2(value)
    shift = bits - 64
    return shift + math.log2(value >> shift)


def hamming_efficiency(code: EaCode) -> float:
    """phi = log2(sphere count) / (n - k + c).

    phi > 1 coincides with an EA Hamming violation; callers deciding status
    must still use the exact integer comparison in :func:`ea_hamming`.
    """
    d = _require_distance(code)
    denom = code.n - code.k + code.c
    if denom == 0:
        raise ValueError("Hamming efficiency undefined: n - k + c = 0")
    s = sphere_count(code.n, (d - 1) // 2)
    return _log2_bigint(s) / denom


# ---------------------------------------------------------------------------
# Griesmer / Plotkin family of bounds
# ---------------------------------------------------------------------------

def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def classical_griesmer(ccode: ClassicalCode) -> BoundVerdict:
    """Classical Griesmer bound: n >= sum_{i<k} ceil(d / q^i)."""
    total = sum(_ceil_div(ccode.d, ccode.q**i) for i in range(ccode.k))
    return _verdict(Fraction(ccode.n - total), griesmer_sum=total)


def ea_griesmer(code: EaCode) -> BoundVerdict:
    """EA Griesmer bound: (n+c+k)/2 >= sum_{i<k} ceil(d / q^(2i)).

    Applies to codes derived from a classical q^2-ary code; that hypothesis
    is not checkable from the parameters and is carried as a note.
    """
    d = _require_distance(code)
    total = sum(_ceil_div(d, code.q ** (2 * i)) for i in range(code.k))
    lhs = Fraction(code.n + code.c + code.k, 2)
    detail: dict = {
        "griesmer_sum": total,
        "applicability_note": "assumes derivation from a classical q^2-ary code",
    }
    _lower_bound_note(code, detail)
    return _verdict(lhs - total, **detail)


def classical_plotkin(ccode: ClassicalCode) -> BoundVerdict:
    """Classical Plotkin bound (q-1)n q^k / (q(q^k - 1)) >= d, applicable
    only when d > (1 - 1/q) n."""
    if Fraction(ccode.d) <= Fraction(ccode.q - 1, ccode.q) * ccode.n:
        return _not_applicable("requires d > (1 - 1/q) n")
    qk = ccode.q**ccode.k
    lhs = Fraction((ccode.q - 1) * ccode.n * qk, ccode.q * (qk - 1))
    return _verdict(lhs - ccode.d, plotkin_lhs=lhs)


def linear_ea_plotkin(code: EaCode) -> BoundVerdict:
    """Linear EA Plotkin bound: (q^2-1) q^(2k) (n+c+k) / (2 q^2 (q^(2k)-1)) >= d."""
    d = _require_distance(code)
    q2 = code.q**2
    q2k = q2**code.k
    lhs = Fraction((q2 - 1) * q2k * (code.n + code.c + code.k), 2 * q2 * (q2k - 1))
    detail: dict = {
        "plotkin_lhs": lhs,
        "applicability_note": "assumes derivation from a classical q^2-ary code",
    }
    _lower_bound_note(code, detail)
    return _verdict(lhs - d, **detail)


def classical_griesmer_based(ccode: ClassicalCode) -> BoundVerdict:
    """Griesmer-derived redundancy bound n-k >= d(1 + 1/q) - 2 for d >= q."""
    if ccode.d < ccode.q:
        return _not_applicable("requires d >= q")
    rhs = Fraction(ccode.d) * (1 + Fraction(1, ccode.q)) - 2
    return _verdict(Fraction(ccode.n - ccode.k) - rhs, rhs=rhs)


def ea_griesmer_rains(code: EaCode) -> BoundVerdict:
    """EA Griesmer-Rains bound n-k+c >= 2d(1 + 1/q^2) - 4 for d >= q^2."""
    d = _require_distance(code)
    q2 = code.q**2
    if d < q2:
        return _not_applicable("requires d >= q^2")
    rhs = 2 * Fraction(d) * (1 + Fraction(1, q2)) - 4
    detail: dict = {"rhs": rhs}
    _lower_bound_note(code, detail)
    return _verdict(Fraction(code.n - code.k + code.c) - rhs, **detail)


def max_correctable_errors_cap(code: EaCode) -> int:
    """Cap on the number of correctable errors for codes with d >= q^2:
    floor((q^2 (n-k+c) + 2q^2 - 2) / (4 (q^2 + 1))).

    The derivation equates floor((d-1)/2) with this expression, so it is an
    inclusive cap for conforming codes.
    """
    d = _require_distance(code)
    q2 = code.q**2
    if d < q2:
        raise ValueError(f"cap requires d >= q^2: d={d}, q^2={q2}")
    return (q2 * (code.n - code.k + code.c) + 2 * q2 - 2) // (4 * (q2 + 1))


# ---------------------------------------------------------------------------
# Saturation predicates
# ---------------------------------------------------------------------------

def saturation_trio(code: EaCode) -> bool:
    """For k=1 codes: whether the EA Singleton, EA Griesmer, and linear EA
    Plotkin bounds are all saturated, which happens exactly when
    d = (n + 1 + c) / 2.

    Rejects degenerate codes with d >= n/2 + 1, where the standard Singleton
    regime (on which the equivalence rests) does not apply.
    """
    d = _require_distance(code)
    if code.k != 1:
        raise ValueError(f"saturation trio is a k=1 statement, got k={code.k}")
    if code.degeneracy is Degeneracy.DEGENERATE and 2 * d >= code.n + 2:
        raise ValueError(
            f"{code.notation()} is degenerate with d >= n/2 + 1; trio equivalence does not apply"
        )
    return 2 * d == code.n + 1 + code.c


def induced_griesmer_saturation_predicate(ccode: ClassicalCode, c: int) -> bool:
    """Whether the [[n,2k-n+c,d;c]] code induced by a Griesmer-saturating
    quaternary code saturates the EA Griesmer bound: maximal entanglement
    or d <= 4^kappa."""
    if ccode.q != 4:
        raise ValueError(f"stated for quaternary classical codes, got q={ccode.q}")
    if classical_griesmer(ccode).status is not BoundStatus.SATURATED:
        raise ValueError(f"{ccode.notation()} does not saturate the classical Griesmer bound")
    kappa = 2 * ccode.k - ccode.n + c
    if kappa < 1 or c > ccode.n - ccode.k:
        raise ValueError(f"c={c} out of range for induction from {ccode.notation()}")
    if c == ccode.n - kappa:
        return True
    return ccode.d <= 4**kappa


def induced_plotkin_saturation_predicate(ccode: ClassicalCode, c: int) -> bool:
    """Whether the code induced by a Plotkin-saturating quaternary code
    saturates the linear EA Plotkin bound: maximal entanglement or
    (d/3) (1 - 4^(-a/2)) / 4^(kappa-1) = a/2 with a = 2(n-k-c)."""
    if ccode.q != 4:
        raise ValueError(f"stated for quaternary classical codes, got q={ccode.q}")
    if classical_plotkin(ccode).status is not BoundStatus.SATURATED:
        raise ValueError(f"{ccode.notation()} does not saturate the classical Plotkin bound")
    kappa = 2 * ccode.k - ccode.n + c
    if kappa < 1 or c > ccode.n - ccode.k:
        raise ValueError(f"c={c} out of range for induction from {ccode.notation()}")
    if c == ccode.n - kappa:
        return True
    a = 2 * (ccode.n - ccode.k - c)
    lhs = Fraction(ccode.d, 3) * (1 - Fraction(1, 4 ** (a // 2))) / 4 ** (kappa - 1)
    return lhs == Fraction(a, 2)


# ---------------------------------------------------------------------------
# Consolidated report
# ---------------------------------------------------------------------------

EA_BOUNDS: tuple[tuple[str, Callable[[EaCode], BoundVerdict]], ...] = (
    ("ea_singleton", ea_singleton),
    ("ea_singleton_high_distance", ea_singleton_high_distance),
    ("ea_hamming", ea_hamming),
    ("ea_griesmer", ea_griesmer),
    ("linear_ea_plotkin", linear_ea_plotkin),
    ("ea_griesmer_rains", ea_griesmer_rains),
)

CLASSICAL_BOUNDS: tuple[tuple[str, Callable[[ClassicalCode], BoundVerdict]], ...] = (
    ("griesmer", classical_griesmer),
    ("plotkin", classical_plotkin),
    ("griesmer_based", classical_griesmer_based),
)


@dataclass(frozen=True)
class BoundReport:
    code: Code
    entries: tuple[tuple[str, BoundVerdict], ...]

    def verdict(self, name: str) -> BoundVerdict:
        for entry_name, verdict in self.entries:
            if entry_name == name:
                return verdict
        raise KeyError(name)


def bound_report(code: Code) -> BoundReport:
    """Evaluate every registered bound for the code; bounds that need an
    absent distance come back NotApplicable instead of raising."""
    registry = EA_BOUNDS if isinstance(code, EaCode) else CLASSICAL_BOUNDS
    entries = []
    for name, check in registry:
        if code.d is None:
            entries.append((name, _not_applicable("distance not specified")))
        else:
            entries.append((name, check(code)))
    return BoundReport(code=code, entries=tuple(entries))
