"""Named code families, EA-Hamming-bound scans over them, and saturation audits.

The bundled families are the EA repetition codes [[n,1,n;n-1]] (odd n) and
[[n,1,n-1;n-1]] (even n), their single-step extensions [[n+1,1,n;n]] and
[[n+1,1,n-1;n]], and three fixed companion codes [[8,1,5;1]], [[7,1,5;2]],
[[9,1,7;4]] used as concatenation partners.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Optional, Sequence

from .bounds import (
    BoundStatus,
    BoundVerdict,
    classical_griesmer,
    classical_plotkin,
    ea_griesmer,
    ea_hamming,
    hamming_efficiency,
    linear_ea_plotkin,
    induced_griesmer_saturation_predicate,
    induced_plotkin_saturation_predicate,
)
from .codes import ClassicalCode, Degeneracy, EaCode, induce_eaqecc
from .concat import ConcatResult, concat


class Parity(Enum):
    ODD = "odd"
    EVEN = "even"
    ANY = "any"


@dataclass(frozen=True)
class FamilySpec:
    """A code family indexed by n, possibly parity-constrained; fixed codes
    are represented as single-member families."""

    name: str
    parity: Parity
    n_min: int
    generator: Callable[[int], EaCode]
    n_max: Optional[int] = None  # only for fixed codes
    description: str = ""

    def admissible(self, n: int) -> bool:
        if n < self.n_min or (self.n_max is not None and n > self.n_max):
            return False
        if self.parity is Parity.ODD:
            return n % 2 == 1
        if self.parity is Parity.EVEN:
            return n % 2 == 0
        return True

    def member(self, n: int) -> EaCode:
        if not self.admissible(n):
            raise ValueError(f"index {n} not admissible for family {self.name}")
        return self.generator(n)

    def indices(self, n_lo: int, n_hi: int) -> list[int]:
        return [n for n in range(n_lo, n_hi + 1) if self.admissible(n)]


def _fixed(name: str, code: EaCode, description: str) -> FamilySpec:
    return FamilySpec(
        name=name,
        parity=Parity.ANY,
        n_min=code.n,
        n_max=code.n,
        generator=lambda _n: code,
        description=description,
    )


_FAMILIES: dict[str, FamilySpec] = {
    "rep_odd": FamilySpec(
        name="rep_odd",
        parity=Parity.ODD,
        n_min=3,
        generator=lambda n: EaCode(n=n, k=1, d=n, c=n - 1, degeneracy=Degeneracy.NONDEGENERATE),
        description="[[n,1,n;n-1]] EA repetition codes, odd n",
    ),
    "rep_even": FamilySpec(
        name="rep_even",
        parity=Parity.EVEN,
        n_min=4,
        generator=lambda n: EaCode(
            n=n, k=1, d=n - 1, c=n - 1, degeneracy=Degeneracy.NONDEGENERATE
        ),
        description="[[n,1,n-1;n-1]] EA repetition codes, even n",
    ),
    "rep_odd_ext": FamilySpec(
        name="rep_odd_ext",
        parity=Parity.ODD,
        n_min=3,
        generator=lambda n: EaCode(n=n + 1, k=1, d=n, c=n),
        description="[[n+1,1,n;n]] extensions of the odd repetition codes",
    ),
    "rep_even_ext": FamilySpec(
        name="rep_even_ext",
        parity=Parity.EVEN,
        n_min=4,
        generator=lambda n: EaCode(n=n + 1, k=1, d=n - 1, c=n),
        description="[[n+1,1,n-1;n]] extensions of the even repetition codes",
    ),
    "C1": _fixed(
        "C1",
        EaCode(n=8, k=1, d=5, c=1, degeneracy=Degeneracy.DEGENERATE),
        "[[8,1,5;1]], degenerate, violates the EA Hamming bound",
    ),
    "C2": _fixed("C2", EaCode(n=7, k=1, d=5, c=2), "[[7,1,5;2]]"),
    "C4": _fixed("C4", EaCode(n=9, k=1, d=7, c=4), "[[9,1,7;4]]"),
}


def family_names() -> list[str]:
    return list(_FAMILIES)


def family(name: str) -> FamilySpec:
    try:
        return _FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; known: {', '.join(_FAMILIES)}") from None


# Default scan ceilings: far enough to certify every violation onset with
# margin while keeping the big-integer sums sub-second.
DEFAULT_N_MAX = {Parity.ODD: 99, Parity.EVEN: 110, Parity.ANY: 99}


@dataclass(frozen=True)
class ScanRow:
    n: int
    result: ConcatResult
    sphere_count: int
    budget: int
    verdict: BoundVerdict
    phi: float

    @property
    def violated(self) -> bool:
        return self.verdict.status is BoundStatus.VIOLATED


@dataclass(frozen=True)
class ScanResult:
    rows: tuple[ScanRow, ...]
    onset: Optional[int]

    def all_satisfy(self) -> bool:
        return not any(row.violated for row in self.rows)


def _scan(pairs: Iterable[tuple[int, ConcatResult]]) -> ScanResult:
    rows = []
    for n, result in pairs:
        verdict = ea_hamming(result.code)
        rows.append(
            ScanRow(
                n=n,
                result=result,
                sphere_count=verdict.detail["sphere_count"],
                budget=verdict.detail["budget"],
                verdict=verdict,
                phi=hamming_efficiency(result.code),
            )
        )
    onset = None
    for i in range(len(rows) - 1, -1, -1):
        if not rows[i].violated:
            break
        onset = rows[i].n
    return ScanResult(rows=tuple(rows), onset=onset)


def scan_eahb(
    outer: FamilySpec,
    inner: EaCode,
    n_min: Optional[int] = None,
    n_max: Optional[int] = None,
) -> ScanResult:
    """Concatenate family(n) over the fixed inner code for each admissible n
    and test the EA Hamming bound at the concatenated distance lower bound.

    The onset is the smallest n from which every admissible n in range
    violates the bound (None when the range does not end in violations).
    """
    lo = outer.n_min if n_min is None else n_min
    hi = DEFAULT_N_MAX[outer.parity] if n_max is None else n_max
    indices = outer.indices(lo, hi)
    if not indices:
        raise ValueError(f"no admissible indices for {outer.name} in [{lo}, {hi}]")
    return _scan((n, concat(outer.member(n), inner)) for n in indices)


def reversed_scan_eahb(
    outer: EaCode,
    inner: FamilySpec,
    n_min: Optional[int] = None,
    n_max: Optional[int] = None,
) -> ScanResult:
    """Same scan with the roles swapped: fixed outer code over family(n)."""
    lo = inner.n_min if n_min is None else n_min
    hi = DEFAULT_N_MAX[inner.parity] if n_max is None else n_max
    indices = inner.indices(lo, hi)
    if not indices:
        raise ValueError(f"no admissible indices for {inner.name} in [{lo}, {hi}]")
    return _scan((n, concat(outer, inner.member(n))) for n in indices)


@dataclass(frozen=True)
class AuditRow:
    c: int
    code: EaCode
    verdict: BoundVerdict
    predicate: bool


def griesmer_family_audit(ccode: ClassicalCode, c_range: Sequence[int]) -> list[AuditRow]:
    """For a Griesmer-saturating quaternary code, tabulate the induced codes
    over a c range with their EA Griesmer verdicts and the saturation
    predicate (maximal entanglement or d <= 4^kappa); the two must agree."""
    if classical_griesmer(ccode).status is not BoundStatus.SATURATED:
        raise ValueError(f"{ccode.notation()} does not saturate the classical Griesmer bound")
    rows = []
    for c in c_range:
        induced = induce_eaqecc(ccode, c)
        rows.append(
            AuditRow(
                c=c,
                code=induced,
                verdict=ea_griesmer(induced),
                predicate=induced_griesmer_saturation_predicate(ccode, c),
            )
        )
    return rows


def plotkin_family_audit(ccode: ClassicalCode, c_range: Sequence[int]) -> list[AuditRow]:
    """Plotkin analogue of :func:`griesmer_family_audit`, pairing the linear
    EA Plotkin verdict with its saturation predicate."""
    if classical_plotkin(ccode).status is not BoundStatus.SATURATED:
        raise ValueError(f"{ccode.notation()} does not saturate the classical Plotkin bound")
    rows = []
    for c in c_range:
        induced = induce_eaqecc(ccode, c)
        rows.append(
            AuditRow(
                c=c,
                code=induced,
                verdict=linear_ea_plotkin(induced),
                predicate=induced_plotkin_saturation_predicate(ccode, c),
            )
        )
    return rows
