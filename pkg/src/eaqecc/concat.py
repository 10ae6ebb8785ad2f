"""Parameter-level concatenation of EA codes under both procedures.

With an outer [[n_o,k_o,d_o;c_o]] and inner [[n_i,k_i,d_i;c_i]] code:

* divisible route (k_i | n_o):    [[n_o n_i / k_i, k_o, d >= d_o d_i / k_i; c_o + c_i n_o / k_i]]
* non-divisible route (k_i | n_o fails): [[n_o n_i, k_o k_i, d >= d_o d_i; c_o k_i + c_i n_o]]

The resulting distance is always a lower bound and the resulting degeneracy
is unknown; concatenation can introduce degeneracy even from nondegenerate
components.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .codes import DistanceKind, EaCode


class Procedure(Enum):
    DIVISIBLE = "divisible"
    NON_DIVISIBLE = "non_divisible"


class ConcatError(ValueError):
    pass


@dataclass(frozen=True)
class ConcatResult:
    code: EaCode
    procedure: Procedure
    outer: EaCode
    inner: EaCode
    # Exact rational d_o d_i / k_i before flooring, kept when distances are
    # known; distance_floored marks the k_i-does-not-divide-d_o*d_i case.
    exact_distance_bound: Optional[Fraction] = None
    distance_floored: bool = False


@dataclass(frozen=True)
class BothOrders:
    forward: ConcatResult
    reverse: ConcatResult
    ebit_difference: int


def concat(outer: EaCode, inner: EaCode, force: Optional[Procedure] = None) -> ConcatResult:
    """Concatenate outer over inner, dispatching on whether k_i divides n_o.

    ``force`` pins the procedure: the divisible route requires k_i | n_o,
    while the non-divisible route is always available.
    """
    if outer.q != inner.q:
        raise ConcatError(f"alphabet mismatch: outer q={outer.q}, inner q={inner.q}")
    divisible = outer.n % inner.k == 0
    if force is Procedure.DIVISIBLE and not divisible:
        raise ConcatError(
            f"divisible procedure needs k_i | n_o: k_i={inner.k} does not divide n_o={outer.n}"
        )
    procedure = force if force is not None else (
        Procedure.DIVISIBLE if divisible else Procedure.NON_DIVISIBLE
    )

    if procedure is Procedure.DIVISIBLE:
        blocks = outer.n // inner.k
        n = blocks * inner.n
        k = outer.k
        c = outer.c + inner.c * blocks
    else:
        n = outer.n * inner.n
        k = outer.k * inner.k
        c = outer.c * inner.k + inner.c * outer.n

    d: Optional[int] = None
    exact_bound: Optional[Fraction] = None
    floored = False
    if outer.d is not None and inner.d is not None:
        if procedure is Procedure.DIVISIBLE:
            exact_bound = Fraction(outer.d * inner.d, inner.k)
            floored = exact_bound.denominator != 1
            d = exact_bound.numerator // exact_bound.denominator
        else:
            exact_bound = Fraction(outer.d * inner.d)
            d = outer.d * inner.d
        if d < 1:
            d = None  # floored bound is vacuous; drop the distance entirely

    code = EaCode(
        n=n,
        k=k,
        d=d,
        c=c,
        q=outer.q,
        d_kind=DistanceKind.LOWER_BOUND if d is not None else DistanceKind.EXACT,
    )
    return ConcatResult(
        code=code,
        procedure=procedure,
        outer=outer,
        inner=inner,
        exact_distance_bound=exact_bound,
        distance_floored=floored,
    )


def both_orders(a: EaCode, b: EaCode) -> BothOrders:
    """Concatenate in both orders and report the ebit difference c(a over b) - c(b over a)."""
    forward = concat(a, b)
    reverse = concat(b, a)
    return BothOrders(
        forward=forward,
        reverse=reverse,
        ebit_difference=forward.code.c - reverse.code.c,
    )


def chain_stages(codes: Sequence[EaCode]) -> list[ConcatResult]:
    """Left-fold concatenation, one ConcatResult per stage."""
    if len(codes) < 2:
        raise ConcatError(f"chain needs at least two codes, got {len(codes)}")
    stages: list[ConcatResult] = []
    acc = codes[0]
    for index, nxt in enumerate(codes[1:], start=1):
        try:
            stage = concat(acc, nxt)
        except ConcatError as exc:
            raise ConcatError(f"stage {index}: {exc}") from exc
        stages.append(stage)
        acc = stage.code
    return stages


def chain_concat(codes: Sequence[EaCode]) -> ConcatResult:
    """Final result of the left-fold chain (((c1 over c2) over c3) ...)."""
    return chain_stages(codes)[-1]
