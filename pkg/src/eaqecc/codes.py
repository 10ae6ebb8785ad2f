"""Code parameter types, notation parsing, rates, and parameter-level transformations.

An entanglement-assisted code is written ``[[n,k,d;c]]_q`` (distance optional,
``_q`` omitted for the binary default), a classical code ``[n,k,d]_q``.  All
values here are immutable and all arithmetic is exact.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Optional, Union


class DistanceKind(Enum):
    EXACT = "exact"
    LOWER_BOUND = "lower_bound"


class Degeneracy(Enum):
    NONDEGENERATE = "nondegenerate"
    DEGENERATE = "degenerate"
    UNKNOWN = "unknown"


class CodeError(ValueError):
    """Base for notation / parameter errors."""


class ParseError(CodeError):
    """Syntax error in code notation; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class InvariantError(CodeError):
    """A parameter tuple violates a structural invariant."""


@dataclass(frozen=True)
class EaCode:
    """An [[n,k,d;c]]_q entanglement-assisted code parameter tuple.

    ``c`` counts preshared ebits and cannot exceed the block length ``n``
    (every ebit half the sender keeps is one of the sent qudits).  The
    ancilla count ``n - k - c`` is negative for tuples that trade more than
    half the redundancy of a standard code for ebits, e.g. the [[3,2,2;2]]
    derivative of [[5,2,2]]; such tuples are accepted.  ``d`` may be absent,
    and when present ``d_kind`` says whether it is the exact minimum distance
    or only a lower bound.  Degeneracy is never inferred from the parameters;
    it is carried as an explicit flag.
    """

    n: int
    k: int
    d: Optional[int] = None
    c: int = 0
    q: int = 2
    d_kind: DistanceKind = DistanceKind.EXACT
    degeneracy: Degeneracy = Degeneracy.UNKNOWN

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvariantError(f"n must be positive, got {self.n}")
        if self.k < 1:
            raise InvariantError(f"k must be positive, got {self.k}")
        if self.k > self.n:
            raise InvariantError(f"need k <= n: k={self.k}, n={self.n}")
        if self.q < 2:
            raise InvariantError(f"alphabet size q must be >= 2, got {self.q}")
        if not 0 <= self.c <= self.n:
            raise InvariantError(
                f"ebit count must satisfy 0 <= c <= n: c={self.c}, n={self.n}"
            )
        if self.d is not None:
            if self.d < 1:
                raise InvariantError(f"d must be positive, got {self.d}")
            if self.d_kind is DistanceKind.EXACT and self.d > self.n:
                raise InvariantError(f"exact distance must satisfy d <= n: d={self.d}, n={self.n}")

    @property
    def ancillas(self) -> int:
        return self.n - self.k - self.c

    @property
    def has_standard_form(self) -> bool:
        """True when the ancilla count is non-negative (c <= n - k)."""
        return self.c <= self.n - self.k

    @property
    def is_maximal_entanglement(self) -> bool:
        return self.c == self.n - self.k

    def notation(self) -> str:
        if self.d is None:
            middle = f"{self.n},{self.k}"
        elif self.d_kind is DistanceKind.LOWER_BOUND:
            middle = f"{self.n},{self.k},>={self.d}"
        else:
            middle = f"{self.n},{self.k},{self.d}"
        suffix = f"_{self.q}" if self.q != 2 else ""
        return f"[[{middle};{self.c}]]{suffix}"

    def with_degeneracy(self, degeneracy: Degeneracy) -> "EaCode":
        return replace(self, degeneracy=degeneracy)


@dataclass(frozen=True)
class ClassicalCode:
    """A classical [n,k,d]_q parameter tuple."""

    n: int
    k: int
    d: int
    q: int = 2

    def __post_init__(self) -> None:
        if not 1 <= self.k <= self.n:
            raise InvariantError(f"need 1 <= k <= n: k={self.k}, n={self.n}")
        if not 1 <= self.d <= self.n:
            raise InvariantError(f"need 1 <= d <= n: d={self.d}, n={self.n}")
        if self.q < 2:
            raise InvariantError(f"alphabet size q must be >= 2, got {self.q}")

    def notation(self) -> str:
        suffix = f"_{self.q}" if self.q != 2 else ""
        return f"[{self.n},{self.k},{self.d}]{suffix}"


Code = Union[EaCode, ClassicalCode]


@dataclass(frozen=True)
class RateSummary:
    """Exact code rate r=k/n, assistance rate r_e=c/n, net rate r_n=(k-c)/n,
    and relative distance delta=d/n (absent when d is)."""

    r: Fraction
    r_e: Fraction
    r_n: Fraction
    delta: Optional[Fraction]


def rates(code: EaCode) -> RateSummary:
    n = code.n
    return RateSummary(
        r=Fraction(code.k, n),
        r_e=Fraction(code.c, n),
        r_n=Fraction(code.k - code.c, n),
        delta=Fraction(code.d, n) if code.d is not None else None,
    )


def truncate4(x: Fraction) -> str:
    """Render an exact rational as a decimal truncated (not rounded, toward
    zero) to 4 places, trailing zeros stripped: 8/9 -> '0.8888', -1/4 -> '-0.25'."""
    sign = "-" if x < 0 else ""
    y = -x if x < 0 else x
    whole, rem = divmod(y.numerator, y.denominator)
    frac_digits = rem * 10000 // y.denominator
    if frac_digits == 0:
        return f"{sign}{whole}" if whole or not sign else "0"
    tail = f"{frac_digits:04d}".rstrip("0")
    return f"{sign}{whole}.{tail}"


# Notation grammar:  EA form   "[[" n "," k ("," (">="|"≥")? d)? ";" c "]]" ("_" q)?
#                    classical "["  n "," k ("," d)? "]" ("_" q)?
# with arbitrary internal whitespace; q defaults to 2.
class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def literal(self, token: str) -> bool:
        self.skip_ws()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.literal(token):
            raise ParseError(f"expected '{token}'", self.pos)

    def integer(self, what: str) -> int:
        self.skip_ws()
        m = re.match(r"\d+", self.text[self.pos :])
        if not m:
            raise ParseError(f"expected integer {what}", self.pos)
        self.pos += m.end()
        return int(m.group())

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def parse_code(text: str) -> Code:
    """Parse code notation into a validated EaCode or ClassicalCode.

    Parsed distances are exact unless prefixed with '>=' (or '≥'), which
    marks a lower bound; degeneracy always starts out Unknown.
    """
    s = _Scanner(text)
    s.skip_ws()
    if s.literal("[["):
        ea = True
    elif s.literal("["):
        ea = False
    else:
        raise ParseError("expected '[' or '[['", s.pos)

    n = s.integer("n")
    s.expect(",")
    k = s.integer("k")
    d = None
    d_kind = DistanceKind.EXACT
    if s.literal(","):
        if s.literal(">=") or s.literal("≥"):
            d_kind = DistanceKind.LOWER_BOUND
        d = s.integer("d")

    if ea:
        s.expect(";")
        c = s.integer("c")
        s.expect("]]")
    else:
        s.expect("]")

    q = s.integer("q") if s.literal("_") else 2
    if not s.at_end():
        raise ParseError("unexpected trailing input", s.pos)

    if ea:
        return EaCode(n=n, k=k, d=d, c=c, q=q, d_kind=d_kind)
    if d is None:
        raise ParseError("classical codes require a distance", s.pos)
    if d_kind is DistanceKind.LOWER_BOUND:
        raise ParseError("lower-bound distances apply to EA codes only", s.pos)
    return ClassicalCode(n=n, k=k, d=d, q=q)


def render(code: Code) -> str:
    return code.notation()


def derive_eaqecc(code: EaCode, c_new: int) -> EaCode:
    """Trade c_new physical qudits of a standard (c=0) stabilizer code for
    ebits: [[n,k,d;0]] -> [[n-c_new,k,d;c_new]].  n+c, k and d are invariant."""
    if code.c != 0:
        raise InvariantError(f"derivation starts from a standard code (c=0), got c={code.c}")
    if not 0 <= c_new <= code.n - code.k:
        raise InvariantError(f"need 0 <= c_new <= n-k: c_new={c_new}, n-k={code.n - code.k}")
    if c_new == 0:
        return code
    return EaCode(
        n=code.n - c_new,
        k=code.k,
        d=code.d,
        c=c_new,
        q=code.q,
        d_kind=code.d_kind,
    )


def extend_code(code: EaCode) -> tuple[EaCode, Optional[EaCode]]:
    """Both single-step extensions of an [[n,k,d;c]] code.

    The first, [[n+1,k,d;c+1]], keeps the distance; the second, [[n,k-1;c+1]],
    has no stated distance and exists only for k >= 2 (None otherwise).
    Either way the extended ebit count must fit, i.e. c+1 <= (n+1)-k and
    c+1 <= n-(k-1), both of which amount to c <= n-k.
    """
    if not code.has_standard_form:
        raise InvariantError(
            f"extension needs c+1 <= (n+1)-k: c={code.c}, n-k={code.n - code.k}"
        )
    longer = EaCode(
        n=code.n + 1,
        k=code.k,
        d=code.d,
        c=code.c + 1,
        q=code.q,
        d_kind=code.d_kind,
    )
    if code.k < 2:
        return longer, None
    narrower = EaCode(n=code.n, k=code.k - 1, d=None, c=code.c + 1, q=code.q)
    return longer, narrower


def induce_eaqecc(ccode: ClassicalCode, c: int) -> EaCode:
    """Build the nondegenerate [[n,2k-n+c,d;c]]_s code induced by a classical
    [n,k,d]_{s^2} code, for any c with 2k-n+c >= 1 and c <= n-k."""
    s = math.isqrt(ccode.q)
    if s * s != ccode.q:
        raise InvariantError(f"classical alphabet must be a perfect square, got q={ccode.q}")
    kappa = 2 * ccode.k - ccode.n + c
    if kappa < 1:
        raise InvariantError(f"need 2k-n+c >= 1: k={ccode.k}, n={ccode.n}, c={c}")
    if c > ccode.n - ccode.k:
        raise InvariantError(f"need c <= n-k: c={c}, n-k={ccode.n - ccode.k}")
    return EaCode(
        n=ccode.n,
        k=kappa,
        d=ccode.d,
        c=c,
        q=s,
        degeneracy=Degeneracy.NONDEGENERATE,
    )
