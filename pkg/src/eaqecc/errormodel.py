"""Exact-rational logical-error polynomials, composition, and pseudothresholds.

The noise model is independent depolarizing noise on the sender's n qubits
(X, Y, Z each with probability p/3); receiver halves of ebits are noiseless.
A code that corrects exactly the pattern set E fails with probability

    p_L(p) = 1 - sum_{E in set} (p/3)^wt(E) (1-p)^(n - wt(E)).

Concatenation composes logical-error maps: outer code over inner code gives
p_L(p) = p_outer(p_inner(p)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

Number = Union[int, float, Fraction]

_GRID_POINTS = 1001  # construction-time range check samples p = i/1000


def _as_fraction(value: Number) -> Fraction:
    if isinstance(value, float):
        # interpret floats by their decimal literal, not their binary expansion
        return Fraction(str(value))
    return Fraction(value)


def _strip(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    last = 0
    for i, c in enumerate(coeffs):
        if c != 0:
            last = i + 1
    return tuple(coeffs[:last]) if last else (Fraction(0),)


def _horner(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class ErrorPolynomial:
    """Polynomial in the physical error probability p, constant term first,
    with exact rational coefficients.

    Construction verifies p(0) = 0 and 0 <= p(x) <= 1 at the grid
    x = 0, 1/1000, ..., 1, so any instance is a plausible logical-error
    curve on [0, 1].
    """

    coefficients: tuple[Fraction, ...]
    label: str = ""

    def __post_init__(self) -> None:
        coeffs = _strip([_as_fraction(c) for c in self.coefficients])
        object.__setattr__(self, "coefficients", coeffs)
        if coeffs[0] != 0:
            raise ValueError(f"logical-error polynomial must vanish at p=0, got {coeffs[0]}")
        for i in range(_GRID_POINTS):
            x = Fraction(i, _GRID_POINTS - 1)
            value = _horner(coeffs, x)
            if not 0 <= value <= 1:
                raise ValueError(f"polynomial leaves [0,1] at p={float(x):.3f}: {float(value)}")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, p: Number) -> Union[Fraction, float]:
        if isinstance(p, float):
            acc = 0.0
            for c in reversed(self.coefficients):
                acc = acc * p + c
            return acc
        return _horner(self.coefficients, Fraction(p))


@dataclass(frozen=True)
class CorrectableSet:
    """Set of correctable Pauli patterns over {I,X,Y,Z} on the sender's n qubits."""

    n: int
    patterns: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "patterns", frozenset(self.patterns))
        identity = "I" * self.n
        if identity not in self.patterns:
            raise ValueError("correctable set must contain the identity pattern")
        for pat in self.patterns:
            if len(pat) != self.n or any(ch not in "IXYZ" for ch in pat):
                raise ValueError(f"bad pattern {pat!r}: need length {self.n} over IXYZ")

    @staticmethod
    def weight(pattern: str) -> int:
        return sum(1 for ch in pattern if ch != "I")


# The 16 patterns correctable by the [[3,1,3;2]] repetition code: identity,
# all nine single-qubit errors, and six specific weight-2 X/Z mixtures.
REP_3132_CORRECTABLE = CorrectableSet(
    n=3,
    patterns=frozenset(["III"])
    | frozenset(
        pre + ch + post
        for ch in "XYZ"
        for pre, post in (("", "II"), ("I", "I"), ("II", ""))
    )
    | frozenset(["XZI", "XIZ", "ZXI", "IXZ", "ZIX", "IZX"]),
)


def _binomial_in_p(weight: int, rest: int) -> list[Fraction]:
    """Coefficients of p^weight (1-p)^rest."""
    coeffs = [Fraction(0)] * weight + [
        Fraction(math.comb(rest, j) * (-1) ** j) for j in range(rest + 1)
    ]
    return coeffs


def _padd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def _pscale(a: list[Fraction], s: Fraction) -> list[Fraction]:
    return [c * s for c in a]


def perfect_t_polynomial(n: int, t: int) -> ErrorPolynomial:
    """Logical error of a code correcting every pattern of weight <= t on n
    qubits: 1 - sum_{i<=t} C(n,i) p^i (1-p)^(n-i)."""
    if not 0 <= t <= n:
        raise ValueError(f"need 0 <= t <= n, got t={t}, n={n}")
    survive = [Fraction(0)]
    for i in range(t + 1):
        survive = _padd(survive, _pscale(_binomial_in_p(i, n - i), Fraction(math.comb(n, i))))
    coeffs = _padd([Fraction(1)], _pscale(survive, Fraction(-1)))
    return ErrorPolynomial(tuple(coeffs), label=f"perfect(n={n},t={t})")


def rep_3132_polynomial() -> ErrorPolynomial:
    """Closed-form logical error of the [[3,1,3;2]] repetition code,
    1 - (1-p)^3 - 3(1-p)^2 p - (2/9)(1-p) p^2, keeping the closed form's
    weight-2 coefficient 2/9 verbatim.

    Enumerating the 16-pattern correctable set instead gives 2/3 for that
    coefficient (six patterns at (p/3)^2 each); see
    :func:`rep_3132_discrepancy`.  The closed form is kept canonical here.
    """
    coeffs = [Fraction(1)]
    coeffs = _padd(coeffs, _pscale(_binomial_in_p(0, 3), Fraction(-1)))
    coeffs = _padd(coeffs, _pscale(_binomial_in_p(1, 2), Fraction(-3)))
    coeffs = _padd(coeffs, _pscale(_binomial_in_p(2, 1), Fraction(-2, 9)))
    return ErrorPolynomial(tuple(coeffs), label="rep3132")


def polynomial_from_set(correctable: CorrectableSet) -> ErrorPolynomial:
    """Independent enumeration oracle: p_L from a correctable-pattern set
    under the depolarizing model."""
    survive = [Fraction(0)]
    for pattern in correctable.patterns:
        w = CorrectableSet.weight(pattern)
        survive = _padd(
            survive, _pscale(_binomial_in_p(w, correctable.n - w), Fraction(1, 3**w))
        )
    coeffs = _padd([Fraction(1)], _pscale(survive, Fraction(-1)))
    return ErrorPolynomial(tuple(coeffs), label=f"from_set(n={correctable.n})")


def rep_3132_set_polynomial() -> ErrorPolynomial:
    """Enumeration-oracle variant of the [[3,1,3;2]] repetition-code polynomial."""
    poly = polynomial_from_set(REP_3132_CORRECTABLE)
    return ErrorPolynomial(poly.coefficients, label="rep3132_set")


def rep_3132_discrepancy() -> dict:
    """Side-by-side diagnostic of the closed form (weight-2
    coefficient 2/9) against the correctable-set enumeration (2/3)."""
    closed = rep_3132_polynomial()
    enumerated = rep_3132_set_polynomial()
    return {
        "closed_form": closed,
        "enumerated": enumerated,
        "note": (
            "weight-2 term: closed form uses (2/9) p^2 (1-p); enumerating the "
            "16-pattern correctable set gives 6 (p/3)^2 (1-p) = (2/3) p^2 (1-p)"
        ),
    }


def compose(outer: ErrorPolynomial, inner: ErrorPolynomial) -> ErrorPolynomial:
    """Logical error of outer-over-inner concatenation: outer(inner(p))."""
    acc: list[Fraction] = [Fraction(0)]
    inner_coeffs = list(inner.coefficients)
    for c in reversed(outer.coefficients):
        # acc = acc * inner + c
        out = [Fraction(0)] * (len(acc) + len(inner_coeffs) - 1)
        for i, a in enumerate(acc):
            if a:
                for j, b in enumerate(inner_coeffs):
                    out[i + j] += a * b
        out[0] += c
        acc = out
    label = f"{outer.label or 'outer'}({inner.label or 'inner'})"
    return ErrorPolynomial(tuple(acc), label=label)


def pseudothreshold(poly: ErrorPolynomial, tol: float = 1e-9) -> Optional[float]:
    """Smallest fixed point p* in (0, 0.5] with p_L(p) < p on (0, p*).

    Scans g(p) = p_L(p) - p on a step-0.001 grid and bisects the first
    sign-change bracket down to ``tol``.  Returns None when g stays negative
    up to 0.5 (no crossing in range) and also when g is already non-negative
    at the first grid point (encoding never helps).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if poly.coefficients[0] != 0:
        raise ValueError("pseudothreshold needs p_L(0) = 0")

    def g(x: float) -> float:
        return poly(x) - x

    step = 1e-3
    prev = step
    if g(prev) >= 0:
        return None
    i = 2
    hit = None
    while True:
        x = i * step
        if x > 0.5 + 1e-12:
            break
        if g(x) >= 0:
            hit = x
            break
        prev = x
        i += 1
    if hit is None:
        return None

    lo, hi = prev, hit
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if g(mid) < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def curve(
    poly: ErrorPolynomial,
    p_min: Number,
    p_max: Number,
    steps: int,
) -> list[tuple[Fraction, Fraction]]:
    """Exact evaluations of the polynomial at `steps` uniformly spaced points."""
    lo = _as_fraction(p_min)
    hi = _as_fraction(p_max)
    if not (0 <= lo < hi <= 1):
        raise ValueError(f"need 0 <= p_min < p_max <= 1, got [{lo}, {hi}]")
    if steps < 2:
        raise ValueError(f"need steps >= 2, got {steps}")
    pitch = (hi - lo) / (steps - 1)
    points = []
    for j in range(steps):
        p = lo + j * pitch
        points.append((p, _horner(poly.coefficients, p)))
    return points


def named_polynomials() -> dict[str, ErrorPolynomial]:
    """Registry of the bundled component polynomials for CLI/service use."""
    return {
        "five13": perfect_t_polynomial(5, 1),
        "four131": perfect_t_polynomial(4, 1),
        "rep3132": rep_3132_polynomial(),
        "rep3132_set": rep_3132_set_polynomial(),
    }
