"""JSON- and CSV-friendly views of the domain objects.

Conventions: statuses and enums render as lowercase strings, exact rationals
as {"num": str, "den": str}, and big integer counters (sphere counts, ebit
budgets) as decimal strings so consumers never face 64-bit overflow.
"""

from __future__ import annotations

import io
from enum import Enum
from fractions import Fraction
from typing import Any, Mapping, Sequence

from .bounds import BoundReport, BoundVerdict
from .codes import ClassicalCode, Code, EaCode, RateSummary, truncate4
from .concat import BothOrders, ConcatResult
from .families import ScanResult

_INT53 = 2**53

# detail keys that hold counters which routinely exceed 53 bits
_BIG_COUNTER_KEYS = {"sphere_count", "budget"}


def fraction_dict(value: Fraction) -> dict[str, str]:
    return {"num": str(value.numerator), "den": str(value.denominator)}


def _jsonable(value: Any, key: str = "") -> Any:
    if isinstance(value, Fraction):
        return fraction_dict(value)
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        if key in _BIG_COUNTER_KEYS or abs(value) >= _INT53:
            return str(value)
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (EaCode, ClassicalCode)):
        return code_dict(value)
    if isinstance(value, Mapping):
        return {k: _jsonable(v, k) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def code_dict(code: Code) -> dict[str, Any]:
    if isinstance(code, EaCode):
        return {
            "kind": "ea",
            "notation": code.notation(),
            "n": code.n,
            "k": code.k,
            "d": code.d,
            "d_kind": code.d_kind.value if code.d is not None else None,
            "c": code.c,
            "q": code.q,
            "degeneracy": code.degeneracy.value,
        }
    return {
        "kind": "classical",
        "notation": code.notation(),
        "n": code.n,
        "k": code.k,
        "d": code.d,
        "q": code.q,
    }


def verdict_dict(name: str, verdict: BoundVerdict) -> dict[str, Any]:
    return {
        "bound": name,
        "status": verdict.status.value,
        "slack": fraction_dict(verdict.slack) if verdict.slack is not None else None,
        "reason": verdict.reason,
        "detail": {k: _jsonable(v, k) for k, v in verdict.detail.items()},
    }


def report_dict(report: BoundReport) -> dict[str, Any]:
    return {
        "code": code_dict(report.code),
        "bounds": [verdict_dict(name, verdict) for name, verdict in report.entries],
    }


def rates_dict(summary: RateSummary) -> dict[str, Any]:
    out: dict[str, Any] = {
        "r": fraction_dict(summary.r),
        "r_e": fraction_dict(summary.r_e),
        "r_n": fraction_dict(summary.r_n),
        "r_display": truncate4(summary.r),
        "r_e_display": truncate4(summary.r_e),
        "r_n_display": truncate4(summary.r_n),
    }
    if summary.delta is not None:
        out["delta"] = fraction_dict(summary.delta)
        out["delta_display"] = truncate4(summary.delta)
    return out


def concat_dict(result: ConcatResult) -> dict[str, Any]:
    return {
        "code": code_dict(result.code),
        "procedure": result.procedure.value,
        "outer": code_dict(result.outer),
        "inner": code_dict(result.inner),
        "exact_distance_bound": (
            fraction_dict(result.exact_distance_bound)
            if result.exact_distance_bound is not None
            else None
        ),
        "distance_floored": result.distance_floored,
    }


def both_orders_dict(orders: BothOrders) -> dict[str, Any]:
    return {
        "forward": concat_dict(orders.forward),
        "reverse": concat_dict(orders.reverse),
        "ebit_difference": orders.ebit_difference,
    }


def scan_dict(scan: ScanResult) -> dict[str, Any]:
    return {
        "rows": [
            {
                "n": row.n,
                "notation": row.result.code.notation(),
                "sphere_count": str(row.sphere_count),
                "budget": str(row.budget),
                "verdict": row.verdict.status.value,
                "phi": row.phi,
            }
            for row in scan.rows
        ],
        "onset": scan.onset,
    }


def csv_text(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """RFC-style comma-separated text with a header row and \n line ends."""
    import csv as _csv

    buf = io.StringIO()
    writer = _csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def scan_csv(scan: ScanResult) -> str:
    return csv_text(
        ["n", "notation", "sphere_count", "budget", "verdict", "phi"],
        [
            [
                row.n,
                row.result.code.notation(),
                str(row.sphere_count),
                str(row.budget),
                row.verdict.status.value,
                f"{row.phi:.12f}",
            ]
            for row in scan.rows
        ],
    )


def curve_csv(points: Sequence[tuple[Fraction, Fraction]]) -> str:
    return csv_text(
        ["p", "p_L"],
        [[decimal_str(p), decimal_str(v)] for p, v in points],
    )


def decimal_str(value: Fraction, places: int = 12) -> str:
    """Fixed-point decimal rendering of an exact rational (round-half-even
    not needed; truncation at `places` is fine for plot data)."""
    sign = "-" if value < 0 else ""
    y = -value if value < 0 else value
    whole, rem = divmod(y.numerator, y.denominator)
    digits = rem * 10**places // y.denominator
    text = f"{sign}{whole}.{digits:0{places}d}".rstrip("0").rstrip(".")
    return text if text not in ("", "-") else "0"
