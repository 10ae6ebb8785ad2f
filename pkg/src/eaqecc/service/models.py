"""Pydantic request/response models: the wire contract shared by the HTTP
service and the CLI (which emits the same JSON payloads)."""

from __future__ import annotations

from typing import Any, Literal, Optional, Union

from pydantic import BaseModel, Field


class RationalOut(BaseModel):
    num: str
    den: str


class RationalIn(BaseModel):
    num: Union[int, str]
    den: Union[int, str] = 1


class CodeOut(BaseModel):
    kind: Literal["ea", "classical"]
    notation: str
    n: int
    k: int
    d: Optional[int] = None
    d_kind: Optional[str] = None
    c: Optional[int] = None
    q: int
    degeneracy: Optional[str] = None


class VerdictOut(BaseModel):
    bound: str
    status: str
    slack: Optional[RationalOut] = None
    reason: Optional[str] = None
    detail: dict[str, Any] = Field(default_factory=dict)


class CheckRequest(BaseModel):
    code: str
    degeneracy: Optional[Literal["degenerate", "nondegenerate"]] = None


class CheckResponse(BaseModel):
    code: CodeOut
    bounds: list[VerdictOut]
    rates: Optional[dict[str, Any]] = None


class ConcatRequest(BaseModel):
    outer: str
    inner: str
    force: Optional[Literal[1, 2]] = None
    both_orders: bool = False


class ConcatOut(BaseModel):
    code: CodeOut
    procedure: str
    outer: CodeOut
    inner: CodeOut
    exact_distance_bound: Optional[RationalOut] = None
    distance_floored: bool = False


class ConcatResponse(BaseModel):
    result: Optional[ConcatOut] = None
    forward: Optional[ConcatOut] = None
    reverse: Optional[ConcatOut] = None
    ebit_difference: Optional[int] = None


class PseudothresholdRequest(BaseModel):
    outer: Optional[str] = None
    inner: Optional[str] = None
    coefficients: Optional[list[RationalIn]] = None
    tol: float = 1e-9


class PseudothresholdResponse(BaseModel):
    label: str
    value: Optional[float] = None
    tol: float
    notes: list[str] = Field(default_factory=list)


class ScanRequest(BaseModel):
    outer_family: str
    inner: str
    n_min: Optional[int] = None
    n_max: Optional[int] = None
    reversed: bool = False


class ScanRowOut(BaseModel):
    n: int
    notation: str
    sphere_count: str
    budget: str
    verdict: str
    phi: float


class ScanResponse(BaseModel):
    rows: list[ScanRowOut]
    onset: Optional[int] = None


class FamilyMemberOut(BaseModel):
    n: int
    code: CodeOut


class FamilyResponse(BaseModel):
    name: str
    parity: str
    n_min: int
    n_max: Optional[int] = None
    description: str
    members: list[FamilyMemberOut]


class Table1Row(BaseModel):
    notation: str
    r: str
    r_e: str
    r_n: str
    delta: str


class Table1Response(BaseModel):
    rows: list[Table1Row]
    notes: list[str] = Field(default_factory=list)


class CurveRequest(BaseModel):
    outer: Optional[str] = None
    inner: Optional[str] = None
    coefficients: Optional[list[RationalIn]] = None
    p_min: Union[str, float] = "0"
    p_max: Union[str, float] = "0.5"
    steps: int = 101


class CurvePoint(BaseModel):
    p: str
    p_l: str


class CurveResponse(BaseModel):
    label: str
    points: list[CurvePoint]


class ErrorResponse(BaseModel):
    error: str
