"""HTTP surface: one endpoint per toolkit operation.

Run with ``uvicorn eaqecc.service.app:app``.  Domain errors (bad notation,
violated invariants, unknown names) come back as HTTP 400 with an
``{"error": ...}`` body; payload-shape problems are FastAPI's usual 422.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import handlers
from .models import (
    CheckRequest,
    CheckResponse,
    ConcatRequest,
    ConcatResponse,
    CurveRequest,
    CurveResponse,
    ErrorResponse,
    FamilyResponse,
    PseudothresholdRequest,
    PseudothresholdResponse,
    ScanRequest,
    ScanResponse,
    Table1Response,
)

app = FastAPI(
    title="eaqecc",
    description=(
        "Exact-arithmetic analysis of entanglement-assisted quantum "
        "error-correcting codes: bound checks, concatenation, logical-error "
        "pseudothresholds, and family scans."
    ),
    version="0.1.0",
)


@app.exception_handler(ValueError)
async def _domain_error(_request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=400, content=ErrorResponse(error=str(exc)).model_dump())


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/check", response_model=CheckResponse, responses={400: {"model": ErrorResponse}})
def check(request: CheckRequest) -> CheckResponse:
    return handlers.check(request)


@app.post("/concat", response_model=ConcatResponse, responses={400: {"model": ErrorResponse}})
def concat(request: ConcatRequest) -> ConcatResponse:
    return handlers.concat_codes(request)


@app.post(
    "/pseudothreshold",
    response_model=PseudothresholdResponse,
    responses={400: {"model": ErrorResponse}},
)
def pseudothreshold(request: PseudothresholdRequest) -> PseudothresholdResponse:
    return handlers.pseudothreshold_handler(request)


@app.post("/scan-eahb", response_model=ScanResponse, responses={400: {"model": ErrorResponse}})
def scan_eahb(request: ScanRequest) -> ScanResponse:
    return handlers.scan(request)


@app.get(
    "/family/{name}", response_model=FamilyResponse, responses={400: {"model": ErrorResponse}}
)
def family(name: str, n_min: int | None = None, n_max: int | None = None) -> FamilyResponse:
    return handlers.family_info(name, n_min, n_max)


@app.get("/table1", response_model=Table1Response)
def table1() -> Table1Response:
    return handlers.table1()


@app.post("/curve", response_model=CurveResponse, responses={400: {"model": ErrorResponse}})
def curve(request: CurveRequest) -> CurveResponse:
    return handlers.curve_handler(request)
