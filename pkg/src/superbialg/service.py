"""HTTP front end: every verification operation behind a POST endpoint.

Run with `uvicorn superbialg.service:app`.  Request bodies are small
parameter models; responses are the same ReproductionReport payloads the
CLI prints.
"""
from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import api

app = FastAPI(
    title="superbialg",
    description=(
        "Exact verification service for the gl(1|1) superbialgebra "
        "classification, its Drinfeld superdoubles, graded Poisson "
        "structures, the superunit-disc integrable system, and the "
        "Hopf-superalgebra deformations."
    ),
)


class AlgebraRequest(BaseModel):
    name: str | None = None
    document: str | None = Field(default=None, description="algebra JSON text")
    params: dict[str, str] = Field(default_factory=dict)


class DualRequest(BaseModel):
    dual: str = "I22"
    params: dict[str, str] = Field(default_factory=dict)


class RMatrixRequest(BaseModel):
    label: str | None = None
    r: str | None = Field(default=None, description="sparse r-matrix JSON")
    params: dict[str, str] = Field(default_factory=dict)


class PoissonRequest(BaseModel):
    label: str = "C2_-1+A11.ii"
    params: dict[str, str] = Field(default_factory=dict)
    pairs: str = "all"


class ClassifyRequest(BaseModel):
    p: str = "1/2"


class OspRequest(BaseModel):
    kmax: int = 3
    chart: str = "real"


class QuantizeRequest(BaseModel):
    prop: str = "P3"
    lam: str | None = Field(default=None, alias="lambda")
    order: int = 8
    reading: str = "poly"

    model_config = {"populate_by_name": True}


class TableRequest(BaseModel):
    table: str


def _wrap(fn, *args, **kwargs) -> dict:
    try:
        return fn(*args, **kwargs).model_dump()
    except (KeyError, ValueError) as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.post("/check-algebra")
def check_algebra(req: AlgebraRequest):
    return _wrap(api.check_algebra, req.name, req.document, req.params)


@app.post("/classify-duals")
def classify_duals(req: ClassifyRequest):
    return _wrap(api.classify_duals, req.p)


@app.post("/schouten")
def schouten(req: RMatrixRequest):
    return _wrap(api.schouten_report, req.label, req.r, req.params)


@app.post("/find-r")
def find_r(req: DualRequest):
    return _wrap(api.find_r_report, req.dual, req.params)


@app.post("/poisson-gl11")
def poisson(req: PoissonRequest):
    return _wrap(api.poisson_report, req.label, req.params, req.pairs)


@app.post("/build-double")
def build_double(req: DualRequest):
    return _wrap(api.build_double_report, req.dual, req.params)


@app.post("/verify-appendix-a")
def verify_appendix(req: ClassifyRequest):
    return _wrap(api.verify_appendix_report)


@app.post("/theorem1")
def theorem1(req: ClassifyRequest):
    return _wrap(api.theorem1_report, req.p)


@app.post("/osp-invariants")
def osp_invariants(req: OspRequest):
    return _wrap(api.osp_report, req.kmax, req.chart)


@app.post("/quantize")
def quantize_endpoint(req: QuantizeRequest):
    return _wrap(api.quantize_report, req.prop, req.lam, req.order, req.reading)


@app.post("/rtt-check")
def rtt_check(req: ClassifyRequest):
    return _wrap(api.rtt_report)


@app.post("/quantum-r")
def quantum_r(req: ClassifyRequest):
    return _wrap(api.quantum_r_report)


@app.post("/reproduce-table")
def reproduce(req: TableRequest):
    return _wrap(api.reproduce_table, req.table)
