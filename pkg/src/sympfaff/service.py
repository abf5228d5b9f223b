"""HTTP surface over the library: JSON in, JSON out, stateless.

Run with: uvicorn sympfaff.service:app
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .chart import chart_suite
from .indices import enumerate_even_shapes
from .oracle import dimension_agreement, graded_ideal_dimension, sample_point, verify_points
from .scalars import parse_field, scalar_to_str
from .straighten import TabCombo, exchange_straighten, symp_normal_form
from .tableaux import count_symplectic_standard_even, enumerate_symplectic_standard_even


class ComboTerm(BaseModel):
    coeff: str
    tableau: list[list[int]]


class CountRequest(BaseModel):
    n: int = Field(ge=4)
    degree: int = Field(ge=0)


class CountResponse(BaseModel):
    count: int


class EnumerateRequest(BaseModel):
    n: int = Field(ge=4)
    degree: int | None = None
    shape: list[int] | None = None


class ShapeTableaux(BaseModel):
    shape: list[int]
    count: int
    tableaux: list[list[list[int]]]


class EnumerateResponse(BaseModel):
    results: list[ShapeTableaux]


class StraightenRequest(BaseModel):
    n: int = Field(ge=4)
    combo: list[ComboTerm]
    law: str = "symplectic"


class StraightenResponse(BaseModel):
    combo: list[ComboTerm]


class DimRequest(BaseModel):
    n: int = Field(ge=4)
    degree: int = Field(ge=0)
    field: str = "q"
    check: bool = False


class DimResponse(BaseModel):
    dim: int
    count: int | None = None
    agree: bool | None = None


class VerifyRequest(BaseModel):
    n: int = Field(ge=4)
    points: int = Field(default=10, ge=1, le=200)
    seed: int = 0


class VerifyResponse(BaseModel):
    n: int
    points: int
    seed: int
    ok: bool
    failures: list[str]


class SampleRequest(BaseModel):
    n: int = Field(ge=4)
    seed: int = 0


class SampleResponse(BaseModel):
    matrix: list[list[str]]


class ChartRequest(BaseModel):
    n: int = Field(ge=4)
    seed: int = 0
    count: int = Field(default=10, ge=1, le=200)


class ChartResponse(BaseModel):
    n: int
    count: int
    ok: bool
    failures: list[str]


def _guard(n: int):
    if n % 2:
        raise HTTPException(status_code=422, detail="n must be even")


def create_app() -> FastAPI:
    app = FastAPI(title="sympfaff", version="0.1.0")

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/count", response_model=CountResponse)
    def count(req: CountRequest):
        _guard(req.n)
        return CountResponse(count=count_symplectic_standard_even(req.degree, req.n // 2))

    @app.post("/enumerate", response_model=EnumerateResponse)
    def enumerate_(req: EnumerateRequest):
        _guard(req.n)
        r = req.n // 2
        if req.shape is not None:
            shapes = [tuple(req.shape)]
        elif req.degree is not None:
            shapes = enumerate_even_shapes(
                2 * req.degree, min(r, 2 * req.degree) if req.degree else 0
            )
        else:
            raise HTTPException(status_code=422, detail="need degree or shape")
        try:
            results = [
                ShapeTableaux(
                    shape=list(shape),
                    count=len(tabs),
                    tableaux=[t.to_json() for t in tabs],
                )
                for shape in shapes
                for tabs in [enumerate_symplectic_standard_even(shape, r)]
            ]
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return EnumerateResponse(results=results)

    @app.post("/straighten", response_model=StraightenResponse)
    def straighten(req: StraightenRequest):
        _guard(req.n)
        if req.law not in ("symplectic", "exchange"):
            raise HTTPException(status_code=422, detail="law must be symplectic or exchange")
        try:
            combo = TabCombo.from_json(req.n // 2, [t.model_dump() for t in req.combo])
            out = symp_normal_form(combo) if req.law == "symplectic" else exchange_straighten(combo)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return StraightenResponse(combo=[ComboTerm(**t) for t in out.to_json()])

    @app.post("/dim", response_model=DimResponse)
    def dim(req: DimRequest):
        _guard(req.n)
        try:
            fld = parse_field(req.field, req.n // 2)
            if req.check:
                res = dimension_agreement(req.n, req.degree, fld)
                return DimResponse(dim=res["dim"], count=res["count"], agree=res["agree"])
            return DimResponse(dim=graded_ideal_dimension(req.n, req.degree, fld))
        except (ValueError, RuntimeError) as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest):
        _guard(req.n)
        agg = verify_points(req.n, req.points, req.seed)
        failures = [
            f"point {rep['point_index']}, {fam['name']}: {msg}"
            for rep in agg["reports"]
            for fam in rep["families"]
            for msg in fam["failures"]
        ]
        return VerifyResponse(
            n=req.n, points=req.points, seed=req.seed, ok=agg["pass"], failures=failures
        )

    @app.post("/sample", response_model=SampleResponse)
    def sample(req: SampleRequest):
        _guard(req.n)
        y = sample_point(req.n, req.seed)
        return SampleResponse(matrix=[[scalar_to_str(x) for x in row] for row in y])

    @app.post("/chart", response_model=ChartResponse)
    def chart(req: ChartRequest):
        _guard(req.n)
        if req.n % 4:
            raise HTTPException(status_code=422, detail="chart needs n divisible by 4")
        agg = chart_suite(req.n, req.seed, req.count)
        failures = [f"datum {e['index']}" for e in agg["results"] if not e["pass"]]
        return ChartResponse(n=req.n, count=req.count, ok=agg["pass"], failures=failures)

    return app


app = create_app()
