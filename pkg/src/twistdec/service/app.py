"""FastAPI application exposing the decomposition engine."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import ConsistencyError, ParameterError
from . import handlers, models


def create_app() -> FastAPI:
    app = FastAPI(
        title="twistdec",
        description="Wedderburn decompositions of twisted metacyclic group algebras",
        version="0.1.0",
    )

    @app.exception_handler(ParameterError)
    async def parameter_error(_: Request, exc: ParameterError) -> JSONResponse:
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.exception_handler(ConsistencyError)
    async def consistency_error(_: Request, exc: ConsistencyError) -> JSONResponse:
        return JSONResponse(status_code=500, content={"detail": str(exc)})

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/decompose", response_model=models.DecomposeResponse, response_model_by_alias=True)
    def decompose(req: models.DecomposeRequest) -> models.DecomposeResponse:
        return handlers.decompose(req)

    @app.post("/orbits", response_model=models.OrbitsResponse)
    def orbits(req: models.OrbitsRequest) -> models.OrbitsResponse:
        return handlers.orbits(req)

    @app.post("/h2", response_model=models.H2Response)
    def h2(req: models.H2Request) -> models.H2Response:
        return handlers.h2(req)

    @app.post("/verify", response_model=models.VerifyResponse, response_model_by_alias=True)
    def verify(req: models.DecomposeRequest) -> models.VerifyResponse:
        return handlers.verify(req)

    @app.post("/tables", response_model=models.TablesResponse)
    def tables(req: models.TablesRequest) -> models.TablesResponse:
        return handlers.tables(req)

    @app.post("/scan", response_model=models.ScanResponse, response_model_by_alias=True)
    def scan(req: models.ScanRequest) -> models.ScanResponse:
        return handlers.scan(req)

    return app


app = create_app()
