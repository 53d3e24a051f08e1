"""Request handlers shared by the HTTP endpoints and the CLI.

Each handler maps a request model to a response model; all domain errors
surface as ParameterError (bad input) or ConsistencyError (internal bug)
for the callers to translate.
"""

from __future__ import annotations

import random

from .. import oracle, render
from ..cohomology import classify_lambda, h2_structure, validate_coefficient_field, validate_spec
from ..decompose import table_report, wedderburn
from ..orbits import classify_case, orbit_data
from ..scan import ScanConfig, run_scan
from . import models


def decompose(req: models.DecomposeRequest) -> models.DecomposeResponse:
    spec = validate_spec(req.p, req.m, req.r)
    cls = classify_lambda(req.ell, req.m, req.lam)
    dec = wedderburn(spec, cls, random.Random(req.seed))
    verified = None
    if req.verify:
        verified = oracle.oracle_decomposition(spec, cls) == dec.block_multiset()
    return models.DecomposeResponse(**render.decomposition_dict(dec, verified))


def verify(req: models.DecomposeRequest) -> models.VerifyResponse:
    spec = validate_spec(req.p, req.m, req.r)
    cls = classify_lambda(req.ell, req.m, req.lam)
    dec = wedderburn(spec, cls, random.Random(req.seed))
    engine_blocks = dec.block_multiset()
    oracle_blocks = oracle.oracle_decomposition(spec, cls)
    return models.VerifyResponse(
        p=spec.p,
        m=spec.m,
        ell=cls.ell,
        r=spec.r,
        lam=cls.lam,
        class_index=cls.class_index,
        engine_blocks=[models.BlockModel(n=n, d=d) for n, d in engine_blocks],
        oracle_blocks=[models.BlockModel(n=n, d=d) for n, d in oracle_blocks],
        verified=engine_blocks == oracle_blocks,
    )


def orbits(req: models.OrbitsRequest) -> models.OrbitsResponse:
    spec = validate_spec(req.p, req.m, req.r)
    validate_coefficient_field(spec, req.ell)
    f, data = orbit_data(spec, req.ell)
    return models.OrbitsResponse(
        p=spec.p,
        m=spec.m,
        ell=req.ell,
        r=spec.r,
        f=f,
        field_degree=f,
        num_frobenius_orbits=(spec.p - 1) // f,
        orbits=[
            models.OrbitDetailModel(
                exponents=[list(o) for o in od.member_orbits],
                t=od.t,
                h=od.h,
                k=od.k,
                s=od.s,
                d=od.d,
                r_mat=od.r_mat,
                case=classify_case(od, spec.m),
            )
            for od in data
        ],
    )


def h2(req: models.H2Request) -> models.H2Response:
    order, reps = h2_structure(req.ell, req.m)
    return models.H2Response(ell=req.ell, m=req.m, order=order, representatives=reps)


def tables(req: models.TablesRequest) -> models.TablesResponse:
    rows = table_report(req.m, req.ell, req.max_p)
    return models.TablesResponse(
        m=req.m,
        ell=req.ell,
        max_p=req.max_p,
        rows=[models.TableRowModel(**row.__dict__) for row in rows],
    )


def scan(req: models.ScanRequest) -> models.ScanResponse:
    cfg = ScanConfig(
        max_p=req.max_p,
        ells=tuple(req.ells),
        oracle_cap=req.oracle_cap,
        seed=req.seed,
        workers=req.workers,
    )
    report = run_scan(cfg)
    return models.ScanResponse(
        tuples=report.tuples,
        oracle_checked=report.oracle_checked,
        failures=report.failures,
        ok=report.ok,
        group_errors=report.group_errors,
        results=[
            models.ScanTupleModel(
                p=o.p,
                m=o.m,
                ell=o.ell,
                r=o.r,
                lam=o.lam,
                class_index=o.class_index,
                ok=o.ok,
                oracle_checked=o.oracle_checked,
                errors=o.errors,
                document=o.document,
            )
            for o in report.outcomes
        ],
    )
