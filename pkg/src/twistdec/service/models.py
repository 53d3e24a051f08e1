"""Pydantic request/response models for the HTTP API and the CLI."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class DecomposeRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    p: int
    m: int
    ell: int
    r: int
    lam: int = Field(default=1, alias="lambda")
    verify: bool = False
    seed: int = 0


class OrbitsRequest(BaseModel):
    p: int
    m: int
    ell: int
    r: int


class H2Request(BaseModel):
    ell: int
    m: int


class TablesRequest(BaseModel):
    m: int
    ell: int
    max_p: int = 100


class ScanRequest(BaseModel):
    max_p: int
    ells: list[int] = [2, 3, 5, 7, 13]
    oracle_cap: int = 400
    seed: int = 0
    workers: int | None = None


class OrbitModel(BaseModel):
    t: int
    h: int
    k: int
    s: int
    d: int
    r_mat: int
    case: str


class BlockModel(BaseModel):
    n: int
    d: int


class DecomposeResponse(BaseModel):
    """Field order matches the canonical JSON document exactly."""

    model_config = ConfigDict(populate_by_name=True)

    p: int
    m: int
    ell: int
    r: int
    lam: int = Field(alias="lambda")
    class_index: int
    f: int
    orbits: list[OrbitModel]
    commutative: list[int]
    blocks: list[BlockModel]
    dimension: int
    verified: bool | None = None


class OrbitDetailModel(BaseModel):
    exponents: list[list[int]]
    t: int
    h: int
    k: int
    s: int
    d: int
    r_mat: int
    case: str


class OrbitsResponse(BaseModel):
    p: int
    m: int
    ell: int
    r: int
    f: int
    field_degree: int
    num_frobenius_orbits: int
    orbits: list[OrbitDetailModel]


class H2Response(BaseModel):
    ell: int
    m: int
    order: int
    representatives: list[int]


class TableRowModel(BaseModel):
    condition: str
    t: int
    h: int
    s: int
    d: str
    r_mat: int
    component: str
    witness_p: int
    witness_r: int
    witness_f: int
    count: int


class TablesResponse(BaseModel):
    m: int
    ell: int
    max_p: int
    rows: list[TableRowModel]


class VerifyResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    p: int
    m: int
    ell: int
    r: int
    lam: int = Field(alias="lambda")
    class_index: int
    engine_blocks: list[BlockModel]
    oracle_blocks: list[BlockModel]
    verified: bool


class ScanTupleModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    p: int
    m: int
    ell: int
    r: int
    lam: int = Field(alias="lambda")
    class_index: int
    ok: bool
    oracle_checked: bool
    errors: list[str]
    document: dict


class ScanResponse(BaseModel):
    tuples: int
    oracle_checked: int
    failures: int
    ok: bool
    group_errors: list[str]
    results: list[ScanTupleModel]
