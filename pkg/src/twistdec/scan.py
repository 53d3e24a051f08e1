"""Grid verification: engine invariants and oracle equivalence in bulk.

Enumerates every valid (p, m, ell, r, cohomology class) tuple within the
given bounds. For each tuple the closed-form engine runs and its structural
invariants are checked; when the algebra dimension p*m is at most
`oracle_cap`, the structure-constant oracle runs too and its block multiset
must match the engine's exactly. Tuples sharing (p, m, ell, r) are handled
as one work unit so the multiplication table and its associativity check
are shared across classes.

Cross-class checks (the matrix blocks must not depend on the class, the
commutative part must separate the trivial class from the others) happen
after the per-tuple results are collected.
"""

from __future__ import annotations

import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import arith, oracle, render
from .cohomology import GroupSpec, classify_lambda, least_primitive_root
from .decompose import dimension_check, wedderburn

DEFAULT_ORACLE_CAP = 400


@dataclass(frozen=True)
class ScanConfig:
    max_p: int
    ells: tuple[int, ...]
    oracle_cap: int = DEFAULT_ORACLE_CAP
    seed: int = 0
    workers: int | None = None


@dataclass
class TupleOutcome:
    p: int
    m: int
    ell: int
    r: int
    class_index: int
    lam: int
    ok: bool
    oracle_checked: bool
    errors: list[str]
    document: dict

    @property
    def key(self) -> tuple[int, int, int, int, int]:
        return (self.p, self.m, self.ell, self.r, self.class_index)


@dataclass
class ScanReport:
    outcomes: list[TupleOutcome] = field(default_factory=list)
    group_errors: list[str] = field(default_factory=list)

    @property
    def tuples(self) -> int:
        return len(self.outcomes)

    @property
    def oracle_checked(self) -> int:
        return sum(1 for o in self.outcomes if o.oracle_checked)

    @property
    def failures(self) -> int:
        return sum(1 for o in self.outcomes if not o.ok) + len(self.group_errors)

    @property
    def ok(self) -> bool:
        return self.failures == 0


def work_units(cfg: ScanConfig) -> list[tuple[int, int, int, int, int]]:
    """All (p, m, ell, r, num_classes) units within bounds, sorted."""
    units = []
    for p in range(3, cfg.max_p + 1):
        if not arith.is_prime(p):
            continue
        for m in range(2, p):
            if (p - 1) % m != 0:
                continue
            rs = [r for r in range(2, p) if arith.mul_order(r, p) == m]
            for ell in cfg.ells:
                if ell == p or m % ell == 0:
                    continue
                n_classes = math.gcd(m, ell - 1)
                for r in rs:
                    units.append((p, m, ell, r, n_classes))
    return sorted(units)


def check_unit(args: tuple[tuple[int, int, int, int, int], int, int]) -> list[TupleOutcome]:
    """Run all classes of one (p, m, ell, r) unit. Top-level for pickling.

    The multiplication table is the same for every class and the scalar
    table of class lambda is lambda**w entrywise, where w is the 0/1 wrap
    indicator on the quotient exponents. Associativity is therefore checked
    once per unit: index associativity over all triples, plus the wrap
    exponent-sum identity over all triples (encoded as 2**w so that product
    equality is exact integer equality of exponent sums). Integer equality
    of exponent sums implies lambda**sums agree for every lambda, so each
    class's scalar table only needs the O(n^2) entrywise comparison.
    """
    (p, m, ell, r, n_classes), oracle_cap, seed = args
    spec = GroupSpec(p, m, r)
    gen = least_primitive_root(ell)
    run_oracle = p * m <= oracle_cap
    pattern_ok: bool | None = None
    wrap_table = None
    outcomes = []
    for ci in range(n_classes):
        lam = pow(gen, ci, ell)
        cls = classify_lambda(ell, m, lam)
        errors: list[str] = []
        oracle_checked = False
        document: dict = {}
        try:
            dec = wedderburn(spec, cls, random.Random(seed))
            document = render.decomposition_dict(dec)
            if cls.class_index != ci:
                errors.append(f"class index {cls.class_index} != {ci}")
            if not dimension_check(dec):
                errors.append("dimension check failed")
            if sum(o.t for o in dec.orbits) != (p - 1) // dec.f:
                errors.append("orbit sizes do not sum to the Frobenius orbit count")
            for o in dec.orbits:
                if o.t * o.h != m:
                    errors.append(f"t*h = {o.t * o.h} != m")
                if o.d * o.s != dec.f:
                    errors.append(f"d*s = {o.d * o.s} != f")
                if o.r_mat * o.r_mat != o.h * o.s:
                    errors.append("r_mat^2 != h*s")
                if math.gcd(o.h, dec.f) % o.s != 0:
                    errors.append("s does not divide gcd(h, f)")
            # the order of the class divides every commutative factor degree
            class_order = cls.num_classes // math.gcd(ci, cls.num_classes) if ci else 1
            if any(deg % class_order for deg in dec.commutative):
                errors.append(
                    f"commutative degrees {list(dec.commutative)} not divisible by "
                    f"class order {class_order}"
                )
            if run_oracle:
                algebra = oracle.build_algebra(spec, cls)
                if pattern_ok is None:
                    _, j = np.divmod(np.arange(p * m), m)
                    wrap_table = (j[:, None] + j[None, :] >= m).astype(np.int64)
                    pattern_ok = bool(oracle.triple_index_ok(algebra.idx))
                    if pattern_ok and n_classes > 1:
                        pattern_ok = bool(
                            oracle.triple_scalar_ok(algebra.idx, wrap_table + 1, 1000003)
                        )
                expected_scal = np.where(wrap_table == 1, lam % ell, 1)
                if not (pattern_ok and np.array_equal(algebra.scal, expected_scal)):
                    errors.append("associativity check failed")
                else:
                    z_basis = oracle.center(algebra)
                    idems = oracle.central_idempotents(algebra, z_basis)
                    reports = [oracle.block_report(algebra, z_basis, e) for e in idems]
                    oracle_blocks = sorted((rep.n, rep.d) for rep in reports)
                    engine_blocks = dec.block_multiset()
                    oracle_checked = True
                    if oracle_blocks != engine_blocks:
                        errors.append(
                            f"oracle mismatch: engine {engine_blocks} oracle {oracle_blocks}"
                        )
        except Exception as exc:  # noqa: BLE001 - every failure becomes a scan record
            errors.append(f"{type(exc).__name__}: {exc}")
        ok = not errors
        if document:
            document["verified"] = oracle_checked and ok if run_oracle else None
        outcomes.append(TupleOutcome(p, m, ell, r, ci, lam, ok, oracle_checked, errors, document))
    return outcomes


def _decomposition_view(doc: dict) -> tuple:
    """Everything in a document that cannot depend on the choice of r.

    All units of order m generate the same subgroup of the units mod p, so
    the orbit partition and every derived parameter except the exponent k
    (which names a specific power of ell) must coincide across r.
    """
    return (
        doc["f"],
        tuple(doc["commutative"]),
        tuple((b["n"], b["d"]) for b in doc["blocks"]),
        tuple(
            sorted(
                (o["t"], o["h"], o["s"], o["d"], o["r_mat"], o["case"]) for o in doc["orbits"]
            )
        ),
    )


def _cross_r_checks(report: ScanReport) -> None:
    groups: dict[tuple[int, int, int, int], list[TupleOutcome]] = {}
    for out in report.outcomes:
        if out.document:
            groups.setdefault((out.p, out.m, out.ell, out.class_index), []).append(out)
    for key, members in sorted(groups.items()):
        views = {_decomposition_view(m.document) for m in members}
        if len(views) > 1:
            report.group_errors.append(f"{key}: decomposition depends on the choice of r")


def _cross_class_checks(report: ScanReport) -> None:
    """Matrix blocks must agree across classes; the commutative part must
    separate the trivial class from every nontrivial one."""
    groups: dict[tuple[int, int, int, int], list[TupleOutcome]] = {}
    for out in report.outcomes:
        groups.setdefault((out.p, out.m, out.ell, out.r), []).append(out)
    for key, members in sorted(groups.items()):
        docs = [o.document for o in members if o.document]
        if len(docs) != len(members):
            continue  # already failed individually
        blocks = [doc["blocks"] for doc in docs]
        if any(b != blocks[0] for b in blocks[1:]):
            report.group_errors.append(f"{key}: matrix blocks differ across classes")
        trivial = [doc for doc, o in zip(docs, members) if o.class_index == 0]
        if trivial:
            comm0 = trivial[0]["commutative"]
            for doc, out in zip(docs, members):
                if out.class_index != 0 and doc["commutative"] == comm0:
                    report.group_errors.append(
                        f"{key}: class {out.class_index} has the trivial-class commutative part"
                    )


def run_scan(cfg: ScanConfig) -> ScanReport:
    """Execute the grid, in parallel across work units."""
    units = work_units(cfg)
    args = [(u, cfg.oracle_cap, cfg.seed) for u in units]
    report = ScanReport()
    workers = cfg.workers if cfg.workers is not None else (os.cpu_count() or 1)
    if workers <= 1 or len(units) <= 1:
        for a in args:
            report.outcomes.extend(check_unit(a))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for outcomes in pool.map(check_unit, args, chunksize=4):
                report.outcomes.extend(outcomes)
    report.outcomes.sort(key=lambda o: o.key)
    _cross_class_checks(report)
    _cross_r_checks(report)
    return report
