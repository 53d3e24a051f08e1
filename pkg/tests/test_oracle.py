import numpy as np
import pytest

from twistdec import gflinalg
from twistdec.cohomology import classify_lambda, validate_spec
from twistdec.decompose import wedderburn
from twistdec.errors import ConsistencyError
from twistdec.oracle import (
    block_report,
    build_algebra,
    center,
    central_idempotents,
    oracle_decomposition,
    verify_associativity,
)


def _case(p, m, r, ell, lam):
    return validate_spec(p, m, r), classify_lambda(ell, m, lam)


def test_build_algebra_group_law():
    spec, cls = _case(7, 3, 2, 2, 1)
    alg = build_algebra(spec, cls)
    a, b = 1 * 3 + 0, 0 * 3 + 1
    # a * b = a^1 b^1, b * a = a^r b = a^2 b
    assert alg.idx[a, b] == 1 * 3 + 1 and alg.scal[a, b] == 1
    assert alg.idx[b, a] == 2 * 3 + 1 and alg.scal[b, a] == 1


def test_build_algebra_cocycle_scalars():
    spec, cls = _case(7, 3, 2, 13, 2)
    alg = build_algebra(spec, cls)
    b_last, b = 0 * 3 + 2, 0 * 3 + 1
    assert alg.idx[b_last, b] == 0 and alg.scal[b_last, b] == 2
    # restriction to the normal cyclic part is untwisted
    for i in range(7):
        for k in range(7):
            assert alg.scal[i * 3, k * 3] == 1
            assert alg.idx[i * 3, k * 3] == ((i + k) % 7) * 3


def test_unit_element():
    spec, cls = _case(7, 3, 2, 2, 1)
    alg = build_algebra(spec, cls)
    u = alg.unit()
    rng = np.random.default_rng(0)
    x = rng.integers(0, 2, size=alg.dim).astype(np.int64)
    assert np.array_equal(alg.mul(u, x), x)
    assert np.array_equal(alg.mul(x, u), x)


def test_mul_matches_direct_convolution():
    spec, cls = _case(7, 3, 2, 13, 2)
    alg = build_algebra(spec, cls)
    rng = np.random.default_rng(1)
    for _ in range(5):
        x = rng.integers(0, 13, size=alg.dim).astype(np.int64)
        y = rng.integers(0, 13, size=alg.dim).astype(np.int64)
        expected = np.zeros(alg.dim, dtype=np.int64)
        for g in range(alg.dim):
            for h in range(alg.dim):
                expected[alg.idx[g, h]] += x[g] * y[h] * alg.scal[g, h]
        assert np.array_equal(alg.mul(x, y), expected % 13)


def test_associativity_holds_and_counts():
    spec, cls = _case(7, 3, 2, 2, 1)
    alg = build_algebra(spec, cls)
    assert alg.dim**3 == 9261
    assert verify_associativity(alg)
    spec13, cls13 = _case(7, 3, 2, 13, 2)
    assert verify_associativity(build_algebra(spec13, cls13))


def test_associativity_detects_scalar_perturbation():
    spec, cls = _case(7, 3, 2, 13, 2)
    alg = build_algebra(spec, cls)
    bad = alg.perturbed(4, 5, 7)
    assert not verify_associativity(bad)


def test_associativity_detects_index_perturbation():
    spec, cls = _case(7, 3, 2, 2, 1)
    alg = build_algebra(spec, cls)
    idx = alg.idx.copy()
    idx[4, 5] = (idx[4, 5] + 1) % alg.dim
    bad = type(alg)(alg.p, alg.m, alg.ell, alg.r, alg.lam, idx, alg.scal.copy())
    assert not verify_associativity(bad)


def test_center_dimensions():
    spec, cls = _case(7, 3, 2, 2, 1)
    alg = build_algebra(spec, cls)
    z = center(alg)
    assert z.shape[0] == 5  # 1 + 2 + 1 + 1
    unit_coords = gflinalg.coords_in_rref_basis(
        alg.unit(), z, np.array([int(np.flatnonzero(r)[0]) for r in z]), alg.ell
    )
    assert np.array_equal(unit_coords @ z % alg.ell, alg.unit())

    spec13, cls13 = _case(7, 3, 2, 13, 2)
    z13 = center(build_algebra(spec13, cls13))
    assert z13.shape[0] == 5  # 3 + 2


def test_center_elements_commute_with_everything():
    spec, cls = _case(11, 5, 4, 3, 1)
    alg = build_algebra(spec, cls)
    z = center(alg)
    rng = np.random.default_rng(2)
    x = rng.integers(0, 3, size=alg.dim).astype(np.int64)
    for row in z:
        assert np.array_equal(alg.mul(row, x), alg.mul(x, row))


def test_central_idempotent_counts():
    spec, cls = _case(7, 3, 2, 2, 1)
    alg = build_algebra(spec, cls)
    idems = central_idempotents(alg, center(alg))
    assert len(idems) == 4

    spec13, cls13 = _case(7, 3, 2, 13, 2)
    alg13 = build_algebra(spec13, cls13)
    idems13 = central_idempotents(alg13, center(alg13))
    assert len(idems13) == 2


def test_central_idempotents_properties():
    spec, cls = _case(11, 5, 4, 2, 1)
    alg = build_algebra(spec, cls)
    idems = central_idempotents(alg, center(alg))
    total = np.zeros(alg.dim, dtype=np.int64)
    for i, e in enumerate(idems):
        assert np.array_equal(alg.mul(e, e), e)
        for e2 in idems[i + 1 :]:
            assert not np.any(alg.mul(e, e2))
        total = (total + e) % alg.ell
    assert np.array_equal(total, alg.unit())


def test_block_report_examples():
    spec, cls = _case(13, 3, 3, 2, 1)
    alg = build_algebra(spec, cls)
    z = center(alg)
    reports = [block_report(alg, z, e) for e in central_idempotents(alg, z)]
    assert sorted((r.block_dim, r.d, r.n) for r in reports) == [(1, 1, 1), (2, 2, 1), (36, 4, 3)]

    spec13, cls13 = _case(7, 3, 2, 13, 2)
    alg13 = build_algebra(spec13, cls13)
    z13 = center(alg13)
    reports13 = [block_report(alg13, z13, e) for e in central_idempotents(alg13, z13)]
    assert sorted((r.block_dim, r.d, r.n) for r in reports13) == [(3, 3, 1), (18, 2, 3)]


ORACLE_CASES = [
    (7, 3, 2, 2, 1, [(1, 1), (1, 2), (3, 1), (3, 1)]),
    (11, 5, 4, 3, 1, [(1, 1), (1, 4), (5, 1), (5, 1)]),
    (11, 5, 4, 2, 1, [(1, 1), (1, 4), (5, 2)]),
    (13, 3, 3, 2, 1, [(1, 1), (1, 2), (3, 4)]),
    (7, 3, 2, 13, 2, [(1, 3), (3, 2)]),
    (5, 2, 4, 3, 1, [(1, 1), (1, 1), (2, 2)]),
    (7, 2, 6, 11, 1, [(1, 1), (1, 1), (2, 3)]),
]


@pytest.mark.parametrize("p,m,r,ell,lam,expected", ORACLE_CASES)
def test_oracle_decomposition_known_cases(p, m, r, ell, lam, expected):
    spec, cls = _case(p, m, r, ell, lam)
    assert oracle_decomposition(spec, cls) == sorted(expected)


def test_oracle_agrees_with_engine_on_31_5_2():
    spec, cls = _case(31, 5, 2, 2, 1)
    assert oracle_decomposition(spec, cls) == wedderburn(spec, cls).block_multiset()


def test_oracle_uses_raw_lambda_but_agrees_across_coset():
    # 3 is in the class of 2 mod cubes in GF(13); the oracle runs on the raw
    # value while the engine normalizes, so agreement here is a real check
    spec = validate_spec(7, 3, 2)
    raw = classify_lambda(13, 3, 3)
    assert raw.lam == 3 and raw.canonical_lambda == 2
    assert oracle_decomposition(spec, raw) == wedderburn(spec, raw).block_multiset()


def test_oracle_rejects_broken_table():
    spec, cls = _case(7, 3, 2, 13, 2)
    alg = build_algebra(spec, cls)
    with pytest.raises(ConsistencyError, match="associativity"):
        oracle_decomposition(spec, cls, algebra=alg.perturbed(4, 5, 7))
