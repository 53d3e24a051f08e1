import json

from twistdec import oracle
from twistdec.render import to_json
from twistdec.scan import ScanConfig, check_unit, run_scan, work_units


def test_work_units_enumeration():
    units = work_units(ScanConfig(max_p=7, ells=(2, 3)))
    # p=3: m=2 excluded for ell=2 (gcd), kept for ell=3? no: ell=3=p; so p=3 contributes nothing
    assert all(u[0] in (3, 5, 7) for u in units)
    for p, m, ell, r, n_classes in units:
        assert (p - 1) % m == 0
        assert ell not in (p,) and m % ell != 0
        assert n_classes >= 1
    assert units == sorted(units)


def test_empty_bounds():
    report = run_scan(ScanConfig(max_p=2, ells=(2,), workers=1))
    assert report.tuples == 0
    assert report.ok


def test_small_grid_clean():
    report = run_scan(ScanConfig(max_p=13, ells=(2, 3), workers=1))
    assert report.tuples == 36
    assert report.oracle_checked == 36
    assert report.failures == 0
    assert all(o.document["verified"] for o in report.outcomes)


def test_scan_oracle_cap_skips_oracle():
    report = run_scan(ScanConfig(max_p=13, ells=(2, 3), oracle_cap=20, workers=1))
    assert report.failures == 0
    big = [o for o in report.outcomes if o.p * o.m > 20]
    assert big and all(not o.oracle_checked for o in big)
    assert all(o.document["verified"] is None for o in big)


def test_scan_parallel_matches_serial():
    serial = run_scan(ScanConfig(max_p=13, ells=(2, 3), workers=1))
    parallel = run_scan(ScanConfig(max_p=13, ells=(2, 3), workers=2))
    assert [o.document for o in serial.outcomes] == [o.document for o in parallel.outcomes]


def test_scan_classes_vary_commutative_only():
    report = run_scan(ScanConfig(max_p=7, ells=(13,), workers=1))
    seven = [o for o in report.outcomes if (o.p, o.m) == (7, 3)]
    decs = {}
    for o in seven:
        decs.setdefault((o.r, o.class_index), o.document)
    for r in {o.r for o in seven}:
        docs = [decs[(r, ci)] for ci in range(3)]
        assert docs[0]["blocks"] == docs[1]["blocks"] == docs[2]["blocks"]
        distinct = {json.dumps(d["commutative"]) for d in docs}
        assert len(distinct) == 2  # trivial class differs; the two nontrivial agree
    assert report.failures == 0


def test_scan_json_documents_roundtrip():
    report = run_scan(ScanConfig(max_p=11, ells=(2,), workers=1))
    for o in report.outcomes:
        line = to_json(o.document)
        assert to_json(json.loads(line)) == line


def test_scan_detects_injected_fault(monkeypatch):
    real_build = oracle.build_algebra

    def sabotaged(spec, cls):
        algebra = real_build(spec, cls)
        if (spec.p, spec.m, cls.ell) == (7, 3, 13) and cls.class_index == 1:
            return algebra.perturbed(4, 5, 11)
        return algebra

    monkeypatch.setattr(oracle, "build_algebra", sabotaged)
    report = run_scan(ScanConfig(max_p=7, ells=(13,), workers=1))
    assert report.failures > 0
    bad = [o for o in report.outcomes if not o.ok]
    assert all(o.ell == 13 and o.class_index == 1 for o in bad)
    assert any("associativity" in err for o in bad for err in o.errors)


def test_decomposition_independent_of_r_choice():
    # (7, 3): r in {2, 4}; (13, 4): r in {5, 8}; same blocks either way
    report = run_scan(ScanConfig(max_p=13, ells=(2, 3, 5), workers=1))
    assert not any("choice of r" in e for e in report.group_errors)
    by_params = {}
    for o in report.outcomes:
        by_params.setdefault((o.p, o.m, o.ell, o.class_index), set()).add(
            tuple(tuple(sorted(b.items())) for b in o.document["blocks"])
        )
    multi_r = [k for k, v in by_params.items() if len(v) > 1]
    assert multi_r == []


def test_check_unit_records_engine_data():
    outcomes = check_unit(((7, 3, 2, 2, 1), 400, 0))
    assert len(outcomes) == 1
    doc = outcomes[0].document
    assert doc["blocks"] == [{"n": 3, "d": 1}, {"n": 3, "d": 1}]
    assert doc["commutative"] == [1, 2]
    assert doc["verified"] is True
