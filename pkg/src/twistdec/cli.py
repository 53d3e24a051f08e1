"""Command-line client for the decomposition service.

All commands call the same handlers the HTTP endpoints use and only do
argument parsing and rendering here. Exit status is 0 on success, 1 when a
verification or scan check fails, and 2 for invalid parameters.
"""

from __future__ import annotations

import argparse
import sys

from .arith import is_prime
from .errors import ConsistencyError, ParameterError
from .render import to_json
from .service import handlers, models


def _add_group_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=int, required=True, help="odd prime p")
    parser.add_argument("--m", type=int, required=True, help="order of the acting cyclic group")
    parser.add_argument("--ell", type=int, required=True, help="coefficient field characteristic")
    parser.add_argument("--r", type=int, required=True, help="unit of order m mod p")


def _add_format_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistdec",
        description="Wedderburn decompositions of twisted metacyclic group algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dec = sub.add_parser("decompose", help="decompose one twisted group algebra")
    _add_group_args(p_dec)
    p_dec.add_argument("--lambda", dest="lam", type=int, default=1, help="cocycle unit lambda")
    p_dec.add_argument("--verify", action="store_true", help="cross-check with the oracle")
    p_dec.add_argument("--seed", type=int, default=0)
    _add_format_arg(p_dec)

    p_orb = sub.add_parser("orbits", help="orbit analysis for one parameter set")
    _add_group_args(p_orb)
    _add_format_arg(p_orb)

    p_h2 = sub.add_parser("h2", help="second cohomology of the twist quotient")
    p_h2.add_argument("--ell", type=int, required=True)
    p_h2.add_argument("--m", type=int, required=True)
    _add_format_arg(p_h2)

    p_ver = sub.add_parser("verify", help="engine vs oracle for one parameter set")
    _add_group_args(p_ver)
    p_ver.add_argument("--lambda", dest="lam", type=int, default=1)
    p_ver.add_argument("--seed", type=int, default=0)
    _add_format_arg(p_ver)

    p_tab = sub.add_parser("tables", help="sweep (p, r) and tabulate orbit patterns")
    p_tab.add_argument("--m", required=True, help="acting-group order, or 'general' for all m")
    p_tab.add_argument("--ell", type=int, required=True)
    p_tab.add_argument("--max-p", type=int, default=100)
    _add_format_arg(p_tab)

    p_scan = sub.add_parser("scan", help="verify the whole parameter grid")
    p_scan.add_argument("--max-p", type=int, required=True)
    p_scan.add_argument("--ell-list", type=str, default="2,3,5,7,13", help="comma-separated primes")
    p_scan.add_argument("--oracle-cap", type=int, default=400, help="largest p*m the oracle runs on")
    p_scan.add_argument("--seed", type=int, default=0)
    p_scan.add_argument("--workers", type=int, default=None)
    _add_format_arg(p_scan)

    p_srv = sub.add_parser("serve", help="run the HTTP API")
    p_srv.add_argument("--host", default="127.0.0.1")
    p_srv.add_argument("--port", type=int, default=8000)

    return parser


def _cmd_decompose(args: argparse.Namespace) -> int:
    req = models.DecomposeRequest(
        p=args.p, m=args.m, ell=args.ell, r=args.r, lam=args.lam, verify=args.verify, seed=args.seed
    )
    resp = handlers.decompose(req)
    if args.format == "json":
        print(to_json(resp.model_dump(by_alias=True)))
    else:
        doc = resp.model_dump(by_alias=True)
        parts = [f"F_{args.ell**d}" for d in resp.commutative]
        parts.extend(
            f"M{b.n}(F_{args.ell**b.d})" if b.n > 1 else f"F_{args.ell**b.d}" for b in resp.blocks
        )
        print(f"F_{args.ell}^a G, G = C_{args.p} x| C_{args.m} (r = {args.r}):")
        print("  " + " (+) ".join(parts))
        dims = [str(d) for d in resp.commutative] + [str(b.n * b.n * b.d) for b in resp.blocks]
        print(f"  dimension: {' + '.join(dims)} = {resp.dimension}")
        print(f"  lambda = {doc['lambda']} (class {resp.class_index})")
        if resp.verified is not None:
            print(f"  oracle: {'MATCH' if resp.verified else 'MISMATCH'}")
    if resp.verified is False:
        return 1
    return 0


def _cmd_orbits(args: argparse.Namespace) -> int:
    req = models.OrbitsRequest(p=args.p, m=args.m, ell=args.ell, r=args.r)
    resp = handlers.orbits(req)
    if args.format == "json":
        print(to_json(resp.model_dump()))
        return 0
    print(f"f = ord_{args.p}({args.ell}) = {resp.f}; field degree {resp.field_degree}")
    print(f"Frobenius orbits of nontrivial characters: {resp.num_frobenius_orbits}")
    for i, orb in enumerate(resp.orbits):
        members = ", ".join("{" + ", ".join(map(str, ex)) + "}" for ex in orb.exponents)
        print(f"orbit {i}: {members}")
        print(
            f"  t={orb.t} h={orb.h} k={orb.k} s={orb.s} d={orb.d} "
            f"r_mat={orb.r_mat} case={orb.case}"
        )
    return 0


def _cmd_h2(args: argparse.Namespace) -> int:
    resp = handlers.h2(models.H2Request(ell=args.ell, m=args.m))
    if args.format == "json":
        print(to_json(resp.model_dump()))
    else:
        print(f"H^2 has order {resp.order} = gcd({args.m}, {args.ell - 1})")
        print(f"class representatives: {resp.representatives}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    req = models.DecomposeRequest(
        p=args.p, m=args.m, ell=args.ell, r=args.r, lam=args.lam, seed=args.seed
    )
    resp = handlers.verify(req)
    if args.format == "json":
        print(to_json(resp.model_dump(by_alias=True)))
    else:
        engine = [(b.n, b.d) for b in resp.engine_blocks]
        orac = [(b.n, b.d) for b in resp.oracle_blocks]
        print(f"engine: {engine}")
        print(f"oracle: {orac}")
        print("MATCH" if resp.verified else "MISMATCH")
    return 0 if resp.verified else 1


def _table_m_values(ell: int, max_p: int) -> list[int]:
    """Every m >= 2 with gcd(ell, m) = 1 dividing some p - 1 in range."""
    out = set()
    for p in range(3, max_p + 1):
        if not is_prime(p) or p == ell:
            continue
        for m in range(2, p):
            if (p - 1) % m == 0 and m % ell != 0:
                out.add(m)
    return sorted(out)


def _cmd_tables(args: argparse.Namespace) -> int:
    if args.m == "general":
        m_values = _table_m_values(args.ell, args.max_p)
    else:
        try:
            m_values = [int(args.m)]
        except ValueError:
            raise ParameterError(f"--m must be an integer or 'general', got {args.m!r}")
    responses = [
        handlers.tables(models.TablesRequest(m=m, ell=args.ell, max_p=args.max_p))
        for m in m_values
    ]
    if args.format == "json":
        for resp in responses:
            print(to_json(resp.model_dump()))
        return 0
    for resp in responses:
        print(f"m = {resp.m}, ell = {args.ell}, p <= {args.max_p}: {len(resp.rows)} patterns")
        for row in resp.rows:
            print(
                f"  t={row.t} h={row.h} s={row.s} d={row.d} r_mat={row.r_mat} "
                f"component={row.component} [{row.condition}] "
                f"witness p={row.witness_p} r={row.witness_r} f={row.witness_f} (x{row.count})"
            )
    return 0


def _cmd_scan(args: argparse.Namespace) -> int:
    ells = tuple(int(x) for x in args.ell_list.split(",") if x.strip())
    req = models.ScanRequest(
        max_p=args.max_p,
        ells=list(ells),
        oracle_cap=args.oracle_cap,
        seed=args.seed,
        workers=args.workers,
    )
    resp = handlers.scan(req)
    for result in resp.results:
        if result.document:
            print(to_json(result.document))
        else:
            print(to_json(result.model_dump(by_alias=True)))
    for err in resp.group_errors:
        print(f"group check failed: {err}", file=sys.stderr)
    for result in resp.results:
        for err in result.errors:
            print(
                f"({result.p},{result.m},{result.ell},{result.r},c{result.class_index}): {err}",
                file=sys.stderr,
            )
    if args.format == "json":
        print(
            to_json(
                {
                    "tuples": resp.tuples,
                    "oracle_checked": resp.oracle_checked,
                    "failures": resp.failures,
                    "ok": resp.ok,
                }
            )
        )
    else:
        print(
            f"scan: {resp.tuples} tuples, {resp.oracle_checked} oracle-checked, "
            f"{resp.failures} failures"
        )
    return 0 if resp.ok else 1


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("twistdec.service.app:app", host=args.host, port=args.port)
    return 0


_COMMANDS = {
    "decompose": _cmd_decompose,
    "orbits": _cmd_orbits,
    "h2": _cmd_h2,
    "verify": _cmd_verify,
    "tables": _cmd_tables,
    "scan": _cmd_scan,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
