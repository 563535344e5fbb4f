"""Command-line front end: ``fd2p verify | basis | factorize``."""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__, kernels
from .algebra import AlgebraContext
from .constructions import FAMILIES, BasisCatalog, ldu_subspaces
from .errors import BoundExceeded, ConfigError
from .fields import FieldParams, parse_poly
from . import structure as st

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def _context(args) -> AlgebraContext:
    f = parse_poly(args.poly) if args.poly else ()
    return AlgebraContext(FieldParams(args.p, args.n, f))


def _field_args(sp: argparse.ArgumentParser):
    sp.add_argument("--p", type=int, required=True, help="odd prime characteristic")
    sp.add_argument("--n", type=int, default=1, help="extension degree, |F| = p^n")
    sp.add_argument("--poly", help="irreducible modulus, constant term first, e.g. 1,0,1")


def _compact(x) -> str:
    return json.dumps(x, separators=(",", ":"))


def cmd_verify(args) -> int:
    from .verify import run_suite
    ctx = _context(args)

    def show(rec):
        if not args.quiet:
            detail = rec.reason if rec.status == "skipped" else rec.actual
            print(f"{rec.status.upper():7s} {rec.check_id:28s} [{rec.paper_ref}] {detail}", file=sys.stderr)

    report = run_suite(ctx, seed=args.seed, bound=args.bound, algebra_bound=args.algebra_bound,
                       timings=not args.no_timings, only=args.check, progress=show)
    text = report.to_json()
    if args.report == "-":
        sys.stdout.write(text)
    elif args.report:
        with open(args.report, "w") as fh:
            fh.write(text)
    s = report.summary
    print(f"p={ctx.p} n={ctx.n} f={list(ctx.field.f)}: {s['pass']} pass, {s['fail']} fail, "
          f"{s['skipped']} skipped", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_basis(args) -> int:
    ctx = _context(args)
    for _, x in BasisCatalog.build(ctx).families[args.family]:
        print(f"{_compact(x.serialize())}\t{x.render()}")
    return EXIT_OK


def cmd_factorize(args) -> int:
    ctx = _context(args)
    if args.exhaustive:
        try:
            elements = list(st.iter_one_plus_gamma(ctx, args.bound))
        except BoundExceeded as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_CONFIG
    else:
        rng = np.random.default_rng(args.seed)
        elements = [ctx.one + st.random_gamma_element(ctx, rng) for _ in range(args.count)]
    ldu = ldu_subspaces(ctx, over="Fp")
    records, exact, first_bad = [], 0, None
    for v in elements:
        tr = st.pavesic_factorize(v)
        ok = st.factorization_ok(v, tr, ldu)
        exact += ok
        if not ok and first_bad is None:
            first_bad = v
        if args.report:
            records.append({"v": v.serialize(), "l": tr.l_part.serialize(), "d": tr.d_part.serialize(),
                            "u": tr.u_part.serialize(), "exact": bool(ok)})
    total = len(elements)
    print(f"{exact}/{total} exact")
    if first_bad is not None:
        print(f"counterexample: {_compact(first_bad.serialize())}\t{first_bad.render()}")
    if args.report:
        doc = {"tool": "fd2p", "version": __version__, "seed": args.seed,
               "params": {"p": ctx.p, "n": ctx.n, "f": list(ctx.field.f)},
               "exhaustive": bool(args.exhaustive), "exact": exact, "total": total, "records": records}
        with open(args.report, "w") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return EXIT_OK if first_bad is None else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fd2p", description="Unit groups of F D_2p in odd characteristic.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({kernels.BACKEND})")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the check suite and write a JSON report")
    _field_args(v)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--bound", type=int, default=st.GROUP_BOUND, help="group enumeration bound")
    v.add_argument("--algebra-bound", type=int, default=st.ALGEBRA_BOUND, help="whole-algebra scan bound")
    v.add_argument("--report", help="JSON report path, '-' for stdout")
    v.add_argument("--check", action="append", help="run only this check id (repeatable)")
    v.add_argument("--no-timings", action="store_true", help="write elapsed_ms as 0 for byte-stable reports")
    v.add_argument("--quiet", action="store_true", help="no per-check lines")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("basis", help="print a basis family, one element per line")
    _field_args(b)
    b.add_argument("--family", required=True, choices=FAMILIES)
    b.set_defaults(func=cmd_basis)

    f = sub.add_parser("factorize", help="Pavesic round trips on 1 + Gamma(A)")
    _field_args(f)
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--count", type=int, default=100)
    f.add_argument("--exhaustive", action="store_true", help="factor every element of 1 + Gamma(A)")
    f.add_argument("--bound", type=int, default=st.GROUP_BOUND)
    f.add_argument("--report", help="JSON path for per-element triples")
    f.set_defaults(func=cmd_factorize)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
