"""Command-line front end.

Exit status: 0 all checks pass, 1 a verification failed, 2 usage error,
3 a desk-scale bound was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arith import factorize, prime_power
from .limits import BoundExceeded, IndeterminateField, NoElementOfOrder

EPILOG = """\
bounds can be raised through the environment: CHARFIELDS_MAX_LEVEL,
CHARFIELDS_MAX_FIELD_ORDER, CHARFIELDS_MAX_LOG_TABLE, CHARFIELDS_MAX_M,
CHARFIELDS_MAX_Q, CHARFIELDS_MAX_ELLR.
"""


class UsageError(Exception):
    pass


def _add_q(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", type=int, help="field size, a prime power")
    p.add_argument("--p", type=int, help="characteristic (with --n)")
    p.add_argument("--n", type=int, help="degree over F_p (with --p)")


def _resolve_q(args) -> tuple[int, int, int]:
    if args.q is not None:
        pp = prime_power(args.q)
        if pp is None:
            raise UsageError(f"--q {args.q} is not a prime power")
        if args.p is not None and (args.p, args.n or 1) != pp:
            raise UsageError(f"--q {args.q} disagrees with --p {args.p} --n {args.n}")
        return args.q, pp[0], pp[1]
    if args.p is None:
        raise UsageError("give --q or --p/--n")
    n = args.n or 1
    if prime_power(args.p) != (args.p, 1):
        raise UsageError(f"--p {args.p} is not prime")
    return args.p**n, args.p, n


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="charfields", description="Character fields of GL_m(F_q) and SL_2(F_q).",
                                 epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="dump the classes and character table of GL2 or SL2")
    t.add_argument("--group", choices=["gl2", "sl2"], required=True)
    _add_q(t)
    t.add_argument("--format", choices=["text", "json"], default="text")
    t.add_argument("--output", help="write to this file instead of stdout")
    t.add_argument("--generator-rank", type=int, default=0)

    f = sub.add_parser("field", help="K(G) or K_d(G)")
    f.add_argument("--group", choices=["gl2", "sl2", "glm"], required=True)
    _add_q(f)
    f.add_argument("--m", type=int, default=2)
    f.add_argument("--order", type=int, help="restrict to elements of this order")
    f.add_argument("--format", choices=["text", "json"], default="json")

    v = sub.add_parser("verify", help="check one claim instance")
    v.add_argument("--claim", required=True)
    _add_q(v)
    v.add_argument("--ell", type=int)
    v.add_argument("--r", type=int)
    v.add_argument("--m", type=int)
    v.add_argument("--d", type=int)
    v.add_argument("--order", type=int)
    v.add_argument("--i", help="Lemma3.1 index tuple, comma separated")
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.add_argument("--generator-rank", type=int, default=0)

    s = sub.add_parser("sweep", help="run a parameter sweep over claims")
    s.add_argument("--claims", default="ALL", help="ALL or a comma separated list of claim ids")
    s.add_argument("--q-max", type=int, default=13)
    s.add_argument("--ellr-max", type=int, default=27)
    s.add_argument("--m-max", type=int, default=3)
    s.add_argument("--lemma-q-max", type=int)
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.add_argument("--output")

    st = sub.add_parser("selftest", help="run the invariant suites")
    st.add_argument("--q-max", type=int, default=9)
    return ap


def _emit(text: str, path: str | None, out) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        out.write(text)


def _cmd_table(args, out) -> int:
    from .tables import table

    q, p, n = _resolve_q(args)
    t = table(args.group.upper(), q, args.generator_rank)
    text = t.to_json() + "\n" if args.format == "json" else f"q = {p}^{n}\n" + t.to_text()
    _emit(text, args.output, out)
    return 0


def _cmd_field(args, out) -> int:
    from .glm import k_ellr_glm, k_glm
    from .tables import field_generated

    q, p, n = _resolve_q(args)
    if args.group == "glm":
        if args.order is None:
            fd = k_glm(args.m, q)
        else:
            f = factorize(args.order)
            if len(f) != 1:
                raise UsageError("for --group glm the order must be a prime power")
            fd = k_ellr_glm(args.m, q, f[0][0], f[0][1])
    else:
        fd = field_generated(args.group.upper(), q, args.order)
    if args.format == "json":
        d = fd.to_dict() | {"query": {"group": args.group, "q": q, "p": p, "n": n,
                                      "m": args.m if args.group == "glm" else 2, "order": args.order}}
        out.write(json.dumps(d, sort_keys=True) + "\n")
    else:
        out.write(f"{args.group} q={q} ({p}^{n}) order={args.order or 'all'}: {', '.join(fd.names())}\n")
    return 0


def _cmd_verify(args, out) -> int:
    from .theorems import CLAIMS, verify

    if args.claim not in CLAIMS:
        raise UsageError(f"unknown claim {args.claim!r}; choose from {', '.join(CLAIMS)}")
    params: dict = {}
    if args.q is not None or args.p is not None:
        params["q"] = _resolve_q(args)[0]
    for key in ("m", "ell", "r", "d", "order"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    if args.i:
        params["i"] = [int(x) for x in args.i.split(",")]
    if args.claim == "L1" and "order" not in params and "d" in params:
        params["order"] = params["d"]
    try:
        res = verify(args.claim, params, args.generator_rank)
    except KeyError as e:
        raise UsageError(f"claim {args.claim} needs parameter {e.args[0]}") from None
    out.write(json.dumps(res.to_dict(), sort_keys=True) + "\n" if args.format == "json" else res.to_text() + "\n")
    return 1 if res.status == "fail" else 0


def _cmd_sweep(args, out) -> int:
    from .theorems import CLAIMS, report_json, report_text, summary, sweep

    claims = CLAIMS if args.claims.upper() == "ALL" else tuple(c.strip() for c in args.claims.split(","))
    for c in claims:
        if c not in CLAIMS:
            raise UsageError(f"unknown claim {c!r}")
    res = sweep(claims, args.q_max, args.ellr_max, args.m_max, args.lemma_q_max)
    _emit(report_json(res) + "\n" if args.format == "json" else report_text(res), args.output, out)
    return 1 if summary(res)["fail"] else 0


def _cmd_selftest(args, out) -> int:
    from .selftest import run_all

    checks = run_all(args.q_max)
    for c in checks:
        out.write(c.line() + "\n")
    return 0 if all(c.ok for c in checks) else 1


COMMANDS = {"table": _cmd_table, "field": _cmd_field, "verify": _cmd_verify,
            "sweep": _cmd_sweep, "selftest": _cmd_selftest}


def run(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except BoundExceeded as e:
        print(f"charfields: bound exceeded: {e}", file=sys.stderr)
        return 3
    except (UsageError, NoElementOfOrder, IndeterminateField, ValueError) as e:
        print(f"charfields: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
