"""Command-line interface.

Exit codes: 0 success, 1 usage or domain error, 2 a verification or table
check failed, 3 an enumeration, search or precision limit was hit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

import mpmath

from . import constants, covering, packing, qcomb, rates
from .codefile import format_subspace
from .constructions import (
    CHECKS,
    DEFAULT_CODE_LIMIT,
    GREEDY_LIMIT,
    Code,
    grassmann_union_code,
    greedy_cover,
    kk_code,
    layered_packing_code,
    trivial_covering_code,
)
from .errors import (
    EnumerationTooLarge,
    NodeBudgetExceeded,
    PrecisionUnsupported,
    SubspaceCodesError,
)
from .field import gf, is_prime_power
from .lp import DEFAULT_NODE_BUDGET
from .oracle import (
    DEFAULT_ORACLE_LIMIT,
    MAX_PACKING_SPACE,
    brute_covering_radius,
    brute_distance_profile,
    brute_max_packing,
    brute_min_distance,
)
from .subspace import AmbientSpace, canonicalize
from .tables import reproduce_table

EXIT_OK, EXIT_ERROR, EXIT_MISMATCH, EXIT_LIMIT = 0, 1, 2, 3
METRICS = ("subspace", "injection")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


class Result:
    """What a command produced: a JSON payload, text, CSV rows, exit code."""

    def __init__(self, payload, text: str, rows=None, code: int = EXIT_OK):
        self.payload = payload
        self.text = text
        self.rows = rows if rows is not None else []
        self.code = code


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["parameters", "value", "provenance", "annotation"])
    w.writerows(rows)
    return buf.getvalue()


def _params(**kw) -> str:
    return " ".join(f"{k}={v}" for k, v in kw.items())


def _limit(args, default: int) -> int:
    return args.enum_limit if args.enum_limit is not None else default


# -- commands ---------------------------------------------------------------


def cmd_table(args) -> Result:
    report = reproduce_table(args.which)
    lines = [report.title, "d    " + "  ".join(f"{c:>28}" for c in report.columns)]
    rows = []
    for row in report.rows:
        cells = []
        for c in row.cells:
            shown = "-" if c.ours is None else str(c.ours)
            cells.append(f"{shown + ' vs ' + str(c.published) + ' ' + c.annotation:>28}")
            rows.append([_params(table=args.which, d=row.d, column=c.key), c.ours, c.published, c.annotation])
        lines.append(f"{row.d:<4} " + "  ".join(cells) + ("" if row.ok else "  MISMATCH"))
    lines.append("all cells consistent" if report.ok else "table check FAILED")
    return Result(report.to_dict(), "\n".join(lines), rows, EXIT_OK if report.ok else EXIT_MISMATCH)


def cmd_bounds(args) -> Result:
    if args.kind == "packing":
        b = packing.packing_bounds(args.q, args.n, args.d, args.metric)
        par = _params(q=args.q, n=args.n, d=args.d, metric=args.metric)
        text = f"{b.lower} <= A <= {b.upper}  lower[{','.join(b.lower_provenance)}] upper[{','.join(b.upper_provenance)}]"
        rows = [
            [par + " side=lower", b.lower, ";".join(b.lower_provenance), ""],
            [par + " side=upper", b.upper, ";".join(b.upper_provenance), ""],
        ]
        return Result(b.to_dict(), text, rows)
    rep = covering.covering_bounds(args.q, args.n, args.rho, args.metric, ilp=args.ilp,
                                   node_budget=args.node_budget)
    par = _params(q=args.q, n=args.n, rho=args.rho, metric=args.metric)
    text = f"{rep.lower} <= K <= {rep.upper}  lower[{','.join(rep.lower_provenance)}] upper[{','.join(rep.upper_provenance)}]"
    if rep.lp_value is not None:
        text += f"\n  sphere-covering LP optimum {rep.lp_value}"
    if rep.ilp_value is not None:
        text += f", ILP optimum {rep.ilp_value}"
    for note in rep.notes:
        text += f"\n  note: {note}"
    rows = [
        [par + " side=lower", rep.lower, ";".join(rep.lower_provenance), ";".join(rep.notes)],
        [par + " side=upper", rep.upper, ";".join(rep.upper_provenance), ""],
    ]
    return Result(rep.to_dict(), text, rows)


def _build(args) -> Code:
    lim = _limit(args, DEFAULT_CODE_LIMIT)
    if args.construction == "kk":
        return kk_code(args.q, args.n, args.r, args.d, lim)
    if args.construction == "layered":
        return layered_packing_code(args.q, args.n, args.d, args.metric, lim)
    if args.construction == "union":
        return grassmann_union_code(args.q, args.n, args.rho, lim)
    if args.construction == "greedy":
        return greedy_cover(args.q, args.n, args.rho, args.metric, _limit(args, GREEDY_LIMIT))
    return trivial_covering_code(args.q, args.n)


def _summary(code: Code) -> dict:
    return {
        "q": code.q,
        "n": code.n,
        "size": len(code),
        "construction": code.metadata.get("construction"),
        "parameters": code.metadata.get("parameters"),
        "claim": code.metadata.get("claim"),
        "verification": code.metadata.get("verification"),
    }


def cmd_construct(args) -> Result:
    code = _build(args).certify(_limit(args, DEFAULT_ORACLE_LIMIT))
    text = code.to_text()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        v = code.metadata["verification"]
        text = f"wrote {len(code)} codewords to {args.output} ({v['check']} {v['status']})"
    summary = _summary(code)
    row = [_params(construction=args.construction, q=code.q, n=code.n), len(code),
           args.construction, summary["verification"]["status"]]
    status = summary["verification"]["status"]
    exit_code = {"verified": EXIT_OK, "failed": EXIT_MISMATCH}.get(status, EXIT_OK)
    return Result(summary, text, [row], exit_code)


def _load(path: str) -> Code:
    with open(path) as fh:
        return Code.from_text(fh.read())


def cmd_verify(args) -> Result:
    code = _load(args.file)
    claim = code.claim or {}
    check = args.check or claim.get("check")
    metric = args.metric or claim.get("metric")
    if check is None or metric is None:
        raise ValueError("no claim in the file; pass --check and --metric")
    v = code.verify(check, metric, _limit(args, DEFAULT_ORACLE_LIMIT))
    text = f"{v.check} ({v.metric}): claimed {v.claimed}, measured {v.measured}: {v.status}"
    code_ = {"verified": EXIT_OK, "failed": EXIT_MISMATCH, "unverified": EXIT_LIMIT}[v.status]
    row = [_params(file=args.file, check=v.check, metric=v.metric), v.measured, "oracle", v.status]
    return Result(v.to_dict(), text, [row], code_)


def cmd_oracle(args) -> Result:
    lim = _limit(args, DEFAULT_ORACLE_LIMIT)
    if args.action == "profile":
        f = gf(args.q)
        rows = [[f.from_digits(x) for x in row.split(",")] for row in args.center.split(";")]
        center = canonicalize(rows, f, args.n)
        prof = brute_distance_profile(AmbientSpace(f, args.n, lim), center, args.metric, lim)
        lines = [f"center {format_subspace(center)} (dim {center.dim}), {args.metric} metric"]
        lines += [f"  s={s} d={d}: {c}" for (s, d), c in sorted(prof.histogram.items())]
        out = [[_params(s=s, d=d), c, "oracle", ""] for (s, d), c in sorted(prof.histogram.items())]
        return Result(prof.to_dict(), "\n".join(lines), out)
    if args.action == "maxpack":
        size_limit = args.enum_limit if args.enum_limit is not None else MAX_PACKING_SPACE
        value = brute_max_packing(args.q, args.n, args.d, args.metric, size_limit)
        par = _params(q=args.q, n=args.n, d=args.d, metric=args.metric)
        return Result({"q": args.q, "n": args.n, "d": args.d, "metric": args.metric, "value": value},
                      f"max packing {value}", [[par, value, "oracle", ""]])
    code = _load(args.file)
    fn = brute_covering_radius if args.action == "radius" else brute_min_distance
    value = fn(code, args.metric, lim)
    name = "covering radius" if args.action == "radius" else "minimum distance"
    par = _params(file=args.file, metric=args.metric)
    return Result({"file": args.file, "metric": args.metric, args.action: value},
                  f"{name} {value}", [[par, value, "oracle", ""]])


def cmd_volume(args) -> Result:
    v = qcomb.ball_volume(args.q, args.n, args.r, args.t, args.metric)
    par = _params(q=args.q, n=args.n, r=args.r, t=args.t, metric=args.metric)
    return Result({"q": args.q, "n": args.n, "r": args.r, "t": args.t, "metric": args.metric, "volume": v},
                  str(v), [[par, v, "formula", ""]])


def cmd_count(args) -> Result:
    if args.what == "gaussian":
        v = qcomb.gaussian_binomial(args.q, args.n, args.r)
        payload = {"what": "gaussian", "q": args.q, "n": args.n, "r": args.r, "value": v}
    elif args.what == "projective":
        v = qcomb.projective_space_size(args.q, args.n)
        payload = {"what": "projective", "q": args.q, "n": args.n, "value": v}
    else:
        v = qcomb.distance_count(args.q, args.n, args.r, args.s, args.d, args.metric)
        payload = {"what": "distance", "q": args.q, "n": args.n, "r": args.r, "s": args.s,
                   "d": args.d, "metric": args.metric, "value": v}
    par = _params(**{k: x for k, x in payload.items() if k != "value"})
    return Result(payload, str(v), [[par, v, "formula", ""]])


def cmd_rates(args) -> Result:
    query = packing.RateQuery(
        args.kind,
        d=None if args.d is None else Fraction(args.d),
        r=None if args.r is None else Fraction(args.r),
        rho=None if args.rho is None else Fraction(args.rho),
    )
    reports = [rates.finite_rate(query, args.q, n) for n in args.n]
    limit = packing.asymptotic_rate(query)
    lines = [f"limit {args.kind} = {limit} ({float(limit):.6f})"]
    lines += [f"  n={r.n:<4} param={r.parameter:<4} rate in [{r.lower_rate:.6f}, {r.upper_rate:.6f}]  gap {r.gap():.6f}"
              for r in reports]
    rows = [[_params(kind=args.kind, q=args.q, n=r.n, parameter=r.parameter), f"{r.lower_rate:.9f}..{r.upper_rate:.9f}",
             "closed-form-bounds", f"limit={limit}"] for r in reports]
    payload = {"kind": args.kind, "limit": str(limit), "finite": [r.to_dict() for r in reports]}
    return Result(payload, "\n".join(lines), rows)


def cmd_constant(args) -> Result:
    if args.which == "kq":
        est = constants.kq_constant(args.q, args.precision, args.method)
    else:
        est = constants.theta_constant(args.q, args.precision)
    value = mpmath.nstr(est.value, args.precision)
    payload = {
        "constant": args.which,
        "q": args.q,
        "method": est.method,
        "value": value,
        "lower": str(est.lower),
        "upper": str(est.upper),
        "truncation_index": est.truncation_index,
    }
    text = f"{value}  (method {est.method}, {est.truncation_index} terms)"
    return Result(payload, text, [[_params(constant=args.which, q=args.q), value, est.method, ""]])


# -- parser -----------------------------------------------------------------


def _globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    dflt = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=("text", "json", "csv"), default=dflt("text"))
    p.add_argument("--enum-limit", type=int, default=dflt(None), metavar="N",
                   help="cap on enumerated subspaces / codewords")
    p.add_argument("--precision", type=int, default=dflt(40), metavar="DIGITS",
                   help="decimal digits for certified interval arithmetic")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="subspace-codes", description="Bounds and constructions for subspace codes.")
    _globals(parser, suppress=False)
    shared = _Parser(add_help=False)
    _globals(shared, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        return sub.add_parser(name, help=help_, parents=[shared])

    p = add("table", "reproduce a published q=2, n=10 bound table")
    p.add_argument("which", choices=("I", "II"))
    p.set_defaults(func=cmd_table)

    p = add("bounds", "packing or covering bound intervals")
    bsub = p.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    bp = bsub.add_parser("packing", parents=[shared])
    bp.add_argument("--metric", choices=METRICS, required=True)
    bp.add_argument("--q", type=int, required=True)
    bp.add_argument("--n", type=int, required=True)
    bp.add_argument("--d", type=int, required=True)
    bc = bsub.add_parser("covering", parents=[shared])
    bc.add_argument("--metric", choices=METRICS, required=True)
    bc.add_argument("--q", type=int, required=True)
    bc.add_argument("--n", type=int, required=True)
    bc.add_argument("--rho", type=int, required=True)
    bc.add_argument("--ilp", action="store_true", help="also solve the sphere-covering integer program")
    bc.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.set_defaults(func=cmd_bounds)

    p = add("construct", "build a code and write it in the code-file format")
    p.add_argument("construction", choices=("kk", "layered", "union", "greedy", "trivial"))
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--rho", type=int)
    p.add_argument("--metric", choices=METRICS, default="subspace")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_construct)

    p = add("verify", "re-check a code file's claim with the oracle")
    p.add_argument("--file", required=True)
    p.add_argument("--check", choices=CHECKS)
    p.add_argument("--metric", choices=METRICS)
    p.set_defaults(func=cmd_verify)

    p = add("oracle", "brute-force computations at small parameters")
    osub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    op = osub.add_parser("profile", parents=[shared])
    op.add_argument("--q", type=int, required=True)
    op.add_argument("--n", type=int, required=True)
    op.add_argument("--center", required=True, help="rows separated by ';', symbols by ','")
    op.add_argument("--metric", choices=METRICS, default="subspace")
    for action in ("radius", "mindist"):
        oa = osub.add_parser(action, parents=[shared])
        oa.add_argument("--file", required=True)
        oa.add_argument("--metric", choices=METRICS, required=True)
    om = osub.add_parser("maxpack", parents=[shared])
    om.add_argument("--q", type=int, required=True)
    om.add_argument("--n", type=int, required=True)
    om.add_argument("--d", type=int, required=True)
    om.add_argument("--metric", choices=METRICS, required=True)
    p.set_defaults(func=cmd_oracle)

    p = add("volume", "ball volume V(r, t)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--metric", choices=METRICS, required=True)
    p.set_defaults(func=cmd_volume)

    p = add("count", "Gaussian binomials, |E(q, n)|, distance counts")
    p.add_argument("what", choices=("gaussian", "projective", "distance"))
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--metric", choices=METRICS, default="subspace")
    p.set_defaults(func=cmd_count)

    p = add("rates", "finite-n rates against their closed-form limits")
    p.add_argument("--kind", choices=packing.RATE_KINDS, required=True)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--n", type=int, nargs="+", default=[20, 40, 60])
    p.add_argument("--d", help="normalized distance, e.g. 1/5")
    p.add_argument("--r", help="normalized dimension")
    p.add_argument("--rho", help="normalized radius")
    p.set_defaults(func=cmd_rates)

    p = add("constant", "the constants K_q and theta(q)")
    p.add_argument("which", choices=("kq", "theta"))
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--method", choices=constants.KQ_METHODS, default="euler_product")
    p.set_defaults(func=cmd_constant)
    return parser


_REQUIRED = {
    "kk": ("r", "d"),
    "layered": ("d",),
    "union": ("rho",),
    "greedy": ("rho",),
    "trivial": (),
}


def run(argv=None) -> tuple[int, str]:
    """Parse ``argv`` and execute; returns (exit code, rendered output)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "q", None) is not None and not is_prime_power(args.q):
        parser.error(f"--q {args.q} is not a prime power")
    if args.command == "construct":
        missing = [f"--{k}" for k in _REQUIRED[args.construction] if getattr(args, k) is None]
        if missing:
            parser.error(f"construct {args.construction} needs {' '.join(missing)}")
    result = args.func(args)
    if args.format == "json":
        out = json.dumps(result.payload, indent=2, sort_keys=True)
    elif args.format == "csv":
        out = _csv(result.rows).rstrip("\n")
    else:
        out = result.text
    return result.code, out


def main(argv=None) -> int:
    try:
        code, out = run(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    except (EnumerationTooLarge, NodeBudgetExceeded, PrecisionUnsupported) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (SubspaceCodesError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
