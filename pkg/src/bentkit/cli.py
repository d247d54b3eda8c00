"""Command-line interface.

Exit codes: 0 when every requested verification passes, 1 on a mismatch or
failed verification, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

import numpy as np

from . import catalog
from .constructions.gold import gold_pair_criterion
from .constructions.predict import compare_with_oracle
from .constructions.restrict import NotApplicable
from .constructions.sweep import iter_gold_pairs, product_pair_sweep
from .dualshift import NotExpansionForm, fit_expansion
from .func import (
    MAX_INTERPOLATION_ORDER,
    PFunc,
    ReducedPoly,
    TraceComposition,
    bent_degree_bound,
    compose,
    parse_function,
    univariate_degree,
    write_value_table,
)
from .gf import FieldError, parse_elem, parse_field_spec
from .report import RunReport
from .sampling import sample_instances
from .walsh import classify, walsh_direct, walsh_full

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

RULE_BY_FLAG = {
    "2": "disjoint-pairs",
    "3": "star",
    "prop1": "product-pair",
    "4.1": "quad-none",
    "4.2": "quad-single",
    "4.3": "quad-degenerate-pair",
    "4.4": "quad-pair",
    "5": "diagonal-elimination",
}

# worked instances used when verify-theorem gets no explicit g/F/points
DEFAULT_INSTANCES = {
    "2": ("2^6", "tr3:x9", "x1*x2+x1*x3*x4", "1,xi^1,xi^4,xi^2"),
    "3": ("2^8", "tr4:xi^17*x17", "x1*x4+x2*x3*x4", "xi^1,xi^6,xi^11,xi^20"),
    "prop1": ("5^2", "quad:1", "x1*x2", "1,xi^1"),
    "4.1": ("3^4", "quad:1", "x1*x3^2+x2*x3", "xi^13,xi^13,xi^53"),
    "4.2": ("3^4", "quad:1", "x1*x3^2+x2*x3", "xi^13,xi^2,xi^53"),
    "4.3": ("3^4", "quad:1", "x1*x3^2+x2*x3", "xi^2,xi^7,xi^53"),
    "4.4": ("3^4", "quad:1", "x1*x3^2+x2*x3", "xi^2,xi^9,xi^53"),
    "5": ("3^5", "quad:1", "x1*x2+x3*x4", "xi^2,xi^5,xi^4,xi^16"),
}
DEFAULT_GOLD = {"6": ("2^6", "xi^5", 2, "xi^1", "xi^2"), "7": ("3^4", "1", 1, "xi^1", "xi^2")}


class UsageError(Exception):
    pass


# -- helpers -----------------------------------------------------------------------

def _field(args, default: str | None = None):
    spec = args.field or default
    if spec is None:
        raise UsageError("--field is required for this command")
    return parse_field_spec(spec, args.generator)


def _points(ctx, text: str) -> tuple[int, ...]:
    pts = tuple(parse_elem(ctx, t) for t in text.split(",") if t.strip())
    if not pts:
        raise UsageError("at least one point is required")
    return pts


def _ints(text: str | None):
    return None if text is None else [int(t) for t in text.split(",")]


def _range(text: str | None, q: int) -> range:
    if text is None:
        return range(1, q)
    lo, _, hi = text.partition(":")
    lo_i = int(lo) if lo else 1
    hi_i = int(hi) if hi else q
    return range(max(lo_i, 1), min(hi_i, q))


def _degree_info(f: PFunc, rep) -> dict:
    ctx = f.ctx
    out = {}
    if ctx.q > MAX_INTERPOLATION_ORDER:
        out["degree"] = None
        return out
    deg = univariate_degree(f)
    out["degree"] = deg
    if rep.is_bent:
        bound = bent_degree_bound(ctx.p, ctx.n, rep.dual is not None)
        out["degree_bound"] = bound
        out["degree_bound_ok"] = deg <= bound
    return out


def _emit(args, report: RunReport, lines: list[str]) -> int:
    if args.json:
        print(report.dumps())
    else:
        for line in lines:
            print(line)
        print(f"{'PASS' if report.ok else 'FAIL'}  digest={report.digest()[:16]}")
    return EXIT_OK if report.ok else EXIT_MISMATCH


# -- commands ----------------------------------------------------------------------

def cmd_reproduce(args) -> int:
    which = list(catalog.EXAMPLES) if args.example == "all" else [int(args.example)]
    report = RunReport(["reproduce", args.example])
    lines = []
    for n in which:
        res = catalog.reproduce(n)
        report.add(res.to_json(), res.ok)
        lines.append(f"example {n} ({res.field}): {'ok' if res.ok else 'MISMATCH'}  [{res.seconds:.1f}s]")
        for c in res.checks:
            if args.verbose or not c.ok:
                extra = {k: v for k, v in c.detail.items() if k in ("first_bad_b", "predicted_vs_oracle", "first")}
                lines.append(f"  {'ok ' if c.ok else 'BAD'} {c.name} {json.dumps(extra) if extra else ''}".rstrip())
        for note in res.notes:
            lines.append(f"  note: {note}")
    return _emit(args, report, lines)


def cmd_check(args) -> int:
    ctx = _field(args)
    f = parse_function(args.function, ctx)
    rep = classify(f)
    report = RunReport(["check", args.function], ctx.describe())
    info = rep.to_json(with_dual=args.dual_table)
    info.update(_degree_info(f, rep))
    report.digests["spectrum"] = rep.spectrum.digest()
    report.add(info, info.get("degree_bound_ok", True))
    lines = [f"{args.function} on {ctx.spec}: {rep.kind}"
             + (f", mu={rep.mu}" if rep.mu else "")
             + (f", degree {info['degree']}" if info.get("degree") is not None else "")]
    if rep.dual is not None and ctx.q <= 81:
        lines.append("dual: " + " ".join(str(int(v)) for v in rep.dual.values))
    return _emit(args, report, lines)


def cmd_walsh(args) -> int:
    ctx = _field(args)
    f = parse_function(args.function, ctx)
    spec = walsh_full(f)
    report = RunReport(["walsh", args.function], ctx.describe())
    report.digests["spectrum"] = spec.digest()
    total = spec.parseval_total()
    ok = total == ctx.q**2
    verdict = {"parseval_total": total, "parseval_ok": ok}
    if args.confirm:
        same = spec.first_difference(walsh_direct(f))
        verdict["direct_agrees"] = same is None
        ok = ok and same is None
    verdict["spectrum"] = spec.rows()
    report.add(verdict, ok)
    lines = [f"b={r['b_index']}: {r['coeffs']}  |.|^2={r['norm_sq']}" for r in spec.rows()]
    return _emit(args, report, lines)


def cmd_fit_dual(args) -> int:
    ctx = _field(args)
    h = parse_function(args.function, ctx)
    if args.as_dual:
        gdual = h
    else:
        rep = classify(h)
        if rep.dual is None:
            raise UsageError(f"{args.function} is {rep.kind}; no dual to fit")
        gdual = rep.dual
    pts = _points(ctx, args.points)
    report = RunReport(["fit-dual", args.function, args.points], ctx.describe())
    try:
        exp = fit_expansion(gdual, pts, diag_override=_ints(args.diag))
    except NotExpansionForm as exc:
        report.add({"expansion": None, "error": "not-expansion-form", "witness": {"x": exc.x, "t": list(exc.t)}},
                   False)
        return _emit(args, report, [str(exc)])
    report.add({"expansion": exp.to_json()})
    tau = exp.tau
    lines = [f"A (upper triangle): {[[int(exp.A[i, j]) for j in range(i, tau)] for i in range(tau)]}",
             f"coupled indices: {[i + 1 for i in exp.gamma]}"]
    return _emit(args, report, lines)


def cmd_construct(args) -> int:
    ctx = _field(args)
    g = parse_function(args.g, ctx)
    pts = _points(ctx, args.points)
    F = ReducedPoly.parse(args.F, ctx.p, len(pts))
    f = compose(TraceComposition(g, F, pts))
    rep = classify(f)
    report = RunReport(["construct", args.g, args.F, args.points], ctx.describe())
    info = rep.to_json(with_dual=args.dual_table)
    info.update(_degree_info(f, rep))
    info["F_degree"] = F.degree
    report.digests["f"] = hashlib.sha256(np.ascontiguousarray(f.values, dtype="<i8").tobytes()).hexdigest()
    report.digests["spectrum"] = rep.spectrum.digest()
    report.add(info, info.get("degree_bound_ok", True))
    if args.out:
        write_value_table(f, args.out)
    return _emit(args, report, [f"f = g + F(Tr(u_i x)) on {ctx.spec}: {rep.kind}"])


def _verify_gold(args, thm: str) -> int:
    dflt = DEFAULT_GOLD[thm]
    ctx = _field(args, dflt[0])
    a = parse_elem(ctx, args.a or dflt[1])
    k = args.k if args.k is not None else dflt[2]
    u = parse_elem(ctx, args.u or dflt[3])
    v = parse_elem(ctx, args.v or dflt[4])
    report = RunReport(["verify-theorem", thm], ctx.describe(), {"a": a, "k": k, "u": u, "v": v})
    try:
        ver = gold_pair_criterion(ctx, a, k, u, v)
        out = ver.to_json()
    except NotApplicable as exc:
        out = {"applicable": False, "bent": None, "reason": str(exc)}
    f = PFunc.monomial_trace(ctx, a, ctx.p**k + 1) + PFunc.linear(ctx, u) * PFunc.linear(ctx, v)
    oracle = classify(f).is_bent
    agree = (not out["applicable"]) or out["bent"] == oracle
    out.update({"oracle_bent": oracle, "predicted_vs_oracle": "equal" if agree else "mismatch"})
    report.add(out, agree)
    return _emit(args, report, [f"--thm {thm}: applicable={out['applicable']} criterion={out['bent']} "
                                f"oracle={oracle}"])


def cmd_verify(args) -> int:
    thm = args.thm
    if thm in DEFAULT_GOLD:
        return _verify_gold(args, thm)
    rule = RULE_BY_FLAG[thm]
    if args.random:
        report = RunReport(["verify-theorem", thm, "--random", str(args.random)], None,
                           {"seed": args.seed, "rule": rule})
        insts = sample_instances(rule, args.random, seed=args.seed)
        lines = []
        for inst in insts:
            js = inst.to_json()
            report.add(js, inst.comparison.equal)
            lines.append(f"{js['field']} F={js['F']} points={js['points']}: {js['predicted_vs_oracle']}")
        if len(insts) < args.random:
            report.add({"error": f"only {len(insts)} admissible instances drawn"}, False)
        return _emit(args, report, lines)
    dflt = DEFAULT_INSTANCES[thm]
    explicit = args.g is not None
    ctx = _field(args, None if explicit and args.field else dflt[0])
    g = parse_function(args.g or dflt[1], ctx)
    pts = _points(ctx, args.points or dflt[3])
    F = ReducedPoly.parse(args.F or dflt[2], ctx.p, len(pts))
    opts = {}
    if args.pair:
        opts["pair"] = [int(i) - 1 for i in args.pair.split(",")]
    if args.diag:
        opts["diag_override"] = _ints(args.diag)
    if args.statement_sign:
        if thm != "4.4":
            raise UsageError("--statement-sign only applies to --thm 4.4")
        opts["statement_sign"] = True
    report = RunReport(["verify-theorem", thm], ctx.describe(),
                       {"rule": rule, "g": args.g or dflt[1], "F": str(F), "points": list(pts)})
    cmp = compare_with_oracle(rule, g, F, pts, **opts)
    out = cmp.to_json()
    report.add(out, cmp.equal or not cmp.applicable)
    return _emit(args, report, [f"--thm {thm} ({rule}): applicable={out['applicable']} bent={out['bent']} "
                                f"predicted_vs_oracle={out['predicted_vs_oracle']}"
                                + (f" reason={out['reason']}" if "reason" in out else "")])


def cmd_search(args) -> int:
    thm = args.thm
    ctx = _field(args, DEFAULT_GOLD[thm][0] if thm in DEFAULT_GOLD else None)
    urange = _range(args.u_range, ctx.q)
    vrange = _range(args.v_range, ctx.q)
    report = RunReport(["search", thm], ctx.describe(),
                       {"u_range": [urange.start, urange.stop], "v_range": [vrange.start, vrange.stop],
                        "confirm": args.confirm})
    hits = oracle_hits = disc = pairs = na = 0
    if thm in DEFAULT_GOLD:
        a = parse_elem(ctx, args.a or DEFAULT_GOLD[thm][1])
        k = args.k if args.k is not None else DEFAULT_GOLD[thm][2]
        report.params.update({"a": a, "k": k})
        groups = ((u, [v for v in vrange if not (ctx.p == 2 and v == u)]) for u in urange)
        rows = iter_gold_pairs(ctx, a, k, confirm=args.confirm, pairs=groups)
    elif thm == "prop1":
        g = parse_function(args.g or "quad:1", ctx)
        report.params["g"] = args.g or "quad:1"
        rows = _prop1_rows(g, urange, vrange, args.confirm)
    else:
        raise UsageError("search supports --thm 6, 7 and prop1")
    for row in rows:
        pairs += 1
        if not row["applicable"]:
            na += 1
        if row["criterion"]:
            hits += 1
            if args.json:
                print(json.dumps({"hit": [row["u"], row["v"]], "oracle": row["oracle"]}))
        if row["oracle"] is not None:
            oracle_hits += bool(row["oracle"])
            if row["applicable"] and bool(row["criterion"]) != row["oracle"]:
                disc += 1
    summary = {"pairs": pairs, "criterion_hits": hits, "not_applicable": na}
    if args.confirm:
        summary.update({"oracle_hits": oracle_hits, "discrepancies": disc})
    report.add(summary, disc == 0)
    return _emit(args, report, [json.dumps(summary, sort_keys=True)])


def _prop1_rows(g: PFunc, urange, vrange, confirm: bool):
    dual = classify(g).dual
    if dual is None:
        raise UsageError("g must be weakly regular bent")
    p = g.ctx.p
    oracle = {}
    if confirm:
        s = product_pair_sweep(g, pairs=[(u, list(vrange)) for u in urange if len(vrange)])
        bad = {tuple(x) for x in s.discrepancies}
    for u in urange:
        for v in vrange:
            A = fit_expansion(dual, (u, v)).A
            d = ((int(A[0, 1]) - 1) ** 2 - 4 * int(A[0, 0]) * int(A[1, 1])) % p
            crit = d != 0
            ob = None
            if confirm:
                ob = crit != ((u, v) in bad)
            yield {"u": u, "v": v, "applicable": True, "criterion": crit, "oracle": ob}


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    def global_flags(suppress: bool) -> argparse.ArgumentParser:
        # subcommands repeat the flags with suppressed defaults so a value given
        # before the subcommand is not overwritten
        d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        par = argparse.ArgumentParser(add_help=False)
        par.add_argument("--field", default=d(None), help='field spec "p^n" or "p^n/c_n,...,c_0"')
        par.add_argument("--generator", type=int, default=d(None), help="primitive element index override")
        par.add_argument("--seed", type=int, default=d(0))
        par.add_argument("--json", action="store_true", default=d(False), help="print the JSON report")
        par.add_argument("--confirm", action="store_true", default=d(False),
                         help="confirm criteria against the direct transform")
        return par

    common = global_flags(True)

    ap = argparse.ArgumentParser(prog="bentkit", parents=[global_flags(False)],
                                 description="Construct and verify bent functions g(x) + F(Tr(u_1 x), ...).")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("reproduce", parents=[common], help="rebuild a worked example (1..7 or all)")
    p.add_argument("example", choices=[str(i) for i in range(1, 8)] + ["all"])
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("check", parents=[common], help="classify a function and check degree bounds")
    p.add_argument("function")
    p.add_argument("--dual-table", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("walsh", parents=[common], help="dump the exact Walsh spectrum")
    p.add_argument("function")
    p.set_defaults(func=cmd_walsh)

    p = sub.add_parser("fit-dual", parents=[common], help="fit the shift expansion of a dual")
    p.add_argument("function", help="g (its dual is fitted) or the dual itself with --as-dual")
    p.add_argument("--points", required=True, help="comma-separated elements, e.g. xi^2,xi^7")
    p.add_argument("--as-dual", action="store_true")
    p.add_argument("--diag", help="p = 2 only: explicit A_ii values")
    p.set_defaults(func=cmd_fit_dual)

    p = sub.add_parser("construct", parents=[common], help="compose f = g + F(Tr(u_1 x), ...) and classify")
    p.add_argument("--g", required=True)
    p.add_argument("--F", required=True)
    p.add_argument("--points", required=True)
    p.add_argument("--out", help="write the value table of f here")
    p.add_argument("--dual-table", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify-theorem", parents=[common], help="run a predictor or criterion against the oracle")
    p.add_argument("--thm", required=True, choices=list(RULE_BY_FLAG) + list(DEFAULT_GOLD))
    p.add_argument("--g")
    p.add_argument("--F")
    p.add_argument("--points")
    p.add_argument("--pair", help="1-based indices of the retained pair, e.g. 1,2")
    p.add_argument("--diag", help="p = 2 only: explicit A_ii values")
    p.add_argument("--statement-sign", action="store_true",
                   help="4.4 only: use the alternative sign factor eta(4B_1B_2 - B_3^2), which disagrees with the oracle")
    p.add_argument("--a")
    p.add_argument("--k", type=int)
    p.add_argument("--u")
    p.add_argument("--v")
    p.add_argument("--random", type=int, default=0, help="check this many seeded random instances")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="enumerate (u, v) and stream criterion hits")
    p.add_argument("--thm", required=True, choices=["6", "7", "prop1"])
    p.add_argument("--a")
    p.add_argument("--k", type=int)
    p.add_argument("--g", help="prop1 only: the bent g (default quad:1)")
    p.add_argument("--u-range", help="element index range lo:hi (default all nonzero)")
    p.add_argument("--v-range")
    p.set_defaults(func=cmd_search)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FieldError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
