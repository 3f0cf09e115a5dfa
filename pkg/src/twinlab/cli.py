"""
twinlab command line.

Exit codes: 0 when every check passes, 1 on a verification failure (the
first counterexample is printed), 2 on usage errors or when an enumeration
would exceed TWINLAB_BUDGET_MB.
"""

import argparse
import json
import sys

from twinlab import sl2kit
from twinlab.gfield import parse_field, FieldError
from twinlab.coxeter import (growth_series, growth_bound, covolume, covolume_bound,
                             covolume_partial, Divergent)

SCHEMA = "twinlab/1"


class UsageError(Exception):
    pass


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True, default=str)


def _fields(csv):
    return [parse_field(s) for s in csv.split(",") if s.strip()]


def _mode(args):
    if args.samples is not None:
        if args.seed is None:
            raise UsageError("sampled mode needs an explicit --seed")
        if args.exhaustive:
            raise UsageError("--exhaustive and --samples are exclusive")
        return "sampled"
    return "exhaustive"


def _emit(text, out):
    if out:
        with open(out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _finish(report, emit="text"):
    "print a report with 'checks' (name -> bool) and 'failure'; return the exit code"
    report["schema"] = SCHEMA
    ok = all(report["checks"].values())
    report["passed"] = ok
    if emit == "json":
        print(_dump(report))
    else:
        for name, passed in report["checks"].items():
            print("%-40s %s" % (name, "ok" if passed else "FAILED"))
        for k, v in report.get("info", {}).items():
            print("%s: %s" % (k, v))
    if not ok:
        print("first counterexample: %s" % _dump(report.get("failure")), file=sys.stderr if emit == "json" else sys.stdout)
    return 0 if ok else 1


# ---------------------------------------------------------------- commands

def cmd_verify_sl2(args):
    K = parse_field(args.field)
    rel = sl2kit.sl2_relation_suite(K)
    orc = sl2kit.sl2_oracle_check(K)
    order = K.q*(K.q*K.q - 1)
    report = {
        "field": K.spec(),
        "checks": {"relations": rel["passed"], "matrix oracle": orc["passed"],
                   "|SL_2| = q(q^2-1)": len(sl2kit.sl2_elements(K)) == order},
        "info": {"relation checks": rel["checks"], "product pairs": orc["checks"],
                 "product cases": orc["cases"]},
        "failure": rel["failure"] or orc["failure"],
    }
    return _finish(report, args.emit)


def _tree_cfg(args):
    from twinlab.treetwin import TreeConfig
    return TreeConfig(parse_field(args.k0), parse_field(args.k1))


def cmd_tree_verify(args):
    from twinlab.treetwin import verify_product_relation, verify_trd, build_ball
    from twinlab.treetwin.twin import verify_twin
    cfg = _tree_cfg(args)
    mode = _mode(args)
    pr = verify_product_relation(cfg, mode, samples=args.samples or 0, seed=args.seed or 0)
    trd = verify_trd(cfg, W=args.window + 1)
    tw = verify_twin(cfg, window=args.window)
    ball = build_ball(cfg, 2)
    val = ball.valencies()
    want = {(0, 1 + cfg.q[0]), (1, 1 + cfg.q[1])}
    failure = pr["failure"] or (trd["failures"][:1] or [None])[0] or (tw["failures"][:1] or [None])[0]
    report = {
        "fields": [k.spec() for k in cfg.K], "mode": mode, "seed": args.seed,
        "checks": {"product relation": pr["passed"], "TRD axioms": trd["passed"],
                   "twin axioms TW1-TW3": tw["passed"],
                   "panel valencies 1+q_i": set(val) == want, "ball is a tree": ball.is_tree()},
        "info": {"product relation checks": pr["checks"], "TRD checks": trd["checks"],
                 "twin pairs": tw["counts"].get("pairs", 0)},
        "failure": failure,
    }
    return _finish(report, args.emit)


def cmd_tree_ball(args):
    from twinlab.treetwin import build_ball
    cfg = _tree_cfg(args)
    ball = build_ball(cfg, args.radius)
    if args.emit == "json":
        _emit(_dump(ball.to_json()) + "\n", args.out)
    else:
        _emit(ball.to_dot(), args.out)
    return 0


def cmd_fuchsian_verify(args):
    from twinlab.fuchsian import FuchsianConfig, verify_fuchsian_product_relation, local_structure
    from twinlab.fuchsian.groups import coverage
    cfg = FuchsianConfig(args.r, _fields(args.fields))
    mode = _mode(args)
    pr = verify_fuchsian_product_relation(cfg, mode, samples=args.samples or 0, seed=args.seed or 0)
    loc = local_structure(cfg.K)
    links_ok = all(L["sizes"] == (1 + cfg.K[i].q, 1 + cfg.K[(i + 1) % cfg.r].q)
                   for i, L in enumerate(loc["links"]))
    report = {
        "r": cfg.r, "fields": [k.spec() for k in cfg.K], "mode": mode, "seed": args.seed,
        "checks": {"product relation": pr["passed"], "vertex links K_{1+q_i,1+q_i+1}": links_ok,
                   "thickness is 1 + prime power": loc["projective_lines"]},
        "info": {"checks": pr["checks"], "coverage (factor, case, type)": len(coverage(pr["counts"])),
                 "links": " ".join(L["link"] for L in loc["links"])},
        "failure": pr["failure"],
    }
    return _finish(report, args.emit)


def cmd_fuchsian_ball(args):
    from twinlab.fuchsian import build_fuchsian_ball
    from twinlab.render import ball_svg
    fields = _fields(args.fields) if args.fields else None
    ball = build_fuchsian_ball(args.r, args.q, args.radius, fields)
    if args.emit == "json":
        _emit(_dump(ball.to_json()) + "\n", args.out)
    elif args.emit == "svg":
        _emit(ball_svg(ball), args.out)
    else:
        _emit(ball.to_dot(), args.out)
    return 0


def cmd_coxeter_growth(args):
    try:
        d = growth_series(args.r, args.n, check=args.check)
    except AssertionError as e:
        print("FAILED: %s" % e)
        return 1
    if args.emit == "json":
        print(_dump({"schema": SCHEMA, "r": args.r, "growth": d,
                     "majorant": growth_bound(args.r, args.n), "checked": args.check}))
    else:
        print(" ".join(map(str, d)))
    return 0


def _frac(x):
    if x is Divergent:
        return "divergent"
    return "%d/%d" % (x.numerator, x.denominator)


def cmd_coxeter_covolume(args):
    f = covolume_bound if args.majorant else covolume
    v = f(args.r, args.q)
    if args.emit == "json":
        out = {"schema": SCHEMA, "r": args.r, "q": args.q, "covolume": _frac(v),
               "series": "majorant r(r-2)^(n-1)" if args.majorant else "exact growth"}
        if v is not Divergent and not args.majorant:
            out["partial_sum_30"] = _frac(covolume_partial(args.r, args.q, 30))
        print(_dump(out))
    else:
        print(_frac(v))
    return 0


def cmd_nonlin_witness(args):
    from twinlab.fuchsian import FuchsianConfig
    from twinlab.nonlin import witness_report
    cfg = FuchsianConfig(args.r, _fields(args.fields))
    if args.length > 12 or max(cfg.q) > 3:
        raise UsageError("the free-product certificate needs length <= 12 and q_i <= 3")
    rep = witness_report(cfg, L=args.length, N=args.power, depth=args.depth)
    print(_dump(rep))
    if not rep["passed"]:
        print("first counterexample: collisions=%d, growth=%s" %
              (rep["collision_count"], rep["order_growth"][:10]), file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------- parser

def _sampling(p):
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)


def build_parser():
    ap = argparse.ArgumentParser(prog="twinlab", description=__doc__.strip().splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    v = sub.add_parser("verify").add_subparsers(dest="what", required=True)
    p = v.add_parser("sl2", help="rank one relations and the product formula")
    p.add_argument("--field", required=True)
    p.add_argument("--emit", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify_sl2)

    t = sub.add_parser("tree").add_subparsers(dest="what", required=True)
    p = t.add_parser("verify", help="product relation, TRD and twin axioms")
    p.add_argument("--k0", required=True)
    p.add_argument("--k1", required=True)
    p.add_argument("--window", type=int, default=3)
    p.add_argument("--emit", choices=["text", "json"], default="text")
    _sampling(p)
    p.set_defaults(func=cmd_tree_verify)
    p = t.add_parser("ball")
    p.add_argument("--k0", required=True)
    p.add_argument("--k1", required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--emit", choices=["dot", "json"], default="dot")
    p.add_argument("--out")
    p.set_defaults(func=cmd_tree_ball)

    f = sub.add_parser("fuchsian").add_subparsers(dest="what", required=True)
    p = f.add_parser("verify", help="Levi actions and local structure")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--fields", required=True)
    p.add_argument("--emit", choices=["text", "json"], default="text")
    _sampling(p)
    p.set_defaults(func=cmd_fuchsian_verify)
    p = f.add_parser("ball")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--fields")
    p.add_argument("--emit", choices=["dot", "svg", "json"], default="dot")
    p.add_argument("--out")
    p.set_defaults(func=cmd_fuchsian_ball)

    c = sub.add_parser("coxeter").add_subparsers(dest="what", required=True)
    p = c.add_parser("growth")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", action="store_true")
    p.add_argument("--emit", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_coxeter_growth)
    p = c.add_parser("covolume")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--majorant", action="store_true",
                   help="sum r(r-2)^(n-1)/q^n instead of the exact growth series")
    p.add_argument("--emit", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_coxeter_covolume)

    n = sub.add_parser("nonlin").add_subparsers(dest="what", required=True)
    p = n.add_parser("witness")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--fields", required=True)
    p.add_argument("--length", type=int, default=8)
    p.add_argument("--power", type=int, default=50)
    p.add_argument("--depth", type=int, default=0, help="V_i uses roots a_i(0..depth)")
    p.add_argument("--emit", choices=["json"], default="json")
    p.set_defaults(func=cmd_nonlin_witness)
    return ap


def run(argv=None):
    from twinlab.treetwin.building import BudgetExceeded as TreeBudget
    from twinlab.fuchsian.lattice import BudgetExceeded as FuchsBudget
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return args.func(args)
    except (UsageError, FieldError, ValueError) as e:
        print("twinlab: error: %s" % e, file=sys.stderr)
        return 2
    except (TreeBudget, FuchsBudget) as e:
        print("twinlab: budget exceeded: %s" % e, file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
