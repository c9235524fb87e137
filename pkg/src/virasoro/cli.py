"""Command-line front end.

Subcommands: singular, verify, recursion-check, sigma, cohomology,
resolution-check.  Output is deterministic: identical invocations print
identical bytes (timing is only included behind --timing for that reason).

Exit codes: 0 = pass/ok, 1 = a mathematical check failed, 2 = operational
error (size cap, pole, unsupported label, bad arguments).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from fractions import Fraction

from .errors import VirasoroError
from .rational import RationalFunction, format_rational, parse_rational
from .resolution import (
    IDENTITIES,
    T_RESOLUTION,
    TensorDensityAction,
    cohomology_dims,
    sigma,
    trivial_action,
    verify_resolution_identities,
)
from .singular import (
    KacLabel,
    apply_sum,
    build_s2p,
    build_sp1,
    kac_params,
    normalize_w,
    recursion_w,
    specialize,
    swap_t,
)
from .verma import (ModuleParams, VermaElement, apply_generator, first_difference,
                    grade, monomial_str)

#: family flag -> (p, q) label for a given n
FAMILIES = {
    "p1": lambda n: KacLabel(n, 1),
    "oneq": lambda n: KacLabel(1, n),
    "twop": lambda n: KacLabel(2, n),
    "ptwo": lambda n: KacLabel(n, 2),
}


def _family_sum(family: str, n: int, cap):
    if family == "p1":
        return build_sp1(n, cap)
    if family == "oneq":
        return swap_t(build_sp1(n, cap))
    if family == "twop":
        return build_s2p(n, cap)
    if family == "ptwo":
        return swap_t(build_s2p(n, cap))
    raise ValueError(f"unknown family {family!r}")


def _resolve_cap(args) -> int | None:
    if args.cap is not None:
        return args.cap
    env = os.environ.get("VIRASORO_CAP")
    return int(env) if env else None


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _sum_lines(s) -> list:
    return [f"({c}) {'.'.join(f'e{i}' for i in w)}" for w, c in s.terms.items()]


def _element_lines(x: VermaElement) -> list:
    return [f"({c}) {monomial_str(m)}" for m, c in x.sorted_terms()]


# -- command handlers: return (status, result_payload, text_lines, exit_code) --

def _cmd_singular(args, cap):
    label = FAMILIES[args.family](args.n)
    s = _family_sum(args.family, args.n, cap)
    params_desc = {"family": args.family, "n": args.n, "label": list(label)}
    if args.t is not None:
        s = specialize(s, args.t)
        params_desc["t"] = format_rational(args.t)
    lines = [f"label ({label.p},{label.q})  level {s.total}  {len(s)} terms"]
    lines += _sum_lines(s)
    result = {"sum": s.to_json_obj()}
    if args.normal_order:
        mp = kac_params(label.p, label.q)
        if args.t is not None:
            mp = ModuleParams.constants(mp.h.evaluate(args.t), mp.c.evaluate(args.t))
        x = apply_sum(s, VermaElement.highest_weight(mp))
        result["normal_order"] = x.to_json_obj()
        lines.append(f"normal order at h = {mp.h}, c = {mp.c}:")
        lines += _element_lines(x)
    return "ok", result, lines, 0


def _cmd_verify(args, cap):
    label = FAMILIES[args.family](args.n)
    s = _family_sum(args.family, args.n, cap)
    mp = kac_params(label.p, label.q)
    if args.h is not None:
        mp = ModuleParams(RationalFunction.from_fraction(args.h), mp.c)
    x = apply_sum(s, VermaElement.highest_weight(mp))
    checks = {}
    for k in range(1, args.depth + 1):
        checks[f"e_-{k}"] = apply_generator(-k, x).is_zero()
    ok = all(checks.values())
    lines = [f"label ({label.p},{label.q})  level {grade(x)}  depth {args.depth}"]
    lines += [f"{name} annihilates: {'yes' if val else 'NO'}" for name, val in checks.items()]
    lines.append("PASS" if ok else "FAIL")
    result = {"label": list(label), "depth": args.depth, "checks": checks}
    if args.h is not None:
        result["h"] = format_rational(args.h)
    return ("pass" if ok else "fail"), result, lines, 0 if ok else 1


def _cmd_recursion_check(args, cap):
    p = args.p
    lhs = normalize_w(recursion_w(p, cap), p)
    rhs = apply_sum(build_s2p(p, cap), VermaElement.highest_weight(kac_params(2, p)))
    ok = lhs == rhs
    diff = None if ok else first_difference(lhs, rhs)
    lines = [f"recursion route vs closed form at p={p}: {'PASS' if ok else 'FAIL'}"]
    if diff:
        lines.append(f"first differing monomial: {diff}")
    result = {"p": p, "equal": ok, "first_difference": diff}
    return ("pass" if ok else "fail"), result, lines, 0 if ok else 1


def _cmd_sigma(args, cap):
    label = KacLabel(args.p, args.q)
    action = (trivial_action() if args.module == "trivial"
              else TensorDensityAction(args.lam, args.mu))
    t0 = args.t if args.t is not None else T_RESOLUTION
    val = sigma(label, args.j, action, t0)
    lines = [f"sigma[{label.p},{label.q}]({args.j}) on {action.describe()} "
             f"at t = {format_rational(t0)}: {format_rational(val)}"]
    result = {"label": list(label), "j": args.j, "module": action.describe(),
              "t": format_rational(t0), "value": format_rational(val)}
    return "ok", result, lines, 0


def _parse_s_values(args) -> list:
    if args.s_range:
        a, _, b = args.s_range.partition(":")
        lo, hi = int(a), int(b)
        return list(range(lo, hi + 1))
    return [args.s]


def _cmd_cohomology(args, cap):
    action = (trivial_action() if args.module == "trivial"
              else TensorDensityAction(args.lam, args.mu))
    tables = [cohomology_dims(action, s, args.kmax) for s in _parse_s_values(args)]
    lines = [f"module {action.describe()}  t = {format_rational(T_RESOLUTION)}  kmax {args.kmax}"]
    for tbl in tables:
        cells = []
        for row in tbl.rows:
            grad = f" (gradings {','.join(map(str, row.gradings))})" if row.gradings else ""
            cells.append(f"H^{row.k} dim {row.dim}{grad}")
        lines.append(f"s={tbl.s}:  " + " | ".join(cells))
    result = {"tables": [t.to_json_obj() for t in tables]}
    return "ok", result, lines, 0


def _cmd_resolution_check(args, cap):
    names = args.identities.split(",") if args.identities else None
    report = verify_resolution_identities(names)
    lines = []
    for name, ok in report.generators_singular.items():
        lines.append(f"{name}: singular={'yes' if ok else 'NO'}")
    for r in report.identities:
        lines.append(f"{r.name} (level {r.level}): holds={'yes' if r.holds else 'NO'} "
                     f"singular={'yes' if r.singular else 'NO'}"
                     + (f" first difference {r.first_difference}" if r.first_difference else ""))
    lines.append(f"pentagonal level bookkeeping: {'yes' if report.level_bookkeeping else 'NO'}")
    ok = report.all_pass
    lines.append("PASS" if ok else "FAIL")
    return ("pass" if ok else "fail"), report.to_json_obj(), lines, 0 if ok else 1


def _add_common(sub):
    sub.add_argument("--format", choices=("text", "json"), default="text",
                     help="output format (default text)")
    sub.add_argument("--cap", type=int, default=None,
                     help="composition size cap (also via VIRASORO_CAP)")
    sub.add_argument("--seed", type=int, default=None,
                     help="accepted for interface stability; nothing is random")
    sub.add_argument("--timing", action="store_true",
                     help="include wall-clock timing (breaks byte-for-byte determinism)")


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that accepts values like -3/2 and ranges like -1:1."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+|:-?\d+)?$")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="virasoro",
        description="Exact construction and verification of Virasoro singular "
                    "vectors, and cohomology of graded modules over the positive "
                    "Witt algebra.")
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = subs.add_parser("singular", help="print a singular operator expansion")
    sp.add_argument("--family", choices=tuple(FAMILIES), required=True,
                    help="p1: (n,1); oneq: (1,n); twop: (2,n); ptwo: (n,2)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--t", type=_rational_arg, default=None,
                    help="specialize t to this rational (default: symbolic)")
    sp.add_argument("--normal-order", action="store_true",
                    help="also print the PBW form on the highest-weight vector")
    _add_common(sp)
    sp.set_defaults(handler=_cmd_singular)

    vp = subs.add_parser("verify", help="check annihilation by lowering generators")
    vp.add_argument("--family", choices=tuple(FAMILIES), required=True)
    vp.add_argument("--n", type=int, required=True)
    vp.add_argument("--depth", type=int, default=2,
                    help="check e_-k for k <= depth (default 2)")
    vp.add_argument("--h", type=_rational_arg, default=None,
                    help="override the highest weight (the Kac value otherwise)")
    _add_common(vp)
    vp.set_defaults(handler=_cmd_verify)

    rp = subs.add_parser("recursion-check",
                         help="compare the recursion route with the closed form")
    rp.add_argument("--p", type=int, required=True)
    _add_common(rp)
    rp.set_defaults(handler=_cmd_recursion_check)

    gp = subs.add_parser("sigma", help="scalar action on a graded module component")
    gp.add_argument("--p", type=int, required=True)
    gp.add_argument("--q", type=int, required=True)
    gp.add_argument("--j", type=int, required=True)
    gp.add_argument("--module", choices=("tensor-density", "trivial"),
                    default="tensor-density")
    gp.add_argument("--lambda", dest="lam", type=_rational_arg, default=Fraction(0))
    gp.add_argument("--mu", type=_rational_arg, default=Fraction(0))
    gp.add_argument("--t", type=_rational_arg, default=None,
                    help="evaluation point (default -3/2)")
    _add_common(gp)
    gp.set_defaults(handler=_cmd_sigma)

    cp = subs.add_parser("cohomology", help="cohomology dimension table")
    cp.add_argument("--module", choices=("trivial", "tensor-density"), required=True)
    cp.add_argument("--lambda", dest="lam", type=_rational_arg, default=Fraction(0))
    cp.add_argument("--mu", type=_rational_arg, default=Fraction(0))
    cp.add_argument("--s", type=int, default=0, help="internal degree (default 0)")
    cp.add_argument("--s-range", default=None, metavar="A:B",
                    help="inclusive degree range; overrides --s")
    cp.add_argument("--kmax", type=int, default=3)
    _add_common(cp)
    cp.set_defaults(handler=_cmd_cohomology)

    xp = subs.add_parser("resolution-check",
                         help="singular-vector coincidences and level bookkeeping")
    xp.add_argument("--identities", default=None,
                    help=f"comma-separated subset of {','.join(IDENTITIES)}")
    xp.add_argument("--json", action="store_true", help="shorthand for --format json")
    _add_common(xp)
    xp.set_defaults(handler=_cmd_resolution_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "json", False):
        args.format = "json"
    cap = _resolve_cap(args)
    started = time.monotonic()
    try:
        status, result, lines, code = args.handler(args, cap)
    except VirasoroError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        envelope = {
            "command": args.command,
            "params": {k: v for k, v in sorted(vars(args).items())
                       if k not in ("handler", "format", "timing", "json")
                       and not callable(v)},
            "status": status,
            "result": result,
        }
        if args.timing:
            envelope["timing_ms"] = int((time.monotonic() - started) * 1000)
        envelope["params"] = _jsonable(envelope["params"])
        print(json.dumps(envelope, indent=2))
    else:
        for line in lines:
            print(line)
        if args.timing:
            print(f"time: {int((time.monotonic() - started) * 1000)} ms")
    return code


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


if __name__ == "__main__":
    sys.exit(main())
