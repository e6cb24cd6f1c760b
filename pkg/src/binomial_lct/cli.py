"""Command line front end: ``lct compute|rays|eval|resolve|verify FILE``.

Exit codes: 0 success, 1 the independent computations disagree, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from typing import Optional, Sequence

from .gamma_fan import global_lct
from .ideal import GeneralBinomialIdeal, IdealError, parse_ideal
from .lct_eval import LctFunction
from .linalg import INF, ExtRational, ext_decimal, ext_str
from .newton import NewtonPolyhedron, howald_lct
from .report import (
    RayRow,
    RunReport,
    breakdown_dict,
    fmt_vec,
    render_breakdown,
    render_figure,
    render_table,
)
from .resolution import Resolution, lct_via_resolution, pseudo_resolve


class InputError(Exception):
    pass


def load_ideal(path: str) -> GeneralBinomialIdeal:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_ideal(text)
    except IdealError as exc:
        raise InputError(f"{path}: {exc}") from None


def parse_vector(text: str, n: int) -> tuple[int, ...]:
    try:
        v = tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise InputError(f"bad vector {text!r}: expected comma separated integers") from None
    if len(v) != n:
        raise InputError(f"vector {text!r} has {len(v)} entries, the ideal has {n} variables")
    if any(x < 0 for x in v) or not any(v):
        raise InputError(f"vector {text!r} must be nonzero with nonnegative entries")
    return v


def star_monomials(ideal: GeneralBinomialIdeal) -> list[tuple[int, ...]]:
    """Every monomial appearing in some generator, deduplicated."""
    seen = []
    for g in ideal.generators:
        for e in (g.a, g.b):
            if e not in seen:
                seen.append(e)
    return seen


def howald_star(ideal: GeneralBinomialIdeal) -> ExtRational:
    gens = star_monomials(ideal)
    if any(not any(e) for e in gens):
        return INF
    return howald_lct(NewtonPolyhedron(tuple(gens)))


def rays_report(ideal: GeneralBinomialIdeal, threads: Optional[int]) -> RunReport:
    t0 = time.perf_counter()
    table = global_lct(ideal, threads)
    rep = RunReport.from_table(ideal.render(), table)
    rep.timing = time.perf_counter() - t0
    return rep


def resolution_report(ideal: GeneralBinomialIdeal) -> tuple[RunReport, Resolution]:
    t0 = time.perf_counter()
    res = pseudo_resolve(ideal)
    f = LctFunction(ideal.triple())
    rows = [RayRow(v, *_value_star(f.evaluate(v))) for v in sorted(res.fan.vertices)]
    best = min((r.lct for r in rows), default=INF)
    counts = {"vertices": len(res.fan.vertices), "cones": len(res.fan.cones), "blowups": len(res.trace)}
    rep = RunReport(ideal.render(), "resolution", rows, best, [r.ray for r in rows if r.lct == best], counts)
    rep.timing = time.perf_counter() - t0
    return rep, res


def _value_star(b):
    return b.value, b.star


def _emit_report(rep: RunReport, args, table: bool = False, figure: bool = False) -> None:
    if args.json:
        sys.stdout.write(rep.to_json())
        return
    out = sys.stdout
    if figure:
        out.write(render_figure(rep.rows, rep.argmin))
    elif table:
        out.write(render_table(rep.rows, rep.argmin, args.star))
    if table or figure:
        out.write("\n")
    out.write(f"method: {rep.method}\n")
    for k, v in rep.counts.items():
        out.write(f"{k}: {v}\n")
    out.write(f"argmin: {' '.join(fmt_vec(v) for v in rep.argmin)}\n")
    for k, v in rep.checks.items():
        out.write(f"{k}: {ext_str(v)}\n")
    if rep.timing is not None:
        out.write(f"time: {rep.timing:.3f} s\n")
    out.write(f"lct = {ext_str(rep.global_lct)}  ({ext_decimal(rep.global_lct)})\n")


def cmd_compute(args) -> int:
    ideal = load_ideal(args.file)
    if args.method == "resolution":
        rep, _ = resolution_report(ideal)
    else:
        rep = rays_report(ideal, args.threads)
        if args.method == "howald-star":
            rep.method = "howald-star"
            rep.checks["star_min_over_rays"] = min((r.star for r in rep.rows), default=INF)
            rep.global_lct = howald_star(ideal)
            rep.argmin = [r.ray for r in rep.rows if r.star == rep.global_lct]
    _emit_report(rep, args)
    return 0


def cmd_rays(args) -> int:
    ideal = load_ideal(args.file)
    rep = rays_report(ideal, args.threads)
    _emit_report(rep, args, table=True, figure=args.figure)
    return 0


def cmd_eval(args) -> int:
    ideal = load_ideal(args.file)
    v = parse_vector(args.at, ideal.n)
    b = LctFunction(ideal.triple()).evaluate(v)
    if args.json:
        sys.stdout.write(json.dumps(breakdown_dict(b), indent=2) + "\n")
    else:
        sys.stdout.write(render_breakdown(b))
    return 0


def cmd_resolve(args) -> int:
    ideal = load_ideal(args.file)
    rep, res = resolution_report(ideal)
    if args.json:
        record = rep.to_dict()
        record["trace"] = [
            {
                "step": t.step,
                "target": t.target,
                "center": [list(t.center[0]), list(t.center[1])],
                "new_vertex": list(t.new_vertex),
                "before": [t.before.L, t.before.Lp],
                "after": [t.after.L, t.after.Lp],
            }
            for t in res.trace
        ]
        sys.stdout.write(json.dumps(record, indent=2) + "\n")
        return 0
    out = sys.stdout
    out.write("step | target | center | new vertex | (L,Lp) before -> after\n")
    for t in res.trace:
        out.write(
            f"{t.step} | {t.target} | {fmt_vec(t.center[0])} {fmt_vec(t.center[1])} | "
            f"{fmt_vec(t.new_vertex)} | ({t.before.L},{t.before.Lp}) -> ({t.after.L},{t.after.Lp})\n"
        )
    out.write("\n")
    _emit_report(rep, args)
    return 0


def cmd_verify(args) -> int:
    ideal = load_ideal(args.file)
    rep = rays_report(ideal, args.threads)
    rep.method = "verify"
    res = pseudo_resolve(ideal)
    rep.checks["rays"] = rep.global_lct
    rep.checks["resolution"] = lct_via_resolution(ideal, res)
    if ideal.is_monomial:
        rep.checks["howald"] = howald_star(ideal)
    rep.counts["blowups"] = len(res.trace)
    rep.counts["resolution_vertices"] = len(res.fan.vertices)
    agree = len(set(rep.checks.values())) == 1
    _emit_report(rep, args)
    if not args.json:
        per_target = Counter(t.target for t in res.trace)
        sys.stdout.write("blow-ups per target: " + ", ".join(f"{k}={v}" for k, v in per_target.items()) + "\n")
        sys.stdout.write("agree\n" if agree else "DISAGREE\n")
    if not agree:
        sys.stderr.write(
            "oracle disagreement: " + ", ".join(f"{k}={ext_str(v)}" for k, v in rep.checks.items()) + "\n"
        )
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lct", description="Log canonical thresholds of binomial ideals.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, threads=True):
        sp.add_argument("file", help="ideal file ('vars ...' line, then one generator per line)")
        sp.add_argument("--json", action="store_true", help="emit one structured JSON record")
        if threads:
            sp.add_argument("--threads", type=int, default=None, help="worker threads (default: $LCT_THREADS or 1)")

    sp = sub.add_parser("compute", help="global lct")
    common(sp)
    sp.add_argument("--method", choices=["rays", "resolution", "howald-star"], default="rays")
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("rays", help="per-ray table of the lct function")
    common(sp)
    sp.add_argument("--star", action="store_true", help="include the lct* column")
    sp.add_argument("--figure", action="store_true", help="two-column layout, finite lct* rays on the left")
    sp.set_defaults(func=cmd_rays)

    sp = sub.add_parser("eval", help="full breakdown of the lct function at one direction")
    common(sp, threads=False)
    sp.add_argument("--at", required=True, help="direction, e.g. 6,8,10,11")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("resolve", help="pseudo-resolution trace")
    common(sp, threads=False)
    sp.set_defaults(func=cmd_resolve)

    sp = sub.add_parser("verify", help="cross-check the ray, resolution and Howald computations")
    common(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if getattr(args, "threads", None) is not None and args.threads < 1:
        sys.stderr.write("lct: --threads must be positive\n")
        return 2
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"lct: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
