"""Run reports and their JSON form.

Exact values are serialized as strings ("13/9", "inf"); the global value
also as {"num", "den"} with den == 0 meaning +infinity. Wall-clock timing
is kept out of the JSON so that records are reproducible byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .gamma_fan import RayTable
from .lct_eval import LctBreakdown
from .linalg import INF, ExtRational, IntVector, ext_decimal, ext_parse, ext_str

SCHEMA_VERSION = 1
METHODS = ("rays", "resolution", "howald-star")


@dataclass(frozen=True)
class RayRow:
    ray: IntVector
    lct: ExtRational
    star: ExtRational


@dataclass
class RunReport:
    ideal: str
    method: str
    rows: list[RayRow]
    global_lct: ExtRational
    argmin: list[IntVector]
    counts: dict[str, int]
    checks: dict[str, ExtRational] = field(default_factory=dict)
    timing: Optional[float] = field(default=None, compare=False)

    @classmethod
    def from_table(cls, ideal_text: str, table: RayTable) -> "RunReport":
        rows = [RayRow(r, b.value, b.star) for r, b in zip(table.rays, table.breakdowns)]
        counts = {"A_rows": len(table.hyperplanes.rows), "subsets": table.subsets, "rays": len(table.rays)}
        return cls(ideal_text, "rays", rows, table.global_lct, list(table.argmin), counts)

    def to_dict(self) -> dict:
        return {
            "version": SCHEMA_VERSION,
            "ideal": self.ideal,
            "method": self.method,
            "rows": [{"ray": list(r.ray), "lct": ext_str(r.lct), "lct_star": ext_str(r.star)} for r in self.rows],
            "global": _num_den(self.global_lct),
            "argmin": [list(v) for v in self.argmin],
            "counts": dict(self.counts),
            "checks": {k: ext_str(v) for k, v in self.checks.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "RunReport":
        if d.get("version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report version {d.get('version')!r}")
        g = d["global"]
        return cls(
            ideal=d["ideal"],
            method=d["method"],
            rows=[RayRow(tuple(r["ray"]), ext_parse(r["lct"]), ext_parse(r["lct_star"])) for r in d["rows"]],
            global_lct=INF if g["den"] == 0 else Fraction(g["num"], g["den"]),
            argmin=[tuple(v) for v in d["argmin"]],
            counts=dict(d["counts"]),
            checks={k: ext_parse(v) for k, v in d.get("checks", {}).items()},
        )

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls.from_dict(json.loads(text))


def _num_den(x: ExtRational) -> dict:
    if x is INF:
        return {"num": 1, "den": 0}
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def breakdown_dict(b: LctBreakdown) -> dict:
    return {
        "v": list(b.v),
        "alpha": list(b.alpha),
        "beta": list(b.beta),
        "epsilon": list(b.epsilon),
        "r0": b.r0,
        "n_seq": list(b.n_seq),
        "s0": b.s0,
        "s_rank": b.s_rank,
        "tilde_s": ext_str(b.tilde_s),
        "s_v": b.s_v,
        "candidates": [ext_str(c) for c in b.candidates],
        "value": ext_str(b.value),
        "star": ext_str(b.star),
    }


def fmt_vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def render_breakdown(b: LctBreakdown) -> str:
    lines = [
        f"v          = {fmt_vec(b.v)}",
        f"|v|        = {sum(b.v)}",
        f"alpha      = {fmt_vec(b.alpha)}",
        f"beta       = {fmt_vec(b.beta)}",
        f"epsilon    = {fmt_vec(b.epsilon)}",
        f"r0         = {b.r0}",
        f"n sequence = {fmt_vec(b.n_seq)}  (s0 = {b.s0})",
        f"rank M     = {b.s_rank}",
        f"tilde s    = {ext_str(b.tilde_s)}",
        f"s_v        = {b.s_v}",
        "candidates = " + ", ".join(ext_str(c) for c in b.candidates),
        f"value      = {ext_str(b.value)}  ({ext_decimal(b.value)})",
        f"star       = {ext_str(b.star)}  ({ext_decimal(b.star)})",
    ]
    return "\n".join(lines) + "\n"


def render_table(rows: list[RayRow], argmin: list[IntVector], star: bool) -> str:
    best = set(argmin)
    header = ["ray", "lct", "approx", "lct*", "approx"] if star else ["ray", "lct", "approx"]
    body = []
    for r in rows:
        mark = "*" if r.ray in best else " "
        cells = [mark + fmt_vec(r.ray), ext_str(r.lct), ext_decimal(r.lct)]
        if star:
            cells += [ext_str(r.star), ext_decimal(r.star)]
        body.append(cells)
    return _grid([header] + body)


def render_figure(rows: list[RayRow], argmin: list[IntVector]) -> str:
    """Two side-by-side tables: rays with finite lct* on the left, infinite on the right."""
    finite = sorted((r for r in rows if r.star is not INF), key=lambda r: (r.lct, r.ray))
    infinite = sorted((r for r in rows if r.star is INF), key=lambda r: tuple(-x for x in r.ray))
    left = render_table(finite, argmin, True).splitlines()
    right = render_table(infinite, argmin, True).splitlines()
    width = max((len(x) for x in left), default=0)
    out = []
    for k in range(max(len(left), len(right))):
        a = left[k] if k < len(left) else ""
        b = right[k] if k < len(right) else ""
        out.append(f"{a:<{width}}   {b}".rstrip())
    return "\n".join(out) + "\n"


def _grid(rows: list[list[str]]) -> str:
    widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    lines = []
    for i, r in enumerate(rows):
        cells = [c.rjust(w) if k else c.ljust(w) for k, (c, w) in enumerate(zip(r, widths))]
        lines.append(" | ".join(cells).rstrip())
        if i == 0:
            lines.append("-+-".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"
