"""Command-line front end.

Every subcommand builds its full report before writing anything, so a
failing run (exit 2) never leaves partial output behind.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import complexes as cx
from . import configs as cf
from . import coxquot as cq
from . import lattice_fan as lf
from . import polysys as ps
from . import ssrange as ss
from .errors import ToricStabError

EXIT_OK, EXIT_NON_MEMBER, EXIT_ERROR = 0, 1, 2


@dataclass
class RunConfig:
    subcommand: str
    inputs: list = field(default_factory=list)
    n: Optional[int] = None
    field: str = "C"
    vector: Optional[tuple] = None
    seed: int = 0
    workers: int = 1
    format: str = "text"
    output: Optional[str] = None


class Report:
    """Ordered key/value report plus optional tables, rendered as text, json or csv."""

    def __init__(self, title: str):
        self.title = title
        self.items: list = []
        self.tables: list = []

    def add(self, key, value):
        self.items.append((key, value))
        return self

    def table(self, name, header, rows):
        self.tables.append((name, list(header), [list(r) for r in rows]))
        return self

    def render(self, fmt: str) -> str:
        if fmt == "json":
            data = {"report": self.title}
            data.update({k: _jsonable(v) for k, v in self.items})
            for name, header, rows in self.tables:
                data[name] = [dict(zip(header, map(_jsonable, r))) for r in rows]
            return json.dumps(data, indent=2, sort_keys=False) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["key", "value"])
            for k, v in self.items:
                w.writerow([k, _flat(v)])
            for name, header, rows in self.tables:
                w.writerow([])
                w.writerow([name] + header)
                for r in rows:
                    w.writerow([""] + [_flat(x) for x in r])
            return buf.getvalue()
        width = max((len(k) for k, _ in self.items), default=0)
        lines = [f"# {self.title}"]
        lines += [f"{k:<{width}}  {_flat(v)}" for k, v in self.items]
        for name, header, rows in self.tables:
            cells = [header] + [[_flat(x) for x in r] for r in rows]
            widths = [max(len(str(row[c])) for row in cells) for c in range(len(header))]
            lines.append("")
            lines.append(f"[{name}]")
            for row in cells:
                lines.append("  ".join(f"{str(x):<{w}}" for x, w in zip(row, widths)).rstrip())
        return "\n".join(lines) + "\n"


def _jsonable(v):
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)


def _flat(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "-"
    if isinstance(v, (list, tuple)):
        return "(" + ", ".join(_flat(x) for x in v) + ")" if v and not isinstance(v[0], (list, tuple)) \
            else "[" + " ".join(_flat(x) for x in v) + "]"
    return str(v)


def _int_vector(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _read_json(path):
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ToricStabError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _fan_and_complex(path):
    fan, changed = lf.load_fan(path)
    return fan, changed, cx.underlying_complex(fan)


def _indices(sets):
    """Index sets as tuples; indices stay 0-based, matching the input files."""
    return [tuple(s) for s in sets]


# --- subcommands ---------------------------------------------------------------

def cmd_analyze(args) -> tuple:
    fan, changed, K = _fan_and_complex(args.fan)
    rep = Report(f"analyze {args.fan}")
    report = lf.validate_fan(fan)
    comp = lf.completeness_report(fan, seed=args.seed)
    relation = lf.find_positive_relation(fan.rays)
    rep.add("rays", len(fan.rays)).add("dim", fan.m)
    rep.add("primitivized", changed)
    rep.add("valid", report.valid)
    for v in report.violations:
        rep.add("violation", str(v))
    rep.add("smooth", lf.is_smooth(fan))
    rep.add("complete", comp.complete)
    for d in comp.diagnostics:
        rep.add("completeness_note", d)
    rep.add("spans_lattice", lf.spans_lattice(fan.rays, fan.m))
    rep.add("positive_relation", relation)
    if relation is not None:
        rep.add("relation_verified", lf.verify_relation(fan.rays, relation))
    mnf = cx.minimal_non_faces(K)
    rep.add("r_min", cx.r_min(K) if mnf else None)
    try:
        rep.add("group_rank", cq.group_rank(fan.rays))
    except ToricStabError:
        rep.add("group_rank", None)
    rep.table("I_min", ["collection", "size"], [(s, len(s)) for s in _indices(mnf)])
    return rep, EXIT_OK


def cmd_member(args) -> tuple:
    fan, _, K = _fan_and_complex(args.fan)
    system = ps.system_from_dict(_read_json(args.system))
    if system.r != fan.r:
        raise ToricStabError(f"system has {system.r} polynomials, fan has {fan.r} rays")
    rep = Report(f"member {args.system}")
    rep.add("field", system.field).add("n", system.n).add("D", system.D)
    wq = ps.q_witness(system, K)
    wp = ps.poly_witness(system, K)
    rep.add("Q_member", wq is None).add("Poly_member", wp is None)
    for label, w in (("Q", wq), ("Poly", wp)):
        if w is not None:
            rep.add(f"{label}_witness_sigma", tuple(w.sigma))
            rep.add(f"{label}_common_factor", ps.P.to_str(w.common))
            rep.add(f"{label}_real_root_intervals", " ".join("(%s, %s]" % iv for iv in w.intervals) or "none")
    member = (wq if args.space == "Q" else wp) is None
    return rep, EXIT_OK if member else EXIT_NON_MEMBER


def _params(fan_path, D, n, field_marker):
    fan, _, K = _fan_and_complex(fan_path)
    if len(D) != fan.r:
        raise ToricStabError(f"D has {len(D)} entries, fan has {fan.r} rays")
    return fan, K, ps.StabilityParams(D, n, cx.r_min(K), field_marker)


def cmd_dims(args) -> tuple:
    fan, K, p = _params(args.fan, args.D, args.n, args.field)
    rep = Report("dims")
    d = ps.stability_dimension(p)
    flags = ps.conditions_flags(p)
    rep.add("field", p.field).add("n", p.n).add("r_min", p.r_min).add("d_min", p.d_min)
    rep.add("stability_dimension", d).add("stability_degenerate", ps.is_degenerate(d))
    if p.field == "C":
        dp = ps.dpoly_dimension(p)
        rep.add("dpoly_dimension", dp).add("dpoly_degenerate", ps.is_degenerate(dp))
    rep.add("connectivity", str(ps.connectivity_bound(p)))
    rep.add("condition_star", flags.star).add("condition_dagger", flags.dagger)
    if p.quotient >= 1:
        oracle = ss.stable_frontier_oracle(p)
        rep.add("frontier_oracle", oracle).add("frontier_agrees", oracle == d)
        m0 = ss.connectivity_oracle(p)
        rep.add("vanishing_line_oracle", m0)
        rep.add("vanishing_line_closed_form", ss.connectivity_closed_form(p))
    return rep, EXIT_OK


def cmd_spectral(args) -> tuple:
    fan, K, p = _params(args.fan, args.D, args.n, args.field)
    grid = ss.E1Grid.build(p, fan.r, args.s_max)
    return grid, EXIT_OK


def cmd_homology(args) -> tuple:
    if args.complex:
        K = cx.complex_from_dict(_read_json(args.complex))
        source = args.complex
    elif args.fan:
        K = cx.underlying_complex(lf.load_fan(args.fan)[0])
        source = args.fan
    else:
        raise ToricStabError("give --fan or --complex")
    n = args.n
    rep = Report(f"homology {source}")
    rep.add("vertices", K.num_vertices)
    rep.add("r_min", cx.r_min(K) if K.min_non_faces else None)
    rows = []
    h = cx.reduced_homology(K)
    rows += [("K", d, rk, list(t)) for d, rk, t in h.entries]
    if n:
        Kn = cx.complex_power(K, n)
        rep.add("n", n).add("r_min_power", cx.r_min(Kn) if Kn.min_non_faces else None)
        ball = args.ball_dim or 2 * n
        z = cx.moment_angle_homology(K, n, ball)
        rep.add("ball_dim", ball)
        rows += [("Z_K", d, rk, list(t)) for d, rk, t in z.entries]
        rep.add("two_connected", z.is_zero_through(2))
    rep.table("I_min", ["collection"], [(s,) for s in _indices(K.min_non_faces)])
    rep.table("homology", ["space", "degree", "rank", "torsion"], rows)
    return rep, EXIT_OK


def cmd_sample(args) -> tuple:
    fan, K, p = _params(args.fan, args.D, args.n, args.field)
    stats = ps.sample_systems(args.D, args.n, args.field, args.box, args.count, args.seed, K, args.workers)
    rep = Report("sample")
    rep.add("seed", args.seed).add("count", stats.total)
    rep.add("Q_members", stats.q_members).add("Poly_members", stats.poly_members)
    rep.add("discriminant_hits", stats.discriminant_hits)
    return rep, EXIT_OK


def cmd_stabilize(args) -> tuple:
    system = cf.divisor_system_from_dict(_read_json(args.divisors))
    a = args.a
    out = cf.stabilize(system, a)
    rep = Report("stabilize")
    rep.add("D", system.D).add("a", a).add("D_plus_a", out.D)
    if args.fan:
        fan, _, K = _fan_and_complex(args.fan)
        rep.add("member_before", cf.divisor_membership(system, K))
        rep.add("member_after", cf.divisor_membership(out, K))
    rep.table("divisors", ["i", "divisor"], [(i, str(d)) for i, d in enumerate(out.divisors)])
    if args.format == "json":
        return _JsonPayload(cf.divisor_system_to_dict(out)), EXIT_OK
    return rep, EXIT_OK


def cmd_cox_check(args) -> tuple:
    fan, _, _ = _fan_and_complex(args.fan)
    rng = random.Random(args.seed)
    vectors = []
    if args.D:
        vectors.append(tuple(args.D))
    relation = lf.find_positive_relation(fan.rays)
    if relation is not None:
        vectors.append(relation)
    vectors += [tuple(rng.randint(1, 20) for _ in fan.rays) for _ in range(args.random)]
    rows = []
    agree = True
    for D in vectors:
        v = cq.cox_criterion(fan.rays, D)
        agree &= v.symbolic == v.sampled
        rows.append((D, v.symbolic, v.sampled))
    rep = Report("cox-check")
    rep.add("positive_relation", relation)
    rep.add("checked", len(vectors)).add("all_agree", agree)
    rep.add("in_group", sum(1 for _, s, _ in rows if s))
    # only the explicit D and the positive relation are listed; random draws are summarized
    rep.table("verdicts", ["D", "symbolic", "sampled"], rows[: len(vectors) - args.random])
    return rep, EXIT_OK


def cmd_eval_check(args) -> tuple:
    fan, _, K = _fan_and_complex(args.fan)
    system = ps.system_from_dict(_read_json(args.system))
    if system.r != fan.r:
        raise ToricStabError(f"system has {system.r} polynomials, fan has {fan.r} rays")
    lo, hi = Fraction(args.lo), Fraction(args.hi)
    pts = [lo + (hi - lo) * Fraction(k, args.grid - 1) for k in range(args.grid)] if args.grid > 1 else [lo]
    failures = [x for x in pts if not cq.in_complement(cq.evaluate_system(system, x), K)]
    member = ps.is_member_Q(system, K)
    rep = Report("eval-check")
    rep.add("Q_member", member).add("grid_points", len(pts)).add("failures", len(failures))
    rep.add("failure_points", [str(x) for x in failures])
    rep.add("consistent", (not failures) if member else True)
    return rep, EXIT_OK if not failures else EXIT_NON_MEMBER


class _JsonPayload:
    def __init__(self, data):
        self.data = data

    def render(self, fmt):
        return json.dumps(self.data, indent=2) + "\n"


def _render(obj, fmt: str) -> str:
    if isinstance(obj, ss.E1Grid):
        return obj.to_csv() if fmt == "csv" else obj.to_text() + "\n" if fmt == "text" else \
            json.dumps({"cells": [[k, s, obj.marker(k, s)] for (k, s) in sorted(obj.cells)]}, indent=2) + "\n"
    return obj.render(fmt)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--output", default=None)

    parser = argparse.ArgumentParser(prog="toricstab", parents=[common],
                                     description="Exact toric/polynomial-system checks.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text, argument_default=argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    def dims_args(p):
        p.add_argument("fan")
        p.add_argument("--D", type=_int_vector, required=True)
        p.add_argument("--n", type=int, default=1)
        p.add_argument("--field", choices=("R", "C"), default="C")

    p = add("analyze", cmd_analyze, "fan invariants")
    p.add_argument("fan")
    p = add("member", cmd_member, "membership of a polynomial system")
    p.add_argument("fan")
    p.add_argument("system")
    p.add_argument("--space", choices=("Q", "Poly"), default="Q")
    p = add("dims", cmd_dims, "stability and connectivity dimensions")
    dims_args(p)
    p = add("spectral", cmd_spectral, "truncated E1 vanishing table")
    dims_args(p)
    p.add_argument("--s-max", dest="s_max", type=int, default=None)
    p = add("homology", cmd_homology, "homology of K and of the moment-angle space")
    p.add_argument("--fan", default=None)
    p.add_argument("--complex", default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--ball-dim", dest="ball_dim", type=int, default=None)
    p = add("sample", cmd_sample, "Monte-Carlo membership statistics")
    dims_args(p)
    p.add_argument("--box", type=int, default=5)
    p.add_argument("--count", type=int, default=100)
    p = add("stabilize", cmd_stabilize, "apply a stabilization map to a divisor system")
    p.add_argument("divisors")
    p.add_argument("--a", type=_int_vector, required=True)
    p.add_argument("--fan", default=None)
    p = add("cox-check", cmd_cox_check, "Cox degree criterion, symbolic vs sampled")
    p.add_argument("fan")
    p.add_argument("--D", type=_int_vector, default=None)
    p.add_argument("--random", type=int, default=200)
    p = add("eval-check", cmd_eval_check, "evaluate a system on a rational grid")
    p.add_argument("fan")
    p.add_argument("system")
    p.add_argument("--grid", type=int, default=200)
    p.add_argument("--lo", default="-10")
    p.add_argument("--hi", default="10")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    if args.workers < 1:
        print("error: --workers must be >= 1", file=sys.stderr)
        return EXIT_ERROR
    try:
        result, code = args.func(args)
        text = _render(result, args.format)
    except (ToricStabError, OSError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
