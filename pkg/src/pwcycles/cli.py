"""Command line: solve, verify, check-appendix, reproduce, render.

Configuration is JSON (schema 1) in one of three shapes::

    {"schema": 1, "example": "N1"}
    {"schema": 1, "center": {"A": "-1/5", "B": "3/5", "C": 0, "omega": "7/10"},
     "saddle": {"family": "N32", "params": {"a": "-4/5", "b": "-3/5"},
                "affine": {"a1": 1, "b1": 0, "c1": 0, "alpha1": 0, "beta1": 1, "gamma1": 0}}}
    {"schema": 1, "explicit": {"center_field": ["...", "..."], "center_H": "...",
                               "saddle_field": ["...", "..."], "saddle_H": "..."}}

Optional keys: ``tolerances`` ({"crossing", "integration", "closure"}) and
``search_box`` ([y_lo, y_hi]).  Numbers may be JSON numbers, decimal strings or
exact fractions ``"p/q"``.

Exit codes: 0 success, 2 configuration error, 3 solver degeneracy,
4 reproduction mismatch, 5 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import registry
from .crossing import (
    appendix_P,
    axis_difference,
    build_crossing_polys,
    count_report,
    find_boundary_solutions,
    solve_crossing,
)
from .errors import ConfigError, PWCyclesError
from .families import (
    AffineMap,
    LinearCenterParams,
    PiecewiseSystem,
    SaddleFamily,
    SaddleParams,
    random_affine,
    random_params,
    saddle_first_integral,
)
from .orbits import emit_polyline, polylines_intersect, verify_cycle
from .polycore import BiPoly
from .render import render_svg

CSV_COLUMNS = ("k", "x", "y", "residual_PL", "residual_Pi", "jacobian_det", "simple",
               "verified", "closure_residual")
PUBLISHED_TOL = 1e-4
EXIT_MISMATCH = 4
EXIT_UNVERIFIED = 5


@dataclass
class RunConfig:
    source: str
    system: PiecewiseSystem
    example: str | None = None
    crossing_tol: float = 1e-9
    integration_tol: float = 1e-12
    closure_tol: float = 1e-5
    search_box: tuple[float, float] | None = None
    out: str | None = None
    fmt: str = "csv"
    svg: str | None = None
    zoom: bool = False
    raw: dict = field(default_factory=dict, repr=False)


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------

def _number(value, where: str) -> Fraction:
    if isinstance(value, bool):
        raise ConfigError(f"{where}: expected a number, got a boolean")
    try:
        if isinstance(value, float):
            return Fraction(repr(value))
        if isinstance(value, (int, str)):
            return Fraction(value.strip() if isinstance(value, str) else value)
    except (ValueError, ZeroDivisionError):
        pass
    raise ConfigError(f"{where}: cannot read {value!r} as a number")


def _positive(value, where: str) -> float:
    v = float(_number(value, where))
    if not v > 0:
        raise ConfigError(f"{where}: must be > 0")
    return v


def _section(obj, name: str, allowed: set[str]) -> dict:
    if not isinstance(obj, dict):
        raise ConfigError(f"{name}: expected an object")
    unknown = sorted(set(obj) - allowed)
    if unknown:
        raise ConfigError(f"{name}: unknown field(s) {', '.join(unknown)}")
    return obj


def _numbers(obj: dict, name: str) -> dict:
    return {k: _number(v, f"{name}.{k}") for k, v in obj.items()}


def parse_config(data: dict) -> RunConfig:
    """Validate a schema-1 mapping and build the system it describes."""
    top = _section(data, "config", {"schema", "example", "center", "saddle", "explicit",
                                    "tolerances", "search_box"})
    if top.get("schema") != 1:
        raise ConfigError("schema: expected 1")
    modes = [k for k in ("example", "saddle", "explicit") if k in top]
    if len(modes) != 1:
        raise ConfigError("config: give exactly one of example, center+saddle, explicit")
    mode = modes[0]

    example = None
    if mode == "example":
        example = registry.get(top["example"]).id
        system = registry.load(example)
        source = "registry"
    elif mode == "saddle":
        if "center" not in top:
            raise ConfigError("center: required with saddle")
        c = _numbers(_section(top["center"], "center",
                              {"A", "B", "C", "omega", "sign", "time_scale"}), "center")
        center = LinearCenterParams(**c)
        s = _section(top["saddle"], "saddle", {"family", "params", "affine"})
        if "family" not in s:
            raise ConfigError("saddle.family: required")
        fam = SaddleFamily.parse(s["family"])
        params = SaddleParams(**_numbers(_section(s.get("params", {}), "saddle.params",
                                                  {"a", "b", "c", "mu"}), "saddle.params"))
        affine = AffineMap(**_numbers(_section(s.get("affine", {}), "saddle.affine",
                                               {"a1", "b1", "c1", "alpha1", "beta1", "gamma1"}),
                                      "saddle.affine"))
        system = PiecewiseSystem.generated(center, fam, params, affine, name=f"generated-{fam.value}")
        source = "generated"
    else:
        e = _section(top["explicit"], "explicit",
                     {"center_field", "center_H", "saddle_field", "saddle_H", "family"})
        for key in ("center_field", "center_H", "saddle_field", "saddle_H"):
            if key not in e:
                raise ConfigError(f"explicit.{key}: required")
        for key in ("center_field", "saddle_field"):
            if not (isinstance(e[key], list) and len(e[key]) == 2):
                raise ConfigError(f"explicit.{key}: expected a list of two expressions")
        try:
            system = PiecewiseSystem.explicit(e["center_field"], e["center_H"], e["saddle_field"],
                                              e["saddle_H"], family=e.get("family"), name="explicit")
        except PWCyclesError as exc:
            if isinstance(exc, ConfigError) or exc.exit_code == 2:
                raise
            raise ConfigError(f"explicit: {exc}") from exc
        source = "explicit"

    tol = _section(top.get("tolerances", {}), "tolerances", {"crossing", "integration", "closure"})
    cfg = RunConfig(source=source, system=system, example=example, raw=data)
    if "crossing" in tol:
        cfg.crossing_tol = _positive(tol["crossing"], "tolerances.crossing")
    if "integration" in tol:
        cfg.integration_tol = _positive(tol["integration"], "tolerances.integration")
    if "closure" in tol:
        cfg.closure_tol = _positive(tol["closure"], "tolerances.closure")
    if "search_box" in top:
        box = top["search_box"]
        if not (isinstance(box, list) and len(box) == 2):
            raise ConfigError("search_box: expected [y_lo, y_hi]")
        lo, hi = (float(_number(v, "search_box")) for v in box)
        if not (0 <= lo < hi):
            raise ConfigError("search_box: bounds must satisfy 0 <= y_lo < y_hi")
        cfg.search_box = (lo, hi)
    return cfg


def load_config(path) -> RunConfig:
    p = Path(path)
    if not p.is_file():
        raise ConfigError(f"config file not found: {path}")
    try:
        data = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from None
    return parse_config(data)


# ---------------------------------------------------------------------------
# core runs (pure, return plain data)
# ---------------------------------------------------------------------------

def _solution_row(k: int, s, v=None) -> dict:
    return {
        "k": k, "x": s.x, "y": s.y,
        "residual_PL": s.residual_PL, "residual_Pi": s.residual_Pi,
        "jacobian_det": s.jacobian_det, "simple": s.simple,
        "verified": None if v is None else v.verified,
        "closure_residual": None if v is None else v.closure_residual,
    }


def run_solve(cfg: RunConfig) -> dict:
    cp = build_crossing_polys(cfg.system)
    sols = solve_crossing(cp, cfg.crossing_tol, cfg.search_box)
    return {
        "system": cfg.example or cfg.system.name,
        "count_report": count_report(cp, cfg.crossing_tol, sols),
        "boundary": [list(p) for p in find_boundary_solutions(cp)],
        "rows": [_solution_row(k, s) for k, s in enumerate(sols, 1)],
        "solutions": sols,
    }


def run_verify(cfg: RunConfig) -> dict:
    res = run_solve(cfg)
    checks = [verify_cycle(cfg.system, s, tol=cfg.integration_tol, closure_tol=cfg.closure_tol)
              for s in res["solutions"]]
    rows = []
    for k, (s, v) in enumerate(zip(res["solutions"], checks), 1):
        row = _solution_row(k, s, v)
        row["h_drift_saddle"] = v.saddle_arc.h_drift if v.saddle_arc else None
        row["h_drift_center"] = v.center_arc.h_drift if v.center_arc else None
        row["coherent"] = v.coherent
        row["diagnostic"] = v.diagnostic
        rows.append(row)
    polys = [emit_polyline(v) for v in checks if v.verified]
    nested = all(not polylines_intersect(polys[i], polys[j])
                 for i in range(len(polys)) for j in range(i))
    res.update(rows=rows, checks=checks, polylines=polys, nested=nested)
    return res


def reproduce_one(example_id: str) -> dict:
    t0 = time.perf_counter()
    entry = registry.get(example_id)
    cfg = RunConfig(source="registry", system=registry.load(entry.id), example=entry.id)
    res = run_verify(cfg)
    sols = res["solutions"]
    devs = []
    if len(sols) == len(entry.expected):
        devs = [max(abs(s.x - ex), abs(s.y - ey)) for s, (ex, ey) in zip(sols, entry.expected)]
    report = res["count_report"]
    verified = sum(1 for v in res["checks"] if v.verified)
    matched = sum(1 for d in devs if d <= PUBLISHED_TOL)
    return {
        "id": entry.id,
        "admissible_count": report["admissible_count"],
        "expected_count": len(entry.expected),
        "resultant_degree": report["resultant_degree"],
        "bound_ok": report["admissible_count"] <= 7 and report["resultant_degree"] <= 8,
        "max_deviation": max(devs) if devs else None,
        "pairs_matched": matched,
        "verified": verified,
        "nested": res["nested"],
        "match": len(sols) == len(entry.expected) and matched == len(entry.expected),
        "runtime_s": time.perf_counter() - t0,
    }


def check_appendix(family, seed: int = 0, draws: int = 100, points: int = 25) -> dict:
    """Generated crossing polynomial vs. the closed form at random points."""
    fam = SaddleFamily.parse(family)
    rng = random.Random(f"{seed}:{fam.value}")
    worst = 0.0
    literal_worst = 0.0
    for _ in range(draws):
        params = random_params(fam, rng)
        affine = AffineMap.identity() if fam is SaddleFamily.N1 else random_affine(rng)
        gen = axis_difference(saddle_first_integral(fam, params, affine))
        ref = appendix_P(fam, params, affine)
        lit = appendix_P(fam, params, affine, literal=True) if fam is SaddleFamily.N1 else ref
        gf, rf, lf = gen.to_float_function(), ref.to_float_function(), lit.to_float_function()
        for _ in range(points):
            x, y = rng.uniform(-2, 2), rng.uniform(-2, 2)
            g = gf(x, y)
            worst = max(worst, abs(g - rf(x, y)) / (1 + max(abs(g), abs(rf(x, y)))))
            literal_worst = max(literal_worst, abs(g - lf(x, y)) / (1 + max(abs(g), abs(lf(x, y)))))
    out = {"family": fam.value, "draws": draws, "points": points, "max_deviation": worst,
           "passed": worst <= 1e-9}
    if fam is SaddleFamily.N1:
        out["note"] = ("identity affine map only; compared with the x**2 coefficient a**2/(2b). "
                       "The closed form printed with a/(2b) deviates by up to "
                       f"{literal_worst:.3g}")
        out["literal_max_deviation"] = literal_worst
    return out


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------

def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow([_cell(r.get(c)) for c in CSV_COLUMNS])
    return buf.getvalue()


def _json_safe(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    if isinstance(v, dict):
        return {k: _json_safe(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_json_safe(x) for x in v]
    return v


def dumps(obj) -> str:
    return json.dumps(_json_safe(obj), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _table(res: dict, fmt: str) -> str:
    if fmt == "json":
        return dumps({"system": res["system"], "count_report": res["count_report"],
                      "boundary": res["boundary"], "rows": res["rows"]})
    return rows_to_csv(res["rows"])


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _config_from_args(args) -> RunConfig:
    if args.config and args.example:
        raise ConfigError("give either --config or --example, not both")
    if args.config:
        cfg = load_config(args.config)
    elif args.example:
        cfg = parse_config({"schema": 1, "example": args.example})
    else:
        raise ConfigError("a system is required: --config PATH or --example ID")
    if getattr(args, "tol", None) is not None:
        if not args.tol > 0:
            raise ConfigError("--tol must be > 0")
        cfg.crossing_tol = args.tol
    cfg.out = getattr(args, "out", None)
    cfg.fmt = getattr(args, "format", "csv") or "csv"
    cfg.svg = getattr(args, "svg", None)
    cfg.zoom = bool(getattr(args, "zoom", False))
    return cfg


def cmd_solve(args) -> int:
    cfg = _config_from_args(args)
    _emit(_table(run_solve(cfg), cfg.fmt), cfg.out)
    return 0


def _write_svg(res: dict, cfg: RunConfig, path: str | None) -> None:
    if path and res["polylines"]:
        Path(path).write_text(render_svg(res["polylines"], title=res["system"], zoom=cfg.zoom),
                              encoding="utf-8")


def cmd_verify(args) -> int:
    cfg = _config_from_args(args)
    res = run_verify(cfg)
    if cfg.fmt == "json":
        text = dumps({"system": res["system"], "count_report": res["count_report"],
                      "boundary": res["boundary"], "nested": res["nested"], "rows": res["rows"]})
    else:
        text = rows_to_csv(res["rows"])
    _emit(text, cfg.out)
    _write_svg(res, cfg, cfg.svg)
    for row in res["rows"]:
        if not row["verified"]:
            print(f"cycle {row['k']} not verified: {row['diagnostic']}", file=sys.stderr)
    return 0 if all(r["verified"] for r in res["rows"]) else EXIT_UNVERIFIED


def cmd_render(args) -> int:
    cfg = _config_from_args(args)
    target = cfg.svg or cfg.out
    if not target:
        raise ConfigError("render needs --svg PATH (or --out PATH)")
    res = run_verify(cfg)
    if not res["polylines"]:
        print("no verified cycles; nothing rendered", file=sys.stderr)
        return 0 if not res["rows"] else EXIT_UNVERIFIED
    _write_svg(res, cfg, target)
    return 0 if all(r["verified"] for r in res["rows"]) else EXIT_UNVERIFIED


def cmd_check_appendix(args) -> int:
    families = [SaddleFamily.parse(args.family)] if args.family else list(SaddleFamily)
    if args.draws < 1:
        raise ConfigError("--draws must be >= 1")
    reports = [check_appendix(f, args.seed, args.draws) for f in families]
    if args.format == "json" or args.out:
        _emit(dumps({"seed": args.seed, "reports": reports}), args.out)
    for r in reports:
        status = "PASS" if r["passed"] else "FAIL"
        line = f"{status} {r['family']:>4}  draws={r['draws']}  max_rel_dev={r['max_deviation']:.3e}"
        if "note" in r:
            line += f"  ({r['note']})"
        print(line, file=sys.stderr if args.format == "json" and not args.out else sys.stdout)
    return 0 if all(r["passed"] for r in reports) else EXIT_MISMATCH


def cmd_reproduce(args) -> int:
    if args.all == bool(args.example):
        raise ConfigError("reproduce needs exactly one of --all or --example ID")
    ids = registry.ids() if args.all else [registry.get(args.example).id]
    if args.jobs > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(reproduce_one, ids))
    else:
        rows = [reproduce_one(i) for i in ids]
    stable = [{k: v for k, v in r.items() if k != "runtime_s"} for r in rows]
    summary = {
        "examples": len(rows),
        "examples_matched": sum(r["match"] for r in rows),
        "pairs_matched": sum(r["pairs_matched"] for r in rows),
        "pairs_expected": sum(r["expected_count"] for r in rows),
        "cycles_verified": sum(r["verified"] for r in rows),
        "bound_ok": all(r["bound_ok"] for r in rows),
    }
    if args.out:
        _emit(dumps({"summary": summary, "examples": stable}), args.out)
    human = sys.stderr if args.format == "json" and not args.out else sys.stdout
    if args.format == "json" and not args.out:
        _emit(dumps({"summary": summary, "examples": stable}), None)
    print(f"{'id':>4} {'count':>5} {'deg':>3} {'<=7':>4} {'max dev':>10} {'verified':>8} {'nested':>6} {'time s':>7}",
          file=human)
    for r in rows:
        dev = "-" if r["max_deviation"] is None else f"{r['max_deviation']:.2e}"
        print(f"{r['id']:>4} {r['admissible_count']:>5} {r['resultant_degree']:>3} "
              f"{'yes' if r['bound_ok'] else 'NO':>4} {dev:>10} "
              f"{r['verified']:>5}/{r['admissible_count']:<2} {'yes' if r['nested'] else 'NO':>6} "
              f"{r['runtime_s']:>7.2f}", file=human)
    print(f"examples {summary['examples_matched']}/{summary['examples']}, pairs "
          f"{summary['pairs_matched']}/{summary['pairs_expected']}, cycles verified "
          f"{summary['cycles_verified']}/{summary['pairs_expected']}, total "
          f"{sum(r['runtime_s'] for r in rows):.2f} s", file=human)
    if not (summary["bound_ok"] and summary["examples_matched"] == summary["examples"]):
        return EXIT_MISMATCH
    if summary["cycles_verified"] != summary["pairs_expected"] or not all(r["nested"] for r in rows):
        return EXIT_UNVERIFIED
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pwcycles", description=__doc__.split("\n")[0],
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def system_args(p):
        p.add_argument("--config", metavar="PATH", help="JSON config (schema 1)")
        p.add_argument("--example", metavar="ID", help="registry example, e.g. N1")
        p.add_argument("--tol", type=float, help="crossing tolerance (default 1e-9)")
        p.add_argument("--out", metavar="PATH", help="write the table here instead of stdout")
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("solve", help="solve the crossing system")
    system_args(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="solve and certify each solution by integration")
    system_args(p)
    p.add_argument("--svg", metavar="PATH", help="write the verified cycles as SVG")
    p.add_argument("--zoom", action="store_true", help="add a panel zoomed on the origin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="write the verified cycles as SVG")
    system_args(p)
    p.add_argument("--svg", metavar="PATH")
    p.add_argument("--zoom", action="store_true")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("check-appendix", help="closed-form crossing polynomials vs generated ones")
    p.add_argument("--family", help="one family tag (default: all ten)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--draws", type=int, default=100)
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_check_appendix)

    p = sub.add_parser("reproduce", help="reproduce the published examples")
    p.add_argument("--all", action="store_true")
    p.add_argument("--example", metavar="ID")
    p.add_argument("--out", metavar="PATH", help="machine-readable JSON report")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PWCyclesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
