"""Acceptance suite: one test per criterion, each recorded for the summary
printed at the end of the run."""
import json
import random
import time

import numpy as np

from oracles import grid_scan
from pwcycles import registry
from pwcycles.cli import check_appendix, main
from pwcycles.crossing import build_crossing_polys, count_report, solve_crossing
from pwcycles.families import (
    PiecewiseSystem,
    SaddleFamily,
    hamiltonian_residual,
    random_system,
)
from pwcycles.orbits import emit_polyline, polylines_intersect, verify_cycle

# published crossing points, kept apart from the registry on purpose
PUBLISHED = {
    "N1": [(0.387552, 2.38307), (1.13899, 3.06322), (6.15242, 9.65856), (14.4234, 20.9765)],
    "N2": [(0.355545, 0.286309), (0.525244, 0.451964), (1.36335, 1.28996), (1.89636, 1.82657)],
    "N31": [(0.190098, 0.482586), (0.325214, 0.700087), (0.439849, 0.86669), (4.94215, 6.23885)],
    "N32": [(1.60038, 0.971298), (1.72908, 1.12275), (3.35256, 3.01931), (22.0218, 24.7284)],
    "N41": [(2.02448, 0.845234), (2.35986, 1.22555), (2.70908, 1.62987), (10.1815, 10.6126)],
    "N42": [(2.55713, 0.821581), (2.72657, 1.05173), (3.4514, 2.00246), (4.00261, 2.70789)],
    "N51": [(0.135002, 0.072169), (0.385675, 0.278707), (1.17787, 1.03194), (2.14886, 1.98091)],
    "N52": [(0.52839, 1.10766), (1.00057, 1.47942), (1.72915, 2.02288), (7.95553, 6.47249)],
    "N61": [(2.11393, 0.946661), (2.57797, 1.3437), (3.8652, 2.44633), (11.5231, 9.01165)],
    "N62": [(0.765476, 0.0111834), (1.07893, 0.202174), (1.84751, 0.985982), (3.25582, 2.97642)],
}


def _solutions(sys_):
    return solve_crossing(build_crossing_polys(sys_))


def test_criterion_1_reproduction(tmp_path, capsys, record):
    out = tmp_path / "reproduce.json"
    t0 = time.perf_counter()
    code = main(["reproduce", "--all", "--out", str(out)])
    elapsed = time.perf_counter() - t0
    capsys.readouterr()
    # compare against the published table directly, not against the report
    worst, counts = 0.0, {}
    for eid, pairs in PUBLISHED.items():
        got = [(s.x, s.y) for s in _solutions(registry.load(eid))]
        counts[eid] = len(got)
        if len(got) == len(pairs):
            worst = max([worst] + [max(abs(a - c), abs(b - d)) for (a, b), (c, d) in zip(got, pairs)])
    summary = json.loads(out.read_text())["summary"]
    ok = (code == 0 and all(n == 4 for n in counts.values()) and worst <= 1e-4
          and summary["pairs_matched"] == 40 and elapsed < 60)
    record(1, "reproduction of the ten published examples", ok,
           f"exit {code}, 40 pairs, max dev {worst:.2e}, {elapsed:.1f} s")
    assert code == 0
    assert all(n == 4 for n in counts.values()), counts
    assert worst <= 1e-4
    assert elapsed < 60


def test_criterion_2_bounds(record):
    worst_count = worst_degree = 0
    systems = [registry.load(e) for e in registry.ids()]
    for fam in SaddleFamily:
        rng = random.Random(f"bounds:{fam.value}")
        systems += [random_system(fam, rng) for _ in range(50)]
    for sys_ in systems:
        rep = count_report(build_crossing_polys(sys_))
        worst_count = max(worst_count, rep["admissible_count"])
        worst_degree = max(worst_degree, rep["resultant_degree"])
    ok = worst_count <= 7 and worst_degree <= 8
    record(2, "at most seven admissible solutions, eliminant degree at most 8", ok,
           f"{len(systems)} systems, max count {worst_count}, max degree {worst_degree}")
    assert ok


def test_criterion_3_closed_forms(record):
    reports = [check_appendix(fam, seed=0, draws=100, points=25) for fam in SaddleFamily]
    worst = max(r["max_deviation"] for r in reports)
    ok = all(r["passed"] for r in reports)
    record(3, "closed-form crossing polynomials agree with generated ones", ok,
           f"10 families x 100 draws x 25 points, max rel dev {worst:.2e}")
    assert ok


def test_criterion_4_hamiltonian_guard(record):
    rng = np.random.default_rng(2024)
    worst, pairs = 0.0, 0
    for eid in registry.ids():
        e = registry.get(eid)
        sys_ = PiecewiseSystem.explicit(e.center_field, e.center_H, e.saddle_field, e.saddle_H,
                                        check=False)
        for H, F in ((sys_.center_H, sys_.center_field), (sys_.saddle_H, sys_.saddle_field)):
            worst = max(worst, hamiltonian_residual(H, F, rng.uniform(-2, 2, size=(100, 2))))
            pairs += 1
    for fam in SaddleFamily:
        prng = random.Random(f"guard:{fam.value}")
        for _ in range(100):
            sys_ = random_system(fam, prng)
            for H, F in ((sys_.center_H, sys_.center_field), (sys_.saddle_H, sys_.saddle_field)):
                worst = max(worst, hamiltonian_residual(H, F, rng.uniform(-2, 2, size=(100, 2))))
    ok = pairs == 20 and worst <= 1e-10
    record(4, "vector fields conserve their first integrals", ok,
           f"20 registry pairs + 1000 random systems, max residual {worst:.2e}")
    assert ok


def test_criterion_5_geometric_verification(record):
    verified = total = 0
    worst_closure = worst_drift = worst_pen = 0.0
    nested = True
    for eid in registry.ids():
        sys_ = registry.load(eid)
        checks = [verify_cycle(sys_, s) for s in _solutions(sys_)]
        total += len(checks)
        for v in checks:
            verified += v.verified
            if v.saddle_arc and v.center_arc:
                worst_closure = max(worst_closure, v.closure_residual)
                for arc in (v.saddle_arc, v.center_arc):
                    worst_drift = max(worst_drift, arc.h_drift)
                    worst_pen = max(worst_pen, arc.region_violation)
        polys = [emit_polyline(v) for v in checks if v.verified]
        nested &= all(not polylines_intersect(polys[i], polys[j])
                      for i in range(len(polys)) for j in range(i))
    ok = (total == verified == 40 and worst_closure <= 1e-5 and worst_drift <= 1e-9
          and worst_pen <= 1e-7 and nested)
    record(5, "all published solutions verify as nested crossing cycles", ok,
           f"{verified}/{total} verified, closure {worst_closure:.1e}, drift {worst_drift:.1e}, "
           f"penetration {worst_pen:.1e}, nested {nested}")
    assert ok


def test_criterion_6_grid_oracle(record):
    worst, mismatched = 0.0, []
    for eid in registry.ids():
        e = registry.get(eid)
        got = sorted((s.x, s.y) for s in _solutions(registry.load(eid)))
        scan = grid_scan(e.center_H, e.saddle_H, step=1e-2, upper=50.0)
        if len(scan) != len([p for p in got if p[0] <= 50 and p[1] <= 50]):
            mismatched.append(eid)
            continue
        worst = max([worst] + [max(abs(a - c), abs(b - d)) for (a, b), (c, d) in zip(got, scan)])
    ok = not mismatched and worst <= 1e-6
    record(6, "dense grid scan finds the same solutions", ok,
           f"count mismatches {mismatched or 'none'}, max dev {worst:.1e}")
    assert ok


def test_criterion_7_origin_and_positivity(record):
    systems = [registry.load(e) for e in registry.ids()]
    for fam in SaddleFamily:
        rng = random.Random(f"positivity:{fam.value}")
        systems += [random_system(fam, rng) for _ in range(20)]
    reported = [s for sys_ in systems for s in _solutions(sys_)]
    ok = all(s.x > 0 and s.y > 0 for s in reported)
    record(7, "origin never reported, all solutions strictly positive", ok,
           f"{len(reported)} solutions from {len(systems)} systems")
    assert ok
