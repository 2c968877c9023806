import math

import numpy as np
import pytest
from shapely.geometry import Point as SPoint
from shapely.geometry import Polygon

from pwcycles import registry
from pwcycles.crossing import CrossingSolution, build_crossing_polys, solve_crossing
from pwcycles.errors import (
    DegenerateCorner,
    EquilibriumEncountered,
    IntegrationError,
    NonTransversalCrossing,
    NoReturnToSigma,
)
from pwcycles.orbits import (
    Orientation,
    Region,
    emit_polyline,
    integrate_to_axis,
    inward_orientation,
    polylines_intersect,
    verify_cycle,
)
from pwcycles.polycore import parse_bipoly

CIRCLE_FIELD = (parse_bipoly("2*y"), parse_bipoly("-2*x"))
CIRCLE_H = parse_bipoly("x^2 + y^2")


def source_eval(expr: str):
    code = compile(expr.replace("^", "**"), "<H>", "eval")
    return lambda x, y: float(eval(code, {"__builtins__": {}}, {"x": x, "y": y}))


def cycles(eid):
    sys_ = registry.load(eid)
    sols = solve_crossing(build_crossing_polys(sys_))
    return sys_, [verify_cycle(sys_, s) for s in sols]


@pytest.fixture(scope="module")
def n1():
    return cycles("N1")


def test_circle_arc_through_lower_region():
    arc = integrate_to_axis(CIRCLE_FIELD, CIRCLE_H, (1.0, 0.0), "SigmaMinus", "forward")
    assert arc.terminal_axis == "positive-y-axis"
    assert arc.end == pytest.approx((0.0, 1.0), abs=1e-10)
    assert arc.h_drift <= 1e-10
    assert arc.region_violation <= 1e-12
    # three quarters of a turn at angular speed 2
    assert arc.duration == pytest.approx(3 * math.pi / 4, abs=1e-9)


def test_inward_orientation_picks_region():
    assert inward_orientation(CIRCLE_FIELD, (1.0, 0.0), Region.SigmaMinus) is Orientation.forward
    assert inward_orientation(CIRCLE_FIELD, (1.0, 0.0), Region.SigmaPlus) is Orientation.backward
    arc = integrate_to_axis(CIRCLE_FIELD, CIRCLE_H, (1.0, 0.0), "SigmaPlus", "backward")
    assert arc.end == pytest.approx((0.0, 1.0), abs=1e-10)
    assert arc.duration == pytest.approx(math.pi / 4, abs=1e-9)


def test_outward_start_is_rejected():
    with pytest.raises(IntegrationError, match="other orientation"):
        integrate_to_axis(CIRCLE_FIELD, CIRCLE_H, (1.0, 0.0), "SigmaPlus", "forward")


def test_equilibrium_start():
    field = (parse_bipoly("y"), parse_bipoly("x - 1"))
    with pytest.raises(EquilibriumEncountered):
        integrate_to_axis(field, parse_bipoly("y^2/2 - x^2/2 + x"), (1.0, 0.0), "SigmaPlus", "forward")


def test_tangent_start():
    field = (parse_bipoly("1"), parse_bipoly("y"))
    with pytest.raises(NonTransversalCrossing, match="non-transversal crossing"):
        integrate_to_axis(field, parse_bipoly("0"), (1.0, 0.0), "SigmaPlus", "forward")


def test_escaping_orbit_has_no_return():
    field = (parse_bipoly("1"), parse_bipoly("1"))
    with pytest.raises(NoReturnToSigma):
        integrate_to_axis(field, parse_bipoly("x - y"), (1.0, 0.0), "SigmaPlus", "forward",
                          max_length=100.0)


def test_corner_and_off_axis_starts():
    with pytest.raises(DegenerateCorner):
        integrate_to_axis(CIRCLE_FIELD, CIRCLE_H, (0.0, 0.0), "SigmaPlus", "forward")
    with pytest.raises(IntegrationError, match="not on"):
        integrate_to_axis(CIRCLE_FIELD, CIRCLE_H, (1.0, 1.0), "SigmaPlus", "forward")


def test_region_penetration():
    assert Region.SigmaPlus.penetration(-1.0, 2.0) == 1.0
    assert Region.SigmaPlus.penetration(1.0, 2.0) == 0.0
    assert Region.SigmaMinus.penetration(1.0, 2.0) == 1.0
    assert Region.SigmaMinus.penetration(0.5, -0.5) == 0.0


def test_n1_first_saddle_arc():
    sys_ = registry.load("N1")
    start = (0.387552, 0.0)
    arc = integrate_to_axis(sys_.saddle_field, sys_.saddle_H, start, "SigmaPlus",
                            inward_orientation(sys_.saddle_field, start, Region.SigmaPlus))
    assert arc.terminal_axis == "positive-y-axis"
    assert arc.end[1] == pytest.approx(2.38307, abs=1e-4)


def test_non_simple_solution_not_verified():
    sol = CrossingSolution(1.0, 1.0, 0.0, 0.0, 0.0, simple=False, multiplicity=2)
    v = verify_cycle(registry.load("N1"), sol)
    assert not v.verified
    assert v.diagnostic == "non-transversal crossing"
    with pytest.raises(IntegrationError):
        emit_polyline(v)


def test_non_cycle_point_fails_closure():
    # a point on the center level set but not on the saddle one
    sys_ = registry.load("N1")
    sols = solve_crossing(build_crossing_polys(sys_))
    s = sols[0]
    off = CrossingSolution(s.x * 1.05, s.y, 0.0, 0.0, 1.0, simple=True)
    v = verify_cycle(sys_, off)
    assert not v.verified


@pytest.mark.parametrize("eid", registry.ids())
def test_registry_cycles_verify_and_conserve_printed_integrals(eid):
    sys_, vs = cycles(eid)
    entry = registry.get(eid)
    HL, Hs = source_eval(entry.center_H), source_eval(entry.saddle_H)
    assert len(vs) == 4
    for v in vs:
        assert v.verified, v.diagnostic
        assert v.coherent
        assert v.closure_residual <= 1e-5
        for arc, H in ((v.center_arc, HL), (v.saddle_arc, Hs)):
            h0 = H(*arc.start)
            drift = max(abs(H(x, y) - h0) for x, y in arc.polyline) / (1 + abs(h0))
            assert drift <= 1e-9


def test_emitted_polyline_is_closed_and_spans_the_cycle(n1):
    _, vs = n1
    outer = emit_polyline(vs[-1])
    assert outer[0] == outer[-1] == (vs[-1].solution.x, 0.0)
    xs, ys = np.array(outer).T
    # the saddle arc bulges past its crossing point
    assert xs.max() > 14.4234
    assert xs.min() < 0 and ys.min() < 0
    assert ys.min() <= 0 <= ys.max()
    assert (0.0, pytest.approx(20.9765, abs=1e-4)) in outer


def test_cycles_are_nested(n1):
    _, vs = n1
    polys = [emit_polyline(v) for v in vs]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            assert not polylines_intersect(polys[i], polys[j])
            assert Polygon(polys[j]).contains(SPoint(polys[i][0]))


def test_arcs_are_reversible(n1):
    _, vs = n1
    for v in vs:
        for arc, region, field, H in ((v.saddle_arc, "SigmaPlus", n1[0].saddle_field, n1[0].saddle_H),
                                      (v.center_arc, "SigmaMinus", n1[0].center_field, n1[0].center_H)):
            back = integrate_to_axis(field, H, arc.end, region, arc.orientation.reverse(), tol=arc.tol)
            scale = math.hypot(*np.ptp(np.array(arc.polyline), axis=0))
            assert math.dist(back.end, arc.start) <= 2 * max(v.closure_residual, 1e-9) * scale
