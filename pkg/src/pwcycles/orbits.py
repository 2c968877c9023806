"""Piecewise orbit integration and geometric certification of crossing cycles.

An arc in the closed first quadrant ends when ``min(x, y)`` reaches zero from
above; an arc in the complement ends when it reaches zero from below.  Passing
over the negative half-axes does not change the sign of ``min(x, y)`` so it
never triggers an event.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import DOP853

from .crossing import CrossingSolution
from .errors import (
    DegenerateCorner,
    EquilibriumEncountered,
    IntegrationError,
    NonTransversalCrossing,
    NoReturnToSigma,
    PWCyclesError,
)
from .families import PiecewiseSystem
from .polycore import BiPoly

Point = tuple[float, float]

ON_SIGMA_TOL = 1e-9
CORNER_RADIUS = 1e-9
SAMPLES_PER_STEP = 8


class Region(str, enum.Enum):
    SigmaPlus = "SigmaPlus"
    SigmaMinus = "SigmaMinus"

    def penetration(self, x: float, y: float) -> float:
        """Depth of (x, y) inside the forbidden region, 0 when allowed."""
        g = min(x, y)
        return max(0.0, -g) if self is Region.SigmaPlus else max(0.0, g)


class Orientation(str, enum.Enum):
    forward = "forward"
    backward = "backward"

    @property
    def sign(self) -> float:
        return 1.0 if self is Orientation.forward else -1.0

    def reverse(self) -> "Orientation":
        return Orientation.backward if self is Orientation.forward else Orientation.forward


@dataclass(frozen=True)
class ArcResult:
    start: Point
    end: Point
    polyline: list[Point] = field(repr=False)
    h_drift: float
    region_violation: float
    terminal_axis: str
    orientation: Orientation
    steps: int
    duration: float
    tol: float = 1e-12


@dataclass(frozen=True)
class CycleVerification:
    solution: CrossingSolution
    saddle_arc: ArcResult | None
    center_arc: ArcResult | None
    closure_residual: float
    verified: bool
    coherent: bool = False
    diagnostic: str = ""


def _field_fn(f) -> Callable[[float, float], tuple[float, float]]:
    if isinstance(f, (tuple, list)) and len(f) == 2 and all(isinstance(c, BiPoly) for c in f):
        fx, fy = f[0].to_float_function(), f[1].to_float_function()
        return lambda x, y: (fx(x, y), fy(x, y))
    return f


def _scalar_fn(h) -> Callable[[float, float], float]:
    return h.to_float_function() if isinstance(h, BiPoly) else h


def _axis_of(p: Point) -> str:
    x, y = p
    if abs(y) <= ON_SIGMA_TOL and x > ON_SIGMA_TOL:
        return "positive-x-axis"
    if abs(x) <= ON_SIGMA_TOL and y > ON_SIGMA_TOL:
        return "positive-y-axis"
    if math.hypot(x, y) <= CORNER_RADIUS:
        raise DegenerateCorner("start point is the corner of Σ")
    raise IntegrationError(f"start point {p} is not on Σ")


def inward_orientation(field, start: Point, region: Region) -> Orientation:
    """Orientation whose initial velocity points into ``region``."""
    fx, fy = _field_fn(field)(*start)
    normal = fy if _axis_of(start) == "positive-x-axis" else fx
    want = 1.0 if region is Region.SigmaPlus else -1.0
    return Orientation.forward if normal * want > 0 else Orientation.backward


def integrate_to_axis(field, H, start: Point, region: Region | str, orientation: Orientation | str,
                      tol: float = 1e-12, max_steps: int = 10**7,
                      max_length: float | None = None) -> ArcResult:
    """Integrate from a point of Σ through ``region`` until Σ is met again."""
    region = Region(region)
    orientation = Orientation(orientation)
    F = _field_fn(field)
    Hf = _scalar_fn(H)
    x0, y0 = float(start[0]), float(start[1])
    axis = _axis_of((x0, y0))
    if axis == "positive-x-axis":
        y0 = 0.0
    else:
        x0 = 0.0

    fx, fy = F(x0, y0)
    speed0 = math.hypot(fx, fy)
    if speed0 <= 1e-14:
        raise EquilibriumEncountered(f"equilibrium at start {start}")
    normal = (fy if axis == "positive-x-axis" else fx) * orientation.sign
    if abs(normal) <= tol * (1.0 + speed0):
        raise NonTransversalCrossing("non-transversal crossing")
    inward = normal > 0 if region is Region.SigmaPlus else normal < 0
    if not inward:
        raise IntegrationError(f"initial velocity leaves {region.value}; try the other orientation")

    s = orientation.sign
    if max_length is None:
        max_length = 1e4 * max(1.0, math.hypot(x0, y0))

    def rhs(_t, z):
        u, v = F(z[0], z[1])
        return np.array([s * u, s * v])

    inside = (lambda g: g > 0) if region is Region.SigmaPlus else (lambda g: g < 0)
    solver = DOP853(rhs, 0.0, np.array([x0, y0]), t_bound=np.inf, rtol=tol, atol=tol)
    h0 = Hf(x0, y0)
    hscale = 1.0 + abs(h0)
    poly: list[Point] = [(x0, y0)]
    drift = violation = length = 0.0
    armed = False  # the start lies on Σ; events count only once strictly inside
    steps = 0

    def track(px, py):
        nonlocal drift, violation, length
        lx, ly = poly[-1]
        length += math.hypot(px - lx, py - ly)
        drift = max(drift, abs(Hf(px, py) - h0) / hscale)
        violation = max(violation, region.penetration(px, py))
        poly.append((px, py))

    while True:
        t_old = solver.t
        msg = solver.step()
        steps += 1
        if solver.status == "failed":
            raise NoReturnToSigma(f"no return to Σ: integrator failed ({msg})")
        dense = solver.dense_output()
        ts = np.linspace(t_old, solver.t, SAMPLES_PER_STEP + 1)[1:]
        pts = dense(ts)
        prev_t = t_old
        for k, tk in enumerate(ts):
            px, py = float(pts[0, k]), float(pts[1, k])
            g = min(px, py)
            if not armed:
                if inside(g):
                    armed = True
                track(px, py)
                prev_t = tk
                continue
            if inside(g):
                track(px, py)
                prev_t = tk
                continue
            t_ev = _bisect_event(dense, prev_t, tk, inside)
            ex, ey = (float(c) for c in dense(t_ev))
            if ex <= ey:
                end, term = (0.0, ey), "positive-y-axis"
            else:
                end, term = (ex, 0.0), "positive-x-axis"
            if math.hypot(*end) <= CORNER_RADIUS or end[0] < 0 or end[1] < 0:
                raise DegenerateCorner("arc reaches the corner of Σ")
            track(ex, ey)
            poly[-1] = end
            drift = max(drift, abs(Hf(*end) - h0) / hscale)
            return ArcResult((x0, y0), end, poly, drift, violation, term, orientation, steps, t_ev, tol)
        u, v = F(poly[-1][0], poly[-1][1])
        if math.hypot(u, v) <= 1e-10 * speed0:
            raise EquilibriumEncountered(f"orbit stalls near an equilibrium at {poly[-1]}")
        if steps >= max_steps or length > max_length:
            raise NoReturnToSigma(f"no return to Σ within budget (steps={steps}, length={length:.3g})")


def _bisect_event(dense, ta: float, tb: float, inside) -> float:
    """Shrink [ta, tb] around the exit from the region to 1e-12 (or float
    resolution); returns the first time found outside."""
    while tb - ta > 1e-12:
        tm = 0.5 * (ta + tb)
        if tm in (ta, tb):
            break
        xm, ym = dense(tm)
        if inside(min(xm, ym)):
            ta = tm
        else:
            tb = tm
    return tb


# ---------------------------------------------------------------------------
# cycle verification
# ---------------------------------------------------------------------------

MIN_TOL = 1e-14


def _arc_between(field, H, a: Point, b: Point, region: Region, tol: float, drift_tol: float):
    """Arc joining the two crossing points through ``region``.

    Starts from ``a`` with the inward orientation and falls back to starting
    from ``b``.  Long thin arcs amplify the endpoint error through |grad H|, so
    an arc whose first-integral drift exceeds ``drift_tol`` is recomputed at
    tenfold tighter tolerances down to ``MIN_TOL``.  Returns
    ``(arc, from_a, error)``.
    """
    errors = []
    budget = 1e4 * max(1.0, math.hypot(a[0] - b[0], a[1] - b[1]))
    for from_a, src in ((True, a), (False, b)):
        try:
            orient = inward_orientation(field, src, region)
            t = tol
            arc = integrate_to_axis(field, H, src, region, orient, tol=t, max_length=budget)
            while arc.h_drift > drift_tol and t / 10 >= MIN_TOL:
                t /= 10
                arc = integrate_to_axis(field, H, src, region, orient, tol=t, max_length=budget)
            if arc.terminal_axis == _axis_of(b if from_a else a):
                return arc, from_a, ""
            errors.append(f"arc from {src} ended on the {arc.terminal_axis}")
        except PWCyclesError as exc:
            errors.append(str(exc))
    return None, True, "; ".join(errors)


def _forward_from(arc: ArcResult, from_first: bool) -> bool:
    """Whether forward time runs from the first crossing point to the second."""
    return (arc.orientation is Orientation.forward) == from_first


def verify_cycle(sys: PiecewiseSystem, sol: CrossingSolution, tol: float = 1e-12,
                 closure_tol: float = 1e-5, region_tol: float = 1e-7,
                 drift_tol: float = 1e-9) -> CycleVerification:
    if not sol.simple:
        return CycleVerification(sol, None, None, math.inf, False, False, "non-transversal crossing")
    p, q = (float(sol.x), 0.0), (0.0, float(sol.y))
    saddle, s_from_p, s_err = _arc_between(sys.saddle_field, sys.saddle_H, p, q, Region.SigmaPlus, tol, drift_tol)
    center, c_from_q, c_err = _arc_between(sys.center_field, sys.center_H, q, p, Region.SigmaMinus, tol, drift_tol)
    if saddle is None or center is None:
        msg = "; ".join(m for m in (s_err and f"saddle: {s_err}", c_err and f"center: {c_err}") if m)
        if "non-transversal" in msg:
            msg = "non-transversal crossing; " + msg
        return CycleVerification(sol, saddle, center, math.inf, False, False, msg)

    pts = np.array(saddle.polyline + center.polyline)
    diameter = float(np.hypot(*(pts.max(axis=0) - pts.min(axis=0))))
    s_target = q if s_from_p else p
    c_target = p if c_from_q else q
    closure = max(math.dist(saddle.end, s_target), math.dist(center.end, c_target)) / diameter
    # saddle carries p -> q forward and center carries q -> p forward, or both reversed
    coherent = _forward_from(saddle, s_from_p) == _forward_from(center, c_from_q)

    problems = []
    if closure > closure_tol:
        problems.append(f"closure residual {closure:.3g} > {closure_tol:g}")
    for name, arc in (("saddle", saddle), ("center", center)):
        if arc.region_violation > region_tol:
            problems.append(f"{name} arc leaves its region by {arc.region_violation:.3g}")
        if arc.h_drift > drift_tol:
            problems.append(f"{name} arc first-integral drift {arc.h_drift:.3g}")
    if not coherent:
        problems.append("arcs are not traversed in a consistent direction")
    verified = not problems
    return CycleVerification(sol, saddle, center, closure, verified, coherent, "; ".join(problems))


def emit_polyline(v: CycleVerification) -> list[Point]:
    """Closed polyline: crossing point on the x-axis, saddle arc, crossing point
    on the y-axis, center arc, back to the first point."""
    if not v.verified:
        raise IntegrationError("cannot emit a polyline for an unverified cycle")
    p, q = (float(v.solution.x), 0.0), (0.0, float(v.solution.y))

    def interior(arc: ArcResult, first: Point) -> list[Point]:
        pts = arc.polyline[1:-1]
        return pts if arc.start == first else pts[::-1]

    return [p, *interior(v.saddle_arc, p), q, *interior(v.center_arc, q), p]


def polylines_intersect(a: Sequence[Point], b: Sequence[Point]) -> bool:
    from shapely.geometry import LineString

    return LineString(a).intersects(LineString(b))
