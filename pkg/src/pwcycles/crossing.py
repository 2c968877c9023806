"""Crossing polynomial system and its complete positive solution set.

A crossing cycle meets the positive x-axis at ``(x, 0)`` and the positive
y-axis at ``(0, y)``; both points lie on one level of each first integral, so

    PL(x, y) = H_L(x, 0) - H_L(0, y) = 0,   Pi(x, y) = H_i(x, 0) - H_i(0, y) = 0.

The solver eliminates x with an exact resultant, isolates the positive
y-roots by Sturm sequences, back-substitutes through the quadratic PL and
polishes each pair with bivariate Newton.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateCrossing, InvalidParameters, NonIsolatedSolutions
from .families import AffineMap, PiecewiseSystem, SaddleFamily, SaddleParams, validate
from .polycore import (
    BiPoly,
    UniPoly,
    isolate_real_roots,
    monomial_scale,
    parse_bipoly,
    poly_gcd,
    refine_root,
    resultant_x,
)

BEZOUT_BOUND = 8
DEDUPE_RADIUS = 1e-9


@dataclass(frozen=True)
class CrossingPolys:
    PL: BiPoly
    Pi: BiPoly
    provenance: str = "generated"


@dataclass(frozen=True)
class CrossingSolution:
    x: float
    y: float
    residual_PL: float
    residual_Pi: float
    jacobian_det: float
    simple: bool
    multiplicity: int = 1


def axis_difference(H: BiPoly) -> BiPoly:
    """``H(x, 0) - H(0, y)``, separable by construction."""
    fx, gy = H.on_x_axis(), H.on_y_axis()
    terms = {(i, 0): c for i, c in enumerate(fx.coeffs) if c != 0}
    for j, c in enumerate(gy.coeffs):
        if c != 0:
            terms[(0, j)] = terms.get((0, j), 0) - c
    return BiPoly(terms)


def build_crossing_polys(sys: PiecewiseSystem) -> CrossingPolys:
    PL = axis_difference(sys.center_H)
    Pi = axis_difference(sys.saddle_H)
    if Pi.is_zero():
        raise DegenerateCrossing("degenerate crossing polynomial")
    if PL.is_zero():
        raise DegenerateCrossing("degenerate crossing polynomial (center side)")
    provenance = "generated" if sys.saddle_params is not None else "explicit"
    return CrossingPolys(PL, Pi, provenance)


# ---------------------------------------------------------------------------
# closed forms collected for each family (independent oracle)
# ---------------------------------------------------------------------------

# Literal transcriptions: (denominator, numerator pieces).  al1, be1, ga1 are
# alpha1, beta1, gamma1.
_APPENDIX = {
    SaddleFamily.N1: ("4*b", (
        "2*a*x**2 - b*x**4 - 2*b**2*y**2 "
    )),
    SaddleFamily.N2: ("2*b", (
        "2*a**2*a1*c1*x + a**2*a1**2*x**2 - 2*a**2*b1*c1*y - a**2*b1**2*y**2 + 2*a*b*c1*x*al1 - "
        "2*b*c1**3*x*al1 + 2*a*a1*b*x**2*al1 - 6*a1*b*c1**2*x**2*al1 - 6*a1**2*b*c1*x**3*al1 - "
        "2*a1**3*b*x**4*al1 + b**2*x**2*al1**2 - 2*a*b*c1*y*be1 + 2*b*c1**3*y*be1 - "
        "2*a*b*b1*y**2*be1 + 6*b*b1*c1**2*y**2*be1 + 6*b*b1**2*c1*y**3*be1 + 2*b*b1**3*y**4*be1 - "
        "b**2*y**2*be1**2 + 2*a*a1*b*x*ga1 - 6*a1*b*c1**2*x*ga1 - 6*a1**2*b*c1*x**2*ga1 - "
        "2*a1**3*b*x**3*ga1 - 2*a*b*b1*y*ga1 + 6*b*b1*c1**2*y*ga1 + 6*b*b1**2*c1*y**2*ga1 + "
        "2*b*b1**3*y**3*ga1 + 2*b**2*x*al1*ga1 - 2*b**2*y*be1*ga1 "
    )),
    SaddleFamily.N31: ("4", (
        "- 4*a1*c*c1*x - 2*a1**2*c*x**2 + 4*b1*c*c1*y + 2*b1**2*c*y**2 - 6*c1**2*x**2*al1**2 - "
        "12*a1*c1*x**3*al1**2 - 6*a1**2*x**4*al1**2 + x**4*al1**4 + 6*c1**2*y**2*be1**2 + "
        "12*b1*c1*y**3*be1**2 + 6*b1**2*y**4*be1**2 - y**4*be1**4 - 12*c1**2*x*al1*ga1 - "
        "24*a1*c1*x**2*al1*ga1 - 12*a1**2*x**3*al1*ga1 + 4*x**3*al1**3*ga1 + 12*c1**2*y*be1*ga1 + "
        "24*b1*c1*y**2*be1*ga1 + 12*b1**2*y**3*be1*ga1 - 4*y**3*be1**3*ga1 - 12*a1*c1*x*ga1**2 - "
        "6*a1**2*x**2*ga1**2 + 12*b1*c1*y*ga1**2 + 6*b1**2*y**2*ga1**2 + 6*x**2*al1**2*ga1**2 - "
        "6*y**2*be1**2*ga1**2 + 4*x*al1*ga1**3 - 4*y*be1*ga1**3 "
    )),
    SaddleFamily.N32: ("4*b", (
        "4*a**2*a1*c1*x + 2*a**2*a1**2*x**2 - 4*a**2*b1*c1*y - 2*a**2*b1**2*y**2 + 4*a*b*c1*x*al1 "
        "+ 4*a*a1*b*x**2*al1 + 2*b**2*x**2*al1**2 - 6*b*c1**2*x**2*al1**2 - "
        "12*a1*b*c1*x**3*al1**2 - 6*a1**2*b*x**4*al1**2 + b*x**4*al1**4 - 4*a*b*c1*y*be1 - "
        "4*a*b*b1*y**2*be1 - 2*b**2*y**2*be1**2 + 6*b*c1**2*y**2*be1**2 + 12*b*b1*c1*y**3*be1**2 "
        "+ 6*b*b1**2*y**4*be1**2 - b*y**4*be1**4 + 4*a*a1*b*x*ga1 - 4*a*b*b1*y*ga1 + "
        "4*b**2*x*al1*ga1 - 12*b*c1**2*x*al1*ga1 - 24*a1*b*c1*x**2*al1*ga1 - "
        "12*a1**2*b*x**3*al1*ga1 + 4*b*x**3*al1**3*ga1 - 4*b**2*y*be1*ga1 + 12*b*c1**2*y*be1*ga1 "
        "+ 24*b*b1*c1*y**2*be1*ga1 + 12*b*b1**2*y**3*be1*ga1 - 4*b*y**3*be1**3*ga1 - "
        "12*a1*b*c1*x*ga1**2 - 6*a1**2*b*x**2*ga1**2 + 12*b*b1*c1*y*ga1**2 + "
        "6*b*b1**2*y**2*ga1**2 + 6*b*x**2*al1**2*ga1**2 - 6*b*y**2*be1**2*ga1**2 + "
        "4*b*x*al1*ga1**3 - 4*b*y*be1*ga1**3 "
    )),
    SaddleFamily.N41: ("4", (
        "- 4*a1*c*c1*x - 2*a1**2*c*x**2 + 4*b1*c*c1*y + 2*b1**2*c*y**2 - 6*c1**2*x**2*al1**2 - "
        "12*a1*c1*x**3*al1**2 - 6*a1**2*x**4*al1**2 - x**4*al1**4 + 6*c1**2*y**2*be1**2 + "
        "12*b1*c1*y**3*be1**2 + 6*b1**2*y**4*be1**2 + y**4*be1**4 - 12*c1**2*x*al1*ga1 - "
        "24*a1*c1*x**2*al1*ga1 - 12*a1**2*x**3*al1*ga1 - 4*x**3*al1**3*ga1 + 12*c1**2*y*be1*ga1 + "
        "24*b1*c1*y**2*be1*ga1 + 12*b1**2*y**3*be1*ga1 + 4*y**3*be1**3*ga1 - 12*a1*c1*x*ga1**2 - "
        "6*a1**2*x**2*ga1**2 + 12*b1*c1*y*ga1**2 + 6*b1**2*y**2*ga1**2 - 6*x**2*al1**2*ga1**2 + "
        "6*y**2*be1**2*ga1**2 - 4*x*al1*ga1**3 + 4*y*be1*ga1**3 "
    )),
    SaddleFamily.N42: ("4*b", (
        "4*a**2*a1*c1*x + 2*a**2*a1**2*x**2 - 4*a**2*b1*c1*y - 2*a**2*b1**2*y**2 + 4*a*b*c1*x*al1 "
        "+ 4*a*a1*b*x**2*al1 + 2*b**2*x**2*al1**2 - 6*b*c1**2*x**2*al1**2 - "
        "12*a1*b*c1*x**3*al1**2 - 6*a1**2*b*x**4*al1**2 - b*x**4*al1**4 - 4*a*b*c1*y*be1 - "
        "4*a*b*b1*y**2*be1 - 2*b**2*y**2*be1**2 + 6*b*c1**2*y**2*be1**2 + 12*b*b1*c1*y**3*be1**2 "
        "+ 6*b*b1**2*y**4*be1**2 + b*y**4*be1**4 + 4*a*a1*b*x*ga1 - 4*a*b*b1*y*ga1 + "
        "4*b**2*x*al1*ga1 - 12*b*c1**2*x*al1*ga1 - 24*a1*b*c1*x**2*al1*ga1 - "
        "12*a1**2*b*x**3*al1*ga1 - 4*b*x**3*al1**3*ga1 - 4*b**2*y*be1*ga1 + 12*b*c1**2*y*be1*ga1 "
        "+ 24*b*b1*c1*y**2*be1*ga1 + 12*b*b1**2*y**3*be1*ga1 + 4*b*y**3*be1**3*ga1 - "
        "12*a1*b*c1*x*ga1**2 - 6*a1**2*b*x**2*ga1**2 + 12*b*b1*c1*y*ga1**2 + "
        "6*b*b1**2*y**2*ga1**2 - 6*b*x**2*al1**2*ga1**2 + 6*b*y**2*be1**2*ga1**2 - "
        "4*b*x*al1*ga1**3 + 4*b*y*be1*ga1**3 "
    )),
    SaddleFamily.N51: ("4", (
        "- 4*a1*c*c1*x - 4*a1*c1**3*x - 2*a1**2*c*x**2 - 6*a1**2*c1**2*x**2 - 4*a1**3*c1*x**3 - "
        "a1**4*x**4 + 4*b1*c*c1*y + 4*b1*c1**3*y + 2*b1**2*c*y**2 + 6*b1**2*c1**2*y**2 + "
        "4*b1**3*c1*y**3 + b1**4*y**4 + x**4*al1**4 - y**4*be1**4 + 4*x**3*al1**3*ga1 - "
        "4*y**3*be1**3*ga1 + 6*x**2*al1**2*ga1**2 - 6*y**2*be1**2*ga1**2 + 4*x*al1*ga1**3 - "
        "4*y*be1*ga1**3 - 6*c1**2*x**2*al1**2*mu - 12*a1*c1*x**3*al1**2*mu - "
        "6*a1**2*x**4*al1**2*mu + 6*c1**2*y**2*be1**2*mu + 12*b1*c1*y**3*be1**2*mu + "
        "6*b1**2*y**4*be1**2*mu - 12*c1**2*x*al1*ga1*mu - 24*a1*c1*x**2*al1*ga1*mu - "
        "12*a1**2*x**3*al1*ga1*mu + 12*c1**2*y*be1*ga1*mu + 24*b1*c1*y**2*be1*ga1*mu + "
        "12*b1**2*y**3*be1*ga1*mu - 12*a1*c1*x*ga1**2*mu - 6*a1**2*x**2*ga1**2*mu + "
        "12*b1*c1*y*ga1**2*mu + 6*b1**2*y**2*ga1**2*mu "
    )),
    SaddleFamily.N52: ("4*b", (
        "4*a**2*a1*c1*x - 4*a1*b*c1**3*x + 2*a**2*a1**2*x**2 - 6*a1**2*b*c1**2*x**2 - "
        "4*a1**3*b*c1*x**3 - a1**4*b*x**4 - 4*a**2*b1*c1*y + 4*b*b1*c1**3*y - 2*a**2*b1**2*y**2 + "
        "6*b*b1**2*c1**2*y**2 + 4*b*b1**3*c1*y**3 + b*b1**4*y**4 + 4*a*b*c1*x*al1 + "
        "4*a*a1*b*x**2*al1 + 2*b**2*x**2*al1**2 + b*x**4*al1**4 - 4*a*b*c1*y*be1 - "
        "4*a*b*b1*y**2*be1 - 2*b**2*y**2*be1**2 - b*y**4*be1**4 + 4*a*a1*b*x*ga1 - 4*a*b*b1*y*ga1 "
        "+ 4*b**2*x*al1*ga1 + 4*b*x**3*al1**3*ga1 - 4*b**2*y*be1*ga1 - 4*b*y**3*be1**3*ga1 + "
        "6*b*x**2*al1**2*ga1**2 - 6*b*y**2*be1**2*ga1**2 + 4*b*x*al1*ga1**3 - 4*b*y*be1*ga1**3 - "
        "6*b*c1**2*x**2*al1**2*mu - 12*a1*b*c1*x**3*al1**2*mu - 6*a1**2*b*x**4*al1**2*mu + "
        "6*b*c1**2*y**2*be1**2*mu + 12*b*b1*c1*y**3*be1**2*mu + 6*b*b1**2*y**4*be1**2*mu - "
        "12*b*c1**2*x*al1*ga1*mu - 24*a1*b*c1*x**2*al1*ga1*mu - 12*a1**2*b*x**3*al1*ga1*mu + "
        "12*b*c1**2*y*be1*ga1*mu + 24*b*b1*c1*y**2*be1*ga1*mu + 12*b*b1**2*y**3*be1*ga1*mu - "
        "12*a1*b*c1*x*ga1**2*mu - 6*a1**2*b*x**2*ga1**2*mu + 12*b*b1*c1*y*ga1**2*mu + "
        "6*b*b1**2*y**2*ga1**2*mu "
    )),
    SaddleFamily.N61: ("4", (
        "- 4*a1*c*c1*x - 4*a1*c1**3*x - 2*a1**2*c*x**2 - 6*a1**2*c1**2*x**2 - 4*a1**3*c1*x**3 - "
        "a1**4*x**4 + 4*b1*c*c1*y + 4*b1*c1**3*y + 2*b1**2*c*y**2 + 6*b1**2*c1**2*y**2 + "
        "4*b1**3*c1*y**3 + b1**4*y**4 - x**4*al1**4 + y**4*be1**4 - 4*x**3*al1**3*ga1 + "
        "4*y**3*be1**3*ga1 - 6*x**2*al1**2*ga1**2 + 6*y**2*be1**2*ga1**2 - 4*x*al1*ga1**3 + "
        "4*y*be1*ga1**3 - 6*c1**2*x**2*al1**2*mu - 12*a1*c1*x**3*al1**2*mu - "
        "6*a1**2*x**4*al1**2*mu + 6*c1**2*y**2*be1**2*mu + 12*b1*c1*y**3*be1**2*mu + "
        "6*b1**2*y**4*be1**2*mu - 12*c1**2*x*al1*ga1*mu - 24*a1*c1*x**2*al1*ga1*mu - "
        "12*a1**2*x**3*al1*ga1*mu + 12*c1**2*y*be1*ga1*mu + 24*b1*c1*y**2*be1*ga1*mu + "
        "12*b1**2*y**3*be1*ga1*mu - 12*a1*c1*x*ga1**2*mu - 6*a1**2*x**2*ga1**2*mu + "
        "12*b1*c1*y*ga1**2*mu + 6*b1**2*y**2*ga1**2*mu "
    )),
    SaddleFamily.N62: ("4*b", (
        "4*a**2*a1*c1*x - 4*a1*b*c1**3*x + 2*a**2*a1**2*x**2 - 6*a1**2*b*c1**2*x**2 - "
        "4*a1**3*b*c1*x**3 - a1**4*b*x**4 - 4*a**2*b1*c1*y + 4*b*b1*c1**3*y - 2*a**2*b1**2*y**2 + "
        "6*b*b1**2*c1**2*y**2 + 4*b*b1**3*c1*y**3 + b*b1**4*y**4 + 4*a*b*c1*x*al1 + "
        "4*a*a1*b*x**2*al1 + 2*b**2*x**2*al1**2 - b*x**4*al1**4 - 4*a*b*c1*y*be1 - "
        "4*a*b*b1*y**2*be1 - 2*b**2*y**2*be1**2 + b*y**4*be1**4 + 4*a*a1*b*x*ga1 - 4*a*b*b1*y*ga1 "
        "+ 4*b**2*x*al1*ga1 - 4*b*x**3*al1**3*ga1 - 4*b**2*y*be1*ga1 + 4*b*y**3*be1**3*ga1 - "
        "6*b*x**2*al1**2*ga1**2 + 6*b*y**2*be1**2*ga1**2 - 4*b*x*al1*ga1**3 + 4*b*y*be1*ga1**3 - "
        "6*b*c1**2*x**2*al1**2*mu - 12*a1*b*c1*x**3*al1**2*mu - 6*a1**2*b*x**4*al1**2*mu + "
        "6*b*c1**2*y**2*be1**2*mu + 12*b*b1*c1*y**3*be1**2*mu + 6*b*b1**2*y**4*be1**2*mu - "
        "12*b*c1**2*x*al1*ga1*mu - 24*a1*b*c1*x**2*al1*ga1*mu - 12*a1**2*b*x**3*al1*ga1*mu + "
        "12*b*c1**2*y*be1*ga1*mu + 24*b*b1*c1*y**2*be1*ga1*mu + 12*b*b1**2*y**3*be1*ga1*mu - "
        "12*a1*b*c1*x*ga1**2*mu - 6*a1**2*b*x**2*ga1**2*mu + 12*b*b1*c1*y*ga1**2*mu + "
        "6*b*b1**2*y**2*ga1**2*mu "
    )),
}

# The printed N1 form carries ``a`` where the normal-form first integral has
# ``a**2`` in front of x**2; the corrected variant below is what agrees with it.
_N1_CORRECTED = ("4*b", ("2*a**2*x**2 - b*x**4 - 2*b**2*y**2",))


def appendix_P(family, params: SaddleParams, affine: AffineMap | None = None,
               literal: bool = False) -> BiPoly:
    """Closed-form crossing polynomial of a saddle family.

    N1's closed form has no affine parameters, so it is only defined for the
    identity map. ``literal=True`` returns the N1 form exactly as printed; the
    default returns the corrected one.
    """
    fam = SaddleFamily.parse(family)
    affine = affine or AffineMap.identity()
    bad = validate(fam, params, affine)
    if bad:
        raise InvalidParameters(bad)
    if fam is SaddleFamily.N1 and affine != AffineMap.identity():
        raise InvalidParameters(["N1 closed form is defined for the identity affine map only"])
    den, body = _N1_CORRECTED if fam is SaddleFamily.N1 and not literal else _APPENDIX[fam]
    consts = dict(a=params.a, b=params.b, c=params.c, mu=params.mu,
                  a1=affine.a1, b1=affine.b1, c1=affine.c1,
                  al1=affine.alpha1, be1=affine.beta1, ga1=affine.gamma1)
    num = parse_bipoly("".join(body), consts)
    return num / parse_bipoly(den, consts)


# ---------------------------------------------------------------------------
# solver
# ---------------------------------------------------------------------------

def _grad_funcs(p: BiPoly):
    return (p.to_float_function(), p.partial("x").to_float_function(),
            p.partial("y").to_float_function())


def _normalized(p: BiPoly, f, x: float, y: float) -> float:
    return abs(f(x, y)) / (1.0 + monomial_scale(p, x, y))


def _quadratic_roots(c0: float, c1: float, c2: float) -> list[float]:
    """Real roots of ``c2 t^2 + c1 t + c0`` without cancellation."""
    if c2 == 0:
        return [] if c1 == 0 else [-c0 / c1]
    disc = c1 * c1 - 4 * c2 * c0
    if disc < 0:
        # tangency: accept a slightly negative discriminant as a double root
        if -disc > 1e-12 * (c1 * c1 + abs(4 * c2 * c0)):
            return []
        disc = 0.0
    q = -0.5 * (c1 + math.copysign(math.sqrt(disc), c1))
    if q == 0:
        return [0.0]
    return sorted({q / c2, c0 / q})


def _x_candidates(PL: BiPoly, y0: float) -> list[float]:
    cols = [float(q(y0)) for q in PL.coefficients_in_x()]
    if len(cols) <= 3:
        cols += [0.0] * (3 - len(cols))
        return _quadratic_roots(*cols)
    import numpy as np  # only reachable for non-quadratic center sides

    roots = np.roots(list(reversed(cols)))
    return [float(r.real) for r in roots if abs(r.imag) <= 1e-12 * (1 + abs(r))]


def _polish(fl, fi, x: float, y: float, iters: int = 40) -> tuple[float, float]:
    """Damped-free Newton on (PL, Pi), keeping only residual-reducing steps."""
    (pl, plx, ply), (pi, pix, piy) = fl, fi

    def res(u, v):
        return math.hypot(pl(u, v), pi(u, v))

    r = res(x, y)
    for _ in range(iters):
        a, b, c, d = plx(x, y), ply(x, y), pix(x, y), piy(x, y)
        det = a * d - b * c
        if det == 0 or r == 0:
            break
        f, g = pl(x, y), pi(x, y)
        dx = (d * f - b * g) / det
        dy = (a * g - c * f) / det
        nx, ny = x - dx, y - dy
        nr = res(nx, ny)
        if nr >= r:
            break
        x, y, r = nx, ny, nr
        if abs(dx) + abs(dy) <= 4e-16 * (abs(x) + abs(y)):
            break
    return x, y


def _search_interval(R: UniPoly) -> tuple[Fraction, Fraction]:
    return Fraction(0), Fraction(R.cauchy_bound())


def _resultant(cp: CrossingPolys) -> UniPoly:
    R = resultant_x(cp.PL, cp.Pi)
    if R.is_zero():
        raise NonIsolatedSolutions("non-isolated solution curve")
    return R


def solve_crossing(cp: CrossingPolys, tol: float = 1e-9,
                   y_range: tuple | None = None) -> list[CrossingSolution]:
    """Every isolated solution with ``x > 0`` and ``y > 0``, sorted by x.

    ``y_range`` restricts the search to ``y`` in ``(lo, hi]``; by default the
    whole positive root range of the eliminant is searched.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    R = _resultant(cp)
    if R.degree < 1:
        return []
    fl, fi = _grad_funcs(cp.PL), _grad_funcs(cp.Pi)
    lo, hi = _search_interval(R)
    if y_range is not None:
        lo, hi = max(lo, Fraction(y_range[0])), min(hi, Fraction(y_range[1]))
        if not lo < hi:
            return []
    found: list[CrossingSolution] = []
    for bracket in isolate_real_roots(R, lo, hi):
        y0 = refine_root(R, bracket)
        if y0 <= 0:
            continue
        for x0 in _x_candidates(cp.PL, y0):
            if not x0 > 0:
                continue
            if abs(fi[0](x0, y0)) > tol * (1.0 + monomial_scale(cp.Pi, x0, y0)):
                continue
            x, y = _polish(fl, fi, x0, y0)
            if not (x > 0 and y > 0):
                continue
            a, b, c, d = fl[1](x, y), fl[2](x, y), fi[1](x, y), fi[2](x, y)
            det = a * d - b * c
            simple = abs(det) > tol * (1.0 + math.hypot(a, b) * math.hypot(c, d))
            sol = CrossingSolution(
                x=x, y=y,
                residual_PL=_normalized(cp.PL, fl[0], x, y),
                residual_Pi=_normalized(cp.Pi, fi[0], x, y),
                jacobian_det=det, simple=simple,
                multiplicity=1 if simple else max(2, bracket.multiplicity),
            )
            if not any(math.hypot(s.x - x, s.y - y) <= DEDUPE_RADIUS * (1 + math.hypot(x, y)) for s in found):
                found.append(sol)
    return sorted(found, key=lambda s: (s.x, s.y))


def find_boundary_solutions(cp: CrossingPolys) -> list[tuple[float, float]]:
    """Common zeros on the open positive half-axes (tangential, never cycles)."""
    out = []
    for axis in ("x", "y"):
        pl = cp.PL.on_x_axis() if axis == "x" else cp.PL.on_y_axis()
        pi = cp.Pi.on_x_axis() if axis == "x" else cp.Pi.on_y_axis()
        if pl.is_zero() or pi.is_zero():
            continue
        g = poly_gcd(pl, pi)
        if g.degree < 1:
            continue
        for b in isolate_real_roots(g, 0, Fraction(g.cauchy_bound())):
            t = refine_root(g, b)
            if t > 0:
                out.append((t, 0.0) if axis == "x" else (0.0, t))
    return out


def count_report(cp: CrossingPolys, tol: float = 1e-9,
                 solutions: list[CrossingSolution] | None = None) -> dict:
    R = _resultant(cp)
    if solutions is None:
        solutions = solve_crossing(cp, tol)
    return {
        "bezout_bound": BEZOUT_BOUND,
        "resultant_degree": R.degree,
        "admissible_count": len(solutions),
    }
