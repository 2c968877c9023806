"""Linear centers and the ten Hamiltonian nilpotent-saddle (sub)families.

Every object here is built with exact rational coefficients.  A saddle in the
plane is the normal form pulled back through the affine map

    u = a1*x + b1*y + c1,   v = alpha1*x + beta1*y + gamma1,

so that ``H(x, y) = H~(u, v)`` and ``F(x, y) = M^{-1} F~(u, v)`` with
``M = [[a1, b1], [alpha1, beta1]]``.
"""
from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field, fields
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .errors import InvalidParameters, TranscriptionError
from .polycore import BiPoly, as_exact, partial

X = BiPoly.x()
Y = BiPoly.y()


class SaddleFamily(str, enum.Enum):
    N1 = "N1"
    N2 = "N2"
    N31 = "N31"
    N32 = "N32"
    N41 = "N41"
    N42 = "N42"
    N51 = "N51"
    N52 = "N52"
    N61 = "N61"
    N62 = "N62"

    @classmethod
    def parse(cls, tag) -> "SaddleFamily":
        if isinstance(tag, cls):
            return tag
        key = str(tag).strip().upper().replace("_", "").replace("^", "")
        try:
            return cls(key)
        except ValueError:
            raise InvalidParameters([f"unknown saddle family {tag!r}"]) from None

    @property
    def group(self) -> int:
        return int(self.value[1])

    @property
    def subcase(self) -> int:
        """1 for the ``a = b = 0`` branch, 2 for the ``c = 0`` branch, 0 for N1/N2."""
        return int(self.value[2]) if len(self.value) == 3 else 0


def _exact_fields(obj):
    for f in fields(obj):
        object.__setattr__(obj, f.name, as_exact(getattr(obj, f.name)))


@dataclass(frozen=True)
class LinearCenterParams:
    """Linear center with first integral ``sign*[(A y + x)^2 + 2(C x - B y) + omega^2 y^2]``.

    The vector field is the standard normal form multiplied by ``time_scale``;
    printed examples commonly use ``time_scale = -2*sign`` which makes the
    field exactly ``(dH/dy, -dH/dx)``.
    """

    A: Fraction = Fraction(0)
    B: Fraction = Fraction(0)
    C: Fraction = Fraction(0)
    omega: Fraction = Fraction(1)
    sign: int = 1
    time_scale: Fraction = Fraction(1)

    def __post_init__(self):
        _exact_fields(self)


@dataclass(frozen=True)
class SaddleParams:
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    mu: Fraction = Fraction(0)

    def __post_init__(self):
        _exact_fields(self)


@dataclass(frozen=True)
class AffineMap:
    a1: Fraction = Fraction(1)
    b1: Fraction = Fraction(0)
    c1: Fraction = Fraction(0)
    alpha1: Fraction = Fraction(0)
    beta1: Fraction = Fraction(1)
    gamma1: Fraction = Fraction(0)

    def __post_init__(self):
        _exact_fields(self)

    @classmethod
    def identity(cls) -> "AffineMap":
        return cls()

    @property
    def det(self):
        """``b1*alpha1 - a1*beta1``; the map is invertible iff this is nonzero."""
        return self.b1 * self.alpha1 - self.a1 * self.beta1

    @property
    def u(self) -> BiPoly:
        return BiPoly.linear(self.a1, self.b1, self.c1)

    @property
    def v(self) -> BiPoly:
        return BiPoly.linear(self.alpha1, self.beta1, self.gamma1)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def validate_center(p: LinearCenterParams) -> list[str]:
    out = []
    if not p.omega > 0:
        out.append("with ω>0")
    if p.sign not in (1, -1):
        out.append("sign ∈ {+1, −1}")
    if p.time_scale == 0:
        out.append("time_scale ≠ 0")
    return out


def validate(family, params: SaddleParams, affine: AffineMap | None = None) -> list[str]:
    """Names of every violated constraint; an empty list means valid."""
    fam = SaddleFamily.parse(family)
    a, b, c, mu = params.a, params.b, params.c, params.mu
    out: list[str] = []

    def need(cond, name):
        if not cond:
            out.append(name)

    if fam is SaddleFamily.N1:
        need(b < 0, "b<0")
    elif fam is SaddleFamily.N2:
        need(a > 0, "a>0")
        need(b != 0, "b≠0")
    elif fam.subcase == 1:
        need(a == 0 and b == 0, "a=b=0")
        if fam.group in (3, 5):
            need(c < 0, "c<0")
        else:
            need(c > 0, "c>0")
    else:
        need(c == 0, "c=0")
        if fam is SaddleFamily.N32:
            need(a * b != 0, "a·b≠0")
            if b != 0:
                need(a * a / b - 6 * b > 0, "a²/b−6b>0")
        elif fam is SaddleFamily.N42:
            need(a != 0, "a≠0")
            need(b < 0, "b<0")
        elif fam is SaddleFamily.N52:
            need(b != 0, "b≠0")
            if b != 0:
                need((a**4 - b**4 - 6 * a * a * b * b * mu) / b > 0, "(a⁴−b⁴−6a²b²μ)/b>0")
        elif fam is SaddleFamily.N62:
            need(b != 0, "b≠0")
            if b != 0:
                need((a**4 + b**4 + 6 * a * a * b * b * mu) / b < 0, "(a⁴+b⁴+6a²b²μ)/b<0")
    if fam.group in (1, 2, 3, 4):
        need(mu == 0, "μ=0 (unused)")
    if fam.group in (1, 2):
        need(c == 0, "c=0 (unused)")
    if affine is not None:
        need(affine.det != 0, "b₁α₁ − a₁β₁ ≠ 0")
    return out


def _require_valid(family, params, affine):
    bad = validate(family, params, affine)
    if bad:
        raise InvalidParameters(bad)


# ---------------------------------------------------------------------------
# polynomial objects
# ---------------------------------------------------------------------------

def center_first_integral(p: LinearCenterParams) -> BiPoly:
    bracket = (p.A * Y + X) ** 2 + 2 * (p.C * X - p.B * Y) + p.omega**2 * Y**2
    return bracket * p.sign


def center_field(p: LinearCenterParams) -> tuple[BiPoly, BiPoly]:
    dx = -(p.A**2 + p.omega**2) * Y - p.A * X + p.B
    dy = p.A * Y + X + p.C
    return dx * p.time_scale, dy * p.time_scale


def normal_form(family, params: SaddleParams) -> tuple[tuple[BiPoly, BiPoly], BiPoly]:
    """``((xdot, ydot), H~)`` of the untransformed family; ``xdot = dH/dy``."""
    fam = SaddleFamily.parse(family)
    a, b, c, mu = params.a, params.b, params.c, params.mu
    linx = a * X + b * Y
    if fam.group in (1, 2):
        k = -a * a / b
    else:
        k = c - a * a / (b + c)
    if fam.subcase == 1:
        quad = X**2 * (-c / 2)
    else:
        quad = X**2 * (a * a / (2 * b)) + Y**2 * (b / 2) + X * Y * a

    g = fam.group
    if g == 1:
        f = (linx, k * X - a * Y + X**3)
        quartic = X**4 * Fraction(-1, 4)
    elif g == 2:
        f = (linx - X**3, k * X - a * Y + 3 * X**2 * Y)
        quartic = -(X**3 * Y)
    elif g == 3:
        f = (linx - 3 * X**2 * Y + Y**3, k * X - a * Y + 3 * X * Y**2)
        quartic = Y**4 / 4 - X**2 * Y**2 * Fraction(3, 2)
    elif g == 4:
        f = (linx - 3 * X**2 * Y - Y**3, k * X - a * Y + 3 * X * Y**2)
        quartic = -(Y**4) / 4 - X**2 * Y**2 * Fraction(3, 2)
    elif g == 5:
        f = (linx - 3 * mu * X**2 * Y + Y**3, k * X - a * Y + X**3 + 3 * mu * X * Y**2)
        quartic = (Y**4 - X**4) / 4 - X**2 * Y**2 * (Fraction(3, 2) * mu)
    else:
        f = (linx - 3 * mu * X**2 * Y - Y**3, k * X - a * Y + X**3 + 3 * mu * X * Y**2)
        quartic = -(X**4 + Y**4) / 4 - X**2 * Y**2 * (Fraction(3, 2) * mu)
    return f, quartic + quad


def saddle_first_integral(family, params: SaddleParams, affine: AffineMap) -> BiPoly:
    _require_valid(family, params, affine)
    _, h = normal_form(family, params)
    return h.compose(affine.u, affine.v)


def saddle_field(family, params: SaddleParams, affine: AffineMap) -> tuple[BiPoly, BiPoly]:
    _require_valid(family, params, affine)
    (p, q), _ = normal_form(family, params)
    u, v = affine.u, affine.v
    pu, qu = p.compose(u, v), q.compose(u, v)
    det_m = -affine.det  # a1*beta1 - b1*alpha1
    dx = (pu * affine.beta1 - qu * affine.b1) / det_m
    dy = (qu * affine.a1 - pu * affine.alpha1) / det_m
    return dx, dy


# float evaluators --------------------------------------------------------

def H_center(p: LinearCenterParams, x, y):
    return center_first_integral(p)(x, y)


def F_center(p: LinearCenterParams, x, y):
    fx, fy = center_field(p)
    return fx(x, y), fy(x, y)


def H_saddle(family, params: SaddleParams, affine: AffineMap, x, y):
    return saddle_first_integral(family, params, affine)(x, y)


def F_saddle(family, params: SaddleParams, affine: AffineMap, x, y):
    fx, fy = saddle_field(family, params, affine)
    return fx(x, y), fy(x, y)


# ---------------------------------------------------------------------------
# Hamiltonian guard
# ---------------------------------------------------------------------------

def _gradient(H, h=1e-6):
    if isinstance(H, BiPoly):
        hx, hy = H.partial("x").to_float_function(), H.partial("y").to_float_function()
        return lambda x, y: (hx(x, y), hy(x, y))

    def grad(x, y):
        return ((H(x + h, y) - H(x - h, y)) / (2 * h), (H(x, y + h) - H(x, y - h)) / (2 * h))

    return grad


def _as_field(F):
    if isinstance(F, (tuple, list)) and len(F) == 2 and all(isinstance(f, BiPoly) for f in F):
        fx, fy = F[0].to_float_function(), F[1].to_float_function()
        return lambda x, y: (fx(x, y), fy(x, y))
    return F


def hamiltonian_residual(H, F, pts: Iterable[Sequence[float]]) -> float:
    """Max over ``pts`` of ``|grad H . F| / (1 + |grad H| |F|)``.

    ``H`` is a :class:`BiPoly` (exact gradient) or a callable (central
    differences); ``F`` is a pair of BiPolys or a callable returning a pair.
    """
    grad = _gradient(H)
    field_ = _as_field(F)
    worst = 0.0
    for x, y in pts:
        gx, gy = grad(float(x), float(y))
        fx, fy = field_(float(x), float(y))
        r = abs(gx * fx + gy * fy) / (1.0 + math.hypot(gx, gy) * math.hypot(fx, fy))
        worst = max(worst, r)
    return worst


def is_exactly_hamiltonian(H: BiPoly, F: tuple[BiPoly, BiPoly]) -> bool:
    return (partial(H, "x") * F[0] + partial(H, "y") * F[1]).is_zero()


# ---------------------------------------------------------------------------
# piecewise system
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PiecewiseSystem:
    """Linear center on the closed complement of the first quadrant, saddle on
    the closed first quadrant."""

    center_field: tuple[BiPoly, BiPoly]
    center_H: BiPoly
    saddle_field: tuple[BiPoly, BiPoly]
    saddle_H: BiPoly
    family: SaddleFamily | None = None
    name: str = ""
    center_params: LinearCenterParams | None = field(default=None, compare=False)
    saddle_params: SaddleParams | None = field(default=None, compare=False)
    affine: AffineMap | None = field(default=None, compare=False)

    @classmethod
    def generated(cls, center: LinearCenterParams, family, params: SaddleParams,
                  affine: AffineMap | None = None, name: str = "") -> "PiecewiseSystem":
        affine = affine or AffineMap.identity()
        bad = validate_center(center) + validate(family, params, affine)
        if bad:
            raise InvalidParameters(bad)
        fam = SaddleFamily.parse(family)
        return cls(center_field(center), center_first_integral(center),
                   saddle_field(fam, params, affine), saddle_first_integral(fam, params, affine),
                   fam, name, center, params, affine)

    @classmethod
    def explicit(cls, center_field, center_H, saddle_field, saddle_H, family=None,
                 name: str = "", check: bool = True) -> "PiecewiseSystem":
        def poly(p):
            return p if isinstance(p, BiPoly) else BiPoly.parse(p)

        cf = (poly(center_field[0]), poly(center_field[1]))
        sf = (poly(saddle_field[0]), poly(saddle_field[1]))
        ch, sh = poly(center_H), poly(saddle_H)
        if check:
            for side, h, f in (("center", ch, cf), ("saddle", sh, sf)):
                if not is_exactly_hamiltonian(h, f):
                    raise TranscriptionError(f"{side} field is not Hamiltonian for its first integral")
        fam = SaddleFamily.parse(family) if family is not None else None
        return cls(cf, ch, sf, sh, fam, name)

    # float callables for integration
    @cached_property
    def center_rhs(self) -> Callable[[float, float], tuple[float, float]]:
        return _as_field(self.center_field)

    @cached_property
    def saddle_rhs(self) -> Callable[[float, float], tuple[float, float]]:
        return _as_field(self.saddle_field)

    @cached_property
    def center_H_float(self) -> Callable[[float, float], float]:
        return self.center_H.to_float_function()

    @cached_property
    def saddle_H_float(self) -> Callable[[float, float], float]:
        return self.saddle_H.to_float_function()


# ---------------------------------------------------------------------------
# random valid draws
# ---------------------------------------------------------------------------

def _rat(rng: random.Random, lo: float, hi: float, den: int = 20, nonzero: bool = False) -> Fraction:
    while True:
        v = Fraction(rng.randint(round(lo * den), round(hi * den)), den)
        if v != 0 or not nonzero:
            return v


def random_center(rng: random.Random) -> LinearCenterParams:
    return LinearCenterParams(
        A=_rat(rng, -2, 2), B=_rat(rng, -2, 2), C=_rat(rng, -2, 2),
        omega=_rat(rng, 0.05, 2, nonzero=True), sign=rng.choice((1, -1)),
        time_scale=rng.choice((Fraction(1), Fraction(-1), Fraction(2), Fraction(-2))),
    )


def random_affine(rng: random.Random) -> AffineMap:
    while True:
        m = AffineMap(*(_rat(rng, -1, 1) for _ in range(6)))
        if m.det != 0:
            return m


def random_params(family, rng: random.Random) -> SaddleParams:
    """Rejection-sample parameters satisfying the family's constraints."""
    fam = SaddleFamily.parse(family)
    while True:
        if fam is SaddleFamily.N1:
            p = SaddleParams(a=_rat(rng, -2, 2), b=_rat(rng, -2, -0.05, nonzero=True))
        elif fam is SaddleFamily.N2:
            p = SaddleParams(a=_rat(rng, 0.05, 2, nonzero=True), b=_rat(rng, -2, 2, nonzero=True))
        elif fam.subcase == 1:
            c = _rat(rng, 0.05, 2, nonzero=True)
            c = -c if fam.group in (3, 5) else c
            mu = _rat(rng, -2, 2) if fam.group in (5, 6) else 0
            p = SaddleParams(c=c, mu=mu)
        else:
            mu = _rat(rng, -2, 2) if fam.group in (5, 6) else 0
            p = SaddleParams(a=_rat(rng, -2, 2, nonzero=True), b=_rat(rng, -2, 2, nonzero=True), mu=mu)
        if not validate(fam, p):
            return p


def random_system(family, rng: random.Random) -> PiecewiseSystem:
    fam = SaddleFamily.parse(family)
    return PiecewiseSystem.generated(random_center(rng), fam, random_params(fam, rng),
                                     random_affine(rng), name=f"random-{fam.value}")
