"""Exact univariate/bivariate polynomial arithmetic, Sylvester resultants and
Sturm-based real root isolation.

Coefficients are kept as :class:`fractions.Fraction` whenever the inputs are
rational; floats are accepted but only the isolation/refinement stage is meant
to touch floating point.
"""
from __future__ import annotations

import ast
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Sequence

from .errors import NonIsolatingBracket, NothingToEliminate, PolynomialError


def as_exact(value) -> Fraction | float:
    """Coerce ints, Fractions, decimal strings and ``"p/q"`` strings to Fraction.

    Floats are returned unchanged (they are not exact by assumption).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("boolean is not a coefficient")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        return value
    raise TypeError(f"unsupported coefficient type {type(value).__name__}")


def _sign(v) -> int:
    return (v > 0) - (v < 0)


# ---------------------------------------------------------------------------
# univariate
# ---------------------------------------------------------------------------

class UniPoly:
    """Dense univariate polynomial, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "UniPoly":
        p = cls([lead])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, float, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def _lift(self, other) -> "UniPoly":
        return other if isinstance(other, UniPoly) else UniPoly([other])

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = UniPoly([1])
        for _ in range(n):
            out = out * self
        return out

    def scale(self, k) -> "UniPoly":
        return UniPoly(c * k for c in self.coeffs)

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lc = self.lead
        return UniPoly(Fraction(c) / lc if not isinstance(c, float) else c / lc for c in self.coeffs)

    def __divmod__(self, other: "UniPoly"):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), UniPoly(rem)
        quo = [0] * (dq + 1)
        lc = other.lead
        exact = not isinstance(lc, float)
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1]
            if c == 0:
                continue
            q = Fraction(c) / lc if exact and not isinstance(c, float) else c / lc
            quo[k] = q
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= q * b
        return UniPoly(quo), UniPoly(rem[: len(other.coeffs) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise PolynomialError("division is not exact")
        return q

    def float_coeffs(self) -> list[float]:
        return [float(c) for c in self.coeffs]

    def cauchy_bound(self) -> Fraction:
        """All complex roots satisfy |z| <= 1 + max |c_i / c_n|."""
        if self.degree < 1:
            return Fraction(1)
        lc = abs(Fraction(self.lead))
        return 1 + max(abs(Fraction(c)) / lc for c in self.coeffs[:-1])


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd over Q (Euclid)."""
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def square_free_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: ``p = lc * prod f_k**k`` with f_k square-free and coprime.

    Returns ``[(f_k, k), ...]`` skipping constant factors.
    """
    if p.is_zero():
        raise PolynomialError("square-free decomposition of the zero polynomial")
    if p.degree == 0:
        return []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    out = []
    k = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, k))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        k += 1
    return out


def sturm_sequence(p: UniPoly) -> list[UniPoly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        r = -(seq[-2] % seq[-1])
        if r.is_zero():
            break
        # positive rescaling keeps sign counts and tames coefficient growth
        seq.append(r.scale(Fraction(1) / abs(Fraction(r.lead))))
    return [s for s in seq if not s.is_zero()]


def sign_variations(seq: Sequence[UniPoly], t) -> int:
    signs = [s for s in (_sign(q(t)) for q in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(seq: Sequence[UniPoly], lo, hi) -> int:
    """Distinct real roots in ``(lo, hi]`` of the square-free head of ``seq``."""
    return sign_variations(seq, lo) - sign_variations(seq, hi)


@dataclass(frozen=True)
class RootBracket:
    lo: Fraction
    hi: Fraction
    sign_lo: int
    sign_hi: int
    multiplicity: int = 1
    factor: UniPoly | None = None

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return float((self.lo + self.hi) / 2)


def _make_bracket(f: UniPoly, seq, lo: Fraction, hi: Fraction, mult: int) -> RootBracket:
    """Shrink ``(lo, hi]`` (known to hold exactly one root of f) until both
    endpoints are non-roots and the signs differ."""
    while True:
        flo, fhi = f(lo), f(hi)
        if flo != 0 and fhi != 0:
            return RootBracket(lo, hi, _sign(flo), _sign(fhi), mult, f)
        if fhi == 0:
            # exact rational root at hi; open a symmetric window around it
            r, eps = hi, (hi - lo) / 2
            while True:
                a, b = r - eps, r + eps
                if f(a) != 0 and f(b) != 0 and count_roots(seq, a, b) == 1:
                    return RootBracket(a, b, _sign(f(a)), _sign(f(b)), mult, f)
                eps /= 2
        mid = (lo + hi) / 2
        if count_roots(seq, mid, hi) == 1:
            lo = mid
        else:
            hi = mid


def _isolate_factor(f: UniPoly, lo: Fraction, hi: Fraction, mult: int) -> list[RootBracket]:
    seq = sturm_sequence(f)
    out: list[RootBracket] = []
    stack = [(lo, hi, count_roots(seq, lo, hi))]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(_make_bracket(f, seq, a, b, mult))
            continue
        m = (a + b) / 2
        n_left = count_roots(seq, a, m)
        stack.append((m, b, n - n_left))
        stack.append((a, m, n_left))
    return out


def _bisect_once(b: RootBracket) -> RootBracket:
    f = b.factor
    mid = (b.lo + b.hi) / 2
    fm = f(mid)
    if fm == 0:
        seq = sturm_sequence(f)
        return _make_bracket(f, seq, b.lo + (b.hi - b.lo) / 4, b.hi - (b.hi - b.lo) / 4, b.multiplicity)
    if _sign(fm) == b.sign_lo:
        return RootBracket(mid, b.hi, _sign(fm), b.sign_hi, b.multiplicity, f)
    return RootBracket(b.lo, mid, b.sign_lo, _sign(fm), b.multiplicity, f)


def isolate_real_roots(u: UniPoly, lo, hi) -> list[RootBracket]:
    """Disjoint isolating brackets for every distinct real root of ``u`` in
    ``(lo, hi]``, sorted by position.

    Multiple roots are isolated on their square-free factor and carry the
    multiplicity; the factor is stored on the bracket so it can be refined.
    """
    if u.is_zero():
        raise PolynomialError("cannot isolate roots of the zero polynomial")
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    brackets: list[RootBracket] = []
    for f, k in square_free_decomposition(u):
        brackets.extend(_isolate_factor(f, lo, hi, k))
    brackets.sort(key=lambda b: b.lo)
    # brackets from distinct factors may overlap; their roots are distinct
    changed = True
    while changed:
        changed = False
        for i in range(len(brackets) - 1):
            a, b = brackets[i], brackets[i + 1]
            if a.hi > b.lo:
                brackets[i], brackets[i + 1] = _bisect_once(a), _bisect_once(b)
                changed = True
        brackets.sort(key=lambda b: b.lo)
    return brackets


def refine_root(u: UniPoly, b: RootBracket, tol: float = 1e-14) -> float:
    """Safeguarded Newton iteration inside an isolating bracket.

    Signs are evaluated exactly, so the bracket always contains the root;
    float Newton steps only propose split points and bisection takes over
    whenever a step leaves the bracket.
    """
    f = b.factor if b.factor is not None else u
    lo, hi = Fraction(b.lo), Fraction(b.hi)
    slo, shi = _sign(f(lo)), _sign(f(hi))
    if slo == 0 or shi == 0 or slo == shi:
        raise NonIsolatingBracket(f"bracket ({float(lo)}, {float(hi)}) does not isolate a sign change")
    if f.degree == 1:
        return float(-Fraction(f.coeffs[0]) / Fraction(f.coeffs[1]))
    fc = f.float_coeffs()
    dc = f.derivative().float_coeffs()

    def horner(cs, t):
        acc = 0.0
        for c in reversed(cs):
            acc = acc * t + c
        return acc

    tol = Fraction(tol)
    x = float((lo + hi) / 2)
    while hi - lo > tol:
        d = horner(dc, x)
        cand = x - horner(fc, x) / d if d != 0 and math.isfinite(d) else math.nan
        newton = math.isfinite(cand) and lo < Fraction(cand) < hi
        split = Fraction(cand) if newton else (lo + hi) / 2
        s = _sign(f(split))
        if s == 0:
            return float(split)
        if s == slo:
            lo = split
        else:
            hi = split
        if newton and hi - lo > tol:
            # Newton approaches from one side; probe the other side at tol/2
            probe = split + tol / 2 if split == lo else split - tol / 2
            if lo < probe < hi:
                sp = _sign(f(probe))
                if sp == 0:
                    return float(probe)
                if sp == slo:
                    lo = probe
                else:
                    hi = probe
        x = float(split)
    return _best_float(f, lo, hi)


def _best_float(f: UniPoly, lo: Fraction, hi: Fraction) -> float:
    """Float in ``[lo, hi]`` with the smallest exact residual near the midpoint."""
    x = float((lo + hi) / 2)
    reach = min(128, int(float(hi - lo) / math.ulp(x) if x else 0) + 2)
    cands = [x]
    up = down = x
    for _ in range(reach):
        up, down = math.nextafter(up, math.inf), math.nextafter(down, -math.inf)
        cands += [up, down]
    cands = [c for c in cands if lo <= Fraction(c) <= hi] or [x]
    return min(cands, key=lambda c: abs(f(Fraction(c))))


# ---------------------------------------------------------------------------
# bivariate
# ---------------------------------------------------------------------------

class BiPoly:
    """Bivariate polynomial ``sum c[i][j] x**i y**j``; immutable.

    Terms are stored sparsely in a dict keyed by ``(i, j)``; :attr:`coeffs`
    gives the dense matrix view.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms: dict[tuple[int, int], object] = {
            k: v for k, v in (terms or {}).items() if v != 0
        }

    # constructors -----------------------------------------------------
    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls({(0, 0): as_exact(c)})

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): Fraction(1)})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls({(0, 1): Fraction(1)})

    @classmethod
    def from_dense(cls, c: Sequence[Sequence]) -> "BiPoly":
        return cls({(i, j): as_exact(v) for i, row in enumerate(c) for j, v in enumerate(row)})

    @classmethod
    def linear(cls, cx, cy, c0) -> "BiPoly":
        """``cx*x + cy*y + c0``."""
        return cls({(1, 0): as_exact(cx), (0, 1): as_exact(cy), (0, 0): as_exact(c0)})

    @classmethod
    def parse(cls, text: str) -> "BiPoly":
        return parse_bipoly(text)

    # structure ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degx(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def degy(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def coeff(self, i: int, j: int):
        return self.terms.get((i, j), 0)

    @property
    def coeffs(self) -> list[list]:
        out = [[0] * (self.degy + 1) for _ in range(self.degx + 1)]
        for (i, j), v in self.terms.items():
            out[i][j] = v
        return out

    def __repr__(self):
        if not self.terms:
            return "BiPoly(0)"
        parts = []
        for (i, j), v in sorted(self.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), kv[0])):
            mono = "*".join(s for s in (f"x**{i}" if i > 1 else "x" if i else "",
                                          f"y**{j}" if j > 1 else "y" if j else "") if s)
            parts.append(f"({v})" + (f"*{mono}" if mono else ""))
        return "BiPoly(" + " + ".join(parts) + ")"

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, float)):
            return self.terms == BiPoly.const(other).terms if other != 0 else not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # arithmetic ---------------------------------------------------------
    @staticmethod
    def _lift(other) -> "BiPoly":
        return other if isinstance(other, BiPoly) else BiPoly.const(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, BiPoly):
            c = as_exact(other)
            return BiPoly({k: v * c for k, v in self.terms.items()})
        out: dict = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, BiPoly):
            if set(other.terms) - {(0, 0)}:
                raise PolynomialError("division by a non-constant polynomial")
            other = other.coeff(0, 0)
        c = as_exact(other)
        if c == 0:
            raise ZeroDivisionError("division by zero")
        inv = 1 / c if isinstance(c, float) else Fraction(1) / c
        return self * inv

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise PolynomialError("only non-negative integer powers")
        out, base = BiPoly.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # evaluation ---------------------------------------------------------
    def __call__(self, x, y):
        return eval_bipoly(self, x, y)

    def compose(self, u: "BiPoly", v: "BiPoly") -> "BiPoly":
        """Substitute ``x -> u(x, y)``, ``y -> v(x, y)``."""
        upow = [BiPoly.const(1)]
        vpow = [BiPoly.const(1)]
        for _ in range(self.degx):
            upow.append(upow[-1] * u)
        for _ in range(self.degy):
            vpow.append(vpow[-1] * v)
        out = BiPoly()
        for (i, j), c in self.terms.items():
            out = out + upow[i] * vpow[j] * c
        return out

    def on_x_axis(self) -> UniPoly:
        """``t -> p(t, 0)``."""
        return UniPoly(self.coeff(i, 0) for i in range(self.degx + 1))

    def on_y_axis(self) -> UniPoly:
        """``t -> p(0, t)``."""
        return UniPoly(self.coeff(0, j) for j in range(self.degy + 1))

    def coefficients_in_x(self) -> list[UniPoly]:
        """``[q_0(y), q_1(y), ...]`` with ``p = sum q_i(y) x**i``."""
        return [UniPoly(self.coeff(i, j) for j in range(self.degy + 1)) for i in range(self.degx + 1)]

    def float_terms(self) -> list[tuple[int, int, float]]:
        return [(i, j, float(c)) for (i, j), c in self.terms.items()]

    def to_float_function(self) -> Callable[[float, float], float]:
        """Fast float evaluator (Horner in x over Horner in y)."""
        rows = [[float(c) for c in row] for row in self.coeffs]
        if not rows:
            return lambda x, y: 0.0
        rows = [list(reversed(r)) for r in reversed(rows)]

        def f(x, y):
            acc = 0.0
            for row in rows:
                r = 0.0
                for c in row:
                    r = r * y + c
                acc = acc * x + r
            return acc

        return f

    def partial(self, var: str) -> "BiPoly":
        return partial(self, var)


def eval_bipoly(p: BiPoly, x, y):
    """Evaluate ``sum c[i][j] x**i y**j``.

    Exact whenever coefficients and point are rational. If any float enters,
    the monomials are formed in float and summed with :func:`math.fsum`, so the
    result is the correctly rounded sum of the individually rounded terms.
    """
    terms = p.terms
    if not terms:
        return 0
    floaty = isinstance(x, float) or isinstance(y, float) or any(isinstance(c, float) for c in terms.values())
    if floaty:
        xf, yf = float(x), float(y)
        return math.fsum(float(c) * xf ** i * yf ** j for (i, j), c in terms.items())
    return sum(c * x ** i * y ** j for (i, j), c in terms.items())


def partial(p: BiPoly, var: str) -> BiPoly:
    """Formal derivative in ``"x"`` or ``"y"``."""
    if var == "x":
        return BiPoly({(i - 1, j): i * c for (i, j), c in p.terms.items() if i > 0})
    if var == "y":
        return BiPoly({(i, j - 1): j * c for (i, j), c in p.terms.items() if j > 0})
    raise ValueError(f"unknown variable {var!r}")


def monomial_scale(p: BiPoly, x: float, y: float) -> float:
    """Largest monomial magnitude of p at (x, y); used for scale-aware tests."""
    xf, yf = abs(float(x)), abs(float(y))
    return max((abs(float(c)) * xf ** i * yf ** j for (i, j), c in p.terms.items()), default=0.0)


# ---------------------------------------------------------------------------
# resultant
# ---------------------------------------------------------------------------

def sylvester_matrix(p: Sequence, q: Sequence) -> list[list]:
    """Sylvester matrix of coefficient lists (constant term first)."""
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    rows = []
    pr = list(reversed(p))
    qr = list(reversed(q))
    zero = p[0] * 0
    for k in range(n):
        rows.append([zero] * k + pr + [zero] * (size - k - m - 1))
    for k in range(m):
        rows.append([zero] * k + qr + [zero] * (size - k - n - 1))
    return rows


def bareiss_det(mat: list[list]):
    """Fraction-free determinant; entries need ring ops and exact ``exact_div``
    (UniPoly) or ``/`` that is exact (Fraction)."""
    a = [list(r) for r in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = None

    def div(u, v):
        return u.exact_div(v) if isinstance(u, UniPoly) else u / v

    def is_zero(v):
        return v.is_zero() if isinstance(v, UniPoly) else v == 0

    for k in range(n - 1):
        if is_zero(a[k][k]):
            for r in range(k + 1, n):
                if not is_zero(a[r][k]):
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return a[k][k] * 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num if prev is None else div(num, prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def resultant_x(p: BiPoly, q: BiPoly) -> UniPoly:
    """Resultant of p and q with respect to x, as a polynomial in y."""
    if p.degx < 1 and q.degx < 1:
        raise NothingToEliminate("nothing to eliminate: both polynomials are constant in x")
    pc = p.coefficients_in_x()
    qc = q.coefficients_in_x()
    if p.is_zero() or q.is_zero():
        return UniPoly()
    if p.degx == 0:
        return pc[0] ** q.degx
    if q.degx == 0:
        return qc[0] ** p.degx
    res = bareiss_det(sylvester_matrix(pc, qc))
    return res if isinstance(res, UniPoly) else UniPoly([res])


# ---------------------------------------------------------------------------
# expression parsing
# ---------------------------------------------------------------------------

def parse_bipoly(text: str, constants: dict | None = None) -> BiPoly:
    """Parse a polynomial expression in x, y with exact rational constants.

    Accepts ``+ - * / **`` with integer or decimal literals, e.g.
    ``"-6/5 - 2/5*(x - y/5) + 49/50*y"``. Division is only allowed by
    constants. Integer/decimal literals become Fractions, so ``2/5`` is exact.
    ``constants`` maps further names to (exact) values.
    """
    src = text.replace("^", "**")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise PolynomialError(f"cannot parse polynomial {text!r}: {exc.msg}") from None
    consts = {k: as_exact(v) for k, v in (constants or {}).items()}
    return _walk(tree.body, src, consts)


def _walk(node, text, consts) -> BiPoly:
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) and not isinstance(node.value, bool):
        literal = ast.get_source_segment(text, node)
        return BiPoly.const(Fraction(literal) if literal else Fraction(str(node.value)))
    if isinstance(node, ast.Name):
        if node.id == "x":
            return BiPoly.x()
        if node.id == "y":
            return BiPoly.y()
        if node.id in consts:
            return BiPoly.const(consts[node.id])
        raise PolynomialError(f"unknown symbol {node.id!r}; only x and y are allowed")
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _walk(node.operand, text, consts)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        left = _walk(node.left, text, consts)
        if isinstance(node.op, ast.Pow):
            exp = _walk(node.right, text, consts)
            if set(exp.terms) - {(0, 0)}:
                raise PolynomialError("exponent must be a constant")
            e = exp.coeff(0, 0)
            if Fraction(e).denominator != 1 or e < 0:
                raise PolynomialError("exponent must be a non-negative integer")
            return left ** int(e)
        right = _walk(node.right, text, consts)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            return left / right
    raise PolynomialError(f"unsupported expression element: {ast.dump(node)[:60]}")
