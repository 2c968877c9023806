"""Independent brute-force oracles used by the tests.

Nothing here goes through the package's polynomial machinery: first
integrals are evaluated straight from their source strings with numpy,
derivatives come from the complex step, and solutions are found by a dense
sign-change scan followed by plain Newton.
"""
from __future__ import annotations

import numpy as np

STEP = 1e-2
UPPER = 50.0
STRIP = 400


def axis_functions(expr: str):
    """``(f, g)`` with ``f(t) = H(t, 0)`` and ``g(t) = H(0, t)``, vectorized."""
    code = compile(expr.replace("^", "**"), "<H>", "eval")

    def f(t):
        t = np.asarray(t)
        return eval(code, {"__builtins__": {}}, {"x": t, "y": np.zeros_like(t)})

    def g(t):
        t = np.asarray(t)
        return eval(code, {"__builtins__": {}}, {"x": np.zeros_like(t), "y": t})

    return f, g


def _dstep(fn, t: float, h: float = 1e-30) -> float:
    return float(np.imag(fn(np.array([complex(t, h)])))[0] / h)


def _newton(fL, gL, fi, gi, x: float, y: float, iters: int = 60):
    for _ in range(iters):
        r1 = float(fL(np.array([x]))[0] - gL(np.array([y]))[0])
        r2 = float(fi(np.array([x]))[0] - gi(np.array([y]))[0])
        a, b = _dstep(fL, x), -_dstep(gL, y)
        c, d = _dstep(fi, x), -_dstep(gi, y)
        det = a * d - b * c
        if det == 0:
            return None
        dx = (d * r1 - b * r2) / det
        dy = (a * r2 - c * r1) / det
        x, y = x - dx, y - dy
        if abs(dx) + abs(dy) < 1e-15 * (1 + abs(x) + abs(y)):
            break
    return x, y


def _cells_with_change(values: np.ndarray) -> np.ndarray:
    s = np.sign(values).astype(np.int8)
    c = s[:-1, :-1]
    return (c != s[1:, :-1]) | (c != s[:-1, 1:]) | (c != s[1:, 1:]) | (c == 0)


def grid_scan(center_H: str, saddle_H: str, step: float = STEP, upper: float = UPPER,
              merge: float = 1e-8) -> list[tuple[float, float]]:
    """Common positive zeros of both axis differences inside ``(0, upper]^2``."""
    fL, gL = axis_functions(center_H)
    fi, gi = axis_functions(saddle_H)
    n = int(round(upper / step))
    grid = np.concatenate([[step * 1e-6], step * np.arange(1, n + 1)])
    floor = grid[0] / 2
    fLx, gLy = fL(grid), gL(grid)
    fix, giy = fi(grid), gi(grid)
    found: list[tuple[float, float]] = []
    for i0 in range(0, len(grid) - 1, STRIP):
        i1 = min(i0 + STRIP + 1, len(grid))
        PL = fLx[i0:i1, None] - gLy[None, :]
        Pi = fix[i0:i1, None] - giy[None, :]
        both = _cells_with_change(PL) & _cells_with_change(Pi)
        for i, j in zip(*np.nonzero(both)):
            x0 = 0.5 * (grid[i0 + i] + grid[i0 + i + 1])
            y0 = 0.5 * (grid[j] + grid[j + 1])
            sol = _newton(fL, gL, fi, gi, x0, y0)
            if sol is None:
                continue
            x, y = sol
            # the origin always solves both; anything below the first grid
            # point is beneath the scan's resolution
            if not (floor < x <= upper and floor < y <= upper):
                continue
            if abs(x - x0) > 3 * step or abs(y - y0) > 3 * step:
                continue
            scale_L = 1 + abs(fL(np.array([x]))[0]) + abs(gL(np.array([y]))[0])
            scale_i = 1 + abs(fi(np.array([x]))[0]) + abs(gi(np.array([y]))[0])
            if abs(fL(np.array([x]))[0] - gL(np.array([y]))[0]) > 1e-10 * scale_L:
                continue
            if abs(fi(np.array([x]))[0] - gi(np.array([y]))[0]) > 1e-10 * scale_i:
                continue
            if not any(abs(x - u) <= merge and abs(y - v) <= merge for u, v in found):
                found.append((float(x), float(y)))
    return sorted(found)


def bipoly_source(p) -> str:
    """Python source for a package polynomial, so random systems can be fed
    to the oracle through strings."""
    terms = [f"({c.numerator}/{c.denominator})*x**{i}*y**{j}" for (i, j), c in p.terms.items()]
    return " + ".join(terms) or "0*x"
