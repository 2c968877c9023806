from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pwcycles.errors import NonIsolatingBracket, NothingToEliminate, PolynomialError
from pwcycles.polycore import (
    BiPoly,
    RootBracket,
    UniPoly,
    bareiss_det,
    count_roots,
    isolate_real_roots,
    parse_bipoly,
    poly_gcd,
    refine_root,
    resultant_x,
    square_free_decomposition,
    sturm_sequence,
    sylvester_matrix,
)

X, Y = BiPoly.x(), BiPoly.y()

small_int = st.integers(-6, 6)
small_frac = st.fractions(min_value=-5, max_value=5, max_denominator=7)
unipolys = st.lists(small_int, min_size=1, max_size=6).map(UniPoly)


# --- univariate ----------------------------------------------------------

def test_zero_polynomial_has_degree_minus_one():
    assert UniPoly([0, 0]).degree == -1
    assert UniPoly([0, 0]).is_zero()


@given(unipolys, unipolys.filter(lambda p: not p.is_zero()))
def test_divmod_identity(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(st.lists(small_frac, min_size=1, max_size=4), st.integers(1, 3))
def test_square_free_parts_reconstruct(roots, k):
    p = UniPoly.from_roots(roots) ** k
    parts = square_free_decomposition(p)
    prod = UniPoly([1])
    for f, m in parts:
        prod = prod * f**m
    assert prod.monic() == p.monic()
    assert all(poly_gcd(f, f.derivative()).degree == 0 for f, _ in parts)


@given(st.sets(small_frac, min_size=1, max_size=5))
def test_sturm_counts_distinct_roots(roots):
    p = UniPoly.from_roots(sorted(roots))
    seq = sturm_sequence(p)
    assert count_roots(seq, -6, 6) == len(roots)
    assert count_roots(seq, 0, 6) == sum(1 for r in roots if r > 0)


@given(st.sets(small_frac, min_size=1, max_size=5))
def test_isolation_and_refinement_recover_roots(roots):
    p = UniPoly.from_roots(sorted(roots))
    brackets = isolate_real_roots(p, -6, 6)
    got = sorted(refine_root(p, b) for b in brackets)
    assert len(got) == len(roots)
    assert got == pytest.approx([float(r) for r in sorted(roots)], abs=1e-14)


def test_refinement_reaches_correct_rounding():
    p = UniPoly([-2, 0, 1])
    (b,) = isolate_real_roots(p, 0, 2)
    assert refine_root(p, b) == 2**0.5


def test_multiple_root_reported_with_multiplicity():
    p = UniPoly.from_roots([1, 1, 3])
    bs = isolate_real_roots(p, 0, 5)
    assert sorted(b.multiplicity for b in bs) == [1, 2]
    assert refine_root(UniPoly([0, 0, 0, 1]), isolate_real_roots(UniPoly([0, 0, 0, 1]), -1, 1)[0]) == 0.0


def test_non_isolating_bracket_rejected():
    p = UniPoly([-2, 0, 1])
    with pytest.raises(NonIsolatingBracket):
        refine_root(p, RootBracket(Fraction(2), Fraction(3), 1, 1))


def test_isolation_rejects_zero_polynomial():
    with pytest.raises(PolynomialError):
        isolate_real_roots(UniPoly(), 0, 1)


def test_cauchy_bound_contains_roots():
    p = UniPoly.from_roots([-7, 2, Fraction(9, 2)]).scale(3)
    assert p.cauchy_bound() > 7


# --- bivariate -----------------------------------------------------------

def test_parse_is_exact():
    p = parse_bipoly("-6/5 - 2/5*(x - y/5) + 49/50*y")
    assert p.coeff(0, 0) == Fraction(-6, 5)
    assert p.coeff(1, 0) == Fraction(-2, 5)
    assert p.coeff(0, 1) == Fraction(2, 25) + Fraction(49, 50)
    assert parse_bipoly("0.1*x^2") == X**2 * Fraction(1, 10)


@pytest.mark.parametrize("bad", ["1/x", "x**y", "z + 1", "x**-1", "sin(x)"])
def test_parse_rejects(bad):
    with pytest.raises(PolynomialError):
        parse_bipoly(bad)


def test_parse_with_named_constants():
    p = parse_bipoly("a*x + b", {"a": "1/3", "b": 2})
    assert p == X * Fraction(1, 3) + 2


bipolys = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), small_frac,
                          max_size=6).map(BiPoly)


@given(bipolys, bipolys, bipolys, small_frac, small_frac)
def test_compose_commutes_with_evaluation(p, u, v, x, y):
    assert p.compose(u, v)(x, y) == p(u(x, y), v(x, y))


@given(bipolys, small_frac, small_frac)
def test_float_evaluator_matches_exact(p, x, y):
    exact = p(x, y)
    assert p.to_float_function()(float(x), float(y)) == pytest.approx(float(exact), rel=1e-12, abs=1e-12)


@given(bipolys)
def test_partial_of_product_rule(p):
    q = X * p
    assert q.partial("x") == p + X * p.partial("x")


# --- resultant -----------------------------------------------------------

def test_resultant_small_case():
    assert resultant_x(X - Y, X**2 - Y) == UniPoly([0, -1, 1])


def test_resultant_identical_inputs_vanish():
    p = X**2 + Y * X - 1
    assert resultant_x(p, p).is_zero()


def test_resultant_needs_x():
    with pytest.raises(NothingToEliminate):
        resultant_x(Y + 1, Y**2)


@given(bipolys.filter(lambda q: q.degx >= 1), st.lists(small_int, min_size=1, max_size=3))
@settings(max_examples=60)
def test_resultant_with_monic_linear_factor_is_substitution(q, a_coeffs):
    # res_x(x - a(y), q) = q(a(y), y)
    a = BiPoly({(0, j): c for j, c in enumerate(a_coeffs)})
    assert resultant_x(X - a, q) == q.compose(a, Y).on_y_axis()


@given(st.lists(st.lists(small_int, min_size=4, max_size=4), min_size=4, max_size=4))
def test_bareiss_matches_float_determinant(rows):
    exact = bareiss_det([[Fraction(v) for v in r] for r in rows])
    assert float(exact) == pytest.approx(np.linalg.det(np.array(rows, float)), abs=1e-6)


def test_sylvester_shape():
    m = sylvester_matrix([1, 2, 3], [4, 5])
    assert len(m) == 3 and all(len(r) == 3 for r in m)


def test_resultant_circle_and_line():
    # meet at (1, +-2)
    assert resultant_x(X**2 + Y**2 - 5, X - 1) == UniPoly([-4, 0, 1])
