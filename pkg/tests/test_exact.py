from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from genusone.errors import InconsistentSamples
from genusone.exact import (
    Poly,
    det,
    exact_kernel,
    fraction_str,
    lagrange_interpolate,
    rank,
    rational_roots,
    solve_unique,
    to_fraction,
)

small = st.integers(-6, 6)
fracs = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def poly_strategy(nvars=2, max_terms=5, max_deg=3):
    exps = st.tuples(*[st.integers(0, max_deg)] * nvars)
    return st.dictionaries(exps, small, max_size=max_terms).map(lambda t: Poly(nvars, t))


def to_sympy(p, xs):
    return sum((sympy.Rational(c.numerator, c.denominator) * sympy.prod([x**e for x, e in zip(xs, exp)])
                for exp, c in p.terms.items()), sympy.Integer(0))


X = sympy.symbols("x0 x1")


@given(poly_strategy(), poly_strategy())
def test_product_matches_sympy(p, q):
    assert sympy.expand(to_sympy(p * q, X) - to_sympy(p, X) * to_sympy(q, X)) == 0


@given(poly_strategy(), poly_strategy())
def test_sum_and_difference(p, q):
    assert (p + q) - q == p
    assert sympy.expand(to_sympy(p - q, X) - to_sympy(p, X) + to_sympy(q, X)) == 0


@given(poly_strategy())
def test_diff_matches_sympy(p):
    for i in range(2):
        assert sympy.expand(to_sympy(p.diff(i), X) - sympy.diff(to_sympy(p, X), X[i])) == 0


@given(poly_strategy(), st.tuples(fracs, fracs))
def test_evaluation(p, pt):
    subs = {X[0]: sympy.Rational(pt[0].numerator, pt[0].denominator), X[1]: sympy.Rational(pt[1].numerator, pt[1].denominator)}
    assert p(*pt) == Fraction(str(to_sympy(p, X).subs(subs)))


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(fracs, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_sympy(m):
    want = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in r] for r in m]).det()
    assert det(m) == Fraction(str(want))


@given(st.lists(st.lists(small, min_size=5, max_size=5), min_size=1, max_size=4))
def test_kernel_is_kernel_of_full_dimension(m):
    ker = exact_kernel(m)
    for v in ker:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)
    assert len(ker) == 5 - rank(m) == 5 - sympy.Matrix(m).rank()


def test_kernel_modular_agrees():
    m = [[(3 * i + 7 * j * j) % 11 - 5 for j in range(9)] for i in range(6)]
    assert exact_kernel(m, modular=True) == exact_kernel(m, modular=False)


def test_kernel_examples():
    assert exact_kernel([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == []
    (v,) = exact_kernel([[1, 1]])
    assert v[0] == -v[1] != 0


def test_rational_roots_examples():
    assert rational_roots(Poly.from_univariate([-1, 0, 1])) == [-1, 1]
    assert rational_roots(Poly.from_univariate([0, 0, 0, 1])) == [0]


@given(st.lists(fracs, min_size=1, max_size=4), st.lists(small, min_size=0, max_size=3))
def test_rational_roots_recovers_planted(roots, extra):
    p = Poly.from_univariate([1])
    for r in roots:
        p = p * Poly.from_univariate([-r, 1])
    # an irreducible-ish factor without rational roots
    p = p * Poly.from_univariate([2, 0, 1])
    assert rational_roots(p) == sorted(set(roots))


def test_lagrange_examples():
    assert lagrange_interpolate([(0, 1), (1, 1), (2, 1)], 2) == Poly.from_univariate([1])
    assert lagrange_interpolate([(0, 0), (1, 1), (2, 4)], 2) == Poly.from_univariate([0, 0, 1])
    with pytest.raises(InconsistentSamples):
        lagrange_interpolate([(0, 0), (1, 1), (2, 4), (3, 10)], 2)


def test_solve_unique():
    assert solve_unique([[2, 1], [1, 1]], [3, 2]) == [1, 1]
    assert solve_unique([[1, 1], [1, 1]], [1, 2]) is None


def test_fraction_strings():
    assert fraction_str(Fraction(-3, 6)) == "-1/2"
    assert fraction_str(4) == "4"
    assert to_fraction("7/21") == Fraction(1, 3)
    with pytest.raises(TypeError):
        to_fraction(0.5)
