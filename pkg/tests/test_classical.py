import random
from fractions import Fraction

import numpy as np
import sympy
from hypothesis import given, strategies as st

from genusone.classical import (
    bq_hessian,
    bq_invariants,
    bq_jacobian,
    cube_disc,
    form22_hessian,
    form22_invariants,
    form22_jacobian_point,
    pfaffian4,
    quadric_pencil_invariants,
    tc_invariants,
    tc_jacobian,
)
from genusone.elliptic import isomorphism_scale
from genusone.tensor import RationalTensor, act_all, random_unimodular, sym_embed, sym_readout

small = st.integers(-5, 5)
x, y = sympy.symbols("x y")


def quartic_expr(q):
    return sum(c * x ** (4 - i) * y**i for i, c in enumerate(q))


def test_bq_example():
    inv = bq_invariants([0, 1, 0, 1, 0])
    assert (inv.I, inv.J, inv.Delta) == (-3, 0, -108)
    zero = bq_invariants([0] * 5)
    assert (zero.I, zero.J, zero.Delta) == (0, 0, 0)


@given(st.lists(small, min_size=5, max_size=5))
def test_bq_delta_against_sympy_discriminant(q):
    inv = bq_invariants(q)
    assert inv.Delta == 4 * inv.I**3 - inv.J**2
    if q[0]:
        assert inv.Delta == 27 * sympy.discriminant(quartic_expr(q), x).subs(y, 1)


def cayley_hyperdeterminant(a):
    return (a[0, 0, 0] ** 2 * a[1, 1, 1] ** 2 + a[0, 0, 1] ** 2 * a[1, 1, 0] ** 2 + a[0, 1, 0] ** 2 * a[1, 0, 1] ** 2
            + a[1, 0, 0] ** 2 * a[0, 1, 1] ** 2
            - 2 * (a[0, 0, 0] * a[0, 0, 1] * a[1, 1, 0] * a[1, 1, 1] + a[0, 0, 0] * a[0, 1, 0] * a[1, 0, 1] * a[1, 1, 1]
                   + a[0, 0, 0] * a[1, 0, 0] * a[0, 1, 1] * a[1, 1, 1] + a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 1] * a[1, 1, 0]
                   + a[0, 0, 1] * a[1, 0, 0] * a[0, 1, 1] * a[1, 1, 0] + a[0, 1, 0] * a[1, 0, 0] * a[0, 1, 1] * a[1, 0, 1])
            + 4 * (a[0, 0, 0] * a[0, 1, 1] * a[1, 0, 1] * a[1, 1, 0] + a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 0] * a[1, 1, 1]))


@given(st.lists(small, min_size=8, max_size=8))
def test_cube_disc_is_hyperdeterminant(entries):
    arr = np.array([Fraction(e) for e in entries], dtype=object).reshape(2, 2, 2)
    assert cube_disc(RationalTensor.from_array(arr))[0] == cayley_hyperdeterminant(arr)


def test_cube_examples():
    arr = np.full((2, 2, 2), Fraction(0), dtype=object)
    for i in [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]:
        arr[i] = Fraction(1)
    delta, q1, _, _ = cube_disc(RationalTensor.from_array(arr))
    assert delta == 4 and tuple(q1) == (1, 0, -1)
    e = np.full((2, 2, 2), Fraction(0), dtype=object)
    e[0, 0, 0] = Fraction(1)
    assert cube_disc(RationalTensor.from_array(e))[0] == 0


def test_bq_hessian_examples():
    assert bq_hessian([1, 0, 0, 0, 1]) == [0, 0, 331776, 0, 0]
    assert bq_hessian([0] * 5) == [0] * 5


@given(st.lists(small, min_size=5, max_size=5))
def test_bq_jacobian(q):
    inv = bq_invariants(q)
    if inv.Delta:
        E = bq_jacobian(q)
        assert not E.singular


def test_tc_nodal_and_fermat():
    assert tc_invariants([1, 0, 0, 0, 0, 0, -1, 0, 0, 0]).Delta == 0  # x^3 - y^2 z
    fermat = tc_invariants([1, 1, 1, 0, 0, 0, 0, 0, 0, 0])
    assert fermat.d4 == 0 and fermat.Delta != 0
    E = tc_jacobian([1, 1, 1, 0, 0, 0, 0, 0, 0, 0])
    assert E.j_invariant == 0


@given(st.lists(small, min_size=10, max_size=10), st.integers(0, 10**6))
def test_tc_invariance(f, seed):
    g = random_unimodular(3, random.Random(seed))
    moved = sym_readout(act_all(sym_embed(f, "tc"), [g] * 3), "tc")
    assert tc_invariants(moved) == tc_invariants(f)


def test_form22_examples():
    inv = form22_invariants([1, 0, 1, 0, 1, 0, 1, 0, 1])
    assert (inv.delta2, inv.delta3, inv.I, inv.J, inv.Delta) == (17, 0, 241, -7378, 1555200)
    assert 51**3 - 27 * 241 * 51 + 27 * 7378 == 0
    inv = form22_invariants([1, 0, 0, 0, 0, 0, 0, 0, 1])
    assert (inv.delta2, inv.delta3, inv.I, inv.J) == (8, 0, 16, 128)
    assert inv.q1 == (0, 0, -4, 0, 0)
    assert form22_invariants([0] * 9).delta2 == 0


@given(st.lists(small, min_size=9, max_size=9))
def test_form22_identity(f):
    inv = form22_invariants(f)
    assert (108 * inv.delta3) ** 2 == (3 * inv.delta2) ** 3 - 27 * inv.I * (3 * inv.delta2) - 27 * inv.J


@given(st.lists(small, min_size=9, max_size=9))
def test_form22_jacobian_point_on_curve(f):
    if form22_invariants(f).Delta:
        model, short, P = form22_jacobian_point(f)
        assert short.contains(P)
        assert isomorphism_scale(model, short) is not None


def test_form22_hessian_is_covariant_shape():
    assert form22_hessian([0] * 9) == [0] * 9
    assert len(form22_hessian([1, 2, 3, 4, 5, 6, 7, 8, 9])) == 9


def test_quadric_examples():
    ident = [[int(i == j) for j in range(4)] for i in range(4)]
    diag = [[(i + 1) * int(i == j) for j in range(4)] for i in range(4)]
    d8, d12, q = quadric_pencil_invariants(ident, diag)
    assert (d8, d12) == (13, -70)
    assert sympy.expand(quartic_expr(q) - (x + y) * (x + 2 * y) * (x + 3 * y) * (x + 4 * y)) == 0
    d8, d12, q = quadric_pencil_invariants(diag, diag)
    assert 4 * d8**3 - d12**2 == 0


def test_pfaffian4_squared_is_det():
    m = [[0, 1, 2, 3], [-1, 0, 4, 5], [-2, -4, 0, 6], [-3, -5, -6, 0]]
    assert pfaffian4(m) ** 2 == sympy.Matrix(m).det()
