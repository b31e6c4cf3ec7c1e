import random
from fractions import Fraction
from itertools import product

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from genusone.errors import IndexOutOfRange, ShapeMismatch
from genusone.tensor import (
    TC_EXPONENTS,
    RationalTensor,
    act,
    act_all,
    form_poly,
    random_unimodular,
    skew_embed,
    slice_tensor,
    sym_embed,
    sym_readout,
    symmetry_check,
)

small = st.integers(-5, 5)


def tensor(shape, entries):
    return RationalTensor.from_array(np.array([Fraction(e) for e in entries], dtype=object).reshape(shape))


def unit(shape, index):
    arr = np.full(shape, Fraction(0), dtype=object)
    arr[index] = Fraction(1)
    return RationalTensor.from_array(arr)


def test_slice_examples():
    e = unit((2, 2, 2, 2), (0, 0, 0, 0))
    assert slice_tensor(e, 0, 0) == unit((2, 2, 2), (0, 0, 0))
    assert slice_tensor(e, 0, 1).is_zero()
    b = unit((3, 3, 3), (0, 1, 2))
    assert slice_tensor(b, 1, 1) == unit((3, 3), (0, 2))
    with pytest.raises(IndexOutOfRange):
        slice_tensor(b, 3, 0)


def test_json_round_trip():
    T = tensor((2, 2, 2), ["1/2", 0, -3, 4, 5, 6, 7, "8/3"])
    data = T.to_json()
    assert data["entries"][0] == "1/2" and data["entries"][-1] == "8/3"
    assert RationalTensor.from_json(data) == T


@given(st.lists(small, min_size=8, max_size=8), st.integers(0, 2), st.integers(0, 10**6))
def test_act_composes(entries, axis, seed):
    rng = random.Random(seed)
    T = tensor((2, 2, 2), entries)
    g, h = random_unimodular(2, rng), random_unimodular(2, rng)
    gh = [[sum(g[i][k] * h[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    assert act(act(T, axis, h), axis, g) == act(T, axis, gh)
    ident = [[1, 0], [0, 1]]
    assert act(T, axis, ident) == T


@given(st.integers(0, 10**6), st.integers(2, 4))
def test_random_unimodular_det(seed, n):
    g = random_unimodular(n, random.Random(seed))
    assert sympy.Matrix(g).det() == 1


@given(st.lists(small, min_size=5, max_size=5))
def test_sym_embed_round_trip(coeffs):
    T = sym_embed(coeffs, "bq")
    assert sym_readout(T, "bq") == coeffs
    assert all(symmetry_check(T, p) for p in [(1, 0, 2, 3), (0, 2, 1, 3), (0, 1, 3, 2)])


@given(st.lists(small, min_size=10, max_size=10))
def test_tc_embed_matches_sympy_form(coeffs):
    T = sym_embed(coeffs, "tc").array()
    xs = sympy.symbols("x y z")
    lhs = sum(T[i, j, k] * xs[i] * xs[j] * xs[k] for i, j, k in product(range(3), repeat=3))
    rhs = sum(c * sympy.prod([x**e for x, e in zip(xs, exp)]) for c, exp in zip(coeffs, TC_EXPONENTS))
    assert sympy.expand(lhs - rhs) == 0


def test_embed_examples():
    H = sym_embed([1, 0, 0, 0, 1], "bq").array()
    assert H[0, 0, 0, 0] == H[1, 1, 1, 1] == 1
    assert sum(H.flatten()) == 2
    F = sym_embed([1, 1, 1, 0, 0, 0, 0, 0, 0, 0], "tc").array()
    assert F[0, 0, 0] == F[1, 1, 1] == F[2, 2, 2] == 1 and sum(F.flatten()) == 3
    Q = sym_embed([1, 4, 0, 0, 0], "bq").array()
    assert Q[0, 0, 0, 0] == 1 and Q[0, 0, 0, 1] == Q[1, 0, 0, 0] == 1


def test_act_matches_substitution():
    # acting by g on every axis of a symmetric tensor substitutes x -> g^T x in the form
    q = [1, -2, 3, 0, 5]
    g = [[2, 1], [1, 1]]
    moved = sym_readout(act_all(sym_embed(q, "bq"), [g] * 4), "bq")
    x, y = sympy.symbols("x y")
    f = form_poly(q, "bq")
    expr = sum(c * x**e[0] * y**e[1] for e, c in f.terms.items())
    sub = sympy.Poly(sympy.expand(expr.subs({x: g[0][0] * x + g[1][0] * y, y: g[0][1] * x + g[1][1] * y}, simultaneous=True)), x, y)
    assert moved == [sub.coeff_monomial(x ** (4 - i) * y**i) for i in range(5)]


def test_skew_embed_examples():
    S = skew_embed(unit((2, 2, 2, 2), (0, 0, 0, 0)), "2,2").array()
    assert S[0, 0, 0, 2] == 1 and S[0, 0, 2, 0] == -1
    assert skew_embed(RationalTensor.from_array(np.full((3, 3, 3), Fraction(0), dtype=object)), "3,3").is_zero()
    with pytest.raises(ShapeMismatch):
        skew_embed(unit((3, 3, 3), (0, 0, 0)), "2,2")


@given(st.lists(small, min_size=16, max_size=16))
def test_skew_embeds_are_alternating(entries):
    H = tensor((2, 2, 2, 2), entries)
    A = skew_embed(H, "2,2").array()
    assert all(A[i, j, k, l] == -A[i, j, l, k] for i, j, k, l in product(range(2), range(2), range(4), range(4)))
    W = skew_embed(H, "2,2,2").array()
    assert all(W[i, a, b, c] == -W[i, b, a, c] == -W[i, a, c, b] for i in range(2) for a, b, c in product(range(6), repeat=3))


def test_symmetry_check():
    assert not symmetry_check(unit((2, 2, 2), (0, 0, 1)), (0, 2, 1))
    assert symmetry_check(unit((2, 2, 2), (0, 1, 1)), (0, 2, 1))
