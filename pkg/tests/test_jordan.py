import random
from fractions import Fraction
from itertools import product

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from genusone.errors import AlgebraMismatch
from genusone.hypercube import hc_binary_quartics
from genusone.jordan import (
    COMPOSITION_ALGEBRAS,
    JORDAN_ALGEBRAS,
    HermCube,
    JordanElement,
    degree2_disc_quartic,
    degree3_norm_cubic,
    fts_disc,
    fts_flat,
    fts_from_tensor,
    fts_norm4,
    fts_pairing,
    fts_rank,
    fts_rank_one,
    fts_specialize,
    jordan_algebra,
)
from genusone.rubiks import rc_ternary_cubics
from genusone.tensor import RationalTensor, act_all, random_unimodular, sym_embed
from genusone.verify import random_hermcube, random_jordan

ALGEBRAS = sorted(JORDAN_ALGEBRAS)
seeds = st.integers(0, 10**6)


@pytest.mark.parametrize("name", sorted(COMPOSITION_ALGEBRAS))
@given(seed=seeds)
def test_composition_norm_multiplicative(name, seed):
    A = COMPOSITION_ALGEBRAS[name]
    rng = random.Random(seed)
    x, y = ([Fraction(rng.randint(-4, 4)) for _ in range(A.dim)] for _ in range(2))
    assert A.norm(A.mul(x, y)) == A.norm(x) * A.norm(y)
    assert list(A.mul(x, A.conj(x))) == [A.norm(x) * c for c in A.one]


@pytest.mark.parametrize("name", ALGEBRAS)
@given(seed=seeds)
def test_jordan_identities(name, seed):
    alg = JORDAN_ALGEBRAS[name]
    rng = random.Random(seed)
    x, y = random_jordan(rng, alg), random_jordan(rng, alg)
    e = JordanElement.identity(alg)
    assert x.sharp().sharp() == x * x.norm()
    assert alg.sharp(x.coords) == alg.sharp_by_duality(x.coords)
    assert e.cross(x) == e * x.trace() - x
    x2 = x.bullet(x)
    assert (x2.bullet(x) - x2 * x.trace() + x * x.spur() - e * x.norm()).is_zero()
    assert x.trace_form(y) == x.trace() * y.trace() - x.spur_form(y)


def test_h3_examples():
    alg = jordan_algebra("H3(unarions)")
    x = JordanElement(alg, [1, 2, 3, 0, 0, 0])
    assert (x.norm(), x.trace(), x.spur()) == (6, 6, 11)
    assert x.sharp() == JordanElement(alg, [6, 3, 2, 0, 0, 0])
    assert x.sharp().sharp() == x * 6
    e = JordanElement.identity(alg)
    assert e.norm() == 1 and e.sharp() == e
    k3 = jordan_algebra("K3")
    assert JordanElement(k3, [2, 3, 5]).sharp() == JordanElement(k3, [15, 10, 6])
    with pytest.raises(AlgebraMismatch):
        jordan_algebra("H3(nonsense)")


@given(st.lists(st.integers(-5, 5), min_size=9, max_size=9), st.lists(st.integers(-5, 5), min_size=9, max_size=9))
def test_mat3_is_matrix_algebra(m, n):
    M, N = (sympy.Matrix(3, 3, v) for v in (m, n))
    x = JordanElement.from_matrix(M.tolist())
    y = JordanElement.from_matrix(N.tolist())
    assert x.norm() == M.det()
    assert sympy.Matrix(x.sharp().to_matrix()) == M.adjugate()
    assert x.trace_form(y) == (M * N).trace()
    assert sympy.Matrix(x.bullet(y).to_matrix()) == (M * N + N * M) / 2


def test_flat_examples():
    k = jordan_algebra("K")
    A = HermCube.make(k, 1, [0], [0], 1)
    assert fts_disc(A) == 1
    assert fts_flat(A) == HermCube.make(k, 1, [0], [0], -1)
    assert fts_flat(fts_flat(A)) == A * -1
    for alg in JORDAN_ALGEBRAS.values():
        F = fts_flat(HermCube.epsilon(alg))
        assert (F.a, F.d) == (1, -1) and F.b.is_zero() and F.c.is_zero()


@pytest.mark.parametrize("name", ALGEBRAS)
@given(seed=seeds)
def test_fts_identities(name, seed):
    rng = random.Random(seed)
    A, B = random_hermcube(rng, name), random_hermcube(rng, name)
    d = fts_disc(A)
    assert fts_flat(fts_flat(A)) == A * (-d * d)
    assert fts_norm4(A, A) == d
    assert fts_pairing(fts_flat(A), B) == 2 * fts_norm4(A, B)
    assert fts_pairing(A, B) == -fts_pairing(B, A)


@pytest.mark.parametrize("name", ALGEBRAS)
def test_rank_one_family(name):
    rng = random.Random(1)
    x = random_jordan(rng, name)
    R = fts_rank_one(x, Fraction(3, 2))
    assert fts_flat(R).is_zero() and fts_disc(R) == 0
    assert fts_rank(R) == 1
    assert fts_rank(HermCube.epsilon(JORDAN_ALGEBRAS[name])) == 4
    assert fts_rank(HermCube.zero(JORDAN_ALGEBRAS[name])) == 0


@given(st.lists(st.integers(-3, 3), min_size=8, max_size=8), seeds)
def test_k3_specialization(entries, seed):
    k3 = jordan_algebra("K3")
    A = HermCube.from_coords(k3, entries)
    T = fts_specialize(A, "cube")
    assert fts_from_tensor(T, "cube") == A
    g = [random_unimodular(2, random.Random(seed + i)) for i in range(3)]
    assert fts_disc(fts_from_tensor(act_all(T, g), "cube")) == fts_disc(A)


def test_wedge3_epsilon():
    W = fts_specialize(HermCube.epsilon(jordan_algebra("H3(binarions)")), "wedge3").array()
    nonzero = {idx: W[idx] for idx in product(range(6), repeat=3) if W[idx]}
    assert nonzero[(0, 1, 2)] == 1 and nonzero[(3, 4, 5)] == 1
    assert len(nonzero) == 12  # two trivectors, six orderings each


def test_wedge3_disc_invariant():
    rng = random.Random(7)
    A = random_hermcube(rng, "H3(binarions)", 2)
    g = random_unimodular(6, rng, steps=4, bound=1)
    moved = act_all(fts_specialize(A, "wedge3"), [g] * 3)
    assert fts_disc(fts_from_tensor(moved, "wedge3")) == fts_disc(A)


def test_2wedge2_disc_invariant():
    rng = random.Random(8)
    A = random_hermcube(rng, "KxMat2", 2)
    T = fts_specialize(A, "2wedge2")
    g4 = random_unimodular(4, rng)
    g2 = random_unimodular(2, rng)
    moved = act_all(T, [g2, g4, g4])
    assert fts_from_tensor(T, "2wedge2") == A
    assert fts_disc(fts_from_tensor(moved, "2wedge2")) == fts_disc(A)


def test_specialize_mismatch():
    with pytest.raises(AlgebraMismatch):
        fts_specialize(HermCube.epsilon(jordan_algebra("K")), "cube")
    with pytest.raises(AlgebraMismatch):
        fts_specialize(HermCube.epsilon(jordan_algebra("K3")), "tesseract")


def test_norm_cubic_examples():
    alg = jordan_algebra("H3(unarions)")
    units = [JordanElement(alg, [int(i == j) for j in range(3)] + [0, 0, 0]) for i in range(3)]
    assert degree3_norm_cubic(units) == [0] * 9 + [1]  # xyz
    zero = JordanElement.zero(alg)
    assert degree3_norm_cubic([zero] * 3) == [0] * 10


@given(st.lists(st.integers(-3, 3), min_size=27, max_size=27))
def test_norm_cubic_of_rubiks_slices(entries):
    B = RationalTensor.from_array(np.array([Fraction(e) for e in entries], dtype=object).reshape(3, 3, 3))
    phi = [JordanElement.from_matrix(B.array()[k].tolist()) for k in range(3)]
    assert degree3_norm_cubic(phi) == list(rc_ternary_cubics(B)[0])


@given(st.lists(st.integers(-3, 3), min_size=16, max_size=16))
def test_disc_quartic_of_hypercube_slices(entries):
    H = RationalTensor.from_array(np.array([Fraction(e) for e in entries], dtype=object).reshape((2,) * 4))
    phi = [fts_from_tensor(RationalTensor.from_array(H.array()[k]), "cube") for k in range(2)]
    assert degree2_disc_quartic(phi) == list(hc_binary_quartics(H)[0])


@given(st.lists(st.integers(-3, 3), min_size=8, max_size=8))
def test_disc_quartic_of_cubic_pair(pair):
    k = jordan_algebra("K")
    cubes = [HermCube.make(k, p[0], [Fraction(p[1], 3)], [Fraction(p[2], 3)], p[3]) for p in (pair[:4], pair[4:])]
    H = sym_embed(pair, "cubic-pair")
    assert degree2_disc_quartic(cubes) == list(hc_binary_quartics(H)[0])
    zero = HermCube.zero(k)
    assert degree2_disc_quartic([cubes[0], zero]) == [fts_disc(cubes[0]), 0, 0, 0, 0]
