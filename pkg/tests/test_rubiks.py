import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from genusone.classical import tc_invariants
from genusone.elliptic import O, CurvePoint, torsion_order
from genusone.errors import Degenerate, SingularTarget
from genusone.rubiks import (
    rc_chase,
    rc_construct,
    rc_curve_point,
    rc_invariants,
    rc_jacobian_point,
    rc_strassen,
    rc_ternary_cubics,
)
from genusone.tensor import RationalTensor, act, random_unimodular
from genusone.verify import doubly_symmetric_rc

small = st.integers(-3, 3)


def cube(slices):
    return RationalTensor.from_array(np.array([[[Fraction(v) for v in r] for r in m] for m in slices], dtype=object))


ZERO = [[0] * 3] * 3
IDENT = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_ternary_cubic_examples():
    f1, f2, _ = rc_ternary_cubics(cube([IDENT, ZERO, ZERO]))
    assert f1 == [1, 0, 0, 0, 0, 0, 0, 0, 0, 0]  # x^3
    assert not any(f2)
    assert all(not any(f) for f in rc_ternary_cubics(cube([ZERO] * 3)))


def test_strassen_examples():
    cyc = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    assert rc_strassen(cube([[[1, 0, 0], [0, 2, 0], [0, 0, 3]], IDENT, cyc])) == 2
    assert rc_strassen(cube([IDENT, ZERO, ZERO])) == 0


@given(st.integers(0, 10**6))
def test_strassen_vanishes_on_doubly_symmetric(seed):
    assert rc_strassen(doubly_symmetric_rc(random.Random(seed))) == 0


@given(st.lists(small, min_size=27, max_size=27), st.integers(0, 10**6), st.integers(0, 2))
def test_strassen_invariant_on_each_axis(entries, seed, axis):
    B = RationalTensor.from_array(np.array([Fraction(e) for e in entries], dtype=object).reshape(3, 3, 3))
    g = random_unimodular(3, random.Random(seed))
    assert rc_strassen(act(B, axis, g)) == rc_strassen(B)


def test_strassen_consistent_across_slicing_axes():
    # the middle slice along axis 0 is singular, so the value comes from another axis
    B = cube([[[1, 2, 0], [0, 1, 1], [3, 0, 1]], [[1, 0, 0], [0, 0, 0], [0, 0, 1]], [[0, 1, 0], [1, 0, 2], [0, 0, 1]]])
    g = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    assert rc_strassen(act(B, 0, g)) == rc_strassen(B)


def test_construct_anchor_round_trip():
    B = rc_construct(0, 1, 0)
    inv = rc_invariants(B)
    assert (inv.c6, inv.c12) == (0, 0) and inv.c9 != 0
    assert tc_invariants(rc_ternary_cubics(B)[0]).d4 == 0
    E, P, short, Ps = rc_jacobian_point(B)
    assert E.a == (0, 0, inv.c9, 0, 0) and P == CurvePoint(0, 0)
    assert torsion_order(E, P) == 3 and short.contains(Ps)


@pytest.mark.parametrize("target", [(1, 1, 1), (-1, 2, 3), (2, -1, 1), (0, 2, 5)])
def test_construct_round_trip(target):
    inv = rc_invariants(rc_construct(*target))
    assert (inv.c6, inv.c9, inv.c12) == tuple(Fraction(t) for t in target)


def test_construct_singular_target():
    with pytest.raises(SingularTarget):
        rc_construct(0, 0, 0)


def test_degenerate_input():
    with pytest.raises(Degenerate):
        rc_invariants(cube([IDENT, ZERO, ZERO]))


def test_doubly_symmetric_model():
    rng = random.Random(5)
    B = doubly_symmetric_rc(rng)
    inv = rc_invariants(B)
    assert inv.c9 == 0
    assert inv.Delta == 16 * inv.c12**2 * (inv.c6**2 - 4 * inv.c12)
    E = rc_jacobian_point(B)[0]
    assert E.a == (0, inv.c6, 0, inv.c12, 0)


def test_chasing_on_anchor():
    B = rc_construct(0, 1, 0)
    for R in (O, CurvePoint.affine(0, 0), CurvePoint.affine(0, -1)):
        start = rc_curve_point(0, 1, 0, R)
        base = rc_chase(B, start, [])
        assert base[0] == 1
        assert rc_chase(B, start, ["cw", "ccw"]) == base
        assert rc_chase(B, start, ["cw"] * 3) == base
        assert rc_chase(B, start, ["cw"]) != base
        assert rc_chase(B, start, ["1>2", "2>3", "3>1"]) == rc_chase(B, start, ["cw"])
