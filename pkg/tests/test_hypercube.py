import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from genusone.classical import bq_IJ
from genusone.elliptic import O, CurvePoint, WeierstrassCurve, add_points, isomorphism_scale, mul_point, neg_point
from genusone.errors import BadMarkedPoints, Degenerate, DegenerateTransform
from genusone.hypercube import (
    face_triangle,
    four_cycle,
    hc_binary_quartics,
    hc_chase,
    hc_construct,
    hc_curve_point,
    hc_desym_2sym,
    hc_desym_3sym,
    hc_invariants,
    hc_jacobian_points,
)
from genusone.tensor import RationalTensor, sym_embed, symmetry_check
from genusone.verify import doubly_symmetric_hc, random_hc_target

seeds = st.integers(0, 10**6)
E25 = WeierstrassCurve(0, 0, 0, -25, 0)
P25, Q25 = CurvePoint.affine(-4, 6), CurvePoint.affine(0, 0)


def test_binary_quartic_examples():
    arr = np.full((2, 2, 2, 2), Fraction(0), dtype=object)
    arr[0, 0, 0, 0] = arr[1, 1, 1, 1] = Fraction(1)
    assert hc_binary_quartics(RationalTensor.from_array(arr))[0] == [0, 0, 1, 0, 0]
    zero = RationalTensor.from_array(np.full((2, 2, 2, 2), Fraction(0), dtype=object))
    assert all(not any(f) for f in hc_binary_quartics(zero))
    with pytest.raises(Degenerate):
        hc_invariants(zero)


def test_construct_example():
    H = hc_construct(E25, P25, Q25)
    E, P, Pp, _ = hc_jacobian_points(H)
    assert E.j_invariant == E25.j_invariant
    u = isomorphism_scale(E, E25)
    assert u is not None
    assert (P.x, abs(P.y)) == (u**2 * -4, u**3 * 6)
    assert Pp == CurvePoint.affine(0, 0)


def test_bad_marked_points():
    with pytest.raises(BadMarkedPoints):
        hc_construct(E25, O, Q25)
    with pytest.raises(BadMarkedPoints):
        hc_construct(E25, P25, neg_point(E25, P25))


@given(seeds)
def test_invariants_of_constructed(seed):
    E, P, Q, H = random_hc_target(random.Random(seed))
    v = hc_invariants(H)
    J, JP, JQ, JR = hc_jacobian_points(H)
    assert J.j_invariant == E.j_invariant
    assert v.a6p == v.a6 + v.a2 * (v.a4p - v.a4)
    assert v.a8 == -27 * v.I and v.a12 == -27 * v.J
    assert add_points(J, add_points(J, JP, JQ), JR) == O
    # a2 is the slope of the line through the points
    assert JQ.y - JP.y == v.a2 * (JQ.x - JP.x)


@given(seeds)
def test_quartics_share_invariants(seed):
    rng = random.Random(seed)
    H = RationalTensor.from_array(np.array([Fraction(rng.randint(-3, 3)) for _ in range(16)], dtype=object).reshape((2,) * 4))
    assert len({bq_IJ(*f)[:2] for f in hc_binary_quartics(H)}) == 1


@given(seeds)
def test_desym_2sym(seed):
    H = doubly_symmetric_hc(random.Random(seed))
    try:
        inv = hc_invariants(H)
    except Degenerate:
        return
    out, g = hc_desym_2sym(H, return_matrix=True)
    assert symmetry_check(out, (1, 0, 2, 3)) and symmetry_check(out, (0, 1, 3, 2))
    assert g[0][0] * g[1][1] - g[0][1] * g[1][0] == -inv.a6p / 108


def test_desym_2sym_preserves_class():
    H = sym_embed([1, 2, -1, 0, 3, 1, 2, 0, 1], "f22")
    out = hc_desym_2sym(H)
    assert symmetry_check(out, (1, 0, 2, 3)) and symmetry_check(out, (0, 1, 3, 2))


def test_desym_zero_determinant():
    zero = RationalTensor.from_array(np.full((2, 2, 2, 2), Fraction(0), dtype=object))
    with pytest.raises(DegenerateTransform):
        hc_desym_2sym(zero)


@given(st.lists(st.integers(-3, 3), min_size=8, max_size=8))
def test_desym_3sym(pair):
    H = sym_embed(pair, "cubic-pair")
    try:
        inv = hc_invariants(H)
    except Degenerate:
        return
    out, g = hc_desym_3sym(H, return_matrix=True)
    assert all(symmetry_check(out, p) for p in [(1, 0, 2, 3), (0, 2, 1, 3), (0, 1, 3, 2)])
    assert g[0][0] * g[1][1] - g[0][1] * g[1][0] == -inv.a6 / 108


def test_doubly_symmetric_points():
    H = doubly_symmetric_hc(random.Random(3))
    E, P, Pp, Ppp = hc_jacobian_points(H)
    assert Pp == Ppp and P == mul_point(E, -2, Pp)


def _start(seed):
    rng = random.Random(seed)
    E, P, Q, H = random_hc_target(rng)
    R = add_points(E, mul_point(E, rng.randint(1, 3), P), Q)
    if R.is_zero:
        R = P
    return H, hc_curve_point(E, P, Q, R)


@given(seeds)
def test_chasing_identities(seed):
    H, start = _start(seed)
    base = hc_chase(H, start, [])
    for tri in (face_triangle(1, 2, 3, 4), face_triangle(1, 3, 2, 4), face_triangle(2, 1, 3, 4)):
        assert hc_chase(H, start, tri + tri) == base
    cycles = four_cycle(4, 1, 2, 3) + four_cycle(4, 2, 3, 1) + four_cycle(4, 3, 1, 2)
    assert hc_chase(H, start, cycles) == base


def test_single_triangle_moves_point():
    H = hc_construct(E25, P25, Q25)
    start = hc_curve_point(E25, P25, Q25, mul_point(E25, 2, P25))
    tri = face_triangle(1, 2, 3, 4)
    assert hc_chase(H, start, tri) != hc_chase(H, start, [])
