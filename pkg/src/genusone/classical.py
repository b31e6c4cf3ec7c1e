"""Invariants and covariants of the classical small spaces.

Binary quartics, 2x2x2 cubes, ternary cubics, bidegree (2,2) forms, pencils
of quaternary quadrics and Pfaffian models of degree five.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .elliptic import CurvePoint, WeierstrassCurve
from .errors import Degenerate, ShapeMismatch
from .exact import Poly, det, to_fraction
from .tensor import RationalTensor, form_coeffs, form_poly

__all__ = [
    "BinaryQuarticInvariants",
    "TernaryCubicInvariants",
    "Form22Invariants",
    "bq_invariants",
    "bq_IJ",
    "bq_jacobian",
    "cube_disc",
    "quadratic_disc",
    "bq_hessian",
    "tc_invariants",
    "tc_hessian",
    "tc_jacobian",
    "form22_invariants",
    "form22_jacobian_point",
    "form22_hessian",
    "quadric_pencil_invariants",
    "pfaffian_quadrics",
    "pfaffian4",
]


@dataclass(frozen=True)
class BinaryQuarticInvariants:
    I: Fraction
    J: Fraction
    Delta: Fraction


@dataclass(frozen=True)
class TernaryCubicInvariants:
    d4: Fraction
    d6: Fraction
    Delta: Fraction


@dataclass(frozen=True)
class Form22Invariants:
    delta2: Fraction
    delta3: Fraction
    delta4: Fraction
    I: Fraction
    J: Fraction
    Delta: Fraction
    q1: tuple
    q2: tuple


def _coeffs(q, n):
    if isinstance(q, Poly):
        return q
    q = list(q)
    if len(q) != n:
        raise ShapeMismatch(f"expected {n} coefficients, got {len(q)}")
    return q


# ---------------------------------------------------------------- binary quartics


def bq_IJ(a, b, c, d, e):
    """I and J of a x^4 + b x^3y + c x^2y^2 + d xy^3 + e y^4 over any ring."""
    I = 12 * a * e - 3 * b * d + c * c
    J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c
    return I, J


def bq_invariants(q) -> BinaryQuarticInvariants:
    q = _coeffs(q, 5)
    if isinstance(q, Poly):
        q = form_coeffs(q, "bq")
    a, b, c, d, e = (to_fraction(x) for x in q)
    I, J = bq_IJ(a, b, c, d, e)
    return BinaryQuarticInvariants(I, J, 4 * I**3 - J * J)


def bq_jacobian(q) -> WeierstrassCurve:
    inv = bq_invariants(q)
    if inv.Delta == 0:
        raise Degenerate("binary quartic has a repeated root")
    return WeierstrassCurve(0, 0, 0, -27 * inv.I, -27 * inv.J)


# ---------------------------------------------------------------- 2x2x2 cubes


def quadratic_disc(A, B, C):
    return B * B - 4 * A * C


def _slice_pencil(arr, axis):
    """Coefficients (A, B, C) of det(M x + N y) for the slicing along ``axis``."""

    def entry(k, i, j):
        idx = [i, j]
        idx.insert(axis, k)
        return arr[tuple(idx)]

    M = [[entry(0, i, j) for j in range(2)] for i in range(2)]
    N = [[entry(1, i, j) for j in range(2)] for i in range(2)]
    A = M[0][0] * M[1][1] - M[0][1] * M[1][0]
    C = N[0][0] * N[1][1] - N[0][1] * N[1][0]
    B = M[0][0] * N[1][1] + N[0][0] * M[1][1] - M[0][1] * N[1][0] - N[0][1] * M[1][0]
    return A, B, C


def cube_disc(A):
    """(Delta, Q1, Q2, Q3) for a 2x2x2 cube.

    Q_l = det(M_l x + N_l y) is returned as its coefficient triple; Delta is the
    common discriminant. Entries may be Fractions or Polys, which lets the
    Hessian constructions feed in cubes of linear forms.
    """
    if isinstance(A, RationalTensor):
        if A.shape != (2, 2, 2):
            raise ShapeMismatch("cube_disc needs a 2x2x2 tensor")
        arr = A.array()
    else:
        arr = A
    qs = [_slice_pencil(arr, axis) for axis in range(3)]
    return quadratic_disc(*qs[0]), qs[0], qs[1], qs[2]


def bq_hessian(q):
    """Quartic disc(d^3 q / dw_i dw_j dw_k) as a coefficient list."""
    p = form_poly(_coeffs(q, 5), "bq")
    cube = {}
    for idx in product(range(2), repeat=3):
        r = p
        for i in idx:
            r = r.diff(i)
        cube[idx] = r
    delta = cube_disc(cube)[0]
    if isinstance(delta, Poly):
        return form_coeffs(delta, "bq")
    return [Fraction(0)] * 5


# ---------------------------------------------------------------- ternary cubics


def tc_invariants(f, calibration=None) -> TernaryCubicInvariants:
    """Calibrated d4, d6 and Delta with 1728 Delta = d4^3 - d6^2."""
    from .deriver import tc_SdTd  # late import: deriver depends on this module

    d4, d6 = tc_SdTd(list(_coeffs(f, 10)), calibration)
    return TernaryCubicInvariants(d4, d6, (d4**3 - d6 * d6) / 1728)


def tc_jacobian(f, calibration=None) -> WeierstrassCurve:
    inv = tc_invariants(f, calibration)
    if inv.Delta == 0:
        raise Degenerate("ternary cubic is singular")
    return WeierstrassCurve(0, 0, 0, -27 * inv.d4, -54 * inv.d6)


def tc_hessian(f):
    """det of the matrix of second partials, as a coefficient list."""
    p = form_poly(_coeffs(f, 10), "tc")
    h = det([[p.diff(i).diff(j) for j in range(3)] for i in range(3)])
    if not isinstance(h, Poly):
        return [Fraction(0)] * 10
    return form_coeffs(h, "tc")


# ---------------------------------------------------------------- (2,2) forms


def _f22_quadratics(a):
    """Binary quartics q1 (in w) and q2 (in x) as coefficient lists."""
    a22, a32, a42, a23, a33, a43, a24, a34, a44 = a
    w = Poly.gens(2)
    A = a22 * w[0] ** 2 + a32 * w[0] * w[1] + a42 * w[1] ** 2
    B = a23 * w[0] ** 2 + a33 * w[0] * w[1] + a43 * w[1] ** 2
    C = a24 * w[0] ** 2 + a34 * w[0] * w[1] + a44 * w[1] ** 2
    q1 = B * B - 4 * A * C
    A2 = a22 * w[0] ** 2 + a23 * w[0] * w[1] + a24 * w[1] ** 2
    B2 = a32 * w[0] ** 2 + a33 * w[0] * w[1] + a34 * w[1] ** 2
    C2 = a42 * w[0] ** 2 + a43 * w[0] * w[1] + a44 * w[1] ** 2
    q2 = B2 * B2 - 4 * A2 * C2
    return form_coeffs(q1, "bq"), form_coeffs(q2, "bq")


def form22_invariants(f) -> Form22Invariants:
    a = [to_fraction(x) for x in _coeffs(f, 9)]
    a22, a32, a42, a23, a33, a43, a24, a34, a44 = a
    d2 = a33 * a33 - 4 * a32 * a34 + 8 * a24 * a42 - 4 * a23 * a43 + 8 * a22 * a44
    d3 = (a24 * a33 * a42 - a23 * a34 * a42 - a24 * a32 * a43
          + a22 * a34 * a43 + a23 * a32 * a44 - a22 * a33 * a44)
    q1, q2 = _f22_quadratics(a)
    inv = bq_invariants(q1)
    return Form22Invariants(d2, d3, inv.I, inv.I, inv.J, inv.Delta, tuple(q1), tuple(q2))


def form22_jacobian_point(f):
    """(model y^2 + a3 y = x^3 + a2 x^2 + a4 x, short model, point on the short model)."""
    inv = form22_invariants(f)
    if inv.Delta == 0:
        raise Degenerate("(2,2) form is degenerate")
    model = WeierstrassCurve(0, 9 * inv.delta2, 216 * inv.delta3, 27 * inv.delta2**2 - 27 * inv.delta4, 0)
    short = WeierstrassCurve(0, 0, 0, -27 * inv.I, -27 * inv.J)
    point = CurvePoint(3 * inv.delta2, 108 * inv.delta3)
    return model, short, point


def form22_hessian(f):
    """det(d^2 f / dw_i dx_j) as a (2,2) form coefficient list."""
    p = form_poly(_coeffs(f, 9), "f22")  # variables w1, w2, x1, x2
    h = det([[p.diff(i).diff(2 + j) for j in range(2)] for i in range(2)])
    if not isinstance(h, Poly):
        return [Fraction(0)] * 9
    return form_coeffs(h, "f22")


# ---------------------------------------------------------------- quadrics and Pfaffians


def quadric_pencil_invariants(A, B):
    """(d8, d12, q) for the pencil of quaternary quadrics, q = det(A x + B y)."""
    A = [[to_fraction(v) for v in row] for row in A]
    B = [[to_fraction(v) for v in row] for row in B]
    for M in (A, B):
        if len(M) != 4 or any(len(r) != 4 for r in M):
            raise ShapeMismatch("4x4 matrices expected")
        if any(M[i][j] != M[j][i] for i in range(4) for j in range(4)):
            raise ShapeMismatch("matrices must be symmetric")
    x, y = Poly.gens(2)
    q = det([[A[i][j] * x + B[i][j] * y for j in range(4)] for i in range(4)])
    coeffs = form_coeffs(q, "bq") if isinstance(q, Poly) else [Fraction(0)] * 5
    inv = bq_invariants(coeffs)
    return inv.I, inv.J, coeffs


def pfaffian4(m):
    """Pfaffian of a 4x4 skew matrix: af - be + cd."""
    a, b, c = m[0][1], m[0][2], m[0][3]
    d, e = m[1][2], m[1][3]
    f = m[2][3]
    return a * f - b * e + c * d


def pfaffian_quadrics(phi: RationalTensor):
    """The five principal 4x4 sub-Pfaffians of sum_i v_i phi[i], as Polys in v."""
    if phi.shape != (5, 5, 5):
        raise ShapeMismatch("a 5 x (5x5 skew) tensor is expected")
    arr = phi.array()
    for i in range(5):
        for j in range(5):
            for k in range(5):
                if arr[i, j, k] != -arr[i, k, j]:
                    raise ShapeMismatch("slices must be skew-symmetric")
    v = Poly.gens(5)
    M = [[sum((arr[i, j, k] * v[i] for i in range(5)), Poly.const(0, 5)) for k in range(5)] for j in range(5)]
    out = []
    for drop in range(5):
        keep = [r for r in range(5) if r != drop]
        out.append(pfaffian4([[M[r][c] for c in keep] for r in keep]))
    return out
