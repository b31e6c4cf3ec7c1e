"""2x2x2x2 hypercubes: covariant quartics, invariants, inverse construction, chasing."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .classical import bq_IJ, cube_disc
from .elliptic import CurvePoint, WeierstrassCurve, add_points, neg_point
from .errors import (
    BadMarkedPoints,
    Degenerate,
    DegenerateTransform,
    InterpolationFailed,
    InconsistentSamples,
    KernelRankUnexpected,
    NotOnCurve,
    ShapeMismatch,
    SingularTarget,
)
from .exact import CurveFunction, Poly, det, exact_kernel, express_in_basis, lagrange_interpolate, to_fraction
from .tensor import RationalTensor, act, form_coeffs

__all__ = [
    "HypercubeInvariants",
    "hc_binary_quartics",
    "hc_IJ",
    "hc_22form",
    "hc_invariants",
    "hc_jacobian_points",
    "hc_construct",
    "hc_curve_point",
    "hc_desym_2sym",
    "hc_desym_3sym",
    "hc_chase",
    "face_triangle",
    "four_cycle",
]


@dataclass(frozen=True)
class HypercubeInvariants:
    a2: Fraction
    a4: Fraction
    a4p: Fraction
    a6: Fraction
    a6p: Fraction
    a4pp: Fraction
    a6pp: Fraction
    a8: Fraction
    a12: Fraction
    I: Fraction
    J: Fraction
    Delta: Fraction


def _check(H):
    if not isinstance(H, RationalTensor) or H.shape != (2, 2, 2, 2):
        raise ShapeMismatch("a 2x2x2x2 tensor is expected")
    return H.array()


def hc_binary_quartics(H):
    """f_i = disc(A_i x + B_i y) for the four slicings, as coefficient lists."""
    arr = _check(H)
    x, y = Poly.gens(2)
    out = []
    for axis in range(4):
        A = np.take(arr, 0, axis=axis)
        B = np.take(arr, 1, axis=axis)
        cube = np.empty((2, 2, 2), dtype=object)
        for idx in product(range(2), repeat=3):
            cube[idx] = A[idx] * x + B[idx] * y
        f = cube_disc(cube)[0]
        out.append(form_coeffs(f, "bq") if isinstance(f, Poly) else [Fraction(0)] * 5)
    return tuple(out)


def hc_IJ(H):
    """(I, J, Delta) of the first binary quartic; shared by all four."""
    f1 = hc_binary_quartics(H)[0]
    I, J = bq_IJ(*f1)
    return I, J, 4 * I**3 - J * J


def hc_22form(H, axes=(0, 1)):
    """det H(w, x, ., .) as a (2,2) form in (w, x) for the chosen pair of axes."""
    arr = _check(H)
    i, j = axes
    if i == j or not (0 <= i < 4 and 0 <= j < 4):
        raise ShapeMismatch("two distinct axes are required")
    k, l = (a for a in range(4) if a not in (i, j))
    w1, w2, x1, x2 = Poly.gens(4)
    w, x = (w1, w2), (x1, x2)
    m = [[Poly.const(0, 4) for _ in range(2)] for _ in range(2)]
    for idx in product(range(2), repeat=4):
        m[idx[k]][idx[l]] = m[idx[k]][idx[l]] + arr[idx] * w[idx[i]] * x[idx[j]]
    f = det(m)
    return form_coeffs(f, "f22") if isinstance(f, Poly) else [Fraction(0)] * 9


# ---------------------------------------------------------------- inverse construction


def _g(E, Q):
    """Section of O(O + Q): (y + yQ + a1 xQ + a3) / (x - xQ)."""
    x = CurveFunction.x(E)
    y = CurveFunction.y(E)
    return (y + (Q.y + E.a1 * Q.x + E.a3)) / (x - Q.x)


def _check_marked(E, P, Q):
    if E.singular:
        raise SingularTarget("target curve is singular")
    for pt in (P, Q):
        if not E.contains(pt):
            raise BadMarkedPoints(f"{pt!r} is not on the curve")
    if P.is_zero or Q.is_zero:
        raise BadMarkedPoints("marked points must be nonzero")
    if P == Q:
        raise BadMarkedPoints("marked points must be distinct")
    if add_points(E, P, Q).is_zero:
        raise BadMarkedPoints("the third point P'' = -P - P' is zero")


def hc_construct(E: WeierstrassCurve, P: CurvePoint, Q: CurvePoint) -> RationalTensor:
    """Kernel of H0(O(2O)) x H0(O(O+P)) x H0(O(O-P')) -> H0(O(4O+P-P')).

    The third bundle is O(O - P') rather than O(O + P'): with that choice the
    points read off by the invariants are exactly P and P'.
    """
    _check_marked(E, P, Q)
    one = CurveFunction(E, 1)
    x = CurveFunction.x(E)
    y = CurveFunction.y(E)
    gP, gQ = _g(E, P), _g(E, neg_point(E, Q))
    L1, L2, L3 = [one, x], [one, gP], [one, gQ]
    target = [one, x, y, x * x, gP, gQ]
    rows = []
    for s, t, u in product(L1, L2, L3):
        coords = express_in_basis(s * t * u, target)
        if coords is None:
            raise KernelRankUnexpected("product left the expected section space")
        rows.append(coords)
    ker = exact_kernel([[rows[r][c] for r in range(8)] for c in range(6)])
    if len(ker) != 2:
        raise KernelRankUnexpected(f"kernel has dimension {len(ker)}")
    arr = np.empty((2, 2, 2, 2), dtype=object)
    for l, k in enumerate(ker):
        for r, idx in enumerate(product(range(2), repeat=3)):
            arr[idx + (l,)] = k[r]
    return RationalTensor.from_array(arr)


# ---------------------------------------------------------------- invariants


def _a6_from_relations(a2, a4, a4p, a8):
    # a6 + a6' from the a8 relation, a6' - a6 from the slope
    total = (a8 + a4 * a4 + a4 * a4p + a4p * a4p) / a2
    return (total - a2 * (a4p - a4)) / 2


_PENCIL_DIRECTION = {}


def _pencil_direction():
    from .deriver import HC_ANCHORS, hc_anchor_data

    if "H0" not in _PENCIL_DIRECTION:
        _PENCIL_DIRECTION["H0"] = hc_anchor_data(HC_ANCHORS[:1])[0][0]
    return _PENCIL_DIRECTION["H0"]


def _a6_by_pencil(H, cal):
    """a6 at a2 = 0: interpolate the degree 6 polynomial a6(H + t H0)."""
    from .deriver import hc_basic

    H0 = _pencil_direction()
    samples = []
    t = 0
    while len(samples) < 9 and t < 60:
        t += 1
        member = H + H0 * t
        a2, a4, a4p = hc_basic(member, cal)
        if a2 == 0:
            continue
        I, _, _ = hc_IJ(member)
        samples.append((Fraction(t), _a6_from_relations(a2, a4, a4p, -27 * I)))
    if len(samples) < 9:
        raise InterpolationFailed("not enough pencil members with a2 != 0")
    try:
        return lagrange_interpolate(samples, 6)(Fraction(0))
    except InconsistentSamples as exc:
        raise InterpolationFailed(str(exc)) from exc


def hc_invariants(H, calibration=None) -> HypercubeInvariants:
    from .deriver import get_calibration, hc_basic

    _check(H)
    cal = calibration or get_calibration()
    I, J, Delta = hc_IJ(H)
    if Delta == 0:
        raise Degenerate("the hypercube is degenerate")
    a2, a4, a4p = hc_basic(H, cal)
    a8, a12 = -27 * I, -27 * J
    if a2 != 0:
        a6 = _a6_from_relations(a2, a4, a4p, a8)
    else:
        a6 = _a6_by_pencil(H, cal)
    a6p = a6 + a2 * (a4p - a4)
    a4pp = a2 * a2 - a4 - a4p
    a6pp = a2**3 - 3 * (a2 * a4 - a6) - a6 - a6p
    return HypercubeInvariants(a2, a4, a4p, a6, a6p, a4pp, a6pp, a8, a12, I, J, Delta)


def hc_jacobian_points(H, calibration=None):
    """(y^2 = x^3 + a8 x + a12, P, P', P'')."""
    inv = hc_invariants(H, calibration)
    E = WeierstrassCurve(0, 0, 0, inv.a8, inv.a12)
    return (
        E,
        CurvePoint(inv.a4, inv.a6),
        CurvePoint(inv.a4p, inv.a6p),
        CurvePoint(inv.a4pp, inv.a6pp),
    )


# ---------------------------------------------------------------- curve points and chasing


def _value_at(E, Q, R):
    """g_Q(R) as a projective pair (1, value) or (0, 1) at a pole."""
    if R.is_zero or R == Q:
        return (Fraction(0), Fraction(1))
    if R.x != Q.x:
        return (Fraction(1), (R.y + Q.y + E.a1 * Q.x + E.a3) / (R.x - Q.x))
    # R = -Q != Q: the quotient extends by its tangent slope
    num = 3 * R.x * R.x + 2 * E.a2 * R.x + E.a4 - E.a1 * R.y
    return (Fraction(1), num / (2 * R.y + E.a1 * R.x + E.a3))


def hc_curve_point(E, P, Q, R):
    """Image of R in C123 for the hypercube hc_construct(E, P, Q)."""
    _check_marked(E, P, Q)
    if not E.contains(R):
        raise NotOnCurve(f"{R!r} is not on the curve")
    w = (Fraction(0), Fraction(1)) if R.is_zero else (Fraction(1), R.x)
    return w, _value_at(E, P, R), _value_at(E, neg_point(E, Q), R)


def _normalize(v):
    lead = next(c for c in v if c != 0)
    return tuple(c / lead for c in v)


def _contract_axes(arr, fixed):
    """Contract arr with vectors on the axes in ``fixed`` (a dict axis -> vector)."""
    out = arr
    for axis in sorted(fixed, reverse=True):
        v = fixed[axis]
        out = sum((np.take(out, i, axis=axis) * v[i] for i in range(2)), start=np.zeros(out.shape[:axis] + out.shape[axis + 1:], dtype=object))
    return out


def _parse_triple(move):
    try:
        axes = tuple(sorted(int(ch) - 1 for ch in str(move)))
    except ValueError:
        raise ShapeMismatch(f"unknown move {move!r}") from None
    if len(axes) != 3 or len(set(axes)) != 3 or not all(0 <= a < 4 for a in axes):
        raise ShapeMismatch(f"unknown move {move!r}")
    return axes


def face_triangle(i, j, k, l):
    """Moves for C_ijk -> C_ikl -> C_ijl -> C_ijk (1-based labels)."""
    return ["".join(map(str, sorted(t))) for t in ((i, k, l), (i, j, l), (i, j, k))]


def four_cycle(i, j, k, l):
    """Moves for the four-cycle on C_jkl through C_ikl, C_ijl and C_ijk."""
    return ["".join(map(str, sorted(t))) for t in ((i, k, l), (i, j, l), (i, j, k), (j, k, l))]


def hc_chase(H, start, moves, triple="123"):
    """Follow tau maps from a point on C_triple (default C123).

    ``start`` holds one 2-vector per axis of the triple, in increasing axis
    order. Each move names the next triple (e.g. "124"); it must share two
    axes with the current one. Returns (triple, point) with 1-based labels.
    """
    arr = _check(H)
    axes = _parse_triple(triple)
    vecs = [tuple(to_fraction(c) for c in v) for v in start]
    if len(vecs) != 3 or any(len(v) != 2 or not any(v) for v in vecs):
        raise NotOnCurve("start must be three nonzero 2-vectors")
    point = dict(zip(axes, (_normalize(v) for v in vecs)))
    if any(_contract_axes(arr, point)):
        raise NotOnCurve("start is not on the curve")
    for move in moves:
        target = _parse_triple(move)
        keep = set(axes) & set(target)
        if len(keep) != 2:
            raise ShapeMismatch(f"move {move!r} does not share two axes with the current curve")
        (new,) = set(target) - keep
        (old,) = set(axes) - keep
        m = _contract_axes(arr, {a: point[a] for a in keep})
        # m is indexed by (old, new) in increasing axis order
        if old > new:
            m = m.T
        ker = exact_kernel([list(m[0]), list(m[1])])
        if len(ker) != 1:
            raise KernelRankUnexpected(f"expected a one dimensional kernel, found {len(ker)}")
        point = {a: point[a] for a in keep}
        point[new] = _normalize(ker[0])
        axes = target
    label = "".join(str(a + 1) for a in axes)
    return label, tuple(point[a] for a in axes)


# ---------------------------------------------------------------- desymmetrization


def _desym_2sym_matrix(arr):
    def r(i, j):
        return arr[i - 1, j - 1, 0, 0]

    def s(i, j):
        return arr[i - 1, j - 1, 0, 1]

    def t(i, j):
        return arr[i - 1, j - 1, 1, 1]

    a = (-r(2, 2) * s(2, 1) * t(1, 1) + r(2, 1) * s(2, 2) * t(1, 1) + r(2, 2) * s(1, 1) * t(2, 1)
         - r(1, 1) * s(2, 2) * t(2, 1) - r(2, 1) * s(1, 1) * t(2, 2) + r(1, 1) * s(2, 1) * t(2, 2))
    b = (-r(2, 1) * s(1, 2) * t(1, 1) + r(1, 2) * s(2, 1) * t(1, 1) + r(2, 1) * s(1, 1) * t(1, 2)
         - r(1, 1) * s(2, 1) * t(1, 2) - r(1, 2) * s(1, 1) * t(2, 1) + r(1, 1) * s(1, 2) * t(2, 1))
    c = (-r(2, 2) * s(2, 1) * t(1, 2) + r(2, 1) * s(2, 2) * t(1, 2) + r(2, 2) * s(1, 2) * t(2, 1)
         - r(1, 2) * s(2, 2) * t(2, 1) - r(2, 1) * s(1, 2) * t(2, 2) + r(1, 2) * s(2, 1) * t(2, 2))
    d = (-r(2, 2) * s(1, 2) * t(1, 1) + r(1, 2) * s(2, 2) * t(1, 1) + r(2, 2) * s(1, 1) * t(1, 2)
         - r(1, 1) * s(2, 2) * t(1, 2) - r(1, 2) * s(1, 1) * t(2, 2) + r(1, 1) * s(1, 2) * t(2, 2))
    return [[a, b], [c, d]]


def _desym_3sym_matrix(arr):
    # r, s, t, u are the entries of each symmetric 2x2x2 slice
    r1, s1, t1, u1 = arr[0, 0, 0, 0], arr[0, 0, 0, 1], arr[0, 0, 1, 1], arr[0, 1, 1, 1]
    r2, s2, t2, u2 = arr[1, 0, 0, 0], arr[1, 0, 0, 1], arr[1, 0, 1, 1], arr[1, 1, 1, 1]
    a = -s2 * s2 * t1 + s1 * s2 * t2 + r2 * t1 * t2 - r1 * t2 * t2 - r2 * s1 * u2 + r1 * s2 * u2
    b = s1 * s2 * t1 - r2 * t1 * t1 - s1 * s1 * t2 + r1 * t1 * t2 + r2 * s1 * u1 - r1 * s2 * u1
    c = s2 * t1 * t2 - s1 * t2 * t2 - s2 * s2 * u1 + r2 * t2 * u1 + s1 * s2 * u2 - r2 * t1 * u2
    d = -s2 * t1 * t1 + s1 * t1 * t2 + s1 * s2 * u1 - r1 * t2 * u1 - s1 * s1 * u2 + r1 * t1 * u2
    return [[a, b], [c, d]]


def _apply_desym(H, matrix_of, groups, tag):
    arr = _check(H)
    for perm in groups:
        if not np.array_equal(arr, np.transpose(arr, perm)):
            raise ShapeMismatch("input does not have the required symmetry")
    g = matrix_of(arr)
    if g[0][0] * g[1][1] - g[0][1] * g[1][0] == 0:
        raise DegenerateTransform("the transform has zero determinant")
    out = act(H, 0, g).array()
    try:
        return RationalTensor.from_array(out, tag), g
    except ShapeMismatch:
        # left untagged so callers can inspect the failure with symmetry_check
        return RationalTensor.from_array(out), g


def hc_desym_2sym(H, return_matrix=False):
    """Send H in V1 x V1 x Sym2 V2 to Sym2 x Sym2 by a matrix on the first axis."""
    out, g = _apply_desym(H, _desym_2sym_matrix, [(0, 1, 3, 2)], "sym22")
    return (out, g) if return_matrix else out


def hc_desym_3sym(H, return_matrix=False):
    """Send H in V x Sym3 V to Sym4 by a matrix on the first axis."""
    out, g = _apply_desym(H, _desym_3sym_matrix, [(0, 2, 1, 3), (0, 1, 3, 2)], "full-sym")
    return (out, g) if return_matrix else out
