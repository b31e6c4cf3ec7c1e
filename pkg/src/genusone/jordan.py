"""Composition algebras, cubic Jordan algebras and Hermitian cube spaces.

Coordinates are plain tuples whose entries may be Fractions or Polys, so the
same code evaluates norms numerically and expands them symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .errors import AlgebraMismatch, ShapeMismatch
from .exact import Poly, solve_unique, to_fraction
from .tensor import RationalTensor, form_coeffs

__all__ = [
    "CompositionAlgebra",
    "COMPOSITION_ALGEBRAS",
    "CompElement",
    "JordanAlgebra",
    "JordanElement",
    "jordan_algebra",
    "HermCube",
    "jordan_norm_sharp",
    "fts_disc",
    "fts_flat",
    "fts_pairing",
    "fts_norm4",
    "fts_rank",
    "fts_segre",
    "fts_rank_one",
    "fts_specialize",
    "fts_from_tensor",
    "degree3_norm_cubic",
    "degree2_disc_quartic",
]


def _coerce(x):
    return x if isinstance(x, Poly) else to_fraction(x)


# ---------------------------------------------------------------- composition algebras


def _cross(v, w):
    return (v[1] * w[2] - v[2] * w[1], v[2] * w[0] - v[0] * w[2], v[0] * w[1] - v[1] * w[0])


def _dot(v, w):
    return v[0] * w[0] + v[1] * w[1] + v[2] * w[2]


def _zorn_mul(x, y):
    # [[a, v], [w, b]] with the vector cross products in the off-diagonal slots
    a, v, w, b = x[0], x[1:4], x[4:7], x[7]
    a2, v2, w2, b2 = y[0], y[1:4], y[4:7], y[7]
    vw, wv = _cross(w, w2), _cross(v, v2)
    return (
        (a * a2 + _dot(v, w2),)
        + tuple(a * v2[i] + b2 * v[i] - vw[i] for i in range(3))
        + tuple(a2 * w[i] + b * w2[i] + wv[i] for i in range(3))
        + (b * b2 + _dot(w, v2),)
    )


@dataclass(frozen=True)
class CompositionAlgebra:
    name: str
    dim: int
    mul: object
    conj: object
    norm: object
    one: tuple

    def trace(self, x):
        # tr(a) = q(a + e) - q(a) - q(e)
        s = tuple(xi + ei for xi, ei in zip(x, self.one))
        return self.norm(s) - self.norm(x) - 1


UNARIONS = CompositionAlgebra("unarions", 1, lambda x, y: (x[0] * y[0],), lambda x: x, lambda x: x[0] * x[0], (1,))
BINARIONS = CompositionAlgebra(
    "binarions", 2, lambda x, y: (x[0] * y[0], x[1] * y[1]), lambda x: (x[1], x[0]), lambda x: x[0] * x[1], (1, 1)
)
# 2x2 matrices stored row-major (m11, m12, m21, m22); conjugation is the adjugate
QUATERNIONS = CompositionAlgebra(
    "split-quaternions",
    4,
    lambda x, y: (
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    ),
    lambda x: (x[3], -x[1], -x[2], x[0]),
    lambda x: x[0] * x[3] - x[1] * x[2],
    (1, 0, 0, 1),
)
# Zorn vector matrices (a, v1, v2, v3, w1, w2, w3, b) with norm ab - v.w
OCTONIONS = CompositionAlgebra(
    "split-octonions",
    8,
    _zorn_mul,
    lambda x: (x[7],) + tuple(-c for c in x[1:7]) + (x[0],),
    lambda x: x[0] * x[7] - _dot(x[1:4], x[4:7]),
    (1, 0, 0, 0, 0, 0, 0, 1),
)

COMPOSITION_ALGEBRAS = {
    "unarions": UNARIONS,
    "binarions": BINARIONS,
    "split-quaternions": QUATERNIONS,
    "split-octonions": OCTONIONS,
}


@dataclass(frozen=True)
class CompElement:
    """Element of one of the split composition algebras."""

    algebra: str
    coords: tuple

    def __post_init__(self):
        alg = _comp(self.algebra)
        if len(self.coords) != alg.dim:
            raise ShapeMismatch(f"{alg.name} elements have {alg.dim} coordinates")
        object.__setattr__(self, "coords", tuple(_coerce(c) for c in self.coords))

    def _same(self, other):
        if not isinstance(other, CompElement) or other.algebra != self.algebra:
            raise AlgebraMismatch("elements of different composition algebras")

    def __add__(self, other):
        self._same(other)
        return CompElement(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, other):
        if isinstance(other, CompElement):
            self._same(other)
            return CompElement(self.algebra, _comp(self.algebra).mul(self.coords, other.coords))
        return CompElement(self.algebra, tuple(c * other for c in self.coords))

    def conj(self):
        return CompElement(self.algebra, _comp(self.algebra).conj(self.coords))

    def norm(self):
        return _comp(self.algebra).norm(self.coords)

    def trace(self):
        return _comp(self.algebra).trace(self.coords)


def _comp(name):
    try:
        return COMPOSITION_ALGEBRAS[name]
    except KeyError:
        raise AlgebraMismatch(f"unknown composition algebra {name!r}") from None


# ---------------------------------------------------------------- cubic Jordan algebras


def _h3_split(A, x):
    d = A.dim
    return x[0], x[1], x[2], x[3: 3 + d], x[3 + d: 3 + 2 * d], x[3 + 2 * d:]


def _h3_norm(A):
    def norm(x):
        c1, c2, c3, a1, a2, a3 = _h3_split(A, x)
        return (c1 * c2 * c3 - c1 * A.norm(a1) - c2 * A.norm(a2) - c3 * A.norm(a3)
                + A.trace(A.mul(A.mul(a1, a2), a3)))

    return norm


def _h3_sharp(A):
    def sub(u, v):
        return tuple(p - q for p, q in zip(u, v))

    def scale(s, u):
        return tuple(s * p for p in u)

    def sharp(x):
        c1, c2, c3, a1, a2, a3 = _h3_split(A, x)
        mul, conj = A.mul, A.conj
        # the (2,3), (3,1) and (1,2) entries of the adjoint matrix
        b1 = sub(mul(conj(a3), conj(a2)), scale(c1, a1))
        b2 = sub(mul(conj(a1), conj(a3)), scale(c2, a2))
        b3 = sub(mul(conj(a2), conj(a1)), scale(c3, a3))
        return (c2 * c3 - A.norm(a1), c1 * c3 - A.norm(a2), c1 * c2 - A.norm(a3)) + b1 + b2 + b3

    return sharp


class JordanAlgebra:
    """A cubic form with basepoint; traces and sharp come from Springer's recipe.

    ``sharp`` may be supplied in closed form; otherwise it is obtained from the
    trace duality Tr(x#, y) = N(x, x, y).
    """

    def __init__(self, name, dim, norm, e, sharp=None, comp=None):
        self.name = name
        self.dim = dim
        self._norm = norm
        self.e = tuple(Fraction(c) for c in e)
        self._sharp = sharp
        self.comp = comp
        basis = [tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)]
        self.gram = [[self.trace_form(u, v) for v in basis] for u in basis]
        self._basis = basis

    def __repr__(self):
        return f"JordanAlgebra({self.name!r})"

    def norm(self, x):
        return self._norm(tuple(x))

    def d_norm(self, x, y):
        """N(x, x, y): the derivative of N at x in the direction y."""
        p = tuple(a + b for a, b in zip(x, y))
        m = tuple(a - b for a, b in zip(x, y))
        return (self.norm(p) - self.norm(m)) / 2 - self.norm(y)

    def trace(self, x):
        return self.d_norm(self.e, x)

    def spur(self, x):
        return self.d_norm(x, self.e)

    def spur_form(self, x, y):
        s = tuple(a + b for a, b in zip(x, y))
        return self.spur(s) - self.spur(x) - self.spur(y)

    def trace_form(self, x, y):
        return self.trace(x) * self.trace(y) - self.spur_form(x, y)

    def sharp(self, x):
        x = tuple(x)
        if self._sharp is not None:
            return tuple(self._sharp(x))
        rhs = [self.d_norm(x, b) for b in self._basis]
        return _solve_gram(self, rhs)

    def sharp_by_duality(self, x):
        rhs = [self.d_norm(tuple(x), b) for b in self._basis]
        return _solve_gram(self, rhs)

    def cross(self, x, y):
        s = tuple(a + b for a, b in zip(x, y))
        return tuple(p - q - r for p, q, r in zip(self.sharp(s), self.sharp(x), self.sharp(y)))

    def bullet(self, x, y):
        c = self.cross(x, y)
        tx, ty, s = self.trace(x), self.trace(y), self.spur_form(x, y)
        return tuple((ci + tx * yi + ty * xi - s * ei) / 2 for ci, xi, yi, ei in zip(c, x, y, self.e))


_GRAM_INVERSES = {}


def _solve_gram(alg, rhs):
    inv = _GRAM_INVERSES.get(alg.name)
    if inv is None:
        n = alg.dim
        cols = [solve_unique(alg.gram, [Fraction(int(i == j)) for i in range(n)]) for j in range(n)]
        if any(c is None for c in cols):
            raise AlgebraMismatch(f"trace form of {alg.name} is degenerate")
        inv = [[cols[j][i] for j in range(n)] for i in range(n)]
        _GRAM_INVERSES[alg.name] = inv
    return tuple(sum((inv[i][j] * rhs[j] for j in range(len(rhs))), start=Fraction(0)) for i in range(len(rhs)))


def _make_algebras():
    algs = {
        "K": JordanAlgebra("K", 1, lambda x: x[0] ** 3, (1,)),
        "KxK": JordanAlgebra("KxK", 2, lambda x: x[0] * x[1] * x[1], (1, 1)),
        "K3": JordanAlgebra("K3", 3, lambda x: x[0] * x[1] * x[2], (1, 1, 1)),
        "KxMat2": JordanAlgebra("KxMat2", 5, lambda x: x[0] * (x[1] * x[4] - x[2] * x[3]), (1, 1, 0, 0, 1)),
    }
    for cname, A in COMPOSITION_ALGEBRAS.items():
        name = f"H3({cname})"
        algs[name] = JordanAlgebra(name, 3 + 3 * A.dim, _h3_norm(A), (1, 1, 1) + (0,) * (3 * A.dim), _h3_sharp(A), A)
    return algs


JORDAN_ALGEBRAS = _make_algebras()
_ALIASES = {
    "H3(K)": "H3(unarions)",
    "H3(KxK)": "H3(binarions)",
    "H3(Mat2)": "H3(split-quaternions)",
    "H3(O)": "H3(split-octonions)",
    "Mat3": "H3(binarions)",
}


def jordan_algebra(name) -> JordanAlgebra:
    if isinstance(name, JordanAlgebra):
        return name
    name = _ALIASES.get(name, name)
    try:
        return JORDAN_ALGEBRAS[name]
    except KeyError:
        raise AlgebraMismatch(f"unknown Jordan algebra {name!r}") from None


class JordanElement:
    """Coordinates in a cubic Jordan algebra.

    For H3(A) the coordinates are (c1, c2, c3, a1, a2, a3) flattened, with the
    a_i in the coordinates of A; for K x Mat2 they are (x, m11, m12, m21, m22).
    """

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = jordan_algebra(algebra)
        coords = tuple(_coerce(c) for c in coords)
        if len(coords) != self.algebra.dim:
            raise ShapeMismatch(f"{self.algebra.name} elements have {self.algebra.dim} coordinates")
        self.coords = coords

    @classmethod
    def identity(cls, algebra):
        alg = jordan_algebra(algebra)
        return cls(alg, alg.e)

    @classmethod
    def zero(cls, algebra):
        alg = jordan_algebra(algebra)
        return cls(alg, (0,) * alg.dim)

    @classmethod
    def from_matrix(cls, m):
        """A 3x3 matrix as an element of H3(binarions)."""
        m = [[_coerce(v) for v in row] for row in m]
        return cls("H3(binarions)", (m[0][0], m[1][1], m[2][2], m[1][2], m[2][1], m[2][0], m[0][2], m[0][1], m[1][0]))

    def to_matrix(self):
        if self.algebra.name != "H3(binarions)":
            raise AlgebraMismatch("only H3(binarions) elements are 3x3 matrices")
        c1, c2, c3, a11, a12, a21, a22, a31, a32 = self.coords
        return [[c1, a31, a22], [a32, c2, a11], [a21, a12, c3]]

    def _same(self, other):
        if not isinstance(other, JordanElement) or other.algebra is not self.algebra:
            raise AlgebraMismatch("elements of different Jordan algebras")

    def __add__(self, other):
        self._same(other)
        return JordanElement(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._same(other)
        return JordanElement(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return JordanElement(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, scalar):
        return JordanElement(self.algebra, tuple(a * scalar for a in self.coords))

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, JordanElement) and other.algebra is self.algebra and other.coords == self.coords

    def __hash__(self):
        return hash((self.algebra.name, self.coords))

    def __repr__(self):
        return f"JordanElement({self.algebra.name!r}, {self.coords})"

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def norm(self):
        return self.algebra.norm(self.coords)

    def trace(self):
        return self.algebra.trace(self.coords)

    def spur(self):
        return self.algebra.spur(self.coords)

    def sharp(self):
        return JordanElement(self.algebra, self.algebra.sharp(self.coords))

    def trace_form(self, other):
        self._same(other)
        return self.algebra.trace_form(self.coords, other.coords)

    def spur_form(self, other):
        self._same(other)
        return self.algebra.spur_form(self.coords, other.coords)

    def d_norm(self, other):
        self._same(other)
        return self.algebra.d_norm(self.coords, other.coords)

    def cross(self, other):
        self._same(other)
        return JordanElement(self.algebra, self.algebra.cross(self.coords, other.coords))

    def bullet(self, other):
        self._same(other)
        return JordanElement(self.algebra, self.algebra.bullet(self.coords, other.coords))


def jordan_norm_sharp(x: JordanElement):
    """(Norm, Tr, Spur, sharp) of x."""
    return x.norm(), x.trace(), x.spur(), x.sharp()


# ---------------------------------------------------------------- Hermitian cubes


@dataclass(frozen=True)
class HermCube:
    a: object
    b: JordanElement
    c: JordanElement
    d: object

    def __post_init__(self):
        if not isinstance(self.b, JordanElement) or not isinstance(self.c, JordanElement):
            raise ShapeMismatch("b and c must be Jordan elements")
        if self.b.algebra is not self.c.algebra:
            raise AlgebraMismatch("b and c lie in different Jordan algebras")
        object.__setattr__(self, "a", _coerce(self.a))
        object.__setattr__(self, "d", _coerce(self.d))

    @property
    def algebra(self):
        return self.b.algebra

    @classmethod
    def make(cls, algebra, a, b, c, d):
        return cls(a, JordanElement(algebra, b), JordanElement(algebra, c), d)

    @classmethod
    def epsilon(cls, algebra):
        return cls(1, JordanElement.zero(algebra), JordanElement.zero(algebra), 1)

    @classmethod
    def zero(cls, algebra):
        return cls(0, JordanElement.zero(algebra), JordanElement.zero(algebra), 0)

    def __add__(self, other):
        return HermCube(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other):
        return HermCube(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __mul__(self, s):
        return HermCube(self.a * s, self.b * s, self.c * s, self.d * s)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def is_zero(self):
        return self.a == 0 and self.d == 0 and self.b.is_zero() and self.c.is_zero()

    def coords(self):
        return (self.a,) + self.b.coords + self.c.coords + (self.d,)

    @classmethod
    def from_coords(cls, algebra, coords):
        alg = jordan_algebra(algebra)
        n = alg.dim
        coords = tuple(coords)
        if len(coords) != 2 * n + 2:
            raise ShapeMismatch(f"Hermitian cubes over {alg.name} have {2 * n + 2} coordinates")
        return cls.make(alg, coords[0], coords[1: 1 + n], coords[1 + n: 1 + 2 * n], coords[-1])


def fts_disc(A: HermCube):
    t = A.b.trace_form(A.c)
    return ((A.a * A.d - t) ** 2 - 4 * A.b.sharp().trace_form(A.c.sharp())
            + 4 * A.a * A.c.norm() + 4 * A.d * A.b.norm())


def fts_flat(A: HermCube) -> HermCube:
    a, b, c, d = A.a, A.b, A.c, A.d
    t = b.trace_form(c)
    bs, cs = b.sharp(), c.sharp()
    af = a * a * d - a * t + 2 * b.norm()
    bf = c.cross(bs) * 2 - cs * (2 * a) + b * (a * d - t)
    cf = -(b.cross(cs) * 2) + bs * (2 * d) - c * (a * d - t)
    df = -a * d * d + d * t - 2 * c.norm()
    return HermCube(af, bf, cf, df)


def fts_pairing(A: HermCube, B: HermCube):
    """The alternating form <A, B> = a d' - Tr(b, c') + Tr(b', c) - a' d."""
    return A.a * B.d - A.b.trace_form(B.c) + B.b.trace_form(A.c) - B.a * A.d


def fts_norm4(A: HermCube, B: HermCube):
    """N(A, A, A, B) for the symmetric quadrilinear form with N(A, A, A, A) = disc(A)."""
    # t-coefficient of disc(A + tB) from four samples, divided by 4
    p = {t: fts_disc(A + B * t) for t in (1, -1, 2, -2)}
    return (8 * (p[1] - p[-1]) - (p[2] - p[-2])) / 48


def fts_segre(alpha: JordanElement, beta: JordanElement) -> HermCube:
    """(Norm(alpha), alpha# . beta, beta# . alpha, Norm(beta))."""
    alpha._same(beta)
    return HermCube(alpha.norm(), alpha.sharp().bullet(beta), beta.sharp().bullet(alpha), beta.norm())


def fts_rank_one(x: JordanElement, t=1) -> HermCube:
    """t (1, x, x#, Norm(x)), the image of (1, 0, 0, 0) under translation by x."""
    return HermCube(1, x, x.sharp(), x.norm()) * _coerce(t)


def _cube_basis(alg):
    n = 2 * alg.dim + 2
    return [HermCube.from_coords(alg, [int(i == j) for j in range(n)]) for i in range(n)]


def _triple(A, B):
    """T(A, A, B), the polarization of the flat map: flat(A + tB) = flat(A) + 3t T(A, A, B) + ..."""
    f = fts_flat
    return (f(A + B) - f(A - B) - f(B) * 2) * Fraction(1, 6)


# rank one elements satisfy T(A, A, B) = RANK_ONE_CONSTANT <B, A> A for every B
RANK_ONE_CONSTANT = Fraction(-1, 3)


def fts_rank(A: HermCube) -> int:
    """0 for zero, 1 on the rank one locus, then 2 if flat vanishes, 3 if disc vanishes, else 4.

    Rank one is tested by the strict regularity condition T(A, A, B) = -1/3 <B, A> A
    on a basis, which cuts out the orbit closure of (1, 0, 0, 0).
    """
    if A.is_zero():
        return 0
    if all(_triple(A, B) == A * (RANK_ONE_CONSTANT * fts_pairing(B, A)) for B in _cube_basis(A.algebra)):
        return 1
    if fts_flat(A).is_zero():
        return 2
    if fts_disc(A) == 0:
        return 3
    return 4


# ---------------------------------------------------------------- specializations

_SPECIALIZE_TARGETS = {
    "cube": ("K3",),
    "sym3": ("K",),
    "2sym2": ("KxK",),
    "wedge3": ("H3(binarions)",),
    "2wedge2": ("KxMat2",),
}


def _k3_cube(a, b, c, d):
    arr = np.empty((2, 2, 2), dtype=object)
    for idx in product(range(2), repeat=3):
        ones = sum(idx)
        if ones == 0:
            arr[idx] = a
        elif ones == 3:
            arr[idx] = d
        elif ones == 1:
            arr[idx] = b[idx.index(1)]
        else:
            arr[idx] = c[idx.index(0)]
    return arr


def _wedge_add(arr, slots, value):
    from .tensor import _perm_sign
    from itertools import permutations

    for p in permutations(range(3)):
        arr[tuple(slots[i] for i in p)] += _perm_sign(p) * value


def fts_specialize(A: HermCube, target: str) -> RationalTensor:
    """Explicit coordinates of a Hermitian cube in the matching tensor space.

    targets: ``cube`` (K3, 2x2x2), ``sym3`` (K, symmetric 2x2x2), ``2sym2``
    (K x K, 2 x Sym2), ``wedge3`` (3x3 matrices, alternating 6x6x6) and
    ``2wedge2`` (K x Mat2, pair of 4x4 skew matrices).
    """
    if target not in _SPECIALIZE_TARGETS:
        raise AlgebraMismatch(f"unknown target {target!r}")
    if A.algebra.name not in _SPECIALIZE_TARGETS[target]:
        raise AlgebraMismatch(f"target {target!r} does not accept {A.algebra.name}")
    a, b, c, d = A.a, A.b.coords, A.c.coords, A.d
    if target == "cube":
        return RationalTensor.from_array(_k3_cube(a, b, c, d))
    if target == "sym3":
        return RationalTensor.from_array(_k3_cube(a, b * 3, c * 3, d), "full-sym")
    if target == "2sym2":
        return RationalTensor.from_array(_k3_cube(a, (b[0], b[1], b[1]), (c[0], c[1], c[1]), d), "sym-last-2")
    if target == "2wedge2":
        out = np.full((2, 4, 4), Fraction(0), dtype=object)
        # first matrix from (a, matrix part of b, scalar of c), second from (scalar of b,
        # adjugate of the matrix part of c, d); the adjugate keeps disc SL4-invariant
        cadj = (c[4], -c[2], -c[3], c[1])
        for k, (s, m, t) in enumerate(((a, b[1:], c[0]), (b[0], cadj, d))):
            m11, m12, m21, m22 = m
            upper = {(0, 1): s, (0, 2): -m12, (0, 3): m11, (1, 2): -m22, (1, 3): m21, (2, 3): t}
            for (i, j), v in upper.items():
                out[k, i, j] = v
                out[k, j, i] = -v
        return RationalTensor.from_array(out)
    # wedge3: e_i -> i, f_j -> 3 + j, starred pairs taken cyclically; b sits on
    # f_i ^ e_j* and c on e_i ^ f_j*, the placement under which disc is SL6-invariant
    B = JordanElement(A.algebra, b).to_matrix()
    C = JordanElement(A.algebra, c).to_matrix()
    out = np.full((6, 6, 6), Fraction(0), dtype=object)
    _wedge_add(out, (0, 1, 2), a)
    _wedge_add(out, (3, 4, 5), d)
    for i, j in product(range(3), repeat=2):
        _wedge_add(out, (3 + i, (j + 1) % 3, (j + 2) % 3), B[i][j])
        _wedge_add(out, (i, 3 + (j + 1) % 3, 3 + (j + 2) % 3), C[i][j])
    return RationalTensor.from_array(out)


def fts_from_tensor(T: RationalTensor, target: str) -> HermCube:
    """Inverse of fts_specialize on its image (up to the symmetry of the target)."""
    arr = T.array()
    if target in ("cube", "sym3", "2sym2"):
        if arr.shape != (2, 2, 2):
            raise ShapeMismatch("a 2x2x2 tensor is expected")
        a, d = arr[0, 0, 0], arr[1, 1, 1]
        b = (arr[1, 0, 0], arr[0, 1, 0], arr[0, 0, 1])
        c = (arr[0, 1, 1], arr[1, 0, 1], arr[1, 1, 0])
        if target == "cube":
            return HermCube.make("K3", a, b, c, d)
        if target == "sym3":
            return HermCube.make("K", a, (b[0],), (c[0],), d)
        return HermCube.make("KxK", a, b[:2], c[:2], d)
    if target == "2wedge2":
        if arr.shape != (2, 4, 4):
            raise ShapeMismatch("a 2x4x4 tensor is expected")
        p, q = arr[0], arr[1]
        bm = (p[0, 3], -p[0, 2], p[1, 3], -p[1, 2])
        cm = (-q[1, 2], q[0, 2], -q[1, 3], q[0, 3])
        return HermCube.make("KxMat2", p[0, 1], (q[0, 1],) + bm, (p[2, 3],) + cm, q[2, 3])
    if target == "wedge3":
        if arr.shape != (6, 6, 6):
            raise ShapeMismatch("a 6x6x6 tensor is expected")
        B = [[arr[3 + i, (j + 1) % 3, (j + 2) % 3] for j in range(3)] for i in range(3)]
        C = [[arr[i, 3 + (j + 1) % 3, 3 + (j + 2) % 3] for j in range(3)] for i in range(3)]
        return HermCube(arr[0, 1, 2], JordanElement.from_matrix(B), JordanElement.from_matrix(C), arr[3, 4, 5])
    raise AlgebraMismatch(f"unknown target {target!r}")


# ---------------------------------------------------------------- curve extraction


def degree3_norm_cubic(phi):
    """Coefficients of the ternary cubic v -> Norm(v1 phi1 + v2 phi2 + v3 phi3)."""
    phi = list(phi)
    if len(phi) != 3:
        raise ShapeMismatch("three Jordan elements are expected")
    alg = phi[0].algebra
    for p in phi[1:]:
        phi[0]._same(p)
    v = Poly.gens(3)
    coords = tuple(sum((v[k] * phi[k].coords[i] for k in range(3)), start=Poly.const(0, 3)) for i in range(alg.dim))
    n = alg.norm(coords)
    return form_coeffs(n, "tc") if isinstance(n, Poly) else [Fraction(0)] * 10


def degree2_disc_quartic(phi):
    """Coefficients of the binary quartic v -> disc(v1 A1 + v2 A2)."""
    phi = list(phi)
    if len(phi) != 2:
        raise ShapeMismatch("two Hermitian cubes are expected")
    A1, A2 = phi
    if A1.algebra is not A2.algebra:
        raise AlgebraMismatch("Hermitian cubes over different algebras")
    v = Poly.gens(2)
    coords = [v[0] * p + v[1] * q for p, q in zip(A1.coords(), A2.coords())]
    f = fts_disc(HermCube.from_coords(A1.algebra, coords))
    return form_coeffs(f, "bq") if isinstance(f, Poly) else [Fraction(0)] * 5
