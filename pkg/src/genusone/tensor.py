"""Rational tensors: slicing, the per-axis group action, symmetric and skew embeddings.

Entries live in numpy object arrays of Fractions. Indices are 0-based in the
API; the command line front end translates from the 1-based notation.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product
from math import factorial, prod

import numpy as np

from .errors import IndexOutOfRange, ShapeMismatch
from .exact import Poly, fraction_str, to_fraction

__all__ = [
    "RationalTensor",
    "slice_tensor",
    "act",
    "act_all",
    "sym_embed",
    "sym_readout",
    "skew_embed",
    "symmetry_check",
    "SYMMETRY_TAGS",
    "TC_EXPONENTS",
    "F22_EXPONENTS",
    "random_unimodular",
]

# tag -> list of axis groups that must be symmetric (for a 4 or 3 axis tensor)
SYMMETRY_TAGS = ("sym-last-2", "sym-last-3", "full-sym", "sym22")

# ternary cubic order: a x^3, b y^3, c z^3, a2 x^2y, a3 x^2z, b1 xy^2, b3 y^2z, c1 xz^2, c2 yz^2, m xyz
TC_EXPONENTS = [
    (3, 0, 0), (0, 3, 0), (0, 0, 3),
    (2, 1, 0), (2, 0, 1), (1, 2, 0),
    (0, 2, 1), (1, 0, 2), (0, 1, 2),
    (1, 1, 1),
]

# (2,2) form order a22, a32, a42, a23, a33, a43, a24, a34, a44 as ((w exps), (x exps))
_QUAD_EXPS = {2: (2, 0), 3: (1, 1), 4: (0, 2)}
F22_EXPONENTS = [(_QUAD_EXPS[i], _QUAD_EXPS[j]) for j in (2, 3, 4) for i in (2, 3, 4)]

BQ_EXPONENTS = [(4, 0), (3, 1), (2, 2), (1, 3), (0, 4)]
BC_EXPONENTS = [(3, 0), (2, 1), (1, 2), (0, 3)]


def _tag_groups(tag, ndim):
    if tag is None:
        return []
    if tag == "full-sym":
        return [tuple(range(ndim))]
    if tag.startswith("sym-last-"):
        k = int(tag.rsplit("-", 1)[1])
        return [tuple(range(ndim - k, ndim))]
    if tag == "sym22":
        return [(0, 1), (2, 3)]
    raise ValueError(f"unknown symmetry tag {tag!r}")


class RationalTensor:
    """Multi-index array of Fractions with an optional symmetry tag."""

    __slots__ = ("_arr", "symmetry")

    def __init__(self, shape, entries, symmetry=None):
        shape = tuple(int(n) for n in shape)
        if any(n <= 0 for n in shape):
            raise ShapeMismatch("shape entries must be positive")
        entries = [to_fraction(e) for e in entries]
        if len(entries) != prod(shape):
            raise ShapeMismatch(f"{len(entries)} entries for shape {shape}")
        arr = np.empty(len(entries), dtype=object)
        arr[:] = entries
        self._arr = arr.reshape(shape)
        self.symmetry = symmetry
        if symmetry is not None:
            for group in _tag_groups(symmetry, len(shape)):
                if not _group_symmetric(self._arr, group):
                    raise ShapeMismatch(f"entries do not satisfy symmetry {symmetry!r}")

    @classmethod
    def from_array(cls, arr, symmetry=None) -> "RationalTensor":
        arr = np.asarray(arr, dtype=object)
        return cls(arr.shape, [to_fraction(x) for x in arr.reshape(-1)], symmetry)

    @classmethod
    def zeros(cls, shape) -> "RationalTensor":
        return cls(shape, [0] * prod(shape))

    @classmethod
    def unit(cls, shape, index) -> "RationalTensor":
        t = np.full(tuple(shape), Fraction(0), dtype=object)
        t[tuple(index)] = Fraction(1)
        return cls.from_array(t)

    @property
    def shape(self):
        return self._arr.shape

    @property
    def ndim(self):
        return self._arr.ndim

    @property
    def entries(self):
        return tuple(self._arr.reshape(-1))

    def array(self):
        """A fresh object array copy of the entries."""
        return self._arr.copy()

    def __getitem__(self, index):
        return self._arr[tuple(index)]

    def __add__(self, other):
        if not isinstance(other, RationalTensor) or other.shape != self.shape:
            raise ShapeMismatch("shapes differ")
        tag = self.symmetry if self.symmetry == other.symmetry else None
        return RationalTensor.from_array(self._arr + other._arr, tag)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, scalar):
        return RationalTensor.from_array(self._arr * to_fraction(scalar), self.symmetry)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        if not isinstance(other, RationalTensor):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.shape, self.entries))

    def is_zero(self):
        return not any(self.entries)

    def to_json(self):
        out = {"shape": list(self.shape), "entries": [fraction_str(e) for e in self.entries]}
        if self.symmetry:
            out["symmetry"] = self.symmetry
        return out

    @classmethod
    def from_json(cls, data) -> "RationalTensor":
        return cls(data["shape"], data["entries"], data.get("symmetry"))

    def __repr__(self):
        return f"RationalTensor(shape={self.shape}, entries={[fraction_str(e) for e in self.entries]})"


def _group_symmetric(arr, group):
    for a, b in zip(group, group[1:]):
        if not np.array_equal(arr, np.swapaxes(arr, a, b)):
            return False
    return True


def slice_tensor(T: RationalTensor, axis: int, index: int) -> RationalTensor:
    """The sub-tensor with ``axis`` fixed at ``index`` (0-based)."""
    if not 0 <= axis < T.ndim:
        raise IndexOutOfRange(f"axis {axis} out of range")
    if not 0 <= index < T.shape[axis]:
        raise IndexOutOfRange(f"index {index} out of range")
    if T.ndim == 1:
        raise IndexOutOfRange("cannot slice a vector")
    return RationalTensor.from_array(np.take(T.array(), index, axis=axis))


def _apply(arr, axis, g):
    g = np.asarray([[to_fraction(x) for x in row] for row in g], dtype=object)
    if g.shape != (arr.shape[axis], arr.shape[axis]):
        raise ShapeMismatch(f"matrix of shape {g.shape} cannot act on axis of length {arr.shape[axis]}")
    out = np.tensordot(g, arr, axes=([1], [axis]))
    return np.moveaxis(out, 0, axis)


def act(T: RationalTensor, axis: int, g) -> RationalTensor:
    """Replace the slices along ``axis`` by the linear combinations given by g.

    The new slice i is sum_j g[i][j] * (old slice j). The symmetry tag is kept
    only when it still holds.
    """
    if not 0 <= axis < T.ndim:
        raise IndexOutOfRange(f"axis {axis} out of range")
    return _retag(_apply(T.array(), axis, g), T.symmetry)


def act_all(T: RationalTensor, gs) -> RationalTensor:
    """Act on every axis; ``gs`` lists one matrix per axis (None to skip)."""
    if len(gs) != T.ndim:
        raise ShapeMismatch("one matrix per axis expected")
    arr = T.array()
    for axis, g in enumerate(gs):
        if g is not None:
            arr = _apply(arr, axis, g)
    return _retag(arr, T.symmetry)


def _retag(arr, tag):
    if tag is not None and all(_group_symmetric(arr, grp) for grp in _tag_groups(tag, arr.ndim)):
        return RationalTensor.from_array(arr, tag)
    return RationalTensor.from_array(arr)


def symmetry_check(T: RationalTensor, perm) -> bool:
    """True iff T is fixed by permuting its axes by ``perm``."""
    perm = tuple(perm)
    if sorted(perm) != list(range(T.ndim)):
        raise ShapeMismatch("not a permutation of the axes")
    if any(T.shape[i] != T.shape[p] for i, p in enumerate(perm)):
        raise ShapeMismatch("permutation mixes axes of different lengths")
    arr = T.array()
    return bool(np.array_equal(arr, np.transpose(arr, perm)))


# ---------------------------------------------------------------- symmetric embeddings


def _multinomial(exps):
    return factorial(sum(exps)) // prod(factorial(e) for e in exps)


def _exps_of(index, n):
    e = [0] * n
    for i in index:
        e[i] += 1
    return tuple(e)


def _sym_block(coeffs_by_exp, n, d):
    """Symmetric d-fold tensor of an n-ary degree d form."""
    arr = np.empty((n,) * d, dtype=object)
    for idx in product(range(n), repeat=d):
        e = _exps_of(idx, n)
        arr[idx] = to_fraction(coeffs_by_exp.get(e, 0)) / _multinomial(e)
    return arr


_EMBED_KINDS = {
    "quartic": "bq",
    "bq": "bq",
    "cubic-pair": "cubic-pair",
    "ternary-cubic": "ternary-cubic",
    "tc": "ternary-cubic",
    "f22": "f22",
    "binary-cubic": "binary-cubic",
}


def sym_embed(coeffs, kind: str) -> RationalTensor:
    """Symmetric tensor whose symmetrized readout is the given form.

    kinds: ``quartic``/``bq`` (5 coefficients, 2x2x2x2 fully symmetric),
    ``cubic-pair`` (two binary cubics, 2 x Sym^3 2), ``ternary-cubic``
    (10 coefficients, 3x3x3 fully symmetric), ``f22`` ((2,2) form,
    Sym^2 2 x Sym^2 2) and ``binary-cubic`` (4 coefficients, 2x2x2).
    Coefficients are those of the plain monomial expansion; the multinomial
    weights are divided out.
    """
    kind = _EMBED_KINDS.get(kind)
    coeffs = [to_fraction(c) for c in coeffs]
    if kind == "bq":
        _need(coeffs, 5)
        return RationalTensor.from_array(_sym_block(dict(zip(BQ_EXPONENTS, coeffs)), 2, 4), "full-sym")
    if kind == "binary-cubic":
        _need(coeffs, 4)
        return RationalTensor.from_array(_sym_block(dict(zip(BC_EXPONENTS, coeffs)), 2, 3), "full-sym")
    if kind == "ternary-cubic":
        _need(coeffs, 10)
        return RationalTensor.from_array(_sym_block(dict(zip(TC_EXPONENTS, coeffs)), 3, 3), "full-sym")
    if kind == "cubic-pair":
        _need(coeffs, 8)
        blocks = [_sym_block(dict(zip(BC_EXPONENTS, coeffs[4 * i: 4 * i + 4])), 2, 3) for i in range(2)]
        return RationalTensor.from_array(np.stack(blocks), "sym-last-3")
    if kind == "f22":
        _need(coeffs, 9)
        arr = np.empty((2, 2, 2, 2), dtype=object)
        table = dict(zip(F22_EXPONENTS, coeffs))
        for i, j, k, l in product(range(2), repeat=4):
            ew, ex = _exps_of((i, j), 2), _exps_of((k, l), 2)
            arr[i, j, k, l] = table[(ew, ex)] / (_multinomial(ew) * _multinomial(ex))
        return RationalTensor.from_array(arr, "sym22")
    raise ValueError(f"unknown embedding kind {kind!r}")


def _need(coeffs, n):
    if len(coeffs) != n:
        raise ShapeMismatch(f"expected {n} coefficients, got {len(coeffs)}")


def sym_readout(T: RationalTensor, kind: str):
    """Inverse of sym_embed: the form coefficients of a symmetric tensor."""
    kind = _EMBED_KINDS.get(kind)
    arr = T.array()

    def read(block, n, exps):
        out = []
        for e in exps:
            idx = tuple(i for i in range(n) for _ in range(e[i]))
            out.append(block[idx] * _multinomial(e))
        return out

    if kind == "bq":
        return read(arr, 2, BQ_EXPONENTS)
    if kind == "binary-cubic":
        return read(arr, 2, BC_EXPONENTS)
    if kind == "ternary-cubic":
        return read(arr, 3, TC_EXPONENTS)
    if kind == "cubic-pair":
        return read(arr[0], 2, BC_EXPONENTS) + read(arr[1], 2, BC_EXPONENTS)
    if kind == "f22":
        out = []
        for ew, ex in F22_EXPONENTS:
            iw = tuple(i for i in range(2) for _ in range(ew[i]))
            ix = tuple(i for i in range(2) for _ in range(ex[i]))
            out.append(arr[iw + ix] * _multinomial(ew) * _multinomial(ex))
        return out
    raise ValueError(f"unknown embedding kind {kind!r}")


# ---------------------------------------------------------------- skew embeddings


def _perm_sign(p):
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def skew_embed(T: RationalTensor, kind: str) -> RationalTensor:
    """Skew-symmetrizing embeddings, stored as full antisymmetric tensors.

    ``2,2``: hypercube to 2 x 2 x (4x4 skew), phi(r,s,(t,u),(v,w)) = phi(r,s,t,w) - phi(r,s,v,u).
    ``2,2,2``: hypercube to 2 x (alternating 3-tensor on 6 = 2+2+2).
    ``3,3``: Rubik's cube to 3 x (6x6 skew), phi(r,(s,t),(u,v)) = phi(r,s,v) - phi(r,u,t).
    """
    kind = kind.replace(" ", "")
    arr = T.array()
    zero = Fraction(0)
    if kind == "2,2":
        if T.shape != (2, 2, 2, 2):
            raise ShapeMismatch("kind 2,2 needs a hypercube")
        out = np.full((2, 2, 4, 4), zero, dtype=object)
        for i, j, k, l in product(range(2), repeat=4):
            out[i, j, k, 2 + l] = arr[i, j, k, l]
            out[i, j, 2 + l, k] = -arr[i, j, k, l]
        return RationalTensor.from_array(out)
    if kind == "2,2,2":
        if T.shape != (2, 2, 2, 2):
            raise ShapeMismatch("kind 2,2,2 needs a hypercube")
        out = np.full((2, 6, 6, 6), zero, dtype=object)
        for i, j, k, l in product(range(2), repeat=4):
            slots = (j, 2 + k, 4 + l)
            for p in permutations(range(3)):
                idx = tuple(slots[p[m]] for m in range(3))
                out[(i,) + idx] += _perm_sign(p) * arr[i, j, k, l]
        return RationalTensor.from_array(out)
    if kind == "3,3":
        if T.shape != (3, 3, 3):
            raise ShapeMismatch("kind 3,3 needs a 3x3x3 cube")
        out = np.full((3, 6, 6), zero, dtype=object)
        for i, j, k in product(range(3), repeat=3):
            out[i, j, 3 + k] = arr[i, j, k]
            out[i, 3 + k, j] = -arr[i, j, k]
        return RationalTensor.from_array(out)
    raise ValueError(f"unknown skew embedding kind {kind!r}")


def packed_wedge(T: RationalTensor, k: int):
    """Packed coordinates (i1 < ... < ik) of the trailing alternating k axes."""
    arr = T.array()
    n = arr.shape[-1]
    lead = arr.shape[: arr.ndim - k]

    out = []
    for head in product(*(range(m) for m in lead)):
        for comb in combinations(range(n), k):
            out.append(arr[head + comb])
    return out


def form_poly(coeffs, kind: str) -> Poly:
    """The polynomial of a coefficient list in one of the normative orders."""
    coeffs = [to_fraction(c) for c in coeffs]
    if kind == "bq":
        return Poly(2, dict(zip(BQ_EXPONENTS, coeffs)))
    if kind == "binary-cubic":
        return Poly(2, dict(zip(BC_EXPONENTS, coeffs)))
    if kind == "tc":
        return Poly(3, dict(zip(TC_EXPONENTS, coeffs)))
    if kind == "f22":
        return Poly(4, {ew + ex: c for (ew, ex), c in zip(F22_EXPONENTS, coeffs)})
    raise ValueError(f"unknown form kind {kind!r}")


def form_coeffs(p: Poly, kind: str):
    if kind == "bq":
        return [p.coeff(e) for e in BQ_EXPONENTS]
    if kind == "binary-cubic":
        return [p.coeff(e) for e in BC_EXPONENTS]
    if kind == "tc":
        return [p.coeff(e) for e in TC_EXPONENTS]
    if kind == "f22":
        return [p.coeff(ew + ex) for ew, ex in F22_EXPONENTS]
    raise ValueError(f"unknown form kind {kind!r}")


def random_unimodular(n: int, rng, steps: int = 6, bound: int = 3):
    """A random integer matrix of determinant 1: a product of elementary matrices."""
    g = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-bound, bound)
        # row i += c * row j
        g[i] = [a + c * b for a, b in zip(g[i], g[j])]
    return g
