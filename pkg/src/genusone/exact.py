"""Exact arithmetic core.

Sparse multivariate polynomials over the rationals, exact kernels (fraction
free elimination with an optional multimodular path), rational roots of
univariate polynomials, Lagrange interpolation and functions on a fixed
Weierstrass curve.

Coefficients are ``fractions.Fraction`` throughout; Python integers give the
arbitrary precision we need.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd, lcm

import gmpy2

from .errors import InconsistentSamples

__all__ = [
    "Poly",
    "to_fraction",
    "fraction_str",
    "grlex_key",
    "monomials",
    "det",
    "exact_kernel",
    "rank",
    "solve_unique",
    "rational_roots",
    "lagrange_interpolate",
    "RatFunc",
    "CurveFunction",
    "express_in_basis",
]


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, str)):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted")
    return Fraction(value)


def fraction_str(value) -> str:
    value = to_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def grlex_key(exp):
    """Sort key for graded lexicographic order (ascending)."""
    return (sum(exp), tuple(exp))


def monomials(nvars: int, degree: int):
    """All exponent vectors of the given total degree, grlex descending."""
    if nvars == 0:
        return [()] if degree == 0 else []
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for k in range(left, -1, -1):
            rec(prefix + (k,), left - k, slots - 1)

    rec((), degree, nvars)
    return out


class Poly:
    """Sparse polynomial with Fraction coefficients.

    ``terms`` maps exponent tuples to nonzero Fractions. Instances are treated
    as immutable.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != nvars:
                    raise ValueError("exponent vector of wrong length")
                c = to_fraction(c)
                if c:
                    clean[exp] = clean.get(exp, 0) + c
                    if not clean[exp]:
                        del clean[exp]
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def var(cls, i: int, nvars: int) -> "Poly":
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw(nvars, {tuple(exp): Fraction(1)})

    @classmethod
    def const(cls, c, nvars: int) -> "Poly":
        c = to_fraction(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def gens(cls, nvars: int):
        return [cls.var(i, nvars) for i in range(nvars)]

    @classmethod
    def from_univariate(cls, coeffs) -> "Poly":
        """Univariate polynomial from coefficients listed from degree 0 up."""
        return cls(1, {(k,): c for k, c in enumerate(coeffs) if c})

    # -- basic queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coeff(self, exp) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def constant_value(self):
        """The value of a constant polynomial, else ValueError."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and (0,) * self.nvars in self.terms:
            return self.terms[(0,) * self.nvars]
        raise ValueError("polynomial is not constant")

    def sorted_terms(self):
        """Terms in grlex descending order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self):
        return self.sorted_terms()[0] if self.terms else None

    # -- arithmetic

    def _lift(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("variable counts differ")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Poly._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly._raw(self.nvars, {})
            return Poly._raw(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return Poly._raw(self.nvars, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Poly.const(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.nvars)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- evaluation and calculus

    def __call__(self, *point):
        return self.evaluate(point)

    def evaluate(self, point):
        """Evaluate at a point; entries may be Fractions or Polys."""
        if len(point) != self.nvars:
            raise ValueError("point has wrong dimension")
        point = [to_fraction(p) if not isinstance(p, Poly) else p for p in point]
        total = 0
        powers = [dict() for _ in point]
        for exp, c in self.terms.items():
            term = c
            for i, k in enumerate(exp):
                if k:
                    pw = powers[i].get(k)
                    if pw is None:
                        pw = point[i] ** k
                        powers[i][k] = pw
                    term = term * pw
            total = total + term
        return total

    def diff(self, i: int) -> "Poly":
        terms = {}
        for exp, c in self.terms.items():
            k = exp[i]
            if k:
                e = list(exp)
                e[i] -= 1
                terms[tuple(e)] = c * k
        return Poly._raw(self.nvars, terms)

    def homogeneous_coeffs(self, degree: int):
        """Coefficient list over ``monomials(nvars, degree)``."""
        return [self.coeff(m) for m in monomials(self.nvars, degree)]

    @classmethod
    def from_homogeneous_coeffs(cls, nvars: int, degree: int, coeffs) -> "Poly":
        mons = monomials(nvars, degree)
        if len(coeffs) != len(mons):
            raise ValueError(f"expected {len(mons)} coefficients, got {len(coeffs)}")
        return cls(nvars, dict(zip(mons, coeffs)))

    def univariate_coeffs(self):
        """Coefficients from degree 0 upwards (univariate only)."""
        if self.nvars != 1:
            raise ValueError("not univariate")
        if not self.terms:
            return []
        out = [Fraction(0)] * (self.degree() + 1)
        for (k,), c in self.terms.items():
            out[k] = c
        return out

    def primitive_integer_form(self) -> "Poly":
        """Integral, content free, positive leading coefficient (grlex)."""
        if not self.terms:
            return self
        den = reduce(lcm, (c.denominator for c in self.terms.values()), 1)
        nums = [int(c * den) for c in self.terms.values()]
        g = reduce(gcd, nums, 0)
        lead = self.leading_term()[1]
        if lead < 0:
            g = -g
        return Poly._raw(self.nvars, {e: Fraction(int(c * den) // g) for e, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        names = "xyzwuvst"
        parts = []
        for exp, c in self.sorted_terms():
            mono = []
            for i, k in enumerate(exp):
                name = names[i] if self.nvars <= len(names) else f"x{i}"
                if k == 1:
                    mono.append(name)
                elif k:
                    mono.append(f"{name}^{k}")
            body = "*".join(mono)
            if not body:
                parts.append(fraction_str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{fraction_str(c)}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------- linear algebra


def det(matrix):
    """Determinant over any commutative ring of Fractions or Polys."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = matrix
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    if all(not isinstance(x, Poly) for row in matrix for x in row):
        return _bareiss_det([[to_fraction(x) for x in row] for row in matrix])
    total = 0
    for j in range(n):
        if isinstance(matrix[0][j], Poly) and matrix[0][j].is_zero():
            continue
        if not isinstance(matrix[0][j], Poly) and not matrix[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _bareiss_det(m):
    n = len(m)
    den = reduce(lcm, (x.denominator for row in m for x in row), 1)
    a = [[int(x * den) for x in row] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], den ** n)


def _integer_rows(matrix):
    rows = []
    for row in matrix:
        row = [to_fraction(x) for x in row]
        den = reduce(lcm, (x.denominator for x in row), 1)
        rows.append([int(x * den) for x in row])
    return rows


def _fraction_free_echelon(rows, ncols):
    """Integer Bareiss echelon form; pivot is the first nonzero in column order."""
    a = [list(r) for r in rows]
    nrows = len(a)
    pivots = []
    r, prev = 0, 1
    for c in range(ncols):
        if r == nrows:
            break
        sel = next((i for i in range(r, nrows) if a[i][c]), None)
        if sel is None:
            continue
        if sel != r:
            a[r], a[sel] = a[sel], a[r]
        p = a[r][c]
        prow = a[r]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            if f:
                for j in range(c + 1, ncols):
                    row[j] = (row[j] * p - f * prow[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    if row[j]:
                        row[j] = (row[j] * p) // prev
            row[c] = 0
        prev = p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def _kernel_from_echelon(ech, pivots, ncols):
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for k in range(len(pivots) - 1, -1, -1):
            row = ech[k]
            s = sum((row[j] * v[j] for j in range(pivots[k] + 1, ncols) if row[j] and v[j]), Fraction(0))
            v[pivots[k]] = -s / row[pivots[k]]
        basis.append(tuple(v))
    return basis


# multimodular path -------------------------------------------------------------

_MODULAR_THRESHOLD = 40_000


def _primes(start=(1 << 62)):
    p = int(gmpy2.next_prime(start))
    while True:
        yield p
        p = int(gmpy2.next_prime(p))


def _rref_mod(rows, ncols, p):
    a = [[x % p for x in r] for r in rows]
    nrows = len(a)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        sel = next((i for i in range(r, nrows) if a[i][c]), None)
        if sel is None:
            continue
        a[r], a[sel] = a[sel], a[r]
        inv = pow(a[r][c], -1, p)
        prow = [(x * inv) % p for x in a[r]]
        a[r] = prow
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                row = a[i]
                for j in nz:
                    row[j] = (row[j] - f * prow[j]) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def _rational_reconstruct(u, m):
    """Rational n/d with n = u*d mod m and |n|, d <= sqrt(m/2), else None."""
    u %= m
    bound = gmpy2.isqrt(m // 2)
    r0, r1 = m, u
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if gcd(int(r1), int(s1)) != 1:
        return None
    return Fraction(int(r1), int(s1))


def _kernel_modular(rows, ncols, max_primes=400):
    best = None  # (rank, pivots)
    residues, modulus = None, 1
    previous = None
    for count, p in enumerate(_primes()):
        if count >= max_primes:
            break
        ech, pivots = _rref_mod(rows, ncols, p)
        key = (len(pivots), [-c for c in pivots])
        if best is not None and key < best:
            continue  # unlucky prime
        free = [c for c in range(ncols) if c not in set(pivots)]
        # kernel vector entries at pivot positions: -ech[k][f]
        vals = [[(-ech[k][f]) % p for k in range(len(pivots))] for f in free]
        if best is None or key > best:
            best, residues, modulus = key, vals, p
            previous = None
            continue
        # combine by CRT
        inv = pow(modulus, -1, p)
        residues = [
            [r + modulus * (((v - r) * inv) % p) for r, v in zip(rv, vv)]
            for rv, vv in zip(residues, vals)
        ]
        modulus *= p
        candidate = []
        ok = True
        for rv in residues:
            row = []
            for r in rv:
                q = _rational_reconstruct(r, modulus)
                if q is None:
                    ok = False
                    break
                row.append(q)
            if not ok:
                break
            candidate.append(row)
        if not ok:
            previous = None
            continue
        if candidate != previous:
            previous = candidate
            continue
        basis = _assemble_kernel(candidate, pivots, ncols)
        if all(_row_dot(r, v) == 0 for v in basis for r in rows):
            return basis
        previous = None
    raise ArithmeticError("multimodular kernel did not stabilise")


def _row_dot(row, v):
    return sum((a * b for a, b in zip(row, v) if a and b), Fraction(0))


def _assemble_kernel(values, pivots, ncols):
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f, pv in zip(free, values):
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for c, x in zip(pivots, pv):
            v[c] = x
        basis.append(tuple(v))
    return basis


def exact_kernel(matrix, modular=None):
    """Basis of the right kernel of a rational matrix.

    The basis is the reduced echelon one: one vector per non-pivot column,
    carrying a 1 there and 0 in the other non-pivot columns. Pivots are chosen
    as the first nonzero entry in column order. ``modular`` forces (True) or
    forbids (False) the multimodular path; by default it is used for large
    systems only. Both paths return identical output.
    """
    if not matrix or not matrix[0]:
        raise ValueError("matrix must be nonempty")
    ncols = len(matrix[0])
    rows = [r for r in _integer_rows(matrix) if any(r)]
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    if modular is None:
        modular = len(rows) * ncols >= _MODULAR_THRESHOLD
    if modular:
        return _kernel_modular(rows, ncols)
    ech, pivots = _fraction_free_echelon(rows, ncols)
    return _kernel_from_echelon(ech, pivots, ncols)


def rank(matrix) -> int:
    rows = [r for r in _integer_rows(matrix) if any(r)]
    if not rows:
        return 0
    _, pivots = _fraction_free_echelon(rows, len(rows[0]))
    return len(pivots)


def solve_unique(matrix, rhs):
    """The unique solution x of matrix @ x = rhs, or None if there is none.

    Raises ValueError when the solution is not unique.
    """
    n = len(matrix[0])
    aug = [list(row) + [-to_fraction(b)] for row, b in zip(matrix, rhs)]
    ker = exact_kernel(aug)
    # solutions correspond to kernel vectors with last coordinate 1
    with_last = [v for v in ker if v[n]]
    if not with_last:
        return None
    if len(ker) > 1:
        raise ValueError("solution is not unique")
    v = with_last[0]
    return [x / v[n] for x in v[:n]]


# ---------------------------------------------------------------- roots


def _sturm_sequence(coeffs):
    """coeffs: integer list, highest degree first."""
    def deriv(c):
        n = len(c) - 1
        return [a * (n - i) for i, a in enumerate(c[:-1])]

    def prem(a, b):
        a = [Fraction(x) for x in a]
        while len(a) >= len(b) and any(a):
            f = a[0] / b[0]
            for i in range(len(b)):
                a[i] -= f * b[i]
            a.pop(0)
        while a and a[0] == 0:
            a.pop(0)
        return a

    seq = [[Fraction(x) for x in coeffs], [Fraction(x) for x in deriv(coeffs)]]
    while seq[-1] and len(seq[-1]) > 1:
        r = prem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-x for x in r])
    return seq


def _horner(c, x):
    acc = Fraction(0)
    for a in c:
        acc = acc * x + a
    return acc


def _sign_changes(seq, x):
    signs = [v for v in (_horner(s, x) for s in seq) if v]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def rational_roots(p: Poly):
    """Distinct rational roots of a univariate polynomial, ascending.

    Works on the primitive integer form a_n x^n + ... + a_0. For a rational
    root r = u/v in lowest terms v divides a_n, so a_n * r is an integer. Real
    roots are isolated by a Sturm sequence and narrowed until the scaled
    isolating interval contains at most two integers, which are tested exactly.
    This replaces divisor enumeration, whose cost explodes with the size of the
    constant term.
    """
    if p.nvars != 1:
        raise ValueError("univariate polynomial expected")
    if p.is_zero():
        raise ValueError("zero polynomial")
    c = p.primitive_integer_form().univariate_coeffs()
    roots = set()
    # strip x^k factors
    k = 0
    while c[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
    c = [Fraction(x) for x in c[k:]]
    if len(c) == 1:
        return sorted(roots)
    # squarefree part keeps the Sturm count valid at rational split points
    deriv = [x * i for i, x in enumerate(c)][1:]
    g = _u_gcd(c, deriv)
    if len(g) > 1:
        c, _ = _u_divmod(c, g)
    c = Poly.from_univariate(c).primitive_integer_form().univariate_coeffs()
    c = [int(x) for x in c]
    if len(c) == 1:
        return sorted(roots)
    high = c[::-1]  # highest first
    lead = abs(high[0])
    bound = 1 + Fraction(max(abs(x) for x in high[1:]), abs(high[0]))
    seq = _sturm_sequence(high)

    def isolate(lo, hi, n_lo, n_hi):
        count = n_lo - n_hi
        if count == 0:
            return
        if (hi - lo) * lead < 1 or count == 1 and (hi - lo) * lead < 2:
            for m in range(int(lo * lead) - 1, int(hi * lead) + 2):
                r = Fraction(m, lead)
                if lo < r <= hi and _horner(high, r) == 0:
                    roots.add(r)
            return
        mid = (lo + hi) / 2
        n_mid = _sign_changes(seq, mid)
        isolate(lo, mid, n_lo, n_mid)
        isolate(mid, hi, n_mid, n_hi)

    lo, hi = -bound, bound
    isolate(lo, hi, _sign_changes(seq, lo), _sign_changes(seq, hi))
    return sorted(roots)


# ---------------------------------------------------------------- interpolation


def lagrange_interpolate(samples, degree_bound: int) -> Poly:
    """Interpolant of degree <= degree_bound through (t, v) samples.

    The first degree_bound + 1 samples fix the polynomial; any further samples
    are validation points and raise InconsistentSamples when missed.
    """
    samples = [(to_fraction(t), to_fraction(v)) for t, v in samples]
    ts = [t for t, _ in samples]
    if len(set(ts)) != len(ts):
        raise ValueError("sample parameters must be distinct")
    if len(samples) < degree_bound + 1:
        raise ValueError("not enough samples")
    base = samples[: degree_bound + 1]
    # Newton divided differences
    xs = [t for t, _ in base]
    coef = [v for _, v in base]
    n = len(base)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    t = Poly.var(0, 1)
    poly = Poly.const(coef[-1], 1)
    for i in range(n - 2, -1, -1):
        poly = poly * (t - xs[i]) + coef[i]
    for tv, v in samples[degree_bound + 1:]:
        if poly.evaluate((tv,)) != v:
            raise InconsistentSamples(f"sample at t={fraction_str(tv)} is off the interpolant")
    return poly


# ---------------------------------------------------------------- univariate helpers


def _u_trim(c):
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return c


def _u_divmod(a, b):
    a = [Fraction(x) for x in a]
    b = _u_trim(b)
    if not b:
        raise ZeroDivisionError
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    a = _u_trim(a)
    while len(a) >= len(b):
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = f
        for i, x in enumerate(b):
            a[i + shift] -= f * x
        a = _u_trim(a)
    return _u_trim(q), a


def _u_gcd(a, b):
    a, b = _u_trim(a), _u_trim(b)
    while b:
        _, r = _u_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    return [x / a[-1] for x in a]


def _u_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _u_trim(out)


def _u_add(a, b):
    n = max(len(a), len(b))
    return _u_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _u_scale(a, s):
    return _u_trim([x * s for x in a])


def _u_eval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


class RatFunc:
    """Univariate rational function num/den in x.

    Normal form: coprime, the denominator integral and content free with
    positive leading coefficient; the numerator is rational.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        num = _u_trim(Fraction(x) for x in num)
        den = _u_trim(Fraction(x) for x in den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = (), (Fraction(1),)
            return
        g = _u_gcd(num, den)
        if len(g) > 1:
            num, _ = _u_divmod(num, g)
            den, _ = _u_divmod(den, g)
        dl = reduce(lcm, (x.denominator for x in den), 1)
        ints = [int(x * dl) for x in den]
        content = reduce(gcd, ints, 0)
        if ints[-1] < 0:
            content = -content
        scale = Fraction(dl, content)
        self.num = tuple(x * scale for x in num)
        self.den = tuple(Fraction(x, content) for x in ints)

    @classmethod
    def poly(cls, coeffs):
        return cls(coeffs)

    def is_zero(self):
        return not self.num

    def __add__(self, other):
        other = _as_ratfunc(other)
        return RatFunc(_u_add(_u_mul(self.num, other.den), _u_mul(other.num, self.den)), _u_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc([-x for x in self.num], self.den)

    def __sub__(self, other):
        return self + (-_as_ratfunc(other))

    def __rsub__(self, other):
        return _as_ratfunc(other) - self

    def __mul__(self, other):
        other = _as_ratfunc(other)
        return RatFunc(_u_mul(self.num, other.num), _u_mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other.is_zero():
            raise ZeroDivisionError
        return RatFunc(_u_mul(self.num, other.den), _u_mul(self.den, other.num))

    def __eq__(self, other):
        try:
            other = _as_ratfunc(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        x = to_fraction(x)
        d = _u_eval(self.den, x)
        if not d:
            raise ZeroDivisionError("pole")
        return _u_eval(self.num, x) / d

    def __repr__(self):
        return f"RatFunc({[fraction_str(c) for c in self.num]}, {[fraction_str(c) for c in self.den]})"


def _as_ratfunc(v):
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, (int, Fraction)):
        return RatFunc([v])
    raise TypeError(f"cannot convert {type(v).__name__} to RatFunc")


X = RatFunc([0, 1])


class CurveFunction:
    """The function a(x) + b(x)*y on a fixed Weierstrass curve."""

    __slots__ = ("curve", "a", "b")

    def __init__(self, curve, a=0, b=0):
        self.curve = curve
        self.a = _as_ratfunc(a)
        self.b = _as_ratfunc(b)

    @classmethod
    def x(cls, curve):
        return cls(curve, X, 0)

    @classmethod
    def y(cls, curve):
        return cls(curve, 0, 1)

    def _coerce(self, other):
        if isinstance(other, CurveFunction):
            if other.curve != self.curve:
                raise ValueError("functions live on different curves")
            return other
        return CurveFunction(self.curve, other, 0)

    def __add__(self, other):
        other = self._coerce(other)
        return CurveFunction(self.curve, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return CurveFunction(self.curve, -self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        a1, a2, a3, a4, a6 = self.curve.a
        # y^2 = F(x) - (a1 x + a3) y
        F = RatFunc([a6, a4, a2, 1])
        L = RatFunc([a3, a1])
        bd = self.b * other.b
        a = self.a * other.a + bd * F
        b = self.a * other.b + self.b * other.a - bd * L
        return CurveFunction(self.curve, a, b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a function of x alone (all we need)."""
        other = self._coerce(other)
        if not other.b.is_zero():
            # multiply by the conjugate: (c + d y)(c + d y') with y' = -y - a1 x - a3
            a1, a2, a3, a4, a6 = self.curve.a
            conj = CurveFunction(self.curve, other.a - other.b * RatFunc([a3, a1]), -other.b)
            norm = other * conj
            return (self * conj) / norm
        return CurveFunction(self.curve, self.a / other.a, self.b / other.a)

    def __eq__(self, other):
        if not isinstance(other, CurveFunction):
            return NotImplemented
        return self.curve == other.curve and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __call__(self, point):
        """Value at an affine point (x, y) where no pole occurs."""
        x, y = point
        return self.a(x) + self.b(x) * to_fraction(y)

    def __repr__(self):
        return f"CurveFunction({self.a!r} + {self.b!r}*y)"


def express_in_basis(f: CurveFunction, basis):
    """Coordinates of f in the span of the basis functions, or None.

    Clears a common denominator and matches coefficients of x^k and x^k*y.
    """
    funcs = [f] + list(basis)
    dens = [g.a.den for g in funcs] + [g.b.den for g in funcs]
    common = reduce(lambda p, q: _u_mul(p, _u_divmod(q, _u_gcd(p, q))[0]), dens, [Fraction(1)])

    def cleared(part):
        q, r = _u_divmod(_u_mul(part.num, common), part.den)
        assert not r
        return q

    cols = [(cleared(g.a), cleared(g.b)) for g in funcs]
    size_a = max(len(a) for a, _ in cols)
    size_b = max(len(b) for _, b in cols)

    def pad(c, n):
        return list(c) + [Fraction(0)] * (n - len(c))

    vectors = [pad(a, size_a) + pad(b, size_b) for a, b in cols]
    nrows = size_a + size_b
    matrix = [[vectors[j + 1][i] for j in range(len(basis))] for i in range(nrows)]
    rhs = [vectors[0][i] for i in range(nrows)]
    if not matrix:
        return [Fraction(0)] * len(basis)
    return solve_unique(matrix, rhs)


def rational_matrix(rows):
    return [[to_fraction(x) for x in row] for row in rows]


def all_index_tuples(shape):
    return product(*(range(n) for n in shape))
