"""Generalized Weierstrass curves over Q with the exact group law."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import gmpy2

from .errors import PointNotOnCurve
from .exact import fraction_str, to_fraction

__all__ = ["WeierstrassCurve", "CurvePoint", "O", "curve_new", "add_points", "neg_point", "mul_point", "torsion_order",
           "isomorphism_scale", "transport"]


@dataclass(frozen=True)
class CurvePoint:
    """Affine point (x, y), or the point at infinity when ``x`` is None."""

    x: Fraction | None = None
    y: Fraction | None = None

    @property
    def is_zero(self) -> bool:
        return self.x is None

    @classmethod
    def affine(cls, x, y) -> "CurvePoint":
        return cls(to_fraction(x), to_fraction(y))

    def __repr__(self):
        if self.is_zero:
            return "O"
        return f"({fraction_str(self.x)}, {fraction_str(self.y)})"


O = CurvePoint()


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction
    disc: Fraction = field(init=False, compare=False)

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, to_fraction(getattr(self, name)))
        b2, b4, b6, b8 = self.b_invariants
        object.__setattr__(self, "disc", -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6)

    @property
    def a(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b_invariants(self):
        a1, a2, a3, a4, a6 = self.a
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    @property
    def c4(self):
        b2, b4, _, _ = self.b_invariants
        return b2 * b2 - 24 * b4

    @property
    def c6(self):
        b2, b4, b6, _ = self.b_invariants
        return -b2**3 + 36 * b2 * b4 - 216 * b6

    @property
    def singular(self) -> bool:
        return self.disc == 0

    @property
    def j_invariant(self) -> Fraction:
        if self.singular:
            raise ZeroDivisionError("singular curve has no j-invariant")
        return self.c4**3 / self.disc

    def contains(self, P: CurvePoint) -> bool:
        if P.is_zero:
            return True
        x, y = P.x, P.y
        return y * y + self.a1 * x * y + self.a3 * y == x**3 + self.a2 * x * x + self.a4 * x + self.a6

    def short_model(self):
        """(curve y^2 = x^3 - 27 c4 x - 54 c6, map of points into it)."""
        b2 = self.b_invariants[0]
        target = WeierstrassCurve(0, 0, 0, -27 * self.c4, -54 * self.c6)

        def to_short(P: CurvePoint) -> CurvePoint:
            if P.is_zero:
                return O
            return CurvePoint(36 * P.x + 3 * b2, 108 * (2 * P.y + self.a1 * P.x + self.a3))

        return target, to_short

    def __repr__(self):
        return "WeierstrassCurve(" + ", ".join(fraction_str(c) for c in self.a) + ")"


def curve_new(a1, a2, a3, a4, a6) -> WeierstrassCurve:
    return WeierstrassCurve(a1, a2, a3, a4, a6)


def _check(E, P):
    if not E.contains(P):
        raise PointNotOnCurve(f"{P!r} is not on {E!r}")


def neg_point(E: WeierstrassCurve, P: CurvePoint) -> CurvePoint:
    _check(E, P)
    if P.is_zero:
        return O
    return CurvePoint(P.x, -P.y - E.a1 * P.x - E.a3)


def add_points(E: WeierstrassCurve, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    _check(E, P)
    _check(E, Q)
    if P.is_zero:
        return Q
    if Q.is_zero:
        return P
    a1, a2, a3, a4, a6 = E.a
    if P.x == Q.x:
        if P.y + Q.y + a1 * Q.x + a3 == 0:
            return O
        num = 3 * P.x * P.x + 2 * a2 * P.x + a4 - a1 * P.y
        den = 2 * P.y + a1 * P.x + a3
    else:
        num = Q.y - P.y
        den = Q.x - P.x
    lam = num / den
    nu = P.y - lam * P.x
    x3 = lam * lam + a1 * lam - a2 - P.x - Q.x
    y3 = -(lam + a1) * x3 - nu - a3
    return CurvePoint(x3, y3)


def mul_point(E: WeierstrassCurve, n: int, P: CurvePoint) -> CurvePoint:
    if n < 0:
        return mul_point(E, -n, neg_point(E, P))
    result, base = O, P
    _check(E, P)
    while n:
        if n & 1:
            result = add_points(E, result, base)
        n >>= 1
        if n:
            base = add_points(E, base, base)
    return result


def torsion_order(E: WeierstrassCurve, P: CurvePoint, bound: int = 12):
    """Least n <= bound with nP = O, else None."""
    _check(E, P)
    Q = P
    for n in range(1, bound + 1):
        if Q.is_zero:
            return n
        Q = add_points(E, Q, P)
    return None


def _rational_root(q: Fraction, n: int):
    """The nonnegative rational n-th root of q >= 0 if it exists."""
    q = to_fraction(q)
    if q < 0:
        return None
    num, ok1 = gmpy2.iroot(gmpy2.mpz(q.numerator), n)
    den, ok2 = gmpy2.iroot(gmpy2.mpz(q.denominator), n)
    return Fraction(int(num), int(den)) if ok1 and ok2 else None


def isomorphism_scale(E1: WeierstrassCurve, E2: WeierstrassCurve):
    """u > 0 with c4(E2) = u^-4 c4(E1) and c6(E2) = u^-6 c6(E1), or None.

    With such u the short model of E1 maps to that of E2 by
    (x, y) -> (x / u^2, y / u^3), up to the automorphism -1.
    """
    if E1.singular or E2.singular:
        return None
    c4a, c6a, c4b, c6b = E1.c4, E1.c6, E2.c4, E2.c6
    if (c4a == 0) != (c4b == 0) or (c6a == 0) != (c6b == 0):
        return None
    if c4a == 0:
        r = c6a / c6b
        u = _rational_root(abs(r), 6)
        return u if u is not None and r > 0 else None
    if c6a == 0:
        u = _rational_root(c4a / c4b, 4)
        return u
    u2 = (c6a / c6b) / (c4a / c4b)
    u = _rational_root(u2, 2)
    if u is None or c4a != u**4 * c4b or c6a != u**6 * c6b:
        return None
    return u


def transport(E1: WeierstrassCurve, E2: WeierstrassCurve, P: CurvePoint):
    """Image of P on E2 under the isomorphism E1 -> E2 with positive scale u.

    None if the curves are not isomorphic; the other choice of u gives the
    negative of the returned point.
    """
    u = isomorphism_scale(E1, E2)
    if u is None:
        return None
    Q = E1.short_model()[1](P)
    if Q.is_zero:
        return O
    X, Y = Q.x / u**2, Q.y / u**3
    x = (X - 3 * E2.b_invariants[0]) / 36
    return CurvePoint(x, (Y / 108 - E2.a1 * x - E2.a3) / 2)
