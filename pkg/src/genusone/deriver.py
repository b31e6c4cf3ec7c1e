"""Invariant polynomials by infinitesimal invariance, plus calibration.

A representation is a tensor product of factors, each either a plain copy of
K^n or Sym^k K^n. Coordinates are index tuples; a Sym^k factor contributes the
exponent vector of a monomial and its coordinate is the coefficient of that
monomial in the form.

An invariant of SL_n on each factor is a polynomial of torus weight zero that
is killed by every raising operator E_ab (a < b). Restricting to weight-zero
monomials keeps the linear systems small; the kernel is computed exactly and
put in reduced echelon form over grlex-descending monomials, each basis
vector scaled to a primitive integer polynomial with positive leading
coefficient.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb

from filelock import FileLock

from .errors import CalibrationMissing, InconsistentAnchors, TooLarge
from .exact import Poly, exact_kernel, fraction_str, grlex_key, monomials, solve_unique

__all__ = [
    "RepDescriptor",
    "REPS",
    "derive_invariants",
    "CalibrationRecord",
    "calibrate",
    "get_calibration",
    "set_default_cache_dir",
    "tc_SdTd",
    "hc_basic",
    "CODE_VERSION",
]

CODE_VERSION = "1"
MONOMIAL_CEILING = 10**5


@dataclass(frozen=True)
class RepDescriptor:
    """Factors as (dimension, role) with role "plain" or "symK"."""

    factors: tuple

    def __post_init__(self):
        facs = tuple((int(n), str(role)) for n, role in self.factors)
        for n, role in facs:
            if role != "plain" and not (role.startswith("sym") and role[3:].isdigit()):
                raise ValueError(f"bad factor role {role!r}")
        object.__setattr__(self, "factors", facs)

    @classmethod
    def parse(cls, text: str) -> "RepDescriptor":
        """Parse e.g. "2 2 2 2", "3:sym3" or "2:sym2 2:sym2"."""
        out = []
        for part in text.replace(",", " ").split():
            n, _, role = part.partition(":")
            out.append((int(n), role or "plain"))
        return cls(tuple(out))

    def __str__(self):
        return " ".join(f"{n}:{role}" for n, role in self.factors)

    @property
    def factor_coords(self):
        coords = []
        for n, role in self.factors:
            if role == "plain":
                coords.append([tuple(int(i == j) for j in range(n)) for i in range(n)])
            else:
                coords.append(monomials(n, int(role[3:])))
        return coords

    @property
    def coordinates(self):
        """Coordinates as tuples of per-factor weight vectors."""
        return list(product(*self.factor_coords))

    @property
    def dimension(self) -> int:
        return len(self.coordinates)


REPS = {
    "bq": RepDescriptor(((2, "sym4"),)),
    "tc": RepDescriptor(((3, "sym3"),)),
    "f22": RepDescriptor(((2, "sym2"), (2, "sym2"))),
    "cube": RepDescriptor(((2, "plain"),) * 3),
    "hc": RepDescriptor(((2, "plain"),) * 4),
    "rc": RepDescriptor(((3, "plain"),) * 3),
}


# ---------------------------------------------------------------- derivation


def _weight_zero_monomials(coords, nfactors, dims, degree):
    """Exponent vectors over the coordinates with balanced weight per factor."""
    ncoords = len(coords)
    targets = []
    for f in range(nfactors):
        total = degree * sum(coords[0][f])
        if total % dims[f]:
            return []
        targets.append(total // dims[f])
    out = []
    # depth first with running weights and a remaining-degree bound
    weight = [[0] * dims[f] for f in range(nfactors)]
    exps = [0] * ncoords

    def feasible():
        return all(w <= targets[f] for f in range(nfactors) for w in weight[f])

    def rec(i, left):
        if left == 0:
            if all(w == targets[f] for f in range(nfactors) for w in weight[f]):
                out.append(tuple(exps))
            return
        if i == ncoords:
            return
        for k in range(left, -1, -1):
            if k:
                for f in range(nfactors):
                    for j, c in enumerate(coords[i][f]):
                        weight[f][j] += k * c
            exps[i] = k
            if feasible():
                rec(i + 1, left - k)
            exps[i] = 0
            if k:
                for f in range(nfactors):
                    for j, c in enumerate(coords[i][f]):
                        weight[f][j] -= k * c

    rec(0, degree)
    return out


def _raising_action(coords, factor, a, b):
    """Derivation for w_a d/dw_b on one factor: list of (src, dst, scale).

    Applied to a monomial in the coordinates it replaces one factor c_src by
    scale * c_dst, where dst = src - e_a + e_b and scale is dst_b. For a plain
    factor this is h_b d/dh_a.
    """
    index = {c: i for i, c in enumerate(coords)}
    out = []
    for i, c in enumerate(coords):
        w = c[factor]
        if w[a] == 0:
            continue
        nw = list(w)
        nw[a] -= 1
        nw[b] += 1
        dst = list(c)
        dst[factor] = tuple(nw)
        out.append((i, index[tuple(dst)], Fraction(nw[b])))
    return out


def derive_invariants(rep: RepDescriptor, degree: int, cache_dir=None, ceiling: int = MONOMIAL_CEILING):
    """Basis of the degree-d SL invariants of ``rep`` as Polys in its coordinates."""
    if isinstance(rep, str):
        rep = REPS.get(rep) or RepDescriptor.parse(rep)
    dim = rep.dimension
    if comb(degree + dim - 1, degree) > ceiling:
        raise TooLarge(f"{comb(degree + dim - 1, degree)} monomials exceed the ceiling {ceiling}")
    if cache_dir is not None:
        cached = _cache_read(cache_dir, rep, degree)
        if cached is not None:
            return cached
    basis = _derive(rep, degree)
    if cache_dir is not None:
        _cache_write(cache_dir, rep, degree, basis)
    return basis


def _derive(rep, degree):
    coords = rep.coordinates
    dims = [n for n, _ in rep.factors]
    nf = len(dims)
    cols = _weight_zero_monomials(coords, nf, dims, degree)
    if not cols:
        return []
    cols.sort(key=grlex_key, reverse=True)
    rows = {}
    for f in range(nf):
        for a in range(dims[f]):
            for b in range(a + 1, dims[f]):
                action = _raising_action(coords, f, a, b)
                by_src = {}
                for src, dst, s in action:
                    by_src.setdefault(src, []).append((dst, s))
                for j, mono in enumerate(cols):
                    for src, k in enumerate(mono):
                        if not k:
                            continue
                        for dst, s in by_src.get(src, ()):
                            img = list(mono)
                            img[src] -= 1
                            img[dst] += 1
                            key = (f, a, b, tuple(img))
                            row = rows.setdefault(key, {})
                            row[j] = row.get(j, 0) + k * s
    ncols = len(cols)
    matrix = [[row.get(j, 0) for j in range(ncols)] for row in rows.values()]
    if not matrix:
        kernel = [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    else:
        kernel = exact_kernel(matrix)
    n = len(coords)
    out = []
    for v in kernel:
        p = Poly(n, {cols[j]: c for j, c in enumerate(v) if c})
        out.append(p.primitive_integer_form())
    out.sort(key=lambda p: grlex_key(p.leading_term()[0]), reverse=True)
    return out


# ---------------------------------------------------------------- cache


_cache_mutex = threading.Lock()


def _cache_path(cache_dir, rep, degree):
    tag = str(rep).replace(" ", "_").replace(":", "-")
    return os.path.join(cache_dir, f"inv_{tag}_deg{degree}_v{CODE_VERSION}.g1inv")


def serialize_invariants(rep, degree, polys) -> str:
    lines = ["G1INV v1", f"{rep} ; {degree}"]
    for k, p in enumerate(polys):
        if k:
            lines.append("---")
        for exp, c in p.sorted_terms():
            lines.append(" ".join(map(str, exp)) + " : " + f"{c.numerator}/{c.denominator}")
    return "\n".join(lines) + "\n"


def parse_invariants(text: str):
    lines = text.splitlines()
    if not lines or lines[0] != "G1INV v1":
        raise ValueError("not a G1INV v1 file")
    desc, _, deg = lines[1].partition(" ; ")
    rep = RepDescriptor.parse(desc)
    n = rep.dimension
    polys, terms = [], {}
    for line in lines[2:]:
        if line == "---":
            polys.append(Poly(n, terms))
            terms = {}
            continue
        if not line.strip():
            continue
        exp, _, c = line.partition(" : ")
        terms[tuple(int(e) for e in exp.split())] = Fraction(c)
    if terms or polys:
        polys.append(Poly(n, terms))
    return rep, int(deg), polys


def _cache_read(cache_dir, rep, degree):
    path = _cache_path(cache_dir, rep, degree)
    if not os.path.exists(path):
        return None
    with open(path, encoding="ascii") as fh:
        text = fh.read()
    try:
        crep, cdeg, polys = parse_invariants(text)
    except (ValueError, IndexError):
        return None
    if crep != rep or cdeg != degree:
        return None
    return polys


def _atomic_write(path, text):
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with _cache_mutex, FileLock(path + ".lock"):
        tmp = f"{path}.{os.getpid()}.{threading.get_ident()}.tmp"
        with open(tmp, "w", encoding="ascii") as fh:
            fh.write(text)
        os.replace(tmp, path)


def _cache_write(cache_dir, rep, degree, polys):
    _atomic_write(_cache_path(cache_dir, rep, degree), serialize_invariants(rep, degree, polys))


# ---------------------------------------------------------------- evaluation helpers

_basis_memo = {}
_memo_lock = threading.Lock()


def _basis(name, degree):
    key = (name, degree)
    with _memo_lock:
        hit = _basis_memo.get(key)
    if hit is None:
        hit = derive_invariants(REPS[name], degree, cache_dir=_default_cache_dir)
        with _memo_lock:
            _basis_memo[key] = hit
    return hit


def _compile(poly: Poly):
    """Terms as (coefficient, [(coordinate, power), ...]) for fast evaluation."""
    return [(c, [(i, k) for i, k in enumerate(e) if k]) for e, c in poly.terms.items()]


def _eval_compiled(compiled, point):
    total = Fraction(0)
    for c, factors in compiled:
        term = c
        for i, k in factors:
            v = point[i]
            if not v:
                term = 0
                break
            term = term * (v if k == 1 else v**k)
        if term:
            total += term
    return total


_compiled_memo = {}


def _compiled(name, degree):
    key = (name, degree)
    hit = _compiled_memo.get(key)
    if hit is None:
        hit = [_compile(p) for p in _basis(name, degree)]
        _compiled_memo[key] = hit
    return hit


def tc_point(coeffs):
    """Coordinate vector of a ternary cubic given in the normative order."""
    from .tensor import TC_EXPONENTS

    table = dict(zip(TC_EXPONENTS, (Fraction(c) for c in coeffs)))
    return [table[c[0]] for c in REPS["tc"].coordinates]


def tc_raw(coeffs):
    """Uncalibrated (S, T) from the canonical derived degree 4 and 6 bases."""
    point = tc_point(coeffs)
    (s,) = _compiled("tc", 4)
    (t,) = _compiled("tc", 6)
    return _eval_compiled(s, point), _eval_compiled(t, point)


def tc_SdTd(coeffs, calibration=None):
    cal = calibration or get_calibration()
    S, T = tc_raw(coeffs)
    return cal.alpha * S, cal.beta * T


def hc_point(H):
    """Coordinates of a hypercube in derived order (row-major entries)."""
    arr = H.array()
    out = []
    for c in REPS["hc"].coordinates:
        idx = tuple(w.index(1) for w in c)
        out.append(arr[idx])
    return out


def hc_raw(H):
    """(p2, (P1, P2, P3)): uncalibrated degree 2 and degree 4 basis values."""
    point = hc_point(H)
    (p2,) = _compiled("hc", 2)
    quartics = _compiled("hc", 4)
    return _eval_compiled(p2, point), tuple(_eval_compiled(q, point) for q in quartics)


def hc_basic(H, calibration=None):
    """Calibrated (a2, a4, a4')."""
    cal = calibration or get_calibration()
    p2, quart = hc_raw(H)
    a2 = cal.hc_a2_scale * p2
    a4 = sum((m * q for m, q in zip(cal.hc_deg4_matrix[0], quart)), Fraction(0))
    a4p = sum((m * q for m, q in zip(cal.hc_deg4_matrix[1], quart)), Fraction(0))
    return a2, a4, a4p


# ---------------------------------------------------------------- calibration


@dataclass(frozen=True)
class CalibrationRecord:
    alpha: Fraction
    beta: Fraction
    hc_deg4_matrix: tuple
    hc_a2_scale: Fraction
    provenance: tuple = field(default=())

    def to_json(self):
        return {
            "alpha": fraction_str(self.alpha),
            "beta": fraction_str(self.beta),
            "hc-deg4-matrix": [[fraction_str(x) for x in row] for row in self.hc_deg4_matrix],
            "hc-a2-scale": fraction_str(self.hc_a2_scale),
            "provenance": list(self.provenance),
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            Fraction(data["alpha"]),
            Fraction(data["beta"]),
            tuple(tuple(Fraction(x) for x in row) for row in data["hc-deg4-matrix"]),
            Fraction(data["hc-a2-scale"]),
            tuple(data.get("provenance", ())),
        )


def _exact_root(q: Fraction, n: int):
    """The rational n-th root of q if there is one (real, sign preserving for odd n)."""
    from gmpy2 import iroot

    if q == 0:
        return Fraction(0)
    sign = 1
    if q < 0:
        if n % 2 == 0:
            return None
        sign = -1
    num, exact_n = iroot(abs(q.numerator), n)
    den, exact_d = iroot(q.denominator, n)
    if not (exact_n and exact_d):
        return None
    return sign * Fraction(int(num), int(den))


# default anchors: Rubik's targets (c6, c9, c12) and hypercube targets (E, P, P')
RC_ANCHORS = [(0, 1, 0), (1, 1, 1), (-1, 2, 3), (2, -1, 1)]
HC_ANCHORS = [
    ((0, 0, 0, -2, 5), (1, 2), (2, 3)),
    ((0, 0, 0, 2, 1), (0, 1), (1, 2)),
    ((0, 0, 0, Fraction(-23, 2), Fraction(23, 2)), (1, 1), (3, 2)),
    ((0, 0, 0, Fraction(-1, 3), Fraction(25, 3)), (-2, 1), (1, 3)),
    ((0, 0, 1, -1, 0), (0, 0), (2, 2)),
]


def rc_anchor_data(targets):
    """(cube, target) pairs for the Rubik's anchors."""
    from .rubiks import rc_construct

    return [(rc_construct(*t), tuple(Fraction(x) for x in t)) for t in targets]


def hc_anchor_data(targets):
    from .elliptic import CurvePoint, WeierstrassCurve
    from .hypercube import hc_construct

    out = []
    for a, p, q in targets:
        E = WeierstrassCurve(*a)
        P, Q = CurvePoint.affine(*p), CurvePoint.affine(*q)
        out.append((hc_construct(E, P, Q), (E, P, Q)))
    return out


def calibrate(rc_anchors=None, hc_anchors=None) -> CalibrationRecord:
    """Fix the normalizations from anchor orbits with known targets.

    ``rc_anchors``: (cube, (c6, c9, c12)) pairs. The cube's own invariants are
    (u^2 c6, u^3 c9, u^4 c12) for an unknown rational u (a product of
    determinants); c9 is the Strassen value so u^3 is known, and the two
    relations between (d4, d6) and (c6, c9, c12) give alpha and beta.

    ``hc_anchors``: (hypercube, (E, P, P')) pairs. With the short model of E,
    a8 = -27 I and a12 = -27 J give u^2 = lambda^4; a2 is the slope of the line
    through the marked points and (a4, a4') their x-coordinates, all up to the
    weights u, u^2. That leaves the sign of a2 open, fixed here by the
    quadruply symmetric relation I(q) = -4 a2.
    """
    from .classical import bq_IJ
    from .hypercube import hc_IJ
    from .rubiks import rc_strassen, rc_ternary_cubics
    from .tensor import sym_embed

    if rc_anchors is None:
        rc_anchors = rc_anchor_data(RC_ANCHORS)
    if hc_anchors is None:
        hc_anchors = hc_anchor_data(HC_ANCHORS)
    if len(rc_anchors) < 3 or len(hc_anchors) < 4:
        raise InconsistentAnchors("at least three Rubik's and four hypercube anchors are needed")

    alphas, betas = [], []
    for cube, (c6, c9, c12) in rc_anchors:
        if c9 == 0:
            raise InconsistentAnchors("Rubik's anchors need c9 != 0")
        f1 = rc_ternary_cubics(cube)[0]
        S, T = tc_raw(f1)
        u3 = rc_strassen(cube) / c9
        u = _exact_root(u3, 3)
        if u is None or u == 0:
            raise InconsistentAnchors("anchor weight is not a rational cube")
        D4 = 16 * c6 * c6 - 48 * c12
        D6 = -64 * c6**3 - 216 * c9 * c9 + 288 * c6 * c12
        if S:
            alphas.append(u**4 * D4 / S)
        elif D4:
            raise InconsistentAnchors("degree 4 invariant vanishes off target")
        if T:
            betas.append(u**6 * D6 / T)
        elif D6:
            raise InconsistentAnchors("degree 6 invariant vanishes off target")
    if not alphas or not betas or len(set(alphas)) != 1 or len(set(betas)) != 1:
        raise InconsistentAnchors(f"ternary cubic scales disagree: {alphas} {betas}")

    rows, rhs4, rhs4p, scales = [], [], [], []
    for H, (E, P, Q) in hc_anchors:
        I, J, _ = hc_IJ(H)
        short, to_short = E.short_model()
        Ps, Qs = to_short(P), to_short(Q)
        A, B = short.a4, short.a6
        if I == 0 or J == 0 or A == 0 or B == 0:
            raise InconsistentAnchors("hypercube anchors need I, J != 0")
        u2 = (J * A) / (I * B)  # lambda^4
        if -27 * I != u2**2 * A:
            raise InconsistentAnchors("anchor curve does not match the hypercube")
        p2, quart = hc_raw(H)
        if Ps.x == Qs.x or p2 == 0:
            raise InconsistentAnchors("anchor points need distinct x and p2 != 0")
        slope = (Qs.y - Ps.y) / (Qs.x - Ps.x)
        s2 = u2 * slope * slope / (p2 * p2)
        scales.append(s2)
        rows.append(list(quart))
        rhs4.append(u2 * Ps.x)
        rhs4p.append(u2 * Qs.x)
    if len(set(scales)) != 1:
        raise InconsistentAnchors(f"slope scales disagree: {scales}")
    s = _exact_root(scales[0], 2)
    if s is None:
        raise InconsistentAnchors("slope scale is not a rational square")
    # the anchors see a2 only up to sign; pin it by I(q) = -4 a2 on Sym4 embeddings
    q = (1, 0, 0, 0, 1)
    p2q = hc_raw(sym_embed(q, "bq"))[0]
    Iq = bq_IJ(*q)[0]
    if abs(Iq) != abs(4 * s * p2q):
        raise InconsistentAnchors("quadruply symmetric anchor does not match the a2 scale")
    if Iq == 4 * s * p2q:
        s = -s
    m4 = solve_unique(rows, rhs4)
    m4p = solve_unique(rows, rhs4p)
    if m4 is None or m4p is None:
        raise InconsistentAnchors("degree 4 pinning is inconsistent across anchors")
    provenance = tuple(
        [f"rc:{','.join(fraction_str(x) for x in t)}" for _, t in rc_anchors]
        + [f"hc:{E!r};{P!r};{Q!r}" for _, (E, P, Q) in hc_anchors]
    )
    return CalibrationRecord(alphas[0], betas[0], (tuple(m4), tuple(m4p)), s, provenance)


# ---------------------------------------------------------------- default record

_default_cache_dir = None
_default_record = None
_record_lock = threading.RLock()


def set_default_cache_dir(path):
    """Directory used for derived bases and the calibration record (None: memory only)."""
    global _default_cache_dir, _default_record
    with _record_lock:
        _default_cache_dir = path
        _default_record = None


def _calibration_path(cache_dir):
    return os.path.join(cache_dir, f"calibration_v{CODE_VERSION}.json")


def get_calibration(cache_dir=None, compute=True) -> CalibrationRecord:
    """The default calibration record, loaded from cache or computed once."""
    import json

    global _default_record
    with _record_lock:
        cache_dir = cache_dir if cache_dir is not None else _default_cache_dir
        if _default_record is not None:
            return _default_record
        if cache_dir is not None and os.path.exists(_calibration_path(cache_dir)):
            with open(_calibration_path(cache_dir), encoding="ascii") as fh:
                _default_record = CalibrationRecord.from_json(json.load(fh))
            return _default_record
        if not compute:
            raise CalibrationMissing("no calibration record available")
        record = calibrate()
        if cache_dir is not None:
            _atomic_write(_calibration_path(cache_dir), json.dumps(record.to_json(), indent=1, sort_keys=True) + "\n")
        _default_record = record
        return record
