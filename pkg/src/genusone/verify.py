"""Acceptance suites and seeded sample generators.

Each ``criterion_N`` runs one acceptance criterion and returns a SuiteResult.
Checks that compare against a relation exactly as stated are kept separate
from the corrected relations the code actually satisfies; a criterion passes
only when every literal check passes.
"""

from __future__ import annotations

import random
import tempfile
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import numpy as np

from .classical import (
    bq_IJ,
    cube_disc,
    form22_hessian,
    form22_invariants,
    form22_jacobian_point,
    quadratic_disc,
    quadric_pencil_invariants,
    tc_invariants,
)
from .deriver import REPS, derive_invariants, serialize_invariants, _cache_path
from .elliptic import (
    O,
    CurvePoint,
    WeierstrassCurve,
    add_points,
    isomorphism_scale,
    mul_point,
    neg_point,
    torsion_order,
    transport,
)
from .errors import BadMarkedPoints, Degenerate, GenusOneError, SingularTarget
from .hypercube import (
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
from .jordan import (
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
    fts_segre,
    fts_specialize,
)
from .rubiks import rc_chase, rc_construct, rc_curve_point, rc_invariants, rc_jacobian_point, rc_ternary_cubics
from .tensor import RationalTensor, act_all, random_unimodular, sym_embed, sym_readout, symmetry_check

__all__ = ["SuiteResult", "CRITERIA", "run_criterion", "random_object", "random_hc_target", "SPACES"]


@dataclass
class SuiteResult:
    number: int
    title: str
    checks: list = field(default_factory=list)  # (name, passed, detail)
    notes: list = field(default_factory=list)  # corrected relations, informational
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def check(self, name, ok, detail=""):
        self.checks.append((name, bool(ok), detail))

    def note(self, name, ok, detail=""):
        self.notes.append((name, bool(ok), detail))

    def line(self) -> str:
        return f"criterion {self.number}: {'PASS' if self.passed else 'FAIL'}  {self.title} ({self.seconds:.1f}s)"

    def report(self) -> str:
        out = [self.line()]
        for name, ok, detail in self.checks:
            out.append(f"  [{'ok' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else ""))
        for name, ok, detail in self.notes:
            out.append(f"  (note {'ok' if ok else 'FAIL'}) {name}" + (f": {detail}" if detail else ""))
        return "\n".join(out)

    def to_json(self):
        return {
            "criterion": self.number,
            "title": self.title,
            "passed": self.passed,
            "checks": [{"name": n, "passed": ok, "detail": d} for n, ok, d in self.checks],
            "notes": [{"name": n, "passed": ok, "detail": d} for n, ok, d in self.notes],
        }


# ---------------------------------------------------------------- sample generators

SPACES = ("bq", "tc", "f22", "cube", "hc", "rc", "quadrics", "fts")
_FORM_SIZES = {"bq": 5, "tc": 10, "f22": 9}
_SHAPES = {"cube": (2, 2, 2), "hc": (2, 2, 2, 2), "rc": (3, 3, 3)}


def _ints(rng, n, bound):
    return [Fraction(rng.randint(-bound, bound)) for _ in range(n)]


def _rand_tensor(rng, shape, bound):
    n = int(np.prod(shape))
    return RationalTensor.from_array(np.array(_ints(rng, n, bound), dtype=object).reshape(shape))


def _rand_symmetric(rng, bound, n=4):
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = Fraction(rng.randint(-bound, bound))
    return m


def random_jordan(rng, algebra, bound=3):
    alg = JORDAN_ALGEBRAS[algebra] if isinstance(algebra, str) else algebra
    return JordanElement(alg, _ints(rng, alg.dim, bound))


def random_hermcube(rng, algebra, bound=3):
    alg = JORDAN_ALGEBRAS[algebra] if isinstance(algebra, str) else algebra
    return HermCube.from_coords(alg, _ints(rng, 2 * alg.dim + 2, bound))


def random_object(space, rng, bound=5, algebra="K3"):
    """A random integer object of the given space (forms as coefficient lists)."""
    if space in _FORM_SIZES:
        return _ints(rng, _FORM_SIZES[space], bound)
    if space in _SHAPES:
        return _rand_tensor(rng, _SHAPES[space], bound)
    if space == "quadrics":
        return _rand_symmetric(rng, bound), _rand_symmetric(rng, bound)
    if space == "fts":
        return random_hermcube(rng, algebra, bound)
    raise ValueError(f"unknown space {space!r}")


def random_hc_target(rng, bound=4):
    """(E, P, P') with E through two random integral points; retried until valid."""
    while True:
        a1, a2, a3 = (rng.randint(-1, 1) for _ in range(3))
        x1, y1, x2, y2 = (Fraction(rng.randint(-bound, bound)) for _ in range(4))
        if x1 == x2:
            continue
        # y^2 + a1 xy + a3 y - x^3 - a2 x^2 = a4 x + a6 at both points
        r1 = y1 * y1 + a1 * x1 * y1 + a3 * y1 - x1**3 - a2 * x1 * x1
        r2 = y2 * y2 + a1 * x2 * y2 + a3 * y2 - x2**3 - a2 * x2 * x2
        a4 = (r1 - r2) / (x1 - x2)
        a6 = r1 - a4 * x1
        E = WeierstrassCurve(a1, a2, a3, a4, a6)
        if E.singular:
            continue
        P, Q = CurvePoint(x1, y1), CurvePoint(x2, y2)
        try:
            H = hc_construct(E, P, Q)
            hc_invariants(H)
        except (BadMarkedPoints, SingularTarget, Degenerate):
            continue
        return E, P, Q, H


def _nondegenerate(make, test, count):
    out = []
    while len(out) < count:
        obj = make()
        try:
            test(obj)
        except Degenerate:
            continue
        out.append(obj)
    return out


# ---------------------------------------------------------------- group actions on each space


def _act_bq(q, g):
    return sym_readout(act_all(sym_embed(q, "bq"), [g] * 4), "bq")


def _act_f22(f, g, h):
    return sym_readout(act_all(sym_embed(f, "f22"), [g, g, h, h]), "f22")


def _matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(len(b[0]))] for i in range(len(a))]


def _transpose(a):
    return [list(r) for r in zip(*a)]


def _act_quadrics(pair, g, h):
    A, B = (_matmul(_matmul(g, M), _transpose(g)) for M in pair)
    (p, q), (r, s) = h
    mix = lambda u, v, x, y: [[u * x[i][j] + v * y[i][j] for j in range(4)] for i in range(4)]
    return mix(p, q, A, B), mix(r, s, A, B)


def _scale(obj, lam):
    if isinstance(obj, RationalTensor):
        return obj * lam
    if isinstance(obj, tuple):
        return tuple([[lam * v for v in row] for row in M] for M in obj)
    return [lam * c for c in obj]


def _invariants(space, obj):
    if space == "bq":
        return bq_IJ(*obj)[:2], (2, 3)
    if space == "cube":
        return (cube_disc(obj)[0],), (4,)
    if space == "hc":
        inv = hc_invariants(obj)
        return (inv.a2, inv.a4, inv.a4p, inv.a6), (2, 4, 4, 6)
    if space == "rc":
        inv = rc_invariants(obj)
        return (inv.c6, inv.c9, inv.c12), (6, 9, 12)
    if space == "f22":
        inv = form22_invariants(obj)
        return (inv.delta2, inv.delta3, inv.delta4), (2, 3, 4)
    if space == "quadrics":
        d8, d12, _ = quadric_pencil_invariants(*obj)
        return (d8, d12), (8, 12)
    raise ValueError(space)


def _nondeg_test(space):
    def test(obj):
        if space == "bq":
            I, J = bq_IJ(*obj)[:2]
            if 4 * I**3 - J * J == 0:
                raise Degenerate("bq")
        if space == "cube" and cube_disc(obj)[0] == 0:
            raise Degenerate("cube")
        if space == "f22" and form22_invariants(obj).Delta == 0:
            raise Degenerate("f22")
        if space == "quadrics":
            d8, d12, _ = quadric_pencil_invariants(*obj)
            if 4 * d8**3 - d12**2 == 0:
                raise Degenerate("quadrics")
        if space in ("hc", "rc"):
            _invariants(space, obj)

    return test


def _moved(space, obj, rng, pool):
    pick = lambda n: pool[n][rng.randrange(len(pool[n]))]
    if space == "bq":
        return _act_bq(obj, pick(2))
    if space == "f22":
        return _act_f22(obj, pick(2), pick(2))
    if space == "quadrics":
        return _act_quadrics(obj, pick(4), pick(2))
    n = {"cube": 3, "hc": 4, "rc": 3}[space]
    dim = obj.shape[0]
    return act_all(obj, [pick(dim) for _ in range(n)])


# ---------------------------------------------------------------- criteria


def criterion_1(samples=100, elements=20, seed=1):
    res = SuiteResult(1, "invariance and scaling weights")
    rng = random.Random(seed)
    pool = {n: [random_unimodular(n, rng) for _ in range(elements)] for n in (2, 3, 4)}
    for space in ("bq", "cube", "hc", "rc", "f22", "quadrics"):
        objs = _nondegenerate(lambda: random_object(space, rng, 3), _nondeg_test(space), samples)
        bad_inv = bad_weight = 0
        for obj in objs:
            vals, degs = _invariants(space, obj)
            for _ in range(elements):
                if _invariants(space, _moved(space, obj, rng, pool))[0] != vals:
                    bad_inv += 1
            scaled, _ = _invariants(space, _scale(obj, 2))
            if any(s != v * 2**d for s, v, d in zip(scaled, vals, degs)):
                bad_weight += 1
        res.check(f"{space}: invariance ({samples} x {elements})", bad_inv == 0, f"{bad_inv} mismatches")
        res.check(f"{space}: scaling weights {degs}", bad_weight == 0, f"{bad_weight} mismatches")
    return res


def criterion_2(samples=100, seed=2):
    res = SuiteResult(2, "slicing coherence")
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        fs = hc_binary_quartics(random_object("hc", rng, 3))
        if len({bq_IJ(*f)[:2] for f in fs}) != 1:
            bad += 1
    res.check("hypercube quartics share (I, J)", bad == 0, f"{bad} of {samples} disagree")
    bad = 0
    for _ in range(samples):
        fs = rc_ternary_cubics(random_object("rc", rng, 3))
        if len({(i.d4, i.d6) for i in map(tc_invariants, fs)}) != 1:
            bad += 1
    res.check("Rubik's cubics share (d4, d6)", bad == 0, f"{bad} of {samples} disagree")
    bad = 0
    for _ in range(samples):
        _, *qs = cube_disc(random_object("cube", rng, 3))
        if len({quadratic_disc(*q) for q in qs}) != 1:
            bad += 1
    res.check("cube quadratics share one discriminant", bad == 0, f"{bad} of {samples} disagree")
    return res


def _f22_identity(inv):
    d2, d3, I, J = inv.delta2, inv.delta3, inv.I, inv.J
    return (108 * d3) ** 2 == (3 * d2) ** 3 - 27 * I * (3 * d2) - 27 * J


def criterion_3(samples=1000, seed=3):
    res = SuiteResult(3, "(2,2) form identity")
    rng = random.Random(seed)
    bad = sum(not _f22_identity(form22_invariants(random_object("f22", rng, 5))) for _ in range(samples))
    res.check(f"identity on {samples} random forms", bad == 0, f"{bad} failures")
    f = [1, 0, 1, 0, 1, 0, 1, 0, 1]  # a22 = a42 = a33 = a24 = a44 = 1
    inv = form22_invariants(f)
    got = (inv.delta2, inv.delta3, inv.I, inv.J)
    res.check("hand instance (17, 0, 241, -7378)", got == (17, 0, 241, -7378), str(tuple(map(str, got))))
    _, short, P = form22_jacobian_point(f)
    res.check("point (51, 0) on the curve", P == CurvePoint(Fraction(51), Fraction(0)) and short.contains(P))
    return res


def criterion_4(samples=100, seed=4):
    res = SuiteResult(4, "hypercube relation suite")
    rng = random.Random(seed)
    counts = dict.fromkeys(
        ["a6'", "a4'' (stated 3a2^2)", "a6''", "a8", "a12", "a8 = -27I", "a12 = -27J", "points"], 0
    )
    fixed_a4pp = 0
    for _ in range(samples):
        _, _, _, H = random_hc_target(rng)
        v = hc_invariants(H)
        a2, a4, a4p, a6 = v.a2, v.a4, v.a4p, v.a6
        counts["a6'"] += v.a6p != a6 + a2 * (a4p - a4)
        counts["a4'' (stated 3a2^2)"] += v.a4pp != 3 * a2**2 - a4 - a4p
        fixed_a4pp += v.a4pp != a2**2 - a4 - a4p
        counts["a6''"] += v.a6pp != a2**3 - 3 * (a2 * a4 - a6) - a6 - v.a6p
        counts["a8"] += v.a8 != a2 * (a6 + v.a6p) - (a4 * a4 + a4 * a4p + a4p * a4p)
        counts["a12"] += v.a12 != a6 * a6 - a2 * a4 * (a6 + v.a6p) + a4 * a4p * (a4 + a4p)
        counts["a8 = -27I"] += v.a8 != -27 * v.I
        counts["a12 = -27J"] += v.a12 != -27 * v.J
        E, P, Pp, Ppp = hc_jacobian_points(H)
        on = all(E.contains(X) for X in (P, Pp, Ppp))
        line = (Ppp.y - P.y) == a2 * (Ppp.x - P.x) and (Pp.y - P.y) == a2 * (Pp.x - P.x)
        total = on and add_points(E, add_points(E, P, Pp), Ppp).is_zero
        counts["points"] += not (on and line and total)
    for name, bad in counts.items():
        res.check(name, bad == 0, f"{bad} of {samples} fail")
    res.note("a4'' = a2^2 - a4 - a4' (third intersection)", fixed_a4pp == 0, f"{fixed_a4pp} failures")
    return res


_RC_TARGETS = [(0, 1, 0), (1, 1, 1), (-1, 2, 3), (2, -1, 1), (0, 2, 5), (3, 1, -2), (1, -3, 2), (-2, 1, 4), (5, 2, 1), (1, 1, -7)]
_HC_TARGETS = [
    ((0, 0, 0, -25, 0), (-4, 6), (0, 0)),
    ((0, 0, 0, 0, 17), (-2, 3), (-1, 4)),
    ((-1, -1, -1, 3, -6), (2, -1), (3, -3)),
    ((1, 0, 1, -1, 0), (0, 0), (1, 0)),
    ((0, 1, 0, -10, 17), (1, 3), (2, -3)),
    ((1, 0, -1, -2, 2), (-2, 1), (2, -3)),
    ((1, 0, -1, -1, 24), (-3, 0), (-2, -3)),
    ((1, 1, 1, -4, 2), (0, -2), (-2, 3)),
    ((-1, 0, -1, -2, 0), (-1, -1), (3, -3)),
    ((-1, 0, 0, 2, 3), (-1, -1), (1, -2)),
]


def _rc_roundtrip(target):
    c6, c9, c12 = (Fraction(v) for v in target)
    inv = rc_invariants(rc_construct(c6, c9, c12))
    got, want, wts = (inv.c6, inv.c9, inv.c12), (c6, c9, c12), (6, 9, 12)
    # lambda^3 from the nonzero c9 (all targets have c9 != 0), then lambda itself
    from .deriver import _exact_root

    lam = _exact_root(got[1] / want[1], 9) if want[1] else None
    if lam is None:
        return False, None
    return all(g == lam**w * t for g, t, w in zip(got, want, wts)), lam


def _hc_roundtrip(target):
    a, p, q = target
    E = WeierstrassCurve(*a)
    P, Q = CurvePoint.affine(*p), CurvePoint.affine(*q)
    J, JP, JQ, _ = hc_jacobian_points(hc_construct(E, P, Q))
    if J.j_invariant != E.j_invariant:
        return False, "j differs"
    short, to_short = E.short_model()
    u = isomorphism_scale(J, short)
    if u is None:
        return False, "not isomorphic over Q"
    X, Y = to_short(P), to_short(Q)
    for lam in (u, -u):
        if JP == CurvePoint(lam**2 * X.x, lam**3 * X.y) and JQ == CurvePoint(lam**2 * Y.x, lam**3 * Y.y):
            return True, f"lambda = {lam}"
    return False, "points do not match"


def criterion_5(seed=5):
    res = SuiteResult(5, "round trips")
    for t in _RC_TARGETS:
        ok, lam = _rc_roundtrip(t)
        res.check(f"rc_construct{t}", ok, f"lambda = {lam}")
    for t in _HC_TARGETS:
        ok, detail = _hc_roundtrip(t)
        res.check(f"hc_construct {t[0]} P={t[1]} P'={t[2]}", ok, detail)
    return res


def _sym_rc(rng, bound, axes):
    arr = np.empty((3, 3, 3), dtype=object)
    for idx in product(range(3), repeat=3):
        key = tuple(idx[a] for a in range(3) if a not in axes) + tuple(sorted(idx[a] for a in axes))
        arr[idx] = key
    values = {}
    out = np.empty((3, 3, 3), dtype=object)
    for idx in product(range(3), repeat=3):
        if arr[idx] not in values:
            values[arr[idx]] = Fraction(rng.randint(-bound, bound))
        out[idx] = values[arr[idx]]
    return RationalTensor.from_array(out)


def doubly_symmetric_rc(rng, bound=3):
    """3 x Sym^2 3: symmetric in the last two axes."""
    return _sym_rc(rng, bound, (1, 2))


def doubly_symmetric_hc(rng, bound=3):
    """V1 x V2 x Sym^2 V3: symmetric in the last two axes."""
    arr = np.empty((2, 2, 2, 2), dtype=object)
    for i, j in product(range(2), repeat=2):
        s, t, u = _ints(rng, 3, bound)
        arr[i, j, 0, 0], arr[i, j, 0, 1], arr[i, j, 1, 0], arr[i, j, 1, 1] = s, t, t, u
    return RationalTensor.from_array(arr, "sym-last-2")


def _pending_sym(kind, rng, bound, n):
    return sym_embed(_ints(rng, n, bound), kind)


def criterion_6(samples=100, seed=6):
    res = SuiteResult(6, "symmetry and torsion")
    rng = random.Random(seed)

    # doubly symmetric Rubik's cubes: c9 = 0
    cubes = _nondegenerate(lambda: doubly_symmetric_rc(rng), rc_invariants, samples)
    bad = sum(rc_invariants(B).c9 != 0 for B in cubes)
    res.check("doubly symmetric Rubik's cubes: c9 = 0", bad == 0, f"{bad} of {samples}")

    # triply symmetric Rubik's cubes against the stated model y^2 = x^3 - 72 d6 x^2 + 1296 d4^3 x
    hs = _nondegenerate(lambda: _ints(rng, 10, 3), lambda h: rc_invariants(sym_embed(h, "tc")), samples)
    stated = twisted = 0
    for h in hs:
        E = rc_jacobian_point(sym_embed(h, "tc"))[0]
        t = tc_invariants(h)
        for sign, counter in ((-1, "stated"), (1, "twisted")):
            M = WeierstrassCurve(0, sign * 72 * t.d6, 0, 1296 * t.d4**3, 0)
            ok = isomorphism_scale(E, M) is not None and torsion_order(M, CurvePoint(0, 0)) == 2
            if counter == "stated":
                stated += ok
            else:
                twisted += ok
    res.check("triply symmetric Rubik's cubes: stated model, (0,0) of order 2", stated == len(hs),
              f"{stated} of {len(hs)} isomorphic over Q")
    res.note("model with +72 d6 (quadratic twist by -1)", twisted == len(hs), f"{twisted} of {len(hs)}")

    # triply symmetric hypercubes: y^2 + 2 a2 xy + 2 a6 y = x^3, P -> (0, 0) of order 3
    pairs = _nondegenerate(lambda: _pending_sym("cubic-pair", rng, 3, 8), hc_invariants, samples)
    bad = 0
    for H in pairs:
        inv = hc_invariants(H)
        J, P, _, _ = hc_jacobian_points(H)
        M = WeierstrassCurve(2 * inv.a2, 0, 2 * inv.a6, 0, 0)
        img = transport(J, M, P)
        if img is None or img not in (CurvePoint(0, 0), neg_point(M, CurvePoint(0, 0))) or torsion_order(M, CurvePoint(0, 0)) != 3:
            bad += 1
    res.check("triply symmetric hypercubes: model and (0,0) of order 3", bad == 0, f"{bad} of {samples}")

    # quadruply symmetric hypercubes: stated y^2 + 2 a2 xy + 216 a3^2 y = x^3 with a3 = -J/432
    quarts = _nondegenerate(lambda: _ints(rng, 5, 4), lambda q: hc_invariants(sym_embed(q, "bq")), samples)
    stated = fixed = 0
    for q in quarts:
        H = sym_embed(q, "bq")
        inv = hc_invariants(H)
        J = hc_jacobian_points(H)[0]
        a3 = -bq_IJ(*q)[1] / 432
        for sign in (1, -1):
            M = WeierstrassCurve(2 * inv.a2, 0, sign * 216 * a3 * a3, 0, 0)
            ok = isomorphism_scale(J, M) is not None and torsion_order(M, CurvePoint(0, 0)) == 3
            if sign == 1:
                stated += ok
            else:
                fixed += ok
    res.check("quadruply symmetric hypercubes: stated model, (0,0) of order 3", stated == len(quarts),
              f"{stated} of {len(quarts)} isomorphic over Q")
    res.note("model with -216 a3^2", fixed == len(quarts), f"{fixed} of {len(quarts)}")

    # doubly symmetric hypercubes: P = 2P'
    hcs = _nondegenerate(lambda: doubly_symmetric_hc(rng), hc_invariants, samples)
    literal = corrected = 0
    for H in hcs:
        E, P, Pp, _ = hc_jacobian_points(H)
        literal += P == mul_point(E, 2, Pp)
        corrected += P == mul_point(E, -2, Pp)
    res.check("doubly symmetric hypercubes: P = 2P'", literal == len(hcs), f"{literal} of {len(hcs)}")
    res.note("P = -2P'", corrected == len(hcs), f"{corrected} of {len(hcs)}")
    return res


def _det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def criterion_7(samples=100, seed=7):
    res = SuiteResult(7, "desymmetrization")
    rng = random.Random(seed)
    s2s2 = [(1, 0, 2, 3), (0, 1, 3, 2)]
    s4 = [(1, 0, 2, 3), (0, 2, 1, 3), (0, 1, 3, 2)]

    def run(make, desym, perms, invariant, label):
        ratios, bad = set(), 0
        done = 0
        while done < samples:
            H = make()
            try:
                inv = hc_invariants(H)
                out, g = desym(H, return_matrix=True)
            except (Degenerate, GenusOneError):
                continue
            done += 1
            if not all(symmetry_check(out, p) for p in perms):
                bad += 1
            v = invariant(inv)
            ratios.add(_det2(g) / v if v else None)
        res.check(f"{label}: symmetric output", bad == 0, f"{bad} of {samples}")
        res.check(f"{label}: det / invariant constant", len(ratios) == 1 and None not in ratios,
                  ", ".join(str(r) for r in sorted(ratios, key=str)[:3]))

    run(lambda: doubly_symmetric_hc(rng), hc_desym_2sym, s2s2, lambda i: i.a6p, "S2 x S2 from doubly symmetric")
    run(lambda: _pending_sym("cubic-pair", rng, 3, 8), hc_desym_3sym, s4, lambda i: i.a6, "S4 from triply symmetric")
    return res


def criterion_8(samples=100, seed=8):
    res = SuiteResult(8, "Jordan and Freudenthal identities")
    rng = random.Random(seed)
    comp_bad = 0
    for name, A in COMPOSITION_ALGEBRAS.items():
        for _ in range(samples):
            x, y = _ints(rng, A.dim, 4), _ints(rng, A.dim, 4)
            comp_bad += A.norm(A.mul(x, y)) != A.norm(x) * A.norm(y)
    res.check("composition norms are multiplicative", comp_bad == 0, f"{comp_bad} failures")
    for name, alg in JORDAN_ALGEBRAS.items():
        e = JordanElement.identity(alg)
        bad = dict.fromkeys(["sharp sharp", "Cayley-Hamilton", "e x x"], 0)
        for _ in range(samples):
            x = random_jordan(rng, alg)
            bad["sharp sharp"] += x.sharp().sharp() != x * x.norm()
            x2 = x.bullet(x)
            bad["Cayley-Hamilton"] += not (x2.bullet(x) - x2 * x.trace() + x * x.spur() - e * x.norm()).is_zero()
            bad["e x x"] += e.cross(x) != e * x.trace() - x
        for k, v in bad.items():
            res.check(f"{name}: {k}", v == 0, f"{v} failures")
        fbad = dict.fromkeys(["flat flat", "<A^flat, B> = N(A,A,A,B)", "Segre flat 0 and disc 0"], 0)
        twice = 0
        for _ in range(samples):
            A, B = random_hermcube(rng, alg), random_hermcube(rng, alg)
            d = fts_disc(A)
            fbad["flat flat"] += fts_flat(fts_flat(A)) != A * (-d * d)
            lhs, n4 = fts_pairing(fts_flat(A), B), fts_norm4(A, B)
            fbad["<A^flat, B> = N(A,A,A,B)"] += lhs != n4
            twice += lhs != 2 * n4
            s = fts_segre(random_jordan(rng, alg), random_jordan(rng, alg))
            fbad["Segre flat 0 and disc 0"] += not (fts_flat(s).is_zero() and fts_disc(s) == 0)
        for k, v in fbad.items():
            res.check(f"{name}: {k}", v == 0, f"{v} of {samples} fail")
        res.note(f"{name}: <A^flat, B> = 2 N(A,A,A,B)", twice == 0, f"{twice} failures")
    res.check("disc(eps) = 1", all(fts_disc(HermCube.epsilon(a)) == 1 for a in JORDAN_ALGEBRAS.values()))
    bad = 0
    for _ in range(samples):
        A = random_hermcube(rng, "K3")
        bad += fts_disc(A) != cube_disc(fts_specialize(A, "cube"))[0]
    res.check("disc transport along K^3", bad == 0, f"{bad} failures")
    bad = 0
    for _ in range(samples):
        A = random_hermcube(rng, "K")
        a, b, c, d = A.a, A.b.coords[0], A.c.coords[0], A.d
        expected = a * a * d * d - 3 * b * b * c * c - 6 * a * b * c * d + 4 * a * c**3 + 4 * b**3 * d
        bad += fts_disc(A) != expected or cube_disc(fts_specialize(A, "sym3"))[0] != expected
    res.check("disc transport along K", bad == 0, f"{bad} failures")
    return res


def criterion_9(seed=9):
    res = SuiteResult(9, "point chasing")
    tri_bad = cyc_bad = total = 0
    for a, p, q in _HC_TARGETS[:4]:
        E = WeierstrassCurve(*a)
        P, Q = CurvePoint.affine(*p), CurvePoint.affine(*q)
        H = hc_construct(E, P, Q)
        for R in (P, Q, add_points(E, P, Q), mul_point(E, 2, P), add_points(E, mul_point(E, 2, P), Q)):
            if R.is_zero:
                continue
            start = hc_curve_point(E, P, Q, R)
            base = hc_chase(H, start, [])[1]
            total += 1
            tri = face_triangle(1, 2, 3, 4)
            tri_bad += hc_chase(H, start, tri + tri)[1] != base
            cycles = four_cycle(4, 1, 2, 3) + four_cycle(4, 2, 3, 1) + four_cycle(4, 3, 1, 2)
            cyc_bad += hc_chase(H, start, cycles)[1] != base
    res.check("hypercube: face triangle twice is the identity", tri_bad == 0, f"{tri_bad} of {total}")
    res.check("hypercube: ordered four-cycles compose to the identity", cyc_bad == 0, f"{cyc_bad} of {total}")
    B = rc_construct(0, 1, 0)
    E = WeierstrassCurve(0, 0, 1, 0, 0)
    fb = cubed = moved = 0
    pts = [O, CurvePoint.affine(0, 0), CurvePoint.affine(0, -1)]
    for R in pts:
        start = rc_curve_point(0, 1, 0, R)
        base = rc_chase(B, start, [])
        fb += rc_chase(B, start, ["cw", "ccw"]) != base
        cubed += rc_chase(B, start, ["cw"] * 3) != base
        moved += rc_chase(B, start, ["cw"]) == base
    res.check("Rubik's cube: triangle forward then backward", fb == 0, f"{fb} of {len(pts)}")
    res.check("Rubik's cube: triangle cubed", cubed == 0, f"{cubed} of {len(pts)}")
    res.note("Rubik's cube: one triangle moves the point", moved == 0, f"{moved} fixed points")
    return res


def criterion_10(cache_dir=None):
    res = SuiteResult(10, "deriver dimensions and cache")
    expected = [("hc", 2, 1), ("hc", 4, 3), ("tc", 4, 1), ("tc", 6, 1), ("f22", 2, 1), ("f22", 3, 1), ("f22", 4, None)]
    with tempfile.TemporaryDirectory() as tmp:
        root = cache_dir or tmp
        for name, deg, dim in expected:
            basis = derive_invariants(REPS[name], deg, cache_dir=root)
            ok = len(basis) == dim if dim is not None else len(basis) >= 1
            res.check(f"{name} degree {deg}: dimension {len(basis)}", ok, f"expected {dim if dim else '>= 1'}")
            again = derive_invariants(REPS[name], deg, cache_dir=root)
            with open(_cache_path(root, REPS[name], deg), encoding="ascii") as fh:
                text = fh.read()
            same = again == basis and text == serialize_invariants(REPS[name], deg, again)
            res.check(f"{name} degree {deg}: cache round trip", same)
    return res


def criterion_11(samples=50, seed=11):
    res = SuiteResult(11, "cross-construction consistency")
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        H = random_object("hc", rng, 3)
        arr = H.array()
        phi = [fts_from_tensor(RationalTensor.from_array(arr[k]), "cube") for k in range(2)]
        bad += degree2_disc_quartic(phi) != list(hc_binary_quartics(H)[0])
    res.check("disc quartic of K^3 slices = f1", bad == 0, f"{bad} of {samples}")
    bad = 0
    for _ in range(samples):
        B = random_object("rc", rng, 3)
        phi = [JordanElement.from_matrix(B.array()[k].tolist()) for k in range(3)]
        bad += degree3_norm_cubic(phi) != list(rc_ternary_cubics(B)[0])
    res.check("norm cubic of Mat3 slices = f1", bad == 0, f"{bad} of {samples}")
    scales, bad = set(), 0
    forms = _nondegenerate(lambda: _ints(rng, 9, 3), lambda f: hc_invariants(sym_embed(f, "f22")), samples)
    for f in forms:
        J = hc_jacobian_points(sym_embed(f, "f22"))[0]
        hess = form22_hessian(f)
        try:
            target = form22_jacobian_point(hess)[1]
        except Degenerate:
            bad += 1
            continue
        u = isomorphism_scale(J, target)
        if u is None:
            bad += 1
        scales.add(u)
    res.check("hypercube of a (2,2) form vs its Hessian", bad == 0 and len(scales) == 1,
              f"{bad} mismatches, scales {sorted(map(str, scales))}")
    return res


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
    11: criterion_11,
}


def run_criterion(n: int, samples=None, **kw) -> SuiteResult:
    """Run criterion n; ``samples`` (if given) caps every sample count."""
    import inspect

    fn = CRITERIA[n]
    params = inspect.signature(fn).parameters
    if samples is not None:
        for name in ("samples", "elements"):
            if name in params:
                kw[name] = min(samples, params[name].default)
    t0 = time.perf_counter()
    res = fn(**kw)
    res.seconds = time.perf_counter() - t0
    return res
