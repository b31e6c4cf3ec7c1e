"""The ``genusone`` command line front end.

Input is JSON (a file path, or standard input when the path is omitted or
"-"); output is JSON on standard output. Every number is written as a
string "n" or "p/q". Axes, slice indices and curve labels are 1-based.

Exit codes: 0 success, 2 degenerate input, 3 bad input, 4 internal failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys

from . import deriver, verify
from .classical import (
    bq_hessian,
    bq_invariants,
    bq_jacobian,
    cube_disc,
    form22_hessian,
    form22_invariants,
    form22_jacobian_point,
    quadric_pencil_invariants,
    tc_hessian,
    tc_invariants,
    tc_jacobian,
)
from .elliptic import O, CurvePoint, WeierstrassCurve
from .errors import GenusOneError
from .exact import fraction_str, to_fraction
from .hypercube import hc_chase, hc_construct, hc_desym_2sym, hc_desym_3sym, hc_invariants, hc_jacobian_points
from .jordan import HermCube, fts_disc, fts_flat, fts_rank, jordan_algebra
from .rubiks import rc_chase, rc_construct, rc_invariants, rc_jacobian_point
from .tensor import RationalTensor, act, skew_embed, slice_tensor, sym_embed

log = logging.getLogger("genusone")

EXIT_OK, EXIT_DEGENERATE, EXIT_BAD_INPUT, EXIT_INTERNAL = 0, 2, 3, 4
_KIND_EXIT = {"degenerate": EXIT_DEGENERATE, "bad_input": EXIT_BAD_INPUT, "internal": EXIT_INTERNAL}

FORM_SPACES = ("bq", "tc", "f22")
TENSOR_SPACES = ("cube", "hc", "rc")


class BadInput(Exception):
    pass


# ---------------------------------------------------------------- JSON conversion


def q(value) -> str:
    return fraction_str(value)


def curve_json(E: WeierstrassCurve):
    return {"a": [q(v) for v in E.a]}


def point_json(P: CurvePoint):
    return "O" if P.is_zero else {"x": q(P.x), "y": q(P.y)}


def vector_json(v):
    return [q(c) for c in v]


def hermcube_json(A: HermCube):
    return {"algebra": A.algebra.name, "a": q(A.a), "b": vector_json(A.b.coords), "c": vector_json(A.c.coords), "d": q(A.d)}


def parse_curve(data) -> WeierstrassCurve:
    coeffs = data["a"] if isinstance(data, dict) else data
    if len(coeffs) != 5:
        raise BadInput("a curve needs five coefficients a1, a2, a3, a4, a6")
    return WeierstrassCurve(*(to_fraction(c) for c in coeffs))


def parse_point(data) -> CurvePoint:
    if data == "O":
        return O
    if isinstance(data, dict):
        return CurvePoint.affine(data["x"], data["y"])
    x, y = data
    return CurvePoint.affine(x, y)


def parse_form(data, n):
    coeffs = data.get("coeffs") if isinstance(data, dict) else data
    if not isinstance(coeffs, list) or len(coeffs) != n:
        raise BadInput(f"expected a list of {n} coefficients")
    return [to_fraction(c) for c in coeffs]


def parse_tensor(data, shape=None) -> RationalTensor:
    if isinstance(data, dict) and "tensor" in data:
        data = data["tensor"]
    if not isinstance(data, dict) or "shape" not in data or "entries" not in data:
        raise BadInput("a tensor needs 'shape' and 'entries'")
    T = RationalTensor.from_json(data)
    if shape is not None and tuple(T.shape) != tuple(shape):
        raise BadInput(f"expected shape {list(shape)}, got {list(T.shape)}")
    return T


def parse_hermcube(data) -> HermCube:
    alg = jordan_algebra(data["algebra"])
    return HermCube.make(alg, data["a"], [to_fraction(c) for c in data["b"]], [to_fraction(c) for c in data["c"]], data["d"])


def parse_matrix(data):
    if not isinstance(data, list) or not data or any(not isinstance(r, list) or len(r) != len(data) for r in data):
        raise BadInput("expected a square matrix")
    return [[to_fraction(v) for v in row] for row in data]


def parse_quadrics(data):
    return parse_matrix(data["A"]), parse_matrix(data["B"])


def invariants_json(obj, names):
    return {name: q(getattr(obj, name)) for name in names}


# ---------------------------------------------------------------- verbs

_SHAPES = {"cube": (2, 2, 2), "hc": (2, 2, 2, 2), "rc": (3, 3, 3)}
_FORM_LEN = {"bq": 5, "tc": 10, "f22": 9}


def _parse_space(space, data):
    if space in _FORM_LEN:
        return parse_form(data, _FORM_LEN[space])
    if space in _SHAPES:
        return parse_tensor(data, _SHAPES[space])
    if space == "quadrics":
        return parse_quadrics(data)
    if space == "fts":
        return parse_hermcube(data)
    raise BadInput(f"unknown space {space!r}")


def cmd_invariants(args, data):
    obj = _parse_space(args.space, data)
    if args.space == "bq":
        return invariants_json(bq_invariants(obj), ("I", "J", "Delta"))
    if args.space == "tc":
        return invariants_json(tc_invariants(obj), ("d4", "d6", "Delta"))
    if args.space == "f22":
        return invariants_json(form22_invariants(obj), ("delta2", "delta3", "delta4", "I", "J", "Delta"))
    if args.space == "cube":
        delta, *quads = cube_disc(obj)
        return {"Delta": q(delta), "Q": [vector_json(c) for c in quads]}
    if args.space == "hc":
        names = ("a2", "a4", "a4p", "a6", "a6p", "a4pp", "a6pp", "a8", "a12", "I", "J", "Delta")
        return invariants_json(hc_invariants(obj), names)
    if args.space == "rc":
        return invariants_json(rc_invariants(obj, seed=args.seed), ("c6", "c9", "c12", "d4", "d6", "d18", "Delta"))
    if args.space == "quadrics":
        d8, d12, coeffs = quadric_pencil_invariants(*obj)
        return {"d8": q(d8), "d12": q(d12), "q": vector_json(coeffs)}
    return {"disc": q(fts_disc(obj)), "rank": fts_rank(obj), "flat": hermcube_json(fts_flat(obj))}


def cmd_jacobian(args, data):
    obj = _parse_space(args.space, data)
    if args.space == "bq":
        return {"curve": curve_json(bq_jacobian(obj)), "points": []}
    if args.space == "tc":
        return {"curve": curve_json(tc_jacobian(obj)), "points": []}
    if args.space == "f22":
        model, short, P = form22_jacobian_point(obj)
        return {"curve": curve_json(short), "points": [point_json(P)], "model": curve_json(model)}
    if args.space == "hc":
        E, P, Pp, Ppp = hc_jacobian_points(obj)
        return {"curve": curve_json(E), "points": [point_json(P), point_json(Pp), point_json(Ppp)]}
    if args.space == "rc":
        E, P, short, Ps = rc_jacobian_point(obj, seed=args.seed)
        return {"curve": curve_json(E), "points": [point_json(P)], "short": curve_json(short), "short_point": point_json(Ps)}
    raise BadInput(f"no Jacobian for space {args.space!r}")


def _axis(value, ndim):
    if not 1 <= value <= ndim:
        raise BadInput(f"axis {value} out of range 1..{ndim}")
    return value - 1


def cmd_slice(args, data):
    T = parse_tensor(data)
    axis = _axis(args.axis, len(T.shape))
    if not 1 <= args.index <= T.shape[axis]:
        raise BadInput(f"index {args.index} out of range 1..{T.shape[axis]}")
    return slice_tensor(T, axis, args.index - 1).to_json()


def cmd_act(args, data):
    T = parse_tensor(data)
    if not isinstance(data, dict) or "matrices" not in data:
        raise BadInput("act needs 'matrices': a list of [axis, matrix] pairs")
    for axis, m in data["matrices"]:
        T = act(T, _axis(int(axis), len(T.shape)), parse_matrix(m))
    return T.to_json()


def cmd_hessian(args, data):
    if args.space not in FORM_SPACES:
        raise BadInput("hessian is defined for bq, tc and f22")
    f = _parse_space(args.space, data)
    h = {"bq": bq_hessian, "tc": tc_hessian, "f22": form22_hessian}[args.space](f)
    return {"coeffs": vector_json(h)}


def cmd_embed(args, data):
    coeffs = data.get("coeffs") if isinstance(data, dict) else data
    if not isinstance(coeffs, list):
        raise BadInput("expected a coefficient list")
    return sym_embed([to_fraction(c) for c in coeffs], args.kind).to_json()


def cmd_skew_embed(args, data):
    return skew_embed(parse_tensor(data), args.kind).to_json()


def cmd_desym(args, data):
    H = parse_tensor(data, (2, 2, 2, 2))
    fn = {"2sym": hc_desym_2sym, "3sym": hc_desym_3sym}[args.kind]
    out, g = fn(H, return_matrix=True)
    return {"tensor": out.to_json(), "matrix": [vector_json(r) for r in g]}


def cmd_construct(args, data):
    if args.space == "rc":
        c = data.get("c") if isinstance(data, dict) and "c" in data else data
        c6, c9, c12 = (to_fraction(c[k]) for k in ("c6", "c9", "c12")) if isinstance(c, dict) else map(to_fraction, c)
        return rc_construct(c6, c9, c12).to_json()
    if args.space == "hc":
        return hc_construct(parse_curve(data["curve"]), parse_point(data["P"]), parse_point(data["Q"])).to_json()
    raise BadInput("construct is defined for hc and rc")


def cmd_chase(args, data):
    moves = args.moves.split(",") if args.moves else data.get("moves", [])
    start = [[to_fraction(c) for c in v] for v in data["start"]]
    if args.space == "hc":
        T = parse_tensor(data["tensor"], (2, 2, 2, 2))
        label, vecs = hc_chase(T, start, moves, triple=str(data.get("triple", "123")))
        return {"curve": label, "point": [vector_json(v) for v in vecs]}
    if args.space == "rc":
        T = parse_tensor(data["tensor"], (3, 3, 3))
        where, point = rc_chase(T, start, moves)
        return {"curve": str(where), "point": vector_json(point)}
    raise BadInput("chase is defined for hc and rc")


def cmd_derive(args, data):
    rep = deriver.REPS[args.rep] if args.rep in deriver.REPS else deriver.RepDescriptor.parse(args.rep)
    basis = deriver.derive_invariants(rep, args.degree, cache_dir=args.cache_dir)
    return {"rep": args.rep, "degree": args.degree, "dimension": len(basis), "basis": deriver.serialize_invariants(rep, args.degree, basis)}


def cmd_calibrate(args, data):
    return deriver.get_calibration(args.cache_dir).to_json()


def cmd_verify(args, data):
    numbers = args.criteria or sorted(verify.CRITERIA)
    results = []
    for n in numbers:
        if n not in verify.CRITERIA:
            raise BadInput(f"no acceptance criterion {n}")
        res = verify.run_criterion(n, samples=args.samples)
        print(res.line(), file=sys.stderr)
        payload = res.to_json()
        payload.pop("seconds", None)
        results.append(payload)
    return {"all_passed": all(r["passed"] for r in results), "criteria": results}


def cmd_random(args, data):
    rng = random.Random(args.seed)
    obj = verify.random_object(args.space, rng, args.bound, algebra=args.algebra)
    if isinstance(obj, RationalTensor):
        return obj.to_json()
    if isinstance(obj, HermCube):
        return hermcube_json(obj)
    if args.space == "quadrics":
        return {"A": [vector_json(r) for r in obj[0]], "B": [vector_json(r) for r in obj[1]]}
    return {"coeffs": vector_json(obj)}


VERBS = {
    "invariants": cmd_invariants,
    "jacobian": cmd_jacobian,
    "slice": cmd_slice,
    "act": cmd_act,
    "hessian": cmd_hessian,
    "embed": cmd_embed,
    "skew-embed": cmd_skew_embed,
    "desym": cmd_desym,
    "construct": cmd_construct,
    "chase": cmd_chase,
    "derive": cmd_derive,
    "calibrate": cmd_calibrate,
    "verify": cmd_verify,
    "random": cmd_random,
}
_NO_INPUT = {"derive", "calibrate", "verify", "random"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise BadInput(message)


def build_parser():
    p = _Parser(prog="genusone", description="Exact invariants of genus one models.")
    p.add_argument("--cache-dir", default=".g1cache", help="cache for derived bases and calibration")
    p.add_argument("--seed", type=int, default=0, help="seed for every randomized step")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="verb", parser_class=_Parser)
    # the global flags are also accepted after the verb
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache-dir", default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    def verb(name, help_text, space_choices=None):
        sp = sub.add_parser(name, help=help_text, parents=[common])
        if space_choices:
            sp.add_argument("--space", required=True, choices=space_choices)
        if name not in _NO_INPUT:
            sp.add_argument("input", nargs="?", default="-", help="JSON file (default: standard input)")
        return sp

    verb("invariants", "invariants of a form, tensor, quadric pair or Hermitian cube", verify.SPACES)
    verb("jacobian", "Jacobian curve and marked points", ("bq", "tc", "f22", "hc", "rc"))
    sp = verb("slice", "one slice of a tensor")
    sp.add_argument("--axis", type=int, required=True)
    sp.add_argument("--index", type=int, required=True)
    verb("act", "apply matrices to tensor axes")
    verb("hessian", "Hessian covariant of a form", FORM_SPACES)
    sp = verb("embed", "symmetric tensor of a form")
    sp.add_argument("--kind", required=True, choices=("bq", "quartic", "binary-cubic", "tc", "ternary-cubic", "f22", "cubic-pair"))
    sp = verb("skew-embed", "skew-symmetrize a tensor")
    sp.add_argument("--kind", required=True, choices=("2,2", "2,2,2", "3,3"))
    sp = verb("desym", "desymmetrize a partially symmetric hypercube")
    sp.add_argument("--kind", required=True, choices=("2sym", "3sym"))
    verb("construct", "tensor with a prescribed Jacobian", ("hc", "rc"))
    sp = verb("chase", "follow the maps between the attached curves", ("hc", "rc"))
    sp.add_argument("--moves", help="comma separated moves, overriding 'moves' in the input")
    sp = verb("derive", "invariant basis of a representation")
    sp.add_argument("--rep", required=True, help="bq, tc, f22, cube, hc, rc or a descriptor such as '2 2 2 2'")
    sp.add_argument("--degree", type=int, required=True)
    verb("calibrate", "compute or load the calibration record")
    sp = verb("verify", "run acceptance suites")
    sp.add_argument("criteria", nargs="*", type=int)
    sp.add_argument("--samples", type=int, help="cap on every sample count")
    sp = verb("random", "seeded random object", verify.SPACES)
    sp.add_argument("--bound", type=int, default=5)
    sp.add_argument("--algebra", default="K3", help="Jordan algebra for --space fts")
    return p


def _read_input(path):
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return json.loads(text)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except BadInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_BAD_INPUT
    if args.verb is None:
        print("error: no verb given", file=sys.stderr)
        return EXIT_BAD_INPUT
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    deriver.set_default_cache_dir(args.cache_dir)
    try:
        data = None if args.verb in _NO_INPUT else _read_input(args.input)
        result = VERBS[args.verb](args, data)
    except GenusOneError as exc:
        print(f"error ({exc.kind}): {exc}", file=sys.stderr)
        return _KIND_EXIT.get(exc.kind, EXIT_INTERNAL)
    except (BadInput, ValueError, TypeError, KeyError, IndexError, ZeroDivisionError, OSError) as exc:
        # json.JSONDecodeError is a ValueError
        print(f"error (bad_input): {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    json.dump(result, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK


def entry_point():
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
