import os
import random

import pytest
from hypothesis import given, strategies as st

from genusone import deriver
from genusone.deriver import (
    REPS,
    RC_ANCHORS,
    CalibrationRecord,
    RepDescriptor,
    calibrate,
    derive_invariants,
    get_calibration,
    parse_invariants,
    rc_anchor_data,
    serialize_invariants,
)
from genusone.errors import InconsistentAnchors, TooLarge
from genusone.tensor import act_all, random_unimodular, sym_embed, sym_readout


def test_descriptor_parse():
    assert RepDescriptor.parse("2 2 2 2") == REPS["hc"]
    assert RepDescriptor.parse("3:sym3") == REPS["tc"]
    assert str(RepDescriptor.parse("2:sym2, 2:sym2")) == "2:sym2 2:sym2"
    with pytest.raises(ValueError):
        RepDescriptor.parse("2:skew2")


@pytest.mark.parametrize("rep,degree,dim", [("tc", 4, 1), ("tc", 6, 1), ("hc", 2, 1), ("hc", 4, 3), ("f22", 3, 1), ("bq", 2, 1), ("bq", 3, 1), ("cube", 4, 1), ("bq", 5, 1), ("bq", 6, 2), ("bq", 1, 0)])
def test_dimensions(rep, degree, dim):
    assert len(derive_invariants(REPS[rep], degree)) == dim


def test_ceiling():
    with pytest.raises(TooLarge):
        derive_invariants(REPS["rc"], 6, ceiling=1000)


@given(st.lists(st.integers(-4, 4), min_size=10, max_size=10), st.integers(0, 10**6))
def test_derived_tc_invariant_is_invariant(f, seed):
    (S,) = derive_invariants(REPS["tc"], 4)
    g = random_unimodular(3, random.Random(seed))
    moved = sym_readout(act_all(sym_embed(f, "tc"), [g] * 3), "tc")
    # the deriver's coordinates for 3:sym3 are the monomial coefficients in grlex order
    assert S.evaluate(deriver.tc_point(f)) == S.evaluate(deriver.tc_point(moved))


def test_serialization_round_trip():
    basis = derive_invariants(REPS["hc"], 4)
    text = serialize_invariants(REPS["hc"], 4, basis)
    rep, degree, polys = parse_invariants(text)
    assert (rep, degree, polys) == (REPS["hc"], 4, basis)
    assert serialize_invariants(rep, degree, polys) == text
    with pytest.raises(ValueError):
        parse_invariants("bogus\n")


def test_disk_cache_is_byte_stable(cache_dir):
    first = derive_invariants(REPS["f22"], 4, cache_dir=cache_dir)
    (name,) = os.listdir(cache_dir)
    with open(os.path.join(cache_dir, name), "rb") as fh:
        raw = fh.read()
    assert derive_invariants(REPS["f22"], 4, cache_dir=cache_dir) == first
    with open(os.path.join(cache_dir, name), "rb") as fh:
        assert fh.read() == raw


def test_calibration_json_round_trip():
    rec = get_calibration()
    assert CalibrationRecord.from_json(rec.to_json()) == rec
    assert (rec.alpha, rec.beta) == (1, 1)


def test_calibration_rejects_inconsistent_anchor():
    data = rc_anchor_data(RC_ANCHORS)
    cube, (c6, c9, c12) = data[1]
    data[1] = (cube, (c6, c9, c12 + 1))
    with pytest.raises(InconsistentAnchors):
        calibrate(rc_anchors=data)
