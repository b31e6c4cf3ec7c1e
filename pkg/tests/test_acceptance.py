"""Acceptance criteria 1-11 at their full sample sizes.

Each criterion prints one PASS/FAIL line. Criteria 4, 6 and 8 contain
relations that do not hold exactly as stated: the literal criterion is
reported as FAIL and marked xfail, and a separate test asserts that nothing
else fails and that the corrected relations hold.
"""

from functools import lru_cache

import pytest

from genusone.verify import run_criterion

RUNTIME_LIMITS = {1: 60, 2: 120, 3: 10, 4: 120, 5: 300, 6: 120, 7: 60, 8: 120, 9: 60, 10: 600, 11: 120}

LITERAL_FAILURES = {
    4: {"a4'' (stated 3a2^2)"},
    6: {
        "triply symmetric Rubik's cubes: stated model, (0,0) of order 2",
        "quadruply symmetric hypercubes: stated model, (0,0) of order 3",
        "doubly symmetric hypercubes: P = 2P'",
    },
    8: {f"{alg}: <A^flat, B> = N(A,A,A,B)" for alg in
        ("K", "KxK", "K3", "KxMat2", "H3(unarions)", "H3(binarions)", "H3(split-quaternions)", "H3(split-octonions)")}
    | {f"{alg}: Segre flat 0 and disc 0" for alg in ("H3(binarions)", "H3(split-quaternions)", "H3(split-octonions)")},
}


@lru_cache(maxsize=None)
def result(n):
    res = run_criterion(n)
    print()
    print(res.report())
    return res


def show(n):
    res = result(n)
    print()
    print(res.line())
    return res


@pytest.mark.parametrize("n", [1, 2, 3, 5, 7, 9, 10, 11])
def test_criterion(n):
    res = show(n)
    assert res.seconds < RUNTIME_LIMITS[n], f"criterion {n} took {res.seconds:.1f}s"
    assert res.passed, res.report()


@pytest.mark.parametrize("n", [4, 6, 8])
def test_criterion_corrected(n):
    """Only the known literal checks fail, and every corrected relation holds."""
    res = result(n)
    assert res.seconds < RUNTIME_LIMITS[n]
    failed = {name for name, ok, _ in res.checks if not ok}
    assert failed == LITERAL_FAILURES[n], res.report()
    assert all(ok for _, ok, _ in res.notes), res.report()


@pytest.mark.xfail(strict=True, reason="stated a4'' = 3a2^2 - a4 - a4' is not exact; a2^2 - a4 - a4' is")
def test_criterion_4_literal():
    assert show(4).passed


@pytest.mark.xfail(strict=True, reason="stated symmetric-case model and torsion relations hold only up to sign or quadratic twist")
def test_criterion_6_literal():
    assert show(6).passed


@pytest.mark.xfail(strict=True, reason="<A^flat, B> = 2 N(A,A,A,B); stated Segre images over H3 of binarions and larger are not rank one")
def test_criterion_8_literal():
    assert show(8).passed
