"""Smoke tests for the pydunkl extension module."""

from fractions import Fraction

import pydunkl


def test_cyclotomic_polynomial():
    assert pydunkl.cyclotomic_polynomial(1) == ["-1", "1"]
    assert pydunkl.cyclotomic_polynomial(6) == ["1", "-1", "1"]


def test_dunkl_operator_degree_one():
    x1 = pydunkl.Poly(2, 2, "x1")
    t = pydunkl.apply_T(2, 1, 2, ["1/5", "1/7"], 1, x1)
    assert t.text() == "59/35"
    assert pydunkl.apply_T(2, 1, 2, ["1/5", "1/7"], 1, pydunkl.Poly(2, 2, "x2")).text() == "0"


def test_pairing_matches_closed_form():
    kappa = ["2/5", "3/7"]
    x1 = pydunkl.Poly(2, 2, "x1")
    val = Fraction(pydunkl.pairing(2, 1, 2, kappa, x1, x1))
    closed = Fraction(pydunkl.norm_closed_form(2, 1, 2, kappa, [1, 0], [0, 0]))
    assert val == closed == 1 + 2 * Fraction(3, 7) + 2 * Fraction(2, 5)


def test_zeta_and_eigenvalues():
    z = pydunkl.zeta(2, "1/3", [1, 0])
    assert z.text("y") == "1/3*y2 + 4/3*y1"
    assert Fraction(pydunkl.xi(2, "1/3", [1, 0], 1)) == Fraction(2, 3) + 2


def test_zeta_pole_raises():
    try:
        pydunkl.zeta(2, "-1/2", [0, 2])
    except pydunkl.PoleError:
        pass
    else:
        raise AssertionError("expected PoleError")


def test_polynomial_algebra():
    a = pydunkl.Poly(2, 3, "x1 + x2")
    b = pydunkl.Poly(2, 3, "x1 - x2")
    assert (a * b).text() == pydunkl.Poly(2, 3, "x1^2 - x2^2").text()


def test_gram_coranks_and_k1():
    assert pydunkl.gram_coranks(2, 1, 2, ["1/3", "-1/2"], 2) == [0, 1]
    witness = pydunkl.in_K1(2, 1, 2, ["1/3", "-1/2"])
    assert witness == (0, 1, "0")
    assert pydunkl.in_K1(2, 1, 2, ["1/3", "1/2"]) is None


def test_hanlon_norm_consistency():
    kappa = ["1/5", "2/7"]
    closed, f = pydunkl.hanlon_norm(2, 1, 2, kappa, 0)
    brute = pydunkl.pairing(2, 1, 2, kappa, f, f)
    assert Fraction(closed) == Fraction(brute)


def test_verify_suite():
    report = pydunkl.verify("commute", m=2, p=1, N=2, degree=3, seed=5)
    assert report["pass"] is True
    assert len(report["items"]) == 3
