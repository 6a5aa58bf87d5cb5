from fractions import Fraction

import pytest

import gwblowup


def test_kontsevich_and_blowup_agree():
    o = gwblowup.Oracle()
    assert o.kontsevich(3) == 12
    for d in range(1, 6):
        assert o.blowup(d, -1) == o.kontsevich(d)
        assert o.blowup(d, 0) == o.kontsevich(d)
    assert o.blowup(4, -2) == 96


def test_evaluate():
    o = gwblowup.Oracle()
    assert o.evaluate("P2", "3l", points=8)["value"] == Fraction(12)
    r = o.evaluate("BlP2", "e", ["PD(E)", "PD(E)"])
    assert r["kind"] == "exact" and r["value"] == 1
    r = o.evaluate("BlP2", "2e", "p*pt")
    assert r["kind"] == "zero" and r["reason"] == "Lemma 1.1"
    assert o.evaluate("P3", "2l", points=4)["kind"] == "symbolic"


def test_bad_class():
    with pytest.raises(ValueError):
        gwblowup.Oracle().evaluate("BlP2", "3q")


def test_verify_and_index():
    rows = gwblowup.Oracle().verify("thm1-4", 1, 4)
    assert [r["verdict"] for r in rows] == ["verified"] * 4
    assert gwblowup.index_sum(2, 1, 3, 0) == 6
    assert gwblowup.index_plus("point-blowup", 2, 0, 1, 1, 1) == 4
    assert gwblowup.c1("BlP3", "f") == 4


def test_cli():
    code, out, _ = gwblowup.run_cli(["--no-cache", "invariant", "P2", "3l", "--points", "8"])
    assert code == 0 and out == "12\n"
