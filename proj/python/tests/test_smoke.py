import json

import pytest

import wha


def test_level_two_is_one_dimensional():
    H = wha.build(2)
    assert H.dim == 1
    assert H.basis == [(0, 0, 0, 0, 0)]
    assert H.verify()["passed"]


def test_level_three_smatrix():
    H = wha.build(3)
    assert H.smatrix() == [["1", "-1"], ["-1", "-1"]]
    exact, approx = H.smatrix_determinant()
    assert exact == "-2"
    assert approx == pytest.approx(-2)


def test_axiom_suites_pass_at_level_three():
    report = wha.build(3).verify(["wba", "wha", "coquasi", "coribbon"])
    assert report["passed"]
    assert all(c["status"] == "pass" for c in report["checks"])


def test_export_round_trip():
    text = wha.build(3).export()
    assert wha.load(text).export() == text
    assert json.loads(text)["field"] == {"cyclotomic_index": 12, "degree": 4}


def test_recoupling_values():
    exact, approx = wha.dim(5, 1)
    assert approx == pytest.approx(-(1 + 5 ** 0.5) / 2)
    assert wha.theta(4, 1, 1, 0)[0] == wha.dim(4, 1)[0]


def test_errors():
    with pytest.raises(wha.InputError):
        wha.build(1)
    with pytest.raises(ValueError):
        wha.build(3).verify(["no_such_check"])


def test_pinned_conventions():
    assert wha.pin_conventions() == ("positive", "closing-strand")
