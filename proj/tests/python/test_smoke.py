"""Smoke tests for the Python bindings: exact strings in, exact strings out."""

import pytest

import digitgraph as dg

ZERO = {"functions": [{"coeffs": ["0"]}]}
IDENTITY = {"functions": [{"coeffs": ["0", "1"]}]}
MIXED = {
    "functions": [
        {"coeffs": ["0", "1"]},
        {"coeffs": ["0", "-1/2"]},
        {"coeffs": ["1/3", "0", "2"]},
    ]
}


def test_digit_extraction():
    assert [dg.bit("1/3", k) for k in range(1, 7)] == [0, 1, 0, 1, 0, 1]
    assert dg.digit_window("1/3", 1, 8) == "01010101"


def test_partition_queries():
    c = dg.classify(8)
    assert c["in_T"] is False
    assert (c["i"], c["j"], c["position"], c["s"]) == (1, 1, 0, 8)
    assert dg.classify(3)["in_T"] is True
    assert dg.count_T(100) == 91


def test_eval_truncation():
    out = dg.eval_F("1/2", 10, ZERO)
    assert out["value"] == "129/2^8"
    assert out["digits"] == "1000000100"
    assert out["decimal"] == "0.503906250000"


def test_digits_copy_from_squares():
    for n in (1, 2, 3):  # T members with n^2 within easy reach
        assert dg.y_digit(n, "1/3", MIXED) == dg.bit("1/3", n * n)


def test_meeting_quantity_bracket():
    br = dg.F_minus_f("1/2", 10, 1, IDENTITY)
    assert br["lower"] == "1/256"


def test_campaigns_pass():
    rep = dg.check_reading(100, 7)
    assert rep["failures"] == 0 and rep["passes"] == 100
    rep = dg.check_injective(100, 7, MIXED, bits=24)
    assert rep["failures"] == 0 and rep["passes"] == 100


def test_box_counts():
    assert dg.box_count_exhaustive(9, ZERO) == 2**13
    exact = dg.box_count_exhaustive(8, ZERO)
    assert dg.box_count_random(8, 2**15, 7, ZERO) == exact


def test_projection_bound():
    cell = dg.occupy("1/2", 9, ZERO)
    assert (cell["col"], cell["row"]) == (256, 258)
    rep = dg.projection_check(9, cell["col"], cell["row"], 100, 5, ZERO)
    assert rep["verdict"] == "pass"
    assert rep["fraction"] == "1/16"
    assert rep["within_bound"] and rep["digits_agree"]


def test_domain_errors():
    with pytest.raises(ValueError):
        dg.eval_F("3/2", 8, ZERO)
    with pytest.raises(ValueError):
        dg.bit("x", 1)
