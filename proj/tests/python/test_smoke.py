"""Smoke tests for the python bindings; heavy verification lives in C++."""

import pytest

import genera


def test_bernoulli():
    assert genera.bernoulli(12) == "-691/2730"
    assert genera.bernoulli(1) == "-1/2"
    assert genera.unsigned_bernoulli(12) == "691/2730"


def test_char_series():
    assert genera.char_series("L", 2) == ["1", "1/3", "-1/45"]
    assert genera.char_series("Ahat", 2) == ["1", "-1/24", "7/5760"]
    with pytest.raises(ValueError):
        genera.char_series("nope", 2)


def test_msequence_and_coefficients():
    seq = genera.msequence("L", 2)
    assert seq["2"] == [
        {"partition": "p2^1", "coefficient": "7/45"},
        {"partition": "p1^2", "coefficient": "-1/45"},
    ]
    assert genera.leading_coefficient("L", 3) == "62/945"
    assert genera.mixed_coefficient("L", 1, 2) == "-13/945"
    assert genera.closed_form_leading("Ahat", 2) == "-1/1440"
    assert genera.leading_coefficient("Ahat", 2) == "-1/1440"


def test_product_identity():
    rep = genera.product_identity("Ahat", 1, 2)
    assert rep["holds"] is True
    assert rep["lambda"] == 1
    same = genera.product_identity("L", 2, 2)
    assert same["lambda"] == 2
    assert same["holds"] is True


def test_criterion_matrices():
    rep = genera.criterion_matrices(1, 1)
    assert rep["reduced_det"] == "-9/4"
    assert rep["full_det"] == "-1/2880"
    assert rep["nonsingular"] is True


def test_signature_zero():
    rep = genera.signature_zero(1, 1, "896")
    assert rep["p_top"] == "128"
    assert rep["ahat"] == "1"
    assert rep["degenerate"] is False


def test_manifold():
    numbers = {"p2^1": "128", "p1^2": "896"}
    rep = genera.manifold_report(8, numbers)
    assert rep == {"dim": 8, "signature": "0", "ahat": "1"}
    assert genera.genus_value(8, numbers, "Ahat") == "1"
    with pytest.raises(ValueError):
        genera.manifold_report(8, {"p3^1": "1"})  # weight mismatch


def test_bundle_params():
    bp = genera.validate_bundle(3, 3, 1, 1)
    assert (bp["a"], bp["b"], bp["total_dim"]) == (1, 1, 8)
    with pytest.raises(ValueError, match="2j < p"):
        genera.validate_bundle(2, 3, 1, 1)
    assert genera.closing_check(7, 8, 3, 3)["passes"] is True


def test_total_space_and_kappa():
    ts = genera.total_space(3, 3, 1, 1, "896")
    assert ts["signature"] == "0"
    assert ts["ahat"] == "1"
    assert ts["psc_obstructed"] is True
    kp = genera.kappa_pairing(3, 3, 1, 1)
    assert kp["degree"] == 2
    assert kp["value"] == "1/896"
    assert kp["nonzero"] is True


def test_bundle_search_and_table():
    found = genera.bundle_search(6)
    assert len(found) == 1
    assert (found[0]["p"], found[0]["q"], found[0]["i"], found[0]["j"]) == (3, 3, 1, 1)
    assert genera.bundle_search(8) == []

    row = genera.bundle_table(15)
    assert (row["params"]["p"], row["params"]["q"]) == (7, 8)
    assert row["degree_columns"] == [4, 3]
    assert row["zero_degree_caveat"] is False


def test_conclude():
    rep = genera.conclude(15)
    assert rep["mode"] == "generic"
    assert rep["j_set"] == [2, 3, 4, 8]
    assert len(rep["alternatives"]) == 2
    with pytest.raises(ValueError, match="theorem not applicable"):
        genera.conclude(5)


def test_verify_all():
    checks = genera.verify_all()
    assert len(checks) >= 10
    assert all(c["passed"] for c in checks)
