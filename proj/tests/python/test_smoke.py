from fractions import Fraction
from math import pi, sqrt

import pytest

import bmkit


def test_d_coeffs_frozen_rows():
    assert bmkit.d_coeffs(0) == [1]
    assert bmkit.d_coeffs(1) == [Fraction(3, 2), 1]
    assert bmkit.d_coeffs(2) == [Fraction(21, 8), Fraction(15, 4), Fraction(3, 2)]
    values = bmkit.d_coeffs(2)
    assert all(isinstance(v, Fraction) for v in values)


def test_big_d_frozen_rows():
    assert bmkit.big_d(1) == [3, 2]
    assert bmkit.big_d(2) == [63, 60, 24]
    assert bmkit.big_d(3) == [3465, 3870, 2520, 720]


def test_p_eval_matches_horner_in_python():
    for m in range(8):
        d = bmkit.d_coeffs(m)
        for a in (Fraction(-2), Fraction(-1), 0, Fraction(1, 2), 1, 3):
            expected = sum(c * Fraction(a) ** i for i, c in enumerate(d))
            assert bmkit.p_eval(m, a) == expected


def test_p_eval_accepts_strings_and_rejects_floats():
    assert bmkit.p_eval(2, "1/2") == bmkit.p_eval(2, Fraction(1, 2))
    assert bmkit.p_eval(1, "1") == Fraction(5, 2)
    with pytest.raises(TypeError):
        bmkit.p_eval(2, 0.5)
    with pytest.raises(TypeError):
        bmkit.p_eval(2, True)


def test_recurrence_and_margins():
    assert bmkit.recurrence_residual(10, 3) == 0
    assert bmkit.log_concavity_margins(2) == [Fraction(81, 8)]
    assert all(margin >= 0 for margin in bmkit.log_concavity_margins(20))


def test_product_inequality_witness():
    lhs, rhs = bmkit.product_inequality(2, 1)
    assert (lhs, rhs) == (12096, 21600)
    assert lhs < rhs


def test_identity_a1():
    lhs, rhs = bmkit.identity_a1(3)
    assert lhs == rhs == bmkit.p_eval(3, 1) == Fraction(429, 16)


def test_unimodality():
    assert bmkit.check_unimodality(50)


def test_integral_check():
    result = bmkit.integral_check(1, 1, 1e-9)
    assert result["converged"]
    assert result["abs_err"] <= 1e-8
    assert abs(result["closed_form"] - 5 * pi / 32) < 1e-14
    zero = bmkit.integral_check(0, 0, 1e-9)
    assert abs(zero["closed_form"] - pi / (2 * sqrt(2))) < 1e-14
    with pytest.raises(ValueError):
        bmkit.integral_check(0, "-3/2", 1e-9)


def test_family_weight_and_model():
    assert bmkit.family_weight(1, 0, "D") == 3
    assert bmkit.family_weight(1, 1, "D") == 2
    assert bmkit.family_weight(2, 1, "B") == 3 * bmkit.big_d(2)[1]

    report = bmkit.verify_model(2)
    assert report["m"] == 2
    assert report["pass"] is True
    assert report["checks"]
    assert all(check["pass"] for check in report["checks"])

    with pytest.raises(ValueError):
        bmkit.family_weight(9, 0, "D")
    with pytest.raises(ValueError):
        bmkit.family_weight(1, 0, "X")


def test_table_serialization_is_exact():
    assert bmkit.table_json(1, "D") == '{"m":1,"kind":"D","values":["3","2"]}'
    assert bmkit.table_tsv(2, "d") == "0\t21/8\n1\t15/4\n2\t3/2\n"
