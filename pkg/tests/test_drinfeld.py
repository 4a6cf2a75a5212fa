from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st
import pytest
from sympy.polys.domains import QQ

from tdpairs.constructions import leonard_krawtchouk, parse_spec, transform
from tdpairs.drinfeld import (
    drinfeld_checks,
    drinfeld_from_zeta,
    drinfeld_poly,
    injectivity_matrix,
    isomorphism_invariance_check,
)
from tdpairs.errors import BadParameter
from tdpairs.linalg import to_scalar


def test_polynomial_of_smallest_pair(k12):
    poly = drinfeld_poly(k12)
    assert poly.coefficients == [QQ(1), QQ(-9, 8)]
    assert poly.text() == "1 - 9/8 λ"
    assert poly.at(1) == QQ(-1, 8)


def test_polynomial_of_second_parameter(k13):
    poly = drinfeld_poly(k13)
    assert poly.coefficients == [QQ(1), QQ(-4, 3)]
    assert poly.text() == "1 - 4/3 λ"


def test_tensor_polynomial_is_product_of_factors(tensor_12_13):
    report = drinfeld_checks(tensor_12_13, parse_spec("1:2,1:3"))
    assert report.polynomial.coefficients == [QQ(1), QQ(-59, 24), QQ(3, 2)]
    assert report.polynomial.text() == "1 - 59/24 λ + 3/2 λ^2"
    assert report.multiplicative is True
    assert report.passed
    assert report.to_dict()["multiplicative"] is True


def test_report_without_spec_skips_product(k12):
    report = drinfeld_checks(k12)
    assert report.multiplicative is None
    assert report.constant_term_one
    assert report.nonzero_at_one
    assert "factor_product" not in report.to_dict()


def test_polynomial_from_zeta_uses_factorial_weights():
    poly = drinfeld_from_zeta([QQ(1), QQ(59, 6), QQ(96)])
    assert poly.coefficients == [QQ(1), QQ(-59, 24), QQ(3, 2)]


def test_polynomial_requires_krawtchouk_pair(k12):
    with pytest.raises(BadParameter):
        drinfeld_poly(transform(k12, 2, 0, 1, 0))


def test_polynomial_is_isomorphism_invariant(k12, tensor_12_13):
    assert all(isomorphism_invariance_check(k12).values())
    assert all(isomorphism_invariance_check(tensor_12_13).values())


def test_inverse_parameters_share_polynomial(k12, k1_half):
    assert drinfeld_poly(k12) == drinfeld_poly(k1_half)
    assert hash(drinfeld_poly(k12)) == hash(drinfeld_poly(k1_half))


def test_injectivity_against_isomorphism(k12, k13, k1_half):
    entries = injectivity_matrix([k12, k13, k1_half])
    assert len(entries) == 3
    assert all(entry.consistent for entry in entries)
    by_pair = {(entry.first, entry.second): entry for entry in entries}
    assert by_pair[("1:2", "1:1/2")].isomorphic
    assert not by_pair[("1:2", "1:3")].same_polynomial


@settings(max_examples=15, deadline=None)
@given(st.fractions(min_value=-6, max_value=6, max_denominator=6).filter(lambda a: a not in (0, 1, -1)))
def test_single_factor_split_value(a):
    a = to_scalar(a)
    poly = drinfeld_poly(leonard_krawtchouk(1, a))
    assert poly.coefficients[1] == -(a + 1) ** 2 / (4 * a)
