import pytest
from hypothesis import given, strategies as st

from qgrank.errors import DegenerateLevel, NonUnitDenominator, ParityMismatch
from qgrank.genfunc import (
    RationalSeries,
    SparsePolynomial,
    build_F,
    coefficient,
    expand,
    from_factors,
    multiply_truncated,
    rank_coefficient,
)
from qgrank.partitions import count_partitions, count_partitions_upto
from qgrank.root_systems import LieType, admissible_parities, alcove_params, all_types

TABLE_PARAMS = [alcove_params(t, e) for t in all_types(8) for e in admissible_parities(t)]


def poly_from_factors(*ks):
    out = SparsePolynomial.one()
    for k in ks:
        out = out * SparsePolynomial.one_minus_x_pow(k)
    return out


def test_sparse_polynomial_basics():
    p = SparsePolynomial({0: 1, 2: 0, 3: -4})
    assert p.terms == {0: 1, 3: -4}
    assert p.degree == 3
    assert p - p == 0
    assert (p * SparsePolynomial.one()) == p
    assert SparsePolynomial({1: 1}) * SparsePolynomial({1: 1}) == SparsePolynomial({2: 1})
    assert repr(poly_from_factors(1, 1)) == "1 - 2*x + x^2"


def test_build_F_g2():
    assert build_F(alcove_params(LieType("G", 2), 0)).denominator == poly_from_factors(1, 3, 6)
    assert build_F(alcove_params(LieType("G", 2), 1)).denominator == poly_from_factors(1, 2, 3)
    assert build_F(alcove_params(LieType("A", 1), 0)).denominator == poly_from_factors(1, 1)
    assert build_F(alcove_params(LieType("A", 1), 0)).numerator == 1


def test_expand_examples():
    assert expand(from_factors([1, 2, 3]), 8) == [1, 1, 2, 3, 4, 5, 7, 8, 10]
    assert expand(from_factors([1]), 4) == [1, 1, 1, 1, 1]
    assert expand(from_factors([1, 3, 6]), 15)[15] == 12
    # the displayed factor series 1 + 2x^3 + 4x^6 + 6x^9 + 9x^12 + 12x^15
    factor = expand(from_factors([3, 3, 6]), 15)
    assert [factor[k] for k in range(0, 16, 3)] == [1, 2, 4, 6, 9, 12]


def test_non_unit_denominator():
    bad = RationalSeries(SparsePolynomial.one(), SparsePolynomial({0: 2, 1: -1}))
    with pytest.raises(NonUnitDenominator):
        expand(bad, 3)


def test_negative_unit_denominator():
    # 1 / (-1 + x) = -(1 + x + x^2 + ...)
    s = RationalSeries(SparsePolynomial.one(), SparsePolynomial({0: -1, 1: 1}))
    assert expand(s, 3) == [-1, -1, -1, -1]


@pytest.mark.parametrize("params", TABLE_PARAMS, ids=lambda p: f"{p.lie_type}-{p.ell_m}")
def test_roundtrip_and_monotone(params):
    F = build_F(params)
    coeffs = expand(F, 200)
    back = multiply_truncated(coeffs, F.denominator, 200)
    assert back == [F.numerator[n] for n in range(201)]
    assert all(a <= b for a, b in zip(coeffs, coeffs[1:]))


@pytest.mark.parametrize("params", TABLE_PARAMS, ids=lambda p: f"{p.lie_type}-{p.ell_m}")
def test_agrees_with_partitions(params):
    upto = expand(build_F(params), 200)
    plain = expand(from_factors(params.parts), 200)
    for n in range(0, 201, 7):
        assert plain[n] == count_partitions(params.parts, n)
        assert upto[n] == count_partitions_upto(params.parts, n)


@given(st.lists(st.integers(1, 8), min_size=1, max_size=5), st.integers(0, 80))
def test_random_products(ks, order):
    s = from_factors(ks)
    coeffs = expand(s, order)
    assert coeffs == [count_partitions(ks, n) for n in range(order + 1)]
    assert multiply_truncated(coeffs, s.denominator, order) == [1] + [0] * order


def test_rank_coefficient():
    g2_odd = alcove_params(LieType("G", 2), 1)
    g2_even = alcove_params(LieType("G", 2), 0)
    assert rank_coefficient(g2_odd, 14) == 10
    assert rank_coefficient(g2_even, 27) == 12
    for p in TABLE_PARAMS:
        assert rank_coefficient(p, p.ell0) >= 1
    with pytest.raises(DegenerateLevel):
        rank_coefficient(g2_even, 9)
    with pytest.raises(ParityMismatch):
        rank_coefficient(g2_even, 14)


def test_constant_coefficient_is_one():
    for p in TABLE_PARAMS:
        assert coefficient(p, 0) == 1
    assert coefficient(TABLE_PARAMS[0], -1) == 0


@pytest.mark.parametrize("params", TABLE_PARAMS, ids=lambda p: f"{p.lie_type}-{p.ell_m}")
def test_theorem_exponent(params):
    for ell in range(params.ell0, 101):
        if not params.matches(ell):
            continue
        assert coefficient(params, params.theorem_exponent(ell)) == rank_coefficient(params, ell)
