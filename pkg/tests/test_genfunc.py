import pytest
import sympy
from hypothesis import given, strategies as st

from rowconvex.enumeration import count_by_linear_recurrence, count_by_transfer_dp
from rowconvex.genfunc import (
    ONE,
    ROW_CONVEX_DENOMINATOR,
    ROW_CONVEX_GF,
    ROW_CONVEX_NUMERATOR,
    X,
    IntPolynomial,
    RationalGF,
    TruncatedSeries,
    poly_add,
    poly_mul,
    poly_scale,
    recurrence_from_gf,
    series_expand,
    verify_transfer_identities,
)

polys = st.lists(st.integers(-20, 20), max_size=6).map(IntPolynomial)


def test_binomial_square():
    assert poly_mul(ONE - X, ONE - X).coefficients == (1, -2, 1)


def test_additive_identity():
    p = IntPolynomial((3, 0, -2))
    assert poly_add(p, IntPolynomial()) == p
    assert IntPolynomial().coefficients == ()
    assert IntPolynomial((1, 2, 0, 0)).coefficients == (1, 2)


def test_numerator_expansion():
    assert ROW_CONVEX_NUMERATOR.coefficients == (0, 1, -3, 3, -1)
    assert poly_scale(ONE - X, -2).coefficients == (-2, 2)


def test_denominator_algebra():
    lhs = (1 - 2 * X) * (ONE - X) ** 2 - X * (1 - 2 * X + 2 * X * X)
    assert lhs == ROW_CONVEX_DENOMINATOR == IntPolynomial((1, -5, 7, -4))


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert (p - p) == IntPolynomial()


@given(polys, polys)
def test_mul_matches_sympy(p, q):
    x = sympy.symbols("x")
    sp = sum(c * x**i for i, c in enumerate(p.coefficients))
    sq = sum(c * x**i for i, c in enumerate(q.coefficients))
    prod = sympy.Poly(sympy.expand(sp * sq), x).all_coeffs()[::-1] if (p and q) else []
    assert (p * q).coefficients == tuple(int(c) for c in IntPolynomial(prod).coefficients)


def test_gf_expansion_table(table):
    assert series_expand(ROW_CONVEX_GF, 12).coefficients == (0,) + table


def test_gf_expansion_matches_sympy():
    x = sympy.symbols("x")
    expr = x * (1 - x) ** 3 / (1 - 5 * x + 7 * x**2 - 4 * x**3)
    expected = sympy.Poly(sympy.series(expr, x, 0, 41).removeO(), x).all_coeffs()[::-1]
    assert series_expand(ROW_CONVEX_GF, 40).coefficients == tuple(int(c) for c in expected)


@pytest.mark.parametrize(
    "den, order, expected",
    [((1, -1), 3, (1, 1, 1, 1)), ((1, -2), 4, (1, 2, 4, 8, 16))],
)
def test_geometric_series(den, order, expected):
    assert series_expand(RationalGF(ONE, IntPolynomial(den)), order).coefficients == expected


def test_zero_constant_term_rejected():
    with pytest.raises(ValueError):
        RationalGF(ONE, X)


def test_round_trip_to_200():
    for gf in (ROW_CONVEX_GF, RationalGF(X, IntPolynomial((1, -1, -1)))):
        for n in (0, 1, 7, 50, 200):
            s = series_expand(gf, n)
            assert TruncatedSeries.from_poly(IntPolynomial(s.coefficients) * gf.denominator, n) == \
                TruncatedSeries.from_poly(gf.numerator, n)


def test_expansion_agrees_with_dp_to_1000():
    assert series_expand(ROW_CONVEX_GF, 1000).coefficients[1:] == count_by_transfer_dp(1000).values


def test_recurrence_from_row_convex_gf():
    rec = recurrence_from_gf(ROW_CONVEX_GF)
    assert rec.coefficients == (5, -7, 4)
    assert rec.initial_terms == (1, 2, 6, 19)
    assert rec.start == 1
    assert rec.terms(60) == list(count_by_linear_recurrence(60).values)


def test_recurrence_geometric():
    rec = recurrence_from_gf(RationalGF(ONE, IntPolynomial((1, -2))))
    assert (rec.coefficients, rec.initial_terms) == ((2,), (1,))


def test_recurrence_fibonacci():
    rec = recurrence_from_gf(RationalGF(X, IntPolynomial((1, -1, -1))))
    assert (rec.coefficients, rec.initial_terms) == ((1, 1), (0, 1))
    fib = [0, 1]
    while len(fib) < 30:
        fib.append(fib[-1] + fib[-2])
    assert rec.terms(30) == fib


def test_transfer_identities_order_12(table):
    rep = verify_transfer_identities(12, 12)
    assert rep.passed, rep.checks
    assert rep.S.coefficients == (0,) + table


def test_transfer_identities_vacuous():
    rep = verify_transfer_identities(0)
    assert rep.passed
    assert rep.S.coefficients == (0,)


def test_transfer_identities_order_50():
    rep = verify_transfer_identities(50, 50)
    assert rep.passed
    assert rep.S[50] == count_by_linear_recurrence(50)[50]


@pytest.mark.parametrize("order", range(0, 51, 7))
def test_transfer_identities_all_orders(order):
    assert verify_transfer_identities(order).passed


def test_transfer_rejects_large_m_max():
    with pytest.raises(ValueError):
        verify_transfer_identities(5, 6)


def test_transfer_series_small_values():
    F = verify_transfer_identities(4).F
    # compositions of 3 ending in 1: (2,1) weight 2, (1,1,1) weight 1
    assert F[1][3] == 3
    assert F[3][3] == 1


def test_polynomial_str_and_eval():
    assert str(ROW_CONVEX_DENOMINATOR) == "1 - 5x + 7x^2 - 4x^3"
    assert ROW_CONVEX_DENOMINATOR(1) == -1
    assert IntPolynomial.x(3).degree == 3
