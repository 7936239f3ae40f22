import math
from decimal import Context, Decimal, localcontext
from fractions import Fraction

import pytest

from rowconvex.analysis import (
    CONSISTENT,
    INCONSISTENT,
    asymptotic_report,
    denominator_roots,
    dominant_roots,
    growth_ratio_estimate,
    polynomial_roots,
    reflection_bounds,
    residue_constants,
    verify_asymptotic_claims,
)
from rowconvex.enumeration import count_by_linear_recurrence
from rowconvex.errors import LimitExceededError, UnsupportedCaseError
from rowconvex.genfunc import ONE, ROW_CONVEX_DENOMINATOR, IntPolynomial, RationalGF, series_expand
from rowconvex.oracle import count_distinct_up_to_reflection


def bisect_real_root(lo=Fraction(31, 100), hi=Fraction(32, 100), steps=80):
    d = ROW_CONVEX_DENOMINATOR
    assert d(lo) * d(hi) < 0
    for _ in range(steps):
        mid = (lo + hi) / 2
        if d(lo) * d(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return float((lo + hi) / 2)


RHO = bisect_real_root()


def test_bisection_oracle_value():
    assert abs(RHO - 0.311955) < 1e-5
    assert abs(1 / RHO - 3.205569430) < 1e-8


def test_roots_residuals_and_order():
    roots = denominator_roots()
    assert len(roots) == 3
    assert all(r.residual < 1e-10 for r in roots)
    mods = [abs(r.value) for r in roots]
    assert mods == sorted(mods)
    assert abs(roots[0].value - RHO) < 1e-12
    assert roots[1].value == roots[2].value.conjugate()


def test_vieta():
    a, b, c = (r.value for r in denominator_roots())
    assert abs(a + b + c - 7 / 4) < 1e-10
    assert abs(a * b + a * c + b * c - 5 / 4) < 1e-10
    assert abs(a * b * c - 1 / 4) < 1e-10


def test_dominant_root_unique_with_margin():
    roots = denominator_roots()
    dom = dominant_roots(roots)
    assert len(dom) == 1
    assert abs(roots[1].value) - abs(dom[0].value) > 1e-3


def test_claim_report_values():
    claims = verify_asymptotic_claims()
    by_quote = {}
    for c in claims:
        by_quote.setdefault(c.quote, []).append(c)
    one = by_quote["One root is $x=1$"][0]
    assert one.computed == "denominator(1) = -1"
    assert one.residual == 1.0
    assert one.verdict == INCONSISTENT
    pair = by_quote["$x_{2,3} = \\frac{3 \\pm i\\sqrt{7}}{8}$"]
    assert len(pair) == 2
    assert all(c.computed == "|denominator| = 1/2" and c.residual == 0.5 for c in pair)
    growth = by_quote["$S(N) \\sim A \\cdot 2^N \\cos(N\\theta + \\phi)$"][0]
    assert abs(growth.residual - (1 / RHO - 2)) < 1e-9
    assert growth.verdict == INCONSISTENT
    vanish = [c for c in claims if "vanishes" in c.quote][0]
    assert vanish.verdict == CONSISTENT
    assert all(c.verdict in (CONSISTENT, INCONSISTENT) for c in claims)


def test_exact_modulus_by_hand():
    # D((3 + i sqrt7)/8) = (12 + 4 i sqrt7) / 32 -> |.|^2 = (144 + 112) / 1024 = 1/4
    z = complex(3, math.sqrt(7)) / 8
    assert abs(abs(ROW_CONVEX_DENOMINATOR(z)) - 0.5) < 1e-15


def test_claims_deterministic():
    assert verify_asymptotic_claims() == verify_asymptotic_claims()
    assert asymptotic_report(50).to_dict() == asymptotic_report(50).to_dict()


@pytest.mark.parametrize("n, expected", [(1, Decimal(2)), (2, Decimal(3))])
def test_growth_ratio_small(n, expected):
    assert growth_ratio_estimate(n) == expected


def test_growth_ratio_seven():
    q = growth_ratio_estimate(7, digits=30)
    assert q == Decimal(2017 * 10**30 // 629).scaleb(-30, Context(prec=50))
    assert str(q).startswith("3.2066")
    assert len(str(q).split(".")[1]) >= 30


def test_growth_ratio_converges():
    target = Decimal(1) / Decimal(repr(abs(denominator_roots()[0].value)))
    errs = [abs(growth_ratio_estimate(n) - target) for n in (50, 100, 200)]
    assert errs[2] < Decimal("1e-8")
    # 1e-15 floor from double-precision rho; compare the n=50 error against it
    assert errs[0] > errs[1] or errs[0] < Decimal("1e-13")


def test_growth_ratio_monotone_against_exact_root():
    with localcontext(Context(prec=60)):
        # high-precision root by Newton on Decimal
        x = Decimal(repr(RHO))
        for _ in range(8):
            f = 1 - 5 * x + 7 * x * x - 4 * x**3
            df = -5 + 14 * x - 12 * x * x
            x -= f / df
        target = 1 / x
        errs = [abs(growth_ratio_estimate(n, digits=55) - target) for n in (50, 100, 200)]
    assert errs[0] > errs[1] > errs[2]


def test_residue_constant_predicts_s200():
    rc = residue_constants()
    assert rc.kind == "real"
    s = count_by_linear_recurrence(200)
    for N in (100, 200):
        assert abs(s[N] - rc.predict(N)) / s[N] < 1e-3


def test_residue_geometric():
    rc = residue_constants(RationalGF(ONE, IntPolynomial((1, -2))))
    assert rc.kind == "real"
    assert rc.constant == pytest.approx(1.0, abs=1e-12)
    assert rc.growth == pytest.approx(2.0, abs=1e-12)


def test_residue_complex_pair():
    gf = RationalGF(ONE, IntPolynomial((1, -1, 1)))
    rc = residue_constants(gf)
    assert rc.kind == "pair"
    coeffs = series_expand(gf, 50).coefficients
    for N, c in enumerate(coeffs):
        assert rc.predict(N) == pytest.approx(c, abs=1e-9)


def test_residue_rejects_double_pole():
    with pytest.raises(UnsupportedCaseError):
        residue_constants(RationalGF(ONE, IntPolynomial((1, -2, 1))))


def test_polynomial_roots_multiplicity():
    roots = polynomial_roots(IntPolynomial((1, -2, 1)))
    assert len(roots) == 1 and roots[0].multiplicity == 2


def test_bounds_examples():
    b = reflection_bounds(1)
    assert (b.lower, b.exact, b.upper) == (1, 1, 1)
    b = reflection_bounds(2)
    assert (b.lower, b.exact, b.upper) == (1, 2, 3)
    b = reflection_bounds(4)
    assert b.lower == 10
    assert b.exact == count_distinct_up_to_reflection(4)[0]
    assert b.lower <= b.exact <= b.upper


def test_bounds_ordering_to_11():
    for n in range(1, 12):
        b = reflection_bounds(n)
        assert b.lower <= b.exact <= b.upper


def test_bounds_beyond_oracle_and_limit():
    b = reflection_bounds(15, oracle_limit=11)
    assert b.exact is None and b.lower <= b.upper
    with pytest.raises(LimitExceededError):
        reflection_bounds(25)


def test_report_text_mentions_everything():
    text = asymptotic_report(200, 12).to_text(10)
    assert "3.2055694304" in text
    assert "One root is $x=1$" in text
    assert "denominator(1) = -1" in text
