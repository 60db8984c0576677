from decimal import Decimal, getcontext
from fractions import Fraction
from math import isqrt

from hypothesis import given, strategies as st

from wienerlab._exact import SqrtBound, ceil_sqrt, floor_sqrt, sign_sqrt_diff

getcontext().prec = 80

rationals = st.fractions(min_value=0, max_value=10**6, max_denominator=50)


def dec(q):
    return Decimal(q.numerator) / Decimal(q.denominator)


def approx(radicand, offset):
    return dec(Fraction(radicand)).sqrt() + dec(Fraction(offset))


@given(rationals)
def test_floor_and_ceil_sqrt(q):
    m = floor_sqrt(q)
    assert m * m <= q < (m + 1) * (m + 1)
    c = ceil_sqrt(q)
    assert c * c >= q and (c == 0 or (c - 1) ** 2 < q)


@given(st.integers(0, 10**40))
def test_integer_sqrt_matches_isqrt(k):
    assert floor_sqrt(k) == isqrt(k)


@given(rationals, rationals, st.fractions(min_value=-1000, max_value=1000, max_denominator=20))
def test_sign_sqrt_diff_against_decimal(a, b, c):
    value = dec(a).sqrt() - dec(b).sqrt() - dec(c)
    s = sign_sqrt_diff(a, b, c)
    if abs(value) > Decimal("1e-40"):
        assert s == (1 if value > 0 else -1)


@given(st.integers(0, 3000), st.integers(0, 3000), st.integers(-100, 100))
def test_sign_sqrt_diff_exact_ties(x, y, c):
    # sqrt(x^2) - sqrt(y^2) - (x - y) is exactly zero
    assert sign_sqrt_diff(x * x, y * y, x - y) == 0
    assert sign_sqrt_diff(x * x, y * y, x - y - 1) == 1
    assert sign_sqrt_diff(x * x, y * y, x - y + 1) == -1


@given(rationals, st.fractions(min_value=-500, max_value=500, max_denominator=12))
def test_sqrtbound_ceil_floor(r, o):
    b = SqrtBound(r, o)
    v = approx(r, o)
    c, f = b.ceil(), b.floor()
    assert c - 1 < v <= c + Decimal("1e-40")
    assert f - Decimal("1e-40") <= v < f + 1
    assert c >= b and not (c - 1 >= b)


@given(rationals, rationals, st.fractions(min_value=-50, max_value=50, max_denominator=6),
       st.fractions(min_value=-50, max_value=50, max_denominator=6))
def test_sqrtbound_ordering(r1, r2, o1, o2):
    a, b = SqrtBound(r1, o1), SqrtBound(r2, o2)
    diff = approx(r1, o1) - approx(r2, o2)
    if abs(diff) > Decimal("1e-40"):
        assert (a < b) == (diff < 0)
        assert (a > b) == (diff > 0)


def test_sqrtbound_equality_with_integers():
    assert SqrtBound(49, -3) == 4
    assert SqrtBound(Fraction(9, 4), Fraction(1, 2)) == 2
    assert SqrtBound(2) != SqrtBound(3)
