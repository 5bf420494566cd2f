from fractions import Fraction

import pytest

from twinpoly import curve
from twinpoly.field import PrimePower, field_of_order, make_field, prime_powers_up_to


def _naive_points(ctx, h):
    n = 1
    for x in range(ctx.q):
        lhs = ctx._mul(h, ctx._pow(x, 3))
        for y in range(ctx.q):
            n += lhs == ctx._sub(ctx._mul(y, y), y)
    return n


def test_point_count_examples():
    assert curve.count_points(make_field(5), 1) == 6
    assert curve.count_points(make_field(7), 1) == 9
    assert curve.count_points(make_field(7), 3) == 3


@pytest.mark.parametrize("q", [2, 4, 5, 7, 8, 11, 13, 16, 25, 32, 49])
def test_point_count_matches_naive(q):
    ctx = field_of_order(q)
    for h in range(1, q):
        assert curve.count_points(ctx, h, use_cache=False) == _naive_points(ctx, h)


def test_point_count_errors():
    with pytest.raises(ValueError):
        curve.count_points(make_field(3), 1)
    with pytest.raises(ValueError):
        curve.count_points(make_field(7), 0)
    with pytest.raises(ValueError):
        curve.trace_a(make_field(3, 2), 1)


def test_trace_quantities():
    assert curve.c_squared(make_field(2, 2)) == 4
    assert curve.trace_a(make_field(2, 2)) == -4
    assert curve.c_squared(make_field(7)) == Fraction(1, 7)
    assert curve.c_squared(make_field(5)) == 0
    assert curve.c_product(make_field(7), 3) == Fraction(-5, 7)


@pytest.mark.parametrize("q", [4, 7, 13])
def test_count_depends_only_on_cube_class(q):
    ctx = field_of_order(q)
    by_class = {}
    for h in range(1, q):
        n = curve.count_points(ctx, h, use_cache=False)
        assert by_class.setdefault(curve.cube_class(ctx, h), n) == n
    assert len(curve.cube_class_representatives(ctx)) == 3


def test_cache_does_not_change_results():
    curve.clear_cache()
    ctx = field_of_order(31)
    cold = [curve.count_points(ctx, h, use_cache=False) for h in range(1, 31)]
    warm = [curve.count_points(ctx, h) for h in range(1, 31)]
    assert cold == warm == [curve.count_points(ctx, h) for h in range(1, 31)]


@pytest.mark.parametrize("q", [q for q in prime_powers_up_to(1024) if q % 3 == 2])
def test_vanishing_trace(q):
    assert curve.count_points(field_of_order(q), 1) == q + 1


def test_trace_record_invariants():
    rec = curve.trace_record(make_field(13), 1)
    assert (rec.a, rec.c_sq) == (5, Fraction(25, 13))
    other = curve.trace_record(make_field(13), 2)
    assert rec.product_with(other) == Fraction(rec.a * other.a, 13)
    with pytest.raises(AssertionError):
        curve.TraceRecord(PrimePower(7, 1), 1, 30)  # a = -22 breaks Hasse
    with pytest.raises(AssertionError):
        curve.TraceRecord(PrimePower(5, 1), 1, 5)   # nonzero trace at q = 2 mod 3
    with pytest.raises(ValueError):
        rec.product_with(curve.trace_record(make_field(7), 1))


def test_newform_examples():
    assert curve.newform_trace(7, 1) == -1
    assert curve.newform_trace(2, 2) == -4
    assert curve.newform_trace(5, 1) == 0
    assert curve.newform_trace(5, 0) == 2
    coeffs = curve.newform_coefficients()
    assert coeffs[13] == 5 and coeffs[16] == 4 and coeffs[2] == 0 and len(coeffs) == 19
    with pytest.raises(ValueError):
        curve.newform_trace(3, 1)
    with pytest.raises(ValueError):
        curve.newform_trace(4, 1)


def test_recursion_reproduces_table():
    coeffs = curve.newform_coefficients()
    assert curve.newform_prime_power_coefficient(2, 2) == coeffs[4]
    assert curve.newform_prime_power_coefficient(2, 4) == coeffs[16]
    for p in (2, 5, 7, 11, 13, 17, 19):
        assert curve.newform_prime_power_coefficient(p, 1) == coeffs[p]


@pytest.mark.parametrize("p", [2, 5, 7, 13])
@pytest.mark.parametrize("e", [1, 2, 3])
def test_recursion_matches_direct_count(p, e):
    direct = 1 + p ** e - curve.count_points(make_field(p, e), 1)
    assert curve.newform_trace(p, e) == direct
