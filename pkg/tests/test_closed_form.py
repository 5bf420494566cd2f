from fractions import Fraction

import pytest

from twinpoly import closed_form as cf
from twinpoly.census import ShiftTuple, count_all_scalar_shifts, count_tuple
from twinpoly.field import field_of_order, prime_powers_up_to


def _brute(q, d, h=1):
    return count_tuple(ShiftTuple.scalar(field_of_order(q), 0, h), d)


def test_examples():
    assert cf.pi1(2) == 2 and cf.pi1(9) == 9
    assert (cf.pi2(5), cf.pi2(2), cf.pi2(9)) == (5, 0, 18)
    assert (cf.pi3(3), cf.pi3(7), cf.pi3(4)) == (1, 21, 8)
    assert (cf.pi3_shift(7, 6), cf.pi3_shift(7, 3), cf.pi3_shift(7, 2)) == (21, 28, 35)
    assert cf.average_pi3(7) == 28
    assert cf.average_pi3(5) == 10
    assert cf.average_pi3(4) == Fraction(8, 3)


def test_errors():
    with pytest.raises(ValueError):
        cf.pi3(6)
    with pytest.raises(ValueError):
        cf.pi3_shift(7, 0)
    with pytest.raises(ValueError):
        cf.average_pi3(2)
    assert cf.closed_form_count(4, 7) is None
    assert cf.closed_form_count(2, 7, h=3) is None


@pytest.mark.parametrize("q", prime_powers_up_to(16))
def test_pi1(q):
    assert cf.pi1(q) == _brute(q, 1)


@pytest.mark.parametrize("q", prime_powers_up_to(128))
def test_pi2(q):
    assert cf.pi2(q) == _brute(q, 2)


@pytest.mark.parametrize("q", prime_powers_up_to(64))
def test_pi3(q):
    assert cf.pi3(q) == _brute(q, 3)


@pytest.mark.parametrize("q", prime_powers_up_to(27))
def test_pi3_shift_and_average(q):
    counts = count_all_scalar_shifts(field_of_order(q), 3)
    for h, n in counts.items():
        assert cf.pi3_shift(q, h) == n
    if q >= 3:
        assert sum(cf.pi3_shift(q, h) for h in range(1, q)) == (q - 1) * cf.average_pi3(q)
