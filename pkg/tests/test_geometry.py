import pytest

from twinpoly import closed_form, geometry
from twinpoly.census import ShiftTuple, count_tuple
from twinpoly.curve import cube_class_representatives
from twinpoly.field import field_of_order, prime_powers_up_to


def test_pair_count_examples():
    assert geometry.twisted_pair_count(5, 3) == 90
    assert geometry.twisted_pair_count(2, 3) == 0
    assert geometry.twisted_pair_count(5, 2) == 20
    with pytest.raises(ValueError):
        geometry.twisted_pair_count(5, 4)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
@pytest.mark.parametrize("d", [2, 3])
def test_pair_count_is_d_squared_pi(q, d):
    pi = count_tuple(ShiftTuple.scalar(field_of_order(q), 0, 1), d)
    assert geometry.twisted_pair_count(q, d) == d * d * pi


def test_divisor_examples():
    assert [geometry.d2_divisor_fixed(q) for q in (2, 5, 7)] == [3, 2, 4]
    assert len(geometry.divisor_points(2)) == 3 and len(geometry.divisor_points(7)) == 6


@pytest.mark.parametrize("q", prime_powers_up_to(64))
def test_divisor_reproduces_degree_two_formula(q):
    fixed = geometry.d2_divisor_fixed(q)
    assert q * (1 + q - fixed) == 4 * closed_form.pi2(q)


def test_gamma_examples():
    assert geometry.gamma_fixed(9, 6) == 1
    assert geometry.gamma_fixed(7, 2) == 0
    assert geometry.gamma_fixed(3, 2) == 0
    assert [geometry.gamma_fixed(q, 6) for q in (3, 27, 7)] == [1, 1, 0]
    assert len(geometry.gamma_points(7, 2)) == 9 and len(geometry.gamma_points(7, 3)) == 4


@pytest.mark.parametrize("q", prime_powers_up_to(64))
def test_gamma3_fixed_points(q):
    assert geometry.gamma_fixed(q, 3) == (4 if q % 3 == 1 else 0)
    assert geometry.gamma_fixed(q, 2) == 0


def test_h3_examples():
    assert geometry.h_n_fixed(7, 1, 3) == 0
    assert geometry.h_n_fixed(7, 3, 3) == 6
    assert all(geometry.h_n_fixed(5, h, 3) == 0 for h in range(1, 5))
    assert len(geometry.h_points(7, 1, 3)) == 12
    with pytest.raises(ValueError):
        geometry.h_n_fixed(9, 1, 3)
    with pytest.raises(ValueError):
        geometry.h_n_fixed(7, 0, 3)


@pytest.mark.parametrize("q", [4, 5, 7, 13])
def test_h3_case_table(q):
    ctx = field_of_order(q)
    for h in cube_class_representatives(ctx):
        want = 0 if q % 3 == 2 or ctx._is_cube(h) else 6
        assert geometry.h_n_fixed(q, h, 3) == want


@pytest.mark.parametrize("q", [4, 5, 7, 8, 11])
def test_h2_has_no_fixed_points(q):
    for h in cube_class_representatives(field_of_order(q)):
        assert geometry.h_n_fixed(q, h, 2) == 0
    assert len(geometry.h_points(q, 1, 2)) == (0 if q % 2 == 0 else 27)


def test_points_satisfy_their_equations():
    big = geometry.h_points(7, 3, 3)[0].field
    with pytest.raises(AssertionError):
        geometry.TwistedPoint(big, "D", (1, 1, 0))
    with pytest.raises(AssertionError):
        geometry.TwistedPoint(big, "Gamma_3", (2, 2))
    with pytest.raises(ValueError):
        geometry.TwistedPoint(big, "Gamma_5", (2, 2))


def test_trace_u_examples():
    assert [geometry.trace_u(q) for q in (7, 3, 5)] == [189, 9, 90]


@pytest.mark.parametrize("q", prime_powers_up_to(64))
def test_trace_u_is_nine_pi3(q):
    assert geometry.trace_u(q) == 9 * closed_form.pi3(q)


@pytest.mark.parametrize("q", [2, 4, 5, 7, 8])
def test_twisted_trace_matches_shift_formula(q):
    for h in range(1, q):
        assert geometry.trace_u_twisted(q, h) == 9 * closed_form.pi3_shift(q, h)
