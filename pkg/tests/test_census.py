import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from twinpoly import census
from twinpoly.census import ShiftTuple, count_all_scalar_shifts, count_tuple, gauss_count, mobius
from twinpoly.field import FieldSizeError, field_of_order, make_field, prime_powers_up_to
from twinpoly.polyring import MonicPoly, enumerate_monic, is_irreducible


def test_mobius_and_divisors():
    assert [mobius(n) for n in (1, 2, 6, 12, 30, 49)] == [1, -1, 1, 0, -1, 0]
    assert census.divisors(12) == [1, 2, 3, 4, 6, 12]
    with pytest.raises(ValueError):
        mobius(0)


def test_gauss_examples():
    assert gauss_count(7, 1) == 7
    assert gauss_count(2, 2) == 1
    assert gauss_count(3, 3) == 8


@pytest.mark.parametrize("q", prime_powers_up_to(16))
@pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
def test_bitmap_popcount_matches_gauss(q, d):
    if q ** d > 2 ** 24:
        pytest.skip("beyond the default bitmap bound")
    bm = census.irreducible_bitmap(field_of_order(q), d)
    assert int(bm.sum()) == gauss_count(q, d)


def test_bitmap_examples_and_bounds():
    assert census.irreducible_bitmap(make_field(5), 1).all()
    assert np.flatnonzero(census.irreducible_bitmap(make_field(2), 2)).tolist() == [3]
    bm = census.irreducible_bitmap(make_field(3), 3)
    assert not bm.flags.writeable
    with pytest.raises(FieldSizeError):
        census.irreducible_bitmap(make_field(2), 20, max_elements=2 ** 10)


@pytest.mark.parametrize("q,d", [(3, 3), (4, 3), (5, 2), (7, 3), (16, 2)])
def test_bitmap_independent_of_partition(q, d):
    ctx = field_of_order(q)
    one = census.irreducible_bitmap(ctx, d, workers=1)
    for w in (2, 3, 7):
        assert np.array_equal(one, census.irreducible_bitmap(ctx, d, workers=w))


def test_count_examples():
    for q in (2, 3, 4, 5):
        assert count_tuple(ShiftTuple.scalar(field_of_order(q), 0, 1), 1) == q
    assert count_tuple(ShiftTuple.scalar(make_field(3), 0, 1), 3) == 1
    assert count_tuple(ShiftTuple.scalar(make_field(2), 0, 1), 3) == 0


def test_scalar_shift_examples():
    assert set(count_all_scalar_shifts(make_field(5), 3).values()) == {10}
    counts = count_all_scalar_shifts(make_field(7), 3)
    assert counts == {1: 21, 2: 35, 3: 28, 4: 28, 5: 35, 6: 21}
    assert sorted(counts.values()) == sorted([21, 21, 35, 28, 28, 35])
    assert sum(counts.values()) == 168


def _naive_count(t: ShiftTuple, d: int) -> int:
    ctx = t.ctx
    n = 0
    for f in enumerate_monic(ctx, d):
        ok = True
        for h in t.shifts:
            padded = (0,) * (d - len(h)) + h
            g = MonicPoly(ctx, tuple(ctx._add(a, b) for a, b in zip(f.coeffs, padded)))
            if not is_irreducible(g):
                ok = False
                break
        n += ok
    return n


@pytest.mark.parametrize("q,d,shifts", [
    (3, 3, ["0", "1", "2"]), (4, 3, ["0", "T"]), (5, 3, ["0", "T^2 + 1"]),
    (2, 4, ["0", "1"]), (3, 4, ["0", "T + 1"]), (7, 2, ["0", "3"]), (9, 3, ["1", "T + 2"]),
])
def test_general_shifts_match_naive(q, d, shifts):
    t = ShiftTuple.parse(field_of_order(q), shifts)
    assert count_tuple(t, d) == _naive_count(t, d)


@given(q=st.sampled_from([3, 4, 5, 7, 8, 9]), d=st.sampled_from([2, 3]), data=st.data())
def test_translation_invariance(q, d, data):
    ctx = field_of_order(q)
    h = data.draw(st.integers(1, q - 1))
    c = data.draw(st.integers(0, q - 1))
    t = ShiftTuple.scalar(ctx, 0, h)
    assert count_tuple(t.translate(c), d) == count_tuple(t, d)


@pytest.mark.parametrize("q", [4, 7, 13])
def test_cube_class_invariance(q):
    ctx = field_of_order(q)
    counts = count_all_scalar_shifts(ctx, 3)
    for h in range(1, q):
        for g in range(1, q):
            if ctx._is_cube(ctx._mul(h, ctx._inv(g))):
                assert counts[h] == counts[g]


def _largest_irreducible_modulus(p, e):
    Fp = make_field(p)
    for low in reversed(list(itertools.product(range(p), repeat=e))):
        if is_irreducible(MonicPoly(Fp, tuple(reversed(low)))):
            return low


@pytest.mark.parametrize("p,e", [(3, 2), (2, 3), (5, 2), (2, 4)])
def test_counts_independent_of_modulus(p, e):
    canon = make_field(p, e)
    other = make_field(p, e, modulus=_largest_irreducible_modulus(p, e))
    assert other.modulus != canon.modulus
    for d in (2, 3):
        assert count_tuple(ShiftTuple.scalar(other, 0, 1), d) == count_tuple(ShiftTuple.scalar(canon, 0, 1), d)
        assert sorted(count_all_scalar_shifts(other, d).values()) == sorted(count_all_scalar_shifts(canon, d).values())


def test_shift_tuple_validation():
    F5 = make_field(5)
    with pytest.raises(ValueError):
        ShiftTuple.scalar(F5, 1, 1)
    with pytest.raises(ValueError):
        ShiftTuple.scalar(F5, 0, 5)
    with pytest.raises(ValueError):
        count_tuple(ShiftTuple.parse(F5, ["0", "T^3"]), 3)
    t = ShiftTuple(F5, ((0, 0, 2), (1,)))
    assert t.shifts == ((2,), (1,))
    assert t.labels() == ["2", "1"]
    assert t.degree_bound() == 1
