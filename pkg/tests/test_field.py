import itertools

import pytest
from hypothesis import given, strategies as st

from twinpoly.field import (FieldSizeError, PrimePower, embed, factorize, field_of_order,
                            is_prime, is_prime_power, make_field, prime_powers_up_to)
from twinpoly.polyring import MonicPoly, is_irreducible

SMALL_FIELDS = [(2, 1), (3, 1), (7, 1), (2, 2), (2, 3), (3, 2), (5, 2), (2, 4), (3, 3), (2, 6)]


def test_prime_helpers():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert prime_powers_up_to(16) == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]
    assert not is_prime_power(12) and is_prime_power(125)
    assert PrimePower.from_q(81) == PrimePower(3, 4)
    with pytest.raises(ValueError):
        PrimePower(4, 1)
    with pytest.raises(ValueError):
        PrimePower.from_q(6)


def test_canonical_moduli():
    assert make_field(7, 1).q == 7
    assert make_field(2, 2).modulus == (1, 1)   # x^2 + x + 1
    assert make_field(3, 2).modulus == (1, 0)   # x^2 + 1
    assert make_field(2, 6).modulus == (1, 0, 0, 0, 0, 1)


@pytest.mark.parametrize("p,e", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)])
def test_modulus_is_lexicographically_least_irreducible(p, e):
    # scan (c0, ..., c_{e-1}) with c0 most significant
    Fp = make_field(p, 1)
    for low in itertools.product(range(p), repeat=e):
        if is_irreducible(MonicPoly(Fp, tuple(reversed(low)))):
            assert make_field(p, e).modulus == low
            return
    pytest.fail("no irreducible found")


def test_construction_is_deterministic_and_bounded():
    assert make_field(3, 4) is make_field(3, 4)
    with pytest.raises(ValueError):
        make_field(6, 1)
    with pytest.raises(FieldSizeError):
        make_field(2, 30)
    with pytest.raises(FieldSizeError):
        field_of_order(9, max_elements=8)
    with pytest.raises(ValueError):
        make_field(2, 2, modulus=(0, 1))  # x^2 + x is reducible


def test_arithmetic_examples():
    F7 = make_field(7)
    assert F7.inv(3) == 5
    F4 = make_field(2, 2)
    x = F4(2)
    assert (x * x).coeffs == (1, 1)  # x + 1
    with pytest.raises(ZeroDivisionError):
        F7.inv(0)


@pytest.mark.parametrize("p,e", SMALL_FIELDS)
def test_lagrange(p, e):
    F = make_field(p, e)
    assert all(F._pow(a, F.q - 1) == 1 for a in range(1, F.q))
    assert F._pow(0, 0) == 1


@pytest.mark.parametrize("p,e", SMALL_FIELDS)
@given(data=st.data())
def test_field_axioms(p, e, data):
    F = make_field(p, e)
    el = st.integers(0, F.q - 1)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    A, B, C = F(a), F(b), F(c)
    assert (A + B) + C == A + (B + C)
    assert (A * B) * C == A * (B * C)
    assert A * (B + C) == A * B + A * C
    assert A + B == B + A and A * B == B * A
    assert A - A == 0 and A + F.neg(a) == 0
    if a:
        assert A * F.inv(a) == 1
        assert A / A == 1


@pytest.mark.parametrize("p,e", SMALL_FIELDS)
@given(data=st.data())
def test_frobenius_is_an_automorphism(p, e, data):
    F = make_field(p, e)
    a = data.draw(st.integers(0, F.q - 1))
    b = data.draw(st.integers(0, F.q - 1))
    k = data.draw(st.integers(0, 2 * e))
    assert F.frobenius(F._add(a, b), k) == F._add(F._frobenius(a, k), F._frobenius(b, k))
    assert F.frobenius(F._mul(a, b), k) == F._mul(F._frobenius(a, k), F._frobenius(b, k))
    assert F.frobenius(a, e) == a
    assert F.frobenius(a, 0) == a


def test_frobenius_examples():
    assert all(make_field(7).frobenius(a, 3) == a for a in range(7))
    F4 = make_field(2, 2)
    assert [int(F4.frobenius(a, 1)) for a in range(4)] == [0, 1, 3, 2]


def test_is_cube_examples():
    F5, F7 = make_field(5), make_field(7)
    assert all(F5.is_cube(h) for h in range(1, 5))
    assert F7.is_cube(6) and not F7.is_cube(3)
    with pytest.raises(ValueError):
        F7.is_cube(0)


@pytest.mark.parametrize("q", prime_powers_up_to(64))
def test_cube_partition(q):
    F = field_of_order(q)
    actual_cubes = {F._pow(x, 3) for x in range(1, q)}
    flagged = {h for h in range(1, q) if F._is_cube(h)}
    assert flagged == actual_cubes
    assert len(flagged) == ((q - 1) // 3 if q % 3 == 1 else q - 1)


def test_enumerate():
    assert [int(x) for x in make_field(2).enumerate()] == [0, 1]
    assert [int(x) for x in make_field(3).enumerate()] == [0, 1, 2]
    assert [int(x) for x in make_field(2, 2).enumerate()] == [0, 1, 2, 3]


def test_embedding_examples():
    F5, F25 = make_field(5), make_field(5, 2)
    assert [int(embed(F5, F25)(c)) for c in range(5)] == list(range(5))
    assert embed(make_field(2), make_field(2, 2)).image() == [0, 1]
    F4, F64 = make_field(2, 2), make_field(2, 6)
    img = embed(F4, F64).image()
    assert len(img) == 4
    assert {F64._frobenius(y, 2) for y in img} == set(img)
    with pytest.raises(ValueError):
        embed(make_field(2, 2), make_field(2, 3))
    with pytest.raises(ValueError):
        embed(make_field(3), make_field(2, 2))


@pytest.mark.parametrize("small,big", [((2, 1), (2, 3)), ((2, 2), (2, 4)), ((2, 2), (2, 6)),
                                       ((3, 1), (3, 2)), ((3, 2), (3, 4)), ((2, 3), (2, 6)),
                                       ((2, 4), (2, 8))])
def test_embedding_is_a_ring_map(small, big):
    S, B = make_field(*small), make_field(*big)
    emb = embed(S, B)
    t = emb.table
    for a in range(S.q):
        assert emb.preimage(int(t[a])) == a
        for b in range(S.q):
            assert t[S._add(a, b)] == B._add(int(t[a]), int(t[b]))
            assert t[S._mul(a, b)] == B._mul(int(t[a]), int(t[b]))
    assert emb.preimage(next(y for y in range(B.q) if y not in set(t.tolist()))) is None
