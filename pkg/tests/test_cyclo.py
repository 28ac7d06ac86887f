import cmath

import pytest
from hypothesis import given, settings, strategies as st

from ffhyper import cyclo, errors

PHI = {
    1: (-1, 1),
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    6: (1, -1, 1),
    8: (1, 0, 0, 0, 1),
    12: (1, 0, -1, 0, 1),
}


def test_cyclotomic_poly_oracles():
    for n, coeffs in PHI.items():
        assert cyclo.cyclotomic_poly(n) == coeffs


def test_canonical_degree():
    # coeff vector has length phi(n)
    for n, deg in [(1, 1), (2, 1), (4, 2), (6, 2), (8, 4), (12, 4), (7, 6)]:
        assert len(cyclo.one(n).coeffs) == deg


def test_zeta_relations():
    # zeta_4^2 = -1, zeta_6 = 1 + zeta_3-ish reductions all via sums
    z4 = cyclo.zeta_pow(4, 1)
    assert z4 * z4 == cyclo.from_int(4, -1)
    assert cyclo.zeta_pow(4, 5) == z4  # exponent mod order
    for n in (2, 3, 4, 6, 8, 12, 5, 7):
        s = cyclo.zero(n)
        for j in range(n):
            s = s + cyclo.zeta_pow(n, j)
        assert s.is_zero()


def _rand_cyc(n, ints):
    return cyclo.from_coeffs(n, ints)


@given(st.sampled_from([1, 2, 3, 4, 6, 8, 12]),
       st.lists(st.integers(-9, 9), min_size=1, max_size=14),
       st.lists(st.integers(-9, 9), min_size=1, max_size=14),
       st.lists(st.integers(-9, 9), min_size=1, max_size=14))
@settings(deadline=None, max_examples=150)
def test_ring_axioms(n, ca, cb, cc):
    a, b, c = (_rand_cyc(n, v) for v in (ca, cb, cc))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + cyclo.neg(a)).is_zero()
    assert a * cyclo.one(n) == a
    assert (a * cyclo.zero(n)).is_zero()


@given(st.sampled_from([3, 4, 6, 8, 12]), st.integers(-20, 20),
       st.integers(-20, 20))
@settings(deadline=None, max_examples=100)
def test_zeta_pow_is_homomorphism(n, i, j):
    assert cyclo.zeta_pow(n, i) * cyclo.zeta_pow(n, j) == cyclo.zeta_pow(n, i + j)


def test_order_mismatch():
    with pytest.raises(errors.OrderMismatch):
        cyclo.add(cyclo.one(4), cyclo.one(6))
    with pytest.raises(errors.OrderMismatch):
        cyclo.embed(cyclo.one(4), 6)


def test_embed():
    a = cyclo.from_coeffs(4, [2, 3])  # 2 + 3*zeta_4
    b = cyclo.embed(a, 12)
    assert b.order == 12
    assert abs(cyclo.to_complex(a) - cyclo.to_complex(b)) < 1e-12
    # homomorphism: embed(x*y) == embed(x)*embed(y)
    x = cyclo.from_coeffs(6, [1, -2])
    y = cyclo.from_coeffs(6, [0, 5])
    assert cyclo.embed(x * y, 12) == cyclo.embed(x, 12) * cyclo.embed(y, 12)


def test_to_complex():
    for n in (3, 4, 5, 8):
        got = cyclo.to_complex(cyclo.zeta_pow(n, 1))
        assert abs(got - cmath.exp(2j * cmath.pi / n)) < 1e-12
    assert cyclo.to_complex(cyclo.from_int(7, -3)) == -3


def test_render():
    assert cyclo.render(cyclo.from_int(8, -3)) == "-3"
    assert cyclo.render(cyclo.zero(12)) == "0"
    assert cyclo.render(cyclo.zeta_pow(8, 1)) == "z (z = zeta_8)"
    a = cyclo.from_coeffs(8, [1, 0, -2])
    assert cyclo.render(a) == "1 - 2*z^2 (z = zeta_8)"
    assert str(a) == cyclo.render(a)


def test_from_coeffs_reduces():
    # arbitrary-length inputs reduce mod the cyclotomic polynomial
    a = cyclo.from_coeffs(4, [0, 0, 1])  # zeta_4^2
    assert a == cyclo.from_int(4, -1)
    b = cyclo.from_coeffs(3, [5, 5, 5])  # 5 * (1 + z + z^2) = 0
    assert b.is_zero()
