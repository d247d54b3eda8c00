import cmath

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bentkit import cyclo
from bentkit.cyclo import CycInt, QuadChar, eta, gauss_sum, sqrt_p_power
from oracles import char_sum

PRIMES = [2, 3, 5, 7, 11]


def cyc(p):
    return st.lists(st.integers(-20, 20), min_size=p, max_size=p).map(lambda c: CycInt(p, c))


@pytest.mark.parametrize("p", PRIMES)
@settings(max_examples=50, deadline=None)
@given(data=st.data())
def test_ring_axioms(p, data):
    a, b, c = data.draw(cyc(p)), data.draw(cyc(p)), data.draw(cyc(p))
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * 1 == a
    # complex embedding is a ring homomorphism
    assert cmath.isclose((a * b).to_complex(), a.to_complex() * b.to_complex(), abs_tol=1e-6)


@pytest.mark.parametrize("p", PRIMES)
def test_sum_of_roots_vanishes(p):
    total = sum((CycInt.omega(p, j) for j in range(p)), CycInt.from_int(p, 0))
    assert total.is_zero()
    assert CycInt.omega(p, 1) ** p == 1


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_gauss_sum_square(p):
    G = gauss_sum(p)
    assert G * G == eta(p, -1) * p
    assert G.norm_sq() == p
    assert list(G.coeffs) == char_sum(p, lambda x: x * x)


@pytest.mark.parametrize("p,n", [(3, 1), (3, 3), (5, 3), (7, 1), (3, 4), (2, 6)])
def test_sqrt_p_power_norm(p, n):
    s = sqrt_p_power(p, n)
    assert s.norm_sq() == p**n


def test_sqrt_p_power_rejects_irrational():
    with pytest.raises(ValueError):
        sqrt_p_power(2, 3)


def test_exact_div_and_integrality():
    z = CycInt(5, [10, 0, 5, 0, 0])
    assert z.exact_div(5) == CycInt(5, [2, 0, 1, 0, 0])
    with pytest.raises(ArithmeticError):
        CycInt(5, [3, 0, 5, 0, 0]).exact_div(5)
    assert CycInt(3, [4, 1, 1]) == 3  # 4 + w + w^2 = 3
    with pytest.raises(ValueError):
        CycInt(3, [0, 1, 0]).as_int()


@pytest.mark.parametrize("p", [3, 5, 7])
def test_quadratic_character(p):
    chi = QuadChar(p)
    squares = {x * x % p for x in range(1, p)}
    for x in range(p):
        assert chi(x) == (0 if x == 0 else (1 if x in squares else -1))
    assert np.array_equal(chi(np.arange(p)), [eta(p, x) for x in range(p)])


def test_stack_helpers_match_scalar_ops():
    rng = np.random.default_rng(3)
    p = 5
    arr = rng.integers(-4, 5, size=(6, p))
    shifts = rng.integers(0, p, size=6)
    rolled = cyclo.canonical(cyclo.roll(arr, shifts))
    for row, s, out in zip(arr, shifts, rolled):
        assert CycInt(p, row).times_omega(int(s)) == CycInt(p, out)
    z = CycInt(p, [1, 2, 0, -1, 3])
    prod = cyclo.canonical(cyclo.mul_scalar(arr, z))
    norms = cyclo.norm_sq_rows(arr)
    for row, pr, nr in zip(arr, prod, norms):
        assert CycInt(p, row) * z == CycInt(p, pr)
        assert CycInt(p, row) * CycInt(p, row).conj() == CycInt(p, nr)
    assert cyclo.from_cycints(cyclo.to_cycints(cyclo.canonical(arr)), p).tolist() == cyclo.canonical(arr).tolist()
