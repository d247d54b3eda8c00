import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bentkit.func import (
    PFunc,
    ReducedPoly,
    TraceComposition,
    compose,
    degree_of_composed,
    eval_univariate,
    interpolate,
    multivariate_degree,
    parse_function,
    read_value_table,
    subfield_trace,
    univariate_degree,
    write_value_table,
)
from bentkit.gf import build_field


def random_poly(rng, p, tau, terms=4):
    acc = {}
    for _ in range(terms):
        e = tuple(int(x) for x in rng.integers(0, p, size=tau))
        acc[e] = (acc.get(e, 0) + int(rng.integers(1, p))) % p
    return ReducedPoly(p, tau, {e: c for e, c in acc.items() if c})


def independent_points(ctx, rng, tau):
    while True:
        pts = [int(u) for u in rng.integers(1, ctx.q, size=tau)]
        if ctx.rank_of(pts) == tau:
            return pts


def test_parse_and_print_roundtrip():
    F = ReducedPoly.parse("x1*x2 + 2*x1^2 + x3 + 1", 3)
    assert F.arity == 3
    assert F.degree == 2
    assert F.coeff((1, 1, 0)) == 1 and F.coeff((2, 0, 0)) == 2 and F.coeff((0, 0, 0)) == 1
    assert ReducedPoly.parse(str(F), 3, 3) == F


def test_parse_reduces_exponents():
    # x^p = x on F_p, so x1^3 folds to x1 over F_3
    assert ReducedPoly.parse("x1^3", 3, 1) == ReducedPoly.parse("x1", 3, 1)
    assert ReducedPoly.parse("x1^2", 2, 1) == ReducedPoly.parse("x1", 2, 1)
    assert ReducedPoly.parse("x1^5", 3, 1) == ReducedPoly.parse("x1^1", 3, 1)


@pytest.mark.parametrize("p,tau", [(2, 3), (3, 2), (5, 2), (3, 3)])
def test_evaluation_matches_definition(p, tau):
    rng = np.random.default_rng(p + tau)
    for _ in range(5):
        F = random_poly(rng, p, tau)
        G = random_poly(rng, p, tau)
        for pt in itertools.product(range(p), repeat=tau):
            direct = sum(c * np.prod([pow(x, e, p) for x, e in zip(pt, ex)]) for ex, c in F.terms.items()) % p
            assert F(*pt) == direct
            assert (F * G)(*pt) == F(*pt) * G(*pt) % p
            assert (F + G)(*pt) == (F(*pt) + G(*pt)) % p


def test_zero_and_product():
    Z = ReducedPoly(3, 2, {})
    assert Z.is_zero() and multivariate_degree(Z) == 0
    P = ReducedPoly.product(5, 3)
    assert P.degree == 3 and P(1, 2, 3) == 6 % 5


@pytest.mark.parametrize("p,n", [(2, 6), (3, 4), (5, 2), (3, 3)])
def test_interpolation_roundtrip(p, n):
    ctx = build_field(p, n)
    rng = np.random.default_rng(n)
    f = PFunc(ctx, rng.integers(0, p, size=ctx.q))
    coeffs = interpolate(f)
    back = eval_univariate(ctx, coeffs)
    assert np.array_equal(back, f.values)


@pytest.mark.parametrize("p,n", [(2, 6), (3, 4), (5, 2), (3, 3)])
def test_degree_of_known_functions(p, n):
    ctx = build_field(p, n)
    assert univariate_degree(PFunc.zero(ctx)) == 0
    assert univariate_degree(PFunc.zero(ctx) + 1) == 0
    assert univariate_degree(PFunc.linear(ctx, 1)) == 1
    e = p + 1
    assert univariate_degree(PFunc.monomial_trace(ctx, 1, e)) == 2
    # the indicator of 0 is 1 - x^(q-1), digit sum n(p-1)
    delta = np.zeros(ctx.q, dtype=np.int64)
    delta[0] = 1
    assert univariate_degree(PFunc(ctx, delta)) == n * (p - 1)


@pytest.mark.parametrize("p,n", [(2, 6), (3, 4), (5, 2), (3, 3)])
@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_composed_degree_equals_multivariate_degree(p, n, seed):
    ctx = build_field(p, n)
    rng = np.random.default_rng(seed)
    tau = int(rng.integers(1, min(3, n) + 1))
    pts = independent_points(ctx, rng, tau)
    F = random_poly(rng, p, tau)
    f = compose(TraceComposition(PFunc.zero(ctx), F, pts))
    assert univariate_degree(f) == degree_of_composed(ctx, F, pts) == F.degree


def test_degree_of_composed_rejects_dependent(f34):
    with pytest.raises(ValueError):
        degree_of_composed(f34, ReducedPoly.product(3, 2), [1, 2])


def test_composition_values(f34):
    g = PFunc.monomial_trace(f34, 1, 2)
    F = ReducedPoly.parse("x1*x2^2 + 2*x2", 3, 2)
    pts = (f34.xi(2), f34.xi(7))
    f = compose(TraceComposition(g, F, pts))
    for x in range(f34.q):
        t1 = f34.tr[f34.mul(pts[0], x)]
        t2 = f34.tr[f34.mul(pts[1], x)]
        assert f(x) == (g(x) + t1 * t2 * t2 + 2 * t2) % 3


def test_composition_validation(f34):
    g = PFunc.zero(f34)
    with pytest.raises(ValueError):
        TraceComposition(g, ReducedPoly.product(3, 2), (1,))
    with pytest.raises(ValueError):
        TraceComposition(g, ReducedPoly.product(3, 2), (1, 0))
    with pytest.raises(ValueError):
        TraceComposition(g, ReducedPoly.product(5, 2), (1, 2))


def test_parse_function_forms(f26, f34, tmp_path):
    q = parse_function("quad:xi^2", f34)
    assert q == PFunc.monomial_trace(f34, f34.xi(2), 2)
    gsum = parse_function("gold:1,1;lin:xi", f34)
    assert gsum == PFunc.monomial_trace(f34, 1, 4) + PFunc.linear(f34, f34.xi(1))
    t = parse_function("tr3:x9", f26)
    xs = f26.elements()
    assert np.array_equal(t.values, subfield_trace(f26, f26.pow(xs, 9), 3))
    path = tmp_path / "f.txt"
    write_value_table(gsum, str(path))
    assert read_value_table(str(path), f34) == gsum
    assert parse_function(f"file:{path}", f34) == gsum
    with pytest.raises(ValueError):
        parse_function("nonsense", f34)
    with pytest.raises(ValueError):
        parse_function("tr2:x9", build_field(2, 3))


def test_shift_and_constant(f34):
    f = PFunc.monomial_trace(f34, 1, 2)
    s = f34.xi(5)
    sh = f.shift(s)
    assert all(sh(x) == f(f34.add(x, s)) for x in range(f34.q))
    assert (PFunc.zero(f34) + 2).is_constant()
    assert not f.is_constant()
