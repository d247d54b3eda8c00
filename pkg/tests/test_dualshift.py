import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bentkit.dualshift import NotExpansionForm, fit_expansion, gamma_of, verify_expansion
from bentkit.func import PFunc
from bentkit.gf import build_field
from bentkit.walsh import classify


def brute_expansion_holds(gd, pts, A, gfun):
    ctx = gd.ctx
    p, tau = ctx.p, len(pts)
    for t in itertools.product(range(p), repeat=tau):
        s = 0
        for u, c in zip(pts, t):
            s = ctx.add(s, ctx.smul(c, u))
        for x in range(0, ctx.q, 7):
            lhs = gd(ctx.sub(x, s))
            rhs = gd(x) + sum(A[i][j] * t[i] * t[j] for i in range(tau) for j in range(i, tau))
            rhs += sum(gfun[i](x) * t[i] for i in range(tau))
            if lhs != rhs % p:
                return False
    return True


def random_quadratic(ctx, rng):
    xs = ctx.elements()
    vals = np.zeros(ctx.q, dtype=np.int64)
    for k in range(ctx.n):
        a = int(rng.integers(0, ctx.q))
        vals += ctx.tr[ctx.mul(a, ctx.pow(xs, ctx.p**k + 1))]
    vals += ctx.tr[ctx.mul(int(rng.integers(0, ctx.q)), xs)]
    return PFunc(ctx, vals)


def test_known_expansion_of_square_trace(f34):
    # gd(x) = -Tr(x^2): gd(x - tu) = gd(x) - Tr(u^2) t^2 + 2 Tr(ux) t
    gd = -PFunc.monomial_trace(f34, 1, 2)
    u, v = f34.xi(2), f34.xi(7)
    exp = fit_expansion(gd, (u, v))
    assert exp.A[0, 0] == (-f34.tr[f34.pow(u, 2)]) % 3
    assert exp.A[0, 1] == (-2 * f34.tr[f34.mul(u, v)]) % 3
    assert np.array_equal(exp.g_funcs[0].values, (2 * f34.tr[f34.mul(u, f34.elements())]) % 3)
    assert brute_expansion_holds(gd, (u, v), exp.A.tolist(), exp.g_funcs)


@pytest.mark.parametrize("p,n", [(3, 4), (2, 6), (5, 2)])
@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_quadratics_always_fit(p, n, seed):
    ctx = build_field(p, n)
    rng = np.random.default_rng(seed)
    gd = random_quadratic(ctx, rng)
    tau = int(rng.integers(1, 4))
    pts = tuple(int(u) for u in rng.integers(1, ctx.q, size=tau))
    exp = fit_expansion(gd, pts)
    assert verify_expansion(gd, pts, exp) == (True, None)
    assert np.array_equal(exp.A, exp.A.T)


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_binary_diagonal_override_keeps_h(seed):
    ctx = build_field(2, 6)
    rng = np.random.default_rng(seed)
    gd = random_quadratic(ctx, rng)
    tau = int(rng.integers(1, 4))
    pts = tuple(int(u) for u in rng.integers(1, ctx.q, size=tau))
    base = fit_expansion(gd, pts)
    diag = [int(d) for d in rng.integers(0, 2, size=tau)]
    alt = fit_expansion(gd, pts, diag_override=diag)
    assert [int(alt.A[i, i]) for i in range(tau)] == diag
    for b in range(ctx.q):
        assert alt.h_at(b) == base.h_at(b)
    off = ~np.eye(tau, dtype=bool)
    assert np.array_equal(alt.A[off], base.A[off])


def test_cubic_dual_is_rejected_with_witness():
    ctx = build_field(3, 3)
    gd = PFunc.monomial_trace(ctx, 1, 5)  # x^5: digit sum 3
    with pytest.raises(NotExpansionForm) as info:
        fit_expansion(gd, (1, ctx.xi(1)))
    assert info.value.t


def test_override_rules(f34, f26):
    with pytest.raises(ValueError):
        fit_expansion(PFunc.zero(f34), (1,), diag_override=[1])
    with pytest.raises(ValueError):
        fit_expansion(PFunc.zero(f26), (1, 2), diag_override=[1])
    with pytest.raises(ValueError):
        fit_expansion(PFunc.zero(f26), (0,))


def test_gamma_and_json(f34):
    A = np.array([[1, 0, 2], [0, 0, 0], [2, 0, 1]])
    assert gamma_of(A) == (0, 2)
    gd = classify(PFunc.monomial_trace(f34, 1, 2)).dual
    exp = fit_expansion(gd, (f34.xi(2), f34.xi(7)))
    js = exp.to_json()
    assert js["A"] == [[1, 1], [1]] and js["gamma"] == [1, 2] and js["diagonal_inclusive"]
