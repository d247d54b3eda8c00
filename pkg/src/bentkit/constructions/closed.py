"""Closed forms for small quadratic character sums and Gold-function spectra."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from ..cyclo import CycInt, eta, gauss_sum
from ..gf import FieldCtx, FieldError, linearized_root, solve_linearized


def _inv(x: int, p: int) -> int:
    return pow(x % p, -1, p)


def quadratic_char_sum(p: int, a: int, b: int) -> CycInt:
    """sum_{x in F_p} w^(a x^2 + b x) = eta(a) G w^(-b^2 / 4a), with G the Gauss sum."""
    if p == 2:
        raise ValueError("needs an odd prime")
    a %= p
    if a == 0:
        raise ValueError("a must be nonzero")
    e = (-b * b * _inv(4 * a, p)) % p
    return gauss_sum(p).scale(eta(p, a)).times_omega(e)


def bivariate_quadratic_sum(p: int, a1: int, a2: int, a3: int, a4: int, a5: int) -> CycInt:
    """H = sum_{x,y in F_p} w^(a1 x^2 + a2 y^2 + a3 xy + a4 x + a5 y)."""
    if p == 2:
        raise ValueError("needs an odd prime")
    a1, a2, a3, a4, a5 = (v % p for v in (a1, a2, a3, a4, a5))
    G = gauss_sum(p)
    disc = (a3 * a3 - 4 * a1 * a2) % p
    if disc:
        e = (a2 * a4 * a4 + a1 * a5 * a5 - a3 * a4 * a5) * _inv(disc, p)
        return CycInt.from_int(p, eta(p, disc) * p).times_omega(e % p)
    if a1 == 0:
        # disc = 0 forces a3 = 0
        if a2 == 0 and a4 == 0 and a5 == 0:
            return CycInt.from_int(p, p * p)
        if a2 != 0 and a4 == 0:
            return G.scale(eta(p, a2) * p).times_omega((-a5 * a5 * _inv(4 * a2, p)) % p)
        return CycInt.from_int(p, 0)
    if a5 == (a3 * a4 * _inv(2 * a1, p)) % p:
        return G.scale(eta(p, a1) * p).times_omega((-a4 * a4 * _inv(4 * a1, p)) % p)
    return CycInt.from_int(p, 0)


@dataclass(frozen=True)
class GoldValue:
    """Walsh value of x -> Tr(a x^(p^k+1)) at one point.

    ``kind`` is "zero", "magnitude" (only |value| is determined) or "exact".
    """

    kind: str
    magnitude: int = 0
    value: CycInt | None = None

    def matches(self, actual: CycInt) -> bool:
        if self.kind == "zero":
            return actual.is_zero()
        if self.kind == "exact":
            return actual == self.value
        return actual.is_integer() and abs(actual.as_int()) == self.magnitude


def gold_root(ctx: FieldCtx, a: int, k: int) -> int:
    """The unique c with c^(p^k+1) = a when that power map is a bijection."""
    e = ctx.p**k + 1
    if gcd(e, ctx.q - 1) != 1:
        raise FieldError(f"x -> x^{e} is not a bijection of F_{ctx.q}")
    return ctx.pow(a, pow(e, -1, ctx.q - 1))


def on_special_branch(ctx: FieldCtx, a: int, k: int) -> bool:
    """For n/d even: does a^((p^n-1)/(p^d+1)) equal (-1)^(m/d)?"""
    d = gcd(k, ctx.n)
    m = ctx.n // 2
    lhs = ctx.pow(a, (ctx.q - 1) // (ctx.p**d + 1))
    rhs = 1 if (m // d) % 2 == 0 else ctx.neg(1)
    return lhs == rhs


def _chi_bar(ctx: FieldCtx, y: int) -> int:
    """Exponent j with conj(chi(y)) = w^j."""
    return (-ctx.trace(y)) % ctx.p


def gold_walsh_closed(ctx: FieldCtx, a: int, k: int, b: int) -> GoldValue:
    p, n = ctx.p, ctx.n
    if a == 0:
        raise FieldError("a must be nonzero")
    d = gcd(k, n)
    if (n // d) % 2 == 1:
        if p != 2:
            raise FieldError("odd n/d has a closed form only for p = 2")
        c = gold_root(ctx, a, k)
        t = ctx.trace_k(ctx.div(b, c), d)
        if t != 1:
            return GoldValue("zero")
        return GoldValue("magnitude", magnitude=2 ** ((n + d) // 2))
    m = n // 2
    md = m // d
    pk = p**k
    special = on_special_branch(ctx, a, k)
    if special:
        c = linearized_root(ctx, a, k)
        if c is None:
            raise RuntimeError("special branch without a nonzero kernel element")
        t = ctx.trace_k(ctx.div(b, ctx.mul(a, ctx.pow(c, pk))), 2 * d)
        if t != 0:
            return GoldValue("zero")
    sols = solve_linearized(ctx, a, k, ctx.neg(ctx.pow(b, pk)))
    if not sols:
        raise RuntimeError(f"no x0 for b={b} although the branch requires one")
    x0 = sols[0]
    j = _chi_bar(ctx, ctx.mul(a, ctx.pow(x0, pk + 1)))
    if special:
        scale = (-1) ** (md + 1) * p ** (m + d)
    else:
        scale = (-1) ** md * p**m
    val = CycInt.from_int(p, scale).times_omega(j)
    return GoldValue("exact", magnitude=p ** (m + d) if special else p**m, value=val)
