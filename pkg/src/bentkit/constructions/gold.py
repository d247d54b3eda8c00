"""Bentness criteria for Tr(a x^(p^k+1)) + Tr(ux)Tr(vx) with a non-bent Gold part."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from ..gf import FieldCtx, linearized_root
from .closed import gold_root, on_special_branch
from .restrict import NotApplicable


@dataclass
class GoldVerdict:
    applicable: bool
    bent: bool | None
    reason: str
    data: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"applicable": self.applicable, "bent": self.bent, "reason": self.reason, **self.data}


def _check_points(u: int, v: int) -> None:
    if u == 0 or v == 0:
        raise NotApplicable("u and v must be nonzero")


def odd_quotient_criterion(ctx: FieldCtx, a: int, k: int, u: int, v: int) -> GoldVerdict:
    """p = 2 and n/gcd(k, n) odd."""
    if ctx.p != 2:
        raise NotApplicable("needs p = 2")
    n = ctx.n
    d = gcd(k, n)
    if (n // d) % 2 == 0:
        raise NotApplicable("n/d is even; use the even-quotient criterion")
    _check_points(u, v)
    if u == v:
        raise NotApplicable("u and v must be distinct for p = 2")
    c = gold_root(ctx, a, k)
    data = {"d": d, "c": int(c)}
    if d != 2:
        return GoldVerdict(True, False, f"d = {d} differs from 2", data)
    ci = ctx.inv(c)
    traces = [ctx.trace_k(ctx.mul(w, ci), 2) for w in (u, v, ctx.add(u, v))]
    data["subfield_traces"] = [int(t) for t in traces]
    if all(traces):
        return GoldVerdict(True, True, "all three subfield traces are nonzero", data)
    return GoldVerdict(True, False, "a subfield trace vanishes", data)


def even_quotient_criterion(ctx: FieldCtx, a: int, k: int, u: int, v: int) -> GoldVerdict:
    """n/gcd(k, n) even and a on the special branch."""
    p, n = ctx.p, ctx.n
    d = gcd(k, n)
    if (n // d) % 2 == 1:
        raise NotApplicable("n/d is odd")
    _check_points(u, v)
    if not on_special_branch(ctx, a, k):
        return GoldVerdict(False, None, "hypothesis-not-met: a^((p^n-1)/(p^d+1)) != (-1)^(m/d)",
                           {"d": d})
    c = linearized_root(ctx, a, k)
    if c is None:
        raise RuntimeError("special branch without a nonzero kernel element")
    data = {"d": d, "c": int(c)}
    if d != 1:
        return GoldVerdict(True, False, f"d = {d} exceeds 1", data)
    den = ctx.mul(a, ctx.pow(c, p**k))
    tu = int(ctx.trace_k(ctx.div(u, den), 2))
    tv = int(ctx.trace_k(ctx.div(v, den), 2))
    data["subfield_traces"] = [tu, tv]
    if tv == 0:
        return GoldVerdict(True, False, "Tr_2^n(v/(a c^(p^k))) vanishes", data)
    ratio = ctx.div(tu, tv)
    if bool(np.all(ctx.in_subfield(ratio, 1))):
        return GoldVerdict(True, False, "trace ratio lies in F_p", data)
    return GoldVerdict(True, True, "trace ratio lies outside F_p", data)


def gold_pair_criterion(ctx: FieldCtx, a: int, k: int, u: int, v: int) -> GoldVerdict:
    """Dispatch on the parity of n/gcd(k, n)."""
    d = gcd(k, ctx.n)
    if (ctx.n // d) % 2 == 1:
        return odd_quotient_criterion(ctx, a, k, u, v)
    return even_quotient_criterion(ctx, a, k, u, v)
