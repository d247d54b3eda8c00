"""Exhaustive parameter sweeps: criterion verdicts against batched bentness."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterator

import numpy as np

from ..func import PFunc
from ..gf import FieldCtx
from .gold import gold_pair_criterion
from ..dualshift import NotExpansionForm, fit_expansion
from ..walsh import bent_mask, classify
from .restrict import NotApplicable


@dataclass
class SweepSummary:
    label: str
    params: dict
    pairs: int = 0
    oracle_bent: int = 0
    criterion_bent: int = 0
    not_applicable: int = 0
    discrepancies: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def to_json(self, max_listed: int = 10) -> dict:
        return {
            "label": self.label,
            **self.params,
            "pairs": self.pairs,
            "oracle_bent": self.oracle_bent,
            "criterion_bent": self.criterion_bent,
            "not_applicable": self.not_applicable,
            "discrepancy_count": len(self.discrepancies),
            "discrepancies": self.discrepancies[:max_listed],
        }


def _trace_rows(ctx: FieldCtx) -> np.ndarray:
    xs = ctx.elements()
    return np.stack([ctx.tr[ctx.mul(u, xs)] for u in range(ctx.q)])


def gold_pairs(ctx: FieldCtx, distinct: bool | None = None) -> Iterator[tuple[int, list[int]]]:
    """Admissible (u, [v...]) groups; p = 2 requires u != v by default."""
    if distinct is None:
        distinct = ctx.p == 2
    for u in range(1, ctx.q):
        yield u, [v for v in range(1, ctx.q) if not (distinct and v == u)]


def iter_gold_pairs(ctx: FieldCtx, a: int, k: int, confirm: bool = True, pairs=None) -> Iterator[dict]:
    """Criterion verdict per (u, v), with oracle bentness when ``confirm``."""
    p = ctx.p
    g = PFunc.monomial_trace(ctx, a, p**k + 1).values
    T = _trace_rows(ctx) if confirm else None
    for u, vs in (pairs if pairs is not None else gold_pairs(ctx)):
        if not vs:
            continue
        oracle = [None] * len(vs)
        if confirm:
            tabs = (g[None, :] + T[u][None, :] * T[vs]) % p
            oracle = [bool(x) for x in bent_mask(ctx, tabs)]
        for v, ob in zip(vs, oracle):
            try:
                ver = gold_pair_criterion(ctx, a, k, u, v)
                applicable, crit, reason = ver.applicable, ver.bent, ver.reason
            except NotApplicable as exc:
                applicable, crit, reason = False, None, str(exc)
            yield {"u": u, "v": v, "applicable": applicable, "criterion": crit,
                   "oracle": ob, "reason": reason}


def gold_pair_sweep(ctx: FieldCtx, a: int, k: int, pairs=None) -> SweepSummary:
    """Two-sided check of the Gold-pair criterion over every admissible (u, v)."""
    s = SweepSummary("gold-pair", {"field": ctx.spec, "a": int(a), "k": int(k), "d": gcd(k, ctx.n)})
    for row in iter_gold_pairs(ctx, a, k, confirm=True, pairs=pairs):
        s.pairs += 1
        s.oracle_bent += row["oracle"]
        if not row["applicable"]:
            s.not_applicable += 1
            continue
        s.criterion_bent += bool(row["criterion"])
        if row["criterion"] != row["oracle"]:
            s.discrepancies.append([row["u"], row["v"]])
    return s


def product_pair_sweep(g: PFunc, pairs=None) -> SweepSummary:
    """Discriminant verdict for g + Tr(u1 x)Tr(u2 x) against bentness, all (u1, u2)."""
    ctx = g.ctx
    p = ctx.p
    dual = classify(g).dual
    if dual is None:
        raise NotApplicable("g must be weakly regular bent")
    T = _trace_rows(ctx)
    s = SweepSummary("product-pair", {"field": ctx.spec})
    groups = pairs if pairs is not None else ((u, list(range(1, ctx.q))) for u in range(1, ctx.q))
    for u1, vs in groups:
        tabs = (g.values[None, :] + T[u1][None, :] * T[vs]) % p
        oracle = bent_mask(ctx, tabs)
        for u2, ob in zip(vs, oracle):
            s.pairs += 1
            s.oracle_bent += bool(ob)
            try:
                A = fit_expansion(dual, (u1, u2)).A
            except NotExpansionForm:
                s.not_applicable += 1
                continue
            disc = ((int(A[0, 1]) - 1) ** 2 - 4 * int(A[0, 0]) * int(A[1, 1])) % p
            s.criterion_bent += disc != 0
            if (disc != 0) != bool(ob):
                s.discrepancies.append([u1, u2])
    return s
