"""Seeded random instances that satisfy each predictor's structural hypotheses.

Each instance is (g, F, points) with g a quadratic (weakly regular) bent
function, points chosen so the expansion coefficients of the dual follow the
rule's pattern, and F shaped so the restriction has the required degree.
Instances on which a per-b guard fails are discarded and redrawn.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .func import PFunc, ReducedPoly, subfield_trace
from .gf import FieldCtx, build_field
from .walsh import bent_mask, classify
from .constructions.predict import Comparison, compare_with_oracle
from .constructions.restrict import NotApplicable

BINARY_RULES = ("disjoint-pairs", "star")
ODD_RULES = ("product-pair", "quad-none", "quad-single", "quad-degenerate-pair", "quad-pair",
             "diagonal-elimination")
DEFAULT_FIELDS = {
    "binary": ((2, 6), (2, 8)),
    "odd": ((3, 4), (3, 5), (5, 2)),
}


@dataclass
class Instance:
    rule: str
    ctx: FieldCtx
    g: PFunc
    g_desc: str
    F: ReducedPoly
    points: tuple
    comparison: Comparison | None = None
    meta: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "rule": self.rule,
            "field": self.ctx.spec,
            "g": self.g_desc,
            "F": str(self.F),
            "points": [self.ctx.format_elem(u) for u in self.points],
            **self.meta,
        }
        if self.comparison is not None:
            out.update(self.comparison.to_json())
        return out


# -- bent g ------------------------------------------------------------------------

def random_quadratic_bent(ctx: FieldCtx, rng: np.random.Generator, tries: int = 500) -> tuple[PFunc, str]:
    """Tr(sum a_k x^(p^k+1)) + Tr(l x), redrawn until bent (weakly regular for odd p)."""
    p, n, q = ctx.p, ctx.n, ctx.q
    xs = ctx.elements()
    for _ in range(tries):
        vals = np.zeros(q, dtype=np.int64)
        parts = []
        ks = range(1, n // 2) if p == 2 else range(0, n // 2 + 1)
        for k in ks:
            if rng.random() < 0.6:
                a = int(rng.integers(1, q))
                vals += ctx.tr[ctx.mul(a, ctx.pow(xs, p**k + 1))]
                parts.append(f"mono:{ctx.format_elem(a)},{p**k + 1}")
        if p == 2:
            # middle term Tr_1^m(c x^(2^m+1)) with c in the subfield
            m = n // 2
            step = (q - 1) // (2**m - 1)
            c = ctx.xi(step * int(rng.integers(0, 2**m - 1)))
            vals += subfield_trace(ctx, ctx.mul(c, ctx.pow(xs, 2**m + 1)), m)
            parts.append(f"tr{m}:{ctx.format_elem(c)}*x{2**m + 1}")
        lam = int(rng.integers(0, q))
        if lam:
            vals += ctx.tr[ctx.mul(lam, xs)]
            parts.append(f"lin:{ctx.format_elem(lam)}")
        vals %= p
        if not parts or not bent_mask(ctx, vals[None, :])[0]:
            continue
        g = PFunc(ctx, vals)
        if classify(g).dual is None:
            continue
        return g, ";".join(parts)
    raise RuntimeError("no bent quadratic found")


def _form(ctx: FieldCtx, gd: np.ndarray):
    """Expansion coefficients of a quadratic dual from four evaluations."""
    p = ctx.p
    inv2 = pow(2, -1, p) if p != 2 else None

    def A(u: int, v: int | None = None) -> int:
        if v is None:
            if p == 2:
                return 0
            d1 = gd[ctx.neg(u)] - gd[0]
            d2 = gd[ctx.neg(ctx.smul(2, u))] - gd[0]
            return int((d2 - 2 * d1) * inv2 % p)
        return int((gd[ctx.neg(ctx.add(u, v))] - gd[ctx.neg(u)] - gd[ctx.neg(v)] + gd[0]) % p)

    return A


def _pick_points(ctx, rng, A, tau: int, want, final_ok=None, tries: int = 8):
    """Distinct nonzero u_1..u_tau with want(i, j, A_ij) true for i <= j."""
    q = ctx.q
    for _ in range(tries):
        pts: list[int] = []
        for i in range(tau):
            cands = []
            for u in range(1, q):
                if u in pts or not want(i, i, A(u)):
                    continue
                if not all(want(j, i, A(pts[j], u)) for j in range(i)):
                    continue
                if i == tau - 1 and final_ok is not None and not final_ok(_matrix(A, pts + [u])):
                    continue
                cands.append(u)
            if not cands:
                break
            pts.append(int(rng.choice(cands)))
        else:
            return tuple(pts)
    return None


def _matrix(A, pts) -> np.ndarray:
    t = len(pts)
    M = np.zeros((t, t), dtype=np.int64)
    for i in range(t):
        M[i, i] = A(pts[i])
        for j in range(i + 1, t):
            M[i, j] = M[j, i] = A(pts[i], pts[j])
    return M


# -- F shapes ----------------------------------------------------------------------

def _random_exps(rng, p: int, tau: int, free: list[int], limited: list[int], cap: int) -> tuple:
    e = [0] * tau
    for i in free:
        if rng.random() < 0.5:
            e[i] = int(rng.integers(1, p))
    budget = cap
    for i in rng.permutation(limited):
        if budget <= 0:
            break
        k = int(rng.integers(0, min(p - 1, budget) + 1))
        e[int(i)] = k
        budget -= k
    return tuple(e)


def _random_F(rng, p: int, tau: int, make_exps, terms=(1, 4)) -> ReducedPoly:
    """Prefer degree >= 2; some layouts only admit affine F."""
    for attempt in itertools.count():
        acc = {}
        for _ in range(int(rng.integers(terms[0], terms[1] + 1))):
            e = make_exps()
            if sum(e) == 0:
                continue
            acc[e] = (acc.get(e, 0) + int(rng.integers(1, p))) % p
        F = ReducedPoly(p, tau, {e: c for e, c in acc.items() if c})
        if F.degree >= 2 or (attempt >= 20 and not F.is_zero()):
            return F


# -- rule layouts ------------------------------------------------------------------

def _layout(rule: str, ctx: FieldCtx, rng, A):
    """Return (points, F) or None when no points fit the drawn layout."""
    p = ctx.p
    if rule == "disjoint-pairs":
        tau = int(rng.integers(2, 5))
        idx = list(rng.permutation(tau))
        npairs = int(rng.integers(1, tau // 2 + 1))
        pairs = {tuple(sorted((int(idx[2 * s]), int(idx[2 * s + 1])))) for s in range(npairs)}
        gamma = sorted({i for pr in pairs for i in pr})
        rest = [i for i in range(tau) if i not in gamma]
        pts = _pick_points(ctx, rng, A, tau, lambda i, j, v: i == j or v == int((i, j) in pairs))

        def exps():
            e = list(_random_exps(rng, p, tau, rest, [], 0))
            if rng.random() < 0.8:
                e[int(rng.choice(gamma))] = 1
            return tuple(e)

        return pts, (lambda: _random_F(rng, p, tau, exps))
    if rule == "star":
        tau = int(rng.integers(3, 5))
        hub = int(rng.integers(0, tau))
        others = [i for i in range(tau) if i != hub]
        nleaves = int(rng.integers(2, len(others) + 1))
        leaves = sorted(int(i) for i in rng.choice(others, nleaves, replace=False))
        rest = [i for i in others if i not in leaves]

        def want(i, j, v):
            if i == j:
                return True
            return v == int(hub in (i, j) and (i in leaves or j in leaves))

        pts = _pick_points(ctx, rng, A, tau, want)

        def exps():
            e = list(_random_exps(rng, p, tau, rest, [], 0))
            r = rng.random()
            if r < 0.35:
                e[hub] = 1
            elif r < 0.9:
                for l in leaves:
                    if rng.random() < 0.5:
                        e[l] = 1
            return tuple(e)

        return pts, (lambda: _random_F(rng, p, tau, exps))
    if rule == "product-pair":
        pts = _pick_points(ctx, rng, A, 2, lambda i, j, v: True)
        return pts, (lambda: ReducedPoly.product(p, 2))
    if rule == "quad-none":
        tau = int(rng.integers(2, 4))
        pts = _pick_points(ctx, rng, A, tau, lambda i, j, v: v == 0)
        return pts, (lambda: _random_F(rng, p, tau, lambda: _random_exps(rng, p, tau, list(range(tau)), [], 0)))
    if rule == "quad-single":
        tau = int(rng.integers(2, 4))
        t2 = int(rng.integers(0, tau))
        pts = _pick_points(ctx, rng, A, tau, lambda i, j, v: (v != 0) == (i == j == t2))
        rest = [i for i in range(tau) if i != t2]

        def exps():
            # keep x_t2^2 terms free of other variables so a_2 does not depend on b
            e = list(_random_exps(rng, p, tau, rest, [t2], 2))
            if e[t2] == 2:
                e = [0] * tau
                e[t2] = 2
            return tuple(e)

        return pts, (lambda: _random_F(rng, p, tau, exps))
    if rule in ("quad-degenerate-pair", "quad-pair"):
        tau = int(rng.integers(2, 4))
        t1, t2 = sorted(int(i) for i in rng.choice(tau, 2, replace=False))
        rest = [i for i in range(tau) if i not in (t1, t2)]

        def want(i, j, v):
            if {i, j} <= {t1, t2}:
                return not (rule == "quad-degenerate-pair" and i == j == t1 and v == 0)
            return v == 0

        if rule == "quad-degenerate-pair":
            final = lambda M: (M[t1, t2] ** 2 - 4 * M[t1, t1] * M[t2, t2]) % p == 0  # noqa: E731
        else:
            final = lambda M: (M[t1, t2] ** 2 - 4 * M[t1, t1] * M[t2, t2]) % p != 0  # noqa: E731
        pts = _pick_points(ctx, rng, A, tau, want, final)
        return pts, (lambda: _random_F(rng, p, tau, lambda: _random_exps(rng, p, tau, rest, [t1, t2], 2)))
    if rule == "diagonal-elimination":
        tau = int(rng.integers(2, 5))
        pts = _pick_points(ctx, rng, A, tau, lambda i, j, v: (v != 0) == (i == j))

        def quad_form():
            while True:
                terms = {}
                for i, j in itertools.combinations_with_replacement(range(tau), 2):
                    if rng.random() < 0.5:
                        e = [0] * tau
                        e[i] += 1
                        e[j] += 1
                        terms[tuple(e)] = int(rng.integers(1, p))
                if terms:
                    return ReducedPoly(p, tau, terms)

        return pts, quad_form
    raise KeyError(rule)


def sample_instances(rule: str, count: int, seed: int = 0, fields=None, max_draws: int | None = None) -> list[Instance]:
    """``count`` instances of ``rule``, each already compared with the oracle."""
    rng = np.random.default_rng([seed, sum(map(ord, rule))])
    if fields is None:
        fields = DEFAULT_FIELDS["binary" if rule in BINARY_RULES else "odd"]
    ctxs = [build_field(p, n) for p, n in fields]
    out: list[Instance] = []
    draws = 0
    limit = max_draws if max_draws is not None else 40 * count
    while len(out) < count and draws < limit:
        draws += 1
        ctx = ctxs[draws % len(ctxs)]
        g, desc = random_quadratic_bent(ctx, rng)
        A = _form(ctx, classify(g).dual.values)
        pts, make_F = _layout(rule, ctx, rng, A)
        if pts is None:
            continue
        F = make_F()
        try:
            cmp = compare_with_oracle(rule, g, F, pts)
        except NotApplicable:
            continue
        if not cmp.applicable:
            continue
        out.append(Instance(rule, ctx, g, desc, F, pts, cmp))
    return out
