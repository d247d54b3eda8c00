"""Shift expansions of a dual function.

Given gd: F_{p^n} -> F_p and points u_1..u_tau, find constants A_ij (i <= j)
and functions g_i with

    gd(x - sum u_i t_i) = gd(x) + sum_{i<=j} A_ij t_i t_j + sum_i g_i(x) t_i

for every x and every t in F_p^tau, or produce a witness that no such data
exists.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .func import PFunc, all_points
from .gf import FieldCtx


class NotExpansionForm(ValueError):
    def __init__(self, msg: str, x: int, t: tuple):
        super().__init__(f"{msg} (witness x={x}, t={t})")
        self.x = x
        self.t = t


@dataclass(frozen=True)
class DualExpansion:
    gdual: PFunc
    points: tuple
    A: np.ndarray  # symmetric tau x tau over F_p, diagonal included
    g_funcs: tuple  # PFunc per point

    @property
    def ctx(self) -> FieldCtx:
        return self.gdual.ctx

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def tau(self) -> int:
        return len(self.points)

    @property
    def gamma(self) -> tuple[int, ...]:
        """0-based indices touched by a nonzero off-diagonal coefficient."""
        return gamma_of(self.A)

    def off_diagonal_pairs(self) -> list[tuple[int, int]]:
        tau = self.tau
        return [(i, j) for i in range(tau) for j in range(i + 1, tau) if self.A[i, j]]

    def g_at(self, b: int) -> tuple[int, ...]:
        return tuple(int(g.values[b]) for g in self.g_funcs)

    def h_at(self, b: int) -> tuple[int, ...]:
        """h_i = g_i(b) + A_ii, the combination the binary predictors consume."""
        return tuple((int(g.values[b]) + int(self.A[i, i])) % self.p for i, g in enumerate(self.g_funcs))

    def to_json(self) -> dict:
        tau = self.tau
        return {
            "A": [[int(self.A[i, j]) for j in range(i, tau)] for i in range(tau)],
            "g": [[int(v) for v in g.values] for g in self.g_funcs],
            "gamma": [i + 1 for i in self.gamma],
            "points": list(self.points),
            "diagonal_inclusive": True,
        }


def gamma_of(A: np.ndarray) -> tuple[int, ...]:
    tau = A.shape[0]
    s = set()
    for i in range(tau):
        for j in range(i + 1, tau):
            if A[i, j]:
                s.update((i, j))
    return tuple(sorted(s))


def _shift_diff(gd: PFunc, s: int) -> np.ndarray:
    """x -> gd(x - s) - gd(x)."""
    ctx = gd.ctx
    return (gd.values[ctx.sub(ctx.elements(), s)] - gd.values) % ctx.p


def _constant(arr: np.ndarray, what: str, t: tuple) -> int:
    bad = np.nonzero(arr != arr[0])[0]
    if bad.size:
        raise NotExpansionForm(f"{what} is not constant in x", int(bad[0]), t)
    return int(arr[0])


def fit_expansion(gdual: PFunc, points, diag_override=None) -> DualExpansion:
    """Recover (A, g_i) from shift differences and verify exhaustively.

    For p = 2 the diagonal is not identifiable (t^2 = t); A_ii defaults to 0
    and the constant is absorbed into g_i.  ``diag_override`` supplies
    explicit A_ii values for p = 2 instead.
    """
    ctx = gdual.ctx
    p = ctx.p
    pts = tuple(int(u) for u in points)
    if any(u == 0 for u in pts):
        raise ValueError("points must be nonzero")
    tau = len(pts)
    e = [tuple(int(k == i) for k in range(tau)) for i in range(tau)]
    A = np.zeros((tau, tau), dtype=np.int64)
    D1 = [_shift_diff(gdual, u) for u in pts]
    g = []
    if p == 2:
        diag = [0] * tau if diag_override is None else [int(a) % 2 for a in diag_override]
        if len(diag) != tau:
            raise ValueError("diagonal override needs one value per point")
        for i in range(tau):
            A[i, i] = diag[i]
            g.append((D1[i] - diag[i]) % 2)
    else:
        if diag_override is not None:
            raise ValueError("diagonal override only applies to p = 2")
        inv2 = pow(2, -1, p)
        for i, u in enumerate(pts):
            D2 = _shift_diff(gdual, ctx.smul(2, u))
            a = _constant(((D2 - 2 * D1[i]) * inv2) % p, f"A_{i + 1}{i + 1}", tuple(2 * x for x in e[i]))
            A[i, i] = a
            g.append((D1[i] - a) % p)
    for i in range(tau):
        for j in range(i + 1, tau):
            Dij = _shift_diff(gdual, ctx.add(pts[i], pts[j]))
            t = tuple(int(k in (i, j)) for k in range(tau))
            a = _constant((Dij - D1[i] - D1[j]) % p, f"A_{i + 1}{j + 1}", t)
            A[i, j] = A[j, i] = a
    exp = DualExpansion(gdual, pts, A, tuple(PFunc(ctx, gi) for gi in g))
    ok, witness = verify_expansion(gdual, pts, exp)
    if not ok:
        raise NotExpansionForm("expansion identity fails", *witness)
    return exp


def verify_expansion(gdual: PFunc, points, exp: DualExpansion) -> tuple[bool, tuple | None]:
    """Check the identity for all (x, t); return the first failing (x, t)."""
    ctx = gdual.ctx
    p = ctx.p
    pts = tuple(int(u) for u in points)
    tau = len(pts)
    if exp.A.shape != (tau, tau) or len(exp.g_funcs) != tau:
        raise ValueError("expansion shape does not match the points")
    xs = ctx.elements()
    G = np.stack([g.values for g in exp.g_funcs]) if tau else np.zeros((0, ctx.q), dtype=np.int64)
    for t in all_points(p, tau):
        s = 0
        for u, c in zip(pts, t):
            s = ctx.add(s, ctx.smul(int(c), u))
        lhs = gdual.values[ctx.sub(xs, s)]
        quad = sum(int(exp.A[i, j]) * int(t[i]) * int(t[j]) for i in range(tau) for j in range(i, tau))
        rhs = (gdual.values + quad + t @ G) % p
        bad = np.nonzero(lhs != rhs)[0]
        if bad.size:
            return False, (int(bad[0]), tuple(int(c) for c in t))
    return True, None
