"""Exact Walsh spectra, the decomposition through a multivariate transform,
bentness / weak-regularity classification and dual extraction.

A spectrum is stored as an integer array of shape (p^n, p): row b holds the
canonical Z[w] coefficients of f^(b) = sum_x w^(f(x) - Tr(bx)).
"""

from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass

import numpy as np

from . import cyclo
from .cyclo import CycInt, sqrt_p_power
from .func import TraceComposition, PFunc, ReducedPoly, all_points, eval_reduced
from .gf import FieldCtx

log = logging.getLogger(__name__)


class InconsistentSpectrum(RuntimeError):
    """A bent spectrum entry is not of the form +-P w^j."""

    def __init__(self, b: int, value: CycInt):
        super().__init__(f"Walsh value at b={b} is not +-P*w^j: {value}")
        self.b = b
        self.value = value


class NotWeaklyRegular(ValueError):
    pass


class WalshSpectrum:
    __slots__ = ("ctx", "values")

    def __init__(self, ctx: FieldCtx, values):
        v = cyclo.canonical(np.asarray(values, dtype=np.int64).reshape(ctx.q, ctx.p))
        v.setflags(write=False)
        self.ctx = ctx
        self.values = v

    def __getitem__(self, b: int) -> CycInt:
        return CycInt(self.ctx.p, self.values[int(b)])

    def __len__(self) -> int:
        return self.ctx.q

    def __eq__(self, other) -> bool:
        if not isinstance(other, WalshSpectrum):
            return NotImplemented
        return self.ctx is other.ctx and np.array_equal(self.values, other.values)

    def __hash__(self) -> int:
        return hash(self.digest())

    def first_difference(self, other: "WalshSpectrum") -> int | None:
        diff = np.nonzero(np.any(self.values != other.values, axis=1))[0]
        return int(diff[0]) if diff.size else None

    def norm_sq(self) -> np.ndarray:
        return cyclo.norm_sq_rows(self.values)

    def parseval_total(self) -> int:
        """sum_b |f^(b)|^2, which must be a rational integer."""
        tot = self.norm_sq().sum(axis=0)
        if np.any(tot[1:]):
            raise ArithmeticError("sum of squared magnitudes is not rational")
        return int(tot[0])

    def digest(self) -> str:
        return hashlib.sha256(np.ascontiguousarray(self.values, dtype="<i8").tobytes()).hexdigest()

    def rows(self) -> list[dict]:
        norms = self.norm_sq()
        out = []
        for b in range(self.ctx.q):
            nb = norms[b]
            ns = int(nb[0]) if not np.any(nb[1:]) else str(CycInt(self.ctx.p, nb))
            out.append({"b_index": b, "coeffs": [int(c) for c in self.values[b]], "norm_sq": ns})
        return out


# -- transforms ----------------------------------------------------------------

def _dual_coordinate_index(ctx: FieldCtx) -> np.ndarray:
    """For each b, the index of the vector (Tr(b X^i))_i."""
    bs = ctx.elements()
    idx = np.zeros(ctx.q, dtype=np.int64)
    for i in range(ctx.n):
        # X^i has index p^i in the coefficient encoding
        idx += ctx.tr[ctx.mul(bs, ctx.p**i)] * ctx.p**i
    return idx


def _fwht(a: np.ndarray) -> np.ndarray:
    """Unnormalized Hadamard transform along the last axis."""
    a = a.astype(np.int64)
    lead, q = a.shape[:-1], a.shape[-1]
    h = 1
    while h < q:
        a = a.reshape(lead + (-1, 2, h))
        a = np.stack([a[..., 0, :] + a[..., 1, :], a[..., 0, :] - a[..., 1, :]], axis=-2)
        h *= 2
    return a.reshape(lead + (q,))


def _radix_p(arr: np.ndarray, p: int, n: int) -> np.ndarray:
    """out[..., y, :] = sum_x arr[..., x, :] * w^(-x.y) over coordinate vectors."""
    lead = arr.shape[:-2]
    a = arr
    for i in range(n):
        a = a.reshape(lead + (p ** (n - i - 1), p, p**i, p))
        out = np.zeros_like(a)
        for y in range(p):
            for x in range(p):
                out[..., y, :, :] += np.roll(a[..., x, :, :], (-x * y) % p, axis=-1)
        a = out
    return a.reshape(lead + (p**n, p))


def spectra_batch(ctx: FieldCtx, tables) -> np.ndarray:
    """Canonical spectra of many value tables at once, shape (m, q, p)."""
    tables = np.asarray(tables, dtype=np.int64) % ctx.p
    m, p = tables.shape[0], ctx.p
    yidx = _dual_coordinate_index(ctx)
    if p == 2:
        out = np.zeros((m, ctx.q, 2), dtype=np.int64)
        out[..., 0] = _fwht(1 - 2 * tables)[:, yidx]
        return out
    onehot = np.zeros((m, ctx.q, p), dtype=np.int64)
    np.put_along_axis(onehot, tables[..., None], 1, axis=-1)
    return cyclo.canonical(_radix_p(onehot, p, ctx.n)[:, yidx])


def bent_mask(ctx: FieldCtx, tables) -> np.ndarray:
    """Exact bentness of each value table (boolean array)."""
    spec = spectra_batch(ctx, tables)
    m = spec.shape[0]
    norms = cyclo.norm_sq_rows(spec.reshape(-1, ctx.p)).reshape(m, ctx.q, ctx.p)
    return np.all(norms[..., 0] == ctx.q, axis=1) & ~np.any(norms[..., 1:], axis=(1, 2))


def walsh_full(f: PFunc) -> WalshSpectrum:
    """Exact spectrum of f by a fast transform in coordinates."""
    ctx = f.ctx
    return WalshSpectrum(ctx, spectra_batch(ctx, f.values[None, :])[0])


def walsh_direct(f: PFunc) -> WalshSpectrum:
    """Definition-level spectrum: count x by the value of f(x) - Tr(bx)."""
    ctx = f.ctx
    p = ctx.p
    xs = ctx.elements()
    vals = np.zeros((ctx.q, p), dtype=np.int64)
    for b in range(ctx.q):
        e = (f.values - ctx.tr[ctx.mul(b, xs)]) % p
        vals[b] = np.bincount(e, minlength=p)
    return WalshSpectrum(ctx, vals)


def inverse_walsh(spec: WalshSpectrum) -> PFunc:
    """Recover f from its spectrum: p^n w^f(x) = sum_b w^Tr(bx) f^(b)."""
    ctx = spec.ctx
    p, q = ctx.p, ctx.q
    bs = ctx.elements()
    vals = np.zeros(q, dtype=np.int64)
    units = {cyclo.canonical(np.roll(np.eye(1, p, 0, dtype=np.int64)[0], j)).tobytes(): j
             for j in range(p)}
    for x in range(q):
        acc = cyclo.canonical(cyclo.roll(spec.values, ctx.tr[ctx.mul(bs, x)]).sum(axis=0))
        if np.any(acc % q):
            raise ArithmeticError(f"inverse transform not divisible by {q} at x={x}")
        j = units.get((acc // q).tobytes())
        if j is None:
            raise ArithmeticError(f"inverse transform at x={x} is not a root of unity")
        vals[x] = j
    return PFunc(ctx, vals)


def _multivariate_array(F: ReducedPoly) -> tuple[np.ndarray, np.ndarray]:
    p, tau = F.p, F.arity
    pts = all_points(p, tau)
    fv = eval_reduced(F, [pts[:, i] for i in range(tau)])
    dots = (pts @ pts.T) % p  # [b, x] -> b.x
    vals = np.zeros((len(pts), p), dtype=np.int64)
    for bi in range(len(pts)):
        e = (fv - dots[bi]) % p
        vals[bi] = np.bincount(e, minlength=p)
    return pts, cyclo.canonical(vals)


def walsh_multivariate(F: ReducedPoly) -> dict[tuple, CycInt]:
    """F^(b) = sum_{x in F_p^tau} w^(F(x) - b.x), keyed by b."""
    pts, vals = _multivariate_array(F)
    return {tuple(int(t) for t in b): CycInt(F.p, v) for b, v in zip(pts, vals)}


def inverse_multivariate(Fhat: dict[tuple, CycInt], p: int) -> dict[tuple, CycInt]:
    """x -> (1/p^tau) sum_b w^(b.x) F^(b); equals w^F(x) when Fhat is a transform."""
    keys = sorted(Fhat)
    tau = len(keys[0])
    out = {}
    for x in keys:
        acc = CycInt.from_int(p, 0)
        for b in keys:
            acc = acc + Fhat[b].times_omega(sum(bi * xi for bi, xi in zip(b, x)))
        out[x] = acc.exact_div(p**tau)
    return out


def walsh_via_decomposition(spec: TraceComposition, ghat: WalshSpectrum | None = None) -> WalshSpectrum:
    """f^(b) = p^-tau sum_t F^(t) g^(b - sum t_i u_i)."""
    ctx = spec.ctx
    p, tau = ctx.p, spec.tau
    ghat = ghat if ghat is not None else walsh_full(spec.g)
    pts, Fvals = _multivariate_array(spec.F)
    bs = ctx.elements()
    acc = np.zeros((ctx.q, p), dtype=np.int64)
    for t, Ft in zip(pts, Fvals):
        if not np.any(Ft):
            continue
        s = _combo(ctx, spec.points, t)
        shifted = ghat.values[ctx.sub(bs, s)]
        acc += cyclo.mul_scalar(shifted, CycInt(p, Ft))
    return WalshSpectrum(ctx, _exact_div_rows(acc, p**tau))


def walsh_product_form(spec: TraceComposition, ghat: WalshSpectrum | None = None) -> WalshSpectrum:
    """Specialized decomposition when F = x_1 ... x_tau.

    f^(b) = p^-(tau-1) sum_{t, x in F_p^(tau-1)} w^(-x.t) g^(b - sum t_i u_i - (prod x_i) u_tau)
    """
    ctx = spec.ctx
    p, tau = ctx.p, spec.tau
    if spec.F != ReducedPoly.product(p, tau):
        raise ValueError("product-form path needs F = x1*...*x_tau")
    ghat = ghat if ghat is not None else walsh_full(spec.g)
    head, last = spec.points[:-1], spec.points[-1]
    pts = all_points(p, tau - 1)
    bs = ctx.elements()
    acc = np.zeros((ctx.q, p), dtype=np.int64)
    for t in pts:
        s_t = _combo(ctx, head, t)
        for x in pts:
            prod = int(np.prod(x)) % p
            s = ctx.add(s_t, ctx.smul(prod, last))
            shifted = ghat.values[ctx.sub(bs, s)]
            acc += cyclo.roll(shifted, (-int(x @ t)) % p)
    return WalshSpectrum(ctx, _exact_div_rows(acc, p ** (tau - 1)))


def _combo(ctx: FieldCtx, points, coeffs) -> int:
    s = 0
    for u, c in zip(points, coeffs):
        if c:
            s = ctx.add(s, ctx.smul(int(c), u))
    return int(s)


def _exact_div_rows(arr: np.ndarray, m: int) -> np.ndarray:
    arr = cyclo.canonical(arr)
    if np.any(arr % m):
        raise ArithmeticError(f"decomposition sum not divisible by {m}")
    return arr // m


# -- classification ----------------------------------------------------------------

KINDS = ("not-bent", "bent-not-weakly-regular", "weakly-regular", "regular")


@dataclass
class RegularityReport:
    is_bent: bool
    kind: str
    spectrum: WalshSpectrum
    mu: str | None = None
    epsilon: int | None = None
    dual: PFunc | None = None
    unit_scale: CycInt | None = None  # mu^-1 p^(n/2) as an exact element
    witness_b: int | None = None  # first b violating bentness / regularity

    def to_json(self, with_dual: bool = True) -> dict:
        out = {"bent": self.is_bent, "kind": self.kind, "mu": self.mu, "epsilon": self.epsilon}
        if self.witness_b is not None:
            out["witness_b"] = self.witness_b
        if with_dual and self.dual is not None:
            out["dual_table"] = [int(v) for v in self.dual.values]
        return out


def _mu_label(p: int, n: int, eps: int) -> str:
    # unit_scale = eps * P and P = p^(n/2), or p^((n-1)/2) * sqrt(p*) for odd n;
    # sqrt(p*) = sqrt(p) when p = 1 mod 4 and i*sqrt(p) when p = 3 mod 4
    if n % 2 == 0 or p % 4 == 1:
        return "1" if eps == 1 else "-1"
    return "-i" if eps == 1 else "i"


def decompose_units(spec: WalshSpectrum) -> tuple[np.ndarray, np.ndarray]:
    """For a bent spectrum (odd p) find eps_b, j_b with f^(b) = eps_b P w^(j_b)."""
    ctx = spec.ctx
    p = ctx.p
    P = np.array(sqrt_p_power(p, ctx.n).coeffs, dtype=np.int64)
    cands = []
    labels = []
    for eps in (1, -1):
        for j in range(p):
            cands.append(cyclo.canonical(eps * np.roll(P, j)))
            labels.append((eps, j))
    cands = np.array(cands)
    keyed = {c.tobytes(): lab for c, lab in zip(cands, labels)}
    eps_b = np.zeros(ctx.q, dtype=np.int64)
    j_b = np.zeros(ctx.q, dtype=np.int64)
    for b in range(ctx.q):
        lab = keyed.get(np.ascontiguousarray(spec.values[b]).tobytes())
        if lab is None:
            raise InconsistentSpectrum(b, spec[b])
        eps_b[b], j_b[b] = lab
    return eps_b, j_b


def classify(f: PFunc, spectrum: WalshSpectrum | None = None) -> RegularityReport:
    ctx = f.ctx
    p, n, q = ctx.p, ctx.n, ctx.q
    spec = spectrum if spectrum is not None else walsh_full(f)
    norms = spec.norm_sq()
    good = (norms[:, 0] == q) & ~np.any(norms[:, 1:], axis=1)
    if not np.all(good):
        return RegularityReport(False, "not-bent", spec, witness_b=int(np.nonzero(~good)[0][0]))
    if p == 2:
        # bent forces n even, so f^(b) = +-2^(n/2)
        dual = PFunc(ctx, (spec.values[:, 0] < 0).astype(np.int64))
        return RegularityReport(True, "regular", spec, mu="1", epsilon=1, dual=dual,
                                unit_scale=CycInt.from_int(2, 2 ** (n // 2)))
    try:
        eps_b, j_b = decompose_units(spec)
    except InconsistentSpectrum as exc:
        log.error("bent spectrum entry outside +-P w^j at b=%d", exc.b)
        raise
    if np.any(eps_b != eps_b[0]):
        return RegularityReport(True, "bent-not-weakly-regular", spec,
                                witness_b=int(np.nonzero(eps_b != eps_b[0])[0][0]))
    eps = int(eps_b[0])
    mu = _mu_label(p, n, eps)
    return RegularityReport(
        True,
        "regular" if mu == "1" else "weakly-regular",
        spec,
        mu=mu,
        epsilon=eps,
        dual=PFunc(ctx, j_b),
        unit_scale=sqrt_p_power(p, n).scale(eps),
    )


def dual_of(f: PFunc) -> PFunc:
    rep = classify(f)
    if rep.dual is None:
        raise NotWeaklyRegular(f"function is {rep.kind}")
    return rep.dual


def spectrum_from_dual(ctx: FieldCtx, unit_scale: CycInt, exponents) -> WalshSpectrum:
    """b -> unit_scale * w^exponents[b] as a spectrum."""
    base = np.array(unit_scale.coeffs, dtype=np.int64)
    rows = np.broadcast_to(base, (ctx.q, ctx.p))
    return WalshSpectrum(ctx, cyclo.roll(np.ascontiguousarray(rows), np.asarray(exponents) % ctx.p))
