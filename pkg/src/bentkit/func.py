"""Functions F_{p^n} -> F_p, reduced multivariate polynomials, and degrees."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .gf import FieldCtx, FieldError, parse_elem


class PFunc:
    """A total function F_{p^n} -> F_p stored as its value table."""

    __slots__ = ("ctx", "values")

    def __init__(self, ctx: FieldCtx, values):
        v = np.asarray(values, dtype=np.int64)
        if v.shape != (ctx.q,):
            raise ValueError(f"value table must have length {ctx.q}, got {v.shape}")
        self.ctx = ctx
        self.values = v % ctx.p
        self.values.setflags(write=False)

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "PFunc":
        return cls(ctx, np.zeros(ctx.q, dtype=np.int64))

    @classmethod
    def trace_of(cls, ctx: FieldCtx, table) -> "PFunc":
        """x -> Tr(table[x]) for an element-valued table."""
        return cls(ctx, ctx.tr[np.asarray(table)])

    @classmethod
    def monomial_trace(cls, ctx: FieldCtx, a: int, e: int) -> "PFunc":
        """x -> Tr(a x^e)."""
        xs = ctx.elements()
        return cls.trace_of(ctx, ctx.mul(a, ctx.pow(xs, e)))

    @classmethod
    def linear(cls, ctx: FieldCtx, a: int) -> "PFunc":
        return cls.monomial_trace(ctx, a, 1)

    def _check(self, other: "PFunc") -> None:
        if other.ctx is not self.ctx:
            raise FieldError("functions live on different fields")

    def __add__(self, other):
        if isinstance(other, PFunc):
            self._check(other)
            return PFunc(self.ctx, self.values + other.values)
        if isinstance(other, (int, np.integer)):
            return PFunc(self.ctx, self.values + int(other))
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, PFunc):
            self._check(other)
            return PFunc(self.ctx, self.values - other.values)
        if isinstance(other, (int, np.integer)):
            return PFunc(self.ctx, self.values - int(other))
        return NotImplemented

    def __neg__(self):
        return PFunc(self.ctx, -self.values)

    def __mul__(self, other):
        if isinstance(other, PFunc):
            self._check(other)
            return PFunc(self.ctx, self.values * other.values)
        if isinstance(other, (int, np.integer)):
            return PFunc(self.ctx, self.values * int(other))
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, x):
        out = self.values[np.asarray(x)]
        return out if out.ndim else int(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PFunc):
            return NotImplemented
        return other.ctx is self.ctx and np.array_equal(self.values, other.values)

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.values.tobytes()))

    def shift(self, s: int) -> "PFunc":
        """x -> self(x + s)."""
        return PFunc(self.ctx, self.values[self.ctx.add(self.ctx.elements(), s)])

    def is_constant(self) -> bool:
        return bool(np.all(self.values == self.values[0]))

    def __repr__(self) -> str:
        return f"PFunc(F_{self.ctx.p}^{self.ctx.n}, {self.values[:8].tolist()}...)"


def _fold_exponent(e: int, p: int) -> int:
    # x^p = x on F_p, so exponents >= p wrap into 1..p-1
    if e < p:
        return e
    return (e - 1) % (p - 1) + 1


@dataclass(frozen=True)
class ReducedPoly:
    """Reduced polynomial over F_p in ``arity`` variables.

    ``terms`` maps exponent tuples (each entry < p) to nonzero coefficients.
    Variables are 0-based internally and printed as x1, x2, ...
    """

    p: int
    arity: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            e = tuple(int(x) for x in e)
            if len(e) != self.arity:
                raise ValueError(f"exponent {e} does not match arity {self.arity}")
            if any(x < 0 for x in e):
                raise ValueError("negative exponent")
            e = tuple(_fold_exponent(x, self.p) for x in e)
            clean[e] = (clean.get(e, 0) + int(c)) % self.p
        object.__setattr__(self, "terms", {e: c for e, c in sorted(clean.items()) if c})

    # -- constructors -------------------------------------------------------
    @classmethod
    def constant(cls, p: int, arity: int, c: int) -> "ReducedPoly":
        return cls(p, arity, {(0,) * arity: c})

    @classmethod
    def variable(cls, p: int, arity: int, i: int) -> "ReducedPoly":
        e = [0] * arity
        e[i] = 1
        return cls(p, arity, {tuple(e): 1})

    @classmethod
    def product(cls, p: int, arity: int) -> "ReducedPoly":
        """x1 * x2 * ... * x_arity."""
        return cls(p, arity, {(1,) * arity: 1})

    @classmethod
    def parse(cls, text: str, p: int, arity: int | None = None) -> "ReducedPoly":
        """Parse ``"x1*x2 + 2*x1*x3^2"``-style text."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls(p, arity or 1, {})
        s = s.replace("-", "+-")
        raw = []
        top = 0
        for term in s.split("+"):
            if not term:
                continue
            sign = -1 if term.startswith("-") else 1
            term = term.lstrip("-")
            coef = sign
            exps: dict[int, int] = {}
            for factor in term.split("*"):
                m = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor)
                if m:
                    i = int(m.group(1))
                    if i < 1:
                        raise ValueError("variables are numbered from x1")
                    exps[i] = exps.get(i, 0) + int(m.group(2) or 1)
                    top = max(top, i)
                elif re.fullmatch(r"\d+", factor):
                    coef *= int(factor)
                else:
                    raise ValueError(f"cannot parse monomial factor {factor!r}")
            raw.append((exps, coef))
        arity = arity or max(top, 1)
        if top > arity:
            raise ValueError(f"polynomial uses x{top} but arity is {arity}")
        terms: dict[tuple[int, ...], int] = {}
        for exps, coef in raw:
            e = [0] * arity
            for i, k in exps.items():
                e[i - 1] = k
            e = tuple(_fold_exponent(x, p) for x in e)
            terms[e] = terms.get(e, 0) + coef
        return cls(p, arity, terms)

    # -- algebra -------------------------------------------------------------
    def __add__(self, other: "ReducedPoly") -> "ReducedPoly":
        self._check(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return ReducedPoly(self.p, self.arity, t)

    def __neg__(self) -> "ReducedPoly":
        return ReducedPoly(self.p, self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "ReducedPoly") -> "ReducedPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ReducedPoly(self.p, self.arity, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        t: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(_fold_exponent(a + b, self.p) for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return ReducedPoly(self.p, self.arity, t)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ReducedPoly":
        out = ReducedPoly.constant(self.p, self.arity, 1)
        for _ in range(k):
            out = out * self
        return out

    def _check(self, other: "ReducedPoly") -> None:
        if not isinstance(other, ReducedPoly) or other.p != self.p or other.arity != self.arity:
            raise ValueError("polynomials over different rings")

    # -- queries ---------------------------------------------------------------
    @property
    def degree(self) -> int:
        return multivariate_degree(self)

    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> set[int]:
        return {i for e in self.terms for i, x in enumerate(e) if x}

    def degree_in(self, idx) -> int:
        """Total degree counting only the variables in ``idx``."""
        idx = list(idx)
        return max((sum(e[i] for i in idx) for e in self.terms), default=0)

    def coeff(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def evaluate(self, *args):
        return eval_reduced(self, args)

    def __call__(self, *args):
        return eval_reduced(self, args)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms.items():
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(f"x{i + 1}")
                elif k > 1:
                    factors.append(f"x{i + 1}^{k}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)


def eval_reduced(F: ReducedPoly, args):
    """Evaluate F at a point; each argument may be an F_p value or an array."""
    if len(args) != F.arity:
        raise ValueError(f"expected {F.arity} arguments, got {len(args)}")
    arrs = [np.asarray(a, dtype=np.int64) % F.p for a in args]
    shape = np.broadcast_shapes(*(a.shape for a in arrs)) if arrs else ()
    acc = np.zeros(shape, dtype=np.int64)
    for e, c in F.terms.items():
        term = np.full(shape, c, dtype=np.int64)
        for a, k in zip(arrs, e):
            if k:
                term = (term * a**k) % F.p
        acc = (acc + term) % F.p
    return acc if acc.ndim else int(acc)


def multivariate_degree(F: ReducedPoly) -> int:
    return max((sum(e) for e in F.terms), default=0)


@dataclass(frozen=True)
class TraceComposition:
    """f(x) = g(x) + F(Tr(u_1 x), ..., Tr(u_tau x))."""

    g: PFunc
    F: ReducedPoly
    points: tuple

    def __post_init__(self):
        pts = tuple(int(u) for u in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) != self.F.arity:
            raise ValueError(f"{len(pts)} points for a polynomial of arity {self.F.arity}")
        if any(u == 0 for u in pts):
            raise ValueError("points u_i must be nonzero")
        if self.F.p != self.g.ctx.p:
            raise ValueError("F and g have different characteristic")

    @property
    def ctx(self) -> FieldCtx:
        return self.g.ctx

    @property
    def tau(self) -> int:
        return len(self.points)


def trace_columns(ctx: FieldCtx, points) -> list[np.ndarray]:
    """[x -> Tr(u x) for u in points], each as an array over all x."""
    xs = ctx.elements()
    return [ctx.tr[ctx.mul(int(u), xs)] for u in points]


def compose(spec: TraceComposition) -> PFunc:
    cols = trace_columns(spec.ctx, spec.points)
    return PFunc(spec.ctx, spec.g.values + eval_reduced(spec.F, cols))


# -- univariate representation -------------------------------------------------

MAX_INTERPOLATION_ORDER = 2**13


def _digit_sums(p: int, q: int) -> np.ndarray:
    k = np.arange(q, dtype=np.int64)
    s = np.zeros(q, dtype=np.int64)
    while np.any(k):
        s += k % p
        k //= p
    return s


def _interp_coeffs(f: PFunc, ks: np.ndarray) -> np.ndarray:
    """Coefficients c_k (element indices) of the interpolating polynomial."""
    ctx = f.ctx
    q, p = ctx.q, ctx.p
    out = np.zeros(len(ks), dtype=np.int64)
    j = np.arange(q - 1, dtype=np.int64)
    fv = f.values[ctx.exp[j]]  # f(xi^j)
    total = int(f.values.sum()) % p
    for pos, k in enumerate(ks):
        k = int(k)
        if k == 0:
            out[pos] = f.values[0]
        elif k == q - 1:
            out[pos] = (-total) % p
        else:
            elems = ctx.exp[(-j * k) % (q - 1)]
            s = (ctx.digits[elems] * fv[:, None]).sum(axis=0) % p
            out[pos] = ((-s) % p) @ ctx.place
    return out


def interpolate(f: PFunc) -> dict[int, int]:
    """Univariate polynomial over F_{p^n} of degree < p^n agreeing with f.

    Values of f are read as prime-subfield elements.  Returns ``{k: c_k}``
    with nonzero coefficients only (coefficients as element indices).
    """
    q = f.ctx.q
    if q > MAX_INTERPOLATION_ORDER:
        raise ValueError(f"interpolation limited to fields of order <= {MAX_INTERPOLATION_ORDER}")
    ks = np.arange(q, dtype=np.int64)
    cs = _interp_coeffs(f, ks)
    return {int(k): int(c) for k, c in zip(ks, cs) if c}


def eval_univariate(ctx: FieldCtx, coeffs: dict[int, int], xs=None) -> np.ndarray:
    xs = ctx.elements() if xs is None else np.asarray(xs)
    acc = np.zeros(xs.shape, dtype=np.int64)
    for k, c in coeffs.items():
        acc = ctx.add(acc, ctx.mul(c, ctx.pow(xs, k)))
    return acc


def univariate_degree(f: PFunc) -> int:
    """Algebraic degree: largest p-ary digit sum of an exponent in use."""
    ctx = f.ctx
    if ctx.q > MAX_INTERPOLATION_ORDER:
        raise ValueError(f"interpolation limited to fields of order <= {MAX_INTERPOLATION_ORDER}")
    sums = _digit_sums(ctx.p, ctx.q)
    for level in range(int(sums.max()), 0, -1):
        ks = np.nonzero(sums == level)[0]
        if np.any(_interp_coeffs(f, ks)):
            return level
    return 0


def degree_of_composed(ctx: FieldCtx, F: ReducedPoly, points) -> int:
    """Degree of x -> F(Tr(u_1 x), ...) for F_p-independent u_i."""
    pts = [int(u) for u in points]
    if len(pts) > ctx.n or ctx.rank_of(pts) < len(pts):
        raise ValueError("points are linearly dependent over F_p")
    return multivariate_degree(F)


# -- textual function specs ------------------------------------------------------

def subfield_trace(ctx: FieldCtx, table, k: int) -> np.ndarray:
    """Tr_1^k of elements known to lie in F_{p^k}, as F_p values."""
    table = np.asarray(table)
    if ctx.n % k:
        raise FieldError(f"{k} does not divide {ctx.n}")
    if not np.all(ctx.in_subfield(table, k)):
        raise FieldError(f"values do not lie in the subfield F_{{{ctx.p}^{k}}}")
    acc = ctx.sum(np.stack([np.asarray(ctx.pow(table, ctx.p**i)) for i in range(k)]), axis=0)
    if np.any(acc >= ctx.p):  # pragma: no cover - trace lands in F_p
        raise FieldError("subfield trace left the prime field")
    return acc


def parse_function(text: str, ctx: FieldCtx) -> PFunc:
    """Build a PFunc from a CLI spec.

    Accepted forms (``;`` adds several together): ``zero``, ``lin:a``,
    ``quad:a`` (Tr(a x^2)), ``gold:a,k`` (Tr(a x^(p^k+1))), ``mono:a,e``
    (Tr(a x^e)), ``trK:xE`` / ``trK:A*xE`` (Tr_1^K(A x^E)), ``file:PATH``
    (one F_p digit per line).
    """
    total = PFunc.zero(ctx)
    for part in text.split(";"):
        total = total + _parse_one(part.strip(), ctx)
    return total


def _parse_one(text: str, ctx: FieldCtx) -> PFunc:
    if text in ("zero", "0"):
        return PFunc.zero(ctx)
    head, _, body = text.partition(":")
    if head == "file":
        return read_value_table(body, ctx)
    if head == "lin":
        return PFunc.linear(ctx, parse_elem(ctx, body))
    if head == "quad":
        return PFunc.monomial_trace(ctx, parse_elem(ctx, body), 2)
    if head == "gold":
        a, k = body.split(",")
        return PFunc.monomial_trace(ctx, parse_elem(ctx, a), ctx.p ** int(k) + 1)
    if head == "mono":
        a, e = body.split(",")
        return PFunc.monomial_trace(ctx, parse_elem(ctx, a), int(e))
    m = re.fullmatch(r"tr(\d+)", head)
    if m:
        k = int(m.group(1))
        mm = re.fullmatch(r"(?:(.+)\*)?x(\d+)", body.replace(" ", ""))
        if not mm:
            raise ValueError(f"cannot parse subfield-trace body {body!r}")
        a = parse_elem(ctx, mm.group(1)) if mm.group(1) else 1
        e = int(mm.group(2))
        xs = ctx.elements()
        return PFunc(ctx, subfield_trace(ctx, ctx.mul(a, ctx.pow(xs, e)), k))
    if Path(text).is_file():
        return read_value_table(text, ctx)
    raise ValueError(f"unknown function spec {text!r}")


def read_value_table(path: str, ctx: FieldCtx) -> PFunc:
    vals = [int(line) for line in Path(path).read_text().split()]
    if len(vals) != ctx.q:
        raise ValueError(f"{path}: expected {ctx.q} values, found {len(vals)}")
    if any(not 0 <= v < ctx.p for v in vals):
        raise ValueError(f"{path}: values must lie in 0..{ctx.p - 1}")
    return PFunc(ctx, vals)


def write_value_table(f: PFunc, path: str) -> None:
    Path(path).write_text("\n".join(str(int(v)) for v in f.values) + "\n")


def all_points(p: int, tau: int) -> np.ndarray:
    """Every t in F_p^tau in lexicographic order, shape (p^tau, tau)."""
    return np.array(list(itertools.product(range(p), repeat=tau)), dtype=np.int64).reshape(-1, tau)


def bent_degree_bound(p: int, n: int, weakly_regular: bool) -> int:
    """Upper bound on the algebraic degree of a bent function on F_{p^n}."""
    base = (p - 1) * n // 2
    return base if weakly_regular else base + 1
