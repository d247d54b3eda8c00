"""Table-driven arithmetic in F_{p^n} for desk-scale fields.

Elements are encoded by the base-p digits of their polynomial coordinates:
``index = c_0 + c_1 p + ... + c_{n-1} p^{n-1}`` where ``c_i`` is the
coefficient of ``X^i`` modulo the defining polynomial.  Index 0 is zero,
index 1 is one, and the prime subfield occupies indices ``0 .. p-1``.

Every arithmetic method on :class:`FieldCtx` accepts plain integers or
integer numpy arrays, so whole value tables can be built without Python
loops.  :class:`FieldElem` wraps a single index for readable user code.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import linalg
from .conway import CONWAY

MAX_ORDER = 2**20


class FieldError(ValueError):
    pass


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    return all(m % d for d in range(2, int(m**0.5) + 1))


def _prime_factors(m: int) -> list[int]:
    out, d = [], 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def _poly_rem(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a by monic b; both low-to-high coefficient lists."""
    a = list(a)
    db = len(b) - 1
    for d in range(len(a) - 1, db - 1, -1):
        c = a[d]
        if c:
            for i in range(db + 1):
                a[d - db + i] = (a[d - db + i] - c * b[i]) % p
    return a[:db]


def is_irreducible(modulus_msb: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= n/2."""
    f = list(reversed(modulus_msb))
    n = len(f) - 1
    if n == 1:
        return True
    if f[0] == 0:
        return False
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            g = list(low) + [1]
            if not any(_poly_rem(f, g, p)):
                return False
    return True


def smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    for tail in itertools.product(range(p), repeat=n):
        cand = (1,) + tail
        if tail[-1] and is_irreducible(cand, p):
            return cand
    raise FieldError(f"no irreducible polynomial of degree {n} over F_{p}")  # pragma: no cover


class FieldCtx:
    """Arithmetic context for F_{p^n}; immutable after construction."""

    def __init__(self, p: int, n: int, modulus: tuple[int, ...], primitive: int | None = None,
                 source: str = "explicit"):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if n < 1:
            raise FieldError("extension degree must be positive")
        if p**n > MAX_ORDER:
            raise FieldError(f"{p}^{n} exceeds the size bound {MAX_ORDER}")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != n + 1 or modulus[0] != 1:
            raise FieldError("modulus must be monic of degree n (most-significant first)")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over F_{p}")

        self.p, self.n, self.q = p, n, p**n
        self.modulus = modulus
        self.source = source
        q = self.q
        self.place = p ** np.arange(n, dtype=np.int64)
        idx = np.arange(q, dtype=np.int64)
        self.digits = (idx[:, None] // self.place[None, :]) % p

        # multiplication by the residue of X, tabulated for all elements
        low = np.array(list(reversed(modulus))[:n], dtype=np.int64)
        top = self.digits[:, n - 1]
        shifted = np.zeros_like(self.digits)
        shifted[:, 1:] = self.digits[:, :-1]
        shifted = (shifted - top[:, None] * low[None, :]) % p
        self._times_x = shifted @ self.place

        if primitive is None:
            x_res = int(self._times_x[1])
            order_x = self._order_via_table(self._times_x, x_res)
            if order_x == q - 1:
                primitive = x_res
            else:
                primitive = self._smallest_generator()
        self.primitive = int(primitive)
        exp = self._powers(self._mul_table(self.primitive))
        if exp is None:
            raise FieldError(f"element {primitive} does not generate F_{{{p}^{n}}}^*")
        self.exp = np.concatenate([exp, exp])
        self.log = np.full(q, -1, dtype=np.int64)
        self.log[exp] = np.arange(q - 1, dtype=np.int64)

        # absolute trace is F_p-linear: tabulate on the polynomial basis
        basis_tr = np.array([self._trace_scalar(int(b), 1) for b in self.place], dtype=np.int64)
        self.tr = (self.digits @ basis_tr) % p

    # -- construction helpers --------------------------------------------
    def _mul_table(self, g: int) -> np.ndarray:
        """Table of b -> b*g for every b."""
        g_dig = self.digits[g]
        acc = np.zeros((self.q, self.n), dtype=np.int64)
        cur = np.arange(self.q, dtype=np.int64)
        for i in range(self.n):
            if g_dig[i]:
                acc += g_dig[i] * self.digits[cur]
            cur = self._times_x[cur]
        return (acc % self.p) @ self.place

    def _powers(self, table: np.ndarray) -> np.ndarray | None:
        q = self.q
        out = np.empty(q - 1, dtype=np.int64)
        cur = 1
        for k in range(q - 1):
            if k and cur == 1:
                return None
            out[k] = cur
            cur = int(table[cur])
        return out if cur == 1 else None

    def _order_via_table(self, table: np.ndarray, start: int) -> int:
        cur, k = start, 1
        while cur != 1:
            cur = int(table[cur])
            k += 1
            if k > self.q:
                return 0
        return k

    def _smallest_generator(self) -> int:
        for g in range(1, self.q):
            if self._powers(self._mul_table(g)) is not None:
                return g
        raise FieldError("multiplicative group has no generator")  # pragma: no cover

    def _trace_scalar(self, x: int, k: int) -> int:
        # only used while building, before self.tr exists; exp/log are ready
        acc = np.zeros(self.n, dtype=np.int64)
        y = x
        for _ in range(self.n // k):
            acc += self.digits[y]
            y = int(self.pow(y, self.p**k))
        return int((acc % self.p) @ self.place)

    # -- identity ---------------------------------------------------------
    @property
    def spec(self) -> str:
        return f"{self.p}^{self.n}/" + ",".join(map(str, self.modulus))

    def describe(self) -> dict:
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus),
                "modulus_source": self.source, "primitive_index": self.primitive}

    def __repr__(self) -> str:
        return f"FieldCtx(F_{self.p}^{self.n}, modulus={self.modulus}, primitive={self.primitive})"

    # -- elementwise arithmetic on indices --------------------------------
    def add(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return ((self.digits[a] + self.digits[b]) % self.p) @ self.place

    def neg(self, a):
        if self.p == 2:
            return a
        return ((-self.digits[a]) % self.p) @ self.place

    def sub(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return ((self.digits[a] - self.digits[b]) % self.p) @ self.place

    def smul(self, c, a):
        """Scale element(s) ``a`` by prime-field value(s) ``c``."""
        c = np.asarray(c) % self.p
        return ((self.digits[a] * c[..., None]) % self.p) @ self.place

    def mul(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        la, lb = self.log[a], self.log[b]
        out = self.exp[(la + lb) % (self.q - 1)]
        out = np.where((la < 0) | (lb < 0), 0, out)
        return out if out.ndim else int(out)

    def inv(self, a):
        a = np.asarray(a)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in a finite field")
        out = self.exp[(-self.log[a]) % (self.q - 1)]
        return out if out.ndim else int(out)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        a = np.asarray(a)
        la = self.log[a]
        if e == 0:
            out = np.ones_like(a)
        else:
            if e < 0 and np.any(a == 0):
                raise ZeroDivisionError("negative power of zero")
            out = np.where(la < 0, 0, self.exp[(la * (e % (self.q - 1))) % (self.q - 1)])
        return out if out.ndim else int(out)

    def frob(self, a, k: int = 1):
        """a^(p^k)."""
        return self.pow(a, self.p ** (k % self.n))

    def xi(self, k: int) -> int:
        """Index of primitive^k."""
        return int(self.exp[k % (self.q - 1)])

    def sum(self, a, axis=None):
        """Field sum of an index array along ``axis``."""
        d = self.digits[np.asarray(a)]
        if axis is None:
            d = d.reshape(-1, self.n)
            axis = 0
        elif axis < 0:
            axis -= 1
        s = d.sum(axis=axis) % self.p
        out = s @ self.place
        return out if np.ndim(out) else int(out)

    # -- traces and subfields ---------------------------------------------
    def trace(self, a):
        """Absolute trace Tr_1^n, as an F_p value (== its element index)."""
        out = self.tr[a]
        return out if np.ndim(out) else int(out)

    def trace_k(self, a, k: int):
        """Relative trace Tr_k^n(a) = sum_i a^(p^(ik)); an element of F_{p^k}."""
        if k < 1 or self.n % k:
            raise FieldError(f"{k} does not divide {self.n}")
        terms = [self.pow(a, self.p ** (i * k)) for i in range(self.n // k)]
        return self.sum(np.stack([np.asarray(t) for t in terms]), axis=0)

    def in_subfield(self, a, k: int):
        return np.asarray(self.pow(a, self.p**k)) == np.asarray(a)

    @lru_cache(maxsize=None)
    def subfield(self, k: int) -> tuple["FieldCtx", int]:
        """Standalone F_{p^k} and the index of its primitive inside this field.

        The small field is defined by the minimal polynomial of
        ``xi^((q-1)/(p^k-1))`` so that the embedding is a field isomorphism
        (for Conway moduli this is the Conway polynomial of degree k).
        """
        if self.n % k:
            raise FieldError(f"{k} does not divide {self.n}")
        zeta = self.xi((self.q - 1) // (self.p**k - 1))
        # prod_{i<k} (X - zeta^(p^i)), coefficients low-to-high as indices
        poly = [1]
        for i in range(k):
            root = self.neg(self.pow(zeta, self.p**i))
            nxt = [0] * (len(poly) + 1)
            for j, c in enumerate(poly):
                nxt[j + 1] = int(self.add(nxt[j + 1], c))
                nxt[j] = int(self.add(nxt[j], self.mul(c, root)))
            poly = nxt
        if any(c >= self.p for c in poly):
            raise FieldError("minimal polynomial left the prime field")  # pragma: no cover
        modulus = tuple(reversed(poly))
        sub = build_field(self.p, k, modulus)
        if sub.primitive != sub._times_x[1]:  # pragma: no cover - minimal poly of a generator is primitive
            raise FieldError("subfield generator mismatch")
        return sub, zeta

    def to_subfield(self, a, k: int):
        """Map subfield element(s) of this field to indices in ``subfield(k)``."""
        sub, _ = self.subfield(k)
        a = np.asarray(a)
        if not np.all(self.in_subfield(a, k)):
            raise FieldError(f"element not in the subfield F_{{{self.p}^{k}}}")
        step = (self.q - 1) // (self.p**k - 1)
        la = self.log[a]
        out = np.where(la < 0, 0, sub.exp[(la // step) % (sub.q - 1)])
        return out if out.ndim else int(out)

    # -- linear-algebra views ---------------------------------------------
    def coords(self, a) -> np.ndarray:
        return self.digits[a]

    def from_coords(self, v) -> int:
        return int((np.asarray(v) % self.p) @ self.place)

    def linear_map_matrix(self, fn) -> np.ndarray:
        """Matrix (columns = images of X^i) of an F_p-linear map on indices."""
        cols = [self.digits[int(fn(int(b)))] for b in self.place]
        return np.stack(cols, axis=1)

    def rank_of(self, elems) -> int:
        rows = np.array([self.digits[int(e)] for e in elems], dtype=np.int64).reshape(-1, self.n)
        return linalg.rank(rows, self.p)

    # -- convenience ------------------------------------------------------
    def elem(self, index) -> "FieldElem":
        return FieldElem(self, int(index))

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    def parse_elem(self, text: str) -> int:
        return parse_elem(self, text)

    def format_elem(self, a: int) -> str:
        a = int(a)
        if a < self.p:
            return str(a)
        return f"xi^{int(self.log[a])}"


@dataclass(frozen=True, eq=False)
class FieldElem:
    ctx: FieldCtx
    index: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.ctx is not self.ctx:
                raise FieldError("elements belong to different fields")
            return other.index
        if isinstance(other, (int, np.integer)):
            return int(other) % self.ctx.p
        return NotImplemented

    def _wrap(self, idx) -> "FieldElem":
        return FieldElem(self.ctx, int(idx))

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ctx.add(self.index, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ctx.sub(self.index, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ctx.sub(o, self.index))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ctx.mul(self.index, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ctx.div(self.index, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ctx.div(o, self.index))

    def __neg__(self):
        return self._wrap(self.ctx.neg(self.index))

    def __pow__(self, e: int):
        return self._wrap(self.ctx.pow(self.index, e))

    def inv(self) -> "FieldElem":
        return self._wrap(self.ctx.inv(self.index))

    def trace(self, k: int = 1) -> "FieldElem":
        return self._wrap(self.ctx.trace_k(self.index, k))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElem):
            return other.ctx is self.ctx and other.index == self.index
        if isinstance(other, (int, np.integer)):
            return self.index == int(other) % self.ctx.p and self.index < self.ctx.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.index))

    def __bool__(self) -> bool:
        return self.index != 0

    def __int__(self) -> int:
        return self.index

    def __index__(self) -> int:
        return self.index

    def __repr__(self) -> str:
        return self.ctx.format_elem(self.index)


def build_field(p: int, n: int, modulus: tuple[int, ...] | None = None,
                primitive: int | None = None) -> FieldCtx:
    """Build (and memoise) F_{p^n}.

    The default modulus is the Conway polynomial when bundled, otherwise the
    lexicographically smallest monic irreducible of degree n.
    """
    if modulus is not None:
        modulus = tuple(int(c) for c in modulus)
    return _build_field(int(p), int(n), modulus, primitive)


@lru_cache(maxsize=64)
def _build_field(p: int, n: int, modulus: tuple[int, ...] | None, primitive: int | None) -> FieldCtx:
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if n < 1:
        raise FieldError("extension degree must be positive")
    if p**n > MAX_ORDER:
        raise FieldError(f"{p}^{n} exceeds the size bound {MAX_ORDER}")
    if modulus is None:
        if (p, n) in CONWAY:
            return FieldCtx(p, n, CONWAY[(p, n)], primitive, source="conway")
        return FieldCtx(p, n, smallest_irreducible(p, n), primitive, source="smallest-irreducible")
    modulus = tuple(int(c) % p for c in modulus)
    source = "conway" if CONWAY.get((p, n)) == modulus else "explicit"
    return FieldCtx(p, n, modulus, primitive, source=source)


_FIELD_RE = re.compile(r"^\s*(\d+)\s*\^\s*(\d+)\s*(?:/\s*([\d,\s]+))?\s*$")


def parse_field_spec(text: str, generator: int | None = None) -> FieldCtx:
    """Parse ``"p^n"`` or ``"p^n/c_n,...,c_0"`` (coefficients most-significant first)."""
    m = _FIELD_RE.match(text)
    if not m:
        raise FieldError(f"cannot parse field spec {text!r}")
    p, n = int(m.group(1)), int(m.group(2))
    modulus = None
    if m.group(3):
        modulus = tuple(int(c) for c in m.group(3).replace(" ", "").split(",") if c)
    return build_field(p, n, modulus, generator)


_TERM_RE = re.compile(r"^(?:(\d+)\*)?(?:(xi|w|g)(?:\^(-?\d+))?|#(\d+)|(\d+))$")


def parse_elem(ctx: FieldCtx, text: str) -> int:
    """Parse an element expression such as ``xi^53``, ``2*xi^7+1`` or ``#17``."""
    s = text.replace(" ", "")
    if not s:
        raise FieldError("empty element expression")
    s = s.replace("-", "+-")
    acc = 0
    for term in s.split("+"):
        if not term:
            continue
        negate = term.startswith("-")
        term = term.lstrip("-")
        m = _TERM_RE.match(term)
        if not m:
            raise FieldError(f"cannot parse element term {term!r}")
        coef, gen, e, raw, const = m.groups()
        if gen:
            val = ctx.xi(int(e) if e is not None else 1)
        elif raw is not None:
            val = int(raw)
            if val >= ctx.q:
                raise FieldError(f"index {val} out of range")
        else:
            val = int(const) % ctx.p
        if coef:
            val = int(ctx.smul(int(coef), val))
        if negate:
            val = int(ctx.neg(val))
        acc = int(ctx.add(acc, val))
    return acc


# -- linearized equations ---------------------------------------------------

def linearized_matrix(ctx: FieldCtx, a: int, k: int) -> np.ndarray:
    """Matrix of x -> a^(p^k) x^(p^(2k)) + a x over F_p."""
    ak = ctx.frob(a, k)

    def L(x):
        return ctx.add(ctx.mul(ak, ctx.frob(x, 2 * k)), ctx.mul(a, x))

    return ctx.linear_map_matrix(L)


def solve_linearized(ctx: FieldCtx, a: int, k: int, rhs: int) -> list[int]:
    """All x with a^(p^k) x^(p^(2k)) + a x = rhs, as sorted element indices."""
    if int(a) == 0:
        raise FieldError("leading coefficient a must be nonzero")
    M = linearized_matrix(ctx, int(a), k)
    x0, kernel = linalg.solve(M, ctx.digits[int(rhs)], ctx.p)
    if x0 is None:
        return []
    sols = set()
    for coeffs in itertools.product(range(ctx.p), repeat=len(kernel)):
        v = x0.copy()
        for c, b in zip(coeffs, kernel):
            v = v + c * b
        sols.add(ctx.from_coords(v))
    return sorted(sols)


def linearized_root(ctx: FieldCtx, a: int, k: int) -> int | None:
    """Smallest-index nonzero c with a^(p^k) c^(p^(2k)) + a c = 0, or None."""
    roots = [c for c in solve_linearized(ctx, a, k, 0) if c]
    return roots[0] if roots else None
