"""Exact arithmetic in Z[w], w a primitive p-th root of unity.

Elements are dense length-p integer vectors ``(c_0, ..., c_{p-1})`` meaning
``sum c_j w^j``.  The canonical form has ``c_{p-1} = 0`` (subtract the last
coordinate from all of them, using ``1 + w + ... + w^{p-1} = 0``); two
elements are equal iff their canonical vectors agree.

Besides the scalar :class:`CycInt`, a few helpers operate on stacks of
elements stored as integer arrays of shape ``(..., p)``; the Walsh code uses
those for whole spectra.
"""

from __future__ import annotations

import cmath
from functools import lru_cache

import numpy as np


class CycInt:
    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs):
        c = [int(x) for x in coeffs]
        if len(c) < p:
            c = c + [0] * (p - len(c))
        elif len(c) > p:
            # fold higher powers of w back (w^p = 1)
            folded = [0] * p
            for j, x in enumerate(c):
                folded[j % p] += x
            c = folded
        last = c[-1]
        self.p = p
        self.coeffs = tuple(x - last for x in c)

    # -- constructors -------------------------------------------------------
    @classmethod
    def from_int(cls, p: int, m: int) -> "CycInt":
        return cls(p, [m])

    @classmethod
    def omega(cls, p: int, j: int = 1) -> "CycInt":
        c = [0] * p
        c[j % p] = 1
        return cls(p, c)

    # -- ring operations ----------------------------------------------------
    def _coerce(self, other) -> "CycInt":
        if isinstance(other, CycInt):
            if other.p != self.p:
                raise ValueError(f"mixing Z[w] for p={self.p} and p={other.p}")
            return other
        if isinstance(other, (int, np.integer)):
            return CycInt.from_int(self.p, int(other))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycInt(self.p, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.p, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycInt(self.p, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = self.p
        out = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        out[(i + j) % p] += a * b
        return CycInt(p, out)

    __rmul__ = __mul__

    def scale(self, m: int) -> "CycInt":
        return CycInt(self.p, [m * a for a in self.coeffs])

    def times_omega(self, j: int) -> "CycInt":
        """Multiply by w^j (a cyclic shift of the coefficients)."""
        p = self.p
        j %= p
        return CycInt(p, self.coeffs[-j:] + self.coeffs[:-j] if j else self.coeffs)

    def __pow__(self, e: int) -> "CycInt":
        if e < 0:
            raise ValueError("negative powers are not ring elements")
        out = CycInt.from_int(self.p, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def exact_div(self, m: int) -> "CycInt":
        """Divide by a rational integer; raises if the quotient is not in Z[w]."""
        if any(a % m for a in self.coeffs):
            raise ArithmeticError(f"{self} is not divisible by {m}")
        return CycInt(self.p, [a // m for a in self.coeffs])

    def conj(self) -> "CycInt":
        p = self.p
        return CycInt(p, [self.coeffs[(p - j) % p] for j in range(p)])

    def norm_sq(self):
        """z * conj(z): a Python int when rational, else the CycInt itself."""
        z = self * self.conj()
        return z.as_int() if z.is_integer() else z

    # -- inspection -----------------------------------------------------------
    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def as_int(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, np.integer)):
            return self.is_integer() and self.coeffs[0] == other
        if isinstance(other, CycInt):
            return self.p == other.p and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def to_complex(self) -> complex:
        """Floating-point value, for display only."""
        w = cmath.exp(2j * cmath.pi / self.p)
        return sum(c * w**j for j, c in enumerate(self.coeffs))

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
            elif j == 1:
                terms.append(f"{c}·w")
            else:
                terms.append(f"{c}·w^{j}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} (p={self.p})"

    def __repr__(self) -> str:
        return f"CycInt({self.p}, {list(self.coeffs)})"


def eta(p: int, x: int) -> int:
    """Quadratic character of F_p (0 at 0)."""
    x %= p
    if x == 0:
        return 0
    if p == 2:
        return 1
    return 1 if pow(x, (p - 1) // 2, p) == 1 else -1


class QuadChar:
    """Tabulated quadratic character of F_p, p odd."""

    def __init__(self, p: int):
        if p == 2:
            raise ValueError("quadratic character needs an odd prime")
        self.p = p
        self.table = np.array([eta(p, x) for x in range(p)], dtype=np.int64)

    def __call__(self, x):
        out = self.table[np.asarray(x) % self.p]
        return out if out.ndim else int(out)


@lru_cache(maxsize=None)
def gauss_sum(p: int) -> CycInt:
    """G = sum_{x in F_p} w^(x^2); G^2 = eta(-1) p."""
    if p == 2:
        raise ValueError("Gauss sum is defined here for odd p only")
    c = [0] * p
    for x in range(p):
        c[x * x % p] += 1
    return CycInt(p, c)


def sqrt_p_power(p: int, n: int) -> CycInt:
    """Exact stand-in for p^(n/2): p^(n/2) for even n, p^((n-1)/2) * G for odd n."""
    if n % 2 == 0:
        return CycInt.from_int(p, p ** (n // 2))
    if p == 2:
        raise ValueError("2^(n/2) with n odd is irrational and not used")
    return gauss_sum(p).scale(p ** ((n - 1) // 2))


# -- stacks of elements: integer arrays of shape (..., p) -----------------

def canonical(arr: np.ndarray) -> np.ndarray:
    return arr - arr[..., -1:]


def roll(arr: np.ndarray, shift) -> np.ndarray:
    """Multiply each element by w^shift; ``shift`` may be per-row."""
    p = arr.shape[-1]
    shift = np.asarray(shift)
    if shift.ndim == 0:
        return np.roll(arr, int(shift) % p, axis=-1)
    cols = (np.arange(p)[None, :] - shift.reshape(-1, 1)) % p
    flat = arr.reshape(-1, p)
    rows = np.arange(flat.shape[0])[:, None]
    return flat[rows, cols].reshape(arr.shape)


def mul_scalar(arr: np.ndarray, z: CycInt) -> np.ndarray:
    """Multiply every element of the stack by one CycInt."""
    out = np.zeros_like(arr)
    for j, c in enumerate(z.coeffs):
        if c:
            out = out + c * np.roll(arr, j, axis=-1)
    return out


def to_cycints(arr: np.ndarray) -> list[CycInt]:
    p = arr.shape[-1]
    return [CycInt(p, row) for row in arr.reshape(-1, p)]


def from_cycints(values, p: int) -> np.ndarray:
    return np.array([v.coeffs for v in values], dtype=np.int64).reshape(-1, p)


def norm_sq_rows(arr: np.ndarray) -> np.ndarray:
    """Row-wise z*conj(z) as canonical coefficient arrays, shape (m, p)."""
    p = arr.shape[-1]
    flat = arr.reshape(-1, p).astype(object) if np.abs(arr).max(initial=0) > 2**30 else arr.reshape(-1, p)
    conj = flat[:, (-np.arange(p)) % p]
    out = np.zeros_like(flat)
    for j in range(p):
        out = out + flat[:, j:j + 1] * np.roll(conj, j, axis=1)
    return canonical(out)
