"""Brute-force reference implementations that share no code with bentkit.

Field elements use the same index encoding (base-p digits of the polynomial
coordinates) so results can be compared entry by entry, but every product is
computed by schoolbook polynomial multiplication and reduction.
"""

from __future__ import annotations

import itertools


class SlowField:
    def __init__(self, p: int, n: int, modulus_msb: tuple[int, ...]):
        self.p, self.n, self.q = p, n, p**n
        # monic, most significant coefficient first
        self.mod = list(modulus_msb)

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.n):
            out.append(a % self.p)
            a //= self.p
        return out

    def index(self, d) -> int:
        return sum(int(c) * self.p**i for i, c in enumerate(d))

    def add(self, a: int, b: int) -> int:
        return self.index([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        return self.index([(-x) % self.p for x in self.digits(a)])

    def mul(self, a: int, b: int) -> int:
        p, n = self.p, self.n
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
        low = self.mod[::-1]  # low[i] = coefficient of X^i, low[n] = 1
        for deg in range(2 * n - 2, n - 1, -1):
            c = prod[deg]
            if c:
                for i in range(n + 1):
                    prod[deg - n + i] = (prod[deg - n + i] - c * low[i]) % p
        return self.index(prod[:n])

    def pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def trace(self, a: int) -> int:
        acc, x = 0, a
        for _ in range(self.n):
            acc = self.add(acc, x)
            x = self.pow(x, self.p)
        assert acc < self.p, "trace must land in the prime field"
        return acc

    def order(self, a: int) -> int:
        x, k = a, 1
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k


def poly_is_irreducible(mod_msb, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..n//2."""
    n = len(mod_msb) - 1

    def rem(a, b):
        a = list(a)
        while len(a) >= len(b):
            c = a[0] * pow(b[0], -1, p) % p
            for i in range(len(b)):
                a[i] = (a[i] - c * b[i]) % p
            a.pop(0)
        return a

    for d in range(1, n // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not any(rem(mod_msb, [1, *tail])):
                return False
    return True


def walsh_row(field: SlowField, values, b: int) -> list[int]:
    p = field.p
    counts = [0] * p
    for x in range(field.q):
        j = (values[x] - field.trace(field.mul(b, x))) % p
        counts[j] += 1
    return [c - counts[-1] for c in counts]


def walsh_table(field: SlowField, values) -> list[list[int]]:
    return [walsh_row(field, values, b) for b in range(field.q)]


def char_sum(p: int, poly) -> list[int]:
    """Sum over x in F_p of w^poly(x), as a canonical coefficient vector."""
    counts = [0] * p
    for x in range(p):
        counts[poly(x) % p] += 1
    return [c - counts[-1] for c in counts]


def char_sum2(p: int, poly) -> list[int]:
    counts = [0] * p
    for x in range(p):
        for y in range(p):
            counts[poly(x, y) % p] += 1
    return [c - counts[-1] for c in counts]
