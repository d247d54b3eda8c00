"""Dense linear algebra over the prime field F_p (small matrices only)."""

from __future__ import annotations

import numpy as np


def rref(M, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``M`` over F_p and its pivot columns."""
    A = np.array(M, dtype=np.int64) % p
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] = (A[i] - A[i, c] * A[r]) % p
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M, p: int) -> int:
    if np.size(M) == 0:
        return 0
    return len(rref(M, p)[1])


def nullspace(M, p: int) -> list[np.ndarray]:
    """Basis of {x : M x = 0} over F_p."""
    A, pivots = rref(M, p)
    cols = A.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(cols, dtype=np.int64)
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = (-A[r, f]) % p
        basis.append(v)
    return basis


def solve(M, y, p: int) -> tuple[np.ndarray | None, list[np.ndarray]]:
    """Solve ``M x = y`` over F_p.

    Returns ``(particular, kernel_basis)``; ``particular`` is None when the
    system is inconsistent.
    """
    M = np.array(M, dtype=np.int64) % p
    y = np.array(y, dtype=np.int64).reshape(-1, 1) % p
    aug = np.hstack([M, y])
    A, pivots = rref(aug, p)
    cols = M.shape[1]
    if cols in pivots:
        return None, nullspace(M, p)
    x = np.zeros(cols, dtype=np.int64)
    for r, c in enumerate(pivots):
        x[c] = A[r, cols]
    return x, nullspace(M, p)
