"""Exact linear algebra over the rationals.

Matrices are numpy arrays of dtype object holding ``Fraction`` entries, so
shapes survive zero-dimensional edge cases. A matrix of shape (t, s) maps a
space of dimension s to one of dimension t.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

ZERO = Fraction(0)
ONE = Fraction(1)


def fmat(rows) -> np.ndarray:
    """Build a Fraction matrix from nested sequences (ints, strings, Fractions)."""
    arr = np.array([[Fraction(x) for x in row] for row in rows], dtype=object)
    if arr.ndim == 1:  # empty row list
        arr = arr.reshape((0, 0))
    return arr


def zeros(t: int, s: int) -> np.ndarray:
    arr = np.empty((t, s), dtype=object)
    arr[:] = ZERO
    return arr


def eye(n: int) -> np.ndarray:
    arr = zeros(n, n)
    for i in range(n):
        arr[i, i] = ONE
    return arr


def mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    t, k = a.shape
    k2, s = b.shape
    if k != k2:
        raise ValueError(f"shape mismatch: {a.shape} @ {b.shape}")
    if t == 0 or s == 0 or k == 0:
        return zeros(t, s)
    return a @ b


def hcat(mats, rows: int) -> np.ndarray:
    mats = [m for m in mats if m.shape[1] > 0]
    if not mats:
        return zeros(rows, 0)
    return np.hstack(mats)


def vcat(mats, cols: int) -> np.ndarray:
    mats = [m for m in mats if m.shape[0] > 0]
    if not mats:
        return zeros(0, cols)
    return np.vstack(mats)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ra, ca = a.shape
    rb, cb = b.shape
    out = zeros(ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            if a[i, j] != 0:
                out[i * rb : (i + 1) * rb, j * cb : (j + 1) * cb] = a[i, j] * b
    return out


def block_diag(mats) -> np.ndarray:
    rows = sum(m.shape[0] for m in mats)
    cols = sum(m.shape[1] for m in mats)
    out = zeros(rows, cols)
    r = c = 0
    for m in mats:
        out[r : r + m.shape[0], c : c + m.shape[1]] = m
        r += m.shape[0]
        c += m.shape[1]
    return out


def rref(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns (R, pivot column indices)."""
    m = a.copy()
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if m[i, c] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            m[[r, pivot_row]] = m[[pivot_row, r]]
        m[r] = m[r] / m[r, c]
        for i in range(rows):
            if i != r and m[i, c] != 0:
                m[i] = m[i] - m[i, c] * m[r]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: np.ndarray) -> int:
    return len(rref(a)[1])


def nullspace(a: np.ndarray) -> np.ndarray:
    """Columns spanning ker(a); shape (a.shape[1], nullity)."""
    rows, cols = a.shape
    r, pivots = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = zeros(cols, len(free))
    for j, fc in enumerate(free):
        basis[fc, j] = ONE
        for i, pc in enumerate(pivots):
            basis[pc, j] = -r[i, fc]
    return basis


def column_space(a: np.ndarray) -> np.ndarray:
    """The pivot columns of a, a basis of its column space."""
    _, pivots = rref(a)
    return a[:, pivots] if pivots else zeros(a.shape[0], 0)


def solve(a: np.ndarray, b: np.ndarray):
    """Some X with a @ X = b, or None if the system is inconsistent."""
    rows, cols = a.shape
    if b.shape[0] != rows:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    width = b.shape[1]
    aug = hcat([a, b], rows)
    r, pivots = rref(aug)
    if any(p >= cols for p in pivots):
        return None
    x = zeros(cols, width)
    for i, pc in enumerate(pivots):
        x[pc] = r[i, cols:]
    return x


def extend_basis(cols: np.ndarray) -> list[int]:
    """Indices of unit vectors completing the column span to the full space."""
    dim = cols.shape[0]
    picked: list[int] = []
    current = cols
    current_rank = rank(current)
    for i in range(dim):
        if current_rank == dim:
            break
        unit = zeros(dim, 1)
        unit[i, 0] = ONE
        candidate = hcat([current, unit], dim)
        cand_rank = rank(candidate)
        if cand_rank > current_rank:
            picked.append(i)
            current = candidate
            current_rank = cand_rank
    return picked


def is_zero(a: np.ndarray) -> bool:
    return all(x == 0 for x in a.flat)


def mat_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def mat_to_json(a: np.ndarray) -> list[list[str]]:
    return [[str(x) for x in row] for row in a]
