"""Brute-force reference path: dense exact inversion and geometric kernel integrals.

Nothing here uses the closed-form inverse or the phi-weighted norm formula; the two
routes only meet at the inverse entries.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .splines import KnotSequence, gram_matrix


class SingularMatrixError(ArithmeticError):
    pass


@dataclass(frozen=True)
class DenseMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "DenseMatrix":
        m = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if any(len(r) != len(m) for r in m):
            raise ValueError("matrix must be square")
        return cls(m)

    @classmethod
    def identity(cls, n: int) -> "DenseMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, idx):
        return self.entries[idx]

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        n = self.dim
        cols = list(zip(*other.entries))
        return DenseMatrix(tuple(
            tuple(sum((a * b for a, b in zip(self.entries[i], cols[j])), Fraction(0))
                  for j in range(n))
            for i in range(n)
        ))

    def is_symmetric(self) -> bool:
        n = self.dim
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(i))


def dense_inverse(m: DenseMatrix) -> DenseMatrix:
    """Exact inverse by fraction-free (Bareiss) elimination on the integer-scaled matrix."""
    n = m.dim
    scale = math.lcm(*(x.denominator for row in m.entries for x in row))
    # augmented integer matrix [scale*m | I]
    a = [[int(x * scale) for x in row] + [int(i == j) for j in range(n)]
         for i, row in enumerate(m.entries)]
    width = 2 * n
    prev = 1
    for k in range(n):
        p = next((r for r in range(k, n) if a[r][k] != 0), None)
        if p is None:
            raise SingularMatrixError("matrix is singular")
        if p != k:
            a[k], a[p] = a[p], a[k]
        pivot = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            f = ri[k]
            for c in range(k + 1, width):
                # exact by Sylvester's identity
                ri[c] = (ri[c] * pivot - f * rk[c]) // prev
            ri[k] = 0
        prev = pivot
    # back substitution on the upper triangle, one right-hand column at a time
    inv = [[Fraction(0)] * n for _ in range(n)]
    for col in range(n):
        x = [Fraction(0)] * n
        for i in range(n - 1, -1, -1):
            s = Fraction(a[i][n + col])
            for c in range(i + 1, n):
                if a[i][c]:
                    s -= a[i][c] * x[c]
            x[i] = s / a[i][i]
        for i in range(n):
            inv[i][col] = x[i] * scale
    return DenseMatrix(tuple(tuple(r) for r in inv))


def gram_dense(ks: KnotSequence) -> DenseMatrix:
    return DenseMatrix.from_rows(gram_matrix(ks).dense())


def abs_kernel_integral(j: int, inv: DenseMatrix, ks: KnotSequence) -> Fraction:
    """Integral of |k(t_j, t)| over the circle by splitting each interval at its root."""
    N = ks.N
    row = inv[j]
    total = Fraction(0)
    for k, d in enumerate(ks.gaps):
        a, b = row[k], row[(k + 1) % N]
        if a * b >= 0:
            total += d * (abs(a) + abs(b)) / 2
        else:
            root = d * abs(a) / (abs(a) + abs(b))
            total += root * abs(a) / 2 + (d - root) * abs(b) / 2
    return total


def kernel_integral(j: int, inv: DenseMatrix, ks: KnotSequence) -> Fraction:
    """Signed integral of k(t_j, .); equals 1 because constants are reproduced."""
    N = ks.N
    row = inv[j]
    return sum((d * (row[k] + row[(k + 1) % N]) / 2 for k, d in enumerate(ks.gaps)), Fraction(0))


def float_quadrature_check(j: int, inv: DenseMatrix, ks: KnotSequence, grid: int = 10**6) -> float:
    """Composite midpoint rule for the same integral in double precision."""
    if grid < 1000:
        raise ValueError("grid must be at least 1000")
    xp = np.array([float(t) for t in ks.knots] + [1.0])
    row = inv[j]
    fp = np.array([float(x) for x in row] + [float(row[0])])
    t = (np.arange(grid) + 0.5) / grid
    return float(np.abs(np.interp(t, xp, fp)).mean())


def oracle_norm(ks: KnotSequence) -> Fraction:
    inv = dense_inverse(gram_dense(ks))
    return max(abs_kernel_integral(j, inv, ks) for j in range(ks.N))


def random_knot_sequence(rng: random.Random, N: int, max_den: int = 64) -> KnotSequence:
    """N distinct rational knots in [0, 1) with t_0 = 0 and denominators up to max_den."""
    if N < 2:
        raise ValueError("N must be at least 2")
    pool = set()
    while len(pool) < N - 1:
        den = rng.randint(2, max_den)
        pool.add(Fraction(rng.randint(1, den - 1), den))
    return KnotSequence((Fraction(0),) + tuple(sorted(pool)))
