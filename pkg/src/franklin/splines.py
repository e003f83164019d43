"""Periodic knot sequences, degree-one B-splines on the torus and their Gram matrix."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Sequence


def wrap(i: int, N: int) -> int:
    """The single place where indices are reduced modulo N."""
    return i % N


@dataclass(frozen=True)
class KnotConfig:
    """Partially equally spaced knots: 2*nu knots of spacing 1/(2n), the rest 1/n."""

    n: int
    nu: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if not 0 <= self.nu <= self.n:
            raise ValueError(f"nu must satisfy 0 <= nu <= n, got n={self.n}, nu={self.nu}")
        if self.N < 2:
            raise ValueError("need at least two knots")

    @property
    def N(self) -> int:
        return self.n + self.nu

    @property
    def equally_spaced(self) -> bool:
        return self.nu == 0 or self.nu == self.n

    @classmethod
    def from_N(cls, N: int, nu: int) -> "KnotConfig":
        return cls(N - nu, nu)


@dataclass(frozen=True)
class KnotSequence:
    knots: tuple[Fraction, ...]

    def __post_init__(self):
        ks = self.knots
        if len(ks) < 2:
            raise ValueError("need at least two knots")
        if ks[0] != 0:
            raise ValueError("first knot must be 0")
        if any(b <= a for a, b in zip(ks, ks[1:])) or ks[-1] >= 1:
            raise ValueError("knots must be strictly increasing in [0, 1)")

    @classmethod
    def from_knots(cls, knots: Sequence) -> "KnotSequence":
        return cls(tuple(Fraction(t) for t in knots))

    @classmethod
    def from_gaps(cls, gaps: Sequence) -> "KnotSequence":
        gaps = [Fraction(g) for g in gaps]
        if sum(gaps) != 1:
            raise ValueError("gaps must sum to 1")
        knots, t = [], Fraction(0)
        for g in gaps:
            knots.append(t)
            t += g
        return cls(tuple(knots))

    @property
    def N(self) -> int:
        return len(self.knots)

    @cached_property
    def gaps(self) -> tuple[Fraction, ...]:
        """delta_j = t_{j+1} - t_j with t_N = 1, so the last entry is the wraparound gap."""
        ks = self.knots + (Fraction(1),)
        return tuple(ks[i + 1] - ks[i] for i in range(self.N))

    def gap(self, j: int) -> Fraction:
        return self.gaps[wrap(j, self.N)]


def special_knots(cfg: KnotConfig) -> KnotSequence:
    n, nu, N = cfg.n, cfg.nu, cfg.N
    if nu == 0:
        return KnotSequence(tuple(Fraction(j, n) for j in range(N)))
    knots = [Fraction(j, 2 * n) if j <= 2 * nu else Fraction(j - nu, n) for j in range(N)]
    return KnotSequence(tuple(knots))


def bspline_eval(ks: KnotSequence, j: int, t) -> Fraction:
    """Hat function N_j at t, with t taken modulo 1."""
    N = ks.N
    if not 0 <= j < N:
        raise IndexError(f"basis index {j} out of range for N={N}")
    t = Fraction(t) % 1
    up = (t - ks.knots[j]) % 1
    if up <= ks.gap(j):
        return 1 - up / ks.gap(j)
    down = 1 - up
    if down <= ks.gap(j - 1):
        return 1 - down / ks.gap(j - 1)
    return Fraction(0)


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric periodic tridiagonal matrix; off[j] couples j and j+1 (mod N)."""

    dim: int
    diag: tuple[Fraction, ...]
    off: tuple[Fraction, ...]

    def entry(self, j: int, k: int) -> Fraction:
        N = self.dim
        j, k = wrap(j, N), wrap(k, N)
        if j == k:
            return self.diag[j]
        if N == 2:
            return self.off[0] + self.off[1]
        if wrap(j + 1, N) == k:
            return self.off[j]
        if wrap(k + 1, N) == j:
            return self.off[k]
        return Fraction(0)

    def dense(self) -> list[list[Fraction]]:
        return [[self.entry(j, k) for k in range(self.dim)] for j in range(self.dim)]

    def row_sum(self, j: int) -> Fraction:
        return sum((self.entry(j, k) for k in range(self.dim)), Fraction(0))


def gram_matrix(ks: KnotSequence) -> GramMatrix:
    gaps = ks.gaps
    N = ks.N
    diag = tuple((gaps[wrap(j - 1, N)] + gaps[j]) / 3 for j in range(N))
    off = tuple(g / 6 for g in gaps)
    return GramMatrix(N, diag, off)
