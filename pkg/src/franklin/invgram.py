"""Closed-form rows of the inverse Gram matrix for partially equally spaced knots.

Entries are stored as integers ``g_k`` with ``a[j][k] = scale * (-1)**(j+k) * g_k / denom``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .recurrences import A, B, B_twice, A_twice
from .splines import KnotConfig, wrap


def _parity(N: int) -> int:
    return -1 if N % 2 else 1


def denominator(N: int, nu: int) -> Fraction:
    """Common denominator of a row; ``nu = 0`` selects the equally spaced formula."""
    if N < 2:
        raise ValueError(f"N must be at least 2, got {N}")
    s = _parity(N)
    if nu == 0:
        return Fraction(2 * (-s + A(N)))
    if not 1 <= nu or 2 * nu > N - 1:
        raise ValueError(f"need 1 <= nu <= (N-1)/2, got N={N}, nu={nu}")
    return Fraction(2 * A(N) - 2 * s) + Fraction(3, 2) * B(2 * nu) * B(N - 2 * nu)


def _half3(x: int) -> int:
    # every use multiplies by B(2 nu) = 2 A(nu) B(nu), so x is even
    assert x % 2 == 0
    return 3 * x // 2


def g_branches(N: int, nu: int, j: int, k: int) -> list[tuple[str, int]]:
    """All formula branches whose index range contains (j, k), in declaration order."""
    if not (1 <= nu and 2 * nu <= N - 1):
        raise ValueError(f"need 1 <= nu <= (N-1)/2, got N={N}, nu={nu}")
    if not (0 <= j < N and 0 <= k < N):
        raise IndexError(f"indices out of range: j={j}, k={k}, N={N}")
    s = _parity(N)
    m = 2 * nu
    out = []
    if j <= m - 1:
        if k <= j:
            out.append(("lower", 2 * s * B(j - k) + B(N - j + k) + B(m - j) * A(N - m + k)
                        + B(k) * (A(N - j) + 3 * B(m - j) * B(N - m))))
        if j <= k <= m:
            out.append(("middle", 2 * s * B(k - j) + B(N - k + j) + B(m - k) * A(N - m + j)
                        + B(j) * (A(N - k) + 3 * B(m - k) * B(N - m))))
        if m <= k:
            out.append(("tail", s * (B(k - j) + A(k - m) * B(m - j)) + B(N - k + j)
                        + B(j) * A(N - k)))
    else:
        if k <= m:
            out.append(("head", s * (B(j - k) + A(j - m) * B(m - k)) + B(N - j + k)
                        + A(N - j) * B(k)))
        if m <= k <= j:
            out.append(("before", s * B(j - k) + A(k - m) * B(N - j + m) + A(N - j) * B(k)
                        + _half3(B(k - m) * B(m) * B(N - j))))
        if j <= k:
            out.append(("after", s * B(k - j) + A(N - k) * B(j) + A(j - m) * B(N - k + m)
                        + _half3(B(m) * B(N - k) * B(j - m))))
    return out


def g_general(N: int, nu: int, j: int, k: int) -> int:
    return g_branches(N, nu, j, k)[0][1]


def g_equally_spaced(N: int, k: int) -> int:
    """Row 0 of the equally spaced inverse; other rows are circular shifts."""
    k = wrap(k, N)
    return B(N - k) + _parity(N) * B(k)


@dataclass(frozen=True)
class InverseRow:
    N: int
    nu: int
    j: int
    g: tuple[int, ...]
    denom: Fraction
    scale: Fraction

    def entry(self, k: int) -> Fraction:
        k = wrap(k, self.N)
        sign = -1 if (self.j + k) % 2 else 1
        return self.scale * sign * self.g[k] / self.denom

    def entries(self) -> list[Fraction]:
        return [self.entry(k) for k in range(self.N)]

    def sign_of(self, k: int) -> int:
        """Sign of a[j][k], read off the integer g_k and the index parity."""
        k = wrap(k, self.N)
        gk = self.g[k]
        if gk == 0:
            return 0
        sign = 1 if gk > 0 else -1
        return -sign if (self.j + k) % 2 else sign


def inverse_row(cfg: KnotConfig, j: int) -> InverseRow:
    N = cfg.N
    if not 0 <= j < N:
        raise IndexError(f"row {j} out of range for N={N}")
    if cfg.equally_spaced:
        # spacing 1/N in both boundary cases (nu = 0 and nu = n)
        g = []
        for k in range(N):
            shift = wrap(k - j, N)
            flip = -1 if (shift - (j + k)) % 2 else 1
            g.append(flip * g_equally_spaced(N, shift))
        return InverseRow(N, cfg.nu, j, tuple(g), denominator(N, 0), Fraction(6 * N))
    g = tuple(g_general(N, cfg.nu, j, k) for k in range(N))
    return InverseRow(N, cfg.nu, j, g, denominator(N, cfg.nu), Fraction(6 * cfg.n))


def inverse_rows(cfg: KnotConfig) -> list[InverseRow]:
    return [inverse_row(cfg, j) for j in range(cfg.N)]


def satisfies_defining_equations(cfg: KnotConfig) -> bool:
    """Check the four banded column equations characterising the inverse (1 <= nu <= n-1)."""
    N, n, m = cfg.N, cfg.n, 2 * cfg.nu
    if cfg.equally_spaced:
        raise ValueError("defining equations are stated for 1 <= nu <= n-1")
    a = [inverse_row(cfg, j).entries() for j in range(N)]
    for k in range(N):
        def rhs(j, c):
            return c * n if j == k else 0
        if 6 * a[0][k] + a[1][k] + 2 * a[N - 1][k] != rhs(0, 12):
            return False
        for j in range(1, m):
            if a[j - 1][k] + 4 * a[j][k] + a[j + 1][k] != rhs(j, 12):
                return False
        if a[m - 1][k] + 6 * a[m][k] + 2 * a[wrap(m + 1, N)][k] != rhs(m, 12):
            return False
        for j in range(m + 1, N):
            if 2 * a[j - 1][k] + 8 * a[j][k] + 2 * a[wrap(j + 1, N)][k] != rhs(j, 12):
                return False
    return True


def sign_structure_holds(row: InverseRow) -> bool:
    """Non-negativity pattern of g: all g_k >= 0 for even N; for odd N the sign flips
    once the plain index distance |k - j| exceeds (N - 1)/2."""
    N, j = row.N, row.j
    for k, gk in enumerate(row.g):
        if N % 2 == 0 or abs(k - j) <= (N - 1) // 2:
            if gk < 0:
                return False
        elif gk > 0:
            return False
    return True


# -- the main case nu = 1, j = 1 ------------------------------------------------


def g_nu1(N: int, k: int) -> int:
    """Specialisation of the general formula to nu = j = 1 (with K = N - 1)."""
    s = _parity(N)
    K = N - 1
    if k == 0:
        return 2 * (s + A(K) - B(K))
    if k == 1:
        return 8 * B(K)
    return 2 * (A(N - k) + B(N - k) + s * (A(k - 2) + B(k - 2)))


def denominator_nu1(N: int) -> int:
    K = N - 1
    return 18 * B(K) - 2 * A(K) - 2 * _parity(N)


def check_nu1_identities(N: int) -> bool:
    """Pair sums and consecutive quotients of |g_k| for nu = j = 1 and given N >= 3."""
    if N < 3:
        raise ValueError("nu = 1 needs N >= 3")
    s = _parity(N)
    K = N - 1
    g = [g_general(N, 1, 1, k) for k in range(N)]

    def ag(k):
        return abs(g[wrap(k, N)])

    if any(g[k] != g_nu1(N, k) for k in range(N)):
        return False
    if g[0] != g[2 % N]:
        return False
    if denominator(N, 1) != denominator_nu1(N):
        return False
    if ag(1) + ag(2) != 2 * s + 6 * B(K) + 2 * A(K):
        return False
    for k in range(2, N):
        if 2 * k == N + 1:
            if ag(k) + ag(k + 1) != 8 * B(K // 2):
                return False
        elif ag(k) + ag(k + 1) != 4 * abs(A(N - k) + s * A(k - 1)):
            return False
    # quotients: |g_{k+1}| / |g_k| = F(|N/2 - k|) / F(|N/2 - k + 1|), F = A (N even) or B (N odd);
    # arguments are tracked doubled so half-integers stay exact
    F = A_twice if N % 2 == 0 else B_twice
    for k in range(2, N):
        num, den = F(N - 2 * k), F(N - 2 * k + 2)
        if ag(k + 1) * den != ag(k) * num:
            return False
    return True
