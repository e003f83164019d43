"""Integer solutions of f(k-1) - 4 f(k) + f(k+1) = 0 and exact arithmetic in Q(sqrt 3).

``A(k)`` and ``B(k)`` are the cosh/sinh-like pair with ``A(0) = 1``, ``B(0) = 0``,
``A(k+1) = 2A(k) + 3B(k)`` and ``B(k+1) = A(k) + 2B(k)``.  Powers of
``lam = 2 + sqrt 3`` are ``A(k) + sqrt3 * B(k)``, and ``lam**-k = A(k) - sqrt3 * B(k)``,
so every identity involving them can be checked without floating point.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class HyperbolicPair:
    k: int
    a: int
    b: int


_A: list[int] = [1]
_B: list[int] = [0]
_lock = threading.Lock()


def _extend(k: int) -> None:
    if k < len(_A):
        return
    with _lock:
        a, b = _A[-1], _B[-1]
        for _ in range(len(_A), k + 1):
            a, b = 2 * a + 3 * b, a + 2 * b
            _A.append(a)
            _B.append(b)


def A(k: int) -> int:
    if k < 0:
        raise ValueError(f"negative index {k}")
    _extend(k)
    return _A[k]


def B(k: int) -> int:
    if k < 0:
        raise ValueError(f"negative index {k}")
    _extend(k)
    return _B[k]


def hyperbolic_sequence(K: int) -> list[HyperbolicPair]:
    if K < 0:
        raise ValueError("K must be non-negative")
    _extend(K)
    return [HyperbolicPair(k, _A[k], _B[k]) for k in range(K + 1)]


# Half-integer arguments.  With mu = lam**(1/2) = (1 + sqrt3)/sqrt2 one gets
#   A(m + 1/2) = sqrt6/2 * (A(m) + B(m)),   B(m + 1/2) = sqrt2/(2 sqrt3) * (A(m) + 3B(m)),
# so ratios of A (or of B) at half-integers are ratios of these integers.


def A_half(m: int) -> int:
    """Integer proportional to A(m + 1/2); the common factor is sqrt(6)/2."""
    return A(m) + B(m)


def B_half(m: int) -> int:
    """Integer proportional to B(m + 1/2); the common factor is 1/sqrt(6)."""
    return A(m) + 3 * B(m)


def A_twice(x2: int) -> int:
    """A at x2/2 (|x2| used), scaled so that ratios at equal parity of x2 are exact."""
    x2 = abs(x2)
    return A(x2 // 2) if x2 % 2 == 0 else A_half(x2 // 2)


def B_twice(x2: int) -> int:
    x2 = abs(x2)
    return B(x2 // 2) if x2 % 2 == 0 else B_half(x2 // 2)


class QuadraticRational:
    """Exact number ``p + q*sqrt(3)`` with rational ``p`` and ``q``."""

    __slots__ = ("p", "q")

    def __init__(self, p: Rational = 0, q: Rational = 0):
        self.p = Fraction(p)
        self.q = Fraction(q)

    @classmethod
    def coerce(cls, x) -> "QuadraticRational":
        if isinstance(x, QuadraticRational):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x, 0)
        return NotImplemented

    def __repr__(self) -> str:
        return f"QuadraticRational({self.p}, {self.q})"

    def __str__(self) -> str:
        return f"{self.p} + {self.q}*sqrt3"

    def __hash__(self):
        return hash((self.p, self.q))

    def __eq__(self, other) -> bool:
        other = QuadraticRational.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __add__(self, other):
        other = QuadraticRational.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadraticRational(self.p + other.p, self.q + other.q)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticRational(-self.p, -self.q)

    def __sub__(self, other):
        other = QuadraticRational.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadraticRational(self.p - other.p, self.q - other.q)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = QuadraticRational.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadraticRational(
            self.p * other.p + 3 * self.q * other.q,
            self.p * other.q + self.q * other.p,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticRational":
        return QuadraticRational(self.p, -self.q)

    def norm(self) -> Fraction:
        return self.p * self.p - 3 * self.q * self.q

    def inverse(self) -> "QuadraticRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadraticRational(self.p / n, -self.q / n)

    def __truediv__(self, other):
        other = QuadraticRational.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QuadraticRational.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = QuadraticRational(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def sign(self) -> int:
        p, q = self.p, self.q
        if p >= 0 and q >= 0:
            return 0 if p == 0 and q == 0 else 1
        if p <= 0 and q <= 0:
            return -1
        # opposite signs: the larger of p^2, 3q^2 wins
        if p > 0:
            return 1 if p * p > 3 * q * q else -1
        return 1 if 3 * q * q > p * p else -1

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def _cmp(self, other) -> int:
        other = QuadraticRational.coerce(other)
        if other is NotImplemented:
            raise TypeError(f"cannot compare with {type(other)}")
        return (self - other).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def is_rational(self) -> bool:
        return self.q == 0

    def to_decimal(self, prec: int = 50):
        from decimal import Decimal, localcontext

        with localcontext() as ctx:
            ctx.prec = prec + 10
            r3 = Decimal(3).sqrt()
            v = Decimal(self.p.numerator) / Decimal(self.p.denominator) + (
                Decimal(self.q.numerator) / Decimal(self.q.denominator)
            ) * r3
        with localcontext() as ctx:
            ctx.prec = prec
            return +v

    def __float__(self) -> float:
        return float(self.to_decimal(30))


SQRT3 = QuadraticRational(0, 1)
LAM = QuadraticRational(2, 1)
LAM_INV = QuadraticRational(2, -1)


def lam_power(k: int) -> QuadraticRational:
    """lam**k for any integer k, via A and B."""
    if k >= 0:
        return QuadraticRational(A(k), B(k))
    return QuadraticRational(A(-k), -B(-k))


def phi(t):
    """(1 + t^2) / (1 + t)^2; accepts rationals or QuadraticRational."""
    if isinstance(t, QuadraticRational):
        if t.sign() <= 0:
            raise ValueError("phi is defined for t > 0")
    else:
        t = Fraction(t)
        if t <= 0:
            raise ValueError("phi is defined for t > 0")
    return (1 + t * t) / ((1 + t) * (1 + t))


def phi_prime(t):
    """Derivative 2(t - 1) / (1 + t)^3."""
    if not isinstance(t, QuadraticRational):
        t = Fraction(t)
    return 2 * (t - 1) / ((1 + t) * (1 + t) * (1 + t))


def phi_at_lambda() -> QuadraticRational:
    return phi(LAM)


def sum_identity_failure(K: int) -> Optional[tuple[str, int]]:
    """First (identity, K') where a closed-form partial sum of A or B fails, else None."""
    if K < 0:
        raise ValueError("K must be non-negative")
    _extend(K + 1)
    s_bb = s_aa = s_a = s_b = 0
    for k in range(K + 1):
        s_bb += _B[k] + _B[k + 1]
        s_aa += _A[k] + _A[k + 1]
        s_a += _A[k]
        s_b += _B[k]
        a1, b1 = _A[k + 1], _B[k + 1]
        if s_bb != a1 - 1:
            return ("sum B_k + B_k+1", k)
        if 2 * s_a != 3 * b1 - a1 + 1:
            return ("2 sum A_k", k)
        if s_aa != 3 * b1:
            return ("sum A_k + A_k+1", k)
        if 2 * s_b != a1 - b1 - 1:
            return ("2 sum B_k", k)
    return None


def check_sum_identities(K: int) -> bool:
    return sum_identity_failure(K) is None


def asym_identity_failure(K: int) -> Optional[tuple]:
    """First failing lam-distance identity, growth bound or addition theorem up to K."""
    if K < 0:
        raise ValueError("K must be non-negative")
    _extend(K + 1)
    for k in range(K + 1):
        inv = lam_power(-k)
        bk, ak = QuadraticRational(_B[k]), QuadraticRational(_A[k])
        if LAM * bk - _B[k + 1] != -inv or not (-1 <= -inv <= 0):
            return ("lam B_k - B_k+1", k)
        if LAM * ak - _A[k + 1] != SQRT3 * inv or not (0 <= SQRT3 * inv <= SQRT3):
            return ("lam A_k - A_k+1", k)
        if SQRT3 * bk - ak != -inv:
            return ("sqrt3 B_k - A_k", k)
        if _A[k + 1] > 4 * _A[k]:
            return ("A_k+1 <= 4 A_k", k)
        if k >= 1 and _B[k + 1] > 4 * _B[k]:
            return ("B_k+1 <= 4 B_k", k)
        if _A[k] != 2 * _A[k + 1] - 3 * _B[k + 1] or _B[k] != 2 * _B[k + 1] - _A[k + 1]:
            return ("backward recurrence", k)
    for n in range(K + 1):
        an, bn = _A[n], _B[n]
        for k in range(n + 1):
            ak, bk, anm, bnm = _A[k], _B[k], _A[n - k], _B[n - k]
            if bk * anm + ak * bnm != bn:
                return ("B_k A_n-k + A_k B_n-k = B_n", n, k)
            if bn * anm - bnm * an != bk:
                return ("B_n A_n-k - B_n-k A_n = B_k", n, k)
            if ak * anm + 3 * bnm * bk != an:
                return ("A_k A_n-k + 3 B_n-k B_k = A_n", n, k)
            if an * anm - 3 * bn * bnm != ak:
                return ("A_n A_n-k - 3 B_n B_n-k = A_k", n, k)
    return None


def check_asym_identities(K: int) -> bool:
    return asym_identity_failure(K) is None
