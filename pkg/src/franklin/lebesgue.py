"""Operator norms of the orthogonal projections and their comparison with gamma."""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Optional

from .invgram import (
    InverseRow,
    denominator,
    g_general,
    inverse_row,
)
from .recurrences import (
    A,
    B,
    A_twice,
    B_twice,
    LAM,
    LAM_INV,
    SQRT3,
    QuadraticRational,
    phi,
    phi_prime,
)
from .splines import KnotConfig, KnotSequence, special_knots, wrap

# 2 + (33 - 18 sqrt3)/13
GAMMA = QuadraticRational(Fraction(59, 13), Fraction(-18, 13))


def kappa(row: InverseRow, ks: KnotSequence) -> Fraction:
    """L1 norm of the kernel section through knot j, from the interval-wise sign split."""
    N = row.N
    if ks.N != N:
        raise ValueError("row and knot sequence disagree on N")
    gaps = ks.gaps
    same = Fraction(0)
    mixed = Fraction(0)
    for k in range(N):
        g0, g1 = abs(row.g[k]), abs(row.g[wrap(k + 1, N)])
        if g0 == 0 and g1 == 0:
            continue
        s0, s1 = row.sign_of(k), row.sign_of(k + 1)
        if s0 * s1 >= 0:
            same += gaps[k] * (g0 + g1)
        else:
            mixed += gaps[k] * Fraction(g0 * g0 + g1 * g1, g0 + g1)
    return (same + mixed) * row.scale / (2 * row.denom)


def decimal_string(x: Fraction, digits: int = 8, mode: str = "half-even") -> str:
    if digits < 1:
        raise ValueError("digits must be >= 1")
    x = Fraction(x)
    scaled = x * 10**digits
    if mode == "half-even":
        m = round(scaled)
    elif mode == "half-up":
        # half away from zero
        m = int((abs(scaled) + Fraction(1, 2)) // 1) * (1 if scaled >= 0 else -1)
    else:
        raise ValueError(f"unknown rounding mode {mode!r}")
    sign = "-" if m < 0 else ""
    whole, frac = divmod(abs(m), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def to_decimal(x, prec: int = 40) -> Decimal:
    if isinstance(x, QuadraticRational):
        return x.to_decimal(prec)
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = prec
        return Decimal(x.numerator) / Decimal(x.denominator)


def gamma_compare(x) -> int:
    """-1, 0 or 1 as x is below, equal to or above gamma; decided exactly."""
    return (QuadraticRational.coerce(Fraction(x) if not isinstance(x, QuadraticRational) else x)
            - GAMMA).sign()


def below_gamma(x) -> bool:
    """Squared rational test: x < gamma iff 59 - 13x > 0 and (59 - 13x)^2 > 972."""
    d = 59 - 13 * Fraction(x)
    return d > 0 and d * d > 972


@dataclass(frozen=True)
class NormReport:
    cfg: KnotConfig
    kappas: tuple[Fraction, ...]
    norm: Fraction
    argmax: int
    below_gamma: bool
    decimal: str


def projection_norm(cfg: KnotConfig, digits: int = 8) -> NormReport:
    ks = special_knots(cfg)
    kappas = tuple(kappa(inverse_row(cfg, j), ks) for j in range(cfg.N))
    norm = max(kappas)
    return NormReport(
        cfg=cfg,
        kappas=kappas,
        norm=norm,
        argmax=kappas.index(norm),
        below_gamma=gamma_compare(norm) < 0,
        decimal=decimal_string(norm, digits),
    )


def admissible_nus(N: int) -> range:
    """nu = 0 .. floor((N-1)/2); nu = n would repeat an equally spaced configuration."""
    return range(0, (N - 1) // 2 + 1)


# -- quotient bounds ------------------------------------------------------------


def quotient_bound_violations(cfg: KnotConfig, j: int) -> list[int]:
    """Indices k where |g_{k+1}|/|g_k| leaves its bracket [1/c, c]."""
    N, nu = cfg.N, cfg.nu
    if not (1 <= nu and 2 * nu <= N - 1):
        raise ValueError(f"need 1 <= nu <= (N-1)/2, got N={N}, nu={nu}")
    if N % 2 == 1 and N < 7:
        return []
    g = [abs(g_general(N, nu, j, k)) for k in range(N)]
    bad = []
    for k in range(N):
        if N % 2 == 1 and (N - 5) // 2 < abs(k - j) < (N + 5) // 2:
            continue
        c = 6 if k in (0, 2 * nu - 1) else 4
        if j == 0 and k == 0:
            c = 4
        lo, hi = g[k], g[wrap(k + 1, N)]
        if lo == 0 or hi == 0 or hi > c * lo or lo > c * hi:
            bad.append(k)
    return bad


def check_quotient_bounds(cfg: KnotConfig, j: int) -> bool:
    return not quotient_bound_violations(cfg, j)


# -- nu = 1 asymptotics ---------------------------------------------------------


@dataclass(frozen=True)
class SweepPoint:
    N: int
    norm: Fraction
    gap: Decimal  # |norm - gamma|


def asymptotic_sweep(nu: int, N_max: int, prec: int = 40) -> list[SweepPoint]:
    if nu < 0 or N_max < nu + 2:
        raise ValueError("need nu >= 0 and N_max >= nu + 2")
    g = GAMMA.to_decimal(prec)
    out = []
    for n in range(max(2, nu + 1), N_max - nu + 1):
        rep = projection_norm(KnotConfig(n, nu))
        with localcontext() as ctx:
            ctx.prec = prec
            gap = abs(to_decimal(rep.norm, prec) - g)
        out.append(SweepPoint(rep.cfg.N, rep.norm, gap))
    return out


def gap_ratios(points: list[SweepPoint]) -> list[tuple[int, Decimal]]:
    """gap(N)/gap(N-2) for successive points of equal parity."""
    by_n = {p.N: p.gap for p in points}
    return [(N, by_n[N] / by_n[N - 2]) for N in sorted(by_n) if N - 2 in by_n and by_n[N - 2] != 0]


def kappa_nu1_closed_form(N: int) -> Fraction:
    """kappa(1) for nu = 1 written with A, B and phi only."""
    if N < 3:
        raise ValueError("nu = 1 needs N >= 3")
    K = N - 1
    D = denominator(N, 1)
    if N % 2 == 0:
        head = (2 + 6 * B(K) + 2 * A(K)) * phi(Fraction(1 + A(K) - B(K), 4 * B(K)))
        tail = sum(
            (A(k - 1) * phi(Fraction(A_twice(N - 2 * k), A_twice(N - 2 * k + 2)))
             for k in range(2, K + 1)),
            Fraction(0),
        )
        return 3 * (head + 8 * tail) / D
    head = (3 * B(K) + A(K) - 1) * phi(Fraction(A(K) - B(K) - 1, 4 * B(K)))
    tail = sum(
        ((A(N - k) - A(k - 1)) * phi(Fraction(B_twice(N - 2 * k), B_twice(N - 2 * k + 2)))
         for k in range(2, K // 2 + 1)),
        Fraction(0),
    )
    return 6 * (head + 4 * tail + 4 * B(K // 2)) / D


def kappa_decomposition_check(N: int) -> bool:
    cfg = KnotConfig.from_N(N, 1)
    return kappa(inverse_row(cfg, 1), special_knots(cfg)) == kappa_nu1_closed_form(N)


# -- constants used in the bounds -----------------------------------------------


def _rounds_to(x: QuadraticRational, text: str) -> bool:
    digits = len(text.split(".")[1])
    return str(round(to_decimal(x, 50), digits)) == text


def constant_checks() -> dict[str, bool]:
    """Exact checks of the special values and bound constants; name -> verdict."""
    lam, lam_inv, r3 = LAM, LAM_INV, SQRT3
    eta = (r3 - 1) / 4
    s = Fraction(3, 2) * (phi(6) - phi(4))
    phi_lam = phi(lam)
    dphi_lam = phi_prime(lam)
    out: dict[str, bool] = {}
    out["phi(lam) = 2/3"] = phi_lam == Fraction(2, 3)
    out["phi(1/lam) = 2/3"] = phi(lam_inv) == Fraction(2, 3)
    out["phi(4) = 17/25"] = phi(4) == Fraction(17, 25)
    out["phi(6) = 37/49"] = phi(6) == Fraction(37, 49)
    out["phi'(lam) = lam^-1/(3 sqrt3)"] = dphi_lam == lam_inv / (3 * r3)
    out["s = 138/1225"] = s == Fraction(138, 1225)
    limit = 6 / (18 - 2 * r3) * ((3 + r3) * phi(eta) + 2 * phi_lam * (3 - r3))
    out["nu=1 limit equals gamma"] = limit == GAMMA
    theta_odd = (1 - lam_inv) - (r3 - Fraction(1, 3)) + (1 + lam) * lam * dphi_lam * (r3 - 1)
    out["equally spaced odd-N theta = 0"] = theta_odd == 0
    theta = 6 * phi(eta) + 2 * GAMMA - 12 * phi_lam
    out["theta rewrite"] = theta == (18 * GAMMA - 18 * phi(eta) - 36 * phi_lam) / r3
    dphi_mid = phi_prime(eta + Fraction(1, 2))
    out["even-N margin > 0"] = (3 * (r3 + 3) / 2 * abs(dphi_mid) - theta).sign() > 0
    sigma = (3 + r3) * phi(eta) + 2 * phi_lam * (3 - r3)
    out["sigma = gamma(18 - 2 sqrt3)/6"] = sigma == GAMMA * (18 - 2 * r3) / 6
    tau = 12 * phi_lam - 4 - 48 * dphi_lam / (1 - lam_inv)
    out["tau > 0"] = tau.sign() > 0
    base = QuadraticRational(Fraction(51, 25))
    b0 = base + s / (2 * lam) * (2 * r3 - 1)
    out["j=0 bound ~ 2.07719"] = _rounds_to(b0, "2.07719")
    out["j=0 bound < gamma"] = b0 < GAMMA
    a2 = Fraction(3, 2) + lam_inv**2 + r3 * lam_inv**3
    a3 = 2 / lam * (3 - r3)
    b1 = base + s * a2 / 2
    out["inner-row 3a2/4 - a3 >= 0"] = (Fraction(3, 4) * a2 - a3).sign() >= 0
    out["inner-row bound <= 2.130411"] = b1 <= Fraction(2130411, 10**6)
    out["inner-row bound < gamma"] = b1 < GAMMA
    a2t = Fraction(3, 2) * (r3 - 1) + lam_inv
    a3t = Fraction(3, 4) * (3 - r3)
    b2 = base + s * a2t / 2
    out["tail-row 3a2/4 - a3 > 0"] = (Fraction(3, 4) * a2t - a3t).sign() > 0
    out["tail-row bound ~ 2.117"] = _rounds_to(b2, "2.117")
    out["tail-row bound < gamma"] = b2 < GAMMA
    b3 = base + Fraction(3, 4) * s
    out["2nu = N-1 bound ~ 2.1245"] = _rounds_to(b3, "2.1245")
    out["odd-N bound 2.134411 < gamma"] = gamma_compare(Fraction(2134411, 10**6)) < 0
    out["gamma ~ 2.14023734"] = _rounds_to(GAMMA, "2.14023734")
    return out


def first_failure(checks: dict[str, bool]) -> Optional[str]:
    return next((k for k, v in checks.items() if not v), None)
