"""Property suites behind ``franklin verify``.

Each check returns ``None`` on success or a dict describing the first counterexample.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from importlib import resources
from typing import Callable, Optional

from . import invgram, lebesgue, oracle, recurrences
from .splines import KnotConfig, special_knots

LEVELS = {
    "quick": dict(K=200, oracle_N=20, sign_N=20, nu1_N=40, cert_N=20),
    "full": dict(K=2000, oracle_N=40, sign_N=40, nu1_N=100, cert_N=60),
}


def load_table1() -> dict[tuple[int, int], str]:
    """Golden 8-decimal norms transcribed from the published table, keyed by (N, nu)."""
    text = resources.files("franklin").joinpath("data/table1.csv").read_text()
    return {(int(r["N"]), int(r["nu"])): r["norm_decimal"] for r in csv.DictReader(io.StringIO(text))}


def _configs(N_max: int, N_min: int = 2, general_only: bool = False):
    for N in range(N_min, N_max + 1):
        for nu in lebesgue.admissible_nus(N):
            if general_only and nu == 0:
                continue
            yield KnotConfig.from_N(N, nu)


def check_identities(K: int):
    bad = recurrences.sum_identity_failure(K)
    if bad:
        return {"identity": bad[0], "K": bad[1]}
    bad = recurrences.asym_identity_failure(K)
    if bad:
        return {"identity": bad[0], "index": list(bad[1:])}
    return None


def check_constants():
    name = lebesgue.first_failure(lebesgue.constant_checks())
    return {"constant": name} if name else None


def check_inverse_rows(N_max: int):
    for cfg in _configs(N_max):
        inv = oracle.dense_inverse(oracle.gram_dense(special_knots(cfg)))
        for j in range(cfg.N):
            row = invgram.inverse_row(cfg, j)
            for k, value in enumerate(row.entries()):
                if value != inv[j][k]:
                    return {"N": cfg.N, "nu": cfg.nu, "j": j, "k": k,
                            "closed_form": str(value), "dense": str(inv[j][k])}
    return None


def check_kappa_routes(N_max: int):
    for cfg in _configs(N_max):
        ks = special_knots(cfg)
        inv = oracle.dense_inverse(oracle.gram_dense(ks))
        for j in range(cfg.N):
            a = lebesgue.kappa(invgram.inverse_row(cfg, j), ks)
            b = oracle.abs_kernel_integral(j, inv, ks)
            if a != b:
                return {"N": cfg.N, "nu": cfg.nu, "j": j, "kappa": str(a), "geometric": str(b)}
    return None


def check_branch_overlap(N_max: int):
    for cfg in _configs(N_max, N_min=3, general_only=True):
        for j in range(cfg.N):
            for k in range(cfg.N):
                values = {v for _, v in invgram.g_branches(cfg.N, cfg.nu, j, k)}
                if len(values) > 1:
                    return {"N": cfg.N, "nu": cfg.nu, "j": j, "k": k, "values": sorted(values)}
    return None


def check_sign_structure(N_max: int):
    for cfg in _configs(N_max, N_min=3, general_only=True):
        for j in range(cfg.N):
            row = invgram.inverse_row(cfg, j)
            if not invgram.sign_structure_holds(row):
                return {"N": cfg.N, "nu": cfg.nu, "j": j, "g": [str(g) for g in row.g]}
    return None


def check_quotients(N_max: int):
    for cfg in _configs(N_max, N_min=3, general_only=True):
        for j in range(cfg.N):
            bad = lebesgue.quotient_bound_violations(cfg, j)
            if bad:
                return {"N": cfg.N, "nu": cfg.nu, "j": j, "k": bad[0]}
    return None


def check_nu1(N_max: int):
    for N in range(3, N_max + 1):
        if not invgram.check_nu1_identities(N):
            return {"N": N, "what": "pair sums / quotients"}
    for N in range(3, min(N_max, 40) + 1):
        if not lebesgue.kappa_decomposition_check(N):
            return {"N": N, "what": "kappa decomposition"}
    return None


def check_table1():
    for (N, nu), expected in sorted(load_table1().items()):
        got = lebesgue.projection_norm(KnotConfig.from_N(N, nu)).decimal
        if got != expected:
            return {"N": N, "nu": nu, "expected": expected, "got": got}
    return None


def check_gamma_certificates(N_max: int):
    for cfg in _configs(N_max):
        rep = lebesgue.projection_norm(cfg)
        if not (rep.below_gamma and lebesgue.below_gamma(rep.norm)):
            return {"N": cfg.N, "nu": cfg.nu, "norm": str(rep.norm)}
        if cfg.nu == 0 and rep.norm >= 2:
            return {"N": cfg.N, "nu": 0, "norm": str(rep.norm), "what": "not below 2"}
        if cfg.nu == 1 and cfg.N >= 4 and rep.argmax != 1:
            return {"N": cfg.N, "nu": 1, "argmax": rep.argmax, "what": "maximiser moved"}
    return None


@dataclass
class CheckResult:
    name: str
    counterexample: Optional[dict]
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def suite(level: str) -> list[tuple[str, Callable[[], Optional[dict]]]]:
    if level not in LEVELS:
        raise ValueError(f"unknown level {level!r}")
    p = LEVELS[level]
    return [
        ("recurrence identities", lambda: check_identities(p["K"])),
        ("special values and constants", check_constants),
        ("closed-form inverse rows vs dense inverse", lambda: check_inverse_rows(p["oracle_N"])),
        ("kappa vs geometric integral", lambda: check_kappa_routes(p["oracle_N"])),
        ("branch overlap agreement", lambda: check_branch_overlap(p["sign_N"])),
        ("sign structure of g", lambda: check_sign_structure(p["sign_N"])),
        ("consecutive quotient bounds", lambda: check_quotients(p["sign_N"])),
        ("nu = 1 identities", lambda: check_nu1(p["nu1_N"])),
        ("published table", check_table1),
        ("gamma certificates", lambda: check_gamma_certificates(p["cert_N"])),
    ]


def run(level: str, stop_on_failure: bool = True) -> list[CheckResult]:
    results = []
    for name, fn in suite(level):
        t0 = time.perf_counter()
        cex = fn()
        results.append(CheckResult(name, cex, time.perf_counter() - t0))
        if cex is not None and stop_on_failure:
            break
    return results
