"""Seeded randomized verification suites behind ``padic-frames verify``.

Each suite yields one dict per check; a check passes when its measured
error is within the stated tolerance.  Trial ``t`` for prime ``p`` draws
from ``numpy.random.default_rng([seed, p, t])`` so any single trial can be
replayed.
"""

from __future__ import annotations

from typing import Callable, Iterator

import numpy as np

from .fourier import fourier, fourier_fast, inverse_fourier
from .oracle import (
    check_lemma_21,
    check_lemma_22,
    gram_matrix,
    hermitian_eigenvalues,
    random_section,
    random_stepfunction,
    random_trig_polynomial,
)
from .padic import GroupContext, PrueferElement, Section, pruefer_add
from .spectral import spectral_symbol
from .stepfn import inner, norm, weil_periodize
from .translates import translate

SUITES = ("plancherel", "grouplaw", "lemmas", "gram-phi")
DEFAULT_PRIMES = (2, 3, 5)


def _rng(seed: int, p: int, trial: int) -> np.random.Generator:
    return np.random.default_rng([seed, p, trial])


def _row(suite, check, p, seed, trial, error, tol):
    return {"suite": suite, "check": check, "p": p, "seed": seed, "trial": trial,
            "error": float(error), "tol": tol, "pass": bool(error <= tol)}


def _rel(a: float, b: float) -> float:
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0 else abs(a - b) / scale


def plancherel(p: int, seed: int, trials: int) -> Iterator[dict]:
    ctx = GroupContext(p)
    for t in range(trials):
        rng = _rng(seed, p, t)
        f = random_stepfunction(ctx, rng)
        fhat = fourier(f)
        yield _row("plancherel", "isometry", p, seed, t, _rel(norm(fhat), norm(f)), 1e-12)
        back = inverse_fourier(fhat)
        yield _row("plancherel", "roundtrip", p, seed, t,
                   float(np.max(np.abs(back.coeffs - f.coeffs))), 1e-12)
        yield _row("plancherel", "fast_vs_naive", p, seed, t,
                   float(np.max(np.abs(fourier_fast(f).coeffs - fhat.coeffs))), 1e-10)
        total = sum(weil_periodize(f).values())
        yield _row("plancherel", "weil_mass", p, seed, t,
                   abs(total - f.integral()) / max(abs(f.integral()), 1e-300), 1e-12)


def grouplaw(p: int, seed: int, trials: int) -> Iterator[dict]:
    ctx = GroupContext(p)
    for t in range(trials):
        rng = _rng(seed, p, t)
        f = random_stepfunction(ctx, rng, max_total=3)
        section = Section(ctx) if t % 2 == 0 else random_section(ctx, rng)
        a = PrueferElement(p, int(rng.integers(0, p**2)), int(rng.integers(0, 3)))
        b = PrueferElement(p, int(rng.integers(0, p**2)), int(rng.integers(0, 3)))
        lhs = translate(translate(f, a, section), b, section)
        rhs = translate(f, pruefer_add(a, b), section)
        err = float(np.max(np.abs((lhs - rhs).coeffs)))
        yield _row("grouplaw", "composition", p, seed, t, err, 1e-12)
        tb = translate(f, b, section)
        yield _row("grouplaw", "isometry", p, seed, t, _rel(norm(tb), norm(f)), 1e-12)


def lemmas(p: int, seed: int, trials: int) -> Iterator[dict]:
    ctx = GroupContext(p)
    for t in range(trials):
        rng = _rng(seed, p, t)
        f = random_stepfunction(ctx, rng, max_total=3)
        theta = random_trig_polynomial(ctx, rng, max_level=2, max_terms=9)
        section = Section(ctx) if t % 2 == 0 else random_section(ctx, rng)
        r21 = check_lemma_21(f, theta, section, seed=seed)
        yield _row("lemmas", "norm_identity", p, seed, t, r21.rel_error, 1e-10)
        r22 = check_lemma_22(f, theta, section, seed=seed)
        yield _row("lemmas", "frame_sum_identity", p, seed, t, r22.rel_error, 1e-10)


def gram_phi(p: int, seed: int, trials: int, cap: int = 243) -> Iterator[dict]:
    ctx = GroupContext(p)
    max_m = 0
    while p ** (max_m + 1) <= cap and max_m < 4:
        max_m += 1
    for t in range(trials):
        rng = _rng(seed, p, t)
        m = int(rng.integers(0, max_m + 1))
        k = int(rng.integers(0, 4 - m + 1))
        f = random_stepfunction(ctx, rng, m=m, k=k)
        section = Section(ctx) if t % 2 == 0 else random_section(ctx, rng)
        phi = spectral_symbol(f, section)
        eig = hermitian_eigenvalues(gram_matrix(f, section, m, cap))
        diff = float(np.max(np.abs(eig - np.sort(phi.at_level(m)))))
        yield _row("gram-phi", "eigen_vs_symbol", p, seed, t, diff, 1e-8)
        yield _row("gram-phi", "symbol_integral", p, seed, t,
                   _rel(phi.integral().real, inner(f, f).real), 1e-12)


RUNNERS: dict[str, Callable[..., Iterator[dict]]] = {
    "plancherel": plancherel,
    "grouplaw": grouplaw,
    "lemmas": lemmas,
    "gram-phi": gram_phi,
}


def run_suite(suite: str, primes=DEFAULT_PRIMES, seed: int = 0, trials: int = 20) -> list[dict]:
    names = SUITES if suite == "all" else (suite,)
    rows: list[dict] = []
    for name in names:
        for p in primes:
            rows.extend(RUNNERS[name](p, seed, trials))
    return rows
