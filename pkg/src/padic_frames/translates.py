"""Translation operators indexed by Q_p / Z_p.

``translate(f, [b], C)`` multiplies ``fhat`` by
``w(gamma) = conj((b, eta_gamma))`` where ``gamma = sigma + eta_gamma``
is the section decomposition.  These operators form a group isomorphic
to Q_p / Z_p; they agree with the ordinary shift ``f(x - b)`` only up to
a phase depending on the section.
"""

from __future__ import annotations

import numpy as np

from .fourier import fourier_fast, inverse_fourier_fast
from .padic import PAdicRational, PrueferElement, Section, character, section_decompose
from .stepfn import StepFunction, refine

__all__ = ["w_symbol", "w_table", "translate", "pointwise_shift"]


def w_symbol(b: PrueferElement, section: Section, gamma: PAdicRational) -> complex:
    _, eta = section_decompose(gamma, section)
    return character(b.representative(), eta).conjugate()


def _eta_residues(section: Section, k: int, m: int, modulus: int) -> np.ndarray:
    """``eta_j mod modulus`` for the frequencies ``gamma_j = j / p**k``, j < p**(k+m).

    ``gamma_j = q + s / p**k`` with ``q = j // p**k``; the section sends the
    canonical part ``s / p**k`` to ``s / p**k + delta_s``, so ``eta = q - delta_s``.
    """
    p = section.context.p
    j = np.arange(p ** (k + m), dtype=np.int64)
    deltas = np.array([d % modulus for d in section.offset_table(k)], dtype=np.int64)
    q = j // p**k
    s = j % p**k
    return (q - deltas[s]) % modulus


def w_table(b: PrueferElement, section: Section, k: int, m: int) -> np.ndarray:
    """``w_{[b],C}`` on the frequency grid of a transform at resolution ``(k, m)``.

    Requires ``m >= b.level`` so that ``w`` is constant on each frequency cell.
    """
    if m < b.level:
        raise ValueError("frequency grid too coarse for this translation")
    q = b.p**b.level
    eta = _eta_residues(section, k, m, q)
    t = (b.residue * eta) % q
    return np.exp(-2j * np.pi * (t / q))


def translate(f: StepFunction, b: PrueferElement, section: Section) -> StepFunction:
    if b.p != f.p or section.context.p != f.p:
        raise ValueError("prime mismatch")
    if b.level == 0:
        return f
    level = max(f.m, b.level)
    f.context.check_level(level + f.k)
    fhat = fourier_fast(refine(f, level, f.k))  # at (k, level)
    w = w_table(b, section, fhat.m, fhat.k)
    return inverse_fourier_fast(StepFunction(f.context, fhat.m, fhat.k, fhat.coeffs * w))


def pointwise_shift(f: StepFunction, b: PAdicRational) -> StepFunction:
    """The ordinary shift ``x -> f(x - b)``."""
    if b.p != f.p:
        raise ValueError(f"prime mismatch: {b.p} vs {f.p}")
    level = max(f.m, b.exponent)
    f.context.check_level(level + f.k)
    g = refine(f, level, f.k)
    n_cells = f.p ** (level + f.k)
    shift = (b.numerator * f.p ** (level - b.exponent)) % n_cells
    return StepFunction(f.context, level, f.k, np.roll(g.coeffs, shift))
