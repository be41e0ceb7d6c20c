"""Fourier transform on Q_p for step functions.

For ``f`` at resolution ``(m, k)`` the transform lives at ``(k, m)``.
With ``x_n = n / p**m`` and ``gamma_j = j / p**k`` the pairing is
``{x_n * gamma_j}_p = (n*j mod N) / N`` with ``N = p**(m+k)``, so

    fhat[j] = p**-k * sum_n f[n] * exp(-2*pi*i * n*j / N)

is exact: each constancy coset has measure ``p**-k`` and the character
is constant on it.  The inverse weights by ``p**-m`` instead.
"""

from __future__ import annotations

from . import kernels
from .stepfn import StepFunction

__all__ = ["fourier", "fourier_fast", "inverse_fourier", "inverse_fourier_fast"]


def _transform(f: StepFunction, sign: int, fast: bool) -> StepFunction:
    if fast:
        data = kernels.fft_radix(f.coeffs, f.p, sign)
    else:
        data = kernels.dft(f.coeffs, sign)
    weight = float(f.p) ** -f.k
    return StepFunction(f.context, f.k, f.m, data * weight)


def fourier(f: StepFunction) -> StepFunction:
    """Reference O(N**2) transform."""
    return _transform(f, -1, fast=False)


def fourier_fast(f: StepFunction) -> StepFunction:
    """Radix-p transform, same contract as :func:`fourier`."""
    return _transform(f, -1, fast=True)


def inverse_fourier(F: StepFunction) -> StepFunction:
    return _transform(F, +1, fast=False)


def inverse_fourier_fast(F: StepFunction) -> StepFunction:
    return _transform(F, +1, fast=True)
