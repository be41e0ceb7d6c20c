"""Spectral symbol, cross symbol and the frame test built on them.

The symbol lives on the dual subgroup Z_p.  A symbol at level ``m`` is
stored as its ``p**m`` values on the classes ``eta = e (mod p**m)``;
each class has measure ``p**-m``.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass

import numpy as np

from . import kernels
from .config import TOL_REL
from .fourier import fourier_fast
from .padic import GroupContext, PrueferElement, Section
from .stepfn import StepFunction, common_refinement

__all__ = [
    "SpectralSymbol",
    "FrameReport",
    "ZeroSystemError",
    "spectral_symbol",
    "cross_symbol",
    "fourier_coefficients",
    "frame_report",
]


class ZeroSystemError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SpectralSymbol:
    context: GroupContext
    level: int
    values: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.values)
        if arr.shape != (self.context.p**self.level,):
            raise ValueError("symbol length does not match its level")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def p(self) -> int:
        return self.context.p

    def integral(self) -> complex:
        return complex(self.values.sum()) * float(self.p) ** -self.level

    def at_level(self, level: int) -> np.ndarray:
        """Values on the finer classes ``e (mod p**level)``."""
        if level < self.level:
            raise ValueError("cannot coarsen a symbol")
        e = np.arange(self.p**level) % self.p**self.level
        return self.values[e]

    def as_stepfunction(self) -> StepFunction:
        return StepFunction(self.context, 0, self.level, self.values)

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("eta_class,value\n")
        real = np.isrealobj(self.values)
        for e, v in enumerate(self.values):
            buf.write(f"{e},{float(v) if real else complex(v)!r}\n")
        return buf.getvalue()


def _frequency_index(section: Section, k: int, m: int) -> np.ndarray:
    """Index table ``idx[e, s]`` of ``fhat(e + sigma_s)``, sigma_s = s/p**k + delta_s.

    ``fhat`` is at resolution ``(k, m)``: frequency ``j / p**k`` for
    ``j < p**(k+m)``, constant on cosets of ``p**m Z_p``.
    """
    p = section.context.p
    e = np.arange(p**m, dtype=np.int64)[:, None]
    s = np.arange(p**k, dtype=np.int64)[None, :]
    deltas = np.array([d % p**m for d in section.offset_table(k)], dtype=np.int64)[None, :]
    return ((e + deltas) % p**m) * p**k + s


def spectral_symbol(f: StepFunction, section: Section) -> SpectralSymbol:
    """``eta -> sum over sigma in C of |fhat(eta + sigma)|**2``."""
    if section.context.p != f.p:
        raise ValueError(f"prime mismatch: {section.context.p} vs {f.p}")
    fhat = fourier_fast(f)
    idx = _frequency_index(section, f.k, f.m)
    values = np.sum(np.abs(fhat.coeffs[idx]) ** 2, axis=1)
    return SpectralSymbol(f.context, f.m, values)


def cross_symbol(g: StepFunction, f: StepFunction, section: Section) -> SpectralSymbol:
    """``eta -> sum over sigma of ghat(eta + sigma) * conj(fhat(eta + sigma))``."""
    if section.context.p != f.p:
        raise ValueError(f"prime mismatch: {section.context.p} vs {f.p}")
    g, f = common_refinement(g, f)
    ghat, fhat = fourier_fast(g), fourier_fast(f)
    idx = _frequency_index(section, f.k, f.m)
    values = np.sum(ghat.coeffs[idx] * np.conj(fhat.coeffs[idx]), axis=1)
    return SpectralSymbol(f.context, f.m, values)


def fourier_coefficients(phi: SpectralSymbol) -> dict[PrueferElement, complex]:
    """``[x] -> ∫ phi(eta) (x, eta) d eta`` for ``[x]`` at level <= phi.level."""
    p, m = phi.p, phi.level
    coeffs = kernels.dft(np.asarray(phi.values, dtype=np.complex128), +1) * float(p) ** -m
    return {PrueferElement(p, r, m): complex(coeffs[r]) for r in range(p**m)}


@dataclass(frozen=True)
class FrameReport:
    A: float
    B: float
    zero_measure: float
    is_frame: bool
    is_tight: bool
    is_parseval: bool
    tol: float

    def to_json(self) -> dict:
        return {
            "A": self.A,
            "B": self.B,
            "zero_measure": self.zero_measure,
            "is_frame": self.is_frame,
            "is_tight": self.is_tight,
            "is_parseval": self.is_parseval,
            "tol": self.tol,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def frame_report(phi: SpectralSymbol, tol_rel: float = TOL_REL) -> FrameReport:
    """Frame bounds of the translate system from the step values of its symbol.

    Classes with value at most ``tol_rel * max(phi)`` form the zero set;
    the bounds are the min and max over the rest.
    """
    values = np.asarray(phi.values)
    if np.iscomplexobj(values):
        if np.max(np.abs(values.imag), initial=0.0) > 1e-9 * max(1.0, np.max(np.abs(values))):
            raise ValueError("frame_report needs a real symbol")
        values = values.real
    if np.min(values, initial=0.0) < -1e-9 * max(1.0, float(np.max(np.abs(values)))):
        raise ValueError("frame_report needs a nonnegative symbol")
    top = float(np.max(values))
    if top <= 0.0:
        raise ZeroSystemError("zero function generates the zero system")
    cut = tol_rel * top
    null = values <= cut
    rest = values[~null]
    A, B = float(np.min(rest)), float(np.max(rest))
    tight = B - A <= tol_rel * B
    return FrameReport(
        A=A,
        B=B,
        zero_measure=float(np.count_nonzero(null)) * float(phi.p) ** -phi.level,
        is_frame=A > cut,
        is_tight=bool(tight),
        is_parseval=bool(tight and abs(A - 1.0) <= tol_rel and abs(B - 1.0) <= tol_rel),
        tol=tol_rel,
    )
