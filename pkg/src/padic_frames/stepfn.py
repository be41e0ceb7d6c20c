"""Complex step functions on Q_p at finite resolution.

A function at resolution ``(m, k)`` is supported on ``p**-m Z_p`` and
constant on cosets of ``p**k Z_p``.  Its ``p**(m+k)`` coefficients are
ordered by the index map ``n -> x_n = n / p**m``; the Haar measure of
each constancy coset is ``p**-k`` (with ``mu(Z_p) = 1``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .padic import GroupContext, PAdicRational, PrueferElement, character

__all__ = [
    "StepFunction",
    "indicator",
    "refine",
    "common_refinement",
    "inner",
    "norm",
    "weil_periodize",
    "zero",
]


@dataclass(frozen=True, eq=False)
class StepFunction:
    context: GroupContext
    support_level: int
    constancy_level: int
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        m, k = self.support_level, self.constancy_level
        if m < 0 or k < 0:
            raise ValueError("resolution levels must be nonnegative")
        self.context.check_level(m + k)
        arr = np.array(self.coeffs, dtype=np.complex128)
        if arr.shape != (self.context.p ** (m + k),):
            raise ValueError(
                f"expected {self.context.p ** (m + k)} coefficients at resolution "
                f"({m}, {k}), got shape {arr.shape}"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @property
    def p(self) -> int:
        return self.context.p

    @property
    def m(self) -> int:
        return self.support_level

    @property
    def k(self) -> int:
        return self.constancy_level

    @property
    def resolution(self) -> tuple[int, int]:
        return self.support_level, self.constancy_level

    def point(self, n: int) -> PAdicRational:
        """The coset representative ``x_n`` of coefficient ``n``."""
        return PAdicRational(self.p, n, self.support_level)

    def __call__(self, x: PAdicRational) -> complex:
        if x.p != self.p:
            raise ValueError(f"prime mismatch: {x.p} vs {self.p}")
        if x.exponent > self.m:
            return 0j
        n = (x.numerator * self.p ** (self.m - x.exponent)) % self.p ** (self.m + self.k)
        return complex(self.coeffs[n])

    # linear structure --------------------------------------------------
    def _binary(self, other: "StepFunction", op) -> "StepFunction":
        f, g = common_refinement(self, other)
        return StepFunction(f.context, f.m, f.k, op(f.coeffs, g.coeffs))

    def __add__(self, other: "StepFunction") -> "StepFunction":
        return self._binary(other, np.add)

    def __sub__(self, other: "StepFunction") -> "StepFunction":
        return self._binary(other, np.subtract)

    def __mul__(self, other):
        if isinstance(other, StepFunction):
            return self._binary(other, np.multiply)
        return StepFunction(self.context, self.m, self.k, self.coeffs * complex(other))

    __rmul__ = __mul__

    def __neg__(self) -> "StepFunction":
        return self * -1

    def conj(self) -> "StepFunction":
        return StepFunction(self.context, self.m, self.k, np.conj(self.coeffs))

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def integral(self) -> complex:
        return complex(self.coeffs.sum()) * float(self.p) ** -self.k

    def allclose(self, other: "StepFunction", atol: float = 1e-12) -> bool:
        f, g = common_refinement(self, other)
        return bool(np.max(np.abs(f.coeffs - g.coeffs), initial=0.0) <= atol)

    def compact(self) -> "StepFunction":
        """Coarsest resolution representing the same function."""
        f = self
        while f.m > 0 and not np.any(f.coeffs[_index(f.p, f.m, f.k) % f.p != 0]):
            keep = f.coeffs[:: f.p]
            f = StepFunction(f.context, f.m - 1, f.k, keep[: f.p ** (f.m - 1 + f.k)])
        while f.k > 0:
            blocks = f.coeffs.reshape(f.p, -1)
            if not np.all(blocks == blocks[0]):
                break
            f = StepFunction(f.context, f.m, f.k - 1, blocks[0])
        return f

    # serialisation ------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "p": self.p,
            "support_level": self.m,
            "constancy_level": self.k,
            "re": [float(v) for v in self.coeffs.real],
            "im": [float(v) for v in self.coeffs.imag],
        }

    @classmethod
    def from_json(cls, obj: Mapping, context: GroupContext | None = None) -> "StepFunction":
        def need(key, kind):
            if key not in obj:
                raise ValueError(f"$.{key}: missing")
            val = obj[key]
            if kind is int and (isinstance(val, bool) or not isinstance(val, int)):
                raise ValueError(f"$.{key}: expected integer, got {val!r}")
            if kind is list:
                if not isinstance(val, list):
                    raise ValueError(f"$.{key}: expected array")
                for i, v in enumerate(val):
                    if isinstance(v, bool) or not isinstance(v, (int, float)):
                        raise ValueError(f"$.{key}[{i}]: expected number, got {v!r}")
            return val

        if not isinstance(obj, Mapping):
            raise ValueError("$: expected object")
        p = need("p", int)
        m = need("support_level", int)
        k = need("constancy_level", int)
        re = need("re", list)
        im = obj.get("im", [0.0] * len(re))
        if "im" in obj:
            need("im", list)
        if len(re) != len(im):
            raise ValueError("$.im: length differs from $.re")
        if context is None:
            context = GroupContext(p)
        elif context.p != p:
            raise ValueError(f"$.p: expected {context.p}, got {p}")
        return cls(context, m, k, np.asarray(re, float) + 1j * np.asarray(im, float))


def _index(p: int, m: int, k: int) -> np.ndarray:
    return np.arange(p ** (m + k), dtype=np.int64)


def zero(context: GroupContext, m: int = 0, k: int = 0) -> StepFunction:
    return StepFunction(context, m, k, np.zeros(context.p ** (m + k), dtype=np.complex128))


def indicator(context: GroupContext, a, level: int = 0, beta=None) -> StepFunction:
    """``x -> (x, beta) * 1[x in a + p**level Z_p]`` at minimal resolution."""
    if level < 0:
        raise ValueError("level must be >= 0")
    p = context.p
    a = PAdicRational.parse(p, a)
    beta = PAdicRational(p, 0) if beta is None else PAdicRational.parse(p, beta)
    m = a.exponent
    k = max(level, beta.exponent)
    context.check_level(m + k)
    n_cells = p ** (m + k)
    a_idx = a.numerator  # a = a_idx / p**m
    coeffs = np.zeros(n_cells, dtype=np.complex128)
    period = p ** (m + level)
    # x_n in a + p**level Z_p  <=>  n = a_idx (mod p**(m+level))
    for n in range(a_idx % period, n_cells, period):
        coeffs[n] = character(PAdicRational(p, n, m), beta)
    return StepFunction(context, m, k, coeffs)


def refine(f: StepFunction, m_new: int, k_new: int) -> StepFunction:
    """Same function at the finer resolution ``(m_new, k_new)``."""
    if m_new < f.m or k_new < f.k:
        raise ValueError(
            f"cannot coarsen from ({f.m}, {f.k}) to ({m_new}, {k_new})"
        )
    if (m_new, k_new) == f.resolution:
        return f
    f.context.check_level(m_new + k_new)
    p, dm = f.p, m_new - f.m
    n = _index(p, m_new, k_new)
    step = p**dm
    inside = n % step == 0
    old = (n // step) % p ** (f.m + f.k)
    coeffs = np.where(inside, f.coeffs[old], 0)
    return StepFunction(f.context, m_new, k_new, coeffs)


def common_refinement(f: StepFunction, g: StepFunction) -> tuple[StepFunction, StepFunction]:
    if f.p != g.p:
        raise ValueError(f"prime mismatch: {f.p} vs {g.p}")
    m, k = max(f.m, g.m), max(f.k, g.k)
    return refine(f, m, k), refine(g, m, k)


def inner(f: StepFunction, g: StepFunction) -> complex:
    """``<f, g> = ∫ f * conj(g) dmu``."""
    f, g = common_refinement(f, g)
    return complex(np.vdot(g.coeffs, f.coeffs)) * float(f.p) ** -f.k


def norm(f: StepFunction) -> float:
    return float(np.sqrt(inner(f, f).real))


def weil_periodize(f: StepFunction) -> dict[PrueferElement, complex]:
    """``[x] -> ∫_H f(x + y) dy`` for every coset of Z_p meeting supp(f)."""
    p, m, k = f.p, f.m, f.k
    blocks = f.coeffs.reshape(p**k, p**m)  # row t, column r: n = t * p**m + r
    masses = blocks.sum(axis=0) * float(p) ** -k
    present = np.any(blocks != 0, axis=0)
    return {
        PrueferElement(p, r, m): complex(masses[r])
        for r in range(p**m)
        if present[r]
    }
