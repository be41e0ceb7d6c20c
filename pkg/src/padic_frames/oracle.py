"""Brute-force checks of the spectral frame characterisation.

Everything here is computed along a second route that does not go
through the symbol shortcut: translates are materialised and inner
products taken in L2(G), trigonometric polynomials are evaluated
character by character, and Gram matrices are diagonalised numerically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from . import kernels
from .config import MATRIX_CAP, TOL_REL
from .padic import GroupContext, PAdicRational, PrueferElement, Section, character
from .spectral import cross_symbol, fourier_coefficients, frame_report, spectral_symbol
from .stepfn import StepFunction, inner, refine, zero
from .translates import translate

__all__ = [
    "TrigPolynomial",
    "GramMatrix",
    "CheckReport",
    "InequalityReport",
    "synthesize",
    "frame_sum",
    "frame_sum_direct",
    "gram_matrix",
    "hermitian_eigenvalues",
    "check_lemma_21",
    "check_lemma_22",
    "check_frame_inequality",
    "class_polynomial",
    "random_stepfunction",
    "random_trig_polynomial",
    "random_section",
    "symbol_integral",
]


@dataclass(frozen=True)
class TrigPolynomial:
    """``eta -> sum c[x] * conj((x, eta))`` over a finite set of cosets [x]."""

    context: GroupContext
    coeffs: Mapping[PrueferElement, complex] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[PrueferElement, complex] = {}
        for key, c in dict(self.coeffs).items():
            key = PrueferElement.parse(self.context.p, key)
            clean[key] = clean.get(key, 0j) + complex(c)
        object.__setattr__(self, "coeffs", clean)

    @property
    def level(self) -> int:
        return max((x.level for x in self.coeffs), default=0)

    def evaluate(self, level: int | None = None) -> np.ndarray:
        """Values on the classes ``eta = e (mod p**level)``, one character at a time."""
        level = self.level if level is None else level
        if level < self.level:
            raise ValueError("evaluation level below the polynomial's level")
        p = self.context.p
        out = np.zeros(p**level, dtype=np.complex128)
        for e in range(p**level):
            eta = PAdicRational(p, e)
            out[e] = sum(
                (c * character(x.representative(), eta).conjugate()
                 for x, c in self.coeffs.items()),
                0j,
            )
        return out


@dataclass(frozen=True, eq=False)
class GramMatrix:
    level: int
    entries: np.ndarray


@dataclass(frozen=True)
class CheckReport:
    lhs: float
    rhs: float
    rel_error: float
    passed: bool
    seed: int | None = None

    def to_json(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "rel_error": self.rel_error,
                "pass": self.passed, "seed": self.seed}


@dataclass(frozen=True)
class InequalityReport:
    A: float
    B: float
    trials: int
    violations: int
    max_lower_slack: float
    max_upper_slack: float
    passed: bool
    seed: int | None = None

    def to_json(self) -> dict:
        return {"A": self.A, "B": self.B, "trials": self.trials,
                "violations": self.violations, "max_lower_slack": self.max_lower_slack,
                "max_upper_slack": self.max_upper_slack, "pass": self.passed,
                "seed": self.seed}


def _rel_error(a: float, b: float) -> float:
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0.0 else abs(a - b) / scale


def synthesize(f: StepFunction, theta: TrigPolynomial, section: Section) -> StepFunction:
    """``sum c[x] * translate(f, [x])``."""
    level = max(f.m, theta.level)
    f.context.check_level(level + f.k)
    total = zero(f.context, level, f.k)
    for x, c in theta.coeffs.items():
        total = total + c * refine(translate(f, x, section), level, f.k)
    return total


def symbol_integral(weight: np.ndarray, phi_values: np.ndarray, phi_level: int,
                    p: int, weight_level: int) -> complex:
    """``∫ weight * phi`` with both given as class values at their own levels."""
    level = max(phi_level, weight_level)
    e = np.arange(p**level)
    w = weight[e % p**weight_level]
    ph = phi_values[e % p**phi_level]
    return complex(np.sum(w * ph)) * float(p) ** -level


def frame_sum(g: StepFunction, f: StepFunction, section: Section) -> float:
    """``sum over [x] of |<g, translate(f, [x])>|**2`` via the cross symbol."""
    coeffs = fourier_coefficients(cross_symbol(g, f, section))
    return float(sum(abs(c) ** 2 for c in coeffs.values()))


def frame_sum_direct(g: StepFunction, f: StepFunction, section: Section,
                     level: int | None = None) -> float:
    """Same sum by enumerating translates up to ``level`` (default: where it is exhaustive)."""
    level = max(g.m, f.m) if level is None else level
    p = f.p
    total = 0.0
    for r in range(p**level):
        x = PrueferElement(p, r, level)
        total += abs(inner(g, translate(f, x, section))) ** 2
    return total


def gram_matrix(f: StepFunction, section: Section, level: int,
                cap: int = MATRIX_CAP) -> GramMatrix:
    """Entries ``<translate(f, x_j), translate(f, x_i)>`` over ``x_i = i / p**level``."""
    p = f.p
    size = p**level
    if size > cap:
        raise ValueError(f"Gram size {p}**{level} = {size} exceeds the cap {cap}")
    if level < f.m:
        raise ValueError(f"Gram level {level} is below the symbol level {f.m}")
    shifted = [translate(f, PrueferElement(p, i, level), section) for i in range(size)]
    res = max(s.m for s in shifted)
    coeffs = np.array([refine(s, res, f.k).coeffs for s in shifted])
    entries = (np.conj(coeffs) @ coeffs.T) * float(p) ** -f.k  # [i, j] = <t_j, t_i>
    i = np.arange(size)
    ref = entries[(i[:, None] - i[None, :]) % size, 0]
    scale = max(1.0, float(np.max(np.abs(entries))))
    if np.max(np.abs(entries - ref)) > 1e-10 * scale:
        raise AssertionError("Gram matrix is not circulant over Z/p^level")
    return GramMatrix(level, entries)


def hermitian_eigenvalues(gram) -> np.ndarray:
    a = np.asarray(gram.entries if isinstance(gram, GramMatrix) else gram, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    scale = max(1.0, float(np.max(np.abs(a), initial=0.0)))
    if np.max(np.abs(a - a.conj().T), initial=0.0) > 1e-10 * scale:
        raise ValueError("matrix is not Hermitian")
    return kernels.jacobi_eigvalsh(a)


def _phi_and_theta(f, theta, section):
    phi = spectral_symbol(f, section)
    level = max(phi.level, theta.level)
    t2 = np.abs(theta.evaluate(level)) ** 2
    return phi, t2, level


def check_lemma_21(f: StepFunction, theta: TrigPolynomial, section: Section,
                   rtol: float = 1e-10, seed: int | None = None) -> CheckReport:
    """``||g_F||**2`` against ``∫ |Theta|**2 * Phi``."""
    g = synthesize(f, theta, section)
    lhs = inner(g, g).real
    phi, t2, level = _phi_and_theta(f, theta, section)
    rhs = symbol_integral(t2, phi.values, phi.level, f.p, level).real
    err = _rel_error(lhs, rhs)
    return CheckReport(lhs, rhs, err, err <= rtol, seed)


def check_lemma_22(f: StepFunction, theta: TrigPolynomial, section: Section,
                   rtol: float = 1e-10, seed: int | None = None) -> CheckReport:
    """``sum |<g_F, translate(f, x)>|**2`` against ``∫ |Theta|**2 * Phi**2``."""
    g = synthesize(f, theta, section)
    lhs = frame_sum(g, f, section)
    phi, t2, level = _phi_and_theta(f, theta, section)
    rhs = symbol_integral(t2, phi.values**2, phi.level, f.p, level).real
    err = _rel_error(lhs, rhs)
    return CheckReport(lhs, rhs, err, err <= rtol, seed)


def class_polynomial(context: GroupContext, level: int, e: int) -> TrigPolynomial:
    """The trigonometric polynomial equal to the indicator of ``e + p**level Z_p``."""
    p = context.p
    eta = PAdicRational(p, e)
    scale = float(p) ** -level
    return TrigPolynomial(context, {
        PrueferElement(p, r, level): scale * character(PAdicRational(p, r, level), eta)
        for r in range(p**level)
    })


def check_frame_inequality(f: StepFunction, section: Section, trials: int = 100,
                           seed: int = 0, tol_rel: float = TOL_REL,
                           max_terms: int = 9) -> InequalityReport:
    """Sample ``A ∫|T|**2 Phi <= ∫|T|**2 Phi**2 <= B ∫|T|**2 Phi`` over random T."""
    phi = spectral_symbol(f, section)
    report = frame_report(phi, tol_rel)
    rng = np.random.default_rng(seed)
    violations = 0
    lo_slack = hi_slack = 0.0
    for _ in range(trials):
        theta = random_trig_polynomial(f.context, rng, max_level=phi.level + 1,
                                       max_terms=max_terms)
        level = max(phi.level, theta.level)
        t2 = np.abs(theta.evaluate(level)) ** 2
        one = symbol_integral(t2, phi.values, phi.level, f.p, level).real
        two = symbol_integral(t2, phi.values**2, phi.level, f.p, level).real
        tol = 1e-9 * max(abs(two), report.B * abs(one), 1e-300)
        lo = report.A * one - two
        hi = two - report.B * one
        lo_slack = max(lo_slack, lo)
        hi_slack = max(hi_slack, hi)
        if lo > tol or hi > tol:
            violations += 1
    return InequalityReport(report.A, report.B, trials, violations, lo_slack, hi_slack,
                            violations == 0, seed)


# random inputs -------------------------------------------------------------

def random_stepfunction(context: GroupContext, rng: np.random.Generator,
                        m: int | None = None, k: int | None = None,
                        max_total: int = 4) -> StepFunction:
    max_total = min(max_total, context.max_level)
    if m is None:
        m = int(rng.integers(0, max_total + 1))
    if k is None:
        k = int(rng.integers(0, max_total - m + 1))
    n = context.p ** (m + k)
    coeffs = rng.normal(size=n) + 1j * rng.normal(size=n)
    if not np.any(coeffs):
        coeffs[0] = 1.0
    return StepFunction(context, m, k, coeffs)


def random_trig_polynomial(context: GroupContext, rng: np.random.Generator,
                           max_level: int = 2, max_terms: int = 9) -> TrigPolynomial:
    p = context.p
    n_terms = int(rng.integers(1, max_terms + 1))
    coeffs = {}
    for _ in range(n_terms):
        level = int(rng.integers(0, max_level + 1))
        x = PrueferElement(p, int(rng.integers(0, p**level)), level)
        coeffs[x] = complex(rng.normal(), rng.normal())
    return TrigPolynomial(context, coeffs)


def random_section(context: GroupContext, rng: np.random.Generator,
                   level: int = 3, n_offsets: int = 4) -> Section:
    """A non-canonical section with a few integer offsets on low-level representatives."""
    p = context.p
    offsets = {}
    for _ in range(n_offsets):
        lev = int(rng.integers(0, level + 1))
        sigma = PAdicRational(p, int(rng.integers(0, p**lev)), lev)
        offsets[sigma] = PAdicRational(p, int(rng.integers(1, 50)))
    return Section(context, offsets)
