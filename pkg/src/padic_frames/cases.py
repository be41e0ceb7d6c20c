"""The four worked examples on Q_p and their closed-form frame constants."""

from __future__ import annotations

import math

import numpy as np

from .config import MATRIX_CAP, TOL_REL
from .oracle import gram_matrix, hermitian_eigenvalues
from .padic import GroupContext, PAdicRational, Section
from .spectral import frame_report, spectral_symbol
from .stepfn import StepFunction, indicator, inner

__all__ = ["EXAMPLES", "build_function", "closed_form", "run_example", "UsageError"]

EXAMPLES = ("twoH", "twoH2", "cH", "cH2")

CH2_NOTE = (
    "stated symbol is 1 on -sigma_0 + cZ_p, but fhat = n * 1[cZ_p] gives n**2 there, "
    "as integral(Phi) = ||f||**2 = n requires; reporting the computed value"
)


class UsageError(ValueError):
    pass


def _validate(name: str, p: int, level: int) -> None:
    if name not in EXAMPLES:
        raise UsageError(f"unknown example {name!r}; choose from {', '.join(EXAMPLES)}")
    if level < 1:
        raise UsageError(f"{name} needs n/m >= 1, got {level}")
    if name == "twoH" and p == 2:
        raise UsageError("twoH requires an odd prime p")
    if name == "twoH2" and p != 2:
        raise UsageError("twoH2 requires p = 2")


def build_function(name: str, ctx: GroupContext, level: int) -> StepFunction:
    """The generating function of an example; ``level`` is n (twoH*) or m (cH*)."""
    _validate(name, ctx.p, level)
    p = ctx.p
    if name in ("twoH", "twoH2"):
        a = PAdicRational(p, 1, level)  # [a] has order p**level
        return indicator(ctx, 0) + indicator(ctx, a)
    if name == "cH":
        return math.sqrt(p**level) * indicator(ctx, 0, level)
    return _ball(ctx, level)


def _ball(ctx: GroupContext, m: int) -> StepFunction:
    """Indicator of ``p**-m Z_p``."""
    p = ctx.p
    return StepFunction(ctx, m, 0, np.ones(p**m))


def closed_form(name: str, p: int, level: int) -> dict:
    """Frame constants as stated for each example."""
    if name == "twoH":
        return {"A": 2 - 2 * math.cos(math.pi / p**level), "B": 4.0, "zero_measure": 0.0}
    if name == "twoH2":
        return {"A": 2 - 2 * math.cos(math.pi / 2 ** (level - 1)), "B": 4.0,
                "zero_measure": 2.0**-level}
    n = p**level
    if name == "cH":
        return {"A": 1.0, "B": 1.0, "zero_measure": 0.0}
    return {"A": 1.0, "B": 1.0, "zero_measure": (n - 1) / n}


def run_example(name: str, p: int, level: int, section: Section | None = None,
                tol_rel: float = TOL_REL, matrix_cap: int = MATRIX_CAP,
                max_level: int | None = None) -> tuple[dict, object]:
    """Compute the symbol, frame report and Gram spectrum of one example.

    Returns the JSON-ready report and the spectral symbol.
    """
    _validate(name, p, level)
    ctx = GroupContext(p, max_level or 0) if section is None else section.context
    if ctx.p != p:
        raise UsageError(f"section is for p = {ctx.p}, example asks for p = {p}")
    section = section or Section(ctx)
    f = build_function(name, ctx, level)
    phi = spectral_symbol(f, section)
    report = frame_report(phi, tol_rel)
    expected = closed_form(name, p, level)

    out = {"example": name, "p": p, "n_or_m": level,
           "section": "canonical" if section.is_canonical else "offsets"}
    out.update(report.to_json())
    out["expected"] = expected
    checks = {
        "A": abs(report.A - expected["A"]) <= 1e-9,
        "B": abs(report.B - expected["B"]) <= 1e-9,
        "zero_measure": abs(report.zero_measure - expected["zero_measure"]) <= 1e-9,
    }
    norm2 = inner(f, f).real
    out["norm_sq"] = norm2
    out["phi_integral"] = phi.integral().real

    if name == "cH2":
        n = p**level
        support = np.asarray(phi.values) > tol_rel * float(np.max(phi.values))
        amp = float(np.max(phi.values))
        out["computed_amplitude"] = amp
        out["stated_amplitude"] = 1.0
        out["corrected_amplitude"] = float(n * n)
        out["amplitude_matches_stated"] = abs(amp - 1.0) <= 1e-9
        out["amplitude_matches_corrected"] = abs(amp - n * n) <= 1e-9 * n * n
        out["support_measure"] = float(np.count_nonzero(support)) * float(p) ** -phi.level
        out["discrepancy"] = None if out["amplitude_matches_stated"] else CH2_NOTE
        checks["A"] = out["amplitude_matches_stated"]
        checks["B"] = out["amplitude_matches_stated"]
    out["checks"] = checks
    out["match_paper"] = all(checks.values())

    M = max(level, 1, phi.level)
    if p**M <= matrix_cap:
        eig = hermitian_eigenvalues(gram_matrix(f, section, M, matrix_cap))
        predicted = np.sort(phi.at_level(M))
        tol = 1e-8 * max(1.0, report.B)
        in_range = np.all(((eig >= report.A - tol) & (eig <= report.B + tol)) | (np.abs(eig) <= tol))
        out["gram"] = {
            "level": M,
            "eig_min": float(eig[0]),
            "eig_max": float(eig[-1]),
            "max_diff_vs_phi": float(np.max(np.abs(eig - predicted))),
            "within_bounds": bool(in_range),
        }
    else:
        out["gram"] = None
    return out, phi
