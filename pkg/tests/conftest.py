import numpy as np
import pytest

from padic_frames import GroupContext, Section
from padic_frames.padic import PAdicRational
from padic_frames.stepfn import StepFunction


@pytest.fixture(params=[2, 3, 5])
def ctx(request):
    return GroupContext(request.param)


@pytest.fixture
def rng():
    return np.random.default_rng(20261018)


def brute_fourier(f: StepFunction) -> np.ndarray:
    """Transform by summing characters cell by cell; shares no code with the DFT kernels."""
    from padic_frames.padic import character

    p, m, k = f.p, f.m, f.k
    out = []
    for j in range(p ** (m + k)):
        gamma = PAdicRational(p, j, k)
        acc = 0j
        for n, c in enumerate(f.coeffs):
            if c:
                acc += c * character(PAdicRational(p, n, m), gamma).conjugate()
        out.append(acc * p**-k)
    return np.array(out)


def offset_section(ctx, pairs):
    p = ctx.p
    return Section(ctx, {PAdicRational(p, num, exp): PAdicRational(p, d) for (num, exp), d in pairs})
