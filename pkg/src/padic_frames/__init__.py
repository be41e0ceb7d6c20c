"""Frames of translates on the p-adic numbers.

The group is G = Q_p with compact open subgroup H = Z_p.  Functions are
finite-resolution step functions, the Fourier transform is an exactly
index-mapped DFT, and the frame bounds of the translate system are read
off the spectral symbol and cross-checked against Gram matrices.
"""

from .padic import (
    GroupContext,
    PAdicRational,
    PrueferElement,
    Section,
    character,
    fractional_part,
    pruefer_add,
    section_decompose,
    valuation,
)
from .stepfn import StepFunction, indicator, inner, refine, weil_periodize
from .fourier import fourier, fourier_fast, inverse_fourier
from .translates import pointwise_shift, translate, w_symbol
from .spectral import (
    FrameReport,
    SpectralSymbol,
    cross_symbol,
    fourier_coefficients,
    frame_report,
    spectral_symbol,
)
from .oracle import (
    GramMatrix,
    TrigPolynomial,
    check_frame_inequality,
    check_lemma_21,
    check_lemma_22,
    frame_sum,
    frame_sum_direct,
    gram_matrix,
    hermitian_eigenvalues,
    synthesize,
)
from .kernels import BACKEND

__version__ = "0.1.0"
