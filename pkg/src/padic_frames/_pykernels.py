"""Pure numpy implementations of the numerical kernels.

These are the fallback used when the compiled ``_ckernels`` extension is
not available, and the reference the extension is benchmarked against.
"""

import numpy as np

# rows of the naive DFT processed per block; bounds the index table to
# _BLOCK * N int64 entries
_BLOCK = 256


def twiddles(n, sign):
    """``exp(sign * 2*pi*i * t / n)`` for t = 0..n-1 from exact integers t."""
    t = np.arange(n, dtype=np.float64)
    return np.exp(sign * 2j * np.pi * (t / n))


def dft(x, sign):
    x = np.asarray(x, dtype=np.complex128)
    n = x.shape[0]
    w = twiddles(n, sign)
    idx = np.arange(n, dtype=np.int64)
    out = np.empty(n, dtype=np.complex128)
    for start in range(0, n, _BLOCK):
        rows = idx[start:start + _BLOCK]
        out[start:start + _BLOCK] = w[np.outer(rows, idx) % n] @ x
    return out


def fft_radix(x, p, sign):
    """Radix-p Stockham FFT of a length p**L vector (unnormalised)."""
    x = np.asarray(x, dtype=np.complex128)
    n = x.shape[0]
    w = twiddles(n, sign)
    r = np.arange(p, dtype=np.int64)
    # X[j, c]: length-`size` DFT of the subsequence x[c::n // size]
    X = x.reshape(1, n)
    size = 1
    while size < n:
        stride = n // (size * p)
        old = X.reshape(size, p, stride)
        j = np.arange(size * p, dtype=np.int64)
        tw = w[(np.outer(r, j) * stride) % n]  # (p, size*p)
        X = np.einsum("rj,jrc->jc", tw, old[j % size])
        size *= p
    return X.reshape(n)


def jacobi_eigvalsh(a, tol=1e-13, max_sweeps=60):
    """Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations."""
    a = np.array(a, dtype=np.complex128, copy=True)
    n = a.shape[0]
    scale = np.sqrt(np.sum(np.abs(a) ** 2))
    if n <= 1 or scale == 0.0:
        return np.sort(np.real(np.diag(a)))
    offdiag = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.abs(a[offdiag]) ** 2))
        if off <= tol * scale:
            break
        for i in range(n - 1):
            for j in range(i + 1, n):
                b = a[i, j]
                mag = abs(b)
                if mag <= 1e-300:
                    continue
                phase = b / mag
                theta = (a[j, j].real - a[i, i].real) / (2.0 * mag)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # columns: A <- A V with V = [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
                ci = a[:, i].copy()
                cj = a[:, j] * np.conj(phase)
                a[:, i] = c * ci - s * cj
                a[:, j] = s * ci + c * cj
                ri = a[i, :].copy()
                rj = a[j, :] * phase
                a[i, :] = c * ri - s * rj
                a[j, :] = s * ri + c * rj
                a[i, j] = 0.0
                a[j, i] = 0.0
    return np.sort(np.real(np.diag(a)))
