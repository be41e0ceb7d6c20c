# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels in ``_pykernels``.

Same signatures and contracts; twiddle factors are looked up by exact
integer index ``(n * j) % N`` so no phase recursion accumulates error.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, fabs

cnp.import_array()


def twiddles(Py_ssize_t n, int sign):
    t = np.arange(n, dtype=np.float64)
    return np.exp(sign * 2j * np.pi * (t / n))


def dft(x, int sign):
    cdef const double complex[::1] xv = np.ascontiguousarray(x, dtype=np.complex128)
    cdef Py_ssize_t n = xv.shape[0]
    cdef double complex[::1] w = twiddles(n, sign)
    out = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] ov = out
    cdef Py_ssize_t j, k, idx
    cdef double complex acc
    for j in range(n):
        acc = 0
        idx = 0
        for k in range(n):
            acc = acc + w[idx] * xv[k]
            idx += j
            if idx >= n:
                idx -= n
        ov[j] = acc
    return out


def fft_radix(x, int p, int sign):
    cdef double complex[::1] src = np.array(x, dtype=np.complex128, copy=True)
    cdef Py_ssize_t n = src.shape[0]
    cdef double complex[::1] w = twiddles(n, sign)
    cdef double complex[::1] dst = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] tmp
    cdef Py_ssize_t size = 1, stride, j, c, r, jm, e, step
    cdef double complex acc
    # src holds X[j, c] row-major with shape (size, n // size)
    while size < n:
        stride = n // (size * p)
        for j in range(size * p):
            jm = j % size
            step = (j * stride) % n
            for c in range(stride):
                acc = 0
                e = 0
                for r in range(p):
                    acc = acc + w[e] * src[jm * p * stride + r * stride + c]
                    e += step
                    if e >= n:
                        e -= n
                dst[j * stride + c] = acc
        tmp = src
        src = dst
        dst = tmp
        size *= p
    return np.asarray(src)


def jacobi_eigvalsh(a, double tol=1e-13, int max_sweeps=60):
    arr = np.array(a, dtype=np.complex128, copy=True, order="C")
    cdef double complex[:, ::1] m = arr
    cdef Py_ssize_t n = m.shape[0]
    cdef Py_ssize_t i, j, k, sweep
    cdef double scale = 0.0, off, mag, theta, t, c, s
    cdef double complex b, phase, vi, vj
    for i in range(n):
        for j in range(n):
            scale += m[i, j].real * m[i, j].real + m[i, j].imag * m[i, j].imag
    scale = sqrt(scale)
    if n > 1 and scale > 0.0:
        for sweep in range(max_sweeps):
            off = 0.0
            for i in range(n):
                for j in range(n):
                    if i != j:
                        off += m[i, j].real * m[i, j].real + m[i, j].imag * m[i, j].imag
            if sqrt(off) <= tol * scale:
                break
            for i in range(n - 1):
                for j in range(i + 1, n):
                    b = m[i, j]
                    mag = sqrt(b.real * b.real + b.imag * b.imag)
                    if mag <= 1e-300:
                        continue
                    phase = b / mag
                    theta = (m[j, j].real - m[i, i].real) / (2.0 * mag)
                    if fabs(theta) > 1e150:
                        t = 0.5 / theta
                    else:
                        t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                        if theta < 0:
                            t = -t
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    for k in range(n):
                        vi = m[k, i]
                        vj = m[k, j] * phase.conjugate()
                        m[k, i] = c * vi - s * vj
                        m[k, j] = s * vi + c * vj
                    for k in range(n):
                        vi = m[i, k]
                        vj = m[j, k] * phase
                        m[i, k] = c * vi - s * vj
                        m[j, k] = s * vi + c * vj
                    m[i, j] = 0
                    m[j, i] = 0
    return np.sort(np.real(np.diag(arr)))
