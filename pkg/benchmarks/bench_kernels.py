"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Prints one line per (kernel, size) with the best wall time of each
backend and the speedup.  Both backends are imported directly so the
comparison does not depend on PADIC_FRAMES_PURE_PYTHON.
"""

import argparse
import timeit

import numpy as np

from padic_frames import _pykernels

try:
    from padic_frames import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def cases(rng):
    for p, e in [(2, 8), (2, 12), (3, 5), (3, 7), (5, 4), (7, 4)]:
        x = rng.normal(size=p**e) + 1j * rng.normal(size=p**e)
        if p**e <= 729:
            yield "dft", f"{p}^{e}", (x, -1)
        yield "fft_radix", f"{p}^{e}", (x, p, -1)
    for n in (27, 81, 125, 243):
        a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        yield "jacobi_eigvalsh", f"{n}x{n}", (a + a.conj().T,)


def best(fn, args, repeat):
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':<16} {'size':>8} {'numpy [s]':>11} {'cython [s]':>11} {'speedup':>8}")
    for name, size, fargs in cases(rng):
        t_py = best(getattr(_pykernels, name), fargs, args.repeat)
        if _ckernels is None:
            print(f"{name:<16} {size:>8} {t_py:>11.2e} {'n/a':>11} {'':>8}")
            continue
        t_c = best(getattr(_ckernels, name), fargs, args.repeat)
        print(f"{name:<16} {size:>8} {t_py:>11.2e} {t_c:>11.2e} {t_py / t_c:>7.1f}x")


if __name__ == "__main__":
    main()
