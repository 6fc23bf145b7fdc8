"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from eccad import _kernels_py

try:
    from eccad import _ckernels
except ImportError:
    _ckernels = None


def workloads(rng):
    deg = 60
    p = [rng.randint(-(2**40), 2**40) for _ in range(deg + 1)]
    # squarefree with many real roots in [0, 1): product of (k x - j) factors
    roots = [1]
    for j in range(1, 13):
        roots = [a * 13 - b * j for a, b in zip(roots + [0], [0] + roots)]
        roots = [-c for c in roots]
    a = {rng.randint(0, 1 << 40): rng.randint(-99, 99) for _ in range(120)}
    b = {rng.randint(0, 1 << 40): rng.randint(-99, 99) for _ in range(120)}
    f = [rng.randint(-999, 999) for _ in range(41)]
    g = [rng.randint(-999, 999) for _ in range(17)]
    return {
        "mul_terms": ("mul_terms", (a, b)),
        "dup_shift1": ("dup_shift1", (p,)),
        "sign_variations": ("sign_variations", (p * 20,)),
        "dup_eval_scaled": ("dup_eval_scaled", (p, 12345, 678)),
        "descartes_01": ("descartes_01", (roots,)),
        "dup_prem": ("dup_prem", (f, g)),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    jobs = workloads(random.Random(args.seed))
    print(f"{'kernel':<16} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, (fn, fargs) in jobs.items():
        py = getattr(_kernels_py, fn)
        n = max(1, int(0.2 / max(timeit.timeit(lambda: py(*fargs), number=1), 1e-6)))
        t_py = min(timeit.repeat(lambda: py(*fargs), number=n, repeat=args.repeat)) / n
        if _ckernels is None:
            print(f"{name:<16} {t_py * 1e6:>8.1f}us {'-':>10} {'-':>8}")
            continue
        cy = getattr(_ckernels, fn)
        assert cy(*fargs) == py(*fargs), name
        t_cy = min(timeit.repeat(lambda: cy(*fargs), number=n, repeat=args.repeat)) / n
        print(f"{name:<16} {t_py * 1e6:>8.1f}us {t_cy * 1e6:>8.1f}us {t_py / t_cy:>7.2f}x")


if __name__ == "__main__":
    main()
