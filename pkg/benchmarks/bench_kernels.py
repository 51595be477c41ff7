"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import timeit

from ppforge import _backend
from ppforge._backend import pure


def _cases():
    rng = random.Random(0)
    f = [rng.randint(-10**6, 10**6) for _ in range(200)]
    g = [rng.randint(-10**6, 10**6) for _ in range(200)]
    h = [1] + g[1:]
    wp = 2000
    q = (1 << wp) // 23
    prec = 400
    xs = [rng.getrandbits(prec) for _ in range(4)]
    c = [rng.randint(-1000, 1000) or 1 for _ in range(4)]
    planted = xs + [-sum(a * b for a, b in zip(c, xs))]
    return {
        "seidel_zigzag(600)": lambda k: k.seidel_zigzag(600),
        "egf_multiply(200 terms)": lambda k: k.egf_multiply(f, g, 200),
        "egf_divide(200 terms)": lambda k: k.egf_divide(f, h, 200),
        "lambert_fixed(k=13, 600 digits)": lambda k: k.lambert_fixed(13, q, wp, 500),
        "pslq_fixed(5 values, 120 digits)": lambda k: k.pslq_fixed(list(planted), prec, 1 << 60, 20000, 10**8),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    compiled = _backend.compiled
    print(f"selected backend: {_backend.BACKEND}")
    print(f"{'kernel':36s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for name, call in _cases().items():
        t_py = min(timeit.repeat(lambda: call(pure), number=1, repeat=args.repeat)) * 1e3
        if compiled is None:
            print(f"{name:36s} {t_py:10.2f} {'-':>10s} {'-':>8s}")
            continue
        assert call(compiled) == call(pure), name
        t_c = min(timeit.repeat(lambda: call(compiled), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:36s} {t_py:10.2f} {t_c:10.2f} {t_py / t_c:7.2f}x")


if __name__ == "__main__":
    main()
