"""Benchmark the compiled convolution kernel against the pure Python twin.

Usage: python3 benchmarks/bench_kernel.py --seed 7 [--sizes 64,256,1024]
"""

import argparse
import random
import sys
import time

from vvmf._kernel import _convolve_py

try:
    from vvmf._kernel import _convolve
except ImportError:
    _convolve = None


def best_time(fn, a, b, n_out, repeats):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(a, b, n_out)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, required=True, help="RNG seed for the inputs")
    ap.add_argument("--sizes", default="64,256,1024", help="comma list of operand lengths")
    ap.add_argument("--repeats", type=int, default=5, help="runs per case, best is kept")
    ap.add_argument("--digits", type=int, default=18, help="decimal digits per coefficient")
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    bound = 10 ** args.digits
    sizes = [int(s) for s in args.sizes.split(",") if s]

    if _convolve is None:
        print("compiled kernel unavailable, timing pure python only")
    print("%8s %12s %12s %8s" % ("n", "python (s)", "c (s)", "speedup"))
    for n in sizes:
        a = [rng.randrange(-bound, bound) for _ in range(n)]
        b = [rng.randrange(-bound, bound) for _ in range(n)]
        n_out = 2 * n - 1
        t_py, out_py = best_time(_convolve_py.convolve, a, b, n_out, args.repeats)
        if _convolve is None:
            print("%8d %12.6f %12s %8s" % (n, t_py, "-", "-"))
            continue
        t_c, out_c = best_time(_convolve.convolve, a, b, n_out, args.repeats)
        if list(out_c) != out_py:
            print("backends disagree at n=%d" % n, file=sys.stderr)
            return 1
        print("%8d %12.6f %12.6f %7.1fx" % (n, t_py, t_c, t_py / t_c))
    return 0


if __name__ == "__main__":
    sys.exit(main())
