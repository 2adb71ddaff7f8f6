"""Schoolbook vs Kronecker multiplication on pod_{-4} series of growing length."""

import argparse
import time

from podlab import pseries as ps
from podlab.partitions import pod_series


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[250, 500, 1000, 2000])
    ap.add_argument("--mod", type=int, default=None)
    args = ap.parse_args()

    print(f"{'N':>6} {'schoolbook':>11} {'kronecker':>10}  identical")
    for N in args.sizes:
        a = pod_series(4, N)
        b = pod_series(3, N)
        if args.mod:
            a, b = ps.reduce(a, args.mod), ps.reduce(b, args.mod)
        x, t_school = timed(lambda: ps.mul(a, b))
        y, t_kron = timed(lambda: ps.mul(a, b, method="kronecker"))
        print(f"{N:>6} {t_school:>10.3f}s {t_kron:>9.3f}s  {x == y}")


if __name__ == "__main__":
    main()
