"""Run the full registry at one or more precisions and write the JSON reports.

    python scripts/run_checks.py --precision 500 1500 --alpha-max 4 --out reports/
"""

import argparse
import time
from pathlib import Path

from podlab.congruences import CheckParams, run_all, serialize


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--precision", type=int, nargs="+", default=[500])
    ap.add_argument("--alpha-max", type=int, default=3)
    ap.add_argument("--out", type=Path, default=Path("reports"))
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    for N in args.precision:
        t0 = time.perf_counter()
        reports = run_all(CheckParams(precision=N, alpha_max=args.alpha_max))
        path = args.out / f"checks_N{N}_a{args.alpha_max}.json"
        path.write_text(serialize(reports) + "\n")
        passed = sum(r.passed for r in reports)
        print(f"N={N:<6} {passed}/{len(reports)} passed  {time.perf_counter() - t0:6.1f}s  -> {path}")


if __name__ == "__main__":
    main()
