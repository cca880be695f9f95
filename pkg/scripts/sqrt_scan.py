"""theta(x, floor(sqrt x)) on a logarithmic grid of x, as CSV.

Evidence only: the values creep toward e but nothing here proves a limit.
"""
import argparse
import csv
import math
import sys

from sumgrowth.arith import e_enclosure
from sumgrowth.theta import theta_value


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-exp", type=float, default=6.0, help="scan up to x = 10^max-exp")
    ap.add_argument("--per-decade", type=int, default=4)
    ap.add_argument("--digits", type=int, default=8)
    args = ap.parse_args()

    steps = int(round((args.max_exp - 2) * args.per_decade))
    xs = sorted({int(round(10 ** (2 + k / args.per_decade))) for k in range(steps + 1)})
    e_lo, e_hi = e_enclosure(args.digits + 2).decimal(args.digits)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["x", "h", "theta_lo", "theta_hi", "gap_to_e_lo"])
    for x in xs:
        h = math.isqrt(x)
        enc = theta_value(x, h, args.digits).decimal
        lo, hi = enc.decimal(args.digits)
        gap = e_enclosure(args.digits + 2).lo - enc.hi
        w.writerow([x, h, lo, hi, f"{float(gap):.3e}"])
    print(f"# e in [{e_lo}, {e_hi}]", file=sys.stderr)


if __name__ == "__main__":
    main()
