"""Check theta(x, h) >= c over an h-range, timing exact versus screened modes."""
import argparse
import time
from fractions import Fraction

from sumgrowth.theta import region_check


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--x", type=int, default=10**6)
    ap.add_argument("--h-lo", type=int, default=6)
    ap.add_argument("--h-hi", type=int, default=None, help="default x/2 - 19")
    ap.add_argument("--ge", type=Fraction, default=Fraction(2))
    ap.add_argument("--method", choices=["auto", "exact", "screened"], default="auto")
    args = ap.parse_args()

    h_hi = args.h_hi if args.h_hi is not None else args.x // 2 - 19
    t = time.perf_counter()
    res = region_check(args.x, args.h_lo, h_hi, args.ge, method=args.method)
    dt = time.perf_counter() - t
    print(f"x={args.x} h in [{args.h_lo},{h_hi}] theta >= {args.ge}: ok={res.ok} "
          f"first_failure={res.first_failure} exact_checks={res.exact_checks} ({dt:.1f} s)")
    if res.ok and h_hi < args.x:
        nxt = region_check(args.x, h_hi + 1, h_hi + 1, args.ge, method=args.method)
        print(f"next h={h_hi + 1}: ok={nxt.ok}")


if __name__ == "__main__":
    main()
