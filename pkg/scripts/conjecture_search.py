"""Bounded search for 5-element A in Z with |5A| = 100 and extreme |4A| or |6A|.

Reports "no counterexample within radius R" when min |4A| = 63 and
max |6A| = 145; a search can never verify the conjecture.
"""
import argparse
import json
import time

from sumgrowth.sumset import extremal_search


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--radius", type=int, default=60, help="largest element after normalization")
    ap.add_argument("--size", type=int, default=5)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--budget", type=int, default=50_000_000)
    args = ap.parse_args()

    t = time.perf_counter()
    lo = extremal_search(5, 4, 100, args.size, args.radius, budget=args.budget,
                         workers=args.workers)
    hi = extremal_search(5, 6, 100, args.size, args.radius, budget=args.budget,
                         workers=args.workers)
    counter = (lo.best is not None and lo.best < 63) or (hi.best is not None and hi.best > 145)
    print(json.dumps({
        "radius": args.radius,
        "size": args.size,
        "min_4A": lo.to_dict(),
        "max_6A": hi.to_dict(),
        "verdict": ("counterexample found" if counter
                    else f"no counterexample within radius {args.radius}"),
        "seconds": round(time.perf_counter() - t, 2),
    }, indent=2))


if __name__ == "__main__":
    main()
