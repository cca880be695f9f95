"""Write the theta(x, h) curves for h = 1..x as CSV files, one per x."""
import argparse
import csv
from pathlib import Path

from sumgrowth.theta import argmax_h, theta_curve


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--x", type=int, nargs="+", default=[48, 1000])
    ap.add_argument("--digits", type=int, default=6)
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    for x in args.x:
        path = args.out / f"theta_curve_{x}.csv"
        with path.open("w", newline="") as f:
            w = csv.writer(f, lineterminator="\n")
            w.writerow(["h", "theta_lo", "theta_hi"])
            for h, enc in theta_curve(x, args.digits):
                w.writerow([h, *enc.decimal(args.digits)])
        h, val = argmax_h(x)
        lo, hi = val.decimal.decimal(args.digits)
        print(f"{path}: {x} rows, peak at h={h}, theta in [{lo}, {hi}]")


if __name__ == "__main__":
    main()
