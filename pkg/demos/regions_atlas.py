"""Draw the zero-free regions for one d and print a few landmarks."""

import argparse
import math

from indzero import regions as R
from indzero.cli import main


def landmarks(d):
    print(f"d = {d}")
    print(f"  Shearer radius      {R.shearer_radius(d):.12g}")
    print(f"  uniqueness point    {R.uniqueness_threshold(d):.12g}")
    print(f"  tan(pi/(2d))        {math.tan(math.pi / (2 * d)):.12g}")
    print(f"  theta_d             {R.theta_d(d):.12g}")
    print(f"  critical theta_max  {R.critical_theta_max(d):.12g}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--d", type=int, default=9)
    ap.add_argument("--out", default="atlas.svg")
    args = ap.parse_args()
    landmarks(args.d)
    raise SystemExit(main(["atlas", "--d", str(args.d), "--out", args.out]))
