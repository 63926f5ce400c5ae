"""Certify a grid of parameters with the iterated-curve test and tally the outcomes."""

import argparse
from collections import Counter

from indzero.certify import scan_grid

if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--d", type=int, default=9)
    ap.add_argument("--res", type=int, default=40)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    res = scan_grid(args.d, (-0.06, 0.06, 0.001, 0.08), args.res, threads=args.threads)
    status = Counter(st.value for _, _, st, _ in res.rows())
    ceil = Counter(c for _, _, st, c in res.rows() if c is not None)
    print("status:", dict(status))
    print("ceil(tau*):", dict(sorted(ceil.items())))
