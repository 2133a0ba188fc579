"""Distribution of slowest-filtration distances over all comparable pairs.

For each n, counts how many pairs sigma <= tau reach tau after k steps and
how many stall below it.
"""

import argparse
from collections import Counter

from topofilt import filtration as fl
from topofilt.enumeration import PAIRS_MAX_N, enumerate_pairs


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=3, choices=range(1, PAIRS_MAX_N + 1))
    args = ap.parse_args()

    for n in range(1, args.max_n + 1):
        hist = Counter()
        for s, t in enumerate_pairs(n):
            d = fl.distance(s, t)
            hist["unreachable" if d is None else d] += 1
        reached = sorted(k for k in hist if k != "unreachable")
        cells = [f"{k}:{hist[k]}" for k in reached] + [f"unreachable:{hist['unreachable']}"]
        print(f"n={n} pairs={sum(hist.values())} " + " ".join(cells))


if __name__ == "__main__":
    main()
