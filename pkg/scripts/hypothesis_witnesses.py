"""Summarize the exploration queries: which hypotheses fail on unreached
pairs, whether a weak-but-not-full filtration exists, and solid gaps."""

import argparse
import json
from collections import Counter

from topofilt import verify as vf


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3)
    args = ap.parse_args()

    rep = vf.explore("UNREACHED_PAIRS", args.n)
    reasons = Counter(tuple(r["failed_hypotheses"]) for r in rep["results"])
    print(f"unreached pairs at n={args.n}: {rep['count']}")
    for why, k in sorted(reasons.items(), key=lambda kv: -kv[1]):
        print(f"  {k:5}  {', '.join(why) or '(no listed hypothesis fails)'}")

    rep = vf.explore("WEAK_NOT_FULL", args.n)
    print("weak but not full:", json.dumps(rep["results"][0]) if rep["results"] else rep["note"])

    rep = vf.explore("SOLID_GAP", args.n)
    print(f"solid gaps (first {rep['count']} in scan order)")


if __name__ == "__main__":
    main()
