"""Run every property check for a range of ground sizes and print a table."""

import argparse

from topofilt import verify as vf


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    print(f"{'property':34} {'n':>2} {'outcome':12} {'checked':>8} {'secs':>7}")
    failed = False
    for n in range(1, args.max_n + 1):
        for r in vf.check_all(n, jobs=args.jobs):
            failed |= r.outcome == vf.FAIL
            print(f"{r.property_id:34} {n:>2} {r.outcome:12} {r.instances_checked:>8} {r.elapsed:>7.2f}")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
