#!/usr/bin/env python3
"""Run every correspondence check over a range of seeded random instances and tally results.

    python scripts/sweep.py --count 200
    python scripts/sweep.py --count 50 --atoms 4 --actions 5 --extended
"""
import argparse
import time
from collections import Counter

from relaxlp.generate import InstanceShape, random_relaxed
from relaxlp.verify import verify_instance


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--atoms", type=int, default=6)
    ap.add_argument("--actions", type=int, default=6)
    ap.add_argument("--max-cost", type=int, default=3)
    ap.add_argument("--density", type=float, default=0.3)
    ap.add_argument("--extended", action="store_true")
    args = ap.parse_args()

    shape = InstanceShape(args.atoms, args.actions, args.max_cost, args.density)
    passed, total = Counter(), Counter()
    first_fail = {}
    start = time.perf_counter()
    for seed in range(args.seed, args.seed + args.count):
        rep = verify_instance(random_relaxed(seed, shape), extended=args.extended)
        for c in rep.checks:
            total[c.name] += 1
            passed[c.name] += c.passed
            if not c.passed:
                first_fail.setdefault(c.name, seed)
    elapsed = time.perf_counter() - start

    width = max(map(len, total))
    for name in total:
        note = f"  first failing seed {first_fail[name]}" if name in first_fail else ""
        print(f"{name:<{width}}  {passed[name]:>4}/{total[name]}{note}")
    print(f"{args.count} instances in {elapsed:.1f}s")


if __name__ == "__main__":
    main()
