#!/usr/bin/env python3
"""Search seeded instances for the smallest one failing a named check and print it.

The instance is written in the .strips format so it can be fed straight back
into ``relaxlp verify`` or ``relaxlp encode``.

    python scripts/counterexample.py "acyc:"
    python scripts/counterexample.py "pc-plans [min-degree]" --tries 2000
"""
import argparse
import sys

from relaxlp.generate import InstanceShape, random_relaxed
from relaxlp.strips import format_problem
from relaxlp.verify import verify_instance


def size(problem):
    return (len(problem.actions), len(problem.atoms),
            sum(len(a.pre) + len(a.add) for a in problem.actions))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("check", help="prefix of a check name, as printed by `relaxlp verify`")
    ap.add_argument("--tries", type=int, default=1000)
    ap.add_argument("--atoms", type=int, default=4)
    ap.add_argument("--actions", type=int, default=4)
    args = ap.parse_args()

    shape = InstanceShape(args.atoms, args.actions)
    best = None
    for seed in range(args.tries):
        problem = random_relaxed(seed, shape)
        if best and size(problem) >= size(best[1]):
            continue
        rep = verify_instance(problem)
        hit = [c for c in rep.failures() if c.name.startswith(args.check)]
        if hit:
            best = (seed, problem, hit[0])
    if best is None:
        print(f"no failure of {args.check!r} in {args.tries} instances", file=sys.stderr)
        return 1
    seed, problem, check = best
    print(f"# seed {seed}: FAIL {check.name}")
    if check.detail:
        print(f"# {check.detail}")
    print(format_problem(problem), end="")
    return 0


if __name__ == "__main__":
    sys.exit(main())
