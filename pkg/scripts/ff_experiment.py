#!/usr/bin/env python3
"""Finite-field sweep: shifted-square counts against p/2^k, and avoiding sets.

For each prime, prints the worst deviation |count - p/2^k| / sqrt(p) over
random shift tuples, then tries construct_avoiding_set on every (a, b, c)
with |a|, |b|, |c| <= R, c != 0, a + b + c != 0.
"""

import argparse
import itertools
import json
import random
import sys

from recurlab.errors import SizeShortfall, VerificationFailure
from recurlab.ffield import construct_avoiding_set, shifted_squares_intersection


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", default="101,499,997,1009")
    ap.add_argument("--kmax", type=int, default=3)
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--range", type=int, default=3, dest="R")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)
    primes = [int(p) for p in args.primes.split(",")]
    for p in primes:
        for k in range(1, args.kmax + 1):
            worst = max(abs(shifted_squares_intersection(p, rng.sample(range(p), k)) - p / 2**k)
                        for _ in range(args.trials))
            print(json.dumps({"p": p, "k": k, "worst_dev_over_sqrt_p": worst / p**0.5}))
    tally = {}
    R = range(-args.R, args.R + 1)
    for p in primes:
        for a, b, c in itertools.product(R, R, R):
            if c == 0 or a + b + c == 0:
                continue
            same = (a >= 0 and b >= 0 and c > 0) or (a <= 0 and b <= 0 and c < 0)
            try:
                cert = construct_avoiding_set(a, b, c, p)
                out = "ok"
                size = cert.size
            except VerificationFailure:
                out, size = "has-solutions", None
            except SizeShortfall as e:
                out, size = "too-small", e.best_size
            key = f"{'one-sign' if same else 'mixed'}/{out}"
            tally[key] = tally.get(key, 0) + 1
            print(json.dumps({"p": p, "abc": [a, b, c], "result": out, "size": size}))
    print(json.dumps({"summary": True, "tally": tally}, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
