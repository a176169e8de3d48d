#!/usr/bin/env python3
"""|G & [N]| / |G & [2N]| for the sparse prime schedule, the squares and N itself."""

import argparse
import json
import sys

from recurlab.density import SparseSemigroupSchedule, ratio_experiment


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--starts", default="10,10000")
    ap.add_argument("--points", default="100,1000,10000,100000,1000000")
    args = ap.parse_args(argv)
    points = [int(x) for x in args.points.split(",")]
    schedules = {
        "schedule": SparseSemigroupSchedule("schedule", tuple(int(x) for x in args.starts.split(","))),
        "squares": SparseSemigroupSchedule("squares"),
        "naturals": SparseSemigroupSchedule("naturals"),
    }
    for name, sched in schedules.items():
        for N, a, b, r in ratio_experiment(sched, points):
            print(json.dumps({"schedule": name, "N": N, "count_N": a, "count_2N": b,
                              "ratio": float(r)}))
    return 0


if __name__ == "__main__":
    sys.exit(main())
