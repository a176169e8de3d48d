#!/usr/bin/env python3
"""Classify every ((an+b)/(cn+d))^l in a box and test each verdict.

NotRecurrentProved families are searched against their certificate coloring
(no pair may appear); RecurrentProved ones against a few fixed colorings
(a pair should appear).  One JSON line per family.
"""

import argparse
import json
import sys
import time

from recurlab.colorings import (find_monochromatic_ratio_pair, padic_residue_coloring,
                                rado3_coloring, valuation_parity_coloring)
from recurlab.recsets import NOT_RECURRENT, RECURRENT, classify_moebius, parse_family


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ac", type=int, default=6, help="a and c range over 1..AC")
    ap.add_argument("--bd", type=int, default=6, help="b and d range over -BD..BD")
    ap.add_argument("--powers", default="1,2")
    ap.add_argument("--refute-n", type=int, default=10**4)
    ap.add_argument("--find-n", type=int, default=10**6)
    args = ap.parse_args(argv)
    tests = [rado3_coloring(), padic_residue_coloring(2, 2), padic_residue_coloring(3, 1),
             valuation_parity_coloring(2)]
    counts = {}
    t0 = time.time()
    for l in (int(x) for x in args.powers.split(",")):
        for a in range(1, args.ac + 1):
            for c in range(1, args.ac + 1):
                for b in range(-args.bd, args.bd + 1):
                    for d in range(-args.bd, args.bd + 1):
                        v = classify_moebius(a, b, c, d, l)
                        fam = parse_family(v.family)
                        rec = v.to_json()
                        if v.status == NOT_RECURRENT:
                            rep = find_monochromatic_ratio_pair(v.certificate_coloring(), fam,
                                                                args.refute_n, start=None)
                            rec["consistent"] = not rep.found
                        elif v.status == RECURRENT:
                            found = [find_monochromatic_ratio_pair(chi, fam, args.find_n).found
                                     for chi in tests]
                            rec["consistent"] = all(found)
                        key = (v.status, v.reason)
                        counts[key] = counts.get(key, 0) + 1
                        print(json.dumps(rec, sort_keys=True))
    summary = {"summary": True, "seconds": round(time.time() - t0, 2),
               "counts": {f"{s}/{r}": n for (s, r), n in sorted(counts.items())}}
    print(json.dumps(summary, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
