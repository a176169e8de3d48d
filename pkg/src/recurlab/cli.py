"""Command-line front end.

Every subcommand emits records: JSON lines with sorted keys by default, or CSV
with ``--output csv``.  Exit status is 0 on success, 1 when a run reports a
finding (a broken certificate, a violation), 2 on usage errors.
"""

import argparse
import csv
import io
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import ceil, isqrt

from . import __version__
from .arith import big_omega
from .colorings import (find_monochromatic_ratio_pair, identity_system,
                        moebius_obstruction_system, omega_system, parse_coloring,
                        valuation_system)
from .descriptors import to_int, tokenize
from .errors import (DescriptorError, RecurlabError, SizeShortfall, VerificationFailure)

EXIT_OK, EXIT_FINDING, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (tuple, list)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (set, frozenset)):
        return sorted(_jsonable(x) for x in v)
    if hasattr(v, "item"):  # numpy scalar
        return v.item()
    return v


def emit(records, fmt, stream):
    records = [_jsonable(r) for r in records]
    if fmt == "csv":
        cols = []
        for r in records:
            cols += [k for k in r if k not in cols]
        w = csv.DictWriter(stream, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for r in records:
            w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v
                        for k, v in r.items()})
    else:
        for r in records:
            stream.write(json.dumps(r, sort_keys=True) + "\n")


def _workers(args):
    if args.workers is not None:
        return max(1, args.workers)
    return max(1, int(os.environ.get("RECURLAB_WORKERS", "1") or 1))


# ---------------------------------------------------------------------------
# subcommands; each returns (records, exit_code)

def cmd_classify(args):
    from .recsets import (LinearImage, MoebiusPower, PolyImage, classify_linear,
                          classify_moebius, parse_family)
    from .semigroups import poly_semigroup_classifier
    fam = parse_family(args.family)
    if isinstance(fam, MoebiusPower):
        v = classify_moebius(fam.a, fam.b, fam.c, fam.d, fam.l)
    elif isinstance(fam, LinearImage):
        v = classify_linear(fam.a, fam.b)
    elif isinstance(fam, PolyImage):
        rec = poly_semigroup_classifier(fam.coeffs).to_json()
        rec["family"] = args.family
        return [rec], EXIT_OK
    else:
        raise UsageError(f"classify does not handle {type(fam).__name__} families")
    return [v.to_json()], EXIT_OK


def cmd_witness(args):
    from .recsets import parse_family
    chi = parse_coloring(args.coloring)
    fam = parse_family(args.family)
    rep = find_monochromatic_ratio_pair(chi, fam, args.max_n)
    return [rep.to_json()], EXIT_OK


def cmd_verify_obstruction(args):
    """Classify the family and search the certificate coloring for a forbidden pair."""
    from .recsets import NOT_RECURRENT, classify_linear, classify_moebius, parse_family
    if args.c is None:
        if args.d is not None:
            raise UsageError("--d needs --c")
        v = classify_linear(args.a, args.b)
    else:
        v = classify_moebius(args.a, args.b, args.c, args.d if args.d is not None else 0, args.l)
    rec = {"verdict": v.to_json()}
    if v.status != NOT_RECURRENT:
        rec["search"] = None
        return [rec], EXIT_OK
    chi = v.certificate_coloring()
    rep = find_monochromatic_ratio_pair(chi, parse_family(v.family), args.max_n, start=None)
    rec["search"] = rep.to_json()
    return [rec], EXIT_FINDING if rep.found else EXIT_OK


def _make_function(args):
    from .multfunc import ArchimedeanCharacter, OmegaRoot, liouville
    if args.kind == "omega-root":
        return OmegaRoot(args.fa, args.q)
    if args.kind == "character":
        return ArchimedeanCharacter(args.t)
    return liouville()


def cmd_gap(args):
    from .multfunc import evaluate, shift_dilation_gap
    f = _make_function(args)
    res = shift_dilation_gap(f, args.a, args.k, args.max_n)
    out = []
    for n, gap in res.envelope:
        out.append({"n": n, "lhs": str(evaluate(f, args.a * n + args.k).angle),
                    "rhs": str(evaluate(f, args.a * n).angle), "gap": gap})
    out.append({"summary": True, "min_gap": res.min_gap, "argmin": res.argmin,
                "max_n": args.max_n})
    return out, EXIT_OK


def cmd_omega_witness(args):
    from .multfunc import omega_witnesses
    ns = omega_witnesses(args.a, args.k, args.q, args.max_n)
    out = []
    for n in ns[: args.limit]:
        lhs, rhs = big_omega(args.a * n + args.k), big_omega(args.a * n)
        out.append({"n": n, "lhs": lhs, "rhs": rhs, "gap": (lhs - rhs) % args.q})
    out.append({"summary": True, "count": len(ns), "max_n": args.max_n})
    return out, EXIT_OK


def cmd_semigroup(args):
    from .recsets import FourLinearForms, LinearImage, PolyImage, parse_family
    from .semigroups import (closure_violation_search, fourforms_progression_check,
                             geometric_progression_search, poly_semigroup_classifier)
    fam = parse_family(args.family)
    if args.op == "classify":
        if isinstance(fam, PolyImage):
            coeffs = fam.coeffs
        elif isinstance(fam, LinearImage):
            coeffs = (fam.b, fam.a)
        else:
            raise UsageError("classify needs a poly or linear family")
        rec = poly_semigroup_classifier(coeffs).to_json()
        rec["family"] = args.family
        return [rec], EXIT_OK
    if args.op == "progressions":
        B, K = args.bound or 12, args.k or 6
        if isinstance(fam, FourLinearForms):
            hits = fourforms_progression_check(fam.ls, B, K, args.max_n or 500)
        else:
            hits = geometric_progression_search(fam, B, K)
        out = [dict(h.to_json(), family=args.family) for h in hits]
        out.append({"summary": True, "hits": len(hits), "B": B, "K": K, "family": args.family})
        return out, EXIT_OK
    N = args.max_n or 1000
    v = closure_violation_search(fam, N)
    rec = {"family": args.family, "N": N, "violation": list(v) if v else None}
    return [rec], EXIT_OK


def cmd_paramult(args):
    from . import paramult as pm
    if args.json:
        sg = pm.load_json(args.json)
    else:
        sg = pm.builtin(args.example)
    bound = args.bound or 10
    head = {"example": sg.name, "k": sg.k, "d": sg.d, "value": str(sg.value_kind)}
    if args.op == "verify":
        r = pm.verify_multiplicativity(sg, bound)
        return [dict(head, bound=bound, **r.to_json())], EXIT_FINDING if r.violations else EXIT_OK
    if args.op == "subordination":
        r = pm.empirical_subordination(sg, bound)
        return [dict(head, bound=bound, **r.to_json())], EXIT_OK if r.holds else EXIT_FINDING
    if args.op == "zeros":
        z = pm.zero_density(sg, bound)
        return [dict(head, N=bound, zero_density=str(z), value_float=float(z))], EXIT_OK
    n, m = _int_tuple(args.n), _int_tuple(args.m)
    res = pm.star(sg, n, m)
    rec = dict(head, n=list(n), m=list(m), result=type(res).__name__)
    if isinstance(res, pm.Defined):
        rec["point"] = list(res.point)
        rec["f"] = str(pm.eval_f(sg, res.point))
    elif isinstance(res, pm.OutsideCone):
        rec["coords"] = [str(c) for c in res.coords]
    return [rec], EXIT_OK


def _int_tuple(text):
    if not text:
        raise UsageError("--n and --m are required for --op star")
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad point {text!r}") from None


def _int_list(text):
    try:
        return [int(float(x)) for x in text.split(",") if x]
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


def parse_predicate(text):
    """all | empty | even | odd | squares | cubes | mult:q | residue:q,r"""
    d = tokenize(text)
    if d.name == "all":
        return lambda n: True
    if d.name == "empty":
        return lambda n: False
    if d.name == "even":
        return lambda n: n % 2 == 0
    if d.name == "odd":
        return lambda n: n % 2 == 1
    if d.name == "squares":
        return lambda n: isqrt(n) ** 2 == n
    if d.name == "cubes":
        return lambda n: round(n ** (1 / 3)) ** 3 == n
    if d.name == "mult":
        q = d.int_list()
        if len(q) != 1 or q[0] < 1:
            raise DescriptorError("expected mult:q with q >= 1", d.text, len(d.name) + 1)
        return lambda n, q=q[0]: n % q == 0
    if d.name == "residue":
        qr = d.int_list()
        if len(qr) != 2 or qr[0] < 1:
            raise DescriptorError("expected residue:q,r", d.text, len(d.name) + 1)
        return lambda n, q=qr[0], r=qr[1]: n % q == r % q
    raise DescriptorError(f"unknown set {d.name!r}", d.text, 0)


def parse_system(text):
    """valuation:p=..,k=.. | omega:q=.. | moebius:a=..,b=.. | identity:size=.."""
    d = tokenize(text)
    if d.name == "valuation":
        kv = d.ints(("p", "k"))
        return valuation_system(kv["p"], kv["k"])
    if d.name == "omega":
        return omega_system(d.ints(("q",))["q"])
    if d.name == "moebius":
        kv = d.ints(("a", "b"))
        return moebius_obstruction_system(kv["a"], kv["b"])
    if d.name == "identity":
        return identity_system(d.ints((), {"size": 1})["size"])
    raise DescriptorError(f"unknown system {d.name!r}", d.text, 0)


def parse_schedule(text):
    from .density import SparseSemigroupSchedule
    if text in ("naturals", "squares"):
        return SparseSemigroupSchedule(text)
    return SparseSemigroupSchedule("schedule", tuple(_int_list(text)))


def cmd_density(args):
    from . import density as dn
    S = parse_predicate(args.set)
    G = parse_predicate(args.G)
    points = _int_list(args.points) if args.points else [args.max_n or 1000]
    if args.op == "folner":
        out = []
        for N in points:
            F = dn.FolnerIndex(N)
            count = sum(1 for x in F.members() if S(x))
            out.append({"N": N, "count": count, "total": F.size,
                        "value": float(Fraction(count, F.size))})
        return out, EXIT_OK
    if args.op == "prefix":
        return [{"N": N, "count": c, "total": N, "value": float(v)}
                for N, c, v in dn.prefix_envelope(S, points)], EXIT_OK
    if args.op == "ratio":
        sched = parse_schedule(args.schedule or "naturals")
        return [{"N": N, "count": a, "total": b, "value": float(r)}
                for N, a, b, r in dn.ratio_experiment(sched, points)], EXIT_OK
    N = points[-1]
    if args.op == "syndetic":
        F = dn.syndetic_check(S, G, args.bound or 50, N)
        rec = {"N": N, "F": list(F) if F else None}
        if F:
            avg = dn.syndetic_additive_average(S, G, N)
            rec.update(count=avg.numerator, total=avg.denominator, value=float(avg))
        return [rec], EXIT_OK
    sys_ = parse_system(args.system or "valuation:p=2,k=2")
    states = _int_list(args.states) if args.states else [sys_.states[0]]
    v = dn.finite_system_recurrence_average(sys_, states, G, N)
    return [{"N": N, "count": v.numerator, "total": v.denominator, "value": float(v)}], EXIT_OK


def _pair_trial(job):
    from .ffield import find_pythagorean_pair
    p, A = job
    return find_pythagorean_pair(p, A)


def cmd_ff(args):
    from . import ffield as ff
    p = args.p
    d = tokenize(args.op)
    if d.name == "squares":
        Q = sorted(ff.squares(p))
        return [{"p": p, "size": len(Q), "squares": Q}], EXIT_OK
    if d.name == "schmidt":
        shifts = d.int_list()
        count = ff.shifted_squares_intersection(p, shifts)
        return [{"p": p, "shifts": shifts, "count": count, "ratio": count / p,
                 "expected": 1 / 2 ** len(shifts)}], EXIT_OK
    if d.name == "pair":
        kv = d.keyed()
        unknown = set(kv) - {"density", "trials"}
        if unknown or d.positional():
            raise DescriptorError("expected pair:density=..,trials=..", d.text, len(d.name) + 1)
        try:
            delta = float(kv["density"][0]) if "density" in kv else 0.2
        except ValueError:
            raise DescriptorError("bad density", d.text, kv["density"][1]) from None
        trials = to_int(kv["trials"][0], d.text, kv["trials"][1]) if "trials" in kv else args.trials
        rng = random.Random(args.seed)
        size = ceil(delta * p)
        jobs = [(p, sorted(rng.sample(range(p), size))) for _ in range(trials)]
        w = _workers(args)
        if w > 1:
            with ProcessPoolExecutor(max_workers=w) as ex:
                results = list(ex.map(_pair_trial, jobs))
        else:
            results = [_pair_trial(j) for j in jobs]
        out = [{"trial": t, "size": size, "pair": list(r) if r else None}
               for t, r in enumerate(results)]
        hits = sum(r is not None for r in results)
        out.append({"summary": True, "p": p, "trials": trials, "successes": hits, "seed": args.seed})
        return out, EXIT_OK
    if d.name == "avoid":
        abc = d.int_list()
        if len(abc) != 3:
            raise DescriptorError("expected avoid:a,b,c", d.text, len(d.name) + 1)
        try:
            cert = ff.construct_avoiding_set(*abc, p)
        except SizeShortfall as e:
            return [{"p": p, "abc": abc, "error": "SizeShortfall", "message": str(e),
                     "best_size": e.best_size, "required": e.required}], EXIT_FINDING
        except VerificationFailure as e:
            return [{"p": p, "abc": abc, "error": "VerificationFailure",
                     "message": str(e)}], EXIT_FINDING
        return [cert.to_json()], EXIT_OK
    raise DescriptorError(f"unknown ff op {d.name!r}", d.text, 0)


# ---------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-n", type=int, default=None)
    common.add_argument("--bound", type=int, default=None)
    common.add_argument("--trials", type=int, default=100)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--workers", type=int, default=None,
                        help="worker processes (default $RECURLAB_WORKERS or 1)")
    common.add_argument("--output", choices=("json", "csv"), default="json")
    common.add_argument("--out", default=None, help="write records here instead of stdout")

    ap = argparse.ArgumentParser(prog="recurlab", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"recurlab {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify a family")
    p.add_argument("--family", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("witness", parents=[common], help="search a monochromatic ratio pair")
    p.add_argument("--coloring", required=True)
    p.add_argument("--family", required=True)
    p.set_defaults(func=cmd_witness, max_n_default=10**4)

    p = sub.add_parser("verify-obstruction", parents=[common],
                       help="re-check a non-recurrence certificate by search")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--l", type=int, default=1)
    p.set_defaults(func=cmd_verify_obstruction, max_n_default=10**4)

    p = sub.add_parser("gap", parents=[common], help="min |f(an+k) - f(an)| with its envelope")
    p.add_argument("--kind", choices=("omega-root", "character", "liouville"), default="omega-root")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--fa", type=int, default=1, help="numerator of the omega-root exponent")
    p.add_argument("--t", type=float, default=1.0)
    p.set_defaults(func=cmd_gap, max_n_default=10**4)

    p = sub.add_parser("omega-witness", parents=[common],
                       help="n with Omega(an+k) = Omega(an) mod q")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--limit", type=int, default=100)
    p.set_defaults(func=cmd_omega_witness, max_n_default=10**4)

    p = sub.add_parser("semigroup", parents=[common], help="semigroups inside a family")
    p.add_argument("--family", required=True)
    p.add_argument("--op", choices=("classify", "progressions", "closure"), default="classify")
    p.add_argument("--k", type=int, default=None, help="progression length K")
    p.set_defaults(func=cmd_semigroup)

    p = sub.add_parser("paramult", parents=[common], help="matrix star products")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--example")
    g.add_argument("--json", help="JSON file with generators")
    p.add_argument("--op", choices=("verify", "subordination", "zeros", "star"), default="verify")
    p.add_argument("--n", default=None)
    p.add_argument("--m", default=None)
    p.set_defaults(func=cmd_paramult)

    p = sub.add_parser("density", parents=[common], help="finite-scale densities")
    p.add_argument("--op", choices=("folner", "prefix", "ratio", "syndetic", "system-average"),
                   required=True)
    p.add_argument("--set", default="all")
    p.add_argument("--G", default="all")
    p.add_argument("--points", default=None, help="comma-separated evaluation points")
    p.add_argument("--schedule", default=None, help="naturals | squares | N1,N2,...")
    p.add_argument("--system", default=None)
    p.add_argument("--states", default=None)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("ff", parents=[common], help="prime-field experiments")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--op", required=True)
    p.set_defaults(func=cmd_ff)
    return ap


def run(argv=None, stream=None):
    """Parse, execute and emit; returns the exit status."""
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if args.max_n is None and hasattr(args, "max_n_default"):
        args.max_n = args.max_n_default
    for name in ("max_n", "bound", "trials"):
        v = getattr(args, name)
        if v is not None and v < 1:
            print(f"recurlab: --{name.replace('_', '-')} must be positive", file=sys.stderr)
            return EXIT_USAGE
    try:
        records, code = args.func(args)
    except (DescriptorError, UsageError, ValueError, KeyError) as e:
        print(f"recurlab: {e}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationFailure as e:
        print(f"recurlab: {e}", file=sys.stderr)
        return EXIT_FINDING
    except RecurlabError as e:
        print(f"recurlab: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", newline="") as fh:
            emit(records, args.output, fh)
    else:
        buf = io.StringIO()
        emit(records, args.output, buf)
        (stream or sys.stdout).write(buf.getvalue())
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
