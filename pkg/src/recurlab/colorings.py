"""Finite colorings of N, finite multiplicative systems, and the pair search.

Colors are natural labels (a residue, a state, a bin index) rather than
0..k-1; ``num_colors`` counts how many labels can occur.  Every coloring has a
scalar ``eval`` and a cached numpy ``table`` used by the searches.
"""

import math
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .arith import factorize, is_prime, spf_table
from .descriptors import tokenize
from .errors import CriterionHolds, DescriptorError, NotPrime
from .qplus import PosRational

__all__ = [
    "Coloring", "FiniteMultSystem", "WitnessReport",
    "padic_residue_coloring", "rado3_coloring", "valuation_parity_coloring",
    "constant_coloring", "power_lift_coloring", "limit_window_coloring",
    "moebius_obstruction_system", "system_orbit_coloring", "valuation_system",
    "omega_system", "identity_system", "find_monochromatic_ratio_pair",
    "parse_coloring",
]


class Coloring:
    def __init__(self, name, params, num_colors, fn, table_fn=None, descriptor=None):
        if num_colors < 1:
            raise ValueError("a coloring needs at least one color")
        self.name = name
        self.params = tuple(params)
        self.num_colors = num_colors
        self._fn = fn
        self._table_fn = table_fn
        self._descriptor = descriptor
        self._table = None

    def eval(self, n):
        if n < 1:
            raise ValueError("colorings are defined on positive integers")
        return self._fn(n)

    __call__ = eval

    def table(self, limit):
        """int64 array t with t[n] = color of n for 1 <= n <= limit (t[0] = -1)."""
        if self._table is not None and len(self._table) > limit:
            return self._table[: limit + 1]
        if self._table_fn is not None:
            t = np.asarray(self._table_fn(limit), dtype=np.int64)
        else:
            t = np.array([-1] + [self._fn(n) for n in range(1, limit + 1)], dtype=np.int64)
        t[0] = -1
        self._table = t
        return t

    def descriptor(self):
        if self._descriptor:
            return self._descriptor
        return f"{self.name}:" + ",".join(str(p) for p in self.params) if self.params else self.name

    def __repr__(self):
        return f"Coloring({self.descriptor()!r}, colors={self.num_colors})"


def _strip_prime(n, p):
    while n % p == 0:
        n //= p
    return n


def _strip_array(arr, p):
    arr = arr.copy()
    while True:
        m = (arr % p == 0) & (arr > 0)
        if not m.any():
            return arr
        arr[m] //= p


def _valuation_array(arr, p):
    v = np.zeros(len(arr), dtype=np.int64)
    arr = arr.copy()
    while True:
        m = (arr % p == 0) & (arr > 0)
        if not m.any():
            return v
        arr[m] //= p
        v[m] += 1


def padic_residue_coloring(p, u):
    """n -> (n with every factor p removed) mod p**u."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if u < 1:
        raise ValueError("u must be >= 1")
    mod = p**u

    def fn(n):
        return _strip_prime(n, p) % mod

    def table(limit):
        return _strip_array(np.arange(limit + 1, dtype=np.int64), p) % mod

    return Coloring("padic", (p, u), mod - mod // p, fn, table, f"padic:p={p},u={u}")


def rado3_coloring():
    """Write m = 3^k q with 3 not dividing q; the color is q mod 3 (1 or 2)."""
    def fn(n):
        return _strip_prime(n, 3) % 3

    def table(limit):
        return _strip_array(np.arange(limit + 1, dtype=np.int64), 3) % 3

    return Coloring("rado3", (), 2, fn, table, "rado3")


def valuation_parity_coloring(p):
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")

    def fn(n):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        return e % 2

    def table(limit):
        return _valuation_array(np.arange(limit + 1, dtype=np.int64), p) % 2

    return Coloring("parity", (p,), 2, fn, table, f"parity:p={p}")


def constant_coloring():
    return Coloring("const", (), 1, lambda n: 0,
                    lambda limit: np.zeros(limit + 1, dtype=np.int64), "const")


def _power_part(n, ell):
    y = 1
    for p, e in factorize(n):
        y *= p ** (e // ell)
    return y


def _power_part_table(limit, ell):
    """y[x] with x = y^ell * z, z free of ell-th powers."""
    spf = spf_table(limit)
    rem = np.arange(limit + 1, dtype=np.int64)
    rem[0] = 1
    y = np.ones(limit + 1, dtype=np.int64)
    while True:
        live = np.flatnonzero(rem > 1)
        if live.size == 0:
            return y
        p = spf[rem[live]]
        e = np.zeros(live.size, dtype=np.int64)
        r = rem[live]
        while True:
            m = r % p == 0
            if not m.any():
                break
            r[m] //= p[m]
            e[m] += 1
        rem[live] = r
        y[live] *= p ** (e // ell)


def power_lift_coloring(chi, ell):
    """x = y^ell z with z free of ell-th powers; color x by chi(y)."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    if ell == 1:
        return chi

    def fn(n):
        return chi.eval(_power_part(n, ell))

    def table(limit):
        ys = _power_part_table(limit, ell)
        base = chi.table(max(1, int(ys.max())))
        return base[ys]

    return Coloring(f"lift{ell}", (ell,) + chi.params, chi.num_colors, fn, table,
                    f"{chi.descriptor()},l={ell}" if ":" in chi.descriptor()
                    else f"{chi.descriptor()}:l={ell}")


def limit_window_coloring(log_a, bins, name="window", params=(), descriptor=None):
    """n -> floor(bins * frac(log n / log_a)).

    If every ratio r in a family satisfies delta <= |log r| <= log_a / 2 and
    bins > 1 / delta', where delta' = min|log r| / log_a, two integers of the
    same color never differ by a factor from the family.
    """
    if log_a <= 0 or bins < 1:
        raise ValueError("need log_a > 0 and bins >= 1")

    def colors(ns):
        x = np.log(ns) / log_a
        return np.floor(bins * (x - np.floor(x))).astype(np.int64) % bins

    # scalar and table share one code path so both agree on bin boundaries
    def fn(n):
        return int(colors(np.array([n], dtype=np.float64))[0])

    def table(limit):
        return np.concatenate([[-1], colors(np.arange(1, limit + 1, dtype=np.float64))])

    return Coloring(name, params, bins, fn, table, descriptor)


# ---------------------------------------------------------------------------
# finite multiplicative systems

class FiniteMultSystem:
    """States plus a permutation per prime; T_n composes along the factorization of n."""

    def __init__(self, states, prime_action, case="", params=None, orbit_fn=None):
        self.states = tuple(states)
        self.index = {s: i for i, s in enumerate(self.states)}
        self._prime_action = prime_action
        self.case = case
        self.params = dict(params or {})
        self._orbit_fn = orbit_fn
        self._perm_cache = {}

    def perm(self, p):
        if p not in self._perm_cache:
            self._perm_cache[p] = tuple(self._prime_action(p))
        return self._perm_cache[p]

    def act(self, n, x):
        i = self.index[x]
        for p, e in factorize(n):
            perm = self.perm(p)
            for _ in range(e):
                i = perm[i]
        return self.states[i]

    def orbit_table(self, limit, base):
        if base not in self.index:
            raise ValueError(f"{base!r} is not a state")
        if self._orbit_fn is not None:
            t = np.asarray(self._orbit_fn(limit, base), dtype=np.int64)
        else:
            t = np.array([-1] + [self.act(n, base) for n in range(1, limit + 1)], dtype=np.int64)
        t[0] = -1
        return t

    def fixes_no_state(self, n):
        return all(self.act(n, x) != x for x in self.states)

    def homomorphism_violations(self, bound=200):
        bad = []
        for m in range(1, bound + 1):
            for n in range(1, bound + 1):
                for x in self.states:
                    if self.act(m * n, x) != self.act(m, self.act(n, x)):
                        bad.append((m, n, x))
        return bad

    def __repr__(self):
        return f"FiniteMultSystem(case={self.case!r}, states={self.states}, params={self.params})"


def identity_system(size=1):
    states = tuple(range(size))
    return FiniteMultSystem(states, lambda p: states, "identity", {"size": size},
                            lambda limit, base: np.full(limit + 1, base, dtype=np.int64))


def valuation_system(p, k):
    """Z_k where p acts by +1 and every other prime trivially."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    states = tuple(range(k))
    shift = tuple((i + 1) % k for i in range(k))

    def orbit(limit, base):
        return (base + _valuation_array(np.arange(limit + 1, dtype=np.int64), p)) % k

    return FiniteMultSystem(states, lambda q: shift if q == p else states,
                            "valuation-shift", {"p": p, "k": k}, orbit)


def omega_system(q):
    """Z_q where every prime acts by +1, so T_n is translation by Omega(n)."""
    from .arith import omega_table
    states = tuple(range(q))
    shift = tuple((i + 1) % q for i in range(q))
    return FiniteMultSystem(states, lambda p: shift, "omega-shift", {"q": q},
                            lambda limit, base: (base + omega_table(limit).astype(np.int64)) % q)


def moebius_obstruction_system(a, b):
    """A finite system where T_n fixes no state whenever n = b mod a.

    Exists exactly when a does not divide b(b-1).  With a' = a / gcd(a, b):

    * gcd(a', b) = 1: states are the units mod a' and T_n multiplies by the
      part of n coprime to a'.
    * otherwise: pick a prime p dividing gcd(a', b), let k = v_p(b) + 1; states
      are Z_k and T_n adds v_p(n).
    """
    if a < 1:
        raise ValueError("a must be positive")
    if (b * (b - 1)) % a == 0:
        raise CriterionHolds(f"{a} divides {b}*({b}-1); no obstruction exists")
    g = gcd(a, b)
    ap = a // g
    if gcd(ap, b) == 1:
        units = tuple(x for x in range(1, ap) if gcd(x, ap) == 1)
        ap_primes = tuple(p for p, _ in factorize(ap))

        def action(p):
            if ap % p == 0:
                return tuple(range(len(units)))
            pos = {u: i for i, u in enumerate(units)}
            return tuple(pos[(u * p) % ap] for u in units)

        def orbit(limit, base):
            arr = np.arange(limit + 1, dtype=np.int64)
            for p in ap_primes:
                arr = _strip_array(arr, p)
            return (base * (arr % ap)) % ap

        return FiniteMultSystem(units, action, "units-mod",
                                {"a": a, "b": b, "a_prime": ap, "case": 1}, orbit)
    p = min(q for q, _ in factorize(gcd(ap, b)))
    k = 1
    bb = abs(b)
    while bb % p == 0:
        bb //= p
        k += 1
    sys = valuation_system(p, k)
    sys.case = "valuation-shift"
    sys.params = {"a": a, "b": b, "a_prime": ap, "p": p, "k": k, "case": 2}
    return sys


def system_orbit_coloring(sys, base):
    """Color n by T_n(base)."""
    if base not in sys.index:
        raise ValueError(f"{base!r} is not a state")

    def fn(n):
        return sys.act(n, base)

    def table(limit):
        return sys.orbit_table(limit, base)

    desc = None
    if "a" in sys.params and "b" in sys.params:
        desc = f"system:a={sys.params['a']},b={sys.params['b']},base={base}"
    return Coloring("system", tuple(sys.params.values()) + (base,), len(sys.states),
                    fn, table, desc)


def default_base(sys):
    return 1 if sys.params.get("case") == 1 else sys.states[0]


# ---------------------------------------------------------------------------
# monochromatic pair search

@dataclass
class WitnessReport:
    found: bool
    pair: tuple = None
    ratio: PosRational = None
    family_params: tuple = None
    search_bound: int = 0
    coloring: str = ""
    family: str = ""
    verified: bool = None

    def to_json(self):
        return {
            "found": self.found,
            "pair": list(self.pair) if self.pair else None,
            "ratio": str(self.ratio) if self.ratio is not None else None,
            "family_params": list(self.family_params) if self.family_params else None,
            "search_bound": self.search_bound,
            "coloring": self.coloring,
            "family": self.family,
            "verified": self.verified,
        }


def _member_arrays(family, N):
    if hasattr(family, "member_arrays"):
        return family.member_arrays(N)
    rows = list(family.members_within(N))
    if not rows:
        z = np.zeros(0, dtype=np.int64)
        return z, z, []
    s = np.array([r[0] for r in rows], dtype=np.int64)
    t = np.array([r[1] for r in rows], dtype=np.int64)
    return s, t, [r[2] for r in rows]


def _search_once(colors, small, big, N):
    """Minimal (y, x) over pairs (small*j, big*j) with big*j <= N and equal colors."""
    counts = N // big
    total = int(counts.sum())
    if total == 0:
        return None
    idx = np.repeat(np.arange(len(big)), counts)
    starts = np.cumsum(counts) - counts
    j = np.arange(total, dtype=np.int64) - np.repeat(starts, counts) + 1
    x = small[idx] * j
    y = big[idx] * j
    hit = np.flatnonzero(colors[x] == colors[y])
    if hit.size == 0:
        return None
    key = y[hit] * (N + 1) + x[hit]
    h = hit[int(np.argmin(key))]
    return int(x[h]), int(y[h]), int(idx[h])


def find_monochromatic_ratio_pair(chi, family, N, start=64, verify=True):
    """Search x <= y <= N with chi(x) = chi(y) and y/x or x/y in the family.

    Witnesses are ordered by y, then x, so the answer at bound N is also the
    answer at every larger bound; the search doubles from ``start`` and stops
    at the first bound that yields a hit.  x = y is reported only when the
    family contains 1.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    desc = family.descriptor() if hasattr(family, "descriptor") else repr(family)
    bound = min(N, max(2, start)) if start else N
    while True:
        s, t, params = _member_arrays(family, bound)
        if len(s):
            ones = np.flatnonzero(s == t)
            if ones.size:
                i = int(ones[0])
                return WitnessReport(True, (1, 1), PosRational(()), _params_of(params, i),
                                     N, chi.descriptor(), desc, True)
            small = np.minimum(s, t)
            big = np.maximum(s, t)
            colors = chi.table(bound)
            res = _search_once(colors, small, big, bound)
            if res is not None:
                x, y, i = res
                ratio = PosRational.from_fraction(int(s[i]), int(t[i]))
                ok = None
                if verify and hasattr(family, "contains"):
                    ok = bool(family.contains(ratio).is_yes)
                return WitnessReport(True, (x, y), ratio, _params_of(params, i), N,
                                     chi.descriptor(), desc, ok)
        if bound >= N:
            return WitnessReport(False, search_bound=N, coloring=chi.descriptor(), family=desc)
        bound = min(N, bound * 2)


def _params_of(params, i):
    p = params[i]
    if isinstance(p, (tuple, list)):
        return tuple(int(v) for v in p)
    return (int(p),)


# ---------------------------------------------------------------------------
# descriptors

def parse_coloring(text):
    """rado3 | const | padic:p=..,u=.. | parity:p=.. | system:a=..,b=..[,base=..]

    Any of the first four accepts an extra ``l=..`` meaning the power lift.
    """
    d = tokenize(text)
    if d.name == "rado3":
        kv = d.ints((), {"l": 1})
        base = rado3_coloring()
    elif d.name == "const":
        kv = d.ints((), {"l": 1})
        base = constant_coloring()
    elif d.name == "padic":
        kv = d.ints(("p", "u"), {"l": 1})
        base = padic_residue_coloring(kv["p"], kv["u"])
    elif d.name == "parity":
        kv = d.ints(("p",), {"l": 1})
        base = valuation_parity_coloring(kv["p"])
    elif d.name == "system":
        kv = d.ints(("a", "b"), {"base": None})
        sys = moebius_obstruction_system(kv["a"], kv["b"])
        b0 = kv["base"] if kv["base"] is not None else default_base(sys)
        return system_orbit_coloring(sys, b0)
    elif d.name == "window":
        from .recsets import MoebiusPower
        kv = d.ints(("a", "b", "c", "d"), {"l": 1})
        return MoebiusPower(kv["a"], kv["b"], kv["c"], kv["d"], kv["l"]).window_coloring()
    else:
        raise DescriptorError(f"unknown coloring {d.name!r}", d.text, 0)
    return power_lift_coloring(base, kv["l"])
