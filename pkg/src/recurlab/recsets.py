"""Families of positive rationals, exact membership, and recurrence verdicts.

A family is a frozen dataclass with

* ``contains(r, bound=None) -> Membership``
* ``members_within(N)``: reduced ``(s, t, params)`` with r = s/t and max(s, t) <= N
* ``sample(bound)``: ``(params, PosRational)`` for every parameter up to ``bound``
* ``descriptor()``: the text form understood by ``parse_family``
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from . import poly
from .arith import factorize, integer_nth_root
from .colorings import (limit_window_coloring, moebius_obstruction_system,
                        padic_residue_coloring, parse_coloring, power_lift_coloring,
                        system_orbit_coloring, default_base)
from .descriptors import tokenize
from .errors import DescriptorError, Unsupported
from .qplus import PosRational, as_posrational

__all__ = [
    "Membership", "MoebiusPower", "PythagHyp", "PythagLeg", "PolyImage", "LinearImage",
    "FourLinearForms", "GeometricPowers", "ExplicitList", "Verdict",
    "classify_moebius", "classify_linear", "accumulation_check", "is_divisible_poly",
    "DivisibilityResult", "parse_family", "reduction_embeds",
]

YES, NO, INCONCLUSIVE = "yes", "no", "inconclusive"
RECURRENT, NOT_RECURRENT, UNKNOWN = "RecurrentProved", "NotRecurrentProved", "Unknown"


@dataclass(frozen=True)
class Membership:
    status: str
    params: tuple = None
    bound: int = None

    @property
    def is_yes(self):
        return self.status == YES

    @classmethod
    def yes(cls, *params):
        return cls(YES, tuple(int(p) for p in params))


_NO = Membership(NO)


def _st(r):
    r = as_posrational(r)
    return r.num, r.den


def _reduced(s, t):
    g = gcd(s, t)
    return s // g, t // g


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MoebiusPower:
    """{((a n + b) / (c n + d))^l : n >= n0}, n0 the first n >= 1 with both linear forms positive."""
    a: int
    b: int
    c: int
    d: int
    l: int = 1

    def __post_init__(self):
        if self.a < 1 or self.c < 1 or self.l < 1:
            raise ValueError("need a >= 1, c >= 1, l >= 1")

    @property
    def n0(self):
        n = 1
        n = max(n, (-self.b) // self.a + 1)
        n = max(n, (-self.d) // self.c + 1)
        return n

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    def base_value(self, n):
        return Fraction(self.a * n + self.b, self.c * n + self.d)

    def value(self, n):
        if n < self.n0:
            raise ValueError(f"n = {n} is below the admissible range n >= {self.n0}")
        return self.base_value(n) ** self.l

    def limit(self):
        return Fraction(self.a, self.c) ** self.l

    def descriptor(self):
        return f"moebius:a={self.a},b={self.b},c={self.c},d={self.d},l={self.l}"

    def one_at(self):
        """The n where the member equals 1, or None."""
        if self.a == self.c:
            return self.n0 if self.b == self.d else None
        num, den = self.d - self.b, self.a - self.c
        if num % den == 0 and num // den >= self.n0:
            return num // den
        return None

    def contains(self, r, bound=None):
        s, t = _st(r)
        rs, rt = integer_nth_root(s, self.l), integer_nth_root(t, self.l)
        if rs is None or rt is None:
            return _NO
        den = self.a * rt - self.c * rs
        if den == 0:
            if self.det == 0:
                return Membership.yes(self.n0)
            return _NO
        num = self.d * rs - self.b * rt
        if num % den:
            return _NO
        n = num // den
        if n < self.n0 or self.base_value(n) != Fraction(rs, rt):
            return _NO
        return Membership.yes(n)

    def member_arrays(self, N):
        """Reduced members (s, t) with max(s, t) <= N, ordered by n, and their n."""
        a, b, c, d, l = self.a, self.b, self.c, self.d, self.l
        Nb = integer_floor_root(N, l)
        n0 = self.n0
        D = abs(self.det)
        if D == 0:
            s, t = _reduced(a * n0 + b, c * n0 + d)
            if max(s, t) <= Nb:
                return (np.array([s**l], dtype=np.int64), np.array([t**l], dtype=np.int64),
                        np.array([n0], dtype=np.int64))
            z = np.zeros(0, dtype=np.int64)
            return z, z, z
        # gcd(an+b, cn+d) divides D and is periodic in n with period D
        base = np.arange(n0, n0 + D, dtype=np.int64)
        g = np.gcd(a * base + b, c * base + d)
        nmax = np.minimum((Nb * g - b) // a, (Nb * g - d) // c)
        counts = np.maximum(0, (nmax - base) // D + 1)
        total = int(counts.sum())
        idx = np.repeat(np.arange(D), counts)
        starts = np.cumsum(counts) - counts
        k = np.arange(total, dtype=np.int64) - np.repeat(starts, counts)
        n = base[idx] + D * k
        gg = g[idx]
        order = np.argsort(n, kind="stable")
        n, gg = n[order], gg[order]
        s = (a * n + b) // gg
        t = (c * n + d) // gg
        if l > 1:
            s, t = s**l, t**l
        return s, t, n

    def members_within(self, N):
        s, t, n = self.member_arrays(N)
        for si, ti, ni in zip(s.tolist(), t.tolist(), n.tolist()):
            yield si, ti, (ni,)

    def sample(self, bound):
        for n in range(self.n0, bound + 1):
            v = self.value(n)
            yield (n,), PosRational.from_fraction(v.numerator, v.denominator)

    def log_range(self):
        """(min |log r|, max |log r|) over the members, assuming 1 is not a member."""
        L = math.log(self.a / self.c) * self.l
        n = self.n0
        first = abs(math.log(float(self.base_value(n)))) * self.l
        hi = max(abs(L), first)
        lo = abs(L)
        # the sequence is monotone in n; scan until it sits on the same side of 1 as L
        while True:
            v = self.base_value(n)
            lv = math.log(float(v)) * self.l
            lo = min(lo, abs(lv))
            if (lv > 0) == (L > 0) and lv != 0:
                break
            n += 1
        return lo, hi

    def window_coloring(self):
        """Coloring without monochromatic ratios from this family (needs a != c and 1 not a member)."""
        if self.a == self.c and self.det != 0:
            raise Unsupported("the window coloring needs a limit different from 1")
        if self.one_at() is not None:
            raise Unsupported("the family contains 1")
        lo, hi = self.log_range()
        log_a = 2 * hi
        delta = lo / log_a
        bins = math.ceil(2 / delta) + 1
        return limit_window_coloring(
            log_a, bins, "window", (self.a, self.b, self.c, self.d, self.l),
            f"window:a={self.a},b={self.b},c={self.c},d={self.d},l={self.l}")


def integer_floor_root(N, l):
    if l == 1:
        return N
    r = int(round(N ** (1.0 / l)))
    while r**l > N:
        r -= 1
    while (r + 1) ** l <= N:
        r += 1
    return r


@dataclass(frozen=True)
class PythagHyp:
    """{(m^2 + n^2) / (2 m n) : m, n >= 1}."""

    def descriptor(self):
        return "pythag-hyp"

    def contains(self, r, bound=None):
        s, t = _st(r)
        if s < t:
            return _NO
        w2 = s * s - t * t
        w = isqrt(w2)
        if w * w != w2:
            return _NO
        m, n = _reduced(s + w, t)
        if Fraction(m * m + n * n, 2 * m * n) != Fraction(s, t):
            return _NO
        return Membership.yes(m, n)

    def members_within(self, N):
        seen = set()
        m = 1
        while m * m <= 2 * N + 1:
            for n in range(1, m + 1):
                if gcd(m, n) != 1:
                    continue
                s, t = _reduced(m * m + n * n, 2 * m * n)
                if max(s, t) <= N and (s, t) not in seen:
                    seen.add((s, t))
                    yield s, t, (m, n)
            m += 1

    def sample(self, bound):
        for m in range(1, bound + 1):
            for n in range(1, bound + 1):
                yield (m, n), PosRational.from_fraction(m * m + n * n, 2 * m * n)


@dataclass(frozen=True)
class PythagLeg:
    """{2 m n / (m^2 - n^2) : m > n >= 1}."""

    def descriptor(self):
        return "pythag-leg"

    def contains(self, r, bound=None):
        s, t = _st(r)
        w2 = s * s + t * t
        w = isqrt(w2)
        if w * w != w2:
            return _NO
        m, n = _reduced(t + w, s)
        if m <= n or Fraction(2 * m * n, m * m - n * n) != Fraction(s, t):
            return _NO
        return Membership.yes(m, n)

    def members_within(self, N):
        seen = set()
        m = 2
        while m * m <= 3 * N + 4:
            for n in range(1, m):
                if gcd(m, n) != 1:
                    continue
                s, t = _reduced(2 * m * n, m * m - n * n)
                if max(s, t) <= N and (s, t) not in seen:
                    seen.add((s, t))
                    yield s, t, (m, n)
            m += 1

    def sample(self, bound):
        for m in range(2, bound + 1):
            for n in range(1, m):
                yield (m, n), PosRational.from_fraction(2 * m * n, m * m - n * n)


@dataclass(frozen=True)
class PolyImage:
    """{P(n) : n >= 1, P(n) >= 1} for an integer polynomial P given low-to-high."""
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", poly.normalize(self.coeffs))
        if self.coeffs == (0,):
            raise ValueError("P must be nonzero")

    def descriptor(self):
        return "poly:coeffs=" + ",".join(str(c) for c in self.coeffs)

    def __call__(self, n):
        return poly.peval(self.coeffs, n)

    @property
    def increasing(self):
        return self.coeffs[-1] > 0

    def find(self, v):
        """Least n >= 1 with P(n) = v, or None."""
        P = self.coeffs
        if poly.degree(P) == 0:
            return 1 if P[0] == v else None
        n0 = poly.monotone_from(P)
        for n in range(1, n0 + 1):
            if poly.peval(P, n) == v:
                return n
        # strictly monotone on [n0, inf)
        sign = 1 if self.increasing else -1
        if sign * (poly.peval(P, n0) - v) > 0:
            return None
        lo, hi = n0, n0 + 1
        while sign * (poly.peval(P, hi) - v) < 0:
            lo, hi = hi, 2 * hi
        while lo < hi:
            mid = (lo + hi) // 2
            if sign * (poly.peval(P, mid) - v) < 0:
                lo = mid + 1
            else:
                hi = mid
        return lo if poly.peval(P, lo) == v else None

    def contains(self, r, bound=None):
        s, t = _st(r)
        if t != 1:
            return _NO
        n = self.find(s)
        return _NO if n is None else Membership.yes(n)

    def values_upto(self, N):
        """Sorted distinct values P(n) in [1, N] with their least n."""
        P = self.coeffs
        n0 = poly.monotone_from(P)
        out = {}
        n = 1
        while True:
            v = poly.peval(P, n)
            if 1 <= v <= N and v not in out:
                out[v] = n
            if n >= n0 and ((self.increasing and v > N) or (not self.increasing and v < 1)):
                break
            if poly.degree(P) == 0 and n >= 1:
                break
            n += 1
        return sorted(out.items())

    def members_within(self, N):
        for v, n in self.values_upto(N):
            yield v, 1, (n,)

    def sample(self, bound):
        for n in range(1, bound + 1):
            v = poly.peval(self.coeffs, n)
            if v >= 1:
                yield (n,), PosRational.from_int(v)


@dataclass(frozen=True)
class LinearImage:
    """{a n + b : n >= 1, a n + b >= 1}."""
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1:
            raise ValueError("a must be positive")

    def descriptor(self):
        return f"linear:a={self.a},b={self.b}"

    @property
    def first_n(self):
        return max(1, (-self.b) // self.a + 1)

    def contains(self, r, bound=None):
        s, t = _st(r)
        if t != 1 or (s - self.b) % self.a:
            return _NO
        n = (s - self.b) // self.a
        return Membership.yes(n) if n >= self.first_n else _NO

    def values_array(self, N):
        n = np.arange(self.first_n, max(self.first_n, (N - self.b) // self.a + 1), dtype=np.int64)
        return self.a * n + self.b

    def members_within(self, N):
        for v in self.values_array(N).tolist():
            yield v, 1, ((v - self.b) // self.a,)

    def sample(self, bound):
        for n in range(self.first_n, bound + 1):
            yield (n,), PosRational.from_int(self.a * n + self.b)


@dataclass(frozen=True)
class FourLinearForms:
    """{(m + l1 n)(m + l2 n) / ((m + l3 n)(m + l4 n)) : m, n >= 1}, positive values only."""
    ls: tuple

    def __post_init__(self):
        ls = tuple(int(x) for x in self.ls)
        if len(ls) != 4 or len(set(ls)) != 4:
            raise ValueError("need four pairwise distinct integers")
        object.__setattr__(self, "ls", ls)

    def descriptor(self):
        return "fourforms:" + ",".join(str(x) for x in self.ls)

    def value(self, m, n):
        l1, l2, l3, l4 = self.ls
        num = (m + l1 * n) * (m + l2 * n)
        den = (m + l3 * n) * (m + l4 * n)
        if num == 0 or den == 0 or (num > 0) != (den > 0):
            return None
        return Fraction(num, den)

    def contains(self, r, bound=200):
        target = as_posrational(r).to_fraction()
        for m in range(1, bound + 1):
            for n in range(1, bound + 1):
                if self.value(m, n) == target:
                    return Membership.yes(m, n)
        return Membership(INCONCLUSIVE, bound=bound)

    def value_table(self, M):
        """{reduced (s, t): least (m, n)} over 1 <= m, n <= M."""
        l1, l2, l3, l4 = self.ls
        m = np.repeat(np.arange(1, M + 1, dtype=np.int64), M)
        n = np.tile(np.arange(1, M + 1, dtype=np.int64), M)
        num = (m + l1 * n) * (m + l2 * n)
        den = (m + l3 * n) * (m + l4 * n)
        ok = (num != 0) & (den != 0) & ((num > 0) == (den > 0))
        num, den, m, n = np.abs(num[ok]), np.abs(den[ok]), m[ok], n[ok]
        g = np.gcd(num, den)
        out = {}
        for s, t, mm, nn in zip((num // g).tolist(), (den // g).tolist(), m.tolist(), n.tolist()):
            out.setdefault((s, t), (mm, nn))
        return out

    def members_within(self, N, param_bound=200):
        """Members with max(s, t) <= N among parameters m, n <= param_bound (not exhaustive)."""
        for (s, t), mn in sorted(self.value_table(param_bound).items(), key=lambda kv: kv[1]):
            if max(s, t) <= N:
                yield s, t, mn

    def sample(self, bound):
        for m in range(1, bound + 1):
            for n in range(1, bound + 1):
                v = self.value(m, n)
                if v is not None:
                    yield (m, n), PosRational.from_fraction(v.numerator, v.denominator)


@dataclass(frozen=True)
class GeometricPowers:
    """{(p/q)^k : k >= 1} with gcd(p, q) = 1."""
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1 or gcd(self.p, self.q) != 1:
            raise ValueError("need coprime positive p, q")

    def descriptor(self):
        return f"geom:p={self.p},q={self.q}"

    def contains(self, r, bound=None):
        r = as_posrational(r)
        base = PosRational.from_fraction(self.p, self.q)
        if base.is_one():
            return Membership.yes(1) if r.is_one() else _NO
        p0, e0 = base.factors[0]
        e = r.valuation(p0)
        if e % e0 or e // e0 < 1:
            return _NO
        k = e // e0
        return Membership.yes(k) if base.pow(k) == r else _NO

    def members_within(self, N):
        if self.p == self.q:
            yield 1, 1, (1,)
            return
        k = 1
        while max(self.p, self.q) ** k <= N:
            yield self.p**k, self.q**k, (k,)
            k += 1

    def sample(self, bound):
        base = PosRational.from_fraction(self.p, self.q)
        for k in range(1, bound + 1):
            yield (k,), base.pow(k)


@dataclass(frozen=True)
class ExplicitList:
    values: tuple

    def __post_init__(self):
        vals = tuple(sorted({_st(v) for v in self.values}))
        object.__setattr__(self, "values", vals)

    def descriptor(self):
        return "list:" + ",".join(f"{s}/{t}" for s, t in self.values)

    def contains(self, r, bound=None):
        st = _st(r)
        for i, v in enumerate(self.values):
            if v == st:
                return Membership.yes(i)
        return _NO

    def members_within(self, N):
        for i, (s, t) in enumerate(self.values):
            if max(s, t) <= N:
                yield s, t, (i,)

    def sample(self, bound):
        for i, (s, t) in enumerate(self.values):
            yield (i,), PosRational.from_fraction(s, t)


# ---------------------------------------------------------------------------
# verdicts

@dataclass(frozen=True)
class Verdict:
    status: str
    reason: str
    certificate: dict = field(default_factory=dict)
    family: str = ""

    def to_json(self):
        return {"status": self.status, "reason": self.reason,
                "certificate": self.certificate, "family": self.family}

    def certificate_coloring(self):
        desc = self.certificate.get("coloring")
        return parse_coloring(desc) if desc else None


def classify_moebius(a, b, c, d, l=1):
    """Decide topological multiplicative recurrence of {((an+b)/(cn+d))^l} where known.

    Tags: ``contains-one`` / ``constant-one`` (trivially recurrent),
    ``limit-not-one`` (a != c, window coloring), ``padic-residue-obstruction``
    (a = c, some prime p | a with p not dividing bd), ``divisor-reduction``
    (a = c and a | b or a | d) and ``open`` otherwise.
    """
    fam = MoebiusPower(a, b, c, d, l)
    desc = fam.descriptor()
    if a == c and b == d:
        return Verdict(RECURRENT, "constant-one", {"n": fam.n0}, desc)
    one = fam.one_at()
    if one is not None:
        return Verdict(RECURRENT, "contains-one", {"n": one}, desc)
    if a != c:
        col = fam.window_coloring()
        return Verdict(NOT_RECURRENT, "limit-not-one",
                       {"coloring": col.descriptor(), "limit": str(fam.limit()),
                        "colors": col.num_colors}, desc)
    bad = [p for p, _ in factorize(a) if (b * d) % p != 0]
    if bad:
        p = bad[0]
        u = _vp(b - d, p) + 1
        col = power_lift_coloring(padic_residue_coloring(p, u), l)
        return Verdict(NOT_RECURRENT, "padic-residue-obstruction",
                       {"coloring": col.descriptor(), "p": p, "u": u, "l": l}, desc)
    if d % a == 0 or b % a == 0:
        inverse = d % a != 0
        top, bottom = (d, b) if inverse else (b, d)
        k = top - bottom
        shift = bottom // a
        sign = 1 if k > 0 else -1
        reduced = MoebiusPower(a, sign, a, 0, l)
        cert = {"reduced": reduced.descriptor(), "inverse": inverse,
                "scale": abs(k), "shift": shift,
                "map": f"n = {abs(k)}*m - {shift}"}
        return Verdict(RECURRENT, "divisor-reduction", cert, desc)
    return Verdict(UNKNOWN, "open", {}, desc)


def _vp(n, p):
    n = abs(n)
    e = 0
    while n and n % p == 0:
        n //= p
        e += 1
    return e


def reduction_embeds(verdict, count=10):
    """Check that members of the reduced family land in the original one.

    Returns the list of (m, n) pairs checked; raises AssertionError on a miss.
    """
    cert = verdict.certificate
    fam = parse_family(verdict.family)
    red = parse_family(cert["reduced"])
    checked = []
    m = 1
    while len(checked) < count:
        n = cert["scale"] * m - cert["shift"]
        if n >= fam.n0 and m >= red.n0:
            r = PosRational.from_fraction(*_frac_pair(red.value(m)))
            if cert["inverse"]:
                r = r.inverse()
            got = fam.contains(r)
            assert got.is_yes and got.params == (n,), (m, n, r, got)
            checked.append((m, n))
        m += 1
    return checked


def _frac_pair(f):
    return f.numerator, f.denominator


def classify_linear(a, b):
    if a < 1:
        raise ValueError("a must be positive")
    desc = LinearImage(a, b).descriptor()
    if (b * (b - 1)) % a == 0:
        return Verdict(RECURRENT, "semigroup-criterion",
                       {"criterion": f"{a} | {b}*({b}-1)",
                        "closure": f"({a}x+{b})({a}y+{b}) = {a}({a}xy+{b}x+{b}y)+{b}^2"}, desc)
    sys = moebius_obstruction_system(a, b)
    col = system_orbit_coloring(sys, default_base(sys))
    return Verdict(NOT_RECURRENT, "fixed-point-free-system",
                   {"coloring": col.descriptor(), "system": sys.case,
                    **{k: v for k, v in sys.params.items() if k not in ("a", "b")}}, desc)


def accumulation_check(family):
    """True iff the family accumulates at 0, 1 or infinity."""
    if isinstance(family, MoebiusPower):
        return family.det != 0 and family.limit() == 1
    if isinstance(family, GeometricPowers):
        return family.p != family.q
    if isinstance(family, LinearImage):
        return True
    if isinstance(family, PolyImage):
        return poly.degree(family.coeffs) >= 1 and family.increasing
    raise Unsupported(f"no limit set computed for {type(family).__name__}")


@dataclass(frozen=True)
class DivisibilityResult:
    divisible: bool
    bound: int
    q: int = None
    residues: tuple = None

    def to_json(self):
        return {"divisible": self.divisible, "bound": self.bound, "q": self.q,
                "residues": list(self.residues) if self.residues else None}


def is_divisible_poly(P, q_bound):
    """Least q <= q_bound such that q never divides P(n), with the residue table of P mod q."""
    P = poly.normalize(P)
    if P == (0,):
        raise ValueError("P must be nonzero")
    for q in range(1, q_bound + 1):
        n = np.arange(q, dtype=np.int64)
        acc = np.zeros(q, dtype=np.int64)
        for c in reversed(P):
            acc = (acc * n + (c % q)) % q
        if not (acc == 0).any():
            return DivisibilityResult(False, q_bound, q, tuple(acc.tolist()))
    return DivisibilityResult(True, q_bound)


# ---------------------------------------------------------------------------
# descriptors

def parse_family(text):
    d = tokenize(text)
    name = d.name
    if name == "moebius":
        kv = d.ints(("a", "b", "c", "d"), {"l": 1})
        for key in ("a", "c", "l"):
            if kv[key] < 1:
                raise DescriptorError(f"{key} must be >= 1", d.text, d.keyed()[key][1]
                                      if key in d.keyed() else 0)
        return MoebiusPower(kv["a"], kv["b"], kv["c"], kv["d"], kv["l"])
    if name == "pythag-hyp":
        _no_items(d)
        return PythagHyp()
    if name == "pythag-leg":
        _no_items(d)
        return PythagLeg()
    if name == "linear":
        kv = d.ints(("a", "b"))
        if kv["a"] < 1:
            raise DescriptorError("a must be >= 1", d.text, d.keyed()["a"][1])
        return LinearImage(kv["a"], kv["b"])
    if name == "poly":
        if not d.items or d.items[0][0] != "coeffs":
            raise DescriptorError("expected coeffs=c0,c1,...", d.text, len(name) + 1)
        for key, _, pos in d.items[1:]:
            if key is not None:
                raise DescriptorError("unexpected key inside coefficient list", d.text, pos)
        from .descriptors import to_int
        coeffs = [to_int(v, d.text, pos) for _, v, pos in d.items]
        if poly.normalize(coeffs) == (0,):
            raise DescriptorError("zero polynomial", d.text, d.items[0][2])
        return PolyImage(tuple(coeffs))
    if name == "geom":
        kv = d.ints(("p", "q"))
        if kv["p"] < 1 or kv["q"] < 1 or gcd(kv["p"], kv["q"]) != 1:
            raise DescriptorError("p, q must be coprime positive integers", d.text,
                                  d.keyed()["p"][1])
        return GeometricPowers(kv["p"], kv["q"])
    if name == "fourforms":
        ls = d.int_list()
        if len(ls) != 4 or len(set(ls)) != 4:
            raise DescriptorError("need four pairwise distinct integers", d.text, len(name) + 1)
        return FourLinearForms(tuple(ls))
    if name == "list":
        vals = []
        for key, v, pos in d.items:
            if key is not None:
                raise DescriptorError("expected num/den values", d.text, pos)
            try:
                vals.append(PosRational.parse(v))
            except (ValueError, ZeroDivisionError):
                raise DescriptorError(f"bad rational {v!r}", d.text, pos) from None
        if not vals:
            raise DescriptorError("empty list", d.text, len(name))
        return ExplicitList(tuple(vals))
    raise DescriptorError(f"unknown family {name!r}", d.text, 0)


def _no_items(d):
    if d.items:
        raise DescriptorError("this family takes no parameters", d.text, d.items[0][2])
