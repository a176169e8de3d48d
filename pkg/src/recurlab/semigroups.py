"""Semigroups inside integer and rational families.

Searches here only refute: a closure search that finds nothing reports
"closed up to budget", never "closed".
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

from . import poly
from .arith import integer_nth_root
from .errors import DuplicateAbsoluteValue
from .qplus import PosRational
from .recsets import (INCONCLUSIVE, ExplicitList, FourLinearForms, GeometricPowers,
                      LinearImage, PolyImage)

__all__ = [
    "SemigroupDecomposition", "PolyClassification", "poly_semigroup_classifier",
    "shift_to_depressed", "closure_sample", "ProgressionHit", "geometric_progression_search",
    "closure_violation_search", "vanishing_power_sum", "fourforms_progression_check",
]


@dataclass(frozen=True)
class SemigroupDecomposition:
    a: int
    b: int
    d: int
    criterion_holds: bool

    def expand(self):
        return poly.linear_power(self.a, self.b, self.d)


@dataclass(frozen=True)
class PolyClassification:
    contains_semigroup: bool
    reason: str
    decomposition: SemigroupDecomposition = None

    def to_json(self):
        dec = self.decomposition
        return {"contains_semigroup": self.contains_semigroup, "reason": self.reason,
                "decomposition": None if dec is None else
                {"a": dec.a, "b": dec.b, "d": dec.d, "criterion_holds": dec.criterion_holds}}


def poly_semigroup_classifier(P):
    """Does {P(n)} contain an infinite multiplicative semigroup?

    It does exactly when P = (a x + b)^d with a | b(b - 1).  The power is
    recovered from the coefficients: a is the d-th root of the leading
    coefficient, b = c_{d-1} / (d a^{d-1}), and the expansion is checked.
    """
    P = poly.normalize(P)
    d = poly.degree(P)
    if d < 1:
        return PolyClassification(False, "constant polynomial")
    if P[-1] <= 0:
        return PolyClassification(False, "leading coefficient is not positive")
    a = integer_nth_root(P[-1], d)
    if a is None:
        return PolyClassification(False, f"leading coefficient {P[-1]} is not a {d}-th power")
    num, den = P[d - 1], d * a ** (d - 1)
    if num % den:
        return PolyClassification(False, "next coefficient is not divisible by d*a^(d-1)")
    b = num // den
    if poly.linear_power(a, b, d) != P:
        return PolyClassification(False, f"not a power of a linear form (candidate ({a}x+{b})^{d})")
    holds = (b * (b - 1)) % a == 0
    dec = SemigroupDecomposition(a, b, d, holds)
    if holds:
        return PolyClassification(True, f"({a}x+{b})^{d} with {a} | {b}*({b}-1)", dec)
    return PolyClassification(False, f"({a}x+{b})^{d} but {a} does not divide {b}*({b}-1)", dec)


def shift_to_depressed(P):
    """(a, b, Q) with P(x) = Q(a x + b), a = d c_d, b = c_{d-1}, and Q's x^{d-1} coefficient 0.

    Q has Fraction coefficients, low to high.
    """
    P = poly.normalize(P)
    d = poly.degree(P)
    if d < 1:
        raise ValueError("need a nonconstant polynomial")
    a, b = d * P[-1], P[d - 1]
    # Q(y) = P((y - b) / a) = sum_i c_i ((y - b)/a)^i
    Q = [Fraction(0)] * (d + 1)
    lin = [Fraction(-b, a), Fraction(1, a)]
    powr = [Fraction(1)]
    for c in P:
        for j, v in enumerate(powr):
            Q[j] += c * v
        powr = _fmul(powr, lin)
    return a, b, tuple(Q)


def _fmul(A, B):
    out = [Fraction(0)] * (len(A) + len(B) - 1)
    for i, x in enumerate(A):
        for j, y in enumerate(B):
            out[i + j] += x * y
    return out


def closure_sample(dec, M=50, positive_base=True):
    """Pairs m <= n <= M whose product P(m)P(n) is not P(z) for any z >= 1.

    With ``positive_base`` (default) only m, n with a*m + b >= 1 are sampled:
    those values form the semigroup the decomposition guarantees.  Without it
    every m with P(m) > 0 is sampled, and negative bases can break closure,
    e.g. (3x - 5)^2 at m = 1, n = 3.
    """
    a, b, d = dec.a, dec.b, dec.d
    ms = [m for m in range(1, M + 1)
          if (a * m + b >= 1 if positive_base else (a * m + b) ** d > 0)]
    bad = []
    for i, m in enumerate(ms):
        pm = (a * m + b) ** d
        for n in ms[i:]:
            prod = pm * (a * n + b) ** d
            root = integer_nth_root(prod, d)
            ok = False
            if root is not None:
                for rho in ((root, -root) if d % 2 == 0 else (root,)):
                    if (rho - b) % a == 0 and (rho - b) // a >= 1:
                        ok = True
                        break
            if not ok:
                bad.append((m, n))
    return bad


@dataclass
class ProgressionHit:
    p: int
    q: int
    witnesses: list = field(default_factory=list)
    inconclusive: bool = False

    def to_json(self):
        return {"p": self.p, "q": self.q, "witnesses": [list(w) if w else None for w in self.witnesses],
                "inconclusive": self.inconclusive}


def geometric_progression_search(family, B, K):
    """Coprime p != q <= B with (p/q)^k in the family for every 1 <= k <= K."""
    if B < 2 or K < 1:
        raise ValueError("need B >= 2 and K >= 1")
    hits = []
    for p in range(1, B + 1):
        for q in range(1, B + 1):
            if p == q or gcd(p, q) != 1:
                continue
            base = PosRational.from_fraction(p, q)
            wit, flag = [], False
            for k in range(1, K + 1):
                m = family.contains(base.pow(k))
                if m.status == INCONCLUSIVE:
                    flag = True
                    wit.append(None)
                elif m.is_yes:
                    wit.append(m.params)
                else:
                    break
            else:
                hits.append(ProgressionHit(p, q, wit, flag))
    return hits


def _integer_values(family, N):
    if isinstance(family, LinearImage):
        return family.values_array(N)
    if isinstance(family, PolyImage):
        return np.array([v for v, _ in family.values_upto(N)], dtype=np.int64)
    if isinstance(family, GeometricPowers) and family.q == 1:
        return np.array([s for s, _, _ in family.members_within(N)], dtype=np.int64)
    if isinstance(family, ExplicitList) and all(t == 1 for _, t in family.values):
        return np.array([s for s, _ in family.values if s <= N], dtype=np.int64)
    raise TypeError(f"{type(family).__name__} is not an integer family")


def _member_test(family, limit):
    """Vectorized membership for integers up to limit."""
    if isinstance(family, LinearImage) or (isinstance(family, PolyImage)
                                           and poly.degree(family.coeffs) == 1
                                           and family.coeffs[1] > 0):
        a, b = (family.a, family.b) if isinstance(family, LinearImage) else \
            (family.coeffs[1], family.coeffs[0])
        first = max(1, (-b) // a + 1)
        return lambda v: ((v - b) % a == 0) & ((v - b) // a >= first)
    vals = _integer_values(family, limit)
    return lambda v: np.isin(v, vals)


def closure_violation_search(family, N):
    """Least (x, y), x <= y in S with xy not in S, over S = family on [1, N]; None if none."""
    vals = np.asarray(_integer_values(family, N), dtype=np.int64)
    member = _member_test(family, N * N)
    for i, x in enumerate(vals.tolist()):
        prods = x * vals[i:]
        ok = member(prods)
        if not ok.all():
            j = int(np.argmin(ok))
            y = int(vals[i + j])
            return x, y, x * y
    return None


def vanishing_power_sum(coeffs, bases, K):
    """All 1 <= k <= K with sum a_i q_i^k = 0, evaluated exactly."""
    a = [Fraction(x) for x in coeffs]
    q = [Fraction(x) for x in bases]
    if len(a) != len(q):
        raise ValueError("coeffs and bases differ in length")
    if any(x == 0 for x in q):
        raise ValueError("bases must be nonzero")
    absq = [abs(x) for x in q]
    if len(set(absq)) != len(absq):
        raise DuplicateAbsoluteValue("bases must have pairwise distinct absolute values")
    out = []
    powers = [Fraction(1)] * len(q)
    for k in range(1, K + 1):
        powers = [pw * x for pw, x in zip(powers, q)]
        if sum(ai * pw for ai, pw in zip(a, powers)) == 0:
            out.append(k)
    return out


def fourforms_progression_check(ls, B, K, M):
    """Coprime p != q <= B whose powers up to K all occur among parameters m, n <= M."""
    fam = FourLinearForms(tuple(ls))
    table = fam.value_table(M)
    out = []
    for p in range(1, B + 1):
        for q in range(1, B + 1):
            if p == q or gcd(p, q) != 1:
                continue
            wit = []
            for k in range(1, K + 1):
                w = table.get((p**k, q**k))
                if w is None:
                    break
                wit.append(w)
            else:
                out.append(ProgressionHit(p, q, wit))
    return out
