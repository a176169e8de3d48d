"""Finite-scale densities: multiplicative Folner sets, prefix densities, syndeticity.

Everything here is evaluated on a finite grid.  A max over a grid is reported
as an empirical limsup, never as a limit.
"""

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, prod

import numpy as np

from .arith import primes_upto, valuation
from .errors import BudgetExceeded, EmptyPrefix

__all__ = [
    "FolnerIndex", "folner_density", "upper_mult_density", "additive_prefix_density",
    "prefix_envelope", "syndetic_check", "SparseSemigroupSchedule", "ratio_experiment",
    "syndetic_additive_average", "finite_system_recurrence_average", "DEFAULT_CAP",
]

DEFAULT_CAP = 10**7


def _legendre(N, p):
    e, q = 0, p
    while q <= N:
        e += N // q
        q *= p
    return e


class FolnerIndex:
    """Phi_N = divisors of N!, built from the prime-exponent box of N!."""

    def __init__(self, N, cap=DEFAULT_CAP):
        if N < 1:
            raise ValueError("N must be positive")
        self.N = N
        self.exponents = tuple((int(p), _legendre(N, int(p))) for p in primes_upto(N))
        self.size = prod(e + 1 for _, e in self.exponents)
        if self.size > cap:
            raise BudgetExceeded(f"|Phi_{N}| = {self.size} exceeds cap {cap}")
        self._members = None

    def members(self):
        if self._members is None:
            vals = [1]
            for p, e in self.exponents:
                pw = [p**i for i in range(e + 1)]
                vals = [v * q for v in vals for q in pw]
            self._members = sorted(vals)
        return self._members

    def __contains__(self, x):
        if x < 1:
            return False
        for p, e in self.exponents:
            v = valuation(x, p)
            if v > e:
                return False
            x //= p**v
        return x == 1

    def invariance_ratio(self, g):
        """|g Phi_N & Phi_N| / |Phi_N|, computed on exponent boxes."""
        hit = 1
        for p, e in self.exponents:
            v = valuation(g, p)
            hit *= max(0, e + 1 - v)
        rest = g
        for p, _ in self.exponents:
            rest //= p ** valuation(rest, p)
        if rest != 1:
            return Fraction(0)
        return Fraction(hit, self.size)


def folner_density(pred, N, cap=DEFAULT_CAP):
    F = FolnerIndex(N, cap)
    return Fraction(sum(1 for x in F.members() if pred(x)), F.size)


def upper_mult_density(pred, Ns, cap=DEFAULT_CAP):
    """max over N in Ns of |A & Phi_N| / |Phi_N|."""
    Ns = list(Ns)
    if not Ns:
        raise ValueError("empty index range")
    return max(folner_density(pred, N, cap) for N in Ns)


def additive_prefix_density(pred, N):
    if N < 1:
        raise ValueError("N must be positive")
    return Fraction(sum(1 for n in range(1, N + 1) if pred(n)), N)


def prefix_envelope(pred, Ns):
    """[(N, count, density)] for each N, one pass over [max N]."""
    Ns = sorted(set(int(N) for N in Ns))
    out, count, n = [], 0, 0
    for N in Ns:
        while n < N:
            n += 1
            count += bool(pred(n))
        out.append((N, count, Fraction(count, N)))
    return out


def syndetic_check(S_pred, G_pred, F_bound, N):
    """Greedy F within G & [F_bound] with union of S/x covering G & [N]; None if none."""
    uncovered = {n for n in range(1, N + 1) if G_pred(n)}
    F = []
    for x in range(1, F_bound + 1):
        if not uncovered:
            break
        if not G_pred(x):
            continue
        hit = {n for n in uncovered if S_pred(n * x)}
        if hit:
            F.append(x)
            uncovered -= hit
    return tuple(F) if not uncovered else None


@dataclass(frozen=True)
class SparseSemigroupSchedule:
    """Generators of G: primes in the union of [N_i, 2N_i], or a named special case.

    kind "schedule" uses starts; "naturals" is all of N; "squares" is the
    closure of the squared primes.  G always contains 1.
    """
    kind: str = "schedule"
    starts: tuple = ()

    def __post_init__(self):
        if self.kind not in ("schedule", "naturals", "squares"):
            raise ValueError(f"unknown schedule kind {self.kind!r}")
        if self.kind == "schedule":
            if not self.starts or any(a >= b for a, b in zip(self.starts, self.starts[1:])):
                raise ValueError("starts must be nonempty and strictly increasing")

    def generators(self, limit):
        ps = primes_upto(limit).tolist()
        if self.kind == "naturals":
            return ps
        if self.kind == "squares":
            return [p * p for p in ps if p * p <= limit]
        return [p for p in ps if any(s <= p <= 2 * s for s in self.starts)]

    def closure(self, limit, budget=5 * 10**7):
        """Sorted members of G up to limit, smallest first from a priority queue."""
        if self.kind == "naturals":
            return np.arange(1, limit + 1, dtype=np.int64)
        if self.kind == "squares":
            return np.arange(1, isqrt(limit) + 1, dtype=np.int64) ** 2
        gens = self.generators(limit)
        heap = [(1, 0)]
        out = []
        while heap:
            x, i = heapq.heappop(heap)
            out.append(x)
            if len(out) > budget:
                raise BudgetExceeded(f"closure exceeds {budget} elements below {limit}")
            # extend only by generators at or after the last one used, so each product appears once
            for j in range(i, len(gens)):
                y = x * gens[j]
                if y > limit:
                    break
                heapq.heappush(heap, (y, j))
        return np.array(out, dtype=np.int64)


def ratio_experiment(schedule, points):
    """[(N, |G & [N]|, |G & [2N]|, ratio)] for each evaluation point N."""
    points = sorted(int(N) for N in points)
    if not points or points[0] < 1:
        raise ValueError("evaluation points must be positive")
    G = schedule.closure(2 * points[-1])
    out = []
    for N in points:
        a = int(np.searchsorted(G, N, side="right"))
        b = int(np.searchsorted(G, 2 * N, side="right"))
        out.append((N, a, b, Fraction(a, b)))
    return out


def syndetic_additive_average(S_pred, G_pred, N):
    """E over n in G & [N] of 1_S(n)."""
    total = hits = 0
    for n in range(1, N + 1):
        if G_pred(n):
            total += 1
            hits += bool(S_pred(n))
    if total == 0:
        raise EmptyPrefix(f"G has no members in [1, {N}]")
    return Fraction(hits, total)


def finite_system_recurrence_average(sys, A, G_pred, N):
    """E over n in G & [N] of mu(A & T_n^{-1} A), mu uniform on the states."""
    A = list(A)
    if not A:
        raise ValueError("A must be nonempty")
    ns = np.array([n for n in range(1, N + 1) if G_pred(n)], dtype=np.int64)
    if len(ns) == 0:
        raise EmptyPrefix(f"G has no members in [1, {N}]")
    members = np.array(A)
    hits = 0
    for x in A:
        orbit = sys.orbit_table(N, x)
        hits += int(np.isin(orbit[ns], members).sum())
    return Fraction(hits, len(ns) * len(sys.states))

