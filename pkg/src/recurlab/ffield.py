"""Quadratic residues in prime fields and the diagonal quadric a x^2 + b y^2 + c z^2.

    >>> sorted(squares(13))
    [0, 1, 3, 4, 9, 10, 12]
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arith import is_prime
from .errors import (DuplicateShift, NotPrime, SizeShortfall, SumIsZero,
                     VerificationFailure)

__all__ = [
    "PrimeField", "field", "squares", "shifted_squares_intersection", "find_pythagorean_pair",
    "find_quadratic_solution", "AvoidingSetCertificate", "construct_avoiding_set",
    "count_solutions", "next_prime_above",
]


class PrimeField:
    def __init__(self, p):
        p = int(p)
        if p < 3 or not is_prime(p):
            raise NotPrime(f"{p} is not an odd prime")
        self.p = p
        xs = np.arange(p, dtype=np.int64)
        sq = xs * xs % p
        self.is_square = np.zeros(p, dtype=bool)
        self.is_square[sq] = True
        self.square_of = sq

    def squares(self):
        return frozenset(np.flatnonzero(self.is_square).tolist())

    def inverse(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.p}")
        return pow(a, -1, self.p)

    def __repr__(self):
        return f"PrimeField({self.p})"


@lru_cache(maxsize=32)
def field(p):
    return PrimeField(p)


def squares(p):
    return field(p).squares()


def shifted_squares_intersection(p, shifts):
    """|(Q - a_1) & ... & (Q - a_k)|, i.e. #{x : x + a_i is a square for every i}."""
    F = field(p)
    red = [int(a) % p for a in shifts]
    if len(set(red)) != len(red):
        raise DuplicateShift(f"shifts {tuple(shifts)} are not distinct mod {p}")
    xs = np.arange(p, dtype=np.int64)
    ok = np.ones(p, dtype=bool)
    for a in red:
        ok &= F.is_square[(xs + a) % p]
    return int(ok.sum())


def find_pythagorean_pair(p, A):
    """Least (x, y) in A x A, lexicographically, with x^2 + y^2 a square mod p."""
    F = field(p)
    vals = np.array(sorted({int(x) % p for x in A}), dtype=np.int64)
    if len(vals) == 0:
        return None
    sq = vals * vals % p
    for x, sx in zip(vals.tolist(), sq.tolist()):
        hit = F.is_square[(sx + sq) % p]
        if hit.any():
            return x, int(vals[int(np.argmax(hit))])
    return None


def _root_table(p, A):
    """For each residue r, the least z in A with z^2 = r, or -1."""
    table = np.full(p, -1, dtype=np.int64)
    for z in sorted({int(z) % p for z in A}, reverse=True):
        table[z * z % p] = z
    return table


def find_quadratic_solution(a, b, c, p, A):
    """Least (x, y, z) in A^3, lexicographically, with a x^2 + b y^2 + c z^2 = 0 mod p."""
    F = field(p)
    cinv = F.inverse(c)
    vals = np.array(sorted({int(x) % p for x in A}), dtype=np.int64)
    if len(vals) == 0:
        return None
    roots = _root_table(p, vals.tolist())
    sq = vals * vals % p
    for x, sx in zip(vals.tolist(), sq.tolist()):
        target = (-(a * sx + b * sq) % p) * cinv % p
        z = roots[target]
        found = np.flatnonzero(z >= 0)
        if len(found):
            k = int(found[0])
            return x, int(vals[k]), int(z[k])
    return None


def count_solutions(a, b, c, p, A):
    """Number of (x, y, z) in A^3 with a x^2 + b y^2 + c z^2 = 0 mod p."""
    F = field(p)
    cinv = F.inverse(c)
    vals = np.array(sorted({int(x) % p for x in A}), dtype=np.int64)
    if len(vals) == 0:
        return 0
    mult = np.zeros(p, dtype=np.int64)
    np.add.at(mult, vals * vals % p, 1)
    sq = vals * vals % p
    total = 0
    for sx in sq.tolist():
        target = (-(a * sx + b * sq) % p) * cinv % p
        total += int(mult[target].sum())
    return total


def next_prime_above(n):
    q = n + 1
    while not is_prime(q):
        q += 1
    return q


@dataclass
class AvoidingSetCertificate:
    a: int
    b: int
    c: int
    p: int
    m: int
    q: int
    i: int
    j: int
    A: tuple
    required: float
    solutions_checked: int

    @property
    def size(self):
        return len(self.A)

    def to_json(self):
        return {"a": self.a, "b": self.b, "c": self.c, "p": self.p, "m": self.m, "q": self.q,
                "i": self.i, "j": self.j, "size": self.size, "required": self.required,
                "solutions_checked": self.solutions_checked, "A": list(self.A)}


def construct_avoiding_set(a, b, c, p):
    """A subset of F_p of size about p/(m q) with no solution of a x^2 + b y^2 + c z^2 = 0.

    Residues x in [i p/m, (i+1) p/m) with x = j mod q are collected into
    B_{i,j}, and A_{i,j} is the set of square roots of B_{i,j}.  A pair is
    good when m j != i p mod q; the largest good pair is taken and then
    checked against every (x, y) in A^2.
    """
    s = a + b + c
    if s == 0:
        raise SumIsZero(f"a + b + c = 0 for {(a, b, c)}")
    F = field(p)
    if c % p == 0:
        raise ValueError("c must be invertible mod p")
    m = abs(s)
    q = next_prime_above(max(m, 5))
    xs = np.arange(1, p, dtype=np.int64)
    qr = xs[F.is_square[xs]]
    # bucket i: i p <= m x < (i+1) p
    bucket_i = (m * qr) // p
    bucket_j = qr % q
    counts = np.zeros((m, q), dtype=np.int64)
    np.add.at(counts, (bucket_i, bucket_j), 1)
    best = None
    for i in range(m):
        for j in range(q):
            if (m * j - i * p) % q == 0:
                continue
            if best is None or counts[i, j] > counts[best]:
                best = (i, j)
    required = (1 - 5 / q) * p / (m * q)
    best_size = 2 * int(counts[best]) if best is not None else 0
    if best is None or best_size < required:
        raise SizeShortfall(f"largest good pair gives |A| = {best_size} < {required:.2f}; "
                            f"try a larger p", best_size, required)
    i, j = best
    B = qr[(bucket_i == i) & (bucket_j == j)]
    inB = np.zeros(p, dtype=bool)
    inB[B] = True
    A = tuple(int(y) for y in np.flatnonzero(inB[F.square_of]) if y != 0)
    sols = count_solutions(a, b, c, p, A)
    if sols:
        witness = find_quadratic_solution(a, b, c, p, A)
        raise VerificationFailure(f"constructed set for {(a, b, c)} mod {p} has {sols} "
                                  f"solutions, e.g. {witness}")
    return AvoidingSetCertificate(a, b, c, p, m, q, i, j, A, required, len(A) ** 2)
