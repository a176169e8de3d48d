"""Integer primitives: primality, factorization, Omega, p-adic parts, sieves."""

from functools import lru_cache
from math import gcd, isqrt
import random

import numpy as np

from .errors import FactorizationFailure, NotPrime

__all__ = [
    "is_prime", "factorize", "big_omega", "p_parts", "valuation", "is_square",
    "gcd", "integer_nth_root", "primes_upto", "omega_table", "spf_table",
    "MAX_FACTOR_INPUT",
]

MAX_FACTOR_INPUT = 2**63
TRIAL_LIMIT = 10**6

# Deterministic for n < 3.3e24, which covers every 64-bit input.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n):
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _require_prime(p):
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


def is_square(n):
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def integer_nth_root(n, k):
    """Return r with r**k == n, or None. n >= 0, k >= 1."""
    if n < 0 or k < 1:
        return None
    if n < 2 or k == 1:
        return n
    if k == 2:
        r = isqrt(n)
        return r if r * r == n else None
    r = int(round(n ** (1.0 / k))) if n.bit_length() < 1000 else 1 << (n.bit_length() // k)
    # Newton refinement on integers.
    r = max(r, 1)
    while True:
        nr = ((k - 1) * r + n // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**k == n:
            return c
    return None


def _brent(n, rng):
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def _split(n, rng, out):
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _brent(n, rng)
    _split(d, rng, out)
    _split(n // d, rng, out)


@lru_cache(maxsize=1 << 16)
def factorize(n):
    """Prime factorization of n >= 1 as a tuple of (prime, multiplicity), sorted by prime."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    if n > MAX_FACTOR_INPUT:
        raise FactorizationFailure(f"{n} exceeds the factorization budget 2**63")
    out = {}
    for p in _SMALL_PRIMES:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
    p = 53
    while p * p <= n and p < TRIAL_LIMIT and not is_prime(n):
        while p * p <= n and p < TRIAL_LIMIT and n % p:
            p += 2
        if p * p > n or p >= TRIAL_LIMIT:
            break
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out[p] = e
        p += 2
    if n > 1:
        # fixed seed keeps the split order (hence the cache) reproducible
        _split(n, random.Random(n), out)
    return tuple(sorted(out.items()))


def big_omega(n):
    return sum(e for _, e in factorize(n))


def valuation(n, p):
    _require_prime(p)
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def p_parts(n, p):
    """Split n = p**u * v with p not dividing v; returns (u, v)."""
    if n < 1:
        raise ValueError("p_parts needs n >= 1")
    _require_prime(p)
    u = 0
    while n % p == 0:
        n //= p
        u += 1
    return u, n


def primes_upto(limit):
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    sieve[4::2] = False
    for p in range(3, isqrt(limit) + 1, 2):
        if sieve[p]:
            sieve[p * p::2 * p] = False
    return np.flatnonzero(sieve).astype(np.int64)


_omega_cache = {}


def omega_table(limit):
    """Array w with w[n] = Omega(n) for 0 <= n <= limit (w[0] = 0 by convention)."""
    cached = _omega_cache.get("table")
    if cached is not None and len(cached) > limit:
        return cached[: limit + 1]
    w = np.zeros(limit + 1, dtype=np.int16)
    for p in primes_upto(limit).tolist():
        q = p
        while q <= limit:
            w[q::q] += 1
            q *= p
    _omega_cache["table"] = w
    return w


def spf_table(limit):
    """Smallest prime factor for 0..limit (spf[0] = 0, spf[1] = 1)."""
    spf = np.arange(limit + 1, dtype=np.int64)
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == p:
            block = spf[p * p::p]
            mask = block == np.arange(p * p, limit + 1, p)
            block[mask] = p
            spf[p * p::p] = block
    return spf
