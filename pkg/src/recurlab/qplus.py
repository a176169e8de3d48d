"""Positive rationals kept in factored form.

A ``PosRational`` is a sorted tuple of ``(prime, exponent)`` pairs with no
zero exponents; the empty tuple is 1.  Equality is structural, so two values
compare equal exactly when they denote the same rational.

>>> r = PosRational.from_fraction(6, 4)
>>> r.factors
((2, -1), (3, 1))
>>> str(r)
'3/2'
>>> PosRational.from_fraction(25, 16).nth_root(2)
PosRational('5/4')
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import factorize, is_prime
from .errors import NotPrime, ZeroOrNegative

__all__ = ["PosRational", "ONE", "as_posrational"]

_EXP_LIMIT = 2**62


def _merge(fa, fb, sign=1):
    out = dict(fa)
    for p, e in fb:
        out[p] = out.get(p, 0) + sign * e
    return tuple(sorted((p, e) for p, e in out.items() if e))


def _check_exponents(factors):
    for _, e in factors:
        if abs(e) > _EXP_LIMIT:
            raise OverflowError("exponent outside the supported range +-2**62")
    return factors


@dataclass(frozen=True, order=False)
class PosRational:
    factors: tuple = ()

    @classmethod
    def from_fraction(cls, num, den=1):
        if num <= 0 or den <= 0:
            raise ZeroOrNegative(f"{num}/{den} is not a positive rational")
        g = gcd(num, den)
        num //= g
        den //= g
        fs = dict(factorize(num)) if num > 1 else {}
        for p, e in (factorize(den) if den > 1 else ()):
            fs[p] = -e
        return cls(tuple(sorted(fs.items())))

    @classmethod
    def from_int(cls, n):
        return cls.from_fraction(n, 1)

    @classmethod
    def from_factors(cls, mapping):
        """Build from a {prime: exponent} mapping, validating primality."""
        items = []
        for p, e in sorted(dict(mapping).items()):
            if not is_prime(p):
                raise NotPrime(f"{p} is not prime")
            if e:
                items.append((p, int(e)))
        return cls(_check_exponents(tuple(items)))

    @property
    def num(self):
        n = 1
        for p, e in self.factors:
            if e > 0:
                n *= p**e
        return n

    @property
    def den(self):
        d = 1
        for p, e in self.factors:
            if e < 0:
                d *= p ** (-e)
        return d

    def to_fraction(self):
        return Fraction(self.num, self.den)

    def is_one(self):
        return not self.factors

    def is_integer(self):
        return all(e > 0 for _, e in self.factors)

    def mul(self, other):
        return PosRational(_merge(self.factors, other.factors))

    def truediv(self, other):
        return PosRational(_merge(self.factors, other.factors, -1))

    def inverse(self):
        return PosRational(tuple((p, -e) for p, e in self.factors))

    def pow(self, k):
        if k == 0:
            return ONE
        return PosRational(_check_exponents(tuple((p, e * k) for p, e in self.factors)))

    def nth_root(self, ell):
        if ell < 1:
            raise ValueError("root order must be >= 1")
        if any(e % ell for _, e in self.factors):
            return None
        return PosRational(tuple((p, e // ell) for p, e in self.factors))

    def valuation(self, p):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    __mul__ = mul
    __truediv__ = truediv
    __pow__ = pow

    def __lt__(self, other):
        return self.to_fraction() < other.to_fraction()

    def __str__(self):
        return f"{self.num}/{self.den}"

    def __repr__(self):
        return f"PosRational('{self}')"

    def factored(self):
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" for p, e in self.factors)

    @classmethod
    def parse(cls, text):
        """Parse "num/den" or a bare positive integer."""
        text = text.strip()
        if "/" in text:
            n, d = text.split("/", 1)
            return cls.from_fraction(int(n), int(d))
        return cls.from_fraction(int(text), 1)


ONE = PosRational(())


def as_posrational(x, den=None):
    """Coerce an int, (num, den) pair, Fraction or PosRational."""
    if isinstance(x, PosRational):
        return x
    if den is not None:
        return PosRational.from_fraction(x, den)
    if isinstance(x, Fraction):
        if x <= 0:
            raise ZeroOrNegative(f"{x} is not positive")
        return PosRational.from_fraction(x.numerator, x.denominator)
    if isinstance(x, tuple):
        return PosRational.from_fraction(*x)
    return PosRational.from_fraction(int(x), 1)
