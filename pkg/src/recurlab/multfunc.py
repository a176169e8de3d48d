"""Unimodular completely multiplicative functions and related experiments.

Angles are measured in turns, so a value is exp(2*pi*i*angle).  Omega roots and
prime tables with rational angles stay exact (Fraction); the Archimedean
character n -> n^{it} uses floats.
"""

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from .arith import big_omega, factorize, omega_table
from .errors import UnlistedPrime

__all__ = [
    "ArchimedeanCharacter", "OmegaRoot", "PrimeTable", "CircleValue", "GapResult",
    "liouville", "evaluate", "chord", "shift_dilation_gap", "omega_witnesses",
    "cesaro_character_average", "avoidance_set", "frac_n2x", "pythagorean_triples_in",
]

FLOAT_TOL = 1e-9


@dataclass(frozen=True)
class ArchimedeanCharacter:
    t: float

    @property
    def description(self):
        return f"n^(i*{self.t})"


@dataclass(frozen=True)
class OmegaRoot:
    a: int
    q: int

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("q must be positive")

    @property
    def description(self):
        return f"exp(2 pi i {self.a} Omega(n) / {self.q})"


@dataclass(frozen=True)
class PrimeTable:
    """f(p) = exp(2 pi i angles[p]); primes not listed fall back to `default` if given."""
    angles: tuple = ()
    default: object = None

    @classmethod
    def of(cls, mapping, default=None):
        return cls(tuple(sorted(mapping.items())), default)

    def angle_of(self, p):
        for q, ang in self.angles:
            if q == p:
                return ang
        if self.default is None:
            raise UnlistedPrime(p)
        return self.default

    @property
    def description(self):
        return f"prime table on {[p for p, _ in self.angles]}"


def liouville():
    return OmegaRoot(1, 2)


@dataclass(frozen=True)
class CircleValue:
    angle: object  # Fraction when exact, float otherwise

    @property
    def exact(self):
        return isinstance(self.angle, Fraction)

    @property
    def value(self):
        return cmath.exp(2j * math.pi * float(self.angle))

    def __mul__(self, other):
        return CircleValue(_norm(self.angle + other.angle))


def _norm(angle):
    if isinstance(angle, Fraction):
        return angle - (angle.numerator // angle.denominator)
    return angle % 1.0


def evaluate(f, n):
    if n < 1:
        raise ValueError("f is defined on positive integers")
    if isinstance(f, OmegaRoot):
        return CircleValue(Fraction((f.a * big_omega(n)) % f.q, f.q))
    if isinstance(f, ArchimedeanCharacter):
        return CircleValue((f.t * math.log(n) / (2 * math.pi)) % 1.0)
    if isinstance(f, PrimeTable):
        total = Fraction(0)
        for p, e in factorize(n):
            total += e * f.angle_of(p)
        return CircleValue(_norm(total))
    raise TypeError(f"unknown function kind {type(f).__name__}")


def chord(u, v):
    """|exp(2 pi i u) - exp(2 pi i v)| with exact zero for equal exact angles."""
    if isinstance(u, Fraction) and isinstance(v, Fraction) and _norm(u - v) == 0:
        return 0.0
    return abs(2.0 * math.sin(math.pi * float(u - v)))


@dataclass
class GapResult:
    min_gap: float
    argmin: int
    envelope: list = field(default_factory=list)  # (n, gap) each time the running min drops

    def __iter__(self):
        yield self.min_gap
        yield self.argmin


def _envelope(gaps, start=1):
    running = np.minimum.accumulate(gaps)
    drops = np.flatnonzero(np.r_[True, running[1:] < running[:-1]])
    return [(int(i) + start, float(gaps[i])) for i in drops]


def shift_dilation_gap(f, a, k, N):
    """min over 1 <= n <= N of |f(an+k) - f(an)|, with the first minimizing n."""
    if min(a, k, N) < 1:
        raise ValueError("a, k, N must be positive")
    n = np.arange(1, N + 1, dtype=np.int64)
    if isinstance(f, OmegaRoot):
        w = omega_table(a * N + k).astype(np.int64)
        diff = (f.a * (w[a * n + k] - w[a * n])) % f.q
        gaps = np.abs(2.0 * np.sin(np.pi * diff / f.q))
        gaps[diff == 0] = 0.0
    elif isinstance(f, ArchimedeanCharacter):
        delta = f.t * np.log1p(k / (a * n.astype(np.float64))) / (2 * np.pi)
        gaps = np.abs(2.0 * np.sin(np.pi * delta))
    else:
        gaps = np.array([chord(evaluate(f, a * m + k).angle, evaluate(f, a * m).angle)
                         for m in range(1, N + 1)])
    i = int(np.argmin(gaps))
    return GapResult(float(gaps[i]), i + 1, _envelope(gaps))


def omega_witnesses(a, k, q, N):
    """All n <= N with Omega(an+k) = Omega(an) mod q, ascending."""
    if min(a, k, q, N) < 1:
        raise ValueError("a, k, q, N must be positive")
    w = omega_table(a * N + k).astype(np.int64)
    n = np.arange(1, N + 1, dtype=np.int64)
    hit = (w[a * n + k] - w[a * n]) % q == 0
    return (n[hit]).tolist()


def cesaro_character_average(t, N, chunk=1 << 20):
    """(1/N) sum_{n <= N} n^{it}."""
    if N < 1:
        raise ValueError("N must be positive")
    if t == 0:
        return complex(1.0)
    total = 0j
    for lo in range(1, N + 1, chunk):
        n = np.arange(lo, min(N, lo + chunk - 1) + 1, dtype=np.float64)
        total += np.exp(1j * t * np.log(n)).sum()
    return complex(total / N)


_FRAC_BITS = 192


def _fixed_point(x0, bits):
    with mpmath.workprec(bits + 64):
        v = x0() if callable(x0) else mpmath.mpf(x0)
        return int(mpmath.floor(v * mpmath.mpf(2) ** bits))


def frac_n2x(x0, ns, bits=_FRAC_BITS):
    """frac(n^2 x0) as exact fixed-point integers over 2**bits.

    x0 may be a number or a zero-argument callable returning an mpmath value
    (evaluated at bits+64 of working precision), e.g. ``lambda: mpmath.sqrt(2)``.
    """
    X = _fixed_point(x0, bits)
    mask = (1 << bits) - 1
    return [(n * n * X) & mask for n in ns]


def avoidance_set(x0, delta, N, bits=_FRAC_BITS):
    """{n <= N : frac(n^2 x0) in [1/2 - delta, 1/2 + delta]}, sorted."""
    if not 0 < delta < 0.25:
        raise ValueError("delta must lie in (0, 1/4)")
    d = Fraction(delta)
    scale = 1 << bits
    lo = (Fraction(1, 2) - d) * scale
    hi = (Fraction(1, 2) + d) * scale
    fr = frac_n2x(x0, range(1, N + 1), bits)
    return [n for n, v in enumerate(fr, start=1) if lo <= v <= hi]


def pythagorean_triples_in(E):
    """All (x, y, z) with x <= y, x^2 + y^2 = z^2 and x, y, z in E."""
    s = set(E)
    xs = sorted(s)
    out = []
    for i, x in enumerate(xs):
        for y in xs[i:]:
            z2 = x * x + y * y
            z = math.isqrt(z2)
            if z * z == z2 and z in s:
                out.append((x, y, z))
    return out
