"""Dense integer polynomials as coefficient tuples (c0, c1, ..., cd)."""

from math import comb

__all__ = ["normalize", "degree", "peval", "pmul", "ppow", "padd", "derivative",
           "linear_power", "monotone_from", "to_str"]


def normalize(coeffs):
    c = [int(x) for x in coeffs]
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c) if c else (0,)


def degree(P):
    P = normalize(P)
    return -1 if P == (0,) else len(P) - 1


def peval(P, x):
    acc = 0
    for c in reversed(P):
        acc = acc * x + c
    return acc


def padd(P, Q):
    n = max(len(P), len(Q))
    return normalize([(P[i] if i < len(P) else 0) + (Q[i] if i < len(Q) else 0) for i in range(n)])


def pmul(P, Q):
    out = [0] * (len(P) + len(Q) - 1)
    for i, a in enumerate(P):
        if a:
            for j, b in enumerate(Q):
                out[i + j] += a * b
    return normalize(out)


def ppow(P, k):
    out = (1,)
    for _ in range(k):
        out = pmul(out, P)
    return out


def linear_power(a, b, d):
    """Coefficients of (a x + b)^d."""
    return normalize([comb(d, i) * a**i * b ** (d - i) for i in range(d + 1)])


def derivative(P):
    return normalize([i * c for i, c in enumerate(P)][1:] or [0])


def monotone_from(P):
    """An integer n0 >= 1 beyond which P is strictly monotone (Cauchy bound on roots of P')."""
    dP = derivative(P)
    if degree(dP) <= 0:
        return 1
    lead = abs(dP[-1])
    bound = 1 + max(abs(c) for c in dP[:-1]) // lead + 1
    return max(1, bound)


def to_str(P):
    terms = []
    for i, c in enumerate(P):
        if c:
            terms.append(f"{c}" if i == 0 else f"{c}*x" if i == 1 else f"{c}*x^{i}")
    return " + ".join(reversed(terms)) or "0"
