"""Matrix-induced star products on N^k and determinant-valued functions.

A ``StarSemigroup`` embeds n in N^k as psi(n) = sum n_i M_i (d x d integer
matrices) and sets n * m = psi^{-1}(psi(n) psi(m)).  The product is partial:
psi(n) psi(m) may leave the span of the generators, or land in it at a point
with a non-positive or non-integral coordinate.

    >>> g = builtin("gaussian")
    >>> star(g, (1, 1), (2, 1))
    Defined(point=(1, 3))
    >>> eval_f(g, (3, 4))
    Fraction(25, 1)
"""

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from .errors import NonSquareDeterminant

__all__ = [
    "ValueKind", "ABSDET", "SQRTDET", "detpower", "StarSemigroup", "Defined", "OutsideCone",
    "NotInImage", "embed", "eval_f", "star", "verify_multiplicativity", "MultReport",
    "empirical_subordination", "SubordinationReport", "zero_density", "builtin",
    "load_json", "det_int", "BUILTINS",
]


@dataclass(frozen=True)
class ValueKind:
    kind: str  # "absdet", "sqrtdet" or "detpower"
    ell: int = 1

    def __str__(self):
        return f"detpower:{self.ell}" if self.kind == "detpower" else self.kind


ABSDET = ValueKind("absdet")
SQRTDET = ValueKind("sqrtdet")


def detpower(ell):
    return ValueKind("detpower", ell)


def det_int(A):
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    M = [list(map(int, row)) for row in A]
    n = len(M)
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _det_batch(X):
    """Determinants of a stack of small integer matrices, shape (..., d, d), by cofactor expansion."""
    d = X.shape[-1]
    if d == 1:
        return X[..., 0, 0]
    if d == 2:
        return X[..., 0, 0] * X[..., 1, 1] - X[..., 0, 1] * X[..., 1, 0]
    total = np.zeros(X.shape[:-2], dtype=X.dtype)
    for j in range(d):
        minor = np.delete(np.delete(X, 0, axis=-2), j, axis=-1)
        term = X[..., 0, j] * _det_batch(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _frac_inverse(A):
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    for c in range(n):
        piv = next(r for r in range(c, n) if M[r][c] != 0)
        M[c], M[piv] = M[piv], M[c]
        pv = M[c][c]
        M[c] = [x / pv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


def _rank(rows):
    M = [[Fraction(x) for x in r] for r in rows]
    rank, cols = 0, len(M[0]) if M else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(M)) if M[r][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(len(M)):
            if r != rank and M[r][c] != 0:
                f = M[r][c] / M[rank][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[rank])]
        rank += 1
    return rank


class StarSemigroup:
    def __init__(self, generators, value_kind=ABSDET, name="custom"):
        gens = [np.array(g, dtype=np.int64) for g in generators]
        if not gens:
            raise ValueError("need at least one generator")
        d = gens[0].shape[0]
        if any(g.shape != (d, d) for g in gens):
            raise ValueError("generators must be square matrices of one size")
        self.k = len(gens)
        self.d = d
        self.generators = tuple(tuple(map(tuple, g.tolist())) for g in gens)
        self.value_kind = value_kind
        self.name = name
        # N: d^2 x k, column i is vec(M_i)
        self.N = np.stack([g.reshape(-1) for g in gens], axis=1)
        if _rank(self.N.T.tolist()) != self.k:
            raise ValueError("generators are linearly dependent; psi is not injective")
        self._pivots = self._choose_pivots()
        S = [[int(self.N[r, c]) for c in range(self.k)] for r in self._pivots]
        self._sdet = det_int(S)
        inv = _frac_inverse(S)
        # integer adjugate: S^{-1} = adj / det
        self._adj = np.array([[int(x * self._sdet) for x in row] for row in inv], dtype=np.int64)
        if not self._nonzero_witness():
            raise ValueError("det o psi vanishes identically")

    def _choose_pivots(self):
        rows = []
        for r in range(self.d * self.d):
            trial = rows + [r]
            if _rank([self.N[i].tolist() for i in trial]) == len(trial):
                rows = trial
            if len(rows) == self.k:
                return tuple(rows)
        raise ValueError("could not find independent pivot rows")

    def _nonzero_witness(self):
        for n in itertools.product(range(1, 4), repeat=self.k):
            if det_int(embed(self, n)) != 0:
                return n
        return None

    def __repr__(self):
        return f"StarSemigroup({self.name!r}, k={self.k}, d={self.d}, value={self.value_kind})"


def embed(sg, n):
    n = tuple(int(v) for v in n)
    if len(n) != sg.k:
        raise ValueError(f"expected {sg.k} coordinates")
    return (sg.N @ np.array(n, dtype=np.int64)).reshape(sg.d, sg.d).tolist()


def _f_from_det(kind, D):
    if kind.kind == "absdet":
        return Fraction(abs(D))
    if kind.kind == "sqrtdet":
        if D < 0 or isqrt(D) ** 2 != D:
            raise NonSquareDeterminant(f"det = {D} is not a perfect square")
        return Fraction(isqrt(D))
    if D == 0:
        return Fraction(0)
    return Fraction(abs(D)) ** kind.ell


def eval_f(sg, n):
    if any(v < 1 for v in n):
        raise ValueError("points of N^k have positive coordinates")
    return _f_from_det(sg.value_kind, det_int(embed(sg, n)))


@dataclass(frozen=True)
class Defined:
    point: tuple


@dataclass(frozen=True)
class OutsideCone:
    coords: tuple  # Fractions


@dataclass(frozen=True)
class NotInImage:
    pass


def _preimage(sg, X):
    """Exact solution of N c = vec(X), or None if vec(X) is outside the span."""
    x = np.array(X, dtype=object).reshape(-1)
    rhs = [int(x[r]) for r in sg._pivots]
    coords = tuple(Fraction(sum(int(sg._adj[i, j]) * rhs[j] for j in range(sg.k)), sg._sdet)
                   for i in range(sg.k))
    back = [sum(Fraction(int(sg.N[r, i])) * coords[i] for i in range(sg.k))
            for r in range(sg.d * sg.d)]
    if any(b != int(v) for b, v in zip(back, x)):
        return None
    return coords


def star(sg, n, m):
    X = (np.array(embed(sg, n), dtype=object) @ np.array(embed(sg, m), dtype=object)).tolist()
    coords = _preimage(sg, X)
    if coords is None:
        return NotInImage()
    if all(c.denominator == 1 and c >= 1 for c in coords):
        return Defined(tuple(int(c) for c in coords))
    return OutsideCone(coords)


# ---------------------------------------------------------------------------
# batched checks

def _points(k, bound):
    return np.array(list(itertools.product(range(1, bound + 1), repeat=k)), dtype=np.int64)


def _embed_batch(sg, pts):
    return (pts @ sg.N.T).reshape(-1, sg.d, sg.d)


def _star_batch(sg, n, pts, psi_pts):
    """Star n with every point; returns (coords, defined_mask)."""
    prod = np.einsum("ij,bjk->bik", np.array(embed(sg, n), dtype=np.int64), psi_pts)
    flat = prod.reshape(len(pts), -1)
    num = flat[:, list(sg._pivots)] @ sg._adj.T
    integral = np.all(num % sg._sdet == 0, axis=1)
    coords = num // sg._sdet
    in_span = np.all(coords @ sg.N.T == flat, axis=1) & integral
    defined = in_span & np.all(coords >= 1, axis=1)
    return coords, defined


def _f_batch(kind, D):
    """Integer-valued f for absdet/sqrtdet, and |det| for detpower (compared multiplicatively)."""
    A = np.abs(D)
    if kind.kind == "sqrtdet":
        r = np.rint(np.sqrt(A.astype(np.float64))).astype(np.int64)
        if np.any((r * r != D)):
            raise NonSquareDeterminant("a determinant in the batch is not a perfect square")
        return r
    return A


@dataclass
class MultReport:
    checked: int
    defined: int
    violations: list

    def to_json(self):
        return {"checked": self.checked, "defined": self.defined,
                "violations": [[list(a), list(b), str(x), str(y)] for a, b, x, y in self.violations]}


def verify_multiplicativity(sg, bound, max_violations=50):
    """f(n * m) = f(n) f(m) over all Defined pairs in [bound]^k x [bound]^k.

    f(n * m) is recomputed from the recovered coordinates, so the check also
    exercises the inverse of psi.
    """
    pts = _points(sg.k, bound)
    psi = _embed_batch(sg, pts)
    fv = _f_batch(sg.value_kind, _det_batch(psi))
    checked = defined = 0
    bad = []
    for i, n in enumerate(pts):
        coords, ok = _star_batch(sg, n, pts, psi)
        checked += len(pts)
        defined += int(ok.sum())
        if not ok.any():
            continue
        c = coords[ok]
        lhs = _f_batch(sg.value_kind, _det_batch(_embed_batch(sg, c)))
        rhs = fv[i] * fv[ok]
        wrong = np.flatnonzero(lhs != rhs)
        for w in wrong[: max(0, max_violations - len(bad))]:
            m = tuple(pts[ok][w].tolist())
            bad.append((tuple(n.tolist()), m, eval_f(sg, tuple(c[w].tolist())),
                        eval_f(sg, tuple(n.tolist())) * eval_f(sg, m)))
    return MultReport(checked, defined, bad)


def _gram_inverse_trace(N):
    G = (N.T @ N).tolist()
    inv = _frac_inverse(G)
    return sum(inv[i][i] for i in range(len(inv)))


@dataclass
class SubordinationReport:
    empirical_sup_sq: Fraction  # max ||n*m||^2 / (||n||^2 ||m||^2)
    analytic_bound_sq: Fraction  # ||M||_F^2 ||N||_F^4, M the minimal-norm left inverse
    argmax: tuple = None

    @property
    def empirical_sup(self):
        return self.empirical_sup_sq ** 0.5 if self.empirical_sup_sq is not None else None

    @property
    def analytic_bound(self):
        return float(self.analytic_bound_sq) ** 0.5

    @property
    def holds(self):
        return self.empirical_sup_sq is None or self.empirical_sup_sq <= self.analytic_bound_sq

    def to_json(self):
        return {"empirical_sup_sq": str(self.empirical_sup_sq),
                "analytic_bound_sq": str(self.analytic_bound_sq),
                "empirical_sup": float(self.empirical_sup) if self.empirical_sup_sq is not None else None,
                "analytic_bound": self.analytic_bound, "holds": self.holds,
                "argmax": [list(p) for p in self.argmax] if self.argmax else None}


def empirical_subordination(sg, bound):
    pts = _points(sg.k, bound)
    psi = _embed_batch(sg, pts)
    norms = (pts * pts).sum(axis=1)
    best, arg = None, None
    for i, n in enumerate(pts):
        coords, ok = _star_batch(sg, n, pts, psi)
        if not ok.any():
            continue
        num = (coords[ok] ** 2).sum(axis=1)
        den = norms[i] * norms[ok]
        ratio = num / den
        top = ratio.max()
        if best is not None and top < float(best) * (1 - 1e-12):
            continue
        for j in np.flatnonzero(ratio >= top * (1 - 1e-12)):
            r = Fraction(int(num[j]), int(den[j]))
            if best is None or r > best:
                best, arg = r, (tuple(n.tolist()), tuple(pts[ok][j].tolist()))
    fro_n = int((sg.N * sg.N).sum())
    bound_sq = _gram_inverse_trace(sg.N) * fro_n * fro_n
    return SubordinationReport(best, bound_sq, arg)


def zero_density(sg, N):
    pts = _points(sg.k, N)
    D = _det_batch(_embed_batch(sg, pts))
    return Fraction(int((D == 0).sum()), N**sg.k)


# ---------------------------------------------------------------------------
# built-in examples

def _circulant_gens(d):
    I = np.eye(d, dtype=np.int64)
    P = np.roll(I, 1, axis=1)
    return [np.linalg.matrix_power(P, i) for i in range(d)]


def builtin(name):
    """gaussian | dsum:D | eisenstein | fibonacci | general2x2:a,b,c,d | quaternion[-sqrt]"""
    base, _, arg = name.partition(":")
    if base == "gaussian":
        return StarSemigroup([[[1, 0], [0, 1]], [[0, -1], [1, 0]]], ABSDET, "gaussian")
    if base == "dsum":
        D = int(arg)
        return StarSemigroup([[[1, 0], [0, 1]], [[0, -D], [1, 0]]], ABSDET, f"dsum:{D}")
    if base == "eisenstein":
        return StarSemigroup(_circulant_gens(3), ABSDET, "eisenstein")
    if base == "fibonacci":
        return StarSemigroup([[[1, 0], [0, 1]], [[1, 1], [1, 0]]], ABSDET, "fibonacci")
    if base == "general2x2":
        a, b, c, d = (int(x) for x in arg.split(","))
        return StarSemigroup([[[1, 0], [0, 1]], [[a, b], [c, d]]], ABSDET,
                             f"general2x2:{a},{b},{c},{d}")
    if base in ("quaternion", "quaternion-sqrt"):
        # left multiplication by a + b i + c j + d k on (1, i, j, k)
        gens = [
            [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
            [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]],
            [[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]],
            [[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]],
        ]
        kind = SQRTDET if base == "quaternion-sqrt" else ABSDET
        return StarSemigroup(gens, kind, base)
    raise ValueError(f"unknown example {name!r}")


BUILTINS = ("gaussian", "dsum:2", "eisenstein", "fibonacci", "general2x2:1,1,1,0",
            "quaternion", "quaternion-sqrt")


def _parse_value(v):
    if v is None or v == "absdet":
        return ABSDET
    if v == "sqrtdet":
        return SQRTDET
    if isinstance(v, dict) and "detpower" in v:
        return detpower(int(v["detpower"]))
    if isinstance(v, str) and v.startswith("detpower:"):
        return detpower(int(v.split(":", 1)[1]))
    raise ValueError(f"unknown value kind {v!r}")


def load_json(path_or_text):
    """{"name": ..., "generators": [matrix, ...], "value": "absdet"|"sqrtdet"|"detpower:L"}"""
    text = path_or_text
    if not text.lstrip().startswith("{"):
        with open(path_or_text) as fh:
            text = fh.read()
    spec = json.loads(text)
    return StarSemigroup(spec["generators"], _parse_value(spec.get("value")),
                         spec.get("name", "custom"))
