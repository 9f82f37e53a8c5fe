"""Exact linear algebra over prime fields.

Everything downstream reduces to matrix ranks over F_p, so this module is
deliberately small: dense integer matrices reduced mod p, rank via
division-free Gaussian elimination, canonical reduced row-echelon bases,
first-order dual numbers for exact directional derivatives of polynomial
maps, and maximal minors of small matrices (Pluecker coordinates).

Matrices are numpy int64 arrays.  With p < 2**31 every product of two
reduced entries, and every difference of two such products, stays inside
the int64 range, so the arithmetic is exact -- there is no tolerance
anywhere in this package.  Sums of several such products can overflow, so
matrix products go through :func:`matmul_mod`, which uses exact Python
integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

DEFAULT_PRIME = 2_147_483_647       # 2**31 - 1, fast reduction
CONFIRMATION_PRIME = 2_147_483_629  # second large prime for confirmation runs
DEFAULT_PRIMES = (DEFAULT_PRIME, CONFIRMATION_PRIME)

_MAX_MODULUS = 2**31


def _check_modulus(p: int) -> None:
    if not 2 <= p < _MAX_MODULUS:
        raise ValueError(f"modulus {p} outside the supported range [2, 2**31)")


def as_matrix(rows, p: int) -> np.ndarray:
    """Copy ``rows`` into an int64 array with entries reduced into [0, p)."""
    _check_modulus(p)
    m = np.array(rows, dtype=np.int64)
    if m.ndim == 1:
        m = m.reshape(1, -1)
    if m.ndim != 2:
        raise ValueError("expected a matrix (2-dimensional array)")
    return m % p


def matmul_mod(a, b, p: int) -> np.ndarray:
    """Exact matrix product mod p.

    A plain int64 ``a @ b`` overflows once three or more products of
    entries near p are summed, so the product is taken over Python's
    arbitrary-precision integers and reduced afterwards.
    """
    left = as_matrix(a, p).astype(object)
    right = as_matrix(b, p).astype(object)
    return ((left @ right) % p).astype(np.int64)


def matrix_rank(rows, p: int) -> int:
    """Rank of a matrix over F_p, by division-free Gaussian elimination.

    Rows below the pivot are cleared as ``pivot*row - factor*pivot_row``,
    so no inverses are needed; pivoting picks the first row with a nonzero
    entry in the current column, which makes the procedure deterministic.
    """
    m = as_matrix(rows, p)
    nrows, ncols = m.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if m[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        pivot = int(m[r, c])
        if r + 1 < nrows:
            below = m[r + 1:]
            factors = below[:, c].copy()
            below[...] = (below * pivot - np.outer(factors, m[r])) % p
        r += 1
    return r


def rref(rows, p: int) -> np.ndarray:
    """Fully reduced row-echelon form over F_p (unique, pivots scaled to 1)."""
    m = as_matrix(rows, p)
    nrows, ncols = m.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if m[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = (m[r] * inv) % p
        factors = m[:, c].copy()
        factors[r] = 0
        m[...] = (m - np.outer(factors, m[r])) % p
        r += 1
    return m


def row_space_basis(rows, p: int) -> np.ndarray:
    """Canonical basis of the row space: the nonzero rows of the RREF.

    Equal row spaces yield byte-identical output, so subspace equality is
    plain array comparison.
    """
    m = rref(rows, p)
    nonzero = [i for i in range(m.shape[0]) if m[i].any()]
    return m[nonzero]


def subspace_contains(span_rows, candidate_rows, p: int) -> bool:
    """True iff every row of ``candidate_rows`` lies in the row space of ``span_rows``."""
    span = as_matrix(span_rows, p)
    cand = as_matrix(candidate_rows, p)
    base = matrix_rank(span, p)
    return matrix_rank(np.vstack([span, cand]), p) == base


@dataclass(frozen=True)
class Dual:
    """Dual number a + b*eps over F_p, with eps**2 = 0.

    The derivative part propagates exactly through ring operations, which
    gives exact directional derivatives of polynomial maps.
    """

    a: int
    b: int
    p: int

    def __add__(self, other: "Dual") -> "Dual":
        return Dual((self.a + other.a) % self.p, (self.b + other.b) % self.p, self.p)

    def __sub__(self, other: "Dual") -> "Dual":
        return Dual((self.a - other.a) % self.p, (self.b - other.b) % self.p, self.p)

    def __neg__(self) -> "Dual":
        return Dual(-self.a % self.p, -self.b % self.p, self.p)

    def __mul__(self, other: "Dual") -> "Dual":
        p = self.p
        return Dual(
            self.a * other.a % p,
            (self.a * other.b + self.b * other.a) % p,
            p,
        )

    def __pow__(self, e: int) -> "Dual":
        # (a + b eps)**e = a**e + e a**(e-1) b eps
        p = self.p
        if e == 0:
            return Dual(1, 0, p)
        return Dual(pow(self.a, e, p), e * pow(self.a, e - 1, p) * self.b % p, p)


# A polynomial map is one list of terms per output coordinate; each term is
# (coefficient, exponent tuple) over the input variables.
Monomial = tuple[int, tuple[int, ...]]
PolynomialMap = Sequence[Sequence[Monomial]]


def dual_evaluate(
    f: PolynomialMap,
    x: Sequence[int],
    direction: Sequence[int],
    p: int,
) -> tuple[list[int], list[int]]:
    """Evaluate ``f`` at ``x + eps*direction``; return (values, directional derivatives)."""
    _check_modulus(p)
    if len(x) != len(direction):
        raise ValueError("point and direction have different lengths")
    duals = [Dual(int(xi) % p, int(vi) % p, p) for xi, vi in zip(x, direction)]
    values: list[int] = []
    derivs: list[int] = []
    for terms in f:
        acc = Dual(0, 0, p)
        for coeff, exps in terms:
            if len(exps) != len(x):
                raise ValueError("monomial arity does not match the point")
            term = Dual(int(coeff) % p, 0, p)
            for xi, e in zip(duals, exps):
                if e:
                    term = term * xi**e
            acc = acc + term
        values.append(acc.a)
        derivs.append(acc.b)
    return values, derivs


def maximal_minors(rows: Sequence[Sequence[Dual]]) -> list[Dual]:
    """All t x t minors of a t x c dual matrix, t = number of rows.

    Column subsets run in lexicographic order, matching the fixed Pluecker
    coordinate ordering.  Computed by Laplace expansion row by row, sharing
    sub-minors across column subsets.
    """
    t = len(rows)
    c = len(rows[0])
    p = rows[0][0].p
    zero = Dual(0, 0, p)
    prev: dict[tuple[int, ...], Dual] = {(): Dual(1, 0, p)}
    for i in range(t):
        cur: dict[tuple[int, ...], Dual] = {}
        for cols in itertools.combinations(range(c), i + 1):
            acc = zero
            for idx, j in enumerate(cols):
                sub = prev[cols[:idx] + cols[idx + 1:]]
                term = rows[i][j] * sub
                acc = acc + term if (i + idx) % 2 == 0 else acc - term
            cur[cols] = acc
        prev = cur
    return [prev[cols] for cols in itertools.combinations(range(c), t)]


def field_minors(rows, p: int) -> list[int]:
    """Maximal minors of an integer matrix over F_p (same ordering as above)."""
    m = as_matrix(rows, p)
    dual_rows = [[Dual(int(v), 0, p) for v in row] for row in m]
    return [d.a for d in maximal_minors(dual_rows)]
