"""Exact linear algebra over Z and over prime fields.

The central object is :class:`IntegerLattice`, an integer row lattice kept
in echelon form.  Vectors are inserted one at a time with extended-gcd row
operations, so membership tests and canonical Hermite normal forms stay
cheap even when thousands of generators are thrown at a few hundred
coordinates.

Determinants come in two flavours: fraction-free Bareiss elimination for
small matrices, and a CRT/modular determinant (numpy elimination modulo
many word-sized primes, reconstructed below a Hadamard bound) for large
ones.  Both are exact.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from fractions import Fraction

import numpy as np


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with a*x + b*y = g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


class IntegerLattice:
    """A sublattice of Z^N held as a row-echelon basis.

    Rows are kept sorted by pivot column; each insertion reduces the new
    vector against existing pivots and repairs the echelon shape with
    generalized row operations (the basis always spans exactly the integer
    span of everything added so far).
    """

    __slots__ = ("n", "rows", "pivots")

    def __init__(self, ambient_dim: int, vectors=()) -> None:
        self.n = ambient_dim
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []
        for v in vectors:
            self.add(v)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def add(self, vec) -> None:
        """Insert one integer vector, keeping the echelon basis."""
        v = list(vec)
        if len(v) != self.n:
            raise ValueError("vector has wrong length")
        rows, pivots = self.rows, self.pivots
        j = 0
        while True:
            while j < self.n and v[j] == 0:
                j += 1
            if j == self.n:
                return
            k = bisect_left(pivots, j)
            if k == len(pivots) or pivots[k] != j:
                if v[j] < 0:
                    v = [-x for x in v]
                rows.insert(k, v)
                pivots.insert(k, j)
                return
            row = rows[k]
            a, b = row[j], v[j]
            if b % a == 0:
                q = b // a
                for t in range(j, self.n):
                    v[t] -= q * row[t]
            else:
                g, x, y = xgcd(a, b)
                aq, bq = a // g, b // g
                for t in range(j, self.n):
                    rt, vt = row[t], v[t]
                    row[t] = x * rt + y * vt
                    v[t] = -bq * rt + aq * vt

    def __contains__(self, vec) -> bool:
        v = list(vec)
        if len(v) != self.n:
            return False
        for row, j in zip(self.rows, self.pivots):
            q, r = divmod(v[j], row[j])
            if r != 0:
                return False
            if q:
                for t in range(j, self.n):
                    v[t] -= q * row[t]
        return all(x == 0 for x in v)

    def coordinates(self, vec):
        """Integer coordinates of vec in the echelon basis, or None."""
        v = list(vec)
        coeffs = []
        for row, j in zip(self.rows, self.pivots):
            q, r = divmod(v[j], row[j])
            if r != 0:
                return None
            coeffs.append(q)
            if q:
                for t in range(j, self.n):
                    v[t] -= q * row[t]
        if any(x != 0 for x in v):
            return None
        return coeffs

    def hermite_basis(self) -> tuple[tuple[int, ...], ...]:
        """Canonical HNF rows: positive pivots, entries above each pivot
        reduced into [0, pivot).

        Pivots are processed left to right: reducing at a pivot column only
        touches columns to its right, so earlier columns stay canonical.
        """
        rows = [r[:] for r in self.rows]
        for k in range(len(rows)):
            j = self.pivots[k]
            p = rows[k][j]
            for i in range(k):
                q = rows[i][j] // p
                if q:
                    ri, rk = rows[i], rows[k]
                    for t in range(j, self.n):
                        ri[t] -= q * rk[t]
        return tuple(tuple(r) for r in rows)

    def determinant(self) -> int:
        """Product of pivots (index in Z^N); requires full rank."""
        if self.rank != self.n:
            raise ValueError("lattice does not have full rank")
        d = 1
        for row, j in zip(self.rows, self.pivots):
            d *= row[j]
        return d


def hnf(rows, ambient_dim: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Canonical Hermite normal form of the integer row span."""
    rows = [list(r) for r in rows]
    if not rows and ambient_dim is None:
        raise ValueError("need ambient_dim for an empty generating set")
    n = ambient_dim if ambient_dim is not None else len(rows[0])
    lat = IntegerLattice(n, rows)
    return lat.hermite_basis()


def det_bareiss(mat) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in mat]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = a[k][k]
        for i in range(k + 1, n):
            ai, ak = a[i], a[k]
            aik = ai[k]
            for j in range(k + 1, n):
                ai[j] = (pk * ai[j] - aik * ak[j]) // prev
            ai[k] = 0
        prev = pk
    return sign * a[n - 1][n - 1]


def _hadamard_bound(mat) -> int:
    bound = 1
    for row in mat:
        s = sum(x * x for x in row)
        bound *= math.isqrt(s) + 1
    return bound


def _det_mod_p(a: np.ndarray, p: int) -> int:
    n = a.shape[0]
    a = np.mod(a, p)
    det = 1
    for k in range(n):
        col = a[k:, k]
        nz = np.nonzero(col)[0]
        if len(nz) == 0:
            return 0
        i = k + int(nz[0])
        if i != k:
            a[[k, i]] = a[[i, k]]
            det = -det
        piv = int(a[k, k])
        det = det * piv % p
        inv = pow(piv, p - 2, p)
        rows = a[k + 1 :, k]
        mask = rows != 0
        if mask.any():
            factors = rows[mask] * inv % p
            a[k + 1 :][mask] = (a[k + 1 :][mask] - factors[:, None] * a[k][None, :]) % p
    return det % p


_CRT_PRIMES: list[int] = []


def _crt_prime_iter():
    from .arith import is_prime

    yield from _CRT_PRIMES
    p = (_CRT_PRIMES[-1] if _CRT_PRIMES else (1 << 25) + 1) - 2
    while p > 3:
        if is_prime(p):
            _CRT_PRIMES.append(p)
            yield p
        p -= 2


def det_crt(mat) -> int:
    """Exact determinant via elimination modulo word-sized primes and CRT
    reconstruction below twice the Hadamard bound."""
    rows = [list(map(int, r)) for r in mat]
    n = len(rows)
    if n == 0:
        return 1
    bound = 2 * _hadamard_bound(rows) + 1
    small = max(abs(x) for row in rows for x in row) < (1 << 62)
    base = np.array(rows, dtype=np.int64) if small else None
    residue, modulus = 0, 1
    for p in _crt_prime_iter():
        if small:
            a = base % p
        else:
            a = np.array([[x % p for x in row] for row in rows], dtype=np.int64)
        dp = _det_mod_p(a, p)
        g, x, _ = xgcd(modulus, p)
        diff = (dp - residue) % p
        residue = residue + modulus * (diff * x % p)
        modulus *= p
        residue %= modulus
        if modulus > bound:
            break
    if residue > modulus // 2:
        residue -= modulus
    return residue


def determinant(mat) -> int:
    """Exact determinant; Bareiss for small matrices, CRT for large."""
    n = len(mat)
    if n <= 40:
        return det_bareiss(mat)
    return det_crt(mat)


def rref_mod_p(rows, p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_p; returns (rows, pivot columns)."""
    if not rows:
        return [], []
    a = np.array([[x % p for x in row] for row in rows], dtype=np.int64)
    m, n = a.shape
    pivots: list[int] = []
    r = 0
    for j in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, j])[0]
        if len(nz) == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, j]), p - 2, p)
        a[r] = a[r] * inv % p
        col = a[:, j].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            a[mask] = (a[mask] - col[mask, None] * a[r][None, :]) % p
        pivots.append(j)
        r += 1
    return a[:r].tolist(), pivots


def rank_mod_p(rows, p: int) -> int:
    return len(rref_mod_p(rows, p)[1])


def kernel_mod_p(rows, p: int) -> list[list[int]]:
    """Basis of the right kernel {x : A x = 0} over F_p."""
    rr, pivots = rref_mod_p(rows, p)
    n = len(rows[0]) if rows else 0
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for i, j in enumerate(pivots):
            v[j] = (-rr[i][f]) % p
        basis.append(v)
    return basis


def express_in_span(rows, target) -> list[int] | None:
    """Integer coefficients x with sum x_i rows_i = target, or None.

    Echelon reduction with transformation tracking; intended for small
    systems (a handful of columns).
    """
    rows = [list(r) for r in rows]
    if not rows:
        return None
    n = len(rows[0])
    m = len(rows)
    combos = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    ech: list[tuple[int, list[int], list[int]]] = []  # (pivot, row, combo)
    for i in range(m):
        v, c = rows[i], combos[i]
        j = 0
        while True:
            while j < n and v[j] == 0:
                j += 1
            if j == n:
                break
            hit = next((t for t, e in enumerate(ech) if e[0] == j), None)
            if hit is None:
                ech.append((j, v, c))
                ech.sort(key=lambda e: e[0])
                break
            _, row, rc = ech[hit]
            a, b = row[j], v[j]
            if b % a == 0:
                f = b // a
                for t in range(n):
                    v[t] -= f * row[t]
                for t in range(m):
                    c[t] -= f * rc[t]
            else:
                g, x, y = xgcd(a, b)
                aq, bq = a // g, b // g
                for t in range(n):
                    rt, vt = row[t], v[t]
                    row[t] = x * rt + y * vt
                    v[t] = -bq * rt + aq * vt
                for t in range(m):
                    rt, vt = rc[t], c[t]
                    rc[t] = x * rt + y * vt
                    c[t] = -bq * rt + aq * vt
    v = list(target)
    cc = [0] * m
    for j, row, rc in ech:
        if v[j]:
            f, r = divmod(v[j], row[j])
            if r != 0:
                return None
            for t in range(n):
                v[t] -= f * row[t]
            for t in range(m):
                cc[t] += f * rc[t]
    if any(v):
        return None
    return cc


def solve_fraction(mat, rhs) -> list[Fraction] | None:
    """Solve a square rational system exactly; None if singular."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(mat, rhs)]
    for k in range(n):
        piv = None
        for i in range(k, n):
            if a[i][k] != 0:
                piv = i
                break
        if piv is None:
            return None
        a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [a[i][n] for i in range(n)]
