"""The projective plane PG(2, q) in its Singer (cyclic) model.

Points and lines are both indexed by Z/nZ, n = q^2 + q + 1.  A generator
lambda of the cyclic quotient GF(q^3)*/GF(q)* labels the points as
x_i = lambda^i GF(q)*, and the trace form (x, y) -> Tr(x*y) identifies
lines with points, line l_i consisting of the points x with
Tr(lambda^(-i) * x) = 0.  Line l_i is then the translate Delta + i of the
perfect difference set Delta = { i : Tr(lambda^i) = 0 }, so multiplication
by lambda is a collineation shifting both point and line indices by one
(the Singer cycle).

The F_l-rank of the n x n incidence matrix is computed by two independent
methods that must agree: dense Gaussian elimination, and the dimension of
the cyclic code generated by theta(t) = sum_{d in Delta} t^d inside
F_l[t]/(t^n - 1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from . import fields
from .fields import FieldCtx, FieldElem, poly_gcd, prime_power, singer_field, trace_to_subfield
from .linalg import kernel_mod_p, rank_mod_p, rref_mod_p


class PlaneConsistencyError(ArithmeticError):
    """Internal consistency violation while building or checking a plane."""


@dataclass(frozen=True)
class ProjPlane:
    """PG(2, q) given by a perfect difference set modulo n = q^2 + q + 1.

    ``delta`` lists the point indices on line l_0; line l_j consists of the
    points { d + j mod n : d in delta }.  ``modulus`` is the defining
    polynomial of GF(q^3) over the prime field F_l (coefficient tuple,
    constant term first, monic).
    """

    q: int
    n: int
    delta: tuple[int, ...]
    modulus: tuple[int, ...]

    def __post_init__(self):
        if self.n != self.q**2 + self.q + 1:
            raise ValueError("n must equal q^2 + q + 1")
        if len(self.delta) != self.q + 1:
            raise ValueError("difference set must have q + 1 elements")
        if not verify_perfect_difference_set(self.delta, self.n):
            raise ValueError("delta is not a perfect difference set")

    @property
    def l(self) -> int:
        return prime_power(self.q)[0]

    @property
    def d(self) -> int:
        return prime_power(self.q)[1]

    def line(self, j: int) -> frozenset[int]:
        return frozenset((d + j) % self.n for d in self.delta)

    def incident(self, point: int, line: int) -> bool:
        return (point - line) % self.n in set(self.delta)

    def lines_through(self, point: int) -> tuple[int, ...]:
        return tuple(sorted((point - d) % self.n for d in self.delta))

    def to_json(self) -> str:
        obj = {
            "q": self.q,
            "n": self.n,
            "delta": list(self.delta),
            "modulus": list(self.modulus),
        }
        return json.dumps(obj, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ProjPlane":
        obj = json.loads(text)
        return cls(obj["q"], obj["n"], tuple(obj["delta"]), tuple(obj["modulus"]))


def verify_perfect_difference_set(delta, n: int) -> bool:
    """True iff the ordered differences d - d' (d != d') of delta are
    pairwise distinct and cover every nonzero residue modulo n."""
    delta = list(delta)
    seen = set()
    for d in delta:
        for e in delta:
            if d == e:
                continue
            r = (d - e) % n
            if r == 0 or r in seen:
                return False
            seen.add(r)
    return len(seen) == n - 1


def singer_difference_set(q: int) -> ProjPlane:
    """Build PG(2, q) from the trace-zero indices of the Singer labelling."""
    if q < 2 or q > 32:
        raise ValueError("q must be a prime power with 2 <= q <= 32")
    l, d = prime_power(q)
    ctx = singer_field((l, d))
    n = q * q + q + 1
    lam = ctx.gen()
    delta = []
    x = ctx.one()
    for i in range(n):
        if not trace_to_subfield(x, q):
            delta.append(i)
        x = x * lam
    if len(delta) != q + 1:
        raise PlaneConsistencyError(
            f"trace-zero count {len(delta)} != q + 1 = {q + 1} for q = {q}"
        )
    return ProjPlane(q, n, tuple(delta), ctx.modulus)


def incidence_matrix(plane: ProjPlane) -> list[list[int]]:
    """n x n circulant 0/1 matrix; entry (i, j) is 1 iff x_j lies on l_i."""
    n = plane.n
    dset = set(plane.delta)
    return [[1 if (j - i) % n in dset else 0 for j in range(n)] for i in range(n)]


def _cyclic_code_rank(plane: ProjPlane, l: int) -> int:
    # dimension of the ideal generated by theta(t) in F_l[t]/(t^n - 1)
    n = plane.n
    theta = [0] * n
    for d in plane.delta:
        theta[d] = 1
    tn1 = [(-1) % l] + [0] * (n - 1) + [1]
    g = poly_gcd(fields.poly_trim(theta), tuple(tn1), l)
    return n - (len(g) - 1)


def incidence_rank(plane: ProjPlane, l: int) -> int:
    """Rank of the incidence matrix over F_l, by two oracles that must agree."""
    if l != plane.l:
        raise ValueError("l must be the characteristic of q")
    by_elimination = rank_mod_p(incidence_matrix(plane), l)
    by_code = _cyclic_code_rank(plane, l)
    if by_elimination != by_code:
        raise PlaneConsistencyError(
            f"rank oracles disagree for q={plane.q}: elimination {by_elimination}, "
            f"cyclic code {by_code}"
        )
    return by_elimination


@dataclass(frozen=True)
class Collineation:
    """An incidence-preserving pair of point/line permutations of Z/nZ."""

    point_perm: tuple[int, ...]
    line_perm: tuple[int, ...]

    def preserves_incidence(self, plane: ProjPlane) -> bool:
        n = plane.n
        dset = set(plane.delta)
        pp, lp = self.point_perm, self.line_perm
        for j in range(n):
            for i in range(n):
                if ((j - i) % n in dset) != ((pp[j] - lp[i]) % n in dset):
                    return False
        return True

    def compose(self, other: "Collineation") -> "Collineation":
        pp = tuple(self.point_perm[i] for i in other.point_perm)
        lp = tuple(self.line_perm[i] for i in other.line_perm)
        return Collineation(pp, lp)


class _Geometry:
    """Cached Singer-model data needed to turn matrices into collineations."""

    def __init__(self, plane: ProjPlane):
        l, d = prime_power(plane.q)
        self.plane = plane
        self.q = plane.q
        self.ctx = FieldCtx(l, 3 * d, plane.modulus)
        ctx = self.ctx
        n = plane.n
        self.lam = ctx.gen()
        # F_q-coordinates are taken with respect to the basis (1, lam, lam^2)
        self.subfield_basis = self._subfield_basis()
        self.subfield = self._span(self.subfield_basis)
        # index lookup: field element -> i with element in lambda^i * GF(q)*
        self.index_of: dict[FieldElem, int] = {}
        x = ctx.one()
        for i in range(n):
            for c in self.subfield:
                if c:
                    self.index_of[x * c] = i
            x = x * self.lam

    def _subfield_basis_raw(self) -> list[FieldElem]:
        # kernel of the F_l-linear map y -> y^q - y is exactly GF(q)
        ctx = self.ctx
        l, k = ctx.l, ctx.k
        rows = []
        for j in range(k):
            e = ctx.elem(tuple(1 if t == j else 0 for t in range(k)))
            img = e**self.q - e
            rows.append(list(img.coeffs))
        # kernel of the transpose action: we need y with (y^q - y) = 0,
        # i.e. combinations of basis vectors mapping to 0
        ker = kernel_mod_p([[rows[j][t] for j in range(k)] for t in range(k)], l)
        return [ctx.elem(tuple(v)) for v in ker]

    def _subfield_basis(self) -> list[FieldElem]:
        basis = self._subfield_basis_raw()
        if len(basis) != prime_power(self.q)[1]:
            raise PlaneConsistencyError("embedded subfield has wrong dimension")
        return basis

    def _span(self, basis: list[FieldElem]) -> list[FieldElem]:
        ctx = self.ctx
        l = ctx.l
        elems = [ctx.zero()]
        for b in basis:
            elems = [e + b * c for e in elems for c in range(l)]
        return elems

    def in_subfield(self, x: FieldElem) -> bool:
        return x**self.q == x

    def coords(self, x: FieldElem) -> tuple[FieldElem, FieldElem, FieldElem]:
        """F_q-coordinates of x in the basis (1, lam, lam^2)."""
        ctx = self.ctx
        l, k = ctx.l, ctx.k
        cols = []
        for j in range(3):
            for s in self.subfield_basis:
                cols.append((s * self.lam**j).coeffs)
        # solve sum c_i cols_i = x over F_l
        mat = [[cols[i][t] for i in range(len(cols))] + [x.coeffs[t]] for t in range(k)]
        sol = _solve_mod_p(mat, l)
        if sol is None:
            raise PlaneConsistencyError("coordinate solve failed")
        d = len(self.subfield_basis)
        out = []
        for j in range(3):
            acc = ctx.zero()
            for i, s in enumerate(self.subfield_basis):
                acc = acc + s * sol[j * d + i]
            out.append(acc)
        return tuple(out)


def _solve_mod_p(aug, p: int):
    """Solve an augmented linear system over F_p; None if inconsistent."""
    rows, pivots = rref_mod_p(aug, p)
    ncols = len(aug[0]) - 1
    sol = [0] * ncols
    for r, j in zip(rows, pivots):
        if j == ncols:
            return None
        sol[j] = r[ncols] % p
    return sol


@lru_cache(maxsize=None)
def _geometry(plane: ProjPlane) -> _Geometry:
    return _Geometry(plane)


def collineation_from_matrix(plane: ProjPlane, g) -> Collineation:
    """The collineation induced by an invertible 3x3 matrix over F_q acting
    on point coordinates in the basis (1, lambda, lambda^2).

    Matrix entries may be integers (mapped into the prime subfield) or
    subfield elements of GF(q^3).  The line permutation is derived from the
    image of each line's point set, and incidence preservation is implied.
    """
    geo = _geometry(plane)
    ctx = geo.ctx
    n = plane.n
    rows = []
    for row in g:
        out = []
        for entry in row:
            if isinstance(entry, int):
                entry = ctx.elem(entry)
            if not geo.in_subfield(entry):
                raise ValueError("matrix entries must lie in GF(q)")
            out.append(entry)
        rows.append(out)
    if _det3(rows, ctx) == ctx.zero():
        raise ValueError("matrix is singular")
    point_perm = []
    x = ctx.one()
    for i in range(n):
        c = geo.coords(x)
        img = ctx.zero()
        for r in range(3):
            acc = ctx.zero()
            for s in range(3):
                acc = acc + rows[r][s] * c[s]
            img = img + acc * geo.lam**r
        point_perm.append(geo.index_of[img])
        x = x * geo.lam
    line_perm = []
    dset = plane.delta
    for i in range(n):
        image = {point_perm[(d + i) % n] for d in dset}
        # the image of a line is a line: find its index from any member
        j = None
        for candidate in ((m - dset[0]) % n for m in image):
            if {(d + candidate) % n for d in dset} == image:
                j = candidate
                break
        if j is None:
            raise PlaneConsistencyError("matrix does not map lines to lines")
        line_perm.append(j)
    return Collineation(tuple(point_perm), tuple(line_perm))


def _det3(rows, ctx):
    a, b, c = rows[0]
    d, e, f = rows[1]
    g, h, i = rows[2]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def singer_collineation(plane: ProjPlane) -> Collineation:
    """Multiplication by lambda: shifts point and line indices by +1."""
    geo = _geometry(plane)
    ctx = geo.ctx
    # companion matrix of the minimal polynomial of lambda over GF(q)
    lam3 = geo.lam**3
    c0, c1, c2 = geo.coords(lam3)
    g = [
        [ctx.zero(), ctx.zero(), c0],
        [ctx.one(), ctx.zero(), c1],
        [ctx.zero(), ctx.one(), c2],
    ]
    return collineation_from_matrix(plane, g)


def identity_collineation(plane: ProjPlane) -> Collineation:
    idp = tuple(range(plane.n))
    return Collineation(idp, idp)


def random_gl3(plane: ProjPlane, rng) -> list[list[FieldElem]]:
    """A uniformly chosen invertible 3x3 matrix over GF(q) (by rejection)."""
    geo = _geometry(plane)
    ctx = geo.ctx
    elems = geo.subfield
    while True:
        g = [[elems[rng.randrange(len(elems))] for _ in range(3)] for _ in range(3)]
        if _det3(g, ctx) != ctx.zero():
            return g
