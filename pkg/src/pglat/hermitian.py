"""Hermitian lattices over O = Z[(1+sqrt(-q))/2] inside the ambient space
O^(1,n) with the form <u|v> = conj(u_0) v_0 - conj(u_1) v_1 - ... (conjugate
linear in the first slot, linear in the second).

Two layers live here:

* Exact Gram-matrix computations over the fraction field Q(sqrt(-q)):
  the singular form on the 2n basis vectors indexed by points and lines of
  PG(2, q) (diagonal -q, sqrt(-q) between incident point/line pairs), its
  radical, and exact inertia by recursive Hermitian pivoting.

* The quotient lattice in line coordinates, represented by a generating
  set: the n point vectors x_i = (1; eps) with -1 at the lines through x_i,
  together with p*e_k for every ambient coordinate.  All module-level
  questions (membership, equality, duals) are settled on the rank-2(n+1)
  integer realization, where the O-coordinate a + b*omega becomes the pair
  (a, b); no O-basis is ever assumed to exist.

Modularity is certified two independent ways.  The mod-p certificate
reduces the generators into F_q^(n+1) carrying the symmetric form
diag(1, -1, ..., -1) and checks that the image is isotropic of dimension
(n+1)/2.  The dual certificate works on the integer realization: with S
the matrix of 2*Re<b_i|b_j> on a Z-basis, p L' = L holds iff S is
divisible by q and |det S| = q^(2(n+1)) -- because p L' equals q times the
trace-form dual of L.  Both must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .linalg import IntegerLattice, det_bareiss, det_crt, rank_mod_p, rref_mod_p
from .oring import OElem, QElem, check_ring_param, in_p_ideal, omega_times
from .plane import Collineation, ProjPlane


class CertificateMismatch(ArithmeticError):
    """The two modularity certificates disagreed (internal inconsistency)."""


# ---------------------------------------------------------------------------
# inner products and Gram matrices


def inner_o(u, v) -> OElem:
    """Ambient Hermitian product of O-coordinate vectors."""
    acc = u[0].conj() * v[0]
    for a, b in zip(u[1:], v[1:]):
        acc = acc - a.conj() * b
    return acc


def inner_q(u, v) -> QElem:
    """Ambient Hermitian product of field-coordinate vectors."""
    acc = u[0].conj() * v[0]
    for a, b in zip(u[1:], v[1:]):
        acc = acc - a.conj() * b
    return acc


def gram_of(vectors) -> list[list[QElem]]:
    """Pairwise Gram matrix (entries in the fraction field)."""
    vecs = [tuple(QElem.of(c.q, c) for c in v) for v in vectors]
    return [[inner_q(u, v) for v in vecs] for u in vecs]


def is_hermitian(G) -> bool:
    m = len(G)
    for i in range(m):
        if G[i][i].t != 0:
            return False
        for j in range(i + 1, m):
            if G[i][j] != G[j][i].conj():
                return False
    return True


# ---------------------------------------------------------------------------
# exact linear algebra over the fraction field


def rref_K(rows):
    """Reduced row echelon form over Q(sqrt(-q)); returns (rows, pivots)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for j in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][j]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv_row = [x / rows[r][j] for x in rows[r]]
        rows[r] = inv_row
        for i in range(len(rows)):
            if i != r and rows[i][j]:
                f = rows[i][j]
                rows[i] = [x - f * y for x, y in zip(rows[i], inv_row)]
        pivots.append(j)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank_K(rows) -> int:
    return len(rref_K(rows)[1])


def kernel_K(rows):
    """Basis of {v : A v = 0} over the fraction field."""
    rr, pivots = rref_K(rows)
    if not rows:
        return []
    q = rows[0][0].q
    ncols = len(rows[0])
    zero, one = QElem.of(q, 0), QElem.of(q, 1)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for i, j in enumerate(pivots):
            v[j] = -rr[i][f]
        basis.append(v)
    return basis


def radical_basis(G) -> list[list[QElem]]:
    """Basis of the null space of a Hermitian Gram matrix."""
    if G and not is_hermitian(G):
        raise ValueError("Gram matrix is not Hermitian")
    return kernel_K(G)


@dataclass(frozen=True)
class Inertia:
    n_plus: int
    n_minus: int
    n_zero: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n_plus, self.n_minus, self.n_zero)


def inertia(G) -> Inertia:
    """Exact inertia of a Hermitian matrix by recursive pivoting.

    A nonzero real diagonal pivot contributes its sign and the computation
    recurses on the Schur complement; an all-zero diagonal with a nonzero
    off-diagonal entry contributes a hyperbolic (+1, -1) pair; the zero
    matrix contributes only zeros.
    """
    if G and not is_hermitian(G):
        raise ValueError("Gram matrix is not Hermitian")
    M = [row[:] for row in G]
    n_plus = n_minus = n_zero = 0
    while M:
        m = len(M)
        piv = next((i for i in range(m) if M[i][i]), None)
        if piv is not None:
            d = M[piv][piv].s
            if d > 0:
                n_plus += 1
            else:
                n_minus += 1
            rest = [i for i in range(m) if i != piv]
            M = [
                [M[i][j] - M[i][piv] * M[piv][j] / M[piv][piv] for j in rest]
                for i in rest
            ]
            continue
        off = next(
            ((i, j) for i in range(m) for j in range(i + 1, m) if M[i][j]), None
        )
        if off is None:
            n_zero += m
            break
        r, s = off
        g = M[r][s]
        gc = g.conj()
        n_plus += 1
        n_minus += 1
        rest = [i for i in range(m) if i not in (r, s)]
        M = [
            [
                M[i][j] - M[i][r] * M[s][j] / gc - M[i][s] * M[r][j] / g
                for j in rest
            ]
            for i in rest
        ]
    return Inertia(n_plus, n_minus, n_zero)


# ---------------------------------------------------------------------------
# the singular point/line form


def build_L0_gram(plane: ProjPlane) -> list[list[QElem]]:
    """Gram matrix of the 2n basis vectors indexed by points then lines:
    diagonal -q, entry sqrt(-q) at incident (point, line) pairs and its
    conjugate at (line, point) pairs, zero elsewhere."""
    q, n = plane.q, plane.n
    zero = QElem(q, Fraction(0), Fraction(0))
    diag = QElem(q, Fraction(-q), Fraction(0))
    p = QElem.sqrt_minus_q(q)
    pbar = p.conj()
    G = [[zero] * (2 * n) for _ in range(2 * n)]
    for i in range(2 * n):
        G[i][i] = diag
    for point in range(n):
        for line in plane.lines_through(point):
            G[point][n + line] = p
            G[n + line][point] = pbar
    return G


def w_line_vector(plane: ProjPlane, line: int) -> list[QElem]:
    """w_l = conj(p) * l + sum of the points on l, in point/line coordinates."""
    q, n = plane.q, plane.n
    zero = QElem(q, Fraction(0), Fraction(0))
    one = QElem(q, Fraction(1), Fraction(0))
    v = [zero] * (2 * n)
    v[n + line] = QElem.sqrt_minus_q(q).conj()
    for point in plane.line(line):
        v[point] = one
    return v


def apply_gram(G, v):
    """Matrix-vector product over the fraction field."""
    out = []
    for row in G:
        acc = row[0] * v[0]
        for x, y in zip(row[1:], v[1:]):
            acc = acc + x * y
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# the quotient lattice in line coordinates


def z_vector(v) -> list[int]:
    """Integer realization: O-coordinate a + b*omega becomes the pair (a, b)."""
    out = []
    for c in v:
        out.append(c.a)
        out.append(c.b)
    return out


def from_z_vector(q: int, w) -> tuple[OElem, ...]:
    return tuple(OElem(q, w[2 * i], w[2 * i + 1]) for i in range(len(w) // 2))


def omega_vec(v) -> tuple[OElem, ...]:
    return tuple(omega_times(c) for c in v)


class HermLattice:
    """A finitely generated O-submodule of O^(1,n), given by generators.

    No freeness assumption is made: all membership and equality questions
    are answered on integer realizations (O-coordinate a + b*omega becomes
    the pair (a, b)).

    Lattices that visibly contain p*O^(1,n) (all the p*e_k occur among the
    generators, as in the quotient-lattice construction) are handled
    through the exact decomposition L = p*M + lifts of the mod-p image X:
    membership, bases and equality then reduce to row echelon computations
    over F_q, which avoids the coefficient growth of generic integer
    elimination at the full 2(n+1) rank.
    """

    def __init__(self, q: int, n: int, generators, plane: ProjPlane | None = None):
        check_ring_param(q)
        self.q = q
        self.n = n
        self.plane = plane
        self.generators = tuple(tuple(g) for g in generators)
        for g in self.generators:
            if len(g) != n + 1:
                raise ValueError("generator has wrong ambient dimension")
        gen_set = set(self.generators)
        self._has_pm = all(
            p_times_e(q, n, k) in gen_set for k in range(n + 1)
        )
        self._zlat: IntegerLattice | None = None
        self._basis_rows = None
        self._x_rref = None

    @property
    def ambient_dim(self) -> int:
        return self.n + 1

    @property
    def contains_pm(self) -> bool:
        return self._has_pm

    # -- mod-p image ---------------------------------------------------------

    def x_image_rref(self):
        """Canonical reduced echelon basis of X = L / pM inside F_q^(n+1)."""
        if self._x_rref is None:
            rows = [[c.reduce_mod_p() for c in g] for g in self.generators]
            self._x_rref = rref_mod_p(rows, self.q)
        return self._x_rref

    # -- integer realization ------------------------------------------------

    def z_lattice(self) -> IntegerLattice:
        """Echelon basis of the integer realization.  Only used on lattices
        without the pM structure; those are kept small by their callers."""
        if self._zlat is None:
            lat = IntegerLattice(2 * (self.n + 1))
            rows = []
            for g in self.generators:
                rows.append(z_vector(g))
                rows.append(z_vector(omega_vec(g)))
            rows.sort(key=lambda r: (sum(1 for x in r if x), max(map(abs, r))))
            for r in rows:
                lat.add(r)
            self._zlat = lat
        return self._zlat

    def z_basis(self):
        """A Z-basis of the realization, as O-coordinate vectors.

        With the pM structure the basis is assembled directly: one lift u_i
        (and omega*u_i) per echelon row of X, plus p*e_k (and omega*p*e_k)
        for every non-pivot coordinate k.  The result spans pM + lifts = L
        and has the right index in O^(1,n), so it is a basis.
        """
        if self._basis_rows is None:
            q, n = self.q, self.n
            if self._has_pm:
                rows_x, pivots = self.x_image_rref()
                basis = []
                piv_set = set(pivots)
                for row in rows_x:
                    u = tuple(OElem(q, c, 0) for c in row)
                    basis.append(u)
                    basis.append(omega_vec(u))
                for k in range(n + 1):
                    if k not in piv_set:
                        pe = p_times_e(q, n, k)
                        basis.append(pe)
                        basis.append(omega_vec(pe))
                self._basis_rows = tuple(basis)
            else:
                lat = self.z_lattice()
                self._basis_rows = tuple(
                    from_z_vector(self.q, row) for row in lat.hermite_basis()
                )
        return self._basis_rows

    def __contains__(self, v) -> bool:
        v = tuple(v)
        if len(v) != self.n + 1:
            return False
        if self._has_pm:
            # L is the full preimage of X under reduction mod p
            rows_x, pivots = self.x_image_rref()
            q = self.q
            img = [c.reduce_mod_p() for c in v]
            for row, j in zip(rows_x, pivots):
                f = img[j]
                if f:
                    img = [(a - f * b) % q for a, b in zip(img, row)]
            return not any(img)
        return z_vector(v) in self.z_lattice()

    def equals(self, other: "HermLattice") -> bool:
        if self.q != other.q or self.n != other.n:
            return False
        if self._has_pm and other._has_pm:
            a_rows, a_piv = self.x_image_rref()
            b_rows, b_piv = other.x_image_rref()
            return a_piv == b_piv and a_rows == b_rows
        return self.z_lattice().hermite_basis() == other.z_lattice().hermite_basis()

    # -- distinguished vectors ----------------------------------------------

    def w_points(self) -> tuple[OElem, ...]:
        """w_P = (q+1; -1, ..., -1)."""
        q, n = self.q, self.n
        return (OElem(q, q + 1, 0),) + tuple(OElem(q, -1, 0) for _ in range(n))

    def w_lines(self) -> tuple[OElem, ...]:
        """w_L = p * e_0."""
        q, n = self.q, self.n
        return (OElem.p(q),) + tuple(OElem.zero(q) for _ in range(n))

    def inner(self, u, v) -> OElem:
        return inner_o(tuple(u), tuple(v))

    def basis_gram(self) -> list[list[QElem]]:
        """Gram matrix of a maximal fraction-field-independent subset of the
        generators (nondegenerate iff the form is)."""
        chosen = []
        echelon: list[tuple[int, list[QElem]]] = []
        for i, g in enumerate(self.generators):
            row = [QElem.of(self.q, c) for c in g]
            for pc, er in echelon:
                if row[pc]:
                    f = row[pc]
                    row = [x - f * y for x, y in zip(row, er)]
            j = next((t for t, x in enumerate(row) if x), None)
            if j is not None:
                inv = row[j]
                row = [x / inv for x in row]
                echelon.append((j, row))
                echelon.sort(key=lambda pr: pr[0])
                chosen.append(i)
        return gram_of([self.generators[i] for i in chosen])


def lattice_to_json(L: HermLattice) -> str:
    import json

    obj = {
        "q": L.q,
        "ambient_dim": L.n + 1,
        "generators": [[c.to_json() for c in g] for g in L.generators],
        "form": f"O(1,{L.n})",
    }
    return json.dumps(obj, sort_keys=True)


def lattice_from_json(text: str, plane: ProjPlane | None = None) -> HermLattice:
    import json

    obj = json.loads(text)
    q = obj["q"]
    n = obj["ambient_dim"] - 1
    gens = [
        tuple(OElem(q, int(a), int(b)) for a, b in g) for g in obj["generators"]
    ]
    return HermLattice(q, n, gens, plane=plane)


def point_vector(plane: ProjPlane, i: int) -> tuple[OElem, ...]:
    """x_i = (1; eps_1, ..., eps_n) with -1 exactly at lines through x_i."""
    q, n = plane.q, plane.n
    eps = [OElem.zero(q)] * n
    for line in plane.lines_through(i):
        eps[line] = OElem(q, -1, 0)
    return (OElem.one(q),) + tuple(eps)


def p_times_e(q: int, n: int, k: int) -> tuple[OElem, ...]:
    v = [OElem.zero(q)] * (n + 1)
    v[k] = OElem.p(q)
    return tuple(v)


def build_Lq(plane: ProjPlane) -> HermLattice:
    """The nondegenerate quotient lattice in line coordinates: generated by
    the n point vectors together with p*e_k for k = 0..n."""
    q, n = plane.q, plane.n
    check_ring_param(q)
    gens = [point_vector(plane, i) for i in range(n)]
    gens += [p_times_e(q, n, k) for k in range(n + 1)]
    return HermLattice(q, n, gens, plane=plane)


def build_pM(q: int, n: int) -> HermLattice:
    """The sublattice p * O^(1,n)."""
    return HermLattice(q, n, [p_times_e(q, n, k) for k in range(n + 1)])


def membership(v, L: HermLattice) -> bool:
    """Exact membership in L via the integer realization."""
    return tuple(v) in L


def cor212_membership(v, plane: ProjPlane) -> bool:
    """Membership test by pairings: v belongs to the quotient lattice iff
    <x_i|v> lies in the ramified ideal pO for every point vector x_i."""
    return all(
        in_p_ideal(inner_o(point_vector(plane, i), tuple(v)))
        for i in range(plane.n)
    )


# ---------------------------------------------------------------------------
# modularity certificates


@dataclass(frozen=True)
class ModPCertificate:
    """Reduction mod p: image X of L in F_q^(n+1) under the induced
    symmetric form diag(1, -1, ..., -1)."""

    dim_x: int
    expected_dim: int
    isotropic: bool

    @property
    def p_modular(self) -> bool:
        return self.isotropic and self.dim_x == self.expected_dim


@dataclass(frozen=True)
class DualCertificate:
    """Trace-form dual computation on the integer realization.

    With S the matrix of 2*Re<b_i|b_j> over a Z-basis, s-modularity of L
    (s L' = L for s in {p, q}) is equivalent to the stated divisibility of
    S together with |det S| = (q * N(s))^(n+1).
    """

    scale: str
    pairings_ok: bool
    det_exponent_expected: int
    det_exponent: int | None
    det_sign_ok: bool

    @property
    def modular(self) -> bool:
        return self.pairings_ok and self.det_exponent == self.det_exponent_expected


@dataclass(frozen=True)
class PModularCertificate:
    q: int
    n: int
    mod_p: ModPCertificate
    dual: DualCertificate | None

    @property
    def p_modular(self) -> bool:
        return self.mod_p.p_modular


def _require_pm_sandwich(L: HermLattice) -> None:
    if L.contains_pm:
        return
    q, n = L.q, L.n
    for k in range(n + 1):
        if p_times_e(q, n, k) not in L:
            raise ValueError("certificate requires p * O^(1,n) inside L")


def pairing_coordinate_grams(vectors, q: int):
    """All pairwise inner products <v_i|v_j> = Ga[i,j] + Gb[i,j]*omega,
    computed with integer matrix arithmetic."""
    a = np.array([[c.a for c in v] for v in vectors], dtype=np.int64)
    b = np.array([[c.b for c in v] for v in vectors], dtype=np.int64)
    t = (1 + q) // 4
    signs = np.ones(a.shape[1], dtype=np.int64)
    signs[1:] = -1
    af = a * signs
    bf = b * signs
    ga = af @ a.T + bf @ a.T + t * (bf @ b.T)
    gb = af @ b.T - bf @ a.T
    return ga, gb


def mod_p_certificate(L: HermLattice) -> ModPCertificate:
    """Certificate via the finite quadratic space O^(1,n) / p O^(1,n)."""
    q, n = L.q, L.n
    _require_pm_sandwich(L)
    rows = [[c.reduce_mod_p() for c in g] for g in L.generators]
    dim_x = len(L.x_image_rref()[1]) if L.contains_pm else rank_mod_p(rows, q)
    B = np.array(rows, dtype=np.int64)
    signs = np.ones(n + 1, dtype=np.int64)
    signs[1:] = -1
    prods = (B * signs) @ B.T % q
    return ModPCertificate(
        dim_x=dim_x, expected_dim=(n + 1) // 2, isotropic=not prods.any()
    )


def dual_certificate(L: HermLattice, scale: str = "p") -> DualCertificate:
    """Certificate via the dual lattice on the integer realization.

    scale "p": checks p L' = L.  scale "q": checks q L' = L.  The dual is
    realized through the trace form: p L' is exactly q times the Z-dual of
    the realization under 2*Re< | >, so equality with L amounts to the
    divisibility of the trace Gram S by q together with the exact
    determinant |det S| = (q * N(s))^(n+1).
    """
    q = L.q
    basis = L.z_basis()
    rank_o, rem = divmod(len(basis), 2)
    if rem:
        raise ArithmeticError("realization rank must be even")
    ga, gb = pairing_coordinate_grams(basis, q)
    S = 2 * ga + gb
    if scale == "p":
        # <L|L> in pO: the mod-p reduction 2a + b of every pairing vanishes
        pairings_ok = not (S % q).any()
        norm_s = q
    elif scale == "q":
        pairings_ok = not (ga % q).any() and not (gb % q).any()
        norm_s = q * q
    else:
        raise ValueError("scale must be 'p' or 'q'")
    expected = rank_o * _int_log(q * norm_s, q)
    det_exp = None
    sign_ok = False
    if pairings_ok:
        mat = S.tolist()
        d = det_bareiss(mat) if len(mat) <= 40 else det_crt(mat)
        sign_ok = d != 0
        ad = abs(d)
        e = 0
        while ad % q == 0:
            ad //= q
            e += 1
        det_exp = e if ad == 1 else -1  # -1 flags a non-power determinant
    return DualCertificate(
        scale=scale,
        pairings_ok=bool(pairings_ok),
        det_exponent_expected=expected,
        det_exponent=det_exp,
        det_sign_ok=sign_ok,
    )


def _int_log(value: int, base: int) -> int:
    e = 0
    while value > 1:
        if value % base:
            raise ValueError("not a power of the base")
        value //= base
        e += 1
    return e


def is_p_modular(L: HermLattice, paranoid: bool = False) -> PModularCertificate:
    """Run the mod-p certificate, and when ``paranoid`` also the dual
    certificate; the two must agree."""
    cert_a = mod_p_certificate(L)
    cert_b = dual_certificate(L, "p") if paranoid else None
    if cert_b is not None and cert_a.p_modular != cert_b.modular:
        raise CertificateMismatch(
            f"mod-p certificate says {cert_a.p_modular}, dual says {cert_b.modular}"
        )
    return PModularCertificate(q=L.q, n=L.n, mod_p=cert_a, dual=cert_b)


# ---------------------------------------------------------------------------
# explicit O-basis


def o_basis(L: HermLattice) -> list[tuple[OElem, ...]]:
    """An explicit free O-basis of a lattice containing p*O^(1,n).

    With X = L/pM in reduced echelon form, the lifts u_i (entry 1 at their
    pivot coordinate, support otherwise only on free coordinates) together
    with p*e_k for the free coordinates k span L over O: p times a pivot
    coordinate vector is p*u_i minus free-coordinate terms.  That is n + 1
    generators for a torsion-free module of rank n + 1 over a domain, hence
    a free basis -- no principal-ideal hypothesis is needed.
    """
    if not L.contains_pm:
        raise ValueError("o_basis requires a lattice containing p*O^(1,n)")
    q, n = L.q, L.n
    rows_x, pivots = L.x_image_rref()
    piv_set = set(pivots)
    basis = [tuple(OElem(q, c, 0) for c in row) for row in rows_x]
    basis += [p_times_e(q, n, k) for k in range(n + 1) if k not in piv_set]
    return basis


def det_O(rows) -> OElem:
    """Exact determinant of a matrix over O by fraction-free (Bareiss)
    elimination; all intermediate entries stay in the ring."""
    a = [list(r) for r in rows]
    m = len(a)
    q = a[0][0].q
    sign = 1
    prev = OElem.one(q)
    for k in range(m - 1):
        if not a[k][k]:
            piv = next((i for i in range(k + 1, m) if a[i][k]), None)
            if piv is None:
                return OElem.zero(q)
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        pk = a[k][k]
        for i in range(k + 1, m):
            aik = a[i][k]
            for j in range(k + 1, m):
                num = pk * a[i][j] - aik * a[k][j]
                val = num.divide_exact(prev)
                if val is None:
                    raise ArithmeticError("Bareiss division failed")
                a[i][j] = val
            a[i][k] = OElem.zero(q)
        prev = pk
    d = a[m - 1][m - 1]
    return d if sign == 1 else -d


def o_basis_gram_det(L: HermLattice) -> OElem:
    """Gram determinant of the explicit O-basis; its norm equals q^(n+1)
    exactly when L is p-modular of rank n + 1."""
    basis = o_basis(L)
    gram = [[inner_o(u, v) for v in basis] for u in basis]
    return det_O(gram)


# ---------------------------------------------------------------------------
# collineation action


def apply_collineation(v, coll: Collineation):
    """Induced ambient map: fix coordinate 0, permute line coordinates."""
    v = tuple(v)
    n = len(v) - 1
    out = list(v)
    for j in range(n):
        out[1 + coll.line_perm[j]] = v[1 + j]
    return tuple(out)


def check_collineation_invariance(L: HermLattice, coll: Collineation) -> bool:
    """The induced map sends generators into L, preserves all pairwise inner
    products, fixes w_P and w_L, and matches the point permutation on the
    point vectors."""
    if L.plane is None:
        raise ValueError("lattice carries no plane data")
    n = L.n
    mapped = [apply_collineation(g, coll) for g in L.generators]
    if any(m not in L for m in mapped):
        return False
    for u, mu in zip(L.generators, mapped):
        for v, mv in zip(L.generators, mapped):
            if inner_o(u, v) != inner_o(mu, mv):
                return False
    if apply_collineation(L.w_points(), coll) != L.w_points():
        return False
    if apply_collineation(L.w_lines(), coll) != L.w_lines():
        return False
    for i in range(n):
        if apply_collineation(point_vector(L.plane, i), coll) != point_vector(
            L.plane, coll.point_perm[i]
        ):
            return False
    return True
