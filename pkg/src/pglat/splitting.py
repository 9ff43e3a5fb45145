"""Null vectors fixed by the plane symmetries, and the hyperbolic splitting
of the quotient lattice.

The group PGL(3, F_q) fixes the plane spanned by w_P and w_L, so a fixed
null vector must be proportional to w_P + c*w_L with

    |w_P + c*w_L|^2 = |c*p + q + 1|^2 - n,        n = q^2 + q + 1.

Such c exists in the fraction field iff n is a norm from Q(sqrt(-q)), iff
the ternary form z^2 + q*x^2 - n*y^2 represents zero over Z, iff every
rational prime with odd valuation in n is congruent to 1 mod 4.  The three
conditions are computed independently here (criterion on the factorization
of n, and a brute-force search for a primitive triple) and must agree.

Given a primitive null z, the pairing ideal <z|L> equals pO, yielding f
with <z|f> = p; projecting onto the cell H = Oz + Of splits L as H + Lambda
with Lambda negative definite of rank n - 1 and again p-modular.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import factorize, primes_upto
from .hermitian import (
    HermLattice,
    dual_certificate,
    DualCertificate,
    inertia,
    Inertia,
    gram_of,
    inner_o,
)
from .linalg import IntegerLattice, express_in_span
from .oring import OElem, QElem, check_ring_param, content_index, omega_times


class SplittingError(ArithmeticError):
    """A structural guarantee failed while splitting (internal error)."""


class PairingIdealViolation(ArithmeticError):
    """The ideal <z|L> is not pO, contradicting p-modularity of L."""


class PrimitivizationFailure(ArithmeticError):
    """The fixed null vector could not be scaled to a primitive lattice
    vector by dividing out rational primes and p (the content ideal is
    likely non-principal; possible when the class number exceeds one)."""


@dataclass(frozen=True)
class TernaryWitness:
    """Solvability record for z^2 + q*x^2 - n*y^2 = 0."""

    q: int
    n: int
    solvable: bool
    solution: tuple[int, int, int] | None
    odd_valuation_primes: tuple[int, ...]
    notes: tuple[str, ...] = ()

    def verify(self) -> bool:
        if self.solution is None:
            return True
        z, x, y = self.solution
        return z * z + self.q * x * x - self.n * y * y == 0 and math.gcd(
            math.gcd(z, x), y
        ) == 1


def _search_ternary_exhaustive(q: int, n: int, y_limit: int) -> tuple[int, int, int] | None:
    # scan y = 1, 2, ... and x ascending with q*x^2 <= n*y^2; used to
    # certify non-existence on a bounded range
    for y in range(1, y_limit + 1):
        ny2 = n * y * y
        x = 0
        while q * x * x <= ny2:
            r = ny2 - q * x * x
            z = math.isqrt(r)
            if z * z == r:
                return (z, x, y)
            x += 1
    return None


def _search_ternary_smallest(q: int, n: int, y_limit: int) -> tuple[int, int, int] | None:
    # smallest solution in the max-norm (then lexicographic in (z, x, y)).
    # The first hit is primitive: dividing by a common factor would give a
    # solution in an earlier shell.  For each bound B and each y <= B the
    # admissible x keep z = sqrt(n y^2 - q x^2) below B, a short interval.
    b = 0
    while b < 10 * y_limit:
        b += 1
        hits = []
        for y in range(1, min(b, y_limit) + 1):
            ny2 = n * y * y
            lo_num = ny2 - b * b
            x_lo = 0 if lo_num <= 0 else math.isqrt((lo_num - 1) // q) + 1
            x_hi = min(b, math.isqrt(ny2 // q))
            for x in range(x_lo, x_hi + 1):
                r = ny2 - q * x * x
                z = math.isqrt(r)
                if z * z == r and max(z, x, y) <= b:
                    hits.append((max(z, x, y), z, x, y))
        if hits:
            _, z, x, y = min(hits)
            return (z, x, y)
    return None


def ternary_zero(q: int, find_witness: bool = True, y_limit: int = 10**4) -> TernaryWitness:
    """Decide solvability of z^2 + q*x^2 = n*y^2 by the odd-valuation
    criterion and, when solvable and requested, produce a primitive triple
    by brute force.  The two routes must agree."""
    check_ring_param(q)
    n = q * q + q + 1
    fac = factorize(n)
    odd = tuple(p for p, e in fac.factors if e % 2)
    solvable = all(p % 4 == 1 for p in odd)
    solution = None
    notes: list[str] = []
    if find_witness:
        if solvable:
            solution = _search_ternary_smallest(q, n, y_limit)
            if solution is None:
                raise SplittingError(
                    f"criterion says solvable for q={q} but no solution with y <= {y_limit}"
                )
        else:
            solution = _search_ternary_exhaustive(q, n, min(y_limit, 200))
            if solution is not None:
                raise SplittingError(
                    f"criterion says unsolvable for q={q} but found {solution}"
                )
    if q == 47 and solution == (43, 27, 4):
        notes.append(
            "near-miss triple (47, 27, 4) fails the form: "
            "47^2 + 47*27^2 - 2257*4^2 = 360; the verified witness is (43, 27, 4)"
        )
    w = TernaryWitness(q, n, solvable, solution, odd, tuple(notes))
    if not w.verify():
        raise SplittingError(f"witness verification failed for q={q}")
    return w


def survey_primes(bound: int) -> list[int]:
    """All primes q <= bound, q = 3 (mod 4), for which the ternary form
    represents zero.  Every member other than 3 must be -1 mod 12."""
    if bound < 3:
        raise ValueError("bound must be at least 3")
    out = []
    for q in primes_upto(bound):
        if q % 4 != 3:
            continue
        if ternary_zero(q, find_witness=False).solvable:
            if q != 3 and q % 12 != 11:
                raise SplittingError(f"survey member {q} is not -1 mod 12")
            out.append(q)
    return out


@dataclass(frozen=True)
class NullVectorReport:
    q: int
    witness: TernaryWitness
    c: QElem
    c_integral: bool
    z: tuple[OElem, ...]
    primitive: bool
    notes: tuple[str, ...] = ()


def _integral_c_candidates(q: int):
    """All c in O with |c*p + q + 1|^2 = n, via the norm-n elements
    u + v*omega of O (as the new leading coordinate of w_P + c*w_L)."""
    n = q * q + q + 1
    p = OElem.p(q)
    cands = []
    vmax = math.isqrt(4 * n // q) + 1
    for v in range(-vmax, vmax + 1):
        disc = 4 * n - q * v * v
        if disc < 0:
            continue
        r = math.isqrt(disc)
        if r * r != disc:
            continue
        for a in ((-v + r), (-v - r)):
            if a % 2:
                continue
            u = a // 2
            head = OElem(q, u, v)
            if head.norm() != n:
                continue
            c = (head - (q + 1)).divide_exact(p)
            if c is not None and c not in cands:
                cands.append(c)
    return cands


def _minimal_c(cands: list[OElem]) -> OElem:
    return min(cands, key=lambda c: (c.norm(), abs(c.a), abs(c.b), c.a, c.b))


def fixed_null_vector(L: HermLattice) -> NullVectorReport:
    """A primitive null vector of L fixed by the plane symmetries, found in
    the span of w_P and w_L.

    Prefers an integral coefficient c (deterministically the minimal one by
    norm, then coordinates); otherwise clears denominators of the
    witness-derived c and divides out rational-prime and p contents, failing
    loudly if no unit content can be reached.
    """
    q, n = L.q, L.n
    witness = ternary_zero(q)
    if not witness.solvable:
        raise SplittingError(f"no null vector: the ternary form has no zero for q={q}")
    notes: list[str] = list(witness.notes)
    w_p, w_l = L.w_points(), L.w_lines()
    cands = _integral_c_candidates(q)
    if cands:
        c = _minimal_c(cands)
        z = tuple(a + c * b for a, b in zip(w_p, w_l))
        cq = c.to_qelem()
        integral = True
    else:
        z0, x0, y0 = witness.solution
        a = Fraction(x0, y0)
        b = Fraction(q + 1 - Fraction(z0, y0), q)
        cq = QElem(q, a, b)
        integral = False
        head = QElem.of(q, q + 1) + cq * QElem.sqrt_minus_q(q)
        den = _oelem_denominator(head)
        z = tuple(
            _scaled_to_oelem(x, den)
            for x in ([head] + [QElem.of(q, -1)] * n)
        )
        z, divided = _primitivize(z)
        notes.append(f"rational c scaled by {den}; divided contents {divided}")
    if inner_o(z, z):
        raise SplittingError("constructed vector is not null")
    if tuple(z) not in L:
        raise SplittingError("constructed vector is not in the lattice")
    if len({x for x in z[1:]}) != 1:
        raise SplittingError("vector is not constant on line coordinates")
    primitive = content_index(z) == 1
    if not primitive:
        raise PrimitivizationFailure(
            f"content index {content_index(z)} cannot be reduced to a unit for q={q}"
        )
    return NullVectorReport(
        q=q,
        witness=witness,
        c=cq,
        c_integral=integral,
        z=z,
        primitive=primitive,
        notes=tuple(notes),
    )


def _oelem_denominator(x: QElem) -> int:
    a = x.s - x.t
    b = 2 * x.t
    return math.lcm(a.denominator, b.denominator)


def _scaled_to_oelem(x: QElem, den: int) -> OElem:
    y = (x * den).to_oelem()
    if y is None:
        raise SplittingError("denominator clearing failed")
    return y


def _primitivize(z: tuple[OElem, ...]):
    """Divide out rational primes and p while the quotient stays integral."""
    q = z[0].q
    divided = []
    changed = True
    while changed:
        changed = False
        idx = content_index(z)
        for r, _ in factorize(idx).factors:
            cand = [x.divide_exact(OElem(q, r, 0)) for x in z]
            if all(c is not None for c in cand):
                z = tuple(cand)
                divided.append(r)
                changed = True
                break
            cand = [x.divide_exact(OElem.p(q)) for x in z]
            if all(c is not None for c in cand):
                z = tuple(cand)
                divided.append("p")
                changed = True
                break
    return z, divided


def pairing_vector(L: HermLattice, z) -> tuple[OElem, ...]:
    """Some f in L with <z|f> = p, after certifying that the pairing ideal
    <z|L> is exactly pO."""
    q = L.q
    p = OElem.p(q)
    pairings = [inner_o(z, g) for g in L.generators]
    ideal = IntegerLattice(2)
    for w in pairings:
        ideal.add([w.a, w.b])
        ow = omega_times(w)
        ideal.add([ow.a, ow.b])
    p_ideal = IntegerLattice(2)
    p_ideal.add([p.a, p.b])
    op = omega_times(p)
    p_ideal.add([op.a, op.b])
    if ideal.hermite_basis() != p_ideal.hermite_basis():
        raise PairingIdealViolation(
            f"pairing ideal has HNF {ideal.hermite_basis()}, expected pO"
        )
    for g, w in zip(L.generators, pairings):
        if w == p:
            return g
    # no single generator works: take an integer combination
    rows = []
    vecs = []
    for g, w in zip(L.generators, pairings):
        rows.append([w.a, w.b])
        vecs.append(g)
        ow = omega_times(w)
        rows.append([ow.a, ow.b])
        vecs.append(tuple(omega_times(c) for c in g))
    combo = express_in_span(rows, [p.a, p.b])
    if combo is None:
        raise PairingIdealViolation("no lattice vector pairs to p with z")
    f = [OElem.zero(q)] * (L.n + 1)
    for t, v in zip(combo, vecs):
        if t:
            f = [a + t * b for a, b in zip(f, v)]
    return tuple(f)


@dataclass(frozen=True)
class HyperbolicSplit:
    """L = H + Lambda with H = Oz + Of a hyperbolic cell."""

    q: int
    z: tuple[OElem, ...]
    f: tuple[OElem, ...]
    h_gram: tuple[tuple[QElem, ...], ...]
    lambda_generators: tuple[tuple[OElem, ...], ...]
    lambda_rank: int
    lambda_inertia: Inertia
    lambda_dual: DualCertificate

    @property
    def lambda_p_modular(self) -> bool:
        return self.lambda_dual.modular


def split_hyperbolic(L: HermLattice, z, f) -> HyperbolicSplit:
    """Split off the hyperbolic cell H = Oz + Of along the projection

        pi_H(x) = (conj(p)^-1 <f|x> - |p|^-2 |f|^2 <z|x>) z + p^-1 <z|x> f.

    Verifies pi_H(g) in H and g - pi_H(g) in L for every generator, that
    the Gram of L reconstructs exactly from H and Lambda, and certifies
    Lambda p-modular through the dual-lattice method.
    """
    q, n = L.q, L.n
    z, f = tuple(z), tuple(f)
    p = OElem.p(q)
    if inner_o(z, z):
        raise ValueError("z must be null")
    if inner_o(z, f) != p:
        raise ValueError("<z|f> must equal p")
    pq = QElem.sqrt_minus_q(q)
    f2 = inner_o(f, f).to_qelem()
    lam_gens = []
    projections = []
    for g in L.generators:
        fz = inner_o(f, g).to_qelem()
        zg = inner_o(z, g).to_qelem()
        alpha = fz / pq.conj() - (f2 / q) * zg
        beta = zg / pq
        alpha_o, beta_o = alpha.to_oelem(), beta.to_oelem()
        if alpha_o is None or beta_o is None:
            raise SplittingError("projection of a generator leaves H")
        pi = tuple(alpha_o * a + beta_o * b for a, b in zip(z, f))
        lam = tuple(a - b for a, b in zip(g, pi))
        if lam not in L:
            raise SplittingError("generator minus projection leaves the lattice")
        if inner_o(z, lam) or inner_o(f, lam):
            raise SplittingError("Lambda component is not orthogonal to H")
        projections.append(pi)
        lam_gens.append(lam)
    # Gram reconstruction: <g_i|g_j> = <pi_i|pi_j> + <lam_i|lam_j>
    for gi, pi_i, li in zip(L.generators, projections, lam_gens):
        for gj, pi_j, lj in zip(L.generators, projections, lam_gens):
            if inner_o(gi, gj) != inner_o(pi_i, pi_j) + inner_o(li, lj):
                raise SplittingError("Gram does not split over H and Lambda")
    h_gram = tuple(tuple(row) for row in gram_of([z, f]))
    lam_lattice = HermLattice(q, n, [g for g in lam_gens if any(g)])
    lam_inertia = inertia(gram_of(lam_gens))
    if lam_inertia.n_plus or lam_inertia.n_minus != n - 1:
        raise SplittingError(f"Lambda inertia {lam_inertia.as_tuple()} unexpected")
    dual = dual_certificate(lam_lattice, "p")
    return HyperbolicSplit(
        q=q,
        z=z,
        f=f,
        h_gram=h_gram,
        lambda_generators=tuple(lam_gens),
        lambda_rank=n - 1,
        lambda_inertia=lam_inertia,
        lambda_dual=dual,
    )
