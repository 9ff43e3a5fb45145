"""Finite fields GF(l^k) as polynomial residue rings over F_l.

Elements are coefficient tuples of length k (constant term first), reduced
modulo a monic irreducible modulus of degree k.  Two deterministic modulus
selection rules are provided:

* :func:`build_field` picks the least monic irreducible modulus (coefficient
  tuples compared by their value as base-l integers, constant term least
  significant) whose residue class of x is primitive, i.e. generates the
  full multiplicative group.

* :func:`singer_field` builds GF(q^3) over F_l for a prime power q = l^d
  and picks the least modulus of the form x^(3d) - g(x), with g enumerated
  by increasing value sum(g_i * l^i), such that the class of x maps to a
  generator of the quotient group GF(q^3)* / GF(q)*.  That quotient has
  order n = q^2 + q + 1 and is what indexes the points of the projective
  plane; the rule reproduces the classical choice x^3 = x + 1 at q = 3.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import factorize, is_prime


# ---------------------------------------------------------------------------
# polynomial helpers (coefficient tuples over F_l, constant term first,
# trailing zeros stripped; () is the zero polynomial)


def poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def poly_add(a, b, l):
    m = max(len(a), len(b))
    return poly_trim(
        [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % l for i in range(m)]
    )


def poly_mul(a, b, l):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % l
    return poly_trim(out)


def poly_divmod(a, b, l):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    binv = pow(b[-1], l - 2, l)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        c = a[-1] * binv % l
        d = len(a) - len(b)
        q[d] = c
        for i, x in enumerate(b):
            a[d + i] = (a[d + i] - c * x) % l
        while a and a[-1] == 0:
            a.pop()
    return poly_trim(q), poly_trim(a)


def poly_mod(a, m, l):
    return poly_divmod(a, m, l)[1]


def poly_gcd(a, b, l):
    while b:
        a, b = b, poly_mod(a, b, l)
    if a:
        inv = pow(a[-1], l - 2, l)
        a = tuple(c * inv % l for c in a)
    return a


def poly_pow_mod(a, e, m, l):
    result = (1,)
    a = poly_mod(a, m, l)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, a, l), m, l)
        a = poly_mod(poly_mul(a, a, l), m, l)
        e >>= 1
    return result


def poly_is_irreducible(f, l) -> bool:
    """Monic f of degree k is irreducible over F_l iff x^(l^k) = x mod f
    and gcd(x^(l^i) - x, f) = 1 for all i <= k/2."""
    k = len(f) - 1
    if k < 1 or f[-1] != 1:
        return False
    x = (0, 1)
    xp = x
    for i in range(1, k // 2 + 1):
        xp = poly_pow_mod(xp, l, f, l)
        g = poly_gcd(poly_add(xp, tuple(-c % l for c in x), l), f, l)
        if g != (1,):
            return False
    for _ in range(k // 2 + 1, k + 1):
        xp = poly_pow_mod(xp, l, f, l)
    return xp == poly_mod(x, f, l)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldCtx:
    """Context for GF(l^k): characteristic, degree and monic modulus
    (coefficient tuple of length k+1, constant first, leading 1)."""

    l: int
    k: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.l):
            raise ValueError(f"{self.l} is not prime")
        if len(self.modulus) != self.k + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not poly_is_irreducible(self.modulus, self.l):
            raise ValueError("modulus is reducible")

    @property
    def order(self) -> int:
        return self.l**self.k

    def elem(self, coeffs) -> "FieldElem":
        if isinstance(coeffs, int):
            coeffs = (coeffs % self.l,)
        c = poly_mod(poly_trim(coeffs), self.modulus, self.l)
        return FieldElem(self, c + (0,) * (self.k - len(c)))

    def zero(self) -> "FieldElem":
        return self.elem(0)

    def one(self) -> "FieldElem":
        return self.elem(1)

    def gen(self) -> "FieldElem":
        """The residue class of x."""
        return self.elem((0, 1))


@dataclass(frozen=True)
class FieldElem:
    """Element of GF(l^k): a length-k coefficient vector over F_l."""

    ctx: FieldCtx = field(compare=False)
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.coeffs) != self.ctx.k:
            raise ValueError("coefficient vector has wrong length")

    def _same(self, other):
        if not isinstance(other, FieldElem) or other.ctx.modulus != self.ctx.modulus:
            raise TypeError("field elements from different contexts")

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.elem(other)
        return isinstance(other, FieldElem) and self.coeffs == other.coeffs \
            and self.ctx.modulus == other.ctx.modulus and self.ctx.l == other.ctx.l

    def __hash__(self):
        return hash((self.ctx.l, self.ctx.modulus, self.coeffs))

    def __add__(self, other):
        self._same(other)
        l = self.ctx.l
        return FieldElem(self.ctx, tuple((a + b) % l for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._same(other)
        l = self.ctx.l
        return FieldElem(self.ctx, tuple((a - b) % l for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        l = self.ctx.l
        return FieldElem(self.ctx, tuple(-a % l for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            l = self.ctx.l
            return FieldElem(self.ctx, tuple(a * other % l for a in self.coeffs))
        self._same(other)
        c = poly_mod(poly_mul(self.coeffs, other.coeffs, self.ctx.l), self.ctx.modulus, self.ctx.l)
        return FieldElem(self.ctx, c + (0,) * (self.ctx.k - len(c)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        c = poly_pow_mod(self.coeffs, e, self.ctx.modulus, self.ctx.l)
        return FieldElem(self.ctx, c + (0,) * (self.ctx.k - len(c)))

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero")
        return self ** (self.ctx.order - 2)

    def multiplicative_order(self) -> int:
        if not self:
            raise ValueError("zero has no multiplicative order")
        m = self.ctx.order - 1
        o = m
        for p, _ in factorize(m).factors:
            while o % p == 0 and self ** (o // p) == self.ctx.one():
                o //= p
        return o


def _monic_candidates(l: int, k: int):
    # ordered by value c_0 + c_1*l + ... + c_{k-1}*l^(k-1); leading coeff 1
    for val in range(l**k):
        c = []
        v = val
        for _ in range(k):
            c.append(v % l)
            v //= l
        yield tuple(c) + (1,)


def build_field(l: int, k: int) -> FieldCtx:
    """GF(l^k) with the least monic irreducible modulus (coefficient tuples
    ordered by base-l value, constant term least significant) whose class
    of x has full multiplicative order l^k - 1."""
    if not is_prime(l):
        raise ValueError(f"{l} is not prime")
    if k < 1 or l**k >= 2**31:
        raise ValueError("field order out of supported range")
    target = l**k - 1
    for mod in _monic_candidates(l, k):
        if mod[0] == 0 or not poly_is_irreducible(mod, l):
            continue
        ctx = FieldCtx(l, k, mod)
        if target == 1 or ctx.gen().multiplicative_order() == target:
            return ctx
    raise ArithmeticError("no primitive modulus found")  # pragma: no cover


def _reduction_rhs_candidates(l: int, k: int):
    # moduli of the form x^k - g(x), g enumerated by increasing
    # value g_0 + g_1 l + ... (degree of g below k)
    for val in range(l**k):
        g = []
        v = val
        for _ in range(k):
            g.append(v % l)
            v //= l
        yield tuple((-c) % l for c in g) + (1,)


def singer_field(q_factorization: tuple[int, int]) -> FieldCtx:
    """GF(q^3) for q = l^d, with the least modulus x^(3d) = g(x) whose root
    generates the quotient GF(q^3)*/GF(q)* of order q^2 + q + 1."""
    l, d = q_factorization
    q = l**d
    n = q * q + q + 1
    k = 3 * d
    qm1 = q - 1
    nfac = factorize(n)
    for mod in _reduction_rhs_candidates(l, k):
        if mod[0] == 0 or not poly_is_irreducible(mod, l):
            continue
        ctx = FieldCtx(l, k, mod)
        lam = ctx.gen()
        # λ^m ∈ GF(q)* iff λ^(m(q-1)) = 1; need order n in the quotient
        if any(lam ** ((n // p) * qm1) == ctx.one() for p, _ in nfac.factors):
            continue
        return ctx
    raise ArithmeticError("no Singer modulus found")  # pragma: no cover


def prime_power(q: int) -> tuple[int, int]:
    """Write q = l^d with l prime, or raise ValueError."""
    f = factorize(q).factors
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    return f[0]


def frobenius(x: FieldElem, q: int) -> FieldElem:
    """x -> x^q (q a power of the characteristic)."""
    return x**q


def trace_to_subfield(x: FieldElem, q: int) -> FieldElem:
    """Relative trace GF(q^3) -> GF(q): x + x^q + x^(q^2)."""
    xq = x**q
    return x + xq + xq**q
