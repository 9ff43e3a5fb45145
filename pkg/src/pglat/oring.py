"""Exact arithmetic in the imaginary quadratic ring O = Z[(1 + sqrt(-q))/2]
for primes q = 3 (mod 4), and in its fraction field Q(sqrt(-q)).

Ring elements (:class:`OElem`) are stored in the integral basis (1, omega)
with omega = (1 + sqrt(-q))/2, so every element is a pair of plain
integers; omega satisfies omega^2 = omega - t with t = (1 + q)/4.  The
square root of -q itself is p = 2*omega - 1, the ramified prime with
norm q.  Field elements (:class:`QElem`) are pairs of exact Fractions
(s, t) representing s + t*sqrt(-q).

No floating point is used anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import is_prime
from .linalg import IntegerLattice


def check_ring_param(q: int) -> None:
    if q < 3 or q % 4 != 3 or not is_prime(q):
        raise ValueError(
            f"q = {q} unsupported: the ring Z[(1+sqrt(-q))/2] with a ramified "
            f"prime of norm q requires q to be a rational prime with q = 3 (mod 4)"
        )


def omega_shift(q: int) -> int:
    """The integer t = (1 + q)/4 with omega^2 = omega - t."""
    return (1 + q) // 4


@dataclass(frozen=True)
class OElem:
    """a + b*omega in O = Z[(1+sqrt(-q))/2]."""

    q: int
    a: int
    b: int

    def _same(self, other: "OElem") -> None:
        if self.q != other.q:
            raise ValueError("mixed ring parameters")

    @classmethod
    def p(cls, q: int) -> "OElem":
        """The ramified prime sqrt(-q) = 2*omega - 1."""
        return cls(q, -1, 2)

    @classmethod
    def one(cls, q: int) -> "OElem":
        return cls(q, 1, 0)

    @classmethod
    def zero(cls, q: int) -> "OElem":
        return cls(q, 0, 0)

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __add__(self, other):
        if isinstance(other, int):
            other = OElem(self.q, other, 0)
        self._same(other)
        return OElem(self.q, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = OElem(self.q, other, 0)
        self._same(other)
        return OElem(self.q, self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return OElem(self.q, -self.a, -self.b)

    def __mul__(self, other):
        if isinstance(other, int):
            return OElem(self.q, self.a * other, self.b * other)
        self._same(other)
        t = omega_shift(self.q)
        a, b, c, d = self.a, self.b, other.a, other.b
        return OElem(self.q, a * c - b * d * t, a * d + b * c + b * d)

    __rmul__ = __mul__

    def conj(self) -> "OElem":
        """Complex conjugate; conj(omega) = 1 - omega."""
        return OElem(self.q, self.a + self.b, -self.b)

    def norm(self) -> int:
        """Multiplicative norm a^2 + a*b + b^2 (1+q)/4 >= 0."""
        return self.a * self.a + self.a * self.b + self.b * self.b * omega_shift(self.q)

    def trace(self) -> int:
        """Rational trace 2a + b."""
        return 2 * self.a + self.b

    def reduce_mod_p(self) -> int:
        """The ring map O -> F_q killing sqrt(-q); omega -> (q+1)/2."""
        q = self.q
        return (self.a + self.b * ((q + 1) // 2)) % q

    def divide_exact(self, other: "OElem") -> "OElem | None":
        """self / other if the quotient lies in O, else None."""
        self._same(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        prod = self * other.conj()
        if prod.a % n or prod.b % n:
            return None
        return OElem(self.q, prod.a // n, prod.b // n)

    def to_qelem(self) -> "QElem":
        return QElem(self.q, Fraction(2 * self.a + self.b, 2), Fraction(self.b, 2))

    def to_json(self) -> list[int]:
        return [self.a, self.b]

    def __str__(self) -> str:
        return f"{self.a}{self.b:+}w"


@dataclass(frozen=True)
class QElem:
    """s + t*sqrt(-q) with exact rational s, t."""

    q: int
    s: Fraction
    t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "s", Fraction(self.s))
        object.__setattr__(self, "t", Fraction(self.t))

    def _same(self, other: "QElem") -> None:
        if self.q != other.q:
            raise ValueError("mixed ring parameters")

    @classmethod
    def of(cls, q: int, value) -> "QElem":
        if isinstance(value, QElem):
            return value
        if isinstance(value, OElem):
            return value.to_qelem()
        return cls(q, Fraction(value), Fraction(0))

    @classmethod
    def sqrt_minus_q(cls, q: int) -> "QElem":
        return cls(q, Fraction(0), Fraction(1))

    def __bool__(self) -> bool:
        return bool(self.s) or bool(self.t)

    def _coerce(self, other):
        if isinstance(other, QElem):
            return other
        if isinstance(other, OElem):
            return other.to_qelem()
        return QElem(self.q, Fraction(other), Fraction(0))

    def __add__(self, other):
        other = self._coerce(other)
        self._same(other)
        return QElem(self.q, self.s + other.s, self.t + other.t)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        self._same(other)
        return QElem(self.q, self.s - other.s, self.t - other.t)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QElem(self.q, -self.s, -self.t)

    def __mul__(self, other):
        other = self._coerce(other)
        self._same(other)
        return QElem(
            self.q,
            self.s * other.s - self.q * self.t * other.t,
            self.s * other.t + self.t * other.s,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        self._same(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        num = self * other.conj()
        return QElem(self.q, num.s / n, num.t / n)

    def conj(self) -> "QElem":
        return QElem(self.q, self.s, -self.t)

    def norm(self) -> Fraction:
        return self.s * self.s + self.q * self.t * self.t

    def real(self) -> Fraction:
        return self.s

    def is_in_ring(self) -> bool:
        """Membership in O: 2s and 2t integral with 2s = 2t (mod 2)."""
        u, v = 2 * self.s, 2 * self.t
        return u.denominator == 1 and v.denominator == 1 and (u - v) % 2 == 0

    def to_oelem(self) -> OElem | None:
        if not self.is_in_ring():
            return None
        b = 2 * self.t
        return OElem(self.q, int(self.s - self.t), int(b))

    def to_json(self) -> list[list[int]]:
        return [
            [self.s.numerator, self.s.denominator],
            [self.t.numerator, self.t.denominator],
        ]

    def __str__(self) -> str:
        return f"{self.s}{'+' if self.t >= 0 else ''}{self.t}r"


def oelem_from_json(q: int, data) -> OElem:
    return OElem(q, int(data[0]), int(data[1]))


def zrealize_elem(x: OElem) -> tuple[int, int]:
    """Coordinates of x in the integral basis (1, omega)."""
    return (x.a, x.b)


def omega_times(x: OElem) -> OElem:
    """omega * x, used when closing Z-spans under the O-action."""
    t = omega_shift(x.q)
    return OElem(x.q, -x.b * t, x.a + x.b)


def in_p_ideal(x: OElem) -> bool:
    """Membership in the ramified ideal pO (the kernel of reduce_mod_p)."""
    return x.reduce_mod_p() == 0


def content_lattice(vec) -> IntegerLattice:
    """Z-realization of the O-ideal generated by the coordinates of vec:
    the rank-2 integer lattice spanned by (x, omega*x) for each coordinate."""
    vec = list(vec)
    if not any(vec):
        raise ValueError("content of the zero vector is undefined")
    lat = IntegerLattice(2)
    for x in vec:
        lat.add(zrealize_elem(x))
        lat.add(zrealize_elem(omega_times(x)))
    return lat


def content_index(vec) -> int:
    """Index of the content ideal in O (1 means the vector is primitive)."""
    lat = content_lattice(vec)
    if lat.rank < 2:
        raise ArithmeticError("content ideal is not of full rank")
    return abs(lat.determinant())


def content_is_unit(vec) -> bool:
    """True iff the O-ideal generated by the coordinates is all of O."""
    return content_index(vec) == 1
