"""Twisted projective homogeneous varieties and their class-sum measure.

Five families are supported, each a twisted form of a projective
homogeneous variety carrying a finite list of associated central simple
algebras (its Tits algebras):

* Severi-Brauer variety of an algebra A: the classes k, A, ..., A^(n-1);
* twisted Grassmannian Gr(d; A): tensor powers of A weighted by Gaussian
  binomial coefficients;
* smooth quadric of a form q: k's and the even Clifford class(es);
* twisted quaternionic projective space of a symplectic-involution
  algebra: k's and A by a ceiling/floor split of deg(A)/4;
* involution variety of an orthogonal-involution algebra with trivial
  discriminant: k's, A, and the two half even Clifford classes.

The measure of a variety is the formal sum of those classes in the
quotient ring; it is multiplicative on products.  Its augmentation is the
number of Tits algebras, a purely combinatorial count (cell_count).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import comb

from .algebras import CSA, split_csa, tensor_power
from .brauer import BrauerClass
from .class_ring import RingElement
from .fields import DomainError, Field, SquareClass
from .forms import (
    QuadraticForm,
    albert_form,
    even_clifford_class,
    even_clifford_half_class,
    has_trivial_discriminant,
    quaternion_class,
)


def gauss_coefficients(n: int, d: int) -> list[int]:
    """Coefficients of the Gaussian binomial (n choose d)_t.

    Recurrence (n d)_t = (n-1 d-1)_t + t^d (n-1 d)_t; the coefficient list
    has degree d(n-d) and sums to the ordinary binomial C(n, d).
    """
    return list(_gauss(n, d))


@cache
def _gauss(n: int, d: int) -> tuple[int, ...]:
    if d < 0 or d > n:
        return (0,)
    if d == 0 or d == n:
        return (1,)
    left = _gauss(n - 1, d - 1)
    right = _gauss(n - 1, d)
    out = [0] * (d * (n - d) + 1)
    for j, c in enumerate(left):
        out[j] += c
    for j, c in enumerate(right):
        out[j + d] += c
    return tuple(out)


class TwistedVariety:
    """Base class; subclasses validate their defining data on construction."""

    field: Field

    def measure(self) -> RingElement:
        raise NotImplementedError

    def cell_count(self) -> int:
        raise NotImplementedError

    def variety_dim(self) -> int:
        raise NotImplementedError


@dataclass(frozen=True)
class SeveriBrauer(TwistedVariety):
    A: CSA

    @property
    def field(self) -> Field:
        return self.A.field

    def measure(self) -> RingElement:
        out = RingElement.zero(self.field)
        for i in range(self.A.degree):
            out = out + RingElement.of_class(tensor_power(self.A, i))
        return out

    def cell_count(self) -> int:
        return self.A.degree

    def variety_dim(self) -> int:
        return self.A.degree - 1


@dataclass(frozen=True)
class Grassmannian(TwistedVariety):
    d: int
    A: CSA

    def __post_init__(self) -> None:
        if not 1 <= self.d < self.A.degree:
            raise DomainError("Grassmannian requires 1 <= d < deg(A)")

    @property
    def field(self) -> Field:
        return self.A.field

    def measure(self) -> RingElement:
        out = RingElement.zero(self.field)
        for j, c in enumerate(gauss_coefficients(self.A.degree, self.d)):
            if c:
                out = out + RingElement.of_class(tensor_power(self.A, j)).scaled(c)
        return out

    def cell_count(self) -> int:
        return comb(self.A.degree, self.d)

    def variety_dim(self) -> int:
        return self.d * (self.A.degree - self.d)


@dataclass(frozen=True)
class Quadric(TwistedVariety):
    q: QuadraticForm

    def __post_init__(self) -> None:
        if self.q.dim < 3:
            raise DomainError("quadrics require dim(q) >= 3")
        if self.q.dim % 2 == 0 and not has_trivial_discriminant(self.q):
            raise DomainError(
                "even-dimensional quadrics require trivial discriminant"
            )

    @property
    def field(self) -> Field:
        return self.q.field

    def measure(self) -> RingElement:
        n = self.q.dim
        out = RingElement.one(self.field).scaled(n - 2)
        if n % 2:
            return out + RingElement.of_class(even_clifford_class(self.q))
        return out + RingElement.of_class(even_clifford_half_class(self.q)).scaled(2)

    def cell_count(self) -> int:
        n = self.q.dim
        return n - 1 if n % 2 else n

    def variety_dim(self) -> int:
        return self.q.dim - 2


@dataclass(frozen=True)
class QuaternionProjective(TwistedVariety):
    """Twisted quaternionic projective space of (A, *) with * symplectic.

    A symplectic involution exists iff A (x) A splits, so [A] must be
    2-torsion, and deg(A) must be even.
    """

    A: CSA

    def __post_init__(self) -> None:
        if self.A.degree % 2:
            raise DomainError("symplectic-involution algebras have even degree")
        if self.A.period > 2:
            raise DomainError("a symplectic involution forces [A] to be 2-torsion")

    @property
    def field(self) -> Field:
        return self.A.field

    def measure(self) -> RingElement:
        n = self.A.degree
        out = RingElement.one(self.field).scaled(-(-n // 4))  # ceil(n/4)
        return out + RingElement.of_class(self.A.brclass).scaled(n // 4)

    def cell_count(self) -> int:
        return self.A.degree // 2

    def variety_dim(self) -> int:
        # quaternionic projective space of quaternionic dimension n/2 - 1
        return 4 * (self.A.degree // 2 - 1)


@dataclass(frozen=True)
class InvolutionVariety(TwistedVariety):
    """Involution variety of (A, *) with * orthogonal of trivial discriminant.

    Carries the two half even Clifford classes c_plus and c_minus as
    explicit data; the construction validates the classical relations
    linking them to [A], which depend on deg(A) mod 4:

        deg = 2 (mod 4):  2 c+ = [A],  3 c+ = c-,  4 c+ = 0;
        deg = 0 (mod 4):  2 c+ = 0,  2 c- = 0,  c+ + c- = [A].
    """

    A: CSA
    c_plus: BrauerClass
    c_minus: BrauerClass

    def __post_init__(self) -> None:
        if self.A.degree % 2:
            raise DomainError("orthogonal-involution data here requires even degree")
        if self.A.period > 2:
            raise DomainError("[A] must be 2-torsion")
        if self.c_plus.field != self.A.field or self.c_minus.field != self.A.field:
            raise DomainError("Clifford classes live over a different field")
        zero = BrauerClass.zero(self.A.field)
        a = self.A.brclass
        if self.A.degree % 4 == 2:
            ok = (
                self.c_plus.scale(2) == a
                and self.c_plus.scale(3) == self.c_minus
                and self.c_plus.scale(4) == zero
            )
        else:
            ok = (
                self.c_plus.scale(2) == zero
                and self.c_minus.scale(2) == zero
                and self.c_plus + self.c_minus == a
            )
        if not ok:
            raise DomainError(
                "Clifford classes violate the degree mod 4 relations with [A]"
            )
        # the half Clifford algebras have degree 2^(deg/2 - 1)
        half_deg = 2 ** (self.A.degree // 2 - 1)
        if half_deg % self.c_plus.index() or half_deg % self.c_minus.index():
            raise DomainError(
                "Clifford class index must divide the half Clifford degree "
                f"2^(deg/2 - 1) = {half_deg}"
            )

    @property
    def field(self) -> Field:
        return self.A.field

    def measure(self) -> RingElement:
        half = self.A.degree // 2
        out = RingElement.one(self.field).scaled(half - 1)
        out = out + RingElement.of_class(self.A.brclass).scaled(half - 1)
        out = out + RingElement.of_class(self.c_plus)
        return out + RingElement.of_class(self.c_minus)

    def cell_count(self) -> int:
        return self.A.degree

    def variety_dim(self) -> int:
        return self.A.degree - 2


@dataclass(frozen=True)
class Product(TwistedVariety):
    factors: tuple[TwistedVariety, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise DomainError("products need at least one factor")
        f = self.factors[0].field
        if any(v.field != f for v in self.factors):
            raise DomainError("product factors live over different fields")

    @property
    def field(self) -> Field:
        return self.factors[0].field

    def measure(self) -> RingElement:
        out = RingElement.one(self.field)
        for v in self.factors:
            out = out * v.measure()
        return out

    def cell_count(self) -> int:
        out = 1
        for v in self.factors:
            out *= v.cell_count()
        return out

    def variety_dim(self) -> int:
        return sum(v.variety_dim() for v in self.factors)


def measure(v: TwistedVariety) -> RingElement:
    """The class-sum measure of a twisted variety (or product)."""
    return v.measure()


def cell_count(v: TwistedVariety) -> int:
    """The number of Tits algebras; equals the augmentation of the measure."""
    return v.cell_count()


def involution_from_form(q: QuadraticForm) -> InvolutionVariety:
    """The split involution variety of the adjoint involution of q.

    A is the split algebra of degree dim(q) and both Clifford classes are
    the half even Clifford class of q, so the measure agrees with the
    even-dimensional quadric measure.
    """
    if q.dim % 2:
        raise DomainError("adjoint involution data requires even dimension")
    if not has_trivial_discriminant(q):
        raise DomainError("trivial discriminant required")
    c = even_clifford_half_class(q)
    return InvolutionVariety(split_csa(q.dim, q.field), c, c)


def involution_from_biquaternion(
    a1: SquareClass | int,
    b1: SquareClass | int,
    a2: SquareClass | int,
    b2: SquareClass | int,
    field: Field,
) -> InvolutionVariety:
    """The degree-4 involution variety isomorphic to the product of the
    conics of (a1,b1) and (a2,b2) (Tao's description); the Clifford
    classes are the two quaternion classes."""
    from .algebras import biquaternion

    A = biquaternion(a1, b1, a2, b2, field)
    return InvolutionVariety(
        A, quaternion_class(a1, b1, field), quaternion_class(a2, b2, field)
    )


def conic(a: SquareClass | int, b: SquareClass | int, field: Field) -> SeveriBrauer:
    """The smooth conic a x^2 + b y^2 = z^2 as a Severi-Brauer variety."""
    from .algebras import quaternion

    return SeveriBrauer(quaternion(a, b, field))


def quadric_of_albert(
    a1: int, b1: int, a2: int, b2: int, field: Field
) -> Quadric:
    return Quadric(albert_form(a1, b1, a2, b2, field))
