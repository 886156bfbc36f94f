"""Central simple algebra descriptors and finite subgroups of Br(k).

An algebra is identified by its Brauer class and its degree: two central
simple k-algebras with the same class and degree are isomorphic, so this
pair is a complete isomorphism invariant.  Period, index and degree obey
period | index | degree, with period and index sharing prime factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .brauer import BrauerClass, quaternion_class
from .fields import DomainError, Field, Rationals, SquareClass

SUBGROUP_CAP = 4096


@dataclass(frozen=True)
class CSA:
    """A central simple algebra: Brauer class plus degree."""

    brclass: BrauerClass
    degree: int

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise DomainError("degree must be a positive integer")
        if self.degree % self.index != 0:
            raise DomainError(
                f"index {self.index} does not divide degree {self.degree}"
            )

    @property
    def field(self) -> Field:
        return self.brclass.field

    @property
    def period(self) -> int:
        return self.brclass.order()

    @property
    def index(self) -> int:
        return self.brclass.index()

    @property
    def is_split(self) -> bool:
        return self.brclass.is_zero

    def __str__(self) -> str:
        return f"CSA(deg {self.degree}, class {self.brclass})"


def split_csa(degree: int, field: Field = Rationals()) -> CSA:
    return CSA(BrauerClass.zero(field), degree)


def quaternion(
    a: SquareClass | int, b: SquareClass | int, field: Field = Rationals()
) -> CSA:
    """The quaternion algebra (a,b) as a degree-2 algebra over Q or R."""
    return CSA(quaternion_class(a, b, field), 2)


def biquaternion(
    a1: SquareClass | int,
    b1: SquareClass | int,
    a2: SquareClass | int,
    b2: SquareClass | int,
    field: Field = Rationals(),
) -> CSA:
    """The tensor product (a1,b1) (x) (a2,b2), a degree-4 algebra."""
    return tensor(quaternion(a1, b1, field), quaternion(a2, b2, field))


def tensor(A: CSA, B: CSA) -> CSA:
    """Tensor product: classes add, degrees multiply."""
    if A.field != B.field:
        raise DomainError(f"backend mismatch: {A.field} vs {B.field}")
    return CSA(A.brclass + B.brclass, A.degree * B.degree)


def tensor_power(A: CSA, i: int) -> BrauerClass:
    """The Brauer class of the i-fold tensor power of A."""
    if i < 0:
        raise DomainError("tensor powers take non-negative exponents")
    return A.brclass.scale(i)


def coprime_indexes(A: CSA, B: CSA) -> bool:
    return gcd(A.index, B.index) == 1


def subgroup_generated(
    classes: list[BrauerClass] | tuple[BrauerClass, ...],
    field: Field | None = None,
    cap: int = SUBGROUP_CAP,
) -> frozenset[BrauerClass]:
    """The finite subgroup of Br(k) generated by the given classes.

    Enumerated by closure under addition; raises once the closure exceeds
    ``cap`` elements.
    """
    classes = list(classes)
    if field is None:
        if not classes:
            raise DomainError("cannot infer the field of an empty generator list")
        field = classes[0].field
    if any(c.field != field for c in classes):
        raise DomainError("generators live over different fields")
    elements = {BrauerClass.zero(field)}
    frontier = list(elements)
    while frontier:
        nxt = []
        for x in frontier:
            for g in classes:
                y = x + g
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
                    if len(elements) > cap:
                        raise DomainError(
                            f"subgroup closure exceeded the cap of {cap} elements"
                        )
        frontier = nxt
    return frozenset(elements)


def same_cyclic_subgroup(A: CSA, A2: CSA) -> bool:
    """Whether [A] and [A'] generate the same cyclic subgroup of Br(k).

    Equivalent to [A'] = m[A] for some m coprime to the period of A.
    """
    if A.field != A2.field:
        raise DomainError(f"backend mismatch: {A.field} vs {A2.field}")
    n = A.period
    if n != A2.period:
        return False
    return any(
        gcd(m, n) == 1 and A.brclass.scale(m) == A2.brclass for m in range(1, n + 1)
    )
