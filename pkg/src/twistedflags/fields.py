"""Base-field descriptors, places of Q, and square-class arithmetic.

Brauer groups are only computable once the base field is pinned down, so
every object in this library carries one of five field descriptors:

* ``Rationals`` -- Br(Q) via Hasse invariants at the places of Q,
* ``Reals``     -- Br(R) = Z/2,
* ``PAdics(p)`` -- Br(Q_p) = Q/Z,
* ``GaloisField(q)`` -- Br(F_q) = 0,
* ``DeclaredTorsion`` -- a user-declared finitely generated torsion group
  standing in for Br(k) of a field we cannot compute in (e.g. rational
  function fields in several variables).  The user also declares the
  Schur index of each element; it defaults to the element order.

Square classes (k^x modulo squares) are only available over Q and R; the
quadratic-form layer is gated on that capability.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd


class DomainError(ValueError):
    """A documented precondition of an operation was violated."""


class CapabilityError(DomainError):
    """The operation is not supported over the given base field."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_power_base(q: int) -> int | None:
    """Return p if q = p^k for a prime p, else None."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if p * p > q:
            return q if _is_prime(q) else None
        if q % p == 0:
            while q % p == 0:
                q //= p
            return p if q == 1 else None
    return None


def squarefree_part(n: int) -> int:
    """The square-free integer representing n modulo squares (sign kept)."""
    if n == 0:
        raise DomainError("square class of zero is undefined")
    sign = -1 if n < 0 else 1
    n = abs(n)
    rep = 1
    d = 2
    while d * d <= n:
        while n % (d * d) == 0:
            n //= d * d
        if n % d == 0:
            rep *= d
            n //= d
        d += 1
    return sign * rep * n


def odd_prime_factors(n: int) -> tuple[int, ...]:
    """Odd primes dividing n (n square-free in practice, any n accepted)."""
    n = abs(n)
    out = []
    while n % 2 == 0:
        n //= 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 2
    if n > 1:
        out.append(n)
    return tuple(out)


def prime_factors(n: int) -> tuple[int, ...]:
    n = abs(n)
    if n % 2 == 0:
        return (2,) + odd_prime_factors(n)
    return odd_prime_factors(n)


# ---------------------------------------------------------------------------
# Field descriptors


@dataclass(frozen=True)
class Field:
    """Common behaviour of the five supported base-field descriptors."""

    @property
    def supports_square_classes(self) -> bool:
        return False

    def index_of_order(self, order: int, exps: tuple[int, ...] | None = None) -> int:
        # Over the arithmetic backends the Schur index equals the period
        # (Albert-Brauer-Hasse-Noether over Q; classical over R, Q_p, F_q).
        return order


@dataclass(frozen=True)
class Rationals(Field):
    @property
    def supports_square_classes(self) -> bool:
        return True

    def __str__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class Reals(Field):
    @property
    def supports_square_classes(self) -> bool:
        return True

    def __str__(self) -> str:
        return "R"


@dataclass(frozen=True)
class PAdics(Field):
    p: int

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")

    def __str__(self) -> str:
        return f"Qp:{self.p}"


@dataclass(frozen=True)
class GaloisField(Field):
    q: int

    def __post_init__(self) -> None:
        if _prime_power_base(self.q) is None:
            raise DomainError(f"{self.q} is not a prime power")

    def __str__(self) -> str:
        return f"Fq:{self.q}"


@dataclass(frozen=True)
class DeclaredTorsion(Field):
    """A declared finite abelian group playing the role of Br(k).

    ``orders`` lists the generator orders, so the group is the direct sum
    of cyclic groups Z/orders[i].  ``relations`` are redundant declarations
    (integer combinations of generators) that must already vanish; they are
    validated, never used for further quotienting.  ``index_table`` declares
    Schur indexes of specific elements (exponent vector -> index); elements
    not listed get index = order.
    """

    orders: tuple[int, ...]
    relations: tuple[tuple[int, ...], ...] = ()
    index_table: tuple[tuple[tuple[int, ...], int], ...] = ()

    def __post_init__(self) -> None:
        if not self.orders or any(n < 1 for n in self.orders):
            raise DomainError("generator orders must be positive integers")
        for rel in self.relations:
            if len(rel) != len(self.orders):
                raise DomainError("relation length does not match generator count")
            if any(c % n != 0 for c, n in zip(rel, self.orders)):
                raise DomainError(
                    f"declared relation {rel} does not vanish under the orders"
                )
        for exps, idx in self.index_table:
            order = self.element_order(self.reduce(exps))
            if idx < 1 or idx % order != 0:
                raise DomainError(
                    f"declared index {idx} is not a multiple of the order {order}"
                )
            if set(prime_factors(idx)) != set(prime_factors(order)):
                raise DomainError(
                    f"declared index {idx} and order {order} have different prime factors"
                )

    def reduce(self, exps: tuple[int, ...]) -> tuple[int, ...]:
        if len(exps) != len(self.orders):
            raise DomainError("exponent vector length does not match generator count")
        return tuple(e % n for e, n in zip(exps, self.orders))

    def element_order(self, exps: tuple[int, ...]) -> int:
        order = 1
        for e, n in zip(exps, self.orders):
            order = order * (n // gcd(e, n)) // gcd(order, n // gcd(e, n))
        return order

    def index_of(self, exps: tuple[int, ...]) -> int:
        exps = self.reduce(exps)
        for declared, idx in self.index_table:
            if self.reduce(declared) == exps:
                return idx
        return self.element_order(exps)

    def index_of_order(self, order: int, exps: tuple[int, ...] | None = None) -> int:
        if exps is None:
            return order
        return self.index_of(exps)

    def __str__(self) -> str:
        return "abstract"


# ---------------------------------------------------------------------------
# Places of Q


@dataclass(frozen=True, order=True)
class Place:
    """A place of Q: the real place or a finite prime.

    The sort order puts the real place first and finite primes in
    ascending order, which fixes the canonical serialization.
    """

    sort_key: tuple[int, int] = field(init=False, repr=False)
    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is not None and not _is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")
        object.__setattr__(self, "sort_key", (0, 0) if self.p is None else (1, self.p))

    @property
    def is_real(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        return "oo" if self.p is None else str(self.p)


REAL_PLACE = Place()


def finite_place(p: int) -> Place:
    return Place(p=p)


# ---------------------------------------------------------------------------
# Square classes


@dataclass(frozen=True)
class SquareClass:
    """An element of k^x/(k^x)^2 over Q (square-free integer) or R (sign)."""

    field: Field
    rep: int

    def __post_init__(self) -> None:
        if not self.field.supports_square_classes:
            raise CapabilityError(f"no square classes over {self.field}")
        if self.rep == 0:
            raise DomainError("square class of zero is undefined")
        if isinstance(self.field, Reals):
            if self.rep not in (1, -1):
                raise DomainError("real square classes are represented by +-1")
        elif squarefree_part(self.rep) != self.rep:
            raise DomainError(f"{self.rep} is not square-free")

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        if self.field != other.field:
            raise DomainError("square classes over different fields")
        return square_class(self.rep * other.rep, self.field)

    @property
    def is_one(self) -> bool:
        return self.rep == 1

    @property
    def sign(self) -> int:
        return -1 if self.rep < 0 else 1

    def __str__(self) -> str:
        return str(self.rep)


def square_class(x: int | Fraction, field: Field = Rationals()) -> SquareClass:
    """Normalize a nonzero rational to its square class over the field."""
    if not field.supports_square_classes:
        raise CapabilityError(f"no square classes over {field}")
    if x == 0:
        raise DomainError("square class of zero is undefined")
    if isinstance(x, Fraction):
        n = x.numerator * x.denominator
    else:
        n = int(x)
    if isinstance(field, Reals):
        return SquareClass(field, -1 if n < 0 else 1)
    return SquareClass(field, squarefree_part(n))
