"""Exact Brauer-group elements and Hilbert symbols.

Representations per base field:

* Q:   sparse map place -> invariant in Q/Z (reduced fractions in [0,1),
       real invariant in {0, 1/2}, invariants summing to 0 in Q/Z);
* R:   one invariant in {0, 1/2};
* Q_p: one invariant in Q/Z;
* F_q: the trivial group;
* declared torsion: an exponent vector modulo the generator orders.

Hilbert symbols over Q use the classical closed local formulas (Legendre
symbols at odd p, the unit formulas at 2, the sign rule at the real place;
see Serre, "A Course in Arithmetic", ch. III).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .fields import (
    CapabilityError,
    DeclaredTorsion,
    DomainError,
    Field,
    GaloisField,
    PAdics,
    Place,
    Rationals,
    Reals,
    REAL_PLACE,
    SquareClass,
    finite_place,
    odd_prime_factors,
    prime_factors,
    square_class,
)

HALF = Fraction(1, 2)


def _legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) for odd prime p and a coprime to p."""
    a %= p
    if a == 0:
        raise DomainError(f"{a} is not a unit mod {p}")
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def _two_adic_split(n: int) -> tuple[int, int]:
    """n = 2^alpha * u with u odd; returns (alpha, u)."""
    alpha = 0
    while n % 2 == 0:
        n //= 2
        alpha += 1
    return alpha, n


def hilbert_symbol(a: SquareClass | int, b: SquareClass | int, v: Place) -> int:
    """The local Hilbert symbol (a,b)_v over Q, valued in {+1, -1}.

    (a,b)_v = +1 exactly when z^2 = a x^2 + b y^2 has a nontrivial
    solution over the completion at v.
    """
    a = _as_rational_rep(a)
    b = _as_rational_rep(b)
    if v.is_real:
        return -1 if a < 0 and b < 0 else 1
    p = v.p
    if p == 2:
        alpha, u = _two_adic_split(a)
        beta, w = _two_adic_split(b)
        eps_u = (u - 1) // 2
        eps_w = (w - 1) // 2
        omega_u = (u * u - 1) // 8
        omega_w = (w * w - 1) // 8
        exponent = eps_u * eps_w + alpha * omega_w + beta * omega_u
        return -1 if exponent % 2 else 1
    alpha, u = 0, a
    while u % p == 0:
        u //= p
        alpha += 1
    beta, w = 0, b
    while w % p == 0:
        w //= p
        beta += 1
    eps_p = (p - 1) // 2
    sign = -1 if (alpha * beta * eps_p) % 2 else 1
    if beta % 2:
        sign *= _legendre(u, p)
    if alpha % 2:
        sign *= _legendre(w, p)
    return sign


def _as_rational_rep(x: SquareClass | int) -> int:
    if isinstance(x, SquareClass):
        if not isinstance(x.field, Rationals):
            raise CapabilityError("Hilbert symbols are computed over Q only")
        return x.rep
    if x == 0:
        raise DomainError("Hilbert symbol of zero is undefined")
    return int(x)


@dataclass(frozen=True)
class BrauerClass:
    """An element of Br(k) in the exact backend representation.

    ``data`` is, per backend: a sorted tuple of (place, invariant) pairs
    over Q; a single invariant over R or Q_p; () over F_q; an exponent
    tuple over a declared torsion group.  Instances are immutable and
    equality is structural on the canonical form.
    """

    field: Field
    data: tuple

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(field: Field) -> "BrauerClass":
        if isinstance(field, Rationals):
            return BrauerClass(field, ())
        if isinstance(field, (Reals, PAdics)):
            return BrauerClass(field, (Fraction(0),))
        if isinstance(field, GaloisField):
            return BrauerClass(field, ())
        if isinstance(field, DeclaredTorsion):
            return BrauerClass(field, (0,) * len(field.orders))
        raise CapabilityError(f"unsupported field {field}")

    @staticmethod
    def from_invariants(
        invariants: dict[Place, Fraction | int] | None = None,
        field: Field = Rationals(),
    ) -> "BrauerClass":
        """Build a class over Q from a place -> invariant map."""
        if not isinstance(field, Rationals):
            raise CapabilityError("invariant maps describe classes over Q")
        inv: dict[Place, Fraction] = {}
        for place, value in (invariants or {}).items():
            frac = Fraction(value) % 1
            if frac == 0:
                continue
            if place.is_real and frac != HALF:
                raise DomainError("the real invariant must be 0 or 1/2")
            inv[place] = frac
        if sum(inv.values(), Fraction(0)) % 1 != 0:
            raise DomainError("local invariants must sum to 0 in Q/Z")
        return BrauerClass(field, tuple(sorted(inv.items(), key=lambda t: t[0])))

    @staticmethod
    def real(nontrivial: bool) -> "BrauerClass":
        return BrauerClass(Reals(), (HALF if nontrivial else Fraction(0),))

    @staticmethod
    def local(invariant: Fraction | int, field: PAdics) -> "BrauerClass":
        return BrauerClass(field, (Fraction(invariant) % 1,))

    @staticmethod
    def declared(exps: tuple[int, ...], field: DeclaredTorsion) -> "BrauerClass":
        return BrauerClass(field, field.reduce(tuple(exps)))

    # -- views -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self == BrauerClass.zero(self.field)

    def invariants(self) -> dict[Place, Fraction]:
        if not isinstance(self.field, Rationals):
            raise CapabilityError("invariant maps exist over Q only")
        return dict(self.data)

    def invariant_at(self, v: Place) -> Fraction:
        return self.invariants().get(v, Fraction(0))

    # -- group law ---------------------------------------------------------

    def __add__(self, other: "BrauerClass") -> "BrauerClass":
        if self.field != other.field:
            raise DomainError(
                f"backend mismatch: {self.field} vs {other.field}"
            )
        if isinstance(self.field, Rationals):
            inv = dict(self.data)
            for place, value in other.data:
                inv[place] = (inv.get(place, Fraction(0)) + value) % 1
            return BrauerClass(
                self.field,
                tuple(sorted(((p, f) for p, f in inv.items() if f), key=lambda t: t[0])),
            )
        if isinstance(self.field, (Reals, PAdics)):
            return BrauerClass(self.field, ((self.data[0] + other.data[0]) % 1,))
        if isinstance(self.field, GaloisField):
            return self
        return BrauerClass(
            self.field,
            self.field.reduce(tuple(x + y for x, y in zip(self.data, other.data))),
        )

    def __neg__(self) -> "BrauerClass":
        return self.scale(-1)

    def __sub__(self, other: "BrauerClass") -> "BrauerClass":
        return self + (-other)

    def scale(self, n: int) -> "BrauerClass":
        """n-fold sum of the class (tensor power at the class level)."""
        if isinstance(self.field, Rationals):
            return BrauerClass(
                self.field,
                tuple(
                    (place, frac)
                    for place, value in self.data
                    if (frac := (n * value) % 1)
                ),
            )
        if isinstance(self.field, (Reals, PAdics)):
            return BrauerClass(self.field, ((n * self.data[0]) % 1,))
        if isinstance(self.field, GaloisField):
            return self
        return BrauerClass(
            self.field, self.field.reduce(tuple(n * x for x in self.data))
        )

    def order(self) -> int:
        """The order of the class in Br(k) (= the period of any algebra in it)."""
        if isinstance(self.field, Rationals):
            out = 1
            for _, value in self.data:
                out = out * value.denominator // gcd(out, value.denominator)
            return out
        if isinstance(self.field, (Reals, PAdics)):
            return self.data[0].denominator
        if isinstance(self.field, GaloisField):
            return 1
        return self.field.element_order(self.data)

    def index(self) -> int:
        """The Schur index of the class (declared over torsion backends)."""
        if isinstance(self.field, DeclaredTorsion):
            return self.field.index_of(self.data)
        return self.field.index_of_order(self.order())

    def p_part(self, p: int) -> "BrauerClass":
        """The component of the class in the p-primary part of Br(k)."""
        from .fields import _is_prime

        if not _is_prime(p):
            raise DomainError(f"{p} is not prime")
        n = self.order()
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        if k == 0:
            return BrauerClass.zero(self.field)
        # m * (m^-1 mod p^k) is 1 mod p^k and 0 mod m, so scaling by it
        # projects onto the p-primary component.
        return self.scale(n * pow(n, -1, p**k))

    def primary_parts(self) -> dict[int, "BrauerClass"]:
        return {p: self.p_part(p) for p in prime_factors(self.order())}

    def sort_token(self) -> tuple:
        return (str(self.field), self.data)

    def __str__(self) -> str:
        if isinstance(self.field, Rationals):
            if not self.data:
                return "0"
            return "{" + ", ".join(f"{p}:{f}" for p, f in self.data) + "}"
        if isinstance(self.field, (Reals, PAdics)):
            return str(self.data[0])
        if isinstance(self.field, GaloisField):
            return "0"
        return "(" + ",".join(map(str, self.data)) + ")"


def quaternion_class(
    a: SquareClass | int, b: SquareClass | int, field: Field = Rationals()
) -> BrauerClass:
    """The Brauer class of the quaternion algebra (a,b) over Q or R."""
    if isinstance(field, Reals):
        a_rep = a.rep if isinstance(a, SquareClass) else int(a)
        b_rep = b.rep if isinstance(b, SquareClass) else int(b)
        if a_rep == 0 or b_rep == 0:
            raise DomainError("quaternion parameters must be nonzero")
        return BrauerClass.real(a_rep < 0 and b_rep < 0)
    if not isinstance(field, Rationals):
        raise CapabilityError(f"no quaternion constructor over {field}")
    a = square_class(a, field) if not isinstance(a, SquareClass) else a
    b = square_class(b, field) if not isinstance(b, SquareClass) else b
    places = {REAL_PLACE, finite_place(2)}
    for p in odd_prime_factors(a.rep) + odd_prime_factors(b.rep):
        places.add(finite_place(p))
    ramified = [v for v in places if hilbert_symbol(a, b, v) == -1]
    assert len(ramified) % 2 == 0, "Hilbert product formula violated"
    return BrauerClass.from_invariants({v: HALF for v in ramified}, field)
