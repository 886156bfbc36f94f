"""The ring of formal Z-combinations of Brauer classes modulo splitting.

Elements are finite Z-linear combinations of Brauer classes [B].  The ring
is the quotient of the group ring Z[Br(k)] by the relations

    [k] + [B (x) C] = [B] + [C]     whenever ind(B) and ind(C) are coprime,

with multiplication induced by the group law of Br(k).  Because period and
index share prime factors, coprimality of indexes is coprimality of the
supports of the class orders, so every class decomposes against its
p-primary parts:

    [B] = sum_p [B_p] - (omega(B) - 1) [k],   omega(B) = #{p : p | ord(B)}.

Iterating this rewrite yields a canonical form: the total coefficient sum
(the augmentation) together with the Z-multiplicity of every nontrivial
p-primary class.  The pair is a complete invariant for equality in the
quotient, which is what ``RingElement.__eq__`` decides.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import subgroup_generated
from .brauer import BrauerClass
from .fields import DomainError, Field, prime_factors


@dataclass(frozen=True)
class CanonicalForm:
    """Augmentation plus multiplicities over nontrivial p-primary classes."""

    augmentation: int
    parts: tuple[tuple[tuple[int, BrauerClass], int], ...]

    def multiplicity(self, p: int, cls: BrauerClass) -> int:
        for (prime, part), mult in self.parts:
            if prime == p and part == cls:
                return mult
        return 0


class RingElement:
    """An element of the quotient ring, kept as a sparse multiplicity map.

    Equality and hashing are semantic: two elements compare equal exactly
    when they agree in the quotient ring.  The raw combination is exposed
    through ``terms``.
    """

    __slots__ = ("field", "terms", "_canonical")

    def __init__(self, field: Field, terms: dict[BrauerClass, int] | None = None):
        clean = {}
        for cls, mult in (terms or {}).items():
            if cls.field != field:
                raise DomainError("class/backend mismatch in ring element")
            if mult:
                clean[cls] = mult
        object.__setattr__(self, "field", field)
        object.__setattr__(
            self,
            "terms",
            tuple(sorted(clean.items(), key=lambda t: t[0].sort_token())),
        )
        object.__setattr__(self, "_canonical", None)

    def __setattr__(self, name, value):  # immutable after construction
        raise AttributeError("ring elements are immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(field: Field) -> "RingElement":
        return RingElement(field, {})

    @staticmethod
    def one(field: Field) -> "RingElement":
        """The multiplicative identity [k]."""
        return RingElement(field, {BrauerClass.zero(field): 1})

    @staticmethod
    def of_class(cls: BrauerClass) -> "RingElement":
        return RingElement(cls.field, {cls: 1})

    @staticmethod
    def combination(pairs: list[tuple[int, BrauerClass]], field: Field) -> "RingElement":
        terms: dict[BrauerClass, int] = {}
        for mult, cls in pairs:
            terms[cls] = terms.get(cls, 0) + mult
        return RingElement(field, terms)

    # -- group-ring arithmetic ---------------------------------------------

    def _check_field(self, other: "RingElement") -> None:
        if self.field != other.field:
            raise DomainError(f"backend mismatch: {self.field} vs {other.field}")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check_field(other)
        terms = dict(self.terms)
        for cls, mult in other.terms:
            terms[cls] = terms.get(cls, 0) + mult
        return RingElement(self.field, terms)

    def __neg__(self) -> "RingElement":
        return RingElement(self.field, {cls: -m for cls, m in self.terms})

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def scaled(self, n: int) -> "RingElement":
        return RingElement(self.field, {cls: n * m for cls, m in self.terms})

    def __rmul__(self, n: int) -> "RingElement":
        if not isinstance(n, int):
            return NotImplemented
        return self.scaled(n)

    def __mul__(self, other: "RingElement") -> "RingElement":
        """Ring product: bilinear extension of [B]*[C] = [B (x) C]."""
        if isinstance(other, int):
            return self.scaled(other)
        self._check_field(other)
        terms: dict[BrauerClass, int] = {}
        for c1, m1 in self.terms:
            for c2, m2 in other.terms:
                key = c1 + c2
                terms[key] = terms.get(key, 0) + m1 * m2
        return RingElement(self.field, terms)

    # -- quotient-ring structure ---------------------------------------------

    def augmentation(self) -> int:
        return sum(m for _, m in self.terms)

    def canonical(self) -> CanonicalForm:
        """The complete equality invariant in the quotient ring."""
        if self._canonical is not None:
            return self._canonical
        primary: dict[tuple[int, BrauerClass], int] = {}
        for cls, mult in self.terms:
            for p in prime_factors(cls.order()):
                key = (p, cls.p_part(p))
                primary[key] = primary.get(key, 0) + mult
        parts = tuple(
            sorted(
                ((key, m) for key, m in primary.items() if m),
                key=lambda t: (t[0][0], t[0][1].sort_token()),
            )
        )
        out = CanonicalForm(self.augmentation(), parts)
        object.__setattr__(self, "_canonical", out)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        self._check_field(other)
        return self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash((self.field, self.canonical()))

    # -- positive cone -------------------------------------------------------

    @property
    def is_positive(self) -> bool:
        return all(m >= 0 for _, m in self.terms)

    def support(self) -> tuple[BrauerClass, ...]:
        return tuple(cls for cls, _ in self.terms)

    def positive_subgroup(self) -> frozenset[BrauerClass]:
        """The subgroup of Br(k) generated by the support of a positive
        element; well-defined on the positive cone of the quotient."""
        if not self.is_positive:
            raise DomainError("negative multiplicity: not in the positive cone")
        return subgroup_generated(list(self.support()), self.field)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for cls, m in self.terms:
            name = "[k]" if cls.is_zero else f"[{cls}]"
            bits.append(f"{m}{name}" if m != 1 else name)
        return " + ".join(bits)
