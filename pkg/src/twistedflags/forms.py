"""Diagonal quadratic forms, Clifford invariants, isometry and isotropy.

The even Clifford algebra of an odd-dimensional form is central simple and
its Brauer class is computed here by the classical peeling identities
(Lam, "Introduction to Quadratic Forms over Fields", ch. V):

    C0(<a> | rest)      =  C(-a * rest)
    C(<u,v> | rest)     =  (u,v) (x) C(-uv * rest)
    C(<u,v>)            =  the quaternion algebra (u,v)
    delta(<u,v>)        =  -uv

where | is the orthogonal sum, * rescales every coefficient, and delta is
the signed discriminant (-1)^(n(n-1)/2) det.  For an even-dimensional form
with trivial discriminant the even Clifford algebra splits into two
isomorphic central simple factors; their common class is obtained by
reducing to the odd-dimensional case.

Isometry and isotropy over Q follow the local-global analysis of Serre,
"A Course in Arithmetic", ch. IV.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .brauer import BrauerClass, hilbert_symbol, quaternion_class, _legendre
from .fields import (
    CapabilityError,
    DomainError,
    Field,
    Place,
    Rationals,
    REAL_PLACE,
    SquareClass,
    finite_place,
    odd_prime_factors,
    square_class,
)


@dataclass(frozen=True)
class QuadraticForm:
    """A nondegenerate diagonal quadratic form over a square-class field."""

    coefficients: tuple[SquareClass, ...]
    field: Field

    def __post_init__(self) -> None:
        if not self.field.supports_square_classes:
            raise CapabilityError(f"no quadratic forms over {self.field}")
        if not self.coefficients:
            raise DomainError("forms must have dimension >= 1")
        if any(c.field != self.field for c in self.coefficients):
            raise DomainError("coefficients live over different fields")

    @property
    def dim(self) -> int:
        return len(self.coefficients)

    def reps(self) -> tuple[int, ...]:
        return tuple(c.rep for c in self.coefficients)

    def __str__(self) -> str:
        return "<" + ",".join(str(c) for c in self.coefficients) + ">"


def form(coeffs: list[int] | tuple[int, ...], field: Field = Rationals()) -> QuadraticForm:
    """Build a diagonal form from integer coefficients (square-class reduced)."""
    return QuadraticForm(tuple(square_class(c, field) for c in coeffs), field)


def scale(a: SquareClass | int, q: QuadraticForm) -> QuadraticForm:
    a = square_class(a, q.field) if not isinstance(a, SquareClass) else a
    return QuadraticForm(tuple(a * c for c in q.coefficients), q.field)


def orthogonal_sum(q1: QuadraticForm, q2: QuadraticForm) -> QuadraticForm:
    if q1.field != q2.field:
        raise DomainError("orthogonal sum across different fields")
    return QuadraticForm(q1.coefficients + q2.coefficients, q1.field)


def albert_form(
    a1: int, b1: int, a2: int, b2: int, field: Field = Rationals()
) -> QuadraticForm:
    """The 6-dimensional trivial-discriminant form attached to a biquaternion.

    <a1, b1, -a1*b1, -a2, -b2, a2*b2> is anisotropic exactly when the
    biquaternion algebra (a1,b1) (x) (a2,b2) is division.
    """
    return form([a1, b1, -a1 * b1, -a2, -b2, a2 * b2], field)


def determinant(q: QuadraticForm) -> SquareClass:
    return reduce(lambda x, y: x * y, q.coefficients)


def discriminant(q: QuadraticForm) -> SquareClass:
    """The signed determinant (-1)^(n(n-1)/2) det(q) as a square class."""
    n = q.dim
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return square_class(sign, q.field) * determinant(q)


def has_trivial_discriminant(q: QuadraticForm) -> bool:
    return discriminant(q).is_one


def full_clifford_class(q: QuadraticForm | None, field: Field) -> BrauerClass:
    """The Brauer class of the full Clifford algebra of an even-dim form."""
    if q is None or q.dim == 0:
        return BrauerClass.zero(field)
    if q.dim % 2:
        raise DomainError("the full Clifford algebra of an odd-dim form is not central")
    u, v = q.coefficients[0], q.coefficients[1]
    out = quaternion_class(u, v, field)
    rest = q.coefficients[2:]
    if not rest:
        return out
    minus_uv = square_class(-1, field) * u * v
    return out + full_clifford_class(
        QuadraticForm(tuple(minus_uv * c for c in rest), field), field
    )


def even_clifford_class(q: QuadraticForm) -> BrauerClass:
    """The Brauer class of the even Clifford algebra of an odd-dim form.

    Always 2-torsion.  Invariant under scaling the form.
    """
    if q.dim % 2 == 0:
        raise DomainError("even-dimensional form: use even_clifford_half_class")
    a1 = q.coefficients[0]
    rest = q.coefficients[1:]
    if not rest:
        return BrauerClass.zero(q.field)
    minus_a1 = square_class(-1, q.field) * a1
    return full_clifford_class(
        QuadraticForm(tuple(minus_a1 * c for c in rest), q.field), q.field
    )


def even_clifford_half_class(q: QuadraticForm) -> BrauerClass:
    """The common Brauer class of the two even Clifford factors.

    Requires even dimension and trivial discriminant, which is exactly
    when the even Clifford algebra splits as a product of two isomorphic
    central simple algebras.
    """
    if q.dim % 2:
        raise DomainError("odd-dimensional form: use even_clifford_class")
    if not has_trivial_discriminant(q):
        raise DomainError("the even Clifford algebra only splits for trivial discriminant")
    a1 = q.coefficients[0]
    minus_a1 = square_class(-1, q.field) * a1
    reduced = QuadraticForm(tuple(minus_a1 * c for c in q.coefficients[1:]), q.field)
    return even_clifford_class(reduced)


def odd_form_with_clifford_class(
    pairs: list[tuple[int, int]], field: Field = Rationals()
) -> QuadraticForm:
    """A trivial-discriminant form of dimension 2r+1 whose even Clifford
    class is the sum of the quaternion classes (a_i, b_i).

    Construction: start from <a1, b1, -a1*b1> and append each <a_j, b_j>
    rescaled so that the peeling identity contributes exactly (a_j, b_j);
    a final rescale by the accumulated discriminant makes the discriminant
    trivial without changing the even Clifford class (odd dimension).
    """
    if not pairs:
        raise DomainError("at least one quaternion pair is required")
    if not field.supports_square_classes:
        raise CapabilityError(f"no quadratic forms over {field}")
    (a1, b1), rest = pairs[0], pairs[1:]
    coeffs = [a1, b1, -a1 * b1]
    for j, (aj, bj) in enumerate(rest, start=2):
        lam = -1 if j % 2 == 0 else 1
        for ai, bi in pairs[1 : j - 1]:
            lam *= ai * bi
        coeffs.extend([lam * aj, lam * bj])
    q = form(coeffs, field)
    return scale(discriminant(q), q)


# ---------------------------------------------------------------------------
# Similarity deciders


def similar_dim3(q: QuadraticForm, q2: QuadraticForm) -> bool:
    """Similarity of 3-dimensional forms via their even Clifford classes.

    q |-> C0(q) is a bijection between similarity classes of dimension-3
    forms and quaternion algebras, so class equality decides similarity.
    """
    if q.dim != 3 or q2.dim != 3:
        raise DomainError("both forms must have dimension 3")
    if q.field != q2.field:
        raise DomainError("forms live over different fields")
    return even_clifford_class(q) == even_clifford_class(q2)


def similar_dim6(q: QuadraticForm, q2: QuadraticForm) -> bool:
    """Similarity of 6-dimensional trivial-discriminant forms.

    Such forms correspond to biquaternion algebras through the half even
    Clifford algebra; degree-4 period-2 algebras with equal class are
    isomorphic, so class equality decides similarity.
    """
    if q.dim != 6 or q2.dim != 6:
        raise DomainError("both forms must have dimension 6")
    if not (has_trivial_discriminant(q) and has_trivial_discriminant(q2)):
        raise DomainError("both forms must have trivial discriminant")
    if q.field != q2.field:
        raise DomainError("forms live over different fields")
    return even_clifford_half_class(q) == even_clifford_half_class(q2)


# ---------------------------------------------------------------------------
# Isometry and isotropy over Q


def signature(q: QuadraticForm) -> tuple[int, int]:
    pos = sum(1 for c in q.coefficients if c.rep > 0)
    return pos, q.dim - pos


def hasse_class(q: QuadraticForm) -> BrauerClass:
    """The Hasse invariant as a global 2-torsion Brauer class."""
    out = BrauerClass.zero(q.field)
    for i in range(q.dim):
        for j in range(i + 1, q.dim):
            out = out + quaternion_class(
                q.coefficients[i], q.coefficients[j], q.field
            )
    return out


def isometric_over_Q(q: QuadraticForm, q2: QuadraticForm) -> bool:
    """Isometry over Q: equal dimension, discriminant, signature and
    Hasse invariants (local-global principle for quadratic forms)."""
    if not isinstance(q.field, Rationals) or not isinstance(q2.field, Rationals):
        raise CapabilityError("isometry decision implemented over Q only")
    return (
        q.dim == q2.dim
        and discriminant(q) == discriminant(q2)
        and signature(q) == signature(q2)
        and hasse_class(q) == hasse_class(q2)
    )


def _local_hasse_symbol(q: QuadraticForm, v: Place) -> int:
    out = 1
    for i in range(q.dim):
        for j in range(i + 1, q.dim):
            out *= hilbert_symbol(q.coefficients[i], q.coefficients[j], v)
    return out


def _is_local_square(n: int, v: Place) -> bool:
    """Whether the square-free integer n is a square in the completion at v."""
    if v.is_real:
        return n > 0
    p = v.p
    k = 0
    u = n
    while u % p == 0:
        u //= p
        k += 1
    if k % 2:
        return False
    if p == 2:
        return u % 8 == 1
    return _legendre(u % p, p) == 1


def _locally_isotropic(q: QuadraticForm, v: Place) -> bool:
    """Isotropy over the completion at v (Serre, ch. IV, thm. 6)."""
    n = q.dim
    if v.is_real:
        pos, neg = signature(q)
        return pos > 0 and neg > 0
    if n == 1:
        return False
    d = determinant(q).rep
    if n == 2:
        return _is_local_square(squarefree(-d), v)
    if n == 3:
        return hilbert_symbol(-1, -d, v) == _local_hasse_symbol(q, v)
    if n == 4:
        if not _is_local_square(d, v):
            return True
        return _local_hasse_symbol(q, v) == hilbert_symbol(-1, -1, v)
    return True


def squarefree(n: int) -> int:
    return square_class(n).rep


def anisotropic_over_Q(q: QuadraticForm) -> bool:
    """Whether q has no nontrivial rational zero.

    By the Hasse-Minkowski theorem this reduces to local checks: at the
    real place, at 2, and at the odd primes dividing some coefficient
    (everywhere else forms of dimension >= 2 in the relevant cases are
    automatically isotropic).
    """
    if not isinstance(q.field, Rationals):
        raise CapabilityError("isotropy decision implemented over Q only")
    n = q.dim
    if n == 1:
        return True
    if n == 2:
        return not square_class(-determinant(q).rep).is_one
    if n >= 5:
        pos, neg = signature(q)
        return pos == 0 or neg == 0
    places = [REAL_PLACE, finite_place(2)]
    odd_primes: set[int] = set()
    for c in q.coefficients:
        odd_primes.update(odd_prime_factors(c.rep))
    places.extend(finite_place(p) for p in sorted(odd_primes))
    return any(not _locally_isotropic(q, v) for v in places)
