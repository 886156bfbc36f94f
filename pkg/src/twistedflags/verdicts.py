"""Decision procedures: structured verdicts for the classification results.

Each comparison computes the class-sum measure of both inputs and derives
what can be soundly concluded about isomorphism, birationality and stable
birationality.  Conclusions are tri-state: a "yes"/"no" is only emitted
when a known implication justifies it, otherwise "unknown".  The applied
implications are recorded in the verdict's ``chain``.

Output invariants (enforced at construction):

    isomorphic = yes  =>  birational = yes  =>  stably birational = yes
                      =>  measures equal;
    measures unequal  =>  isomorphic = no.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .algebras import CSA, same_cyclic_subgroup, subgroup_generated
from .brauer import BrauerClass, quaternion_class
from .fields import DomainError, Field, Rationals, Reals
from .forms import (
    QuadraticForm,
    albert_form,
    anisotropic_over_Q,
    even_clifford_class,
    even_clifford_half_class,
    signature,
)
from .varieties import (
    Grassmannian,
    InvolutionVariety,
    Product,
    Quadric,
    QuaternionProjective,
    SeveriBrauer,
)


class Tri(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Verdict:
    measure_equal: bool
    count_equal: bool
    subgroup_equal: bool | None
    isomorphic: Tri
    birational: Tri
    stably_birational: Tri
    chain: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.isomorphic is Tri.YES and self.birational is not Tri.YES:
            raise DomainError("isomorphic varieties are birational")
        if self.birational is Tri.YES and self.stably_birational is not Tri.YES:
            raise DomainError("birational varieties are stably birational")
        if self.stably_birational is Tri.YES and not self.measure_equal:
            raise DomainError("a yes-verdict requires equal measures")
        if not self.measure_equal and self.isomorphic is not Tri.NO:
            raise DomainError("unequal measures rule out isomorphism")
        if self.measure_equal and not self.count_equal:
            raise DomainError("equal measures force equal counts")


def _require_same_field(f1: Field, f2: Field) -> None:
    if f1 != f2:
        raise DomainError(f"backend mismatch: {f1} vs {f2}")


# ---------------------------------------------------------------------------
# Severi-Brauer varieties


def compare_severi_brauer(A: CSA, A2: CSA) -> Verdict:
    """Compare SB(A) and SB(A'): measure equality amounts to equal degree
    plus equal cyclic class subgroups; small periods upgrade it to
    birationality, and class equality to an isomorphism."""
    _require_same_field(A.field, A2.field)
    chain = []
    count_equal = A.degree == A2.degree
    subgroup_equal = same_cyclic_subgroup(A, A2)
    measure_equal = SeveriBrauer(A).measure() == SeveriBrauer(A2).measure()
    assert measure_equal == (count_equal and subgroup_equal)
    chain.append(
        "measure equality <=> equal degree and equal cyclic class subgroup"
    )

    if not measure_equal:
        iso = Tri.NO
        chain.append("unequal measures: the varieties are not isomorphic")
        if not count_equal:
            bir = Tri.NO
            chain.append("unequal degrees: unequal dimensions, not birational")
        else:
            bir = Tri.NO
            chain.append(
                "the function field of SB(A) splits exactly <[A]> (Amitsur), "
                "so birational varieties share the subgroup"
            )
        stably = Tri.UNKNOWN if (subgroup_equal and not count_equal) else Tri.NO
        if stably is Tri.NO:
            chain.append(
                "stably birational Severi-Brauer varieties share the split "
                "subgroup of Br(k) (Amitsur over rational extensions)"
            )
        else:
            chain.append(
                "equal subgroups with different degrees: stable birationality "
                "is left undecided"
            )
        return Verdict(False, count_equal, subgroup_equal, iso, bir, stably, tuple(chain))

    stably = Tri.YES
    chain.append(
        "equal degree and subgroup imply stably birational varieties"
    )
    if A.brclass == A2.brclass:
        iso = bir = Tri.YES
        chain.append(
            "equal Brauer class and degree determine the algebra, hence the variety"
        )
    else:
        iso = Tri.UNKNOWN
        per = A.period
        if per in (2, 3, 4, 6) or (per == 5 and A.degree % 2 == 0):
            bir = Tri.YES
            chain.append(
                "generator-swapped classes of period 2,3,4,6 (or 5 with even "
                "degree) give birational varieties (Roquette, Tregub)"
            )
        else:
            bir = Tri.UNKNOWN
            chain.append(
                "birationality beyond the small-period cases is an open conjecture"
            )
    return Verdict(True, True, True, iso, bir, stably, tuple(chain))


# ---------------------------------------------------------------------------
# Twisted Grassmannians


def compare_grassmannians(g1: Grassmannian, g2: Grassmannian) -> Verdict:
    _require_same_field(g1.field, g2.field)
    chain = []
    count_equal = g1.cell_count() == g2.cell_count()
    subgroup_equal = same_cyclic_subgroup(g1.A, g2.A)
    measure_equal = g1.measure() == g2.measure()
    d_compatible = g1.A.degree == g2.A.degree and g2.d in (
        g1.d,
        g1.A.degree - g1.d,
    )
    cond = d_compatible and subgroup_equal
    chain.append(
        "measure equality <=> equal degree, d' in {d, deg-d}, equal subgroup "
        "(Gaussian binomial symmetry)"
    )
    dims_equal = g1.variety_dim() == g2.variety_dim()

    if not measure_equal:
        chain.append("unequal measures: not isomorphic")
        bir = Tri.NO if not dims_equal else Tri.UNKNOWN
        if bir is Tri.NO:
            chain.append("unequal dimensions: not birational")
        return Verdict(
            False, count_equal, subgroup_equal, Tri.NO, bir, Tri.UNKNOWN, tuple(chain)
        )

    if not dims_equal:
        chain.append("equal measures but unequal dimensions (split coincidence)")
        return Verdict(
            True, count_equal, subgroup_equal, Tri.NO, Tri.NO, Tri.UNKNOWN, tuple(chain)
        )

    if cond and g1.A.period <= 2 and g2.A.period <= 2:
        chain.append(
            "period <= 2: class and degree determine the algebra; Gr(d;A) and "
            "Gr(deg-d;A) are canonically isomorphic"
        )
        return Verdict(
            True, count_equal, subgroup_equal, Tri.YES, Tri.YES, Tri.YES, tuple(chain)
        )
    chain.append("isomorphism is undecided beyond period 2")
    return Verdict(
        True, count_equal, subgroup_equal, Tri.UNKNOWN, Tri.UNKNOWN, Tri.UNKNOWN, tuple(chain)
    )


# ---------------------------------------------------------------------------
# Quadrics


def _clifford_of(q: QuadraticForm) -> BrauerClass:
    if q.dim % 2:
        return even_clifford_class(q)
    return even_clifford_half_class(q)


def compare_quadrics(q: QuadraticForm, q2: QuadraticForm) -> Verdict:
    """Compare the smooth quadrics of q and q': measure equality amounts to
    equal dimension plus equal even Clifford classes; dimensions 3 and 6
    upgrade it to an isomorphism (similarity of the forms)."""
    v1, v2 = Quadric(q), Quadric(q2)
    _require_same_field(q.field, q2.field)
    chain = []
    count_equal = v1.cell_count() == v2.cell_count()
    c1, c2 = _clifford_of(q), _clifford_of(q2)
    subgroup_equal = subgroup_generated([c1], q.field) == subgroup_generated(
        [c2], q2.field
    )
    measure_equal = v1.measure() == v2.measure()
    cond = q.dim == q2.dim and c1 == c2
    chain.append(
        "measure equality <=> equal dimension and equal even Clifford class"
    )

    if not measure_equal:
        chain.append("unequal measures: not isomorphic")
        bir = Tri.NO if q.dim != q2.dim else Tri.UNKNOWN
        if bir is Tri.NO:
            chain.append("unequal dimensions: not birational")
        else:
            chain.append(
                "isotropic quadrics of equal dimension are all birational, so "
                "no negative birationality conclusion is available"
            )
        return Verdict(
            False, count_equal, subgroup_equal, Tri.NO, bir, Tri.UNKNOWN, tuple(chain)
        )

    if q.dim != q2.dim:
        chain.append("equal measures but unequal dimensions (split coincidence)")
        return Verdict(
            True, count_equal, subgroup_equal, Tri.NO, Tri.NO, Tri.UNKNOWN, tuple(chain)
        )

    if cond and q.dim in (3, 6):
        chain.append(
            "dimension 3 resp. 6: the even Clifford class classifies the form "
            "up to similarity, and similar forms have isomorphic quadrics"
        )
        return Verdict(
            True, count_equal, subgroup_equal, Tri.YES, Tri.YES, Tri.YES, tuple(chain)
        )
    chain.append("isomorphism is undecided outside dimensions 3 and 6")
    return Verdict(
        True, count_equal, subgroup_equal, Tri.UNKNOWN, Tri.UNKNOWN, Tri.UNKNOWN, tuple(chain)
    )


# ---------------------------------------------------------------------------
# Quaternionic projective spaces


def compare_quaternion_projective(A: CSA, A2: CSA) -> Verdict:
    v1, v2 = QuaternionProjective(A), QuaternionProjective(A2)
    _require_same_field(A.field, A2.field)
    chain = ["measure equality <=> equal degree and equal Brauer class"]
    count_equal = v1.cell_count() == v2.cell_count()
    subgroup_equal = same_cyclic_subgroup(A, A2)
    measure_equal = v1.measure() == v2.measure()

    if not measure_equal:
        chain.append("unequal measures: not isomorphic")
        bir = Tri.NO if not count_equal else Tri.UNKNOWN
        if bir is Tri.NO:
            chain.append("unequal degrees: unequal dimensions, not birational")
        return Verdict(
            False, count_equal, subgroup_equal, Tri.NO, bir, Tri.UNKNOWN, tuple(chain)
        )
    chain.append(
        "equal measures determine the algebra but not the symplectic "
        "involution: isomorphism stays undecided"
    )
    return Verdict(
        True, count_equal, subgroup_equal, Tri.UNKNOWN, Tri.UNKNOWN, Tri.UNKNOWN, tuple(chain)
    )


# ---------------------------------------------------------------------------
# Involution varieties


def compare_involution(v1: InvolutionVariety, v2: InvolutionVariety) -> Verdict:
    _require_same_field(v1.field, v2.field)
    chain = []
    count_equal = v1.cell_count() == v2.cell_count()
    measure_equal = v1.measure() == v2.measure()
    subgroup_equal = (
        v1.measure().positive_subgroup() == v2.measure().positive_subgroup()
    )
    deg = v1.A.degree
    deg_equal = deg == v2.A.degree
    straight = v1.c_plus == v2.c_plus and v1.c_minus == v2.c_minus
    swapped = v1.c_plus == v2.c_minus and v1.c_minus == v2.c_plus
    cond = deg_equal and (straight or swapped)
    chain.append(
        "Clifford data matching allows the +/- swap of the two factors"
    )

    if not measure_equal:
        chain.append("unequal measures: not isomorphic")
        bir = Tri.NO if not deg_equal else Tri.UNKNOWN
        if bir is Tri.NO:
            chain.append("unequal degrees: unequal dimensions, not birational")
        return Verdict(
            False, count_equal, subgroup_equal, Tri.NO, bir, Tri.UNKNOWN, tuple(chain)
        )

    division = deg == 4 and (v1.A.index == 4 or v2.A.index == 4)
    if deg_equal and (deg != 4 or division) and not cond:
        # Equal measures force matching Clifford data away from the
        # non-division degree-4 case.
        raise AssertionError("measure equality must match the Clifford data here")

    if cond and deg in (4, 6):
        chain.append(
            "degree 4 resp. 6: matching Clifford data determines the algebra "
            "with involution, hence the variety"
        )
        return Verdict(
            True, count_equal, subgroup_equal, Tri.YES, Tri.YES, Tri.YES, tuple(chain)
        )
    if not cond:
        chain.append(
            "degree-4 non-division data: the Clifford pair is not determined "
            "by the measure; isomorphism stays undecided"
        )
    else:
        chain.append("isomorphism is undecided outside degrees 4 and 6")
    return Verdict(
        True, count_equal, subgroup_equal, Tri.UNKNOWN, Tri.UNKNOWN, Tri.UNKNOWN, tuple(chain)
    )


# ---------------------------------------------------------------------------
# Products of two dimension-6 quadrics


def compare_quadric_products(
    q: QuadraticForm, q2: QuadraticForm, q3: QuadraticForm, q4: QuadraticForm
) -> Verdict:
    """For products of two dimension-6 trivial-discriminant quadrics,
    measure equality is equivalent to an isomorphism of the products."""
    for f in (q, q2, q3, q4):
        if f.dim != 6:
            raise DomainError("all four forms must have dimension 6")
    left = Product((Quadric(q), Quadric(q2)))
    right = Product((Quadric(q3), Quadric(q4)))
    _require_same_field(left.field, right.field)
    c1, c2 = even_clifford_half_class(q), even_clifford_half_class(q2)
    c3, c4 = even_clifford_half_class(q3), even_clifford_half_class(q4)
    multiset_match = sorted([c1.sort_token(), c2.sort_token()]) == sorted(
        [c3.sort_token(), c4.sort_token()]
    )
    measure_equal = left.measure() == right.measure()
    assert measure_equal == multiset_match
    subgroup_equal = (
        left.measure().positive_subgroup() == right.measure().positive_subgroup()
    )
    chain = [
        "product measure equality <=> the biquaternion Clifford classes "
        "match as an unordered pair",
    ]
    if measure_equal:
        chain.append(
            "matching Clifford pairs give factorwise isomorphic quadrics, "
            "hence isomorphic products"
        )
        return Verdict(True, True, subgroup_equal, Tri.YES, Tri.YES, Tri.YES, tuple(chain))
    chain.append("unequal measures: the products are not isomorphic")
    return Verdict(
        False, True, subgroup_equal, Tri.NO, Tri.UNKNOWN, Tri.UNKNOWN, tuple(chain)
    )


# ---------------------------------------------------------------------------
# Products of two Severi-Brauer varieties (period 2)


def compare_sb_products(A: CSA, A2: CSA, A3: CSA, A4: CSA) -> Verdict:
    """Products SB(A) x SB(A') vs SB(A'') x SB(A''') of period <= 2 factors
    with matching degrees within each product: equal measures force one
    factor of the first product to be isomorphic to one of the second."""
    for B in (A, A2, A3, A4):
        if B.period > 2:
            raise DomainError("all factors must have period <= 2")
    if A.degree != A2.degree or A3.degree != A4.degree:
        raise DomainError("degrees must agree within each product")
    _require_same_field(A.field, A3.field)
    left = Product((SeveriBrauer(A), SeveriBrauer(A2)))
    right = Product((SeveriBrauer(A3), SeveriBrauer(A4)))
    count_equal = left.cell_count() == right.cell_count()
    measure_equal = left.measure() == right.measure()
    subgroup_equal = subgroup_generated(
        [A.brclass, A2.brclass], A.field
    ) == subgroup_generated([A3.brclass, A4.brclass], A3.field)
    chain = []
    if not measure_equal:
        chain.append("unequal product measures: the products are not isomorphic")
        return Verdict(
            False, count_equal, subgroup_equal, Tri.NO, Tri.UNKNOWN, Tri.UNKNOWN, tuple(chain)
        )

    # All four degrees agree once the products match.
    if A.brclass == A3.brclass:
        chain.append("left factor 1 is isomorphic to right factor 1")
    elif A.brclass == A4.brclass:
        chain.append("left factor 1 is isomorphic to right factor 2")
    else:
        assert A.brclass == A3.brclass + A4.brclass
        which = "1" if A2.brclass == A3.brclass else "2"
        assert A2.brclass in (A3.brclass, A4.brclass)
        chain.append(
            "left factor 1 matches the tensor of the right factors; left "
            f"factor 2 is isomorphic to right factor {which}"
        )
    pairs_match = sorted([A.brclass.sort_token(), A2.brclass.sort_token()]) == sorted(
        [A3.brclass.sort_token(), A4.brclass.sort_token()]
    )
    if pairs_match:
        chain.append("both factor pairs match: the products are isomorphic")
        return Verdict(True, True, subgroup_equal, Tri.YES, Tri.YES, Tri.YES, tuple(chain))
    chain.append(
        "only one factor is pinned down; the products themselves stay undecided"
    )
    return Verdict(
        True, count_equal, subgroup_equal, Tri.UNKNOWN, Tri.UNKNOWN, Tri.UNKNOWN, tuple(chain)
    )


# ---------------------------------------------------------------------------
# Products of two twisted Grassmannians (period 2)


def compare_gr_products(
    d: int, A: CSA, A2: CSA, d2: int, A3: CSA, A4: CSA
) -> Verdict:
    """Products Gr(d;A) x Gr(d;A') vs Gr(d'';A'') x Gr(d'';A''') with
    period <= 2 factors; the binomial count comparison comes first."""
    for B in (A, A2, A3, A4):
        if B.period > 2:
            raise DomainError("all factors must have period <= 2")
    if A.degree != A2.degree or A3.degree != A4.degree:
        raise DomainError("degrees must agree within each product")
    _require_same_field(A.field, A3.field)
    left = Product((Grassmannian(d, A), Grassmannian(d, A2)))
    right = Product((Grassmannian(d2, A3), Grassmannian(d2, A4)))
    count_equal = left.cell_count() == right.cell_count()
    measure_equal = left.measure() == right.measure()
    subgroup_equal = subgroup_generated(
        [A.brclass, A2.brclass], A.field
    ) == subgroup_generated([A3.brclass, A4.brclass], A3.field)
    chain = ["binomial count check precedes the class comparison"]
    if not measure_equal:
        chain.append("unequal product measures: the products are not isomorphic")
        return Verdict(
            False, count_equal, subgroup_equal, Tri.NO, Tri.UNKNOWN, Tri.UNKNOWN, tuple(chain)
        )
    d_compatible = A.degree == A3.degree and d2 in (d, A.degree - d)
    if A.brclass == A3.brclass:
        chain.append("left factor 1 is isomorphic to right factor 1")
    elif A.brclass == A4.brclass:
        chain.append("left factor 1 is isomorphic to right factor 2")
    else:
        assert A.brclass == A3.brclass + A4.brclass
        which = "1" if A2.brclass == A3.brclass else "2"
        assert A2.brclass in (A3.brclass, A4.brclass)
        chain.append(
            "left factor 1 matches the tensor of the right factors; left "
            f"factor 2 is isomorphic to right factor {which}"
        )
    pairs_match = d_compatible and sorted(
        [A.brclass.sort_token(), A2.brclass.sort_token()]
    ) == sorted([A3.brclass.sort_token(), A4.brclass.sort_token()])
    if pairs_match:
        chain.append("both factor pairs match: the products are isomorphic")
        return Verdict(True, True, subgroup_equal, Tri.YES, Tri.YES, Tri.YES, tuple(chain))
    chain.append(
        "only one factor is pinned down; the products themselves stay undecided"
    )
    return Verdict(
        True, count_equal, subgroup_equal, Tri.UNKNOWN, Tri.UNKNOWN, Tri.UNKNOWN, tuple(chain)
    )


# ---------------------------------------------------------------------------
# Products of two conics


def _albert_anisotropic(
    a1: int, b1: int, a2: int, b2: int, field: Field
) -> bool:
    if isinstance(field, Rationals):
        return anisotropic_over_Q(albert_form(a1, b1, a2, b2, field))
    if isinstance(field, Reals):
        pos, neg = signature(albert_form(a1, b1, a2, b2, field))
        return pos == 0 or neg == 0
    raise DomainError(
        "anisotropy must be declared explicitly over this backend"
    )


def compare_conic_products(
    pair1: tuple[int, int],
    pair2: tuple[int, int],
    pair3: tuple[int, int],
    pair4: tuple[int, int],
    field: Field = Rationals(),
) -> Verdict:
    """Products of two conics C(a1,b1) x C(a2,b2) vs C(a1',b1') x C(a2',b2').

    Birationality is equivalent to equality of the generated subgroups of
    Br(k); when the attached 6-dimensional form is anisotropic (the
    biquaternion algebra is division), equal subgroups give isomorphic
    products."""
    c1 = quaternion_class(pair1[0], pair1[1], field)
    c2 = quaternion_class(pair2[0], pair2[1], field)
    c3 = quaternion_class(pair3[0], pair3[1], field)
    c4 = quaternion_class(pair4[0], pair4[1], field)
    division = _albert_anisotropic(*pair1, *pair2, field)
    return _conic_product_verdict(c1, c2, c3, c4, division)


def compare_conic_products_declared(
    c1: BrauerClass,
    c2: BrauerClass,
    c3: BrauerClass,
    c4: BrauerClass,
    equation_anisotropic: bool,
) -> Verdict:
    """Conic products over a declared torsion backend: the classes of the
    four conics are given directly, and the anisotropy of the attached
    6-dimensional form is a declaration."""
    return _conic_product_verdict(c1, c2, c3, c4, equation_anisotropic)


def _conic_product_verdict(
    c1: BrauerClass, c2: BrauerClass, c3: BrauerClass, c4: BrauerClass, division: bool
) -> Verdict:
    for c in (c1, c2, c3, c4):
        if c.order() > 2:
            raise DomainError("conic classes are 2-torsion")
    _require_same_field(c1.field, c3.field)
    field = c1.field
    from .class_ring import RingElement

    one = RingElement.one(field)
    left = (one + RingElement.of_class(c1)) * (one + RingElement.of_class(c2))
    right = (one + RingElement.of_class(c3)) * (one + RingElement.of_class(c4))
    measure_equal = left == right
    subgroup_equal = subgroup_generated([c1, c2], field) == subgroup_generated(
        [c3, c4], field
    )
    assert measure_equal == subgroup_equal
    chain = [
        "for conic products, measure equality, class equality and subgroup "
        "equality all coincide (Kollar, Hogadi)"
    ]
    if not subgroup_equal:
        chain.append("unequal subgroups: not birational, hence not isomorphic")
        return Verdict(False, True, False, Tri.NO, Tri.NO, Tri.NO, tuple(chain))
    chain.append("equal subgroups: the products are birational")
    if division:
        chain.append(
            "the attached 6-dimensional form is anisotropic (division "
            "biquaternion): birational upgrades to isomorphic"
        )
        return Verdict(True, True, True, Tri.YES, Tri.YES, Tri.YES, tuple(chain))
    chain.append(
        "isotropic attached form: isomorphism of the products stays undecided"
    )
    return Verdict(True, True, True, Tri.UNKNOWN, Tri.YES, Tri.YES, tuple(chain))
