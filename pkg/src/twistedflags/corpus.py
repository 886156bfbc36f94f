"""Golden regression cases: the worked examples shipped with the library.

Every case checks one exact identity (a measure value, a Clifford class, a
verdict) against its frozen expectation.  ``run_corpus`` returns a report
and is exposed through the command-line interface; the test suite runs the
same cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .algebras import CSA, biquaternion, quaternion, split_csa
from .brauer import BrauerClass, hilbert_symbol, quaternion_class
from .class_ring import RingElement
from .fields import DeclaredTorsion, Rationals, Reals, REAL_PLACE, finite_place
from .forms import (
    albert_form,
    discriminant,
    even_clifford_class,
    even_clifford_half_class,
    form,
    odd_form_with_clifford_class,
)
from .varieties import (
    Grassmannian,
    Product,
    Quadric,
    QuaternionProjective,
    SeveriBrauer,
    involution_from_biquaternion,
    involution_from_form,
)
from .verdicts import (
    Tri,
    compare_conic_products,
    compare_conic_products_declared,
    compare_quadric_products,
    compare_quadrics,
    compare_severi_brauer,
)

Q = Rationals()
R = Reals()


@dataclass(frozen=True)
class CorpusCase:
    case_id: str
    description: str
    check: Callable[[], tuple[bool, str]]


def _case(case_id: str, description: str):
    def wrap(fn):
        _CASES.append(CorpusCase(case_id, description, fn))
        return fn

    return wrap


_CASES: list[CorpusCase] = []


@_case("hilbert-real", "the real Hilbert symbol (-1,-1) is -1")
def _hilbert_real():
    got = hilbert_symbol(-1, -1, REAL_PLACE)
    return got == -1, f"(-1,-1)_oo = {got}"


@_case("hilbert-local-3", "(-1,3) ramifies at 3 and at 2")
def _hilbert_local():
    got = (hilbert_symbol(-1, 3, finite_place(3)), hilbert_symbol(-1, 3, finite_place(2)))
    return got == (-1, -1), f"symbols at (3, 2) = {got}"


@_case("real-quaternions", "the quaternions are the only division algebra over R")
def _real_quaternions():
    A = quaternion(-1, -1, R)
    ok = (not A.is_split) and A.index == 2
    return ok, f"class {A.brclass}, index {A.index}"


@_case("albert-discriminant", "Albert forms have trivial discriminant")
def _albert_disc():
    d = discriminant(albert_form(2, 3, -5, 7, Q))
    return d.is_one, f"disc = {d}"


@_case("clifford-dim3", "C0(<a,b,-ab>) has the class of (a,b), for (-1,3)")
def _clifford_dim3():
    got = even_clifford_class(form([-1, 3, 3]))
    want = quaternion_class(-1, 3)
    return got == want, f"{got} vs {want}"


@_case("clifford-albert", "the half even Clifford class of an Albert form is the biquaternion class")
def _clifford_albert():
    got = even_clifford_half_class(albert_form(1, 1, -1, 3, Q))
    want = biquaternion(1, 1, -1, 3, Q).brclass
    return got == want, f"{got} vs {want}"


@_case("odd-form-r1", "the rank-1 construction returns <a,b,-ab>")
def _odd_form_r1():
    q = odd_form_with_clifford_class([(-1, 3)], Q)
    ok = q.reps() == (-1, 3, 3) and even_clifford_class(q) == quaternion_class(-1, 3)
    return ok, f"form {q}"


@_case("ring-relation", "[k]+[B(x)C] = [B]+[C] for coprime-index B, C")
def _ring_relation():
    B = quaternion_class(-1, 3)
    C = BrauerClass.from_invariants(
        {finite_place(3): Fraction(1, 3), finite_place(5): Fraction(2, 3)}
    )
    lhs = RingElement.one(Q) + RingElement.of_class(B + C)
    rhs = RingElement.of_class(B) + RingElement.of_class(C)
    return lhs == rhs, f"both sides reduce to {lhs}"


@_case("ring-relation-noncoprime", "the relation fails for equal period-2 classes")
def _ring_relation_noncoprime():
    B = quaternion_class(-1, 3)
    lhs = RingElement.one(Q) + RingElement.of_class(B + B)
    rhs = RingElement.of_class(B).scaled(2)
    return lhs != rhs, "multiplicity 2 vs 0 at the class"


@_case("measure-sb-conic", "mu(SB((-1,3))) = [k] + [(-1,3)] with count 2")
def _measure_sb():
    v = SeveriBrauer(quaternion(-1, 3))
    want = RingElement.one(Q) + RingElement.of_class(quaternion_class(-1, 3))
    got = v.measure()
    return got == want and v.cell_count() == 2, f"{got}"


@_case("measure-counts", "counts: SB deg 5 -> 5, quadric dim 6 -> 6, HP deg 6 -> 3")
def _measure_counts():
    c1 = SeveriBrauer(split_csa(5, Q)).cell_count()
    c2 = Quadric(albert_form(1, 1, -1, 3, Q)).cell_count()
    c3 = QuaternionProjective(CSA(quaternion_class(-1, 3), 6)).cell_count()
    return (c1, c2, c3) == (5, 6, 3), f"counts {(c1, c2, c3)}"


@_case("measure-quadric-albert", "mu(Q) = 4[k] + 2[(-1,3)] for the Albert form of (1,1,-1,3)")
def _measure_quadric():
    got = Quadric(albert_form(1, 1, -1, 3, Q)).measure()
    want = RingElement.one(Q).scaled(4) + RingElement.of_class(
        quaternion_class(-1, 3)
    ).scaled(2)
    return got == want, f"{got}"


@_case("measure-quadric-product", "mu(QxQ') = 16[k] + 8[c] + 8[c'] + 4[c+c']")
def _measure_quadric_product():
    qv = Quadric(albert_form(1, 1, -1, 3, Q))
    qv2 = Quadric(albert_form(1, 1, -1, 7, Q))
    c, c2 = quaternion_class(-1, 3), quaternion_class(-1, 7)
    want = (
        RingElement.one(Q).scaled(16)
        + RingElement.of_class(c).scaled(8)
        + RingElement.of_class(c2).scaled(8)
        + RingElement.of_class(c + c2).scaled(4)
    )
    got = Product((qv, qv2)).measure()
    return got == want, f"{got}"


@_case("measure-grassmannian", "mu(Gr(2;A)) = 4[k] + 2[A] for deg-4 period-2 A")
def _measure_gr():
    A = CSA(quaternion_class(-1, 3), 4)
    got = Grassmannian(2, A).measure()
    want = RingElement.one(Q).scaled(4) + RingElement.of_class(A.brclass).scaled(2)
    return got == want and Grassmannian(2, A).cell_count() == 6, f"{got}"


@_case("grassmannian-symmetry", "mu(Gr(d;A)) = mu(Gr(deg-d;A))")
def _gr_symmetry():
    A = CSA(quaternion_class(-1, 3), 6)
    ok = all(
        Grassmannian(d, A).measure() == Grassmannian(6 - d, A).measure()
        for d in range(1, 6)
    )
    return ok, "symmetry over d = 1..5, deg 6"


@_case("subgroup-well-defined", "[B]+[C] and [k]+[B(x)C] generate the same subgroup")
def _subgroup_well_defined():
    B = quaternion_class(-1, 3)
    C = BrauerClass.from_invariants(
        {finite_place(3): Fraction(1, 3), finite_place(5): Fraction(2, 3)}
    )
    e1 = RingElement.of_class(B) + RingElement.of_class(C)
    e2 = RingElement.one(Q) + RingElement.of_class(B + C)
    return e1.positive_subgroup() == e2.positive_subgroup(), "closures agree"


@_case("compare-sb-real", "non-isomorphic real Severi-Brauer curves have distinct measures")
def _compare_sb_real():
    v = compare_severi_brauer(quaternion(-1, -1, R), split_csa(2, R))
    return (
        not v.measure_equal and v.isomorphic is Tri.NO
    ), f"measure_equal={v.measure_equal}"


@_case("compare-conics", "the conics of (-1,3) and (-1,7) have distinct measures")
def _compare_conics():
    v = compare_severi_brauer(quaternion(-1, 3), quaternion(-1, 7))
    return not v.measure_equal and v.isomorphic is Tri.NO, f"{v.isomorphic}"


@_case("compare-quadric-family", "u^2+v^2-w^2+x^2-py^2-pz^2 distinguishes p = 3, 7")
def _compare_quadric_family():
    v = compare_quadrics(form([1, 1, -1, 1, -3, -3]), form([1, 1, -1, 1, -7, -7]))
    return not v.measure_equal and v.isomorphic is Tri.NO, f"{v.isomorphic}"


@_case("compare-dim5", "dimension-5 forms with distinct biquaternion classes differ")
def _compare_dim5():
    q1 = odd_form_with_clifford_class([(-1, 3), (-1, 7)], Q)
    q2 = odd_form_with_clifford_class([(-1, 3), (-1, 11)], Q)
    v = compare_quadrics(q1, q2)
    return not v.measure_equal, f"measure_equal={v.measure_equal}"


@_case("involution-split", "split involution data reproduces the quadric measure")
def _involution_split():
    q = albert_form(1, 1, -1, 3, Q)
    got = involution_from_form(q).measure()
    want = Quadric(q).measure()
    return got == want, f"{got}"


@_case("involution-tao", "degree-4 involution data: c+ + c- = [A]")
def _involution_tao():
    v = involution_from_biquaternion(-1, 3, -1, 7, Q)
    ok = v.c_plus + v.c_minus == v.A.brclass and v.A.degree == 4
    return ok, f"A class {v.A.brclass}"


@_case("quadric-products-swap", "swapping the factors preserves the product verdict")
def _quadric_products_swap():
    v = compare_quadric_products(
        albert_form(1, 1, -1, 3, Q),
        albert_form(1, 1, -1, 7, Q),
        albert_form(1, 1, -1, 7, Q),
        albert_form(1, 1, -1, 3, Q),
    )
    return v.measure_equal and v.isomorphic is Tri.YES, f"{v.isomorphic}"


@_case("conic-products", "products of conics: subgroup equality decides birationality")
def _conic_products():
    v = compare_conic_products((-1, 3), (-1, 7), (-1, 7), (-1, 3), Q)
    w = compare_conic_products((-1, 3), (-1, 7), (-1, 3), (-1, 11), Q)
    ok = (
        v.subgroup_equal
        and v.birational is Tri.YES
        and not w.subgroup_equal
        and w.birational is Tri.NO
    )
    return ok, f"swap: {v.birational}, changed prime: {w.birational}"


@_case("conic-products-declared", "a declared division biquaternion upgrades birational to isomorphic")
def _conic_products_declared():
    # Two independent 2-torsion classes, tensor declared of index 4: the
    # attached 6-dimensional form is anisotropic by declaration.
    field = DeclaredTorsion((2, 2), index_table=(((1, 1), 4),))
    u = BrauerClass.declared((1, 0), field)
    v_ = BrauerClass.declared((0, 1), field)
    v = compare_conic_products_declared(u, v_, v_, u, equation_anisotropic=True)
    return v.isomorphic is Tri.YES, f"{v.isomorphic}"


def all_cases() -> tuple[CorpusCase, ...]:
    return tuple(_CASES)


def run_corpus(filter_substring: str = "") -> tuple[bool, list[tuple[str, bool, str]]]:
    """Run all corpus cases whose id contains the filter substring.

    Returns (all_passed, [(case_id, passed, detail), ...]).
    """
    results = []
    ok = True
    for case in _CASES:
        if filter_substring and filter_substring not in case.case_id:
            continue
        try:
            passed, detail = case.check()
        except Exception as exc:  # a crash is a failure, not an abort
            passed, detail = False, f"exception: {exc}"
        ok = ok and passed
        results.append((case.case_id, passed, detail))
    return ok, results
