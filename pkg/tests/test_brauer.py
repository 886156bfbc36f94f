import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistedflags.brauer import BrauerClass, hilbert_symbol, quaternion_class
from twistedflags.fields import (
    DeclaredTorsion,
    DomainError,
    PAdics,
    Rationals,
    Reals,
    REAL_PLACE,
    finite_place,
    odd_prime_factors,
    square_class,
    squarefree_part,
)

Q = Rationals()

nonzero_ints = st.integers(min_value=-1000, max_value=1000).filter(lambda n: n != 0)


def relevant_places(a: int, b: int):
    places = {REAL_PLACE, finite_place(2)}
    for p in odd_prime_factors(squarefree_part(a)) + odd_prime_factors(squarefree_part(b)):
        places.add(finite_place(p))
    return places


def test_hilbert_known_values():
    assert hilbert_symbol(1, 5, REAL_PLACE) == 1
    assert hilbert_symbol(1, 5, finite_place(5)) == 1
    assert hilbert_symbol(-1, -1, REAL_PLACE) == -1
    assert hilbert_symbol(-1, 3, finite_place(3)) == -1
    assert hilbert_symbol(-1, 3, finite_place(2)) == -1
    assert hilbert_symbol(2, 3, finite_place(3)) == -1
    assert hilbert_symbol(5, 5, finite_place(5)) == 1
    assert hilbert_symbol(2, 7, finite_place(7)) == 1


@given(nonzero_ints, nonzero_ints)
@settings(max_examples=300, deadline=None)
def test_hilbert_product_formula(a, b):
    product = 1
    for v in relevant_places(a, b):
        product *= hilbert_symbol(square_class(a), square_class(b), v)
    assert product == 1


@given(nonzero_ints, nonzero_ints, nonzero_ints)
@settings(max_examples=200, deadline=None)
def test_hilbert_symmetry_and_bilinearity(a, b, c):
    for v in relevant_places(a, b) | relevant_places(a, c):
        assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)
        assert hilbert_symbol(
            square_class(a), square_class(b * c), v
        ) == hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v)


def test_hilbert_square_argument_splits():
    for b in (-7, -1, 2, 3, 30):
        for v in relevant_places(1, b):
            assert hilbert_symbol(1, b, v) == 1


def test_invariants_must_sum_to_zero():
    with pytest.raises(DomainError):
        BrauerClass.from_invariants({finite_place(3): Fraction(1, 2)})
    with pytest.raises(DomainError):
        BrauerClass.from_invariants({REAL_PLACE: Fraction(1, 3), finite_place(3): Fraction(2, 3)})


def test_addition_and_canonical_sparseness():
    c1 = BrauerClass.from_invariants(
        {finite_place(2): Fraction(1, 2), finite_place(3): Fraction(1, 2)}
    )
    c2 = BrauerClass.from_invariants(
        {finite_place(3): Fraction(1, 2), finite_place(5): Fraction(1, 2)}
    )
    total = c1 + c2
    assert total == BrauerClass.from_invariants(
        {finite_place(2): Fraction(1, 2), finite_place(5): Fraction(1, 2)}
    )
    assert (c1 + c1).is_zero
    assert c1 + BrauerClass.zero(Q) == c1


def test_backend_mismatch_rejected():
    with pytest.raises(DomainError):
        quaternion_class(-1, -1, Reals()) + quaternion_class(-1, -1, Q)


def test_order_examples():
    assert BrauerClass.zero(Q).order() == 1
    c = BrauerClass.from_invariants(
        {finite_place(2): Fraction(1, 2), finite_place(3): Fraction(1, 2)}
    )
    assert c.order() == 2
    c6 = BrauerClass.from_invariants(
        {finite_place(3): Fraction(1, 6), finite_place(5): Fraction(5, 6)}
    )
    assert c6.order() == 6


def test_p_primary_decomposition_examples():
    c6 = BrauerClass.from_invariants(
        {finite_place(3): Fraction(1, 6), finite_place(5): Fraction(5, 6)}
    )
    part2 = c6.p_part(2)
    part3 = c6.p_part(3)
    assert part2 == BrauerClass.from_invariants(
        {finite_place(3): Fraction(1, 2), finite_place(5): Fraction(1, 2)}
    )
    assert part3 == BrauerClass.from_invariants(
        {finite_place(3): Fraction(2, 3), finite_place(5): Fraction(1, 3)}
    )
    assert part2 + part3 == c6
    assert c6.p_part(7).is_zero
    two_torsion = quaternion_class(-1, 3)
    assert two_torsion.p_part(2) == two_torsion
    assert two_torsion.p_part(3).is_zero
    with pytest.raises(DomainError):
        two_torsion.p_part(4)


@given(st.integers(min_value=1, max_value=36), st.randoms())
@settings(max_examples=120, deadline=None)
def test_p_primary_reconstitution(order, rng):
    from oracles import random_class_of_order

    c = random_class_of_order(random.Random(rng.randint(0, 10**9)), order)
    total = BrauerClass.zero(Q)
    for p, part in c.primary_parts().items():
        n = c.order()
        p_power = 1
        while n % p == 0:
            n //= p
            p_power *= p
        assert part.order() == p_power
        total = total + part
    assert total == c


def test_real_backend_group():
    h = quaternion_class(-1, -1, Reals())
    assert not h.is_zero
    assert h.order() == 2
    assert (h + h).is_zero
    assert quaternion_class(1, -1, Reals()).is_zero
    assert h.p_part(2) == h and h.p_part(3).is_zero


def test_padic_backend_group():
    field = PAdics(5)
    c = BrauerClass.local(Fraction(2, 3), field)
    assert c.order() == 3
    assert c.scale(3).is_zero
    assert c.p_part(3) == c
    assert c.index() == 3


def test_declared_backend_group():
    field = DeclaredTorsion((2, 3))
    u = BrauerClass.declared((1, 0), field)
    w = BrauerClass.declared((0, 1), field)
    assert (u + u).is_zero
    assert (u + w).order() == 6
    assert (u + w).p_part(2) == u
    assert (u + w).p_part(3) == w


def test_quaternion_class_ramification():
    c = quaternion_class(-1, 3)
    assert c.invariant_at(finite_place(2)) == Fraction(1, 2)
    assert c.invariant_at(finite_place(3)) == Fraction(1, 2)
    assert c.invariant_at(REAL_PLACE) == 0
    assert quaternion_class(1, 3).is_zero
    h = quaternion_class(-1, -1)
    assert h.invariant_at(REAL_PLACE) == Fraction(1, 2)
    assert h.invariant_at(finite_place(2)) == Fraction(1, 2)


@given(nonzero_ints, nonzero_ints)
@settings(max_examples=200, deadline=None)
def test_quaternion_class_invariant_sum(a, b):
    c = quaternion_class(a, b)
    assert sum(c.invariants().values(), Fraction(0)) % 1 == 0
    assert c.order() in (1, 2)


def test_serialization_roundtrip_of_sort_token():
    c1 = quaternion_class(-1, 3)
    c2 = quaternion_class(3, -1)
    assert c1.sort_token() == c2.sort_token()
    assert hash(c1) == hash(c2)
