#!/usr/bin/env python3
"""Brauer classes over Q, by hand.

A central simple algebra over Q is classified by its local invariants: one
fraction in Q/Z per place, almost all zero, summing to zero.  This script
walks through square classes, Hilbert symbols, quaternion algebras, and
the p-primary decomposition.
"""

from fractions import Fraction

from twistedflags import (
    BrauerClass,
    REAL_PLACE,
    finite_place,
    hilbert_symbol,
    quaternion_class,
    square_class,
)

# Square classes: every nonzero rational is a square times a unique
# square-free integer.
for x in (18, -12, Fraction(5, 8)):
    print(f"square class of {x}: {square_class(x).rep}")

# Hilbert symbols: (a,b)_v = +1 iff z^2 = a x^2 + b y^2 has a nontrivial
# solution over the completion at v.  The product over all places is +1.
print("\n(a,b) = (-1,3):")
for v in (REAL_PLACE, finite_place(2), finite_place(3)):
    print(f"  symbol at {v}: {hilbert_symbol(-1, 3, v):+d}")

# The quaternion algebra (-1,3) therefore ramifies exactly at 2 and 3.
c = quaternion_class(-1, 3)
print(f"\nclass of (-1,3): {c}, order {c.order()}")

# Brauer classes add place-by-place: tensoring (-1,3) with (-1,7) cancels
# the invariant at 2.
c7 = quaternion_class(-1, 7)
print(f"class of (-1,7): {c7}")
print(f"sum: {c + c7}")

# A class of order 6 splits into its 2-primary and 3-primary parts, which
# sum back to the original class.
b = BrauerClass.from_invariants(
    {finite_place(3): Fraction(1, 6), finite_place(5): Fraction(5, 6)}
)
print(f"\nb = {b} has order {b.order()}")
print(f"  2-primary part: {b.p_part(2)}")
print(f"  3-primary part: {b.p_part(3)}")
assert b.p_part(2) + b.p_part(3) == b
