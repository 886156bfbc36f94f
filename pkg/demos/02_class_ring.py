#!/usr/bin/env python3
"""Deciding equality in the quotient of the group ring of Br(k).

The ring is Z[Br(k)] modulo [k] + [B (x) C] = [B] + [C] for algebras with
coprime indexes.  Because coprime indexes means disjoint prime supports of
the class orders, every class rewrites into its p-primary parts, and the
pair (coefficient sum, multiset of nontrivial p-primary classes per prime)
is a complete invariant.  This script shows the rewrite in action.
"""

from fractions import Fraction

from twistedflags import BrauerClass, Rationals, RingElement, finite_place, quaternion_class

Q = Rationals()
one = RingElement.one(Q)  # the class of the base field, [k]

B = quaternion_class(-1, 3)  # order 2
C = BrauerClass.from_invariants(
    {finite_place(3): Fraction(1, 3), finite_place(5): Fraction(2, 3)}
)  # order 3

lhs = one + RingElement.of_class(B + C)
rhs = RingElement.of_class(B) + RingElement.of_class(C)
print(f"[k] + [B(x)C] = {lhs}")
print(f"[B] + [C]     = {rhs}")
print(f"equal in the quotient ring: {lhs == rhs}")

# With equal (hence non-coprime) indexes the relation does not apply:
lhs2 = one + RingElement.of_class(B + B)
rhs2 = RingElement.of_class(B).scaled(2)
print(f"\nperiod-2 B: [k] + [B(x)B] = {lhs2}")
print(f"            2[B]          = {rhs2}")
print(f"equal: {lhs2 == rhs2}")

# The canonical form behind the equality decision:
e = RingElement.of_class(B + C)
print(f"\ncanonical form of [B(x)C]: {e.canonical()}")

# Multiplication is induced by the tensor product on classes; the
# coefficient-sum map is a ring homomorphism.
f = one + RingElement.of_class(B)
print(f"\n([k]+[B])^2 = {f * f}")
print(f"augmentations: {f.augmentation()}^2 = {(f * f).augmentation()}")
