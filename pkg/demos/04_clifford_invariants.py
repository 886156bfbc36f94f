#!/usr/bin/env python3
"""Clifford invariants of diagonal quadratic forms.

The even Clifford algebra of an odd-dimensional form is central simple of
period 2; its class is computed by peeling two coefficients at a time.
Every finite sum of quaternion classes arises this way from a form of odd
dimension with trivial discriminant.
"""

from twistedflags import (
    Rationals,
    albert_form,
    anisotropic_over_Q,
    discriminant,
    even_clifford_class,
    even_clifford_half_class,
    form,
    odd_form_with_clifford_class,
    quaternion_class,
    similar_dim3,
)

Q = Rationals()

# The three-dimensional form <a, b, -ab> has even Clifford class (a,b).
q = form([-1, 3, 3])
print(f"C0 class of {q}: {even_clifford_class(q)}")
print(f"class of (-1,3):    {quaternion_class(-1, 3)}")

# Similarity of 3-dimensional forms is decided by that class; rescaling
# the form does not change it.
print(f"similar to twice itself: {similar_dim3(q, form([-2, 6, 6]))}")

# Sums of squares: <1,1,1> has the class of the rational Hamilton
# quaternions (-1,-1), ramified at the real place and 2.
print(f"\nC0 class of <1,1,1>: {even_clifford_class(form([1, 1, 1]))}")

# For even dimension and trivial discriminant the even Clifford algebra
# splits into two isomorphic factors.  On the Albert form of a
# biquaternion algebra their class is the biquaternion class.
alb = albert_form(-1, 3, -1, 7, Q)
print(f"\nAlbert form {alb}")
print(f"discriminant: {discriminant(alb)}")
print(f"half Clifford class: {even_clifford_half_class(alb)}")
print(f"(-1,3) + (-1,7):     {quaternion_class(-1, 3) + quaternion_class(-1, 7)}")

# Over Q the index of a class equals its order, so no biquaternion is
# division and every Albert form is isotropic.
print(f"Albert form anisotropic over Q: {anisotropic_over_Q(alb)}")

# Going the other way: realize a prescribed sum of quaternion classes as
# the even Clifford class of an odd-dimensional form.
pairs = [(-1, 3), (-1, 7), (2, -5)]
q9 = odd_form_with_clifford_class(pairs, Q)
print(f"\nrealizing {pairs}:")
print(f"form {q9} of dimension {q9.dim}")
print(f"discriminant {discriminant(q9)}, class {even_clifford_class(q9)}")
