#!/usr/bin/env python3
"""The class-sum measure of the five supported variety families.

Each twisted flag variety carries a finite list of central simple algebras
(its Tits algebras); the measure is their formal sum in the quotient ring,
and its coefficient sum is a purely combinatorial cell count.  Products
multiply.
"""

from twistedflags import (
    CSA,
    Grassmannian,
    Product,
    Quadric,
    QuaternionProjective,
    Rationals,
    SeveriBrauer,
    albert_form,
    cell_count,
    gauss_coefficients,
    involution_from_biquaternion,
    measure,
    quaternion,
    quaternion_class,
)

Q = Rationals()

# Severi-Brauer variety of a quaternion algebra: a smooth conic.
sb = SeveriBrauer(quaternion(-1, 3))
print(f"conic of (-1,3):            {measure(sb)}   count {cell_count(sb)}")

# Degree 4 with a period-2 class: the tensor powers fold up.
sb4 = SeveriBrauer(CSA(quaternion_class(-1, 3), 4))
print(f"SB of deg-4 algebra:        {measure(sb4)}   count {cell_count(sb4)}")

# Twisted Grassmannian: multiplicities are Gaussian binomial coefficients.
gr = Grassmannian(2, CSA(quaternion_class(-1, 3), 4))
print(f"\nGaussian (4 choose 2)_t coefficients: {gauss_coefficients(4, 2)}")
print(f"Gr(2; deg-4 algebra):       {measure(gr)}   count {cell_count(gr)}")

# Quadric of an Albert form: dimension 6, trivial discriminant.
qv = Quadric(albert_form(1, 1, -1, 3, Q))
print(f"\nquadric of an Albert form:  {measure(qv)}   count {cell_count(qv)}")

# Twisted quaternionic projective space: ceiling/floor split of deg/4.
hp = QuaternionProjective(CSA(quaternion_class(-1, 3), 6))
print(f"HP of a deg-6 algebra:      {measure(hp)}   count {cell_count(hp)}")

# Involution variety attached to a biquaternion algebra (degree 4); its
# two half even Clifford classes are the quaternion classes themselves.
iv = involution_from_biquaternion(-1, 3, -1, 7, Q)
print(f"involution variety:         {measure(iv)}   count {cell_count(iv)}")

# Products multiply measures; for two Albert quadrics the multiplicities
# come out as 16, 8, 8, 4.
prod = Product((qv, Quadric(albert_form(1, 1, -1, 7, Q))))
print(f"\nproduct of two quadrics:    {measure(prod)}")
print(f"count {cell_count(prod)} = augmentation {measure(prod).augmentation()}")
