#!/usr/bin/env python3
"""Classification verdicts: what the measure does and does not decide.

Comparisons return tri-state conclusions (yes / no / unknown) for
isomorphism, birationality and stable birationality, with the implication
chain spelled out.
"""

from twistedflags import (
    BrauerClass,
    DeclaredTorsion,
    Rationals,
    Reals,
    albert_form,
    compare_conic_products,
    compare_conic_products_declared,
    compare_quadric_products,
    compare_quadrics,
    compare_severi_brauer,
    form,
    quaternion,
    split_csa,
)

Q = Rationals()
R = Reals()


def show(title, v):
    print(f"\n== {title}")
    print(
        f"measure_equal={v.measure_equal}  isomorphic={v.isomorphic}  "
        f"birational={v.birational}  stably_birational={v.stably_birational}"
    )
    for step in v.chain:
        print(f"  via: {step}")


# Over R the measure is a complete invariant of Severi-Brauer varieties.
show(
    "real conic of (-1,-1) vs the projective line",
    compare_severi_brauer(quaternion(-1, -1, R), split_csa(2, R)),
)

# Over Q the conics C(-1,p), p = 3 mod 4, are pairwise non-isomorphic.
show(
    "conics of (-1,3) and (-1,7)",
    compare_severi_brauer(quaternion(-1, 3), quaternion(-1, 7)),
)

# The quadrics u^2+v^2-w^2+x^2-py^2-pz^2 all have rational points (they
# are birational to projective 4-space), yet their measures differ: the
# measure strictly refines the birational class.
show(
    "rational quadrics with p = 3 vs p = 7",
    compare_quadrics(form([1, 1, -1, 1, -3, -3]), form([1, 1, -1, 1, -7, -7])),
)

# For products of two Albert quadrics, measure equality IS isomorphism.
show(
    "products of quadrics, factors swapped",
    compare_quadric_products(
        albert_form(1, 1, -1, 3, Q),
        albert_form(1, 1, -1, 7, Q),
        albert_form(1, 1, -1, 7, Q),
        albert_form(1, 1, -1, 3, Q),
    ),
)

# Products of conics are birational iff their classes generate the same
# subgroup of Br(Q); over Q isomorphism stays open (no biquaternion over Q
# is division).
show(
    "conic products with swapped factors over Q",
    compare_conic_products((-1, 3), (-1, 7), (-1, 7), (-1, 3), Q),
)

# Over larger fields a biquaternion algebra can be division; declare such
# a field abstractly (two independent period-2 classes whose tensor has
# index 4, as happens over rational function fields in two variables) and
# the verdict upgrades to an isomorphism.
field = DeclaredTorsion((2, 2), index_table=(((1, 1), 4),))
x = BrauerClass.declared((1, 0), field)
y = BrauerClass.declared((0, 1), field)
show(
    "conic products over a declared field with a division biquaternion",
    compare_conic_products_declared(x, y, y, x, equation_anisotropic=True),
)
