"""Exact computation with Brauer classes of twisted flag varieties.

The library evaluates the class-sum measure of Severi-Brauer varieties,
twisted Grassmannians, quadrics, quaternionic projective spaces and
involution varieties (and their products) in the quotient of the group
ring of Br(k) by the coprime-index splitting relation, decides equality
there through a canonical normal form, and packages the resulting
isomorphism/birationality conclusions as structured verdicts.
"""

from .fields import (
    CapabilityError,
    DeclaredTorsion,
    DomainError,
    Field,
    GaloisField,
    PAdics,
    Place,
    Rationals,
    Reals,
    REAL_PLACE,
    SquareClass,
    finite_place,
    square_class,
)
from .brauer import BrauerClass, hilbert_symbol, quaternion_class
from .algebras import (
    CSA,
    biquaternion,
    coprime_indexes,
    quaternion,
    same_cyclic_subgroup,
    split_csa,
    subgroup_generated,
    tensor,
    tensor_power,
)
from .forms import (
    QuadraticForm,
    albert_form,
    anisotropic_over_Q,
    discriminant,
    even_clifford_class,
    even_clifford_half_class,
    form,
    isometric_over_Q,
    odd_form_with_clifford_class,
    similar_dim3,
    similar_dim6,
)
from .class_ring import CanonicalForm, RingElement
from .varieties import (
    Grassmannian,
    InvolutionVariety,
    Product,
    Quadric,
    QuaternionProjective,
    SeveriBrauer,
    TwistedVariety,
    cell_count,
    conic,
    gauss_coefficients,
    involution_from_biquaternion,
    involution_from_form,
    measure,
    quadric_of_albert,
)
from .verdicts import (
    Tri,
    Verdict,
    compare_conic_products,
    compare_conic_products_declared,
    compare_gr_products,
    compare_grassmannians,
    compare_involution,
    compare_quadric_products,
    compare_quadrics,
    compare_quaternion_projective,
    compare_sb_products,
    compare_severi_brauer,
)

__version__ = "0.1.0"
