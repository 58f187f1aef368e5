"""gorlab: exact computations with oriented Gorenstein algebras.

Finite-dimensional commutative algebras over exact fields, with the
Frobenius-structure constructions built on top: orientations and their
bilinear forms, socle generators, connected sums, unitalization, one
parameter degeneration families, hyperbolic embeddings, Witt invariants,
and the degeneration of structure tensors to the big Coppersmith-Winograd
tensor.
"""

from .scalar import GF, QQ, Field, Scalar, TPoly, square_class, tpoly_eval
from .algebra import (
    FiniteAlgebra,
    Subspace,
    algebra_from_constants,
    annihilator,
    base_change,
    direct_product,
    ideal_span,
    multiply,
)
from .poly import (
    MultiPoly,
    groebner_basis,
    lowest_degree_initial_ideal,
    normal_form,
    poly_ring,
    quotient_algebra,
    standard_monomials,
)
from .forms import (
    BilinearForm,
    FormFamily,
    elementary_factorization,
    gro_member,
    hyp_embed,
    hyperbolic_form,
    is_even,
    is_nondegenerate,
    metabolic_path,
    orth_complement,
    radical,
    signature,
    surgery,
    witt_invariants,
)
from .frobenius import (
    Augmented,
    NonUnitalOriented,
    OrientedAlgebra,
    augmentation_check,
    b_phi,
    connected_sum,
    decompose_augmented,
    enumerate_augmentations,
    form_to_algebra,
    gorenstein_test,
    hyp_algebra,
    isotropy_check,
    rees_family,
    socle_generator,
    surgery_inverse,
    unitalize,
)
from .families import (
    AlgebraFamily,
    family_socle_generator,
    gm_rescale_check,
    homotopy_families,
    robber_family,
    scale_multiplication_family,
    specialize,
)
from .tensors import (
    Tensor3,
    aq_algebra,
    cw_tensor,
    degeneration_to_cw,
    one_generic,
    reduced_degeneration,
    strassen_commuting,
    structure_tensor,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
