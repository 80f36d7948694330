"""Exact computer algebra for the Drinfeld double D(D3) and its universal Lax operators."""
from .double import (
    AlgebraElement,
    DoubleBasis,
    TensorElement,
    antipode,
    basis_mul,
    casimir,
    coproduct,
    coproduct_opposite,
    counit,
    elem_mul,
    embed_group,
    embed_leg,
    tensor_mul,
    unit,
    universal_R,
)
from .group import GroupElement, conjugate, group_inverse, group_mul
from .lax import (
    check_parametric_ybe,
    check_rll,
    check_universal_lax,
    golden_L_tables,
    lax_embed,
    limit_at_zero,
    r_matrix_2,
    r_matrix_3,
    universal_lax_2,
    universal_lax_3,
)
from .matrices import AlgebraValuedMatrix, ScalarMatrix, avm_product
from .report import RelationReport
from .reps import IrrepLabel, Representation, apply_leg, check_homomorphism, irrep
from .scalars import CycloNum, LaurentPoly, cyclo_inverse, cyclo_mul, laurent_mul, laurent_substitute_ratio

__version__ = "0.1.0"
