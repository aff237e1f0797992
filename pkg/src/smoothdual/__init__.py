"""Exact model of the smooth dual of GL(n) over a p-adic field.

Cuspidal data is abstract (labelled orbits with a dimension and a torsion
number); unramified twists are exact rational coordinates.
"""
from .arith import TwistCoord, canonicalize_mod_torsion, norm_power, twist_mul, twist_to_complex
from .errors import DimensionMismatchError, UnknownLabelError, ValidationError
from .homology import PoincarePolynomial, block_hp, component_hp, component_poincare, hp_over_selection
from .params import (
    CuspidalPoint,
    ExtendedPoint,
    SegmentParam,
    WDParam,
    alpha,
    beta,
    infinitesimal_character,
    langlands_data,
    param_equivalent,
    sp_realization_check,
    validate_param,
)
from .partitions import centralizer_order, conjugacy_class_size, distinct_part_multiplicities, enumerate_partitions
from .spectrum import (
    ComponentIndex,
    ComponentShape,
    CuspidalLabel,
    InertialClass,
    Inventory,
    component_catalog,
    enumerate_inertial_classes,
    ordinary_quotient_shape,
)
from .tempered import homotopy, is_tempered, retract, stratum_of

__version__ = "0.1.0"
