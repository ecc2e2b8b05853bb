"""Exact polyhedral Minkowski arithmetic and order cancellation laws."""

from .kernel.rational import InputError, Rational, q
from .mrh import MrhClass, cancel_in_CV, embed_j, in_CV, limit_check, mrh_add, mrh_equivalent, mrh_make, mrh_scale, powers_of_half_limit, zero_class
from .polyhedra import (
    INF,
    Polyhedron,
    box,
    cone,
    contains_point,
    distance_inf,
    erode,
    hausdorff_gap,
    hrep,
    is_pointed,
    make_polyhedron,
    minkowski_sum,
    narrowness_report,
    order_cancel,
    point,
    recession_cone,
    scale,
    subset,
    support_function,
)
from .semigroup import (
    DyadicSemigroup,
    FiniteSubsetSemigroup,
    OrderedSemigroup,
    PolyhedralSemigroup,
    cancel_order,
    check_axioms,
    default_bank,
    make_instance,
)

__version__ = "0.1.0"
