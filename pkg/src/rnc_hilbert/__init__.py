"""Hilbert functions of fat points on the rational normal cubic in P^3."""

from .conic_hf import conic_hilbert_function, conic_ideal_dim, reduce_conic_system, segre_regular
from .cubic_hf import (
    CriterionInapplicable,
    HilbertRecord,
    TProjection,
    contains_curve,
    curve_multiplicity_bound,
    dimension_drop,
    hilbert_function,
    ideal_dim,
    is_regular,
    line_multiplicity_bound,
    property_P,
    regularity_index,
    symbolic_power_dim,
    t_projection,
)
from .schemes import (
    ConicScheme,
    FatPointScheme,
    InvalidInputError,
    binomial,
    canonicalize,
    canonicalize_conic,
    scheme_degree,
)

__version__ = "0.1.0"
