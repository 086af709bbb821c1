"""Exact combinatorial machinery for quasitoric and unitary torus manifolds:
vertex signs, cyclic polytopes and their polars, omniorientation flips,
fan properness, and bounded characteristic-map search."""

from .exactnum import (
    BigRational,
    Gf2Result,
    Gf2System,
    IntMatrix,
    Sqrt2Number,
    det_int,
    gf2_solve,
    sign_sqrt2,
    solve_linear,
    strict_feasibility,
)
from .complexes import (
    OrientationData,
    SimplePolytope,
    SimplicialComplex,
    coherent_orientation,
    dualize,
    euler_characteristic,
    f_vector,
    h_vector,
    pseudomanifold_check,
)
from .cyclic import (
    AngleSpec,
    CaratheodoryRealization,
    PolarPolytope,
    build_polar,
    caratheodory_point,
    compare_orientation_tuples,
    contains_origin_interior,
    gale_facets,
    verify_facets_geometric,
    vertex_orientation_tuples,
)
from .charmap import (
    CharacteristicMap,
    almost_complex_check,
    apply_flip,
    flip_system,
    sign_pattern,
    unimodularity_check,
    vertex_sign,
)
from .fanchk import (
    SimplicialCone,
    cone_membership,
    cones_from_charmap,
    cones_overlap_interior,
    fan_properness,
)
from .charsearch import SearchConfig, SearchResult, normalize_map, search

__all__ = [
    "AngleSpec",
    "BigRational",
    "CaratheodoryRealization",
    "CharacteristicMap",
    "Gf2Result",
    "Gf2System",
    "IntMatrix",
    "OrientationData",
    "PolarPolytope",
    "SearchConfig",
    "SearchResult",
    "SimplePolytope",
    "SimplicialComplex",
    "SimplicialCone",
    "Sqrt2Number",
    "almost_complex_check",
    "apply_flip",
    "build_polar",
    "caratheodory_point",
    "coherent_orientation",
    "compare_orientation_tuples",
    "cone_membership",
    "cones_from_charmap",
    "cones_overlap_interior",
    "contains_origin_interior",
    "det_int",
    "dualize",
    "euler_characteristic",
    "f_vector",
    "fan_properness",
    "flip_system",
    "gale_facets",
    "gf2_solve",
    "h_vector",
    "normalize_map",
    "pseudomanifold_check",
    "search",
    "sign_pattern",
    "sign_sqrt2",
    "solve_linear",
    "strict_feasibility",
    "unimodularity_check",
    "verify_facets_geometric",
    "vertex_orientation_tuples",
    "vertex_sign",
]
