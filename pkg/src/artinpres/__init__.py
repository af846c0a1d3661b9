"""Artin presentation toolkit.

Exact word calculus in free groups, validated Artin presentations and
their group law, the framed-pure-braid bridge, triangle-group certificates,
Todd-Coxeter coset enumeration, and the complete classification of
two-generator presentations of the trivial group together with their
closed 4-manifolds.
"""

from .artin import (
    ArtinPresentation,
    ExponentMatrix,
    abelianization_invariants,
    artin_defect,
    compose,
    exponent_matrix,
    format_presentation,
    identity_presentation,
    is_artin,
    is_unimodular,
    parse_presentation,
)
from .braids import (
    BraidWord,
    FramedPureBraid,
    artin_inverse,
    braid_automorphism,
    braid_permutation,
    braid_to_artin,
    format_braid,
    generator_images,
    parse_braid,
)
from .coset import (
    CosetTable,
    EnumResult,
    Exceeded,
    Finite,
    FinitePresentation,
    Strategy,
    enumerate_cosets,
)
from .fourmanifolds import (
    Family,
    FormInvariants,
    FourManifold,
    MovePath,
    MoveStep,
    Parity,
    classify_x4,
    classify_x4_with_path,
    enumerate_trivial,
    export_kirby,
    flipc,
    form_invariants,
    mirror,
    reduce_to_base,
    slide1,
    slide2,
    swap,
    trivial_family,
)
from .triangle import (
    GeometryClass,
    TriangleParams,
    TriangleVerdict,
    Triviality,
    TrivialityResult,
    classify_geometry,
    delta,
    spherical_order,
    triangle_presentation,
    triangle_quotient,
    triangle_verdict,
    triviality_status,
)
from .twogen import (
    Tuple3,
    build_r2,
    format_tuple3,
    parse_tuple3,
    recognize_r2,
    tuple_add,
    tuple_neg,
)
from .words import (
    ParseError,
    Word,
    concat,
    conjugate,
    exponent_sum,
    format_word,
    free_reduce,
    generator_power,
    invert,
    max_generator,
    parse_word,
    substitute,
)

__all__ = [
    "ArtinPresentation",
    "BraidWord",
    "CosetTable",
    "EnumResult",
    "Exceeded",
    "ExponentMatrix",
    "Family",
    "Finite",
    "FinitePresentation",
    "FormInvariants",
    "FourManifold",
    "FramedPureBraid",
    "GeometryClass",
    "MovePath",
    "MoveStep",
    "Parity",
    "ParseError",
    "Strategy",
    "TriangleParams",
    "TriangleVerdict",
    "Triviality",
    "TrivialityResult",
    "Tuple3",
    "Word",
    "abelianization_invariants",
    "artin_defect",
    "artin_inverse",
    "braid_automorphism",
    "braid_permutation",
    "braid_to_artin",
    "build_r2",
    "classify_geometry",
    "classify_x4",
    "classify_x4_with_path",
    "compose",
    "concat",
    "conjugate",
    "delta",
    "enumerate_cosets",
    "enumerate_trivial",
    "exponent_matrix",
    "exponent_sum",
    "export_kirby",
    "flipc",
    "format_braid",
    "format_presentation",
    "format_tuple3",
    "format_word",
    "form_invariants",
    "free_reduce",
    "generator_images",
    "generator_power",
    "identity_presentation",
    "invert",
    "is_artin",
    "is_unimodular",
    "max_generator",
    "mirror",
    "parse_braid",
    "parse_presentation",
    "parse_tuple3",
    "parse_word",
    "recognize_r2",
    "reduce_to_base",
    "slide1",
    "slide2",
    "spherical_order",
    "substitute",
    "swap",
    "triangle_presentation",
    "triangle_quotient",
    "triangle_verdict",
    "triviality_status",
    "trivial_family",
    "tuple_add",
    "tuple_neg",
]
