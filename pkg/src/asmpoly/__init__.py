"""Exact rational computations in the alternating sign matrix polytope."""

from .matrices import (
    AsmMatrix,
    as_fraction,
    AsmValidationError,
    CapExceededError,
    DEFAULT_ENUMERATION_CAP,
    PartialSumTableau,
    Rational,
    RationalMatrix,
    count_asms,
    enumerate_asms,
    partial_sums,
    validate_asm,
)
from .membership import (
    Circuit,
    ConstraintViolation,
    ConvexCombination,
    MembershipVerdict,
    NotAMemberError,
    check_membership,
    decompose,
    decompose_with_depth,
    find_circuit,
    split_on_circuit,
)
from .grids import (
    ElementaryFlowGrid,
    FlowGrid,
    GridValidationError,
    SimpleFlowGrid,
    asm_to_grid,
    complete_flow_grid,
    doubly_directed_regions,
    grid_to_asm,
    is_elementary,
)
from .faces import (
    DEFAULT_LATTICE_CAP,
    Face,
    FaceLattice,
    FacetDescriptor,
    SeparatingHyperplane,
    empty_face,
    enumerate_faces,
    enumerate_facets,
    face_closure,
    facets_containing,
    is_edge,
    join,
    meet,
    separating_hyperplane,
)
from .permutohedron import WeightVector, in_permutohedron, majorizes, project
from .textio import (
    FormatError,
    format_decomposition,
    format_grid,
    format_matrix,
    format_rational,
    format_vector,
    parse_decomposition,
    parse_grid,
    parse_matrix,
    parse_rational,
    parse_vector,
)

__all__ = [
    "AsmMatrix",
    "AsmValidationError",
    "CapExceededError",
    "Circuit",
    "ConstraintViolation",
    "ConvexCombination",
    "DEFAULT_ENUMERATION_CAP",
    "DEFAULT_LATTICE_CAP",
    "ElementaryFlowGrid",
    "Face",
    "FaceLattice",
    "FacetDescriptor",
    "FlowGrid",
    "FormatError",
    "GridValidationError",
    "MembershipVerdict",
    "NotAMemberError",
    "PartialSumTableau",
    "Rational",
    "RationalMatrix",
    "SeparatingHyperplane",
    "SimpleFlowGrid",
    "WeightVector",
    "as_fraction",
    "asm_to_grid",
    "check_membership",
    "complete_flow_grid",
    "count_asms",
    "decompose",
    "decompose_with_depth",
    "doubly_directed_regions",
    "empty_face",
    "enumerate_asms",
    "enumerate_faces",
    "enumerate_facets",
    "face_closure",
    "facets_containing",
    "find_circuit",
    "format_decomposition",
    "format_grid",
    "format_matrix",
    "format_rational",
    "format_vector",
    "grid_to_asm",
    "in_permutohedron",
    "is_edge",
    "is_elementary",
    "join",
    "meet",
    "majorizes",
    "parse_decomposition",
    "parse_grid",
    "parse_matrix",
    "parse_rational",
    "parse_vector",
    "partial_sums",
    "project",
    "separating_hyperplane",
    "split_on_circuit",
    "validate_asm",
]
