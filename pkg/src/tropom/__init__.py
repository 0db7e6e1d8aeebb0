"""Tropical oriented matroids: types, axioms, arrangements, dual
subdivisions of a product of simplices, and planar pictures for d = 3."""

from .core import (
    EmbeddingInconsistentError,
    EmptyCoordinateError,
    EmptyLeftVertexError,
    NotAFineCellError,
    NotATriangulationError,
    OrderedPartition,
    OutOfRangeError,
    SearchSpaceTooLargeError,
    Semidigraph,
    SemiType,
    TomTypeSet,
    TropomError,
    Type,
    completion,
    constant_type,
    dual,
    elements_of,
    make_type,
    mask_from_elements,
    reduction,
    transpose,
)
from .axioms import (
    AxiomReport,
    check_axioms,
    check_boundary,
    check_comparability,
    check_elimination,
    check_surrounding,
    comparability_graph,
    elimination_witnesses,
    find_directed_cycle,
    has_directed_cycle,
    ordered_partitions,
    refine,
    total_refinements,
)
from .structure import (
    contract,
    contraction_relabeling,
    delete,
    dimension,
    direction_components,
    is_refinement_of,
    is_tope,
    is_vertex,
    reconstruct_from_topes,
    refinement_closure,
    topes,
    vertices,
)
from .arrangement import (
    Arrangement,
    Point,
    arrangement_tom,
    eliminate_points,
    eliminate_points_all,
    enumerate_vertex_types,
    is_generic,
    random_arrangement,
    random_generic_arrangement,
    type_of_point,
    vertex_points,
)
from .subdivision import (
    BipartiteSubgraph,
    ProbeReport,
    SubdivisionReport,
    SubgraphCollection,
    check_subdivision,
    conjecture_probe,
    enumerate_triangulations,
    subgraph_to_type,
    tom_to_subdivision,
    triangulation_types,
    type_to_subgraph,
)
from .cayley import (
    EmbeddedCell,
    MixedCell,
    PuzzlePiece,
    TransitionMove,
    TransitionReport,
    cayley_cell,
    classify_piece,
    embed,
    render_svg,
    transitions,
    verify_transition_rules,
)

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "AxiomReport",
    "BipartiteSubgraph",
    "EmbeddedCell",
    "EmbeddingInconsistentError",
    "EmptyCoordinateError",
    "EmptyLeftVertexError",
    "MixedCell",
    "NotAFineCellError",
    "NotATriangulationError",
    "OrderedPartition",
    "OutOfRangeError",
    "Point",
    "ProbeReport",
    "PuzzlePiece",
    "SearchSpaceTooLargeError",
    "Semidigraph",
    "SemiType",
    "SubdivisionReport",
    "SubgraphCollection",
    "TomTypeSet",
    "TransitionMove",
    "TransitionReport",
    "TropomError",
    "Type",
    "arrangement_tom",
    "cayley_cell",
    "check_axioms",
    "check_boundary",
    "check_comparability",
    "check_elimination",
    "check_surrounding",
    "check_subdivision",
    "classify_piece",
    "comparability_graph",
    "completion",
    "conjecture_probe",
    "constant_type",
    "contract",
    "contraction_relabeling",
    "delete",
    "dimension",
    "direction_components",
    "dual",
    "elements_of",
    "elimination_witnesses",
    "eliminate_points",
    "eliminate_points_all",
    "embed",
    "enumerate_triangulations",
    "enumerate_vertex_types",
    "find_directed_cycle",
    "has_directed_cycle",
    "is_generic",
    "is_refinement_of",
    "is_tope",
    "is_vertex",
    "make_type",
    "mask_from_elements",
    "ordered_partitions",
    "random_arrangement",
    "random_generic_arrangement",
    "reconstruct_from_topes",
    "reduction",
    "refine",
    "refinement_closure",
    "render_svg",
    "subgraph_to_type",
    "tom_to_subdivision",
    "topes",
    "total_refinements",
    "transitions",
    "transpose",
    "triangulation_types",
    "type_of_point",
    "type_to_subgraph",
    "verify_transition_rules",
    "vertex_points",
    "vertices",
]
