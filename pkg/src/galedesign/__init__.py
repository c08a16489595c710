"""Graphical designs on regular graphs through faces of eigenpolytopes."""
import os as _os

_threads = _os.environ.get("GALEDESIGN_THREADS")
if _threads and _threads.isdigit():
    # cap BLAS threads before numpy loads; the library itself is single-threaded
    for _var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
        _os.environ.setdefault(_var, _threads)

from .errors import (  # noqa: E402
    GaleDesignError,
    GraphError,
    LoopEdge,
    DuplicateEdge,
    Disconnected,
    NotRegular,
    NotGenerating,
    NotSymmetricSet,
    UnknownName,
    SpectralError,
    ClusterAmbiguity,
    UnsupportedFamily,
    BadPermutation,
    KOutOfRange,
    PolytopeError,
    RankDeficient,
    NumericallyDegenerate,
    DesignError,
    NotAFace,
    NotCombinatorial,
    NotStable,
    BudgetExceeded,
    NoSuchCode,
)
from .graphs import (Graph, cayley_cyclic, cocktail_party, cycle, from_edge_list,  # noqa: E402
                     hypercube, named, normalized_adjacency)
from .spectral import (Ordering, Partition, Spectrum, analytic_spectrum, custom_order,  # noqa: E402
                       decompose, frequency_order, order_with_last, partition, spectrum)
from .polytope import (Facet, VectorConfiguration, brute_force_facets,  # noqa: E402
                       configuration_from_matrix, enumerate_facets, f_vector, is_face,
                       max_vertex_facets)
from .gale import (Design, brute_force_positive_circuits, check_stable_set_design,  # noqa: E402
                   complement, design_adjacency, design_from_face, minimal_positive_designs,
                   size_bound, verify_design, weighted_circuit_designs)
from .cubes_codes import (LinearCode, code_averages, code_design, constant_weight_check,  # noqa: E402
                          cube_polytope_census, cube_upper_bounds, cut_polytope_designs,
                          hamming_check, slice_basis, table1, triangle_facet_check)

__version__ = "0.1.0"

__all__ = [
    "GaleDesignError",
    "GraphError",
    "LoopEdge",
    "DuplicateEdge",
    "Disconnected",
    "NotRegular",
    "NotGenerating",
    "NotSymmetricSet",
    "UnknownName",
    "SpectralError",
    "ClusterAmbiguity",
    "UnsupportedFamily",
    "BadPermutation",
    "KOutOfRange",
    "PolytopeError",
    "RankDeficient",
    "NumericallyDegenerate",
    "DesignError",
    "NotAFace",
    "NotCombinatorial",
    "NotStable",
    "BudgetExceeded",
    "NoSuchCode",
    "Graph",
    "cayley_cyclic",
    "cocktail_party",
    "cycle",
    "from_edge_list",
    "hypercube",
    "named",
    "normalized_adjacency",
    "Ordering",
    "Partition",
    "Spectrum",
    "analytic_spectrum",
    "custom_order",
    "decompose",
    "frequency_order",
    "order_with_last",
    "partition",
    "spectrum",
    "Facet",
    "VectorConfiguration",
    "brute_force_facets",
    "configuration_from_matrix",
    "enumerate_facets",
    "f_vector",
    "is_face",
    "max_vertex_facets",
    "Design",
    "brute_force_positive_circuits",
    "check_stable_set_design",
    "complement",
    "design_adjacency",
    "design_from_face",
    "minimal_positive_designs",
    "size_bound",
    "verify_design",
    "weighted_circuit_designs",
    "LinearCode",
    "code_averages",
    "code_design",
    "constant_weight_check",
    "cube_polytope_census",
    "cube_upper_bounds",
    "cut_polytope_designs",
    "hamming_check",
    "slice_basis",
    "table1",
    "triangle_facet_check",
]
