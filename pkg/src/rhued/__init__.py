"""List r-hued coloring of trees and unicyclic graphs.

Constructive solvers, closed-form chromatic predictions, and a brute-force
oracle that certifies the predictions on small instances.
"""

from .coloring import (
    Coloring,
    ListAssignment,
    Verdict,
    Violation,
    check_hued,
    check_lists,
    check_proper,
    verify_coloring,
)
from .graph import (
    Classification,
    CYCLE,
    EdgeListParseError,
    Graph,
    GraphStructureError,
    OTHER,
    PendantTree,
    TREE,
    UNICYCLIC,
    UnicyclicDecomposition,
    classify,
    decompose_unicyclic,
    find_unique_cycle,
    format_edge_list,
    parse_edge_list,
    square_graph,
)
from .oracle import (
    BadListCertificate,
    ChiListHuedResult,
    ListSystemEnumerator,
    chi_hued_exact,
    chi_list_hued_exact,
    enumerate_list_systems,
    find_bad_list,
    find_coloring,
    graph_fingerprint,
    is_colorable,
)
from .solver import (
    UnsatisfiableCycle,
    color_cycle_constrained,
    color_pendant_tree,
    color_tree_anchored,
    color_unicyclic,
)
from .theorems import (
    ChiPrediction,
    chi_hued_tree,
    chi_list_hued_cycle,
    chi_list_hued_tree,
    chi_list_hued_unicyclic,
    degree_cap,
    predict,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
