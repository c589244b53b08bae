"""Ramsey goodness lab: exact desk-scale tools for G -> (K_r, P_t)."""

from .arrowing import (
    BLUE_PATH, RED_CLIQUE, Certificate, TwoColoring, Witness, arrows, arrows_exhaustive,
    check_coloring, find_good_coloring, verify_certificate,
)
from .cliques import (
    clique_number, find_clique, find_independent_set, independence_number,
)
from .coloring import ProperColoring, brooks_coloring, chromatic_number, chromatic_surplus
from .constructions import ExtremalConstruction, build_extremal, turan_graph, validate_extremal
from .errors import (
    CapacityError, InputError, InvariantFailure, ParseError, RamseyLabError, Undecided, WindowError,
)
from .graph import Graph, complement, induced, is_connected
from .graph_io import from_edge_list, from_graph6, parse_graph, to_edge_list, to_graph6
from .lemmas import erdos_gallai_path, min_degree_long_path, path_free_partition
from .paths import find_path, hamiltonian_cycle, has_path, longest_path
from .proof import case2_diagnostics, extract, extract_witness
from .reports import Report
from .sweeps import sweep_verify, threshold_tightness_scan
from .thresholds import (
    GoodnessParams, burr_lower_bound, ceiling_identity_check, degree_threshold, extremal_degree,
    goodness_value, k_of,
)

__version__ = "0.1.0"
