"""Exact core, corona, ker, diadem and nucleus of small graphs, the critical
difference, odd-cycle counts, and a checker for the inequality chain

    |nucleus| + |diadem| <= 2 alpha <= |corona| + |core| <= 2 alpha + k.
"""
from .critical import (
    CriticalReport,
    SwapDecomposition,
    critical_difference,
    critical_summary,
    enumerate_critical_independent_sets,
    extend_to_maximum,
    family_decomposition,
    is_critical,
    set_difference_value,
    swap_decomposition,
)
from .errors import (
    BudgetExceeded,
    GraphParseError,
    IndeterminateError,
    InvariantViolation,
    PreconditionError,
    SearchError,
)
from .graph import (
    Bipartition,
    Graph,
    OddCycle,
    VertexSet,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    encode_graph6,
    is_bipartite,
    is_independent,
    labeled_graphs,
    neighborhood,
    parse_edge_list,
    parse_graph6,
    path_graph,
    star_graph,
    to_dot,
)
from .independence import (
    OmegaSummary,
    alpha,
    enumerate_maximum_independent_sets,
    first_maximum_independent_set,
    is_koenig_egervary,
    maximum_independent_set,
    omega_summary,
)
from .matching import (
    HallViolator,
    Matching,
    bipartite_double_cover,
    exists_matching_into,
    matching_number,
    max_matching_bipartite,
    max_matching_general,
)
from .odd_cycles import CycleInventory, cycle_inventory, enumerate_cycles, is_almost_bipartite
from .search import SearchConfig, SearchSummary, Witness, generate_bipartite, generate_gnp, run_search
from .theorems import (
    TAGS,
    Analysis,
    Budgets,
    ChainReport,
    LemmaReport,
    analyze,
    chain_report,
    classify_equalities,
    verify_constructive_lemmas,
)

__version__ = "0.1.0"
