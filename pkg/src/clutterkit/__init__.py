"""Exact hardness of clutters: smallest recognizing subsets, graph-derived clutters and bound checks."""

from .bounds import (
    BoundComparison,
    ProofTrace,
    Relation,
    TheoremReport,
    auxiliary_graph,
    compare_general_bound,
    compare_main_bound,
    compare_mis_bound,
    general_lower_bound,
    proof_trace,
    sandwich_check,
    verify_theorem,
)
from .clutter import (
    Clutter,
    build_clutter,
    check_c1,
    check_c2,
    normalize_antichain,
    relabel,
    remove_isolated,
)
from .constructions import (
    complete_bipartite,
    complete_graph,
    example1,
    extremal_clutter,
    extremal_graph,
    random_clutter,
    random_clutter_c1c2,
    random_graph,
)
from .graphs import (
    Graph,
    complement,
    enumerate_maximal_independent_sets,
    enumerate_maximal_matchings,
    is_connected,
    is_excluded_exception,
    line_graph,
    matching_clutter,
    mis_clutter,
)
from .hardness import (
    HardnessReport,
    RecognizingWitness,
    brute_force_min_recognizing,
    clutter_hardness,
    difference_targets,
    edge_hardness,
    min_hitting_set,
    min_recognizing_subset,
)

__version__ = "0.1.0"
