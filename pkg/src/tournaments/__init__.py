"""Tournaments, intervals, critical vertices and the (-1)-critical families."""
from .census import CensusResult, census, census_shard, enumerate_labeled
from .core import (
    Tournament,
    apply,
    compose,
    dual,
    from_arcs,
    from_code,
    from_matrix,
    in_set,
    induced,
    induced_with_labels,
    inverse,
    out_set,
    parse_trn,
    read_trn,
    remove,
    to_code,
    to_dot,
    to_trn,
    write_trn,
)
from .criticality import (
    CriticalityReport,
    IndecomposabilityGraph,
    classify,
    component_shapes,
    critical_vertices,
    graph_to_dot,
    indecomposability_graph,
)
from .er_partition import ERPartition, compute_partition, find_indecomposable_extension_pair
from .errors import *  # noqa: F401,F403
from .families import (
    FamilySpec,
    all_minus1_members,
    build,
    chain,
    dual_isomorphism,
    e_family,
    f_family,
    g_family,
    h_family,
    minus1_specs,
    t_family,
    u_family,
    v_family,
)
from .intervals import (
    arcs_equivalent,
    enumerate_intervals,
    find_nontrivial_interval,
    interval_closure,
    is_indecomposable,
    is_interval,
)
from .isomorphism import canonical_form, find_isomorphism, from_canonical, group_classes
from .verify import (
    verify_er,
    verify_lemmas,
    verify_critical_classification,
    verify_graph_shapes,
    verify_minus1_classification,
)

__version__ = "0.1.0"
