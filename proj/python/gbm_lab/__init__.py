"""Geometric block model generators, thresholds and recovery algorithms."""

from ._core import (
    GbmError,
    Graph,
    cap_fraction,
    cap_intersection_fraction,
    common_neighbor_count,
    component_count,
    dense_plan,
    dense_recover,
    gen_gbm,
    gen_rag,
    isolated_count,
    isolated_expectation_1d,
    min_a_for_b,
    node_error_rate,
    pair_f_score,
    phase_sweep,
    psi,
    read_graph,
    recover_gbm1,
    recover_gbm_hd,
    recover_with_locations,
    scaled_radius,
    solve_f1,
    solve_f2,
    table1,
    thresholds_1d,
    thresholds_hd,
    write_graph,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
