"""Dependent arcs in acyclic orientations, Mycielski graphs and cover graphs."""

from __future__ import annotations

from .graph import (
    Apex,
    Cycle,
    Graph,
    GraphError,
    Level,
    build_graph,
    chromatic_number,
    complete_graph,
    cycle_graph,
    enumerate_cycles,
    generate,
    girth,
    petersen_graph,
)
from .mycielski import MycielskiMap, mycielski
from .orientation import (
    Orientation,
    dependent_arcs,
    dependent_arcs_by_cycles,
    flow_signature,
    is_inversion,
    is_k_good,
    mosesian_unique_source,
    orient,
    reversal_reachability,
    source_reversal,
)
from .search import Budget
from .solvers import (
    ParamReport,
    c_upper_bounds,
    cover_excision_number,
    d_max,
    d_min,
    d_min_without_apex,
    e_k,
    is_cover,
)

__version__ = "0.1.0"

__all__ = [
    "Apex", "Budget", "Cycle", "Graph", "GraphError", "Level", "MycielskiMap", "Orientation", "ParamReport",
    "build_graph", "c_upper_bounds", "chromatic_number", "complete_graph", "cover_excision_number", "cycle_graph",
    "d_max", "d_min", "d_min_without_apex", "dependent_arcs", "dependent_arcs_by_cycles", "e_k",
    "enumerate_cycles", "flow_signature", "generate", "girth", "is_cover", "is_inversion", "is_k_good",
    "mosesian_unique_source", "mycielski", "orient", "petersen_graph", "reversal_reachability",
    "source_reversal",
]
