"""Distance identifying sets: exact solver, gadgets and hardness reductions."""

from ._distid import (
    Gadget,
    Graph,
    HittingSetInstance,
    ParseError,
    Problem,
    Reduction,
    build_reduction,
    check_gadget,
    check_trait,
    complete_graph,
    cycle_graph,
    format_graph,
    format_hs,
    is_dis,
    min_dis,
    min_hitting_set,
    parse_gadget,
    parse_graph,
    parse_hs,
    parse_problem,
    path_graph,
    sat_to_hitting_set,
)

__all__ = [
    "Gadget",
    "Graph",
    "HittingSetInstance",
    "ParseError",
    "Problem",
    "Reduction",
    "build_reduction",
    "check_gadget",
    "check_trait",
    "complete_graph",
    "cycle_graph",
    "format_graph",
    "format_hs",
    "is_dis",
    "min_dis",
    "min_hitting_set",
    "parse_gadget",
    "parse_graph",
    "parse_hs",
    "parse_problem",
    "path_graph",
    "sat_to_hitting_set",
]
