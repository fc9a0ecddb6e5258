"""Reduction toolkit for H-free Edge Deletion.

Classify a forbidden graph, build its chain of hardness reductions from a
base problem, run the chain on concrete instances, and check the chain's
answer-preservation against exact solvers on small graphs.
"""

from .constructions import GadgetTrace, PatternSpec, branch_gadget, clique_attach, join_gadget
from .graph import (
    Graph,
    Instance,
    complement,
    components,
    disjoint_union,
    induced_diameter,
    is_tree,
    regular_degree,
)
from .io import format_graph, format_instance, parse_graph, parse_instance
from .matching import (
    are_isomorphic,
    enumerate_induced_copies,
    enumerate_subgraph_copies,
    is_free,
)
from .patterns import (
    ClassificationResult,
    choose_largest_component,
    classify,
    find_carving_set,
    recognize_star,
    recognize_twin_star,
    strip_leaves,
)
from .planner import ReductionPlan, apply_plan, apply_step, parse_plan, plan, to_completion
from .solver import Solution, solve_bruteforce, solve_branching

__version__ = "0.1.0"

__all__ = [
    "ClassificationResult",
    "GadgetTrace",
    "Graph",
    "Instance",
    "PatternSpec",
    "ReductionPlan",
    "Solution",
    "apply_plan",
    "apply_step",
    "are_isomorphic",
    "branch_gadget",
    "choose_largest_component",
    "classify",
    "clique_attach",
    "complement",
    "components",
    "disjoint_union",
    "enumerate_induced_copies",
    "enumerate_subgraph_copies",
    "find_carving_set",
    "format_graph",
    "format_instance",
    "induced_diameter",
    "is_free",
    "is_tree",
    "join_gadget",
    "parse_graph",
    "parse_instance",
    "parse_plan",
    "plan",
    "recognize_star",
    "recognize_twin_star",
    "regular_degree",
    "solve_branching",
    "solve_bruteforce",
    "strip_leaves",
    "to_completion",
]
