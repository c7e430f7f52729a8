"""GF(2) graph dynamics, their monoid actions, and domination oracles."""

from .action import (
    ActionSystem,
    apply_word,
    condition_system,
    f_system,
    im_epsilon_set,
    independence_system,
    reverse_lookup,
    system_preset,
)
from .analysis import CLAIMS, build_transition_map, classify_attractors, export_dot
from .conditions import ODD_CLOSED, ODD_OPEN, PERFECT_OPEN, Condition, parse_condition
from .dynamics import State, state_from_index, step_f
from .errors import RevdomError
from .graph import Graph, builtin_graph, from_edges, parse_edge_list

__all__ = [
    "ActionSystem", "CLAIMS", "Condition", "Graph", "ODD_CLOSED", "ODD_OPEN", "PERFECT_OPEN",
    "RevdomError", "State", "apply_word", "build_transition_map", "builtin_graph",
    "classify_attractors", "condition_system", "export_dot", "f_system", "from_edges",
    "im_epsilon_set", "independence_system", "parse_condition", "parse_edge_list",
    "reverse_lookup", "state_from_index", "step_f", "system_preset",
]
