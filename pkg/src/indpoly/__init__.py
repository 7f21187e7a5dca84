"""Independence polynomials at -1, decycling numbers and (k, q)-graph synthesis."""

from .brackets import Bracket, extend_bracket, negate_bracket, paste_brackets
from .counting import (
    IntegerPolynomial,
    bracket,
    brute_force_census,
    independence_number,
    independence_polynomial,
    value_at_minus_one,
)
from .graph import (
    Graph,
    RootedGraph,
    delete_closed_neighborhood,
    delete_vertex,
    disjoint_union,
    extend,
    make_complete,
    make_cycle,
    make_path,
    paste,
)

__all__ = [
    "Bracket",
    "Graph",
    "IntegerPolynomial",
    "RootedGraph",
    "bracket",
    "brute_force_census",
    "delete_closed_neighborhood",
    "delete_vertex",
    "disjoint_union",
    "extend",
    "extend_bracket",
    "independence_number",
    "independence_polynomial",
    "make_complete",
    "make_cycle",
    "make_path",
    "negate_bracket",
    "paste",
    "paste_brackets",
    "value_at_minus_one",
]
