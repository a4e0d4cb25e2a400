"""Exact solvers for the channel assignment problem.

Given symmetric integer weights ``w`` on vertex pairs, a proper assignment maps
vertices to channels ``1..s`` so that ``|c(x) - c(y)| >= w(x, y)``.  Deciding,
counting and finding such assignments takes ``O*((ell + 1) ** n)`` time, where
``ell`` is the largest weight.
"""
from .counting import count_assignments
from .decision import decide_span, min_span, tuples_count
from .estimator import ChannelAssigner, LpqTransformer
from .finding import extended_decide, find_assignment
from .instance import (Assignment, Instance, ParseError, PartialAssignment, SimpleGraph,
                       is_proper_assignment, lpq_reduce, parse_graph, parse_instance,
                       serialize_instance, span_upper_bound)

__all__ = [
    "Assignment",
    "ChannelAssigner",
    "Instance",
    "LpqTransformer",
    "ParseError",
    "PartialAssignment",
    "SimpleGraph",
    "count_assignments",
    "decide_span",
    "extended_decide",
    "find_assignment",
    "is_proper_assignment",
    "lpq_reduce",
    "min_span",
    "parse_graph",
    "parse_instance",
    "serialize_instance",
    "span_upper_bound",
    "tuples_count",
]
