"""Tests for unachieved ideal Whitehead graphs."""

import json

from ._iwg import (
    InvalidTarget,
    ParseError,
    analyze_map,
    catalog,
    check_graph,
    fold_decomposition,
    star_edges,
)
from ._iwg import diagram_json as _diagram_json

__all__ = [
    "InvalidTarget",
    "ParseError",
    "analyze_map",
    "catalog",
    "check_graph",
    "diagram",
    "fold_decomposition",
    "star_edges",
]


def diagram(vertices, edges, rank=None):
    return json.loads(_diagram_json(vertices, edges, rank))
