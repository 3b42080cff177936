"""Degree-sequence thresholds for potentially K_{r+1}-H-graphic sequences."""

from .graphcore import SimpleGraph, contains_subgraph, find_embedding
from .realize import SearchBudget, SearchTimeout, is_potentially_A, potentially, realize
from .seqcore import DegreeSequence, NotGraphic, is_graphic_eg, is_graphic_recursive, lay_off, sigma
from .targets import TargetSpec, parse_target

__all__ = [
    "DegreeSequence",
    "NotGraphic",
    "SearchBudget",
    "SearchTimeout",
    "SimpleGraph",
    "TargetSpec",
    "contains_subgraph",
    "find_embedding",
    "is_graphic_eg",
    "is_graphic_recursive",
    "is_potentially_A",
    "lay_off",
    "parse_target",
    "potentially",
    "realize",
    "sigma",
]

__version__ = "0.1.0"
