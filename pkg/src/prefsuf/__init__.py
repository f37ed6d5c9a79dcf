"""Constant-time prefix-suffix occurrence queries on a text.

Build a ``PrefSufIndex`` over a text T once; ``query(i, j)`` then returns
every occurrence of T in the spliced string T[0..i] + T[j..n-1] as a single
arithmetic ``Progression``, in constant time. ``match_all`` applies the same
queries to report pattern occurrences spanning the edges of a string-labeled
bipartite graph in time linear in the labels plus one query per edge.
"""

from .bipartite import (
    BipartiteGraph,
    BipartiteMatcher,
    EdgeMatch,
    GraphFormatError,
    match_all,
    parse_graph,
    read_graph_file,
)
from .index import EMPTY_PROGRESSION, PrefSufIndex, Progression, build, clip, expand
from .kmp import (
    KmpAutomaton,
    build_automaton,
    longest_pattern_prefix_as_label_suffix,
    longest_pattern_suffix_as_label_prefix,
)
from .lce import LceIndex
from .oracle import naive_bipartite, naive_occurrences, naive_periods, naive_prefsuf
from .text_core import PeriodInfo, as_bytes, border_array, period, read_text_file

__all__ = [
    "BipartiteGraph",
    "BipartiteMatcher",
    "EdgeMatch",
    "EMPTY_PROGRESSION",
    "GraphFormatError",
    "KmpAutomaton",
    "LceIndex",
    "PeriodInfo",
    "PrefSufIndex",
    "Progression",
    "as_bytes",
    "border_array",
    "build",
    "build_automaton",
    "clip",
    "expand",
    "longest_pattern_prefix_as_label_suffix",
    "longest_pattern_suffix_as_label_prefix",
    "match_all",
    "naive_bipartite",
    "naive_occurrences",
    "naive_periods",
    "naive_prefsuf",
    "parse_graph",
    "period",
    "read_graph_file",
    "read_text_file",
]

__version__ = "0.1.0"
