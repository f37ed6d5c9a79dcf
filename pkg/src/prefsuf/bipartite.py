"""Pattern matching across the edges of a string-labeled bipartite graph.

An occurrence of a pattern P "spans" an edge (u, v) when P = s + p for a
nonempty suffix s of u's label and a nonempty prefix p of v's label. For each
edge all such cut lengths |s| are reported together as one arithmetic
progression.

The per-edge work is constant: scan every label once through the two pattern
automata, then ask one spliced-occurrence query on P per edge. An occurrence
of P at position q in P[0..a-1] + P[m-b..m-1] corresponds one-to-one to the
cut length a - q, where a and b are the per-node longest-match values, so the
query's progression converts directly into the progression of cuts.
"""

from typing import NamedTuple

from .index import PrefSufIndex, Progression
from .kmp import (
    KmpAutomaton,
    longest_pattern_prefix_as_label_suffix,
    longest_pattern_suffix_as_label_prefix,
)


class BipartiteGraph:
    """Two node sides with byte-string labels, plus index-based edges.

    Labels must be nonempty. ``n_u``/``n_v``/``n_total`` give total label
    lengths per side and overall.
    """

    __slots__ = ("u_nodes", "v_nodes", "edges", "n_u", "n_v")

    def __init__(
        self,
        u_nodes: list[tuple[str, bytes]],
        v_nodes: list[tuple[str, bytes]],
        edges: list[tuple[int, int]],
    ):
        for side, nodes in (("U", u_nodes), ("V", v_nodes)):
            for node_id, label in nodes:
                if len(label) == 0:
                    raise ValueError(f"{side} node {node_id!r} has an empty label")
        for ui, vi in edges:
            if not (0 <= ui < len(u_nodes)):
                raise ValueError(f"edge references missing U node index {ui}")
            if not (0 <= vi < len(v_nodes)):
                raise ValueError(f"edge references missing V node index {vi}")
        self.u_nodes = list(u_nodes)
        self.v_nodes = list(v_nodes)
        self.edges = list(edges)
        self.n_u = sum(len(label) for _, label in u_nodes)
        self.n_v = sum(len(label) for _, label in v_nodes)

    @property
    def n_total(self) -> int:
        return self.n_u + self.n_v


class EdgeMatch(NamedTuple):
    """One matched edge and the progression of its cut lengths (ascending)."""

    u_id: str
    v_id: str
    splits: Progression


class GraphFormatError(ValueError):
    """Malformed graph file; carries the 1-based offending line number."""

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no


def parse_graph(data: bytes) -> BipartiteGraph:
    """Parse the tab-separated graph format.

    Records are one per line: ``U<TAB>id<TAB>label``, ``V<TAB>id<TAB>label``,
    ``E<TAB>u-id<TAB>v-id``. Node records must precede the edges that use
    them; ids must be unique within their side (the same id may name one U
    node and one V node). Labels are raw bytes without tab or newline. Blank
    lines are ignored.
    """
    u_nodes: list[tuple[str, bytes]] = []
    v_nodes: list[tuple[str, bytes]] = []
    edges: list[tuple[int, int]] = []
    u_index: dict[str, int] = {}
    v_index: dict[str, int] = {}
    for line_no, line in enumerate(data.split(b"\n"), start=1):
        if not line:
            continue
        fields = line.split(b"\t")
        if len(fields) != 3:
            raise GraphFormatError(line_no, f"expected 3 tab-separated fields, got {len(fields)}")
        kind, second, third = fields
        if kind in (b"U", b"V"):
            try:
                node_id = second.decode("utf-8")
            except UnicodeDecodeError:
                raise GraphFormatError(line_no, "node id is not valid UTF-8") from None
            if not node_id:
                raise GraphFormatError(line_no, "empty node id")
            if not third:
                raise GraphFormatError(line_no, f"empty label for node {node_id!r}")
            index = u_index if kind == b"U" else v_index
            nodes = u_nodes if kind == b"U" else v_nodes
            if node_id in index:
                raise GraphFormatError(line_no, f"duplicate {kind.decode()} node id {node_id!r}")
            index[node_id] = len(nodes)
            nodes.append((node_id, third))
        elif kind == b"E":
            try:
                u_id = second.decode("utf-8")
                v_id = third.decode("utf-8")
            except UnicodeDecodeError:
                raise GraphFormatError(line_no, "edge endpoint id is not valid UTF-8") from None
            if u_id not in u_index:
                raise GraphFormatError(line_no, f"edge references unknown U node {u_id!r}")
            if v_id not in v_index:
                raise GraphFormatError(line_no, f"edge references unknown V node {v_id!r}")
            edges.append((u_index[u_id], v_index[v_id]))
        else:
            raise GraphFormatError(line_no, f"unknown record type {kind!r}")
    return BipartiteGraph(u_nodes, v_nodes, edges)


def read_graph_file(path) -> BipartiteGraph:
    with open(path, "rb") as fh:
        return parse_graph(fh.read())


class BipartiteMatcher:
    """Reusable pattern-side state: two automata plus the spliced-query index."""

    def __init__(self, pattern: bytes):
        if len(pattern) == 0:
            raise ValueError("empty pattern")
        self.pattern = bytes(pattern)
        self.m = len(self.pattern)
        self.forward = KmpAutomaton(self.pattern)
        self.backward = KmpAutomaton(self.pattern, reverse=True)
        self.index = PrefSufIndex(self.pattern)

    def match_all(self, graph: BipartiteGraph) -> list[EdgeMatch]:
        """All edges with at least one spanning cut, in the graph's edge order."""
        m = self.m
        suffix_len = [
            longest_pattern_prefix_as_label_suffix(self.forward, label)
            for _, label in graph.u_nodes
        ]
        prefix_len = [
            longest_pattern_suffix_as_label_prefix(self.backward, label)
            for _, label in graph.v_nodes
        ]
        query = self.index.query
        matches = []
        for ui, vi in graph.edges:
            a = suffix_len[ui]
            b = prefix_len[vi]
            if a == 0 or b == 0:
                continue
            positions = query(a - 1, m - b)
            if positions.count == 0:
                continue
            # positions q ascending become cuts a - q descending; re-anchor at
            # the smallest cut to keep the progression ascending, then drop
            # cuts outside [1, m-1] (those occurrences do not span the edge)
            last = positions.start + (positions.count - 1) * positions.step
            splits = Progression(a - last, positions.step, positions.count).clip(1, m - 1)
            if splits.count:
                matches.append(EdgeMatch(graph.u_nodes[ui][0], graph.v_nodes[vi][0], splits))
        return matches


def match_all(graph: BipartiteGraph, pattern: bytes) -> list[EdgeMatch]:
    """One-shot matching; build a ``BipartiteMatcher`` instead to reuse the pattern."""
    return BipartiteMatcher(pattern).match_all(graph)
