"""Brute-force reference implementations.

Everything in this module is written for obviousness, not speed. The rest of
the library is tested against these functions; nothing here may depend on the
indexed data structures.
"""


def naive_occurrences(pattern: bytes, text: bytes) -> list[int]:
    """All starting positions of ``pattern`` in ``text``, ascending, overlaps included."""
    if not pattern:
        raise ValueError("empty pattern")
    occ = []
    q = text.find(pattern)
    while q != -1:
        occ.append(q)
        q = text.find(pattern, q + 1)
    return occ


def naive_prefsuf(text: bytes, i: int, j: int) -> list[int]:
    """Occurrences of ``text`` in text[0..i] + text[j..], by direct scan."""
    n = len(text)
    if not (0 <= i < n) or not (0 <= j < n):
        raise IndexError(f"positions must lie in [0, {n}): got i={i}, j={j}")
    return naive_occurrences(text, text[: i + 1] + text[j:])


def naive_periods(text: bytes) -> list[int]:
    """All periods of ``text`` in [1, n], ascending. n itself always qualifies."""
    if not text:
        raise ValueError("empty text has no period")
    n = len(text)
    return [p for p in range(1, n + 1) if text[p:] == text[: n - p]]


def naive_bipartite(graph, pattern: bytes) -> list[tuple[str, str, list[int]]]:
    """Per-edge split lengths found by trying every cut of the pattern.

    For each edge (u, v) reports every l in [1, m-1] such that pattern[:l] is
    a suffix of u's label and pattern[l:] is a prefix of v's label. Edges with
    no valid cut are omitted; output follows the graph's edge order.
    """
    if not pattern:
        raise ValueError("empty pattern")
    m = len(pattern)
    matches = []
    for ui, vi in graph.edges:
        u_id, u_label = graph.u_nodes[ui]
        v_id, v_label = graph.v_nodes[vi]
        splits = [
            cut
            for cut in range(1, m)
            if u_label.endswith(pattern[:cut]) and v_label.startswith(pattern[cut:])
        ]
        if splits:
            matches.append((u_id, v_id, splits))
    return matches
