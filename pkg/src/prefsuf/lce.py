"""Constant-time longest-common-extension queries over a fixed text.

One ``LceIndex`` holds two halves: a forward structure over the text for
longest-common-prefix queries between suffixes, and the same structure over
the reversed text for longest-common-suffix queries between prefixes. Each
half is suffix order + adjacent-common-prefix table + windowed-minimum
(sparse) table, so every query costs a handful of array lookups.

Construction is O(n log n); numpy does the sorting and the table build, and
the query-side tables are stored as stdlib ``array('i')`` rows for cheap
scalar access.
"""

from array import array

import numpy as np


def _suffix_order(codes: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Prefix-doubling suffix sort; returns (order, rank) where rank inverts order."""
    n = codes.size
    rank = codes.astype(np.int64)
    shift = 1
    while True:
        tail = np.full(n, -1, dtype=np.int64)
        if shift < n:
            tail[: n - shift] = rank[shift:]
        order = np.lexsort((tail, rank))
        head_sorted = rank[order]
        tail_sorted = tail[order]
        fresh = np.empty(n, dtype=np.int64)
        fresh[0] = 0
        if n > 1:
            distinct = (head_sorted[1:] != head_sorted[:-1]) | (
                tail_sorted[1:] != tail_sorted[:-1]
            )
            np.cumsum(distinct, out=fresh[1:])
        rank = np.empty(n, dtype=np.int64)
        rank[order] = fresh
        if fresh[n - 1] == n - 1:
            return order, rank
        shift <<= 1


def _adjacent_lcp(text: bytes, order: np.ndarray, rank: np.ndarray) -> list[int]:
    """Kasai pass: entry t is the common-prefix length of the t-th and (t+1)-th sorted suffixes."""
    n = len(text)
    if n < 2:
        return []
    sa = order.tolist()
    rk = rank.tolist()
    adj = [0] * (n - 1)
    h = 0
    for i in range(n):
        r = rk[i]
        if r > 0:
            j = sa[r - 1]
            while i + h < n and j + h < n and text[i + h] == text[j + h]:
                h += 1
            adj[r - 1] = h
            if h:
                h -= 1
        else:
            h = 0
    return adj


def _as_int_array(values: np.ndarray) -> array:
    packed = array("i")
    packed.frombytes(np.ascontiguousarray(values, dtype=np.int32).tobytes())
    return packed


def _window_minima(adj: list[int]) -> list[array]:
    """Sparse-table rows: row k holds minima of all width-2**k windows of adj."""
    if not adj:
        return []
    row = np.asarray(adj, dtype=np.int32)
    rows = [_as_int_array(row)]
    width = 1
    while 2 * width <= len(adj):
        row = np.minimum(row[: row.size - width], row[width:])
        rows.append(_as_int_array(row))
        width <<= 1
    return rows


class _HalfIndex:
    """Suffix-side LCE for one orientation of the text."""

    __slots__ = ("n", "rank", "rows")

    def __init__(self, text: bytes):
        self.n = len(text)
        if self.n == 0:
            self.rank = array("i")
            self.rows = []
            return
        codes = np.frombuffer(text, dtype=np.uint8)
        order, rank = _suffix_order(codes)
        self.rank = _as_int_array(rank)
        self.rows = _window_minima(_adjacent_lcp(text, order, rank))

    def lce(self, a: int, b: int) -> int:
        # callers guarantee 0 <= a, b <= n; position n is the empty suffix
        n = self.n
        if a == b:
            return n - a
        if a == n or b == n:
            return 0
        rank = self.rank
        lo = rank[a]
        hi = rank[b]
        if lo > hi:
            lo, hi = hi, lo
        k = (hi - lo).bit_length() - 1
        row = self.rows[k]
        x = row[lo]
        y = row[hi - (1 << k)]
        return x if x < y else y


class LceIndex:
    """Exact LCP (suffix vs suffix) and LCS (prefix vs prefix) queries in O(1).

    ``query_count`` tallies every answered query; instrumentation only.
    """

    __slots__ = ("text", "n", "query_count", "_forward", "_backward")

    def __init__(self, text: bytes):
        self.text = bytes(text)
        self.n = len(self.text)
        self.query_count = 0
        self._forward = _HalfIndex(self.text)
        self._backward = _HalfIndex(self.text[::-1])

    def lcp_suffixes(self, a: int, b: int) -> int:
        """Longest common prefix length of text[a..] and text[b..].

        Positions range over [0, n]; n denotes the empty suffix.
        """
        n = self.n
        if not (0 <= a <= n and 0 <= b <= n):
            raise IndexError(f"suffix positions must lie in [0, {n}]: got {a}, {b}")
        self.query_count += 1
        return self._forward.lce(a, b)

    def lcs_prefixes(self, a: int, b: int) -> int:
        """Longest common suffix length of text[..a] and text[..b] (ends inclusive).

        End positions range over [-1, n-1]; -1 denotes the empty prefix.
        """
        n = self.n
        if not (-1 <= a < n and -1 <= b < n):
            raise IndexError(f"prefix ends must lie in [-1, {n - 1}]: got {a}, {b}")
        self.query_count += 1
        return self._backward.lce(n - 1 - a, n - 1 - b)
