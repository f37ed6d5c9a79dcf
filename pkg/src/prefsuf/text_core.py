"""Texts, border arrays, and smallest-period computation.

Texts are plain ``bytes``: immutable, 0-based, alphabet limited to single
bytes. ``as_bytes`` converts ASCII ``str`` input for convenience; everything
else in the library expects ``bytes``.
"""

from typing import NamedTuple


class PeriodInfo(NamedTuple):
    """Smallest period ``p`` of a text, plus whether the text is periodic.

    ``periodic`` is true exactly when 2*p <= n, i.e. the period repeats at
    least twice inside the text.
    """

    p: int
    periodic: bool


def as_bytes(text) -> bytes:
    """Coerce str (ASCII) or any bytes-like input to ``bytes``."""
    if isinstance(text, str):
        return text.encode("ascii")
    return bytes(text)


def border_array(text: bytes) -> list[int]:
    """Failure-function table: entry k is the longest border of text[0..k].

    A border is a string that is both a proper prefix and a suffix. Empty
    input yields an empty table.
    """
    n = len(text)
    border = [0] * n
    k = 0
    for q in range(1, n):
        while k > 0 and text[k] != text[q]:
            k = border[k - 1]
        if text[k] == text[q]:
            k += 1
        border[q] = k
    return border


def period(text: bytes) -> PeriodInfo:
    """Smallest period of ``text`` with its periodicity classification.

    Uses the border/period duality: the smallest period is n minus the
    longest border of the whole text.
    """
    n = len(text)
    if n == 0:
        raise ValueError("empty text has no period")
    p = n - border_array(text)[n - 1]
    return PeriodInfo(p, 2 * p <= n)


def read_text_file(path, strip_newline: bool = False) -> bytes:
    """Read a file as raw bytes; optionally drop one trailing newline byte."""
    with open(path, "rb") as fh:
        data = fh.read()
    if strip_newline and data.endswith(b"\n"):
        data = data[:-1]
    return data
