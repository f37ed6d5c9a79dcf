import itertools
import random

import pytest

from prefsuf.lce import LceIndex


def brute_lcp(text: bytes, a: int, b: int) -> int:
    x, y = text[a:], text[b:]
    length = 0
    while length < len(x) and length < len(y) and x[length] == y[length]:
        length += 1
    return length


def brute_lcs(text: bytes, a: int, b: int) -> int:
    x, y = text[: a + 1], text[: b + 1]
    length = 0
    while length < len(x) and length < len(y) and x[-1 - length] == y[-1 - length]:
        length += 1
    return length


def test_lcp_fixtures():
    idx = LceIndex(b"aababaab")
    assert idx.lcp_suffixes(6, 1) == 2
    assert idx.lcp_suffixes(3, 3) == 5
    assert idx.lcp_suffixes(8, 2) == 0


def test_lcs_fixtures():
    idx = LceIndex(b"aababaab")
    assert idx.lcs_prefixes(0, 5) == 1
    assert idx.lcs_prefixes(4, 4) == 5
    assert idx.lcs_prefixes(-1, 6) == 0


def test_exhaustive_small_binary_agreement():
    for n in range(1, 10):
        for letters in itertools.product(b"ab", repeat=n):
            text = bytes(letters)
            idx = LceIndex(text)
            for a in range(n + 1):
                for b in range(n + 1):
                    assert idx.lcp_suffixes(a, b) == brute_lcp(text, a, b)
            for a in range(-1, n):
                for b in range(-1, n):
                    assert idx.lcs_prefixes(a, b) == brute_lcs(text, a, b)


def test_random_larger_texts_agree():
    rng = random.Random(301)
    for sigma in (1, 2, 26):
        for _ in range(25):
            n = rng.randrange(1, 400)
            text = bytes(rng.choices(bytes(range(97, 97 + sigma)), k=n))
            idx = LceIndex(text)
            for _ in range(60):
                a, b = rng.randrange(n + 1), rng.randrange(n + 1)
                assert idx.lcp_suffixes(a, b) == brute_lcp(text, a, b)
                a, b = rng.randrange(-1, n), rng.randrange(-1, n)
                assert idx.lcs_prefixes(a, b) == brute_lcs(text, a, b)


def test_symmetry_and_bounds():
    rng = random.Random(302)
    for _ in range(80):
        n = rng.randrange(1, 100)
        text = bytes(rng.choices(b"aab", k=n))
        idx = LceIndex(text)
        for _ in range(30):
            a, b = rng.randrange(n + 1), rng.randrange(n + 1)
            lcp = idx.lcp_suffixes(a, b)
            assert lcp == idx.lcp_suffixes(b, a)
            assert lcp <= min(n - a, n - b)
            a, b = rng.randrange(-1, n), rng.randrange(-1, n)
            lcs = idx.lcs_prefixes(a, b)
            assert lcs == idx.lcs_prefixes(b, a)
            assert lcs <= min(a + 1, b + 1)


def test_sentinel_positions():
    text = b"abacaba"
    n = len(text)
    idx = LceIndex(text)
    for a in range(n + 1):
        assert idx.lcp_suffixes(a, n) == 0
        assert idx.lcp_suffixes(n, a) == 0
        assert idx.lcp_suffixes(a, a) == n - a
    for a in range(-1, n):
        assert idx.lcs_prefixes(a, -1) == 0
        assert idx.lcs_prefixes(-1, a) == 0
        assert idx.lcs_prefixes(a, a) == a + 1


def test_out_of_range_positions_rejected():
    idx = LceIndex(b"abc")
    for a, b in [(-1, 0), (4, 0), (0, 4)]:
        with pytest.raises(IndexError):
            idx.lcp_suffixes(a, b)
    for a, b in [(-2, 0), (3, 0), (0, 3)]:
        with pytest.raises(IndexError):
            idx.lcs_prefixes(a, b)


def test_query_counter_tallies_both_kinds():
    idx = LceIndex(b"abab")
    assert idx.query_count == 0
    idx.lcp_suffixes(0, 2)
    idx.lcs_prefixes(1, 3)
    assert idx.query_count == 2
