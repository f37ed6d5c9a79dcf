import itertools
import math
import random

import pytest

from prefsuf.oracle import naive_periods
from prefsuf.text_core import as_bytes, border_array, period, read_text_file


def brute_longest_border(t: bytes) -> int:
    for length in range(len(t) - 1, 0, -1):
        if t[:length] == t[-length:]:
            return length
    return 0


def test_border_array_fixtures():
    assert border_array(b"aababaab") == [0, 1, 0, 1, 0, 1, 2, 3]
    assert border_array(b"aaaa") == [0, 1, 2, 3]
    assert border_array(b"") == []


def test_border_array_matches_brute_force_exhaustively():
    for n in range(1, 11):
        for letters in itertools.product(b"ab", repeat=n):
            t = bytes(letters)
            got = border_array(t)
            assert got[0] == 0
            for k in range(n):
                assert got[k] == brute_longest_border(t[: k + 1])
                assert got[k] < k + 1


def test_border_array_on_larger_random_texts():
    rng = random.Random(201)
    for _ in range(60):
        t = bytes(rng.choices(b"abcd", k=rng.randrange(1, 120)))
        got = border_array(t)
        for k in rng.sample(range(len(t)), min(8, len(t))):
            assert got[k] == brute_longest_border(t[: k + 1])


def test_period_fixtures():
    assert period(b"aabaabaabaaba") == (3, True)
    assert period(b"aababaab") == (5, False)
    assert period(b"aaaa") == (1, True)
    assert period(b"ab") == (2, False)


def test_period_rejects_empty_text():
    with pytest.raises(ValueError, match="empty text has no period"):
        period(b"")


def test_period_border_duality():
    rng = random.Random(202)
    for _ in range(300):
        t = bytes(rng.choices(b"ab", k=rng.randrange(1, 60)))
        n = len(t)
        assert period(t).p + border_array(t)[n - 1] == n


def test_period_is_a_period_and_minimal():
    def is_period(t, q):
        return all(t[x] == t[x + q] for x in range(len(t) - q))

    for n in range(1, 11):
        for letters in itertools.product(b"ab", repeat=n):
            t = bytes(letters)
            p = period(t).p
            assert is_period(t, p)
            for q in range(1, p):
                assert not is_period(t, q)


def test_periodic_flag_definition():
    rng = random.Random(203)
    for _ in range(200):
        t = bytes(rng.choices(b"ab", k=rng.randrange(1, 40)))
        info = period(t)
        assert info.periodic == (2 * info.p <= len(t))


def test_gcd_of_compatible_periods_is_a_period():
    # whenever two periods fit together inside the text, their gcd divides
    # the repetition structure too
    rng = random.Random(204)
    checked = 0
    for trial in range(800):
        if trial % 2:
            t = bytes(rng.choices(b"ab", k=rng.randrange(2, 24)))
        else:
            # repeated short roots keep small compatible period pairs common
            root = bytes(rng.choices(b"ab", k=rng.randrange(1, 4)))
            t = (root * 24)[: rng.randrange(2, 24)]
        periods = naive_periods(t)
        for p, q in itertools.combinations(periods, 2):
            if p + q <= len(t):
                assert math.gcd(p, q) in periods, (t, p, q)
                checked += 1
    assert checked > 100


def test_as_bytes_accepts_common_inputs():
    assert as_bytes(b"ab") == b"ab"
    assert as_bytes(bytearray(b"ab")) == b"ab"
    assert as_bytes("ab") == b"ab"


def test_read_text_file_raw_and_stripped(tmp_path):
    path = tmp_path / "t.txt"
    path.write_bytes(b"abc\n")
    assert read_text_file(path) == b"abc\n"
    assert read_text_file(path, strip_newline=True) == b"abc"

    path.write_bytes(b"abc")
    assert read_text_file(path, strip_newline=True) == b"abc"

    # only one trailing newline goes, and only at the very end
    path.write_bytes(b"a\nb\n\n")
    assert read_text_file(path, strip_newline=True) == b"a\nb\n"
