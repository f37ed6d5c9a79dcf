import itertools
import random

import pytest

from prefsuf.kmp import (
    KmpAutomaton,
    build_automaton,
    longest_pattern_prefix_as_label_suffix,
    longest_pattern_suffix_as_label_prefix,
)


def brute_a_value(pattern: bytes, label: bytes) -> int:
    """Longest suffix of label that is a prefix of pattern, by enumeration."""
    best = 0
    for length in range(1, min(len(pattern), len(label)) + 1):
        if label[-length:] == pattern[:length]:
            best = length
    return best


def brute_b_value(pattern: bytes, label: bytes) -> int:
    best = 0
    for length in range(1, min(len(pattern), len(label)) + 1):
        if label[:length] == pattern[-length:]:
            best = length
    return best


def test_failure_table_fixtures():
    assert build_automaton(b"abab").failure == [0, 0, 1, 2]
    assert build_automaton(b"aaaa").failure == [0, 1, 2, 3]
    reverse = build_automaton(b"ab", reverse=True)
    assert reverse.pattern == b"ba"
    assert reverse.failure == [0, 0]


def test_empty_pattern_rejected():
    with pytest.raises(ValueError):
        build_automaton(b"")


def test_feed_fixtures():
    auto = build_automaton(b"abab")
    assert auto.feed(3, ord("b")) == 4
    assert auto.feed(4, ord("a")) == 3
    assert auto.feed(0, ord("z")) == 0


def test_feed_is_total():
    rng = random.Random(501)
    for _ in range(40):
        pattern = bytes(rng.choices(b"ab", k=rng.randrange(1, 12)))
        auto = build_automaton(pattern)
        for state in range(len(pattern) + 1):
            for letter in b"abz":
                nxt = auto.feed(state, letter)
                assert 0 <= nxt <= len(pattern)


def test_run_equals_folding_feed():
    rng = random.Random(502)
    for _ in range(60):
        pattern = bytes(rng.choices(b"ab", k=rng.randrange(1, 10)))
        data = bytes(rng.choices(b"ab", k=rng.randrange(0, 40)))
        one = build_automaton(pattern)
        two = build_automaton(pattern)
        state = 0
        for letter in data:
            state = one.feed(state, letter)
        assert two.run(data) == state
        assert two.letters_fed == one.letters_fed == len(data)
        assert two.failure_steps == one.failure_steps


def test_longest_match_fixtures():
    forward = build_automaton(b"abab")
    assert longest_pattern_prefix_as_label_suffix(forward, b"xaab") == 2
    assert longest_pattern_prefix_as_label_suffix(forward, b"") == 0
    forward = build_automaton(b"aaaa")
    assert longest_pattern_prefix_as_label_suffix(forward, b"baaa") == 3

    reverse = build_automaton(b"abab", reverse=True)
    assert longest_pattern_suffix_as_label_prefix(reverse, b"abz") == 2
    assert longest_pattern_suffix_as_label_prefix(reverse, b"") == 0
    reverse = build_automaton(b"aaaa", reverse=True)
    assert longest_pattern_suffix_as_label_prefix(reverse, b"aaab") == 3


def test_longest_match_exhaustive_small():
    for m in range(1, 5):
        for pat_letters in itertools.product(b"ab", repeat=m):
            pattern = bytes(pat_letters)
            forward = build_automaton(pattern)
            reverse = build_automaton(pattern, reverse=True)
            for L in range(0, 5):
                for lab_letters in itertools.product(b"ab", repeat=L):
                    label = bytes(lab_letters)
                    assert longest_pattern_prefix_as_label_suffix(forward, label) == brute_a_value(
                        pattern, label
                    )
                    assert longest_pattern_suffix_as_label_prefix(reverse, label) == brute_b_value(
                        pattern, label
                    )


def test_longest_match_random_length_ten():
    rng = random.Random(503)
    for _ in range(400):
        pattern = bytes(rng.choices(b"ab", k=rng.randrange(1, 11)))
        label = bytes(rng.choices(b"ab", k=rng.randrange(0, 11)))
        forward = build_automaton(pattern)
        reverse = build_automaton(pattern, reverse=True)
        assert longest_pattern_prefix_as_label_suffix(forward, label) == brute_a_value(
            pattern, label
        )
        assert longest_pattern_suffix_as_label_prefix(reverse, label) == brute_b_value(
            pattern, label
        )


def test_whole_pattern_inside_label_reports_full_length():
    forward = build_automaton(b"aba")
    assert longest_pattern_prefix_as_label_suffix(forward, b"xxaba") == 3


def test_direction_is_enforced():
    forward = build_automaton(b"ab")
    reverse = build_automaton(b"ab", reverse=True)
    with pytest.raises(ValueError):
        longest_pattern_prefix_as_label_suffix(reverse, b"a")
    with pytest.raises(ValueError):
        longest_pattern_suffix_as_label_prefix(forward, b"a")


def test_failure_steps_bounded_by_letters_fed():
    rng = random.Random(504)
    for _ in range(50):
        pattern = bytes(rng.choices(b"aab", k=rng.randrange(1, 15)))
        auto = build_automaton(pattern)
        state = 0
        for _ in range(10):
            label = bytes(rng.choices(b"aab", k=rng.randrange(0, 50)))
            state = auto.run(label, state)
        assert auto.failure_steps <= auto.letters_fed
