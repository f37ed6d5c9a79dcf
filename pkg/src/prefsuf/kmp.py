"""Streaming pattern automata built on the failure function.

A ``KmpAutomaton`` scans one letter at a time; its state is the length of the
longest prefix of the automaton's pattern that is a suffix of the letters fed
so far. The reverse flavor runs over the reversed pattern, which turns
"longest pattern prefix ending here" into "longest pattern suffix starting
here" for labels fed back to front.

Transitions are resolved from the failure table on the fly; there is no
per-letter transition matrix, so memory stays O(m) for any alphabet.
"""

from .text_core import border_array


class KmpAutomaton:
    """Failure-function automaton of a pattern (or of its reverse).

    ``letters_fed`` and ``failure_steps`` are instrumentation tallies; the
    failure-step total never exceeds the letters fed from state 0, which is
    the usual linear-time argument.
    """

    __slots__ = ("pattern", "reverse", "failure", "m", "letters_fed", "failure_steps")

    def __init__(self, pattern: bytes, reverse: bool = False):
        if len(pattern) == 0:
            raise ValueError("empty pattern")
        scanned = bytes(pattern)[::-1] if reverse else bytes(pattern)
        self.pattern = scanned
        self.reverse = reverse
        self.failure = border_array(scanned)
        self.m = len(scanned)
        self.letters_fed = 0
        self.failure_steps = 0

    def feed(self, state: int, letter: int) -> int:
        """Consume one letter from ``state``; returns the next state in [0, m].

        A full-match state m is first reduced through the failure table, so
        feeding can continue past a match.
        """
        pattern = self.pattern
        failure = self.failure
        self.letters_fed += 1
        if state == self.m:
            state = failure[state - 1]
            self.failure_steps += 1
        while state > 0 and pattern[state] != letter:
            state = failure[state - 1]
            self.failure_steps += 1
        if pattern[state] == letter:
            state += 1
        return state

    def run(self, data: bytes, state: int = 0) -> int:
        """Feed every letter of ``data`` in order and return the final state.

        Equivalent to folding ``feed`` over the letters (counters included),
        just without the per-letter call overhead.
        """
        pattern = self.pattern
        failure = self.failure
        m = self.m
        steps = 0
        for letter in data:
            if state == m:
                state = failure[state - 1]
                steps += 1
            while state > 0 and pattern[state] != letter:
                state = failure[state - 1]
                steps += 1
            if pattern[state] == letter:
                state += 1
        self.letters_fed += len(data)
        self.failure_steps += steps
        return state


def build_automaton(pattern: bytes, reverse: bool = False) -> KmpAutomaton:
    return KmpAutomaton(pattern, reverse=reverse)


def longest_pattern_prefix_as_label_suffix(automaton: KmpAutomaton, label: bytes) -> int:
    """Length of the longest suffix of ``label`` that is a prefix of the pattern.

    Requires a forward automaton; the answer is simply the state after
    scanning the whole label.
    """
    if automaton.reverse:
        raise ValueError("forward automaton required")
    return automaton.run(label)


def longest_pattern_suffix_as_label_prefix(automaton: KmpAutomaton, label: bytes) -> int:
    """Length of the longest prefix of ``label`` that is a suffix of the pattern.

    Requires a reverse automaton; the label is scanned back to front.
    """
    if not automaton.reverse:
        raise ValueError("reverse automaton required")
    return automaton.run(label[::-1])
