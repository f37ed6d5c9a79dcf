"""
Querying occurrences across a splice
====================================

Cut a text after position i, resume it at position j, and ask where the
whole text occurs in the spliced result. The index answers in constant
time with an arithmetic progression (start, step, count); this script
expands a handful of answers and checks one against a plain substring
scan.
"""

from prefsuf import PrefSufIndex, expand, naive_prefsuf

text = b"aabaabaabaaba"
idx = PrefSufIndex(text)
print(f"text = {text.decode()!r}, period = {idx.period_info.p}")
print()

# Each row: the cut pair, the spliced string, the encoded answer, and
# the expanded positions.
pairs = [
    (9, 4),    # overlap is a multiple of the period: three occurrences
    (6, 4),    # overlap equals the period: the two endpoints only
    (9, 0),    # nothing deleted, a prefix repeated: one occurrence at the end
    (9, 6),    # overlap breaks the period and neither endpoint survives
    (3, 4),    # j = i + 1 reassembles the text unchanged
    (2, 9),    # j far beyond i: spliced string too short
]
for i, j in pairs:
    spliced = text[: i + 1] + text[j:]
    answer = idx.query(i, j)
    print(f"query({i},{j})  T' = {spliced.decode()!r}")
    print(f"  progression {tuple(answer)} -> positions {expand(answer)}")

# The contract: expanding the progression gives exactly the positions a
# naive scan of the spliced string finds.
i, j = 9, 4
assert expand(idx.query(i, j)) == naive_prefsuf(text, i, j)
print()
print("expanded answer matches a naive scan of the spliced string")

# An aperiodic text never has middle occurrences, so every answer has at
# most two positions: 0 if the text starts the splice, i-j+1 if it ends it.
text = b"aababaab"
idx = PrefSufIndex(text)
print()
print(f"text = {text.decode()!r}, periodic = {idx.period_info.periodic}")
for i, j in [(5, 1), (6, 2), (4, 3)]:
    print(f"  query({i},{j}) -> positions {expand(idx.query(i, j))}")
