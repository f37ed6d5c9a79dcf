"""
Matching a pattern across graph edges
=====================================

Nodes carry string labels; an edge (u, v) matches a pattern when some
nonempty suffix of u's label glued to a nonempty prefix of v's label
spells the whole pattern. The matcher reports, per edge, every split
length (how many pattern letters come from u) as one progression.
"""

from prefsuf import BipartiteMatcher, Progression, expand, parse_graph

# The smallest interesting case: ACTA splits across GAC -> TAG in one
# way only (AC from the left label, TA from the right).
matcher = BipartiteMatcher(b"ACTA")
graph = parse_graph(b"U\tu1\tGAC\nV\tv1\tTAG\nE\tu1\tv1\n")
for m in matcher.match_all(graph):
    print(f"{m.u_id} -> {m.v_id}: split lengths {expand(m.splits)}")

# With periodic labels one edge can match many ways at once. Every
# answer is still a single evenly spaced run, never an arbitrary set.
pattern = b"abababab"
text = b"""\
U\tleft\txxabababab
V\tright\tababababyy
V\tshort\tab
E\tleft\tright
E\tleft\tshort
"""
matcher = BipartiteMatcher(pattern)
graph = parse_graph(text)
print()
print(f"pattern {pattern.decode()!r}")
for m in matcher.match_all(graph):
    splits = m.splits
    print(f"{m.u_id} -> {m.v_id}: {tuple(splits)} -> {expand(splits)}")

# The matcher does constant work per edge on top of scanning each label
# once, so edge count and total label length both scale linearly.
print()
print(f"queries issued: {matcher.index.query_count} (one per edge)")
print(f"letters scanned: {matcher.forward.letters_fed + matcher.backward.letters_fed}")
