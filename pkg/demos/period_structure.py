"""
Borders, periods, and why occurrence lists are evenly spaced
============================================================

A border of a string is a proper prefix that is also a suffix. The
shortest period is the string length minus the longest border length.
This script prints both views side by side for a few texts, then shows
the even spacing that periods force on occurrence lists.
"""

from prefsuf import border_array, naive_occurrences, period

texts = [b"aabaabaabaaba", b"abaababaab", b"aaaaaa", b"abcdef"]

for text in texts:
    borders = border_array(text)
    info = period(text)
    longest = borders[-1]
    print(f"{text.decode()!r}")
    print(f"  border array   {borders}")
    print(f"  longest border {longest} -> period {len(text) - longest}")
    print(f"  period(text)   p={info.p} periodic={info.periodic}")

# A string is called periodic when its period fits twice into it.
# For those, occurrences of the string in any larger host line up at
# exact multiples of the period. Watch the spacing:
host = b"aabaabaabaabaabaaba"
needle = b"aabaabaabaaba"
occ = naive_occurrences(needle, host)
print()
print(f"occurrences of {needle.decode()!r} in {host.decode()!r}: {occ}")
print(f"gaps: {[b - a for a, b in zip(occ, occ[1:])]}  (the period of the needle)")
