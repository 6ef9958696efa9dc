r"""
Sorting simple permutations optimally
=====================================

A permutation is simple when its breakpoint graph has no cycle longer than
two. For those, the sorter reaches the exact distance, and each logical move
is labelled with the reason it was taken.
"""

import random

from burntpancake import parse_permutation, psrd_simple, sort_simple
from burntpancake.cli import random_permutation

for text in ("3 2 1", "1 4 3 2", "-2 -3 1"):
    pi = parse_permutation(text)
    trace = sort_simple(pi)
    print(f"<{pi}>: {len(trace.flips)} flips (formula {psrd_simple(pi)})")
    for line in trace.lines():
        print("   ", line)

###############################################################################
# A seeded random simple permutation of length 7.
pi = random_permutation(7, random.Random(2024), simple=True)
trace = sort_simple(pi)
print(f"<{pi}> sorted by {trace.flips}")
