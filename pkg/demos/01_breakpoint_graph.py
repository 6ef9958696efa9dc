r"""
Breakpoint graph anatomy
========================

Builds the breakpoint graph of ``<-7 3 -1 4 2 8 -6 -5>``, lists its
alternating cycles and components, and shows which grey and black edges are
oriented.
"""

from burntpancake import build_breakpoint_graph, parse_permutation
from burntpancake.breakpoint import dump

pi = parse_permutation("-7 3 -1 4 2 8 -6 -5")
bg = build_breakpoint_graph(pi)

print(dump(bg))

###############################################################################
# Grey edge ``{0, 1}`` spans positions 0..6, seven vertices, so it is oriented;
# grey edge ``{4, 5}`` spans eight vertices and is not.
for value in (0, 4):
    g = bg.grey_edges[value // 2]
    print(f"grey {{{value},{value + 1}}} support [{g.lo},{g.hi}] size {g.support_size} oriented={g.oriented}")

###############################################################################
# Black edges are oriented when the two pancakes they sit between show
# different sides.
oriented_black = [b for b in range(pi.n + 1) if bg.black_edge_oriented(b)]
print("oriented black edges:", oriented_black)
print(f"c(BG) = {bg.num_cycles}, trivial cycles = {bg.num_trivial}")
