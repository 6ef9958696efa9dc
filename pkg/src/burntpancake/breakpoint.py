"""Breakpoint graph of a signed permutation.

Vertices are the positions 0..2n+1 of the doubled permutation. Black edge
``i`` joins positions 2i and 2i+1; grey edge ``k`` joins the positions holding
values 2k and 2k+1. Both edge families are indexed 0..n. Supports and
extents are closed position intervals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .perm import SignedPermutation, double


@dataclass(frozen=True)
class GreyEdge:
    index: int
    lo: int
    hi: int

    @property
    def values(self) -> tuple[int, int]:
        return (2 * self.index, 2 * self.index + 1)

    @property
    def support_size(self) -> int:
        return self.hi - self.lo + 1

    @property
    def oriented(self) -> bool:
        return self.support_size % 2 == 1


def grey_edge_oriented(g: GreyEdge) -> bool:
    return g.oriented


def grey_edges_interleave(a: GreyEdge, b: GreyEdge) -> bool:
    # endpoints of distinct grey edges are distinct positions
    return a.lo < b.lo < a.hi < b.hi or b.lo < a.lo < b.hi < a.hi


@dataclass(frozen=True)
class AlternatingCycle:
    """A cycle alternating black and grey edges.

    ``black`` lists black-edge indices in traversal order starting from the
    smallest; ``grey`` holds the grey edges crossed, in the same order.
    """

    id: int
    black: tuple[int, ...]
    grey: tuple[GreyEdge, ...]

    @property
    def length(self) -> int:
        return len(self.black)

    @property
    def trivial(self) -> bool:
        return len(self.black) == 1

    @property
    def oriented(self) -> bool:
        return any(g.oriented for g in self.grey)

    @property
    def support(self) -> tuple[int, int]:
        lo = min(2 * b for b in self.black)
        hi = max(2 * b + 1 for b in self.black)
        return lo, hi


def cycles_interleave(c1: AlternatingCycle, c2: AlternatingCycle) -> bool:
    if c1.black == c2.black:
        raise ValueError("a cycle cannot interleave with itself")
    return any(grey_edges_interleave(a, b) for a in c1.grey for b in c2.grey)


@dataclass(frozen=True)
class Component:
    id: int
    cycles: tuple[int, ...]
    oriented: bool
    extent: tuple[int, int]
    minimal: bool
    trivial: bool = False

    @property
    def sorted(self) -> bool:
        """True when every cycle is trivial, so nothing is left to do."""
        return self.trivial


@dataclass(frozen=True, eq=False)
class BreakpointGraph:
    perm: SignedPermutation
    doubled: tuple[int, ...]
    cycles: tuple[AlternatingCycle, ...]
    grey_edges: tuple[GreyEdge, ...]
    adjacency: tuple[frozenset[int], ...] = field(repr=False)
    components: tuple[Component, ...] = field(repr=False)

    @property
    def n(self) -> int:
        return self.perm.n

    @property
    def num_cycles(self) -> int:
        return len(self.cycles)

    @property
    def num_trivial(self) -> int:
        return sum(c.trivial for c in self.cycles)

    @property
    def black_edges(self) -> list[tuple[int, int]]:
        d = self.doubled
        return [(d[2 * i], d[2 * i + 1]) for i in range(self.n + 1)]

    @cached_property
    def cycle_of_black(self) -> tuple[int, ...]:
        out = [0] * (self.n + 1)
        for c in self.cycles:
            for b in c.black:
                out[b] = c.id
        return tuple(out)

    @cached_property
    def cycle_of_grey(self) -> tuple[int, ...]:
        out = [0] * (self.n + 1)
        for c in self.cycles:
            for g in c.grey:
                out[g.index] = c.id
        return tuple(out)

    @cached_property
    def component_of_cycle(self) -> tuple[int, ...]:
        out = [0] * len(self.cycles)
        for comp in self.components:
            for cid in comp.cycles:
                out[cid] = comp.id
        return tuple(out)

    def black_edge_oriented(self, b: int) -> bool:
        return black_edge_oriented(self.perm, b)

    def has_oriented_cycle(self) -> bool:
        return any(c.oriented for c in self.cycles)

    def is_simple(self) -> bool:
        return is_simple(self)


def build_breakpoint_graph(pi: SignedPermutation) -> BreakpointGraph:
    d = double(pi)
    n = pi.n
    pos = [0] * len(d)
    for p, v in enumerate(d):
        pos[v] = p
    greys = []
    for k in range(n + 1):
        a, b = pos[2 * k], pos[2 * k + 1]
        greys.append(GreyEdge(k, min(a, b), max(a, b)))

    seen = [False] * (n + 1)
    raw = []
    for start in range(n + 1):
        if seen[start]:
            continue
        black, grey = [], []
        p = 2 * start
        while True:
            seen[p // 2] = True
            black.append(p // 2)
            v = d[p ^ 1]
            grey.append(greys[v // 2])
            p = pos[v ^ 1]
            if p == 2 * start:
                break
        raw.append((tuple(black), tuple(grey)))
    cycles = tuple(AlternatingCycle(i, b, g) for i, (b, g) in enumerate(raw))

    adjacency = [set() for _ in cycles]
    nontrivial = [c for c in cycles if not c.trivial]
    for x in range(len(nontrivial)):
        for y in range(x + 1, len(nontrivial)):
            a, b = nontrivial[x], nontrivial[y]
            if cycles_interleave(a, b):
                adjacency[a.id].add(b.id)
                adjacency[b.id].add(a.id)
    adjacency = tuple(frozenset(s) for s in adjacency)
    return BreakpointGraph(
        perm=pi,
        doubled=d,
        cycles=cycles,
        grey_edges=tuple(greys),
        adjacency=adjacency,
        components=_components(cycles, adjacency),
    )


def _components(cycles, adjacency) -> tuple[Component, ...]:
    comp_of = [-1] * len(cycles)
    groups = []
    for c in cycles:
        if comp_of[c.id] >= 0:
            continue
        stack, members = [c.id], []
        comp_of[c.id] = len(groups)
        while stack:
            x = stack.pop()
            members.append(x)
            for y in adjacency[x]:
                if comp_of[y] < 0:
                    comp_of[y] = len(groups)
                    stack.append(y)
        groups.append(tuple(sorted(members)))

    comps = []
    for cid, members in enumerate(groups):
        supports = [cycles[m].support for m in members]
        extent = (min(s[0] for s in supports), max(s[1] for s in supports))
        minimal = all(
            comp_of[c.id] == cid
            for c in cycles
            if extent[0] <= c.support[0] and c.support[1] <= extent[1]
        )
        comps.append(
            Component(
                id=cid,
                cycles=members,
                oriented=any(cycles[m].oriented for m in members),
                extent=extent,
                minimal=minimal,
                trivial=all(cycles[m].trivial for m in members),
            )
        )
    return tuple(comps)


def components(bg: BreakpointGraph) -> tuple[Component, ...]:
    return bg.components


def is_simple(bg: BreakpointGraph) -> bool:
    return all(c.length <= 2 for c in bg.cycles)


def black_edge_oriented(pi: SignedPermutation, b: int) -> bool:
    """Black edge b sits between pi_b and pi_{b+1}; the sentinels count as positive."""
    n = pi.n
    if not 0 <= b <= n:
        raise ValueError(f"black edge {b} out of range 0..{n}")
    left = pi.entries[b - 1] if b >= 1 else 1
    right = pi.entries[b] if b < n else 1
    return (left > 0) != (right > 0)


@dataclass(frozen=True)
class Leftmost:
    cycle: AlternatingCycle
    component: Component
    strict: bool  # True when the cycle holds black edge 0


def leftmost_structures(bg: BreakpointGraph, strict: bool = False) -> Leftmost | None:
    """The leftmost nontrivial cycle and its component.

    The cycle through black edge 0 is returned when it is nontrivial. Otherwise,
    unless ``strict`` is set, fall back to the cycle holding the smallest black
    edge among nontrivial cycles. Returns None when there is no such cycle.
    """
    first = bg.cycles[bg.cycle_of_black[0]]
    if not first.trivial:
        return Leftmost(first, bg.components[bg.component_of_cycle[first.id]], True)
    if strict:
        return None
    for b in range(1, bg.n + 1):
        c = bg.cycles[bg.cycle_of_black[b]]
        if not c.trivial:
            return Leftmost(c, bg.components[bg.component_of_cycle[c.id]], False)
    return None


def dump(bg: BreakpointGraph) -> str:
    """Line-oriented description used by ``analyze`` and golden tests."""
    lines = [
        f"perm {bg.perm}",
        "doubled " + " ".join(map(str, bg.doubled)),
        "black " + " ".join(f"{i}:{a}-{b}" for i, (a, b) in enumerate(bg.black_edges)),
        "grey " + " ".join(f"{g.index}:[{g.lo},{g.hi}]{'o' if g.oriented else 'n'}" for g in bg.grey_edges),
    ]
    for c in bg.cycles:
        lines.append(
            f"cycle {c.id} length {c.length} black {' '.join(map(str, c.black))} "
            f"{'oriented' if c.oriented else 'nonoriented'}"
        )
    for comp in bg.components:
        flags = ["oriented" if comp.oriented else "nonoriented"]
        if comp.minimal:
            flags.append("minimal")
        if comp.trivial:
            flags.append("sorted")
        lines.append(
            f"component {comp.id} cycles {' '.join(map(str, comp.cycles))} "
            f"extent [{comp.extent[0]},{comp.extent[1]}] {' '.join(flags)}"
        )
    return "\n".join(lines) + "\n"


def to_tree(bg: BreakpointGraph) -> dict:
    return {
        "perm": list(bg.perm.entries),
        "doubled": list(bg.doubled),
        "cycles": [
            {"id": c.id, "black": list(c.black), "grey": [g.index for g in c.grey],
             "length": c.length, "oriented": c.oriented}
            for c in bg.cycles
        ],
        "components": [
            {"id": k.id, "cycles": list(k.cycles), "oriented": k.oriented,
             "extent": list(k.extent), "minimal": k.minimal, "sorted": k.trivial}
            for k in bg.components
        ],
        "c": bg.num_cycles,
        "c1": bg.num_trivial,
        "simple": is_simple(bg),
    }
