"""Optimal sorting of simple signed permutations by prefix signed reversals.

The main loop sorts an oriented component whenever one exists, using proper
reversals that are each replayed as one or three prefix flips. When every
component is nonoriented it spends one flip (first element not fixed) or two
flips (first element fixed) to orient one. The breakpoint graph is rebuilt
after every flip.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .breakpoint import (
    AlternatingCycle,
    BreakpointGraph,
    Component,
    build_breakpoint_graph,
    cycles_interleave,
    is_simple,
    leftmost_structures,
)
from .distances import NotSimpleError, psrd_lower_bound, psrd_simple
from .perm import FlipSequence, SignedPermutation, apply_flips, mimic_as_prefix_flips


class PreconditionError(ValueError):
    """A move was requested on a permutation that does not satisfy its hypotheses."""


class SortingError(RuntimeError):
    """An internal invariant failed; indicates a bug, never bad input."""


class MoveKind(str, enum.Enum):
    PROPER_SPLIT = "proper-split"
    LEMMA5_ORIENT = "lemma5-orient"
    LEMMA6_ORIENT = "lemma6-orient"


class MoveClass(str, enum.Enum):
    MERGING = "merging"
    SPLITTING = "splitting"
    OTHER = "other"


@dataclass(frozen=True)
class Checkpoint:
    perm: SignedPermutation
    kind: MoveKind
    flips: FlipSequence


@dataclass
class SortTrace:
    source: SignedPermutation
    flips: list[int] = field(default_factory=list)
    checkpoints: list[Checkpoint] = field(default_factory=list)

    @property
    def final(self) -> SignedPermutation:
        return self.checkpoints[-1].perm if self.checkpoints else self.source

    def record(self, perm: SignedPermutation, kind: MoveKind, flips: FlipSequence) -> None:
        self.flips.extend(flips)
        self.checkpoints.append(Checkpoint(perm, kind, tuple(flips)))

    def lines(self) -> list[str]:
        """One line per flip: the length, the logical move it belongs to, the result."""
        out = []
        pi = self.source
        for cp in self.checkpoints:
            for k in cp.flips:
                pi = pi.flip(k)
                out.append(f"{k} {cp.kind.value} {pi}")
        return out

    def as_tree(self) -> dict:
        return {
            "source": list(self.source.entries),
            "flips": list(self.flips),
            "length": len(self.flips),
            "checkpoints": [
                {"kind": cp.kind.value, "flips": list(cp.flips), "perm": list(cp.perm.entries)}
                for cp in self.checkpoints
            ],
        }


def _require_simple(bg: BreakpointGraph) -> None:
    if not is_simple(bg):
        raise NotSimpleError(f"<{bg.perm}> is not simple: its breakpoint graph has a cycle longer than 2")


def _reversal_on(cycle: AlternatingCycle) -> tuple[int, int]:
    # a reversal acting on black edges a < b is rho(a+1, b)
    a, b = sorted(cycle.black)
    return a + 1, b


def proper_reversals(bg: BreakpointGraph) -> list[tuple[int, int]]:
    """Proper reversals of a simple permutation, one per oriented 2-cycle,
    ordered by the smaller black edge."""
    _require_simple(bg)
    cands = [_reversal_on(c) for c in bg.cycles if c.length == 2 and c.oriented]
    return sorted(cands)


def find_proper_reversal(bg: BreakpointGraph) -> tuple[int, int] | None:
    cands = proper_reversals(bg)
    return cands[0] if cands else None


# -- orientation moves -----------------------------------------------------

def lemma5_move(bg: BreakpointGraph) -> FlipSequence:
    """One flip on the leftmost cycle that orients the leftmost component.

    Requires pi_1 != 1 and no oriented cycle; leaves the lower bound unchanged.
    """
    _require_simple(bg)
    pi = bg.perm
    if pi.entries[0] == 1:
        raise PreconditionError("first element is already 1")
    if bg.has_oriented_cycle():
        raise PreconditionError(f"<{pi}> has an oriented cycle")
    left = leftmost_structures(bg, strict=True)
    # try the far black edge first, then any other one of the leftmost cycle
    candidates = sorted((b for b in left.cycle.black if b != 0), reverse=True)
    for k in candidates:
        after = build_breakpoint_graph(pi.flip(k))
        post = leftmost_structures(after, strict=True)
        if is_simple(after) and post is not None and post.component.oriented:
            return (k,)
    raise SortingError(f"no single flip orients the leftmost component of <{pi}>")


def _lemma6_candidates(bg: BreakpointGraph):
    seen = set()
    for b in range(1, bg.n + 1):
        c1 = bg.cycles[bg.cycle_of_black[b]]
        comp = bg.components[bg.component_of_cycle[c1.id]]
        if c1.trivial or comp.oriented or comp.id in seen:
            continue
        seen.add(comp.id)
        for cid in sorted(bg.adjacency[c1.id]):
            c2 = bg.cycles[cid]
            j, l = sorted(c2.black)
            # black edges j and l are {pi'_{2j}, pi'_{2j+1}}, so flips land at j and l directly
            yield c1, c2, (j, l)


def lemma6_move(bg: BreakpointGraph) -> FlipSequence:
    """Two flips that turn a nonoriented component into an oriented leftmost one.

    Requires pi_1 = 1 and no oriented cycle. The lower bound drops by 2.
    """
    _require_simple(bg)
    pi = bg.perm
    if pi.entries[0] != 1:
        raise PreconditionError("first element is not 1")
    if bg.has_oriented_cycle():
        raise PreconditionError(f"<{pi}> has an oriented cycle")
    if all(c.trivial for c in bg.cycles):
        raise PreconditionError(f"<{pi}> has no nontrivial component")
    g = psrd_lower_bound(pi, bg)
    for _, _, flips in _lemma6_candidates(bg):
        sigma = apply_flips(pi, flips)
        after = build_breakpoint_graph(sigma)
        post = leftmost_structures(after, strict=True)
        if (
            is_simple(after)
            and post is not None
            and post.component.oriented
            and psrd_lower_bound(sigma, after) == g - 2
        ):
            return flips
    raise SortingError(f"no interleaving cycle pair orients a component of <{pi}>")


# -- oriented components ---------------------------------------------------

def _component_greys(bg: BreakpointGraph, comp: Component) -> frozenset[int]:
    return frozenset(g.index for cid in comp.cycles for g in bg.cycles[cid].grey)


def _stranded(bg: BreakpointGraph, greys: frozenset[int]) -> bool:
    """True if some unsorted part of the tracked grey edges sits in a nonoriented component."""
    for k in greys:
        c = bg.cycles[bg.cycle_of_grey[k]]
        if not c.trivial and not bg.components[bg.component_of_cycle[c.id]].oriented:
            return True
    return False


def _finished(bg: BreakpointGraph, greys: frozenset[int]) -> bool:
    return all(bg.cycles[bg.cycle_of_grey[k]].trivial for k in greys)


def _sort_greys(bg: BreakpointGraph, greys: frozenset[int], budget: list[int]):
    """Depth-first search for proper reversals that sort the tracked grey edges.

    Candidates inside the tracked set are tried in order of their left black
    edge; a branch is abandoned when it leaves part of the set nonoriented.
    Returns a list of (i, j, flips, permutation after) or None.
    """
    if _finished(bg, greys):
        return []
    budget[0] -= 1
    if budget[0] < 0:
        raise SortingError("proper reversal search exceeded its node budget")
    pi = bg.perm
    g = psrd_lower_bound(pi, bg)
    for i, j in proper_reversals(bg):
        cycle = bg.cycles[bg.cycle_of_black[j]]
        if not any(x.index in greys for x in cycle.grey):
            continue
        flips = mimic_as_prefix_flips(i, j, pi.n)
        sigma = apply_flips(pi, flips)
        after = build_breakpoint_graph(sigma)
        if after.num_cycles != bg.num_cycles + 1:
            raise SortingError(f"reversal ({i}, {j}) on <{pi}> is not proper")
        if g - psrd_lower_bound(sigma, after) != len(flips):
            raise SortingError(f"reversal ({i}, {j}) on <{pi}> did not lower the bound by {len(flips)}")
        if _stranded(after, greys):
            continue
        rest = _sort_greys(after, greys, budget)
        if rest is not None:
            return [(i, j, flips, sigma)] + rest
    return None


def _sort_component_steps(bg: BreakpointGraph, comp: Component):
    if not comp.oriented:
        raise PreconditionError(f"component {comp.id} of <{bg.perm}> is nonoriented")
    _require_simple(bg)
    steps = _sort_greys(bg, _component_greys(bg, comp), [10_000])
    if steps is None:
        raise SortingError(f"could not sort oriented component {comp.id} of <{bg.perm}>")
    return steps


def sort_oriented_component(bg: BreakpointGraph, comp: Component) -> FlipSequence:
    """Prefix flips that split every cycle of an oriented component into trivial cycles."""
    return tuple(k for _, _, flips, _ in _sort_component_steps(bg, comp) for k in flips)


def _next_oriented_component(bg: BreakpointGraph) -> Component | None:
    # leftmost first: order by the smallest black edge of the component
    best = None
    for comp in bg.components:
        if comp.oriented and not comp.trivial:
            key = min(min(bg.cycles[c].black) for c in comp.cycles)
            if best is None or key < best[0]:
                best = (key, comp)
    return best[1] if best else None


def sort_simple(pi: SignedPermutation) -> SortTrace:
    """Sort a simple permutation with as few prefix flips as possible."""
    bg = build_breakpoint_graph(pi)
    _require_simple(bg)
    target = psrd_simple(pi, bg)
    trace = SortTrace(pi)
    for _ in range(4 * (pi.n + 1)):
        if pi.is_identity():
            break
        comp = _next_oriented_component(bg)
        if comp is not None:
            for _, _, flips, sigma in _sort_component_steps(bg, comp):
                trace.record(sigma, MoveKind.PROPER_SPLIT, flips)
            pi = trace.final
        elif pi.entries[0] != 1:
            flips = lemma5_move(bg)
            pi = apply_flips(pi, flips)
            trace.record(pi, MoveKind.LEMMA5_ORIENT, flips)
        else:
            flips = lemma6_move(bg)
            pi = apply_flips(pi, flips)
            trace.record(pi, MoveKind.LEMMA6_ORIENT, flips)
        bg = build_breakpoint_graph(pi)
        if not is_simple(bg):
            raise SortingError(f"checkpoint <{pi}> is not simple")
    if not pi.is_identity():
        raise SortingError(f"sorting <{trace.source}> did not terminate")
    if apply_flips(trace.source, trace.flips) != pi:
        raise SortingError("flip sequence does not reproduce the trace")
    if len(trace.flips) != target:
        raise SortingError(f"sorted <{trace.source}> in {len(trace.flips)} flips, formula says {target}")
    return trace


def classify_move(bg: BreakpointGraph, k: int) -> MoveClass:
    """Classify the flip of length k: it acts on black edges 0 and k."""
    a = bg.cycles[bg.cycle_of_black[0]]
    b = bg.cycles[bg.cycle_of_black[k]]
    if a.id != b.id:
        return MoveClass.MERGING if not a.trivial and not b.trivial else MoveClass.OTHER
    if a.trivial:
        return MoveClass.OTHER
    after = build_breakpoint_graph(bg.perm.flip(k))
    if after.num_cycles == bg.num_cycles + 1 and after.num_trivial > bg.num_trivial:
        return MoveClass.SPLITTING
    return MoveClass.OTHER
