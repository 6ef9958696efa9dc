"""Closed-form distances and bounds.

* prefix exchange distance of an unsigned permutation (exact),
* a lower bound on the prefix signed reversal distance of any signed permutation,
* the exact prefix signed reversal distance of a simple permutation.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .breakpoint import BreakpointGraph, build_breakpoint_graph, is_simple, leftmost_structures
from .perm import PermutationError, SignedPermutation, graph_cycles


class NotSimpleError(ValueError):
    """The operation is only defined for simple permutations."""


def _first_term(pi: SignedPermutation) -> int:
    return 0 if pi.entries[0] == 1 else 2


def prefix_exchange_distance(pi: SignedPermutation) -> int:
    if not pi.is_unsigned():
        raise PermutationError("prefix exchange distance needs an unsigned permutation")
    cycles = graph_cycles(pi)
    c1 = sum(len(c) == 1 for c in cycles)
    return pi.n + len(cycles) - 2 * c1 - _first_term(pi)


def _bound(pi: SignedPermutation, bg: BreakpointGraph) -> int:
    return pi.n + 1 + bg.num_cycles - 2 * bg.num_trivial - _first_term(pi)


def psrd_lower_bound(pi: SignedPermutation, bg: BreakpointGraph | None = None) -> int:
    return _bound(pi, bg or build_breakpoint_graph(pi))


def hurdle_term(pi: SignedPermutation, bg: BreakpointGraph | None = None) -> int:
    """1 when pi_1 != 1 and the leftmost component is nonoriented, else 0."""
    if pi.entries[0] == 1:
        return 0
    bg = bg or build_breakpoint_graph(pi)
    # pi_1 != 1 means black edge 0 is in a nontrivial cycle
    left = leftmost_structures(bg, strict=True)
    return 0 if left.component.oriented else 1


def psrd_simple(pi: SignedPermutation, bg: BreakpointGraph | None = None) -> int:
    bg = bg or build_breakpoint_graph(pi)
    if not is_simple(bg):
        raise NotSimpleError(f"<{pi}> is not simple: its breakpoint graph has a cycle longer than 2")
    return _bound(pi, bg) + hurdle_term(pi, bg)


@dataclass(frozen=True)
class DistanceReport:
    n: int
    c_bg: int
    c1_bg: int
    first_element_fixed: bool
    simple: bool
    lower_bound: int
    t: int | None = None
    formula_value: int | None = None
    c_gamma: int | None = None
    c1_gamma: int | None = None
    ped: int | None = None

    def as_dict(self) -> dict:
        return asdict(self)

    def as_text(self) -> str:
        labels = {"lower_bound": "g", "formula_value": "psrd"}
        rows = [(labels.get(k, k), v) for k, v in asdict(self).items() if v is not None]
        if not self.simple:
            rows.append(("note", "not simple: formula unavailable, lower bound only"))
        return "\n".join(f"{k}: {_fmt(v)}" for k, v in rows) + "\n"


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def distance_report(pi: SignedPermutation) -> DistanceReport:
    bg = build_breakpoint_graph(pi)
    simple = is_simple(bg)
    extra = {}
    if pi.is_unsigned():
        cycles = graph_cycles(pi)
        extra = dict(
            c_gamma=len(cycles),
            c1_gamma=sum(len(c) == 1 for c in cycles),
            ped=prefix_exchange_distance(pi),
        )
    if simple:
        t = hurdle_term(pi, bg)
        extra.update(t=t, formula_value=_bound(pi, bg) + t)
    return DistanceReport(
        n=pi.n,
        c_bg=bg.num_cycles,
        c1_bg=bg.num_trivial,
        first_element_fixed=pi.entries[0] == 1,
        simple=simple,
        lower_bound=_bound(pi, bg),
        **extra,
    )
