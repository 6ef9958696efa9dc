"""Machine checks of the distance formulas and the structural lemmas.

Every checker returns a report whose ``violations`` list holds human-readable
descriptions; an empty list means the statement held on every case examined.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .breakpoint import (
    BreakpointGraph,
    build_breakpoint_graph,
    cycles_interleave,
    grey_edges_interleave,
    is_simple,
    leftmost_structures,
)
from .distances import prefix_exchange_distance, psrd_lower_bound, psrd_simple
from .oracle import (
    EXCHANGES,
    SIGNED,
    OracleTable,
    all_permutations,
    all_signed_permutations,
    build_oracle,
    check_cap,
    enumerate_simple,
)
from .perm import SignedPermutation, apply_flips, apply_signed_reversal, inverse
from .sorter import (
    MoveClass,
    MoveKind,
    SortingError,
    classify_move,
    lemma5_move,
    lemma6_move,
    sort_simple,
)


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    violations: list[str] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, msg: str) -> None:
        self.violations.append(msg)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = "".join(f" {k}={v}" for k, v in self.notes.items())
        return f"{status} {self.name}: {self.cases} cases, {len(self.violations)} violations{extra}"

    def as_tree(self) -> dict:
        return {"name": self.name, "ok": self.ok, "cases": self.cases,
                "violations": list(self.violations), **self.notes}


# -- distance formulas -------------------------------------------------------

def check_exchange_formula(n: int, table: OracleTable | None = None) -> CheckResult:
    table = table or build_oracle(n, EXCHANGES)
    res = CheckResult(f"ped formula n={n}")
    for pi in all_permutations(n):
        res.cases += 1
        f, d = prefix_exchange_distance(pi), table.distance(pi)
        if f != d:
            res.fail(f"<{pi}>: formula {f} != bfs {d}")
    return res


def check_lower_bound(n: int, table: OracleTable | None = None) -> CheckResult:
    table = table or build_oracle(n, SIGNED)
    res = CheckResult(f"lower bound n={n}")
    tight = strict = 0
    for pi in all_signed_permutations(n):
        res.cases += 1
        g, d = psrd_lower_bound(pi), table.distance(pi)
        if g > d:
            res.fail(f"<{pi}>: bound {g} > bfs {d}")
        tight += g == d
        strict += g < d
    res.notes.update(tight=tight, strict=strict)
    return res


def check_simple_formula(n: int, table: OracleTable | None = None) -> CheckResult:
    """psrd_simple = BFS distance = sorter length, traces fold to the identity,
    checkpoints are simple and each logical move has the expected bound change."""
    table = table or build_oracle(n, SIGNED)
    res = CheckResult(f"simple formula and sorter n={n}")
    for pi in enumerate_simple(n):
        res.cases += 1
        f, d = psrd_simple(pi), table.distance(pi)
        try:
            trace = sort_simple(pi)
        except SortingError as exc:
            res.fail(f"<{pi}>: sorter failed: {exc}")
            continue
        if not f == d == len(trace.flips):
            res.fail(f"<{pi}>: formula {f}, bfs {d}, sorter {len(trace.flips)}")
        if not apply_flips(pi, trace.flips).is_identity():
            res.fail(f"<{pi}>: flips {trace.flips} do not sort")
        prev = pi
        for cp in trace.checkpoints:
            if not is_simple(build_breakpoint_graph(cp.perm)):
                res.fail(f"<{pi}>: checkpoint <{cp.perm}> not simple")
            drop = psrd_lower_bound(prev) - psrd_lower_bound(cp.perm)
            expected = {MoveKind.PROPER_SPLIT: len(cp.flips), MoveKind.LEMMA5_ORIENT: 0,
                        MoveKind.LEMMA6_ORIENT: 2}[cp.kind]
            if drop != expected:
                res.fail(f"<{pi}>: {cp.kind.value} to <{cp.perm}> lowered the bound by {drop}, expected {expected}")
            prev = cp.perm
    return res


@dataclass
class VerificationReport:
    n: int
    checks: list[CheckResult]
    max_distance: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def lines(self) -> list[str]:
        out = [c.summary() for c in self.checks]
        out += [f"info max distance {k} n={self.n}: {v}" for k, v in self.max_distance.items()]
        return out

    def as_tree(self) -> dict:
        return {"n": self.n, "ok": self.ok, "checks": [c.as_tree() for c in self.checks],
                "max_distance": dict(self.max_distance)}


def verify_theorems(n: int, generators: str | None = None, lemma9: bool = False,
                    max_n: int | None = None) -> VerificationReport:
    """Run the formula checks for n against freshly built oracles.

    ``generators`` restricts the run to one generator set; None runs both.
    """
    checks, maxd = [], {}
    if generators in (None, EXCHANGES):
        check_cap(n, EXCHANGES, max_n)
        t = build_oracle(n, EXCHANGES, max_n)
        maxd[EXCHANGES] = t.max_distance
        checks.append(check_exchange_formula(n, t))
    if generators in (None, SIGNED):
        check_cap(n, SIGNED, max_n)
        t = build_oracle(n, SIGNED, max_n)
        maxd[SIGNED] = t.max_distance
        checks.append(check_lower_bound(n, t))
        checks.append(check_simple_formula(n, t))
    if lemma9:
        checks.append(check_lemma9(n))
    return VerificationReport(n, checks, maxd)


# -- Lemma 9 -----------------------------------------------------------------

LEMMA9_CAP = 5


def _leftmost_is_2cycle(bg: BreakpointGraph) -> bool:
    return bg.cycles[bg.cycle_of_black[0]].length == 2


def check_lemma9(n: int, depth: int | None = None, cap: int = LEMMA9_CAP) -> CheckResult:
    """Search all merging/splitting move sequences from every simple permutation
    that does not fix 1 and has a nonoriented leftmost component.

    Wherever the leftmost cycle is a 2-cycle the state must be simple with a
    nonoriented leftmost component. States still expandable at the depth bound
    are counted in ``notes['depth_exceeded']``.
    """
    if n > cap:
        raise ValueError(f"n={n} is over the lemma 9 cap of {cap}")
    depth = 2 * (n + 1) if depth is None else depth
    res = CheckResult(f"lemma 9 n={n}")
    starts = states = exceeded = 0
    for pi in enumerate_simple(n, max_n=cap):
        bg = build_breakpoint_graph(pi)
        if pi.entries[0] == 1 or leftmost_structures(bg, strict=True).component.oriented:
            continue
        starts += 1
        seen = {pi}
        queue = deque([(pi, bg, 0)])
        while queue:
            sigma, sbg, d = queue.popleft()
            states += 1
            if _leftmost_is_2cycle(sbg):
                res.cases += 1
                if not is_simple(sbg):
                    res.fail(f"from <{pi}>: <{sigma}> has a leftmost 2-cycle but is not simple")
                elif leftmost_structures(sbg, strict=True).component.oriented:
                    res.fail(f"from <{pi}>: <{sigma}> has an oriented leftmost component")
            for k in range(1, n + 1):
                if classify_move(sbg, k) is MoveClass.OTHER:
                    continue
                if d == depth:
                    exceeded += 1
                    break
                tau = sigma.flip(k)
                if tau not in seen:
                    seen.add(tau)
                    queue.append((tau, build_breakpoint_graph(tau), d + 1))
    res.notes.update(starts=starts, states=states, depth_exceeded=exceeded)
    return res


# -- structural lemmas -------------------------------------------------------

def check_every_grey_edge_interleaves(n: int) -> CheckResult:
    res = CheckResult(f"lemma 3 n={n}")
    for pi in all_signed_permutations(n):
        bg = build_breakpoint_graph(pi)
        for c in bg.cycles:
            if c.trivial:
                continue
            for g in c.grey:
                res.cases += 1
                if not any(grey_edges_interleave(g, h) for h in bg.grey_edges if h.index != g.index):
                    res.fail(f"<{pi}>: grey edge {g.index} interleaves with nothing")
    return res


def _partition(bg: BreakpointGraph, by: str) -> set[frozenset]:
    """Components as sets of cycles, each cycle named by its black or grey set."""
    def name(cid):
        c = bg.cycles[cid]
        return frozenset(c.black) if by == "black" else frozenset(g.index for g in c.grey)
    return {frozenset(name(cid) for cid in comp.cycles) for comp in bg.components}


def check_inverse_components(n: int) -> CheckResult:
    """Cycles of BG(pi) map to cycles of BG(pi^-1) with black and grey swapped,
    components map onto components, and orientation is preserved."""
    res = CheckResult(f"lemma 7 n={n}")
    for pi in all_signed_permutations(n):
        res.cases += 1
        bg, ibg = build_breakpoint_graph(pi), build_breakpoint_graph(inverse(pi))
        cyc = {frozenset(g.index for g in c.grey) for c in bg.cycles}
        icyc = {frozenset(c.black) for c in ibg.cycles}
        if cyc != icyc:
            res.fail(f"<{pi}>: cycles do not correspond under inversion")
            continue
        if _partition(bg, "grey") != _partition(ibg, "black"):
            res.fail(f"<{pi}>: component partitions differ under inversion")
            continue
        ori = {frozenset(g.index for cid in k.cycles for g in bg.cycles[cid].grey): k.oriented
               for k in bg.components}
        iori = {frozenset(b for cid in k.cycles for b in ibg.cycles[cid].black): k.oriented
                for k in ibg.components}
        if ori != iori:
            res.fail(f"<{pi}>: component orientation changes under inversion")
    return res


def check_oriented_black_edges(n: int) -> CheckResult:
    res = CheckResult(f"lemma 8 n={n}")
    for pi in all_signed_permutations(n):
        bg = build_breakpoint_graph(pi)
        for comp in bg.components:
            res.cases += 1
            blacks = [b for cid in comp.cycles for b in bg.cycles[cid].black]
            has_black = any(bg.black_edge_oriented(b) for b in blacks)
            if comp.oriented != has_black:
                res.fail(f"<{pi}>: component {comp.id} oriented={comp.oriented}, oriented black edge={has_black}")
    return res


def check_reversal_flips_interleaving(n: int) -> CheckResult:
    """A reversal acting on a 2-cycle C of a simple permutation flips the
    orientation of every cycle interleaving C. Cycles are matched across the
    move by their grey edges, which the move does not disturb."""
    res = CheckResult(f"lemma 2 n={n}")
    for pi in enumerate_simple(n):
        bg = build_breakpoint_graph(pi)
        for c in bg.cycles:
            if c.length != 2:
                continue
            a, b = sorted(c.black)
            after = build_breakpoint_graph(apply_signed_reversal(pi, a + 1, b))
            by_greys = {frozenset(g.index for g in x.grey): x for x in after.cycles}
            for d in bg.cycles:
                if d.id == c.id or not cycles_interleave(c, d):
                    continue
                res.cases += 1
                survivor = by_greys.get(frozenset(g.index for g in d.grey))
                if survivor is None:
                    res.fail(f"<{pi}>: cycle {d.black} did not survive reversal ({a + 1}, {b})")
                elif survivor.oriented == d.oriented:
                    res.fail(f"<{pi}>: reversal ({a + 1}, {b}) kept the orientation of cycle {d.black}")
    return res


def check_orientation_moves(n: int) -> CheckResult:
    """Single-flip and two-flip orientation moves: post-state simple and
    oriented, bound change 0 and 2 respectively; after the single flip a
    proper reversal exists."""
    res = CheckResult(f"lemmas 5/6 n={n}")
    for pi in enumerate_simple(n):
        bg = build_breakpoint_graph(pi)
        if bg.has_oriented_cycle() or pi.is_identity():
            continue
        res.cases += 1
        g = psrd_lower_bound(pi, bg)
        if pi.entries[0] != 1:
            flips, drop = lemma5_move(bg), 0
        else:
            flips, drop = lemma6_move(bg), 2
        sigma = apply_flips(pi, flips)
        after = build_breakpoint_graph(sigma)
        left = leftmost_structures(after, strict=True)
        if not is_simple(after):
            res.fail(f"<{pi}>: move {flips} gives non-simple <{sigma}>")
        elif left is None or not left.component.oriented:
            res.fail(f"<{pi}>: move {flips} leaves the leftmost component of <{sigma}> nonoriented")
        elif g - psrd_lower_bound(sigma, after) != drop:
            res.fail(f"<{pi}>: move {flips} changed the bound by {g - psrd_lower_bound(sigma, after)}")
        elif not after.has_oriented_cycle():
            res.fail(f"<{pi}>: no proper reversal after move {flips}")
    return res


def check_proper_moves(n: int) -> CheckResult:
    """Each proper-split move of the sorter lowers the bound by its flip count (1 or 3)."""
    res = CheckResult(f"lemma 4 n={n}")
    for pi in enumerate_simple(n):
        prev = pi
        for cp in sort_simple(pi).checkpoints:
            if cp.kind is MoveKind.PROPER_SPLIT:
                res.cases += 1
                drop = psrd_lower_bound(prev) - psrd_lower_bound(cp.perm)
                if drop != len(cp.flips) or len(cp.flips) not in (1, 3):
                    res.fail(f"<{pi}>: proper move {cp.flips} to <{cp.perm}> lowered the bound by {drop}")
            prev = cp.perm
    return res


LEMMA_CHECKS = {
    "lemma2": check_reversal_flips_interleaving,
    "lemma3": check_every_grey_edge_interleaves,
    "lemma4": check_proper_moves,
    "lemma5/6": check_orientation_moves,
    "lemma7": check_inverse_components,
    "lemma8": check_oriented_black_edges,
    "lemma9": check_lemma9,
}
