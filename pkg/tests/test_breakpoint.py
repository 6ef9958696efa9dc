from pathlib import Path

import pytest
from hypothesis import given

from burntpancake.breakpoint import (
    GreyEdge,
    black_edge_oriented,
    build_breakpoint_graph,
    components,
    cycles_interleave,
    dump,
    grey_edge_oriented,
    is_simple,
    leftmost_structures,
)
from burntpancake.oracle import all_signed_permutations
from burntpancake.perm import SignedPermutation, parse_permutation as P

from conftest import signed_perms

GOLDEN = Path(__file__).parent / "golden"
FIG2 = P("-7 3 -1 4 2 8 -6 -5")


def cycles_by_union_find(pi):
    """Cycle partition of the black edges from explicit edge lists, by union-find on values."""
    d = [0]
    for x in pi.entries:
        d += [2 * x - 1, 2 * x] if x > 0 else [-2 * x, -2 * x - 1]
    d.append(2 * pi.n + 1)
    parent = list(range(len(d)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = [(d[2 * i], d[2 * i + 1]) for i in range(pi.n + 1)]
    edges += [(2 * k, 2 * k + 1) for k in range(pi.n + 1)]
    for a, b in edges:
        parent[find(a)] = find(b)
    groups = {}
    for i in range(pi.n + 1):
        groups.setdefault(find(d[2 * i]), set()).add(i)
    return sorted(sorted(g) for g in groups.values())


def test_figure_two_has_two_cycles():
    bg = build_breakpoint_graph(FIG2)
    assert bg.num_cycles == 2
    lengths = sorted(c.length for c in bg.cycles)
    assert lengths == [1, 8]
    trivial = next(c for c in bg.cycles if c.trivial)
    assert bg.black_edges[trivial.black[0]] == (11, 10)


def test_identity_all_trivial():
    for n in (1, 4, 7):
        bg = build_breakpoint_graph(SignedPermutation.identity(n))
        assert bg.num_cycles == bg.num_trivial == n + 1


@given(signed_perms())
def test_cycle_partition_matches_union_find(pi):
    bg = build_breakpoint_graph(pi)
    assert sorted(sorted(c.black) for c in bg.cycles) == cycles_by_union_find(pi)


@given(signed_perms())
def test_cycle_invariants(pi):
    bg = build_breakpoint_graph(pi)
    assert sum(c.length for c in bg.cycles) == pi.n + 1
    assert len(bg.grey_edges) == pi.n + 1
    # trivial exactly when the black edge is also a grey edge
    for c in bg.cycles:
        if c.trivial:
            a, b = bg.black_edges[c.black[0]]
            assert {a, b} == set(c.grey[0].values)
    assert bg.num_trivial == sum(
        1 for a, b in bg.black_edges if max(a, b) % 2 == 1 and abs(a - b) == 1)


def grey(bg, value):
    return bg.grey_edges[value // 2]


def test_grey_orientation_figure_two():
    bg = build_breakpoint_graph(FIG2)
    assert grey_edge_oriented(grey(bg, 0))
    assert not grey_edge_oriented(grey(bg, 4))


def test_grey_orientation_single_negative():
    bg = build_breakpoint_graph(P("-1"))
    g = grey(bg, 0)
    assert (g.lo, g.hi, g.support_size) == (0, 2, 3)
    assert grey_edge_oriented(g)


def test_black_edge_orientation():
    assert black_edge_oriented(FIG2, 1)
    assert not any(black_edge_oriented(SignedPermutation.identity(4), b) for b in range(5))
    assert black_edge_oriented(P("-1"), 0)
    assert black_edge_oriented(P("-1"), 1)


def cycle_with(bg, black):
    return bg.cycles[bg.cycle_of_black[black]]


def test_interleave_321():
    bg = build_breakpoint_graph(P("3 2 1"))
    a, b = cycle_with(bg, 0), cycle_with(bg, 1)
    assert cycles_interleave(a, b)
    assert (a.grey[-1].lo, a.grey[-1].hi) == (0, 5)
    assert (grey(bg, 2).lo, grey(bg, 2).hi) == (3, 6)


def test_trivial_cycle_interleaves_nothing():
    bg = build_breakpoint_graph(P("1 4 3 2"))
    t = cycle_with(bg, 0)
    assert t.trivial
    assert not any(cycles_interleave(t, c) for c in bg.cycles if c.id != t.id)
    ident = build_breakpoint_graph(SignedPermutation.identity(3))
    assert not cycles_interleave(ident.cycles[0], ident.cycles[1])


def test_interleave_self_is_error():
    bg = build_breakpoint_graph(P("3 2 1"))
    with pytest.raises(ValueError):
        cycles_interleave(bg.cycles[0], bg.cycles[0])


def test_grey_interleave_is_symmetric_and_strict():
    from burntpancake.breakpoint import grey_edges_interleave
    a, b, c = GreyEdge(0, 0, 5), GreyEdge(1, 3, 7), GreyEdge(2, 1, 4)
    assert grey_edges_interleave(a, b) and grey_edges_interleave(b, a)
    assert not grey_edges_interleave(a, c)  # nested


def test_components_321():
    comps = components(build_breakpoint_graph(P("3 2 1")))
    assert len(comps) == 1
    assert len(comps[0].cycles) == 2 and not comps[0].oriented
    assert comps[0].extent == (0, 7)


def test_components_1432():
    bg = build_breakpoint_graph(P("1 4 3 2"))
    comps = components(bg)
    sizes = sorted(len(c.cycles) for c in comps)
    assert sizes == [1, 2]
    big = next(c for c in comps if len(c.cycles) == 2)
    assert not big.oriented and not big.sorted
    assert next(c for c in comps if len(c.cycles) == 1).sorted


def test_components_identity():
    comps = components(build_breakpoint_graph(SignedPermutation.identity(5)))
    assert len(comps) == 6 and all(c.sorted and c.minimal for c in comps)


def test_minimal_flag_nested():
    # <1 4 3 2> inside a frame: the 2-cycle component spans [2, 9] and holds nothing else
    bg = build_breakpoint_graph(P("1 4 3 2"))
    big = next(c for c in bg.components if len(c.cycles) == 2)
    assert big.extent == (2, 9) and big.minimal
    # figure two: the 8-cycle's extent covers the trivial cycle, so it is not minimal
    bg = build_breakpoint_graph(FIG2)
    assert [c.minimal for c in bg.components] == [False, True]


def test_is_simple_examples():
    assert is_simple(build_breakpoint_graph(P("3 2 1")))
    assert not is_simple(build_breakpoint_graph(P("2 1")))
    assert build_breakpoint_graph(P("2 1")).cycles[0].length == 3
    assert is_simple(build_breakpoint_graph(SignedPermutation.identity(6)))


def test_leftmost_321():
    left = leftmost_structures(build_breakpoint_graph(P("3 2 1")))
    assert left.strict and sorted(left.cycle.black) == [0, 2]
    assert not left.component.oriented


def test_leftmost_oriented_component_nonoriented_cycle():
    bg = build_breakpoint_graph(P("-2 -3 1"))
    left = leftmost_structures(bg)
    assert not left.cycle.oriented and left.component.oriented
    assert grey(bg, 2).support_size == 5


def test_leftmost_fallback_and_identity():
    bg = build_breakpoint_graph(P("1 4 3 2"))
    assert leftmost_structures(bg, strict=True) is None
    left = leftmost_structures(bg)
    assert not left.strict and sorted(left.cycle.black) == [1, 3]
    assert leftmost_structures(build_breakpoint_graph(SignedPermutation.identity(3))) is None


@pytest.mark.parametrize("name, text", [("fig2", "-7 3 -1 4 2 8 -6 -5"), ("p321", "3 2 1")])
def test_dump_golden(name, text):
    expected = (GOLDEN / f"analyze_{name}.txt").read_text()
    assert dump(build_breakpoint_graph(P(text))) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_component_flags_consistent(n):
    for pi in all_signed_permutations(n):
        bg = build_breakpoint_graph(pi)
        seen = sorted(cid for comp in bg.components for cid in comp.cycles)
        assert seen == list(range(bg.num_cycles))
        for comp in bg.components:
            assert comp.oriented == any(bg.cycles[c].oriented for c in comp.cycles)
            lo = min(bg.cycles[c].support[0] for c in comp.cycles)
            hi = max(bg.cycles[c].support[1] for c in comp.cycles)
            assert comp.extent == (lo, hi)
