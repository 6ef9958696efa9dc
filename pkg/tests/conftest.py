from collections import deque

import pytest
from hypothesis import strategies as st

from burntpancake import EXCHANGES, SIGNED, SignedPermutation, build_oracle


def naive_bfs(n, moves):
    """Plain dict BFS from the identity over entry tuples; no packing, no numpy."""
    start = tuple(range(1, n + 1))
    dist = {start: 0}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for t in moves(s):
            if t not in dist:
                dist[t] = dist[s] + 1
                queue.append(t)
    return dist


def naive_flips(s):
    for k in range(1, len(s) + 1):
        yield tuple(-x for x in reversed(s[:k])) + s[k:]


def naive_exchanges(s):
    for j in range(1, len(s)):
        t = list(s)
        t[0], t[j] = t[j], t[0]
        yield tuple(t)


@st.composite
def signed_perms(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    order = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    return SignedPermutation(a * s for a, s in zip(order, signs))


@pytest.fixture(scope="session")
def signed_tables():
    return {n: build_oracle(n, SIGNED) for n in range(1, 7)}


@pytest.fixture(scope="session")
def exchange_tables():
    return {n: build_oracle(n, EXCHANGES) for n in range(1, 8)}
