"""Exhaustive breadth-first search over small permutation groups.

States are packed into a dense integer code: the Lehmer rank of the absolute
values times 2**n, plus a bit mask whose bit i is set when entry i+1 is
negative. Unsigned groups use the Lehmer rank alone. Distances live in a
``uint8`` array indexed by code, with ``UNSEEN`` marking unvisited states, so
the search never hashes a state.
"""

from __future__ import annotations

import itertools
import math
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

import numpy as np

from .breakpoint import build_breakpoint_graph, is_simple
from .perm import SignedPermutation

SIGNED = "prefix-signed-reversals"
EXCHANGES = "prefix-exchanges"
GENERATORS = (SIGNED, EXCHANGES)
DEFAULT_CAPS = {SIGNED: 7, EXCHANGES: 8}
HARD_CAPS = {SIGNED: 8, EXCHANGES: 10}
UNSEEN = 255

MAGIC = b"BPOT"
FORMAT_VERSION = 1
_HEADER = struct.Struct("<4sBBBxQ")
_TAG_CODES = {SIGNED: 0, EXCHANGES: 1}


class OracleCapError(ValueError):
    """Requested group is larger than the configured memory guard allows."""


def _signed(generators: str) -> bool:
    if generators not in GENERATORS:
        raise ValueError(f"unknown generator set {generators!r}; expected one of {GENERATORS}")
    return generators == SIGNED


def group_size(n: int, generators: str) -> int:
    return math.factorial(n) * (2**n if _signed(generators) else 1)


def check_cap(n: int, generators: str, max_n: int | None = None) -> None:
    cap = DEFAULT_CAPS[generators] if max_n is None else max_n
    cap = min(cap, HARD_CAPS[generators])
    if n < 1:
        raise OracleCapError(f"n must be positive, got {n}")
    if n > cap:
        raise OracleCapError(f"n={n} is over the cap of {cap} for {generators}")


# -- packing ---------------------------------------------------------------

def encode(states: np.ndarray, signed: bool = True) -> np.ndarray:
    """Codes for a batch of states, shape (m, n) of signed entries."""
    states = np.atleast_2d(states)
    m, n = states.shape
    a = np.abs(states).astype(np.int64)
    rank = np.zeros(m, dtype=np.int64)
    for i in range(n):
        smaller = (a[:, i + 1 :] < a[:, i : i + 1]).sum(axis=1)
        rank += smaller * math.factorial(n - 1 - i)
    if not signed:
        return rank
    weights = np.int64(1) << np.arange(n, dtype=np.int64)
    mask = ((states < 0).astype(np.int64) * weights).sum(axis=1)
    return (rank << n) | mask


def decode(codes: np.ndarray, n: int, signed: bool = True) -> np.ndarray:
    codes = np.atleast_1d(np.asarray(codes, dtype=np.int64))
    m = codes.shape[0]
    if signed:
        mask = codes & ((1 << n) - 1)
        rank = codes >> n
    else:
        rank = codes
    avail = np.ones((m, n), dtype=bool)
    out = np.zeros((m, n), dtype=np.int8)
    rows = np.arange(m)
    for i in range(n):
        f = math.factorial(n - 1 - i)
        digit = (rank // f) % (n - i)
        cs = np.cumsum(avail, axis=1)
        col = np.argmax(avail & (cs == (digit + 1)[:, None]), axis=1)
        out[:, i] = col + 1
        avail[rows, col] = False
    if signed:
        neg = (mask[:, None] >> np.arange(n)) & 1
        out = np.where(neg == 1, -out, out).astype(np.int8)
    return out


def encode_perm(pi: SignedPermutation, signed: bool = True) -> int:
    return int(encode(np.array([pi.entries], dtype=np.int8), signed)[0])


def decode_perm(code: int, n: int, signed: bool = True) -> SignedPermutation:
    return SignedPermutation(decode(np.array([code]), n, signed)[0].tolist(), check=False)


# -- moves -----------------------------------------------------------------

def _neighbours(states: np.ndarray, generators: str) -> Iterator[np.ndarray]:
    n = states.shape[1]
    if generators == SIGNED:
        for k in range(1, n + 1):
            nxt = states.copy()
            nxt[:, :k] = -states[:, k - 1 :: -1]
            yield nxt
    else:
        for j in range(1, n):
            nxt = states.copy()
            nxt[:, [0, j]] = states[:, [j, 0]]
            yield nxt


@dataclass(frozen=True, eq=False)
class OracleTable:
    n: int
    generators: str
    distances: np.ndarray  # uint8, indexed by code

    @property
    def signed(self) -> bool:
        return self.generators == SIGNED

    @property
    def max_distance(self) -> int:
        return int(self.distances.max())

    def distance(self, pi: SignedPermutation) -> int:
        if pi.n != self.n:
            raise ValueError(f"table is for n={self.n}, got a permutation of length {pi.n}")
        if not self.signed and not pi.is_unsigned():
            raise ValueError("signed permutation looked up in an unsigned table")
        return int(self.distances[encode_perm(pi, self.signed)])

    def layer_sizes(self) -> list[int]:
        return np.bincount(self.distances, minlength=self.max_distance + 1)[: self.max_distance + 1].tolist()

    def __len__(self) -> int:
        return int(self.distances.shape[0])

    def states(self) -> np.ndarray:
        """Every state of the group, row i having code i."""
        return decode(np.arange(len(self), dtype=np.int64), self.n, self.signed)

    def dump(self, path: str | Path) -> None:
        header = _HEADER.pack(MAGIC, FORMAT_VERSION, self.n, _TAG_CODES[self.generators], len(self))
        with open(path, "wb") as fh:
            fh.write(header)
            fh.write(self.distances.tobytes())

    @classmethod
    def load(cls, path: str | Path) -> "OracleTable":
        raw = Path(path).read_bytes()
        if len(raw) < _HEADER.size:
            raise ValueError(f"{path}: truncated header")
        magic, version, n, tag, count = _HEADER.unpack_from(raw)
        if magic != MAGIC:
            raise ValueError(f"{path}: bad magic {magic!r}")
        if version != FORMAT_VERSION:
            raise ValueError(f"{path}: unsupported format version {version}")
        generators = {v: k for k, v in _TAG_CODES.items()}.get(tag)
        if generators is None:
            raise ValueError(f"{path}: unknown generator tag {tag}")
        body = raw[_HEADER.size :]
        if count != group_size(n, generators) or len(body) != count:
            raise ValueError(f"{path}: expected {group_size(n, generators)} distance bytes, found {len(body)}")
        return cls(n, generators, np.frombuffer(body, dtype=np.uint8).copy())


def build_oracle(n: int, generators: str = SIGNED, max_n: int | None = None) -> OracleTable:
    """Distance to the identity for every state, by BFS from the identity.

    Every generator is an involution, so the Cayley graph is undirected and
    the distance from the identity equals the distance to it.
    """
    signed = _signed(generators)
    check_cap(n, generators, max_n)
    dist = np.full(group_size(n, generators), UNSEEN, dtype=np.uint8)
    frontier = np.arange(1, n + 1, dtype=np.int8)[None, :]
    dist[encode(frontier, signed)] = 0
    depth = 0
    while frontier.shape[0]:
        depth += 1
        if depth >= UNSEEN:
            raise RuntimeError("distance overflowed the one-byte table")
        batches = []
        for nxt in _neighbours(frontier, generators):
            codes = encode(nxt, signed)
            fresh = dist[codes] == UNSEEN
            batches.append((codes[fresh], nxt[fresh]))
        if not batches:
            break
        codes = np.concatenate([b[0] for b in batches])
        states = np.concatenate([b[1] for b in batches])
        codes, first = np.unique(codes, return_index=True)
        dist[codes] = depth
        frontier = states[first]
    if (dist == UNSEEN).any():
        raise RuntimeError("generator set did not reach the whole group")
    return OracleTable(n, generators, dist)


def all_signed_permutations(n: int) -> Iterator[SignedPermutation]:
    """S_n^{+-} in order of absolute values first, then signs with + before -."""
    for absolute in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPermutation((a * s for a, s in zip(absolute, signs)), check=False)


def all_permutations(n: int) -> Iterator[SignedPermutation]:
    for p in itertools.permutations(range(1, n + 1)):
        yield SignedPermutation(p, check=False)


def enumerate_simple(n: int, max_n: int | None = None) -> Iterator[SignedPermutation]:
    """Every simple signed permutation of length n, in the order of
    :func:`all_signed_permutations`."""
    check_cap(n, SIGNED, max_n)
    for pi in all_signed_permutations(n):
        if is_simple(build_breakpoint_graph(pi)):
            yield pi
