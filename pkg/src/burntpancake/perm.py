"""Signed permutations and the elementary operations on them.

Positions are 1-based in every public function (``pi[1]`` is the top
pancake); internally entries live in a 0-based tuple.
"""

from __future__ import annotations

from typing import Iterable, Sequence

FlipSequence = tuple[int, ...]


class PermutationError(ValueError):
    """Raised for malformed permutations or out-of-range positions."""


class SignedPermutation:
    """An arrangement of the signed integers +-1..+-n, each absolute value once.

    Instances are immutable and hashable, so they can key dicts and sets.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[int], check: bool = True):
        entries = tuple(int(x) for x in entries)
        if check:
            _validate(entries)
        self._entries = entries

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        if n < 1:
            raise PermutationError(f"n must be positive, got {n}")
        return cls(range(1, n + 1), check=False)

    @property
    def entries(self) -> tuple[int, ...]:
        return self._entries

    @property
    def n(self) -> int:
        return len(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __getitem__(self, i: int) -> int:
        """Return pi_i for 1 <= i <= n; also accepts -n <= i <= -1 with pi_{-i} = -pi_i."""
        if 1 <= i <= self.n:
            return self._entries[i - 1]
        if -self.n <= i <= -1:
            return -self._entries[-i - 1]
        raise PermutationError(f"position {i} out of range 1..{self.n}")

    def __eq__(self, other) -> bool:
        if isinstance(other, SignedPermutation):
            return self._entries == other._entries
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._entries)

    def __lt__(self, other: "SignedPermutation") -> bool:
        return self._entries < other._entries

    def __str__(self) -> str:
        return format_permutation(self)

    def __repr__(self) -> str:
        return f"SignedPermutation(<{self}>)"

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self._entries, 1))

    def is_unsigned(self) -> bool:
        return all(x > 0 for x in self._entries)

    # Convenience wrappers so call sites can chain operations.
    def flip(self, k: int) -> "SignedPermutation":
        return apply_prefix_flip(self, k)

    def flips(self, lengths: Iterable[int]) -> "SignedPermutation":
        return apply_flips(self, lengths)

    def inverse(self) -> "SignedPermutation":
        return inverse(self)


def _validate(entries: Sequence[int]) -> None:
    if not entries:
        raise PermutationError("empty permutation")
    n = len(entries)
    seen: dict[int, int] = {}
    for x in entries:
        if x == 0:
            raise PermutationError("zero entry '0' is not allowed")
        a = abs(x)
        if a > n:
            missing = min(set(range(1, n + 1)) - {abs(y) for y in entries})
            raise PermutationError(
                f"entry '{x}' exceeds n={n}; gap in 1..{n}, missing {missing}"
            )
        if a in seen:
            raise PermutationError(f"duplicate absolute value in entry '{x}'")
        seen[a] = x


def parse_permutation(text: str) -> SignedPermutation:
    """Parse whitespace-separated signed integers, e.g. ``"-7 3 -1 4 2 8 -6 -5"``.

    A leading ``+`` is accepted. Every rejection names the offending token.
    """
    tokens = text.split()
    if not tokens:
        raise PermutationError("empty input: no entries")
    entries = []
    for tok in tokens:
        try:
            entries.append(int(tok))
        except ValueError:
            raise PermutationError(f"token '{tok}' is not an integer") from None
    return SignedPermutation(entries)


def format_permutation(pi: SignedPermutation) -> str:
    return " ".join(str(x) for x in pi.entries)


def apply_prefix_flip(pi: SignedPermutation, k: int) -> SignedPermutation:
    """Reverse the first k entries and invert their signs."""
    n = pi.n
    if not 1 <= k <= n:
        raise PermutationError(f"flip length {k} out of range 1..{n}")
    e = pi.entries
    return SignedPermutation(tuple(-x for x in reversed(e[:k])) + e[k:], check=False)


def apply_flips(pi: SignedPermutation, lengths: Iterable[int]) -> SignedPermutation:
    for k in lengths:
        pi = apply_prefix_flip(pi, k)
    return pi


def apply_signed_reversal(pi: SignedPermutation, i: int, j: int) -> SignedPermutation:
    """Reverse the order and the signs of the entries in positions i..j."""
    n = pi.n
    if not (1 <= i <= j <= n):
        raise PermutationError(f"reversal positions ({i}, {j}) invalid for n={n}; need 1 <= i <= j <= n")
    e = pi.entries
    mid = tuple(-x for x in reversed(e[i - 1 : j]))
    return SignedPermutation(e[: i - 1] + mid + e[j:], check=False)


def mimic_as_prefix_flips(i: int, j: int, n: int | None = None) -> FlipSequence:
    """Shortest prefix-flip sequence with the same effect as the reversal of i..j.

    Flipping j brings the segment to the front (reversed and negated), flipping
    j-i+1 turns it back, and flipping j again restores the prefix 1..i-1.
    """
    if i < 1 or j < i or (n is not None and j > n):
        bound = f" for n={n}" if n is not None else ""
        raise PermutationError(f"reversal positions ({i}, {j}) invalid{bound}")
    if i == 1:
        return (j,)
    return (j, j - i + 1, j)


def compose(pi: SignedPermutation, sigma: SignedPermutation) -> SignedPermutation:
    """Return pi o sigma, i.e. i -> pi(sigma(i)), using pi_{-i} = -pi_i."""
    if pi.n != sigma.n:
        raise PermutationError(f"size mismatch: {pi.n} vs {sigma.n}")
    return SignedPermutation((pi[s] for s in sigma.entries), check=False)


def inverse(pi: SignedPermutation) -> SignedPermutation:
    """The signed permutation sigma with sigma o pi = identity."""
    out = [0] * pi.n
    for i, x in enumerate(pi.entries, 1):
        out[abs(x) - 1] = i if x > 0 else -i
    return SignedPermutation(out, check=False)


def signed_reversal_permutation(n: int, i: int, j: int) -> SignedPermutation:
    """The reversal itself as an element of the hyperoctahedral group."""
    return apply_signed_reversal(SignedPermutation.identity(n), i, j)


def apply_prefix_exchange(pi: SignedPermutation, j: int) -> SignedPermutation:
    """Swap the entries in positions 1 and j (2 <= j <= n)."""
    n = pi.n
    if not 2 <= j <= n:
        raise PermutationError(f"exchange position {j} out of range 2..{n}")
    e = list(pi.entries)
    e[0], e[j - 1] = e[j - 1], e[0]
    return SignedPermutation(e, check=False)


def graph_cycles(pi: SignedPermutation) -> list[tuple[int, ...]]:
    """Disjoint cycles of an unsigned permutation, arc i -> pi_i.

    Each cycle starts at its minimum and cycles are sorted by that minimum,
    so ``<4 1 6 2 5 7 3>`` gives ``[(1, 4, 2), (3, 6, 7), (5,)]``.
    """
    if not pi.is_unsigned():
        bad = next(x for x in pi.entries if x < 0)
        raise PermutationError(f"cycle decomposition needs an unsigned permutation; found '{bad}'")
    seen = [False] * (pi.n + 1)
    cycles = []
    for start in range(1, pi.n + 1):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = pi[x]
        cycles.append(tuple(cyc))
    return cycles


def double(pi: SignedPermutation) -> tuple[int, ...]:
    """The unsigned image (0, pi'_1, ..., pi'_2n, 2n+1) used by the breakpoint graph."""
    out = [0]
    for x in pi.entries:
        if x > 0:
            out += (2 * x - 1, 2 * x)
        else:
            out += (-2 * x, -2 * x - 1)
    out.append(2 * pi.n + 1)
    return tuple(out)


def undouble(values: Sequence[int]) -> SignedPermutation:
    """Inverse of :func:`double`; rejects sequences that no permutation doubles to."""
    m = len(values)
    if m < 4 or m % 2 or values[0] != 0 or values[-1] != m - 1:
        raise PermutationError(f"not a doubled permutation: {tuple(values)}")
    entries = []
    for p in range(1, m - 1, 2):
        a, b = values[p], values[p + 1]
        if b == a + 1 and b % 2 == 0:
            entries.append(b // 2)
        elif a == b + 1 and a % 2 == 0:
            entries.append(-(a // 2))
        else:
            raise PermutationError(f"pair ({a}, {b}) at positions {p}, {p + 1} is not a doubled element")
    return SignedPermutation(entries)
