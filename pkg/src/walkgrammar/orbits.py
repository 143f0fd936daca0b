"""Periodic orbits of the extension graph: patterns, reading, growth, gluing.

A pattern is a closed composable letter cycle stored as its
lexicographically least rotation (a < b < c < d).  Reading a length-n
pattern yields its n cyclic windows of length n - 1, deduplicated;
completion closes an open path word with the unique letter that returns
to its start; growth applies the coassociative coproduct at every cyclic
position, producing all patterns one letter longer.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .language import (
    INDEX_PAIRS,
    LETTERS,
    PAIR_TO_LETTER,
    SUCCESSORS,
    require_path_word,
)


def _least_rotation(s: str) -> str:
    return min(s[i:] + s[:i] for i in range(len(s)))


@dataclass(frozen=True, order=True)
class Pattern:
    """Canonical cyclic closed letter word."""

    letters: str

    def __post_init__(self):
        require_path_word(self.letters)
        first = INDEX_PAIRS[self.letters[0]][0]
        last = INDEX_PAIRS[self.letters[-1]][1]
        if first != last:
            raise ValueError(f"{self.letters!r} is an open path, not a cycle")
        if self.letters != _least_rotation(self.letters):
            raise ValueError(f"{self.letters!r} is not the least rotation of its cycle")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters


def canonicalize(letters: str) -> Pattern:
    """Pattern of a closed composable cycle, any rotation accepted."""
    require_path_word(letters)
    if INDEX_PAIRS[letters[0]][0] != INDEX_PAIRS[letters[-1]][1]:
        raise ValueError(f"{letters!r} is an open path, not a cycle")
    return Pattern(_least_rotation(letters))


def orbit_index(p: Pattern) -> int:
    """Sum of first indices over the cycle; rotation invariant."""
    return sum(INDEX_PAIRS[x][0] for x in p.letters)


def primitive_root(p: Pattern) -> tuple[Pattern, int]:
    """Smallest cycle whose repetition gives p, with its multiplicity."""
    n = len(p.letters)
    for d in range(1, n + 1):
        if n % d == 0 and p.letters[:d] * (n // d) == p.letters:
            return canonicalize(p.letters[:d]), n // d
    raise AssertionError("unreachable")


def read(p: Pattern) -> frozenset[str]:
    """Distinct cyclic windows one letter shorter than the pattern."""
    n = len(p.letters)
    if n < 2:
        raise ValueError("reading a length-1 pattern would yield the empty word")
    doubled = p.letters * 2
    return frozenset(doubled[k : k + n - 1] for k in range(n))


def complete(w: str) -> Pattern:
    """Close an open path word with the unique returning letter."""
    require_path_word(w)
    closing = PAIR_TO_LETTER[(INDEX_PAIRS[w[-1]][1], INDEX_PAIRS[w[0]][0])]
    return canonicalize(w + closing)


def _coproduct_splits(letter: str) -> tuple[str, str]:
    i, j = INDEX_PAIRS[letter]
    return tuple(PAIR_TO_LETTER[(i, k)] + PAIR_TO_LETTER[(k, j)] for k in (-1, 1))


def grow(p: Pattern) -> frozenset[Pattern]:
    """Apply the coassociative coproduct at every position, deduplicated."""
    s = p.letters
    out = set()
    for i in range(len(s)):
        for split in _coproduct_splits(s[i]):
            out.add(canonicalize(s[:i] + split + s[i + 1 :]))
    return frozenset(out)


def orbits_at_time(t: int) -> frozenset[Pattern]:
    """All length-t patterns, grown from the completions of the time-2 words."""
    if t < 2:
        raise ValueError(f"periodic orbits start at t = 2, got t = {t}")
    pats = frozenset(complete(x) for x in LETTERS)
    for _ in range(t - 2):
        pats = frozenset(q for p in pats for q in grow(p))
    return pats


def orbit_count_lower_bound(t: int, k: int) -> int:
    """Ceiling of binom(t, (t-k)/2) / t, in exact integer arithmetic."""
    if (t + k) % 2 or abs(k) > t:
        raise ValueError(f"vertex {k} is off the parity lattice at time {t}")
    kappa = (t - k) // 2
    bound = Fraction(math.comb(t, kappa), t)
    return -((-bound.numerator) // bound.denominator)


def fundamental_orbits() -> frozenset[Pattern]:
    """The vertex-simple directed cycles of the extension graph."""
    cycles: set[Pattern] = set()

    def search(start: str, current: str, visited: frozenset[str], path: str) -> None:
        for succ in SUCCESSORS[current]:
            if succ == start:
                cycles.add(canonicalize(path))
            elif succ > start and succ not in visited:
                search(start, succ, visited | {succ}, path + succ)

    for letter in LETTERS:
        search(letter, letter, frozenset(letter), letter)
    return frozenset(cycles)


def glue(p1: Pattern, p2: Pattern, at: int | None = None) -> Pattern:
    """Splice p2 into p1 at a shared letter.

    `at` picks the position in p1's canonical letters where the detour is
    taken; default is the first position whose letter also occurs in p2.
    The result has length len(p1) + len(p2) and the combined letter
    multiset.
    """
    shared = set(p1.letters) & set(p2.letters)
    if not shared:
        raise ValueError("no graphic intersection")
    if at is None:
        at = next(i for i, x in enumerate(p1.letters) if x in shared)
    elif not 0 <= at < len(p1.letters):
        raise ValueError(f"position {at} out of range for {p1.letters!r}")
    elif p1.letters[at] not in shared:
        raise ValueError(f"letter {p1.letters[at]!r} at position {at} does not occur in {p2.letters!r}")
    anchor = p1.letters[at]
    j = p2.letters.index(anchor)
    rotated = p2.letters[j:] + p2.letters[:j]
    return canonicalize(p1.letters[:at] + rotated + p1.letters[at:])


@dataclass(frozen=True)
class Decomposition:
    """Peeling of a closed walk into simple cycles of the extension graph.

    `peeled` lists the extracted cycles innermost first, each anchored at
    its splice letter, together with the index at which it re-inserts into
    the reduced walk; `base` is the simple cycle left on the stack.
    Replaying the insertions in reverse rebuilds the source pattern.
    """

    source: Pattern
    peeled: tuple[tuple[str, int], ...]
    base: str

    def fundamentals(self) -> tuple[Pattern, ...]:
        """Canonical pieces in emission order, base last."""
        return tuple(canonicalize(c) for c, _ in self.peeled) + (canonicalize(self.base),)

    def piece_counts(self) -> Counter[Pattern]:
        return Counter(self.fundamentals())

    def reglue(self) -> Pattern:
        walk = list(self.base)
        for cycle, idx in reversed(self.peeled):
            walk[idx:idx] = cycle
        return canonicalize("".join(walk))


def decompose(p: Pattern) -> Decomposition:
    """Peel a pattern into simple cycles by stacking its vertex visits.

    Scanning the canonical letters, a repeat of a stacked letter closes a
    simple cycle: emit it, drop it from the stack and keep scanning.  The
    leftover stack is itself a simple cycle because the walk is closed.
    """
    stack: list[str] = []
    position: dict[str, int] = {}
    peeled: list[tuple[str, int]] = []
    for letter in p.letters:
        if letter in position:
            start = position[letter]
            cycle = "".join(stack[start:])
            peeled.append((cycle, start))
            for gone in stack[start:]:
                del position[gone]
            del stack[start:]
        position[letter] = len(stack)
        stack.append(letter)
    return Decomposition(p, tuple(peeled), "".join(stack))
