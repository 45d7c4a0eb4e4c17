"""Trace monoids: words modulo commutation of independent letters.

A trace word is a plain word together with the independence alphabet it
lives over.  Two words are identified when one can be turned into the
other by repeatedly swapping adjacent independent letters.  Every class
contains a unique lexicographically least member, computed greedily, and
that member serves as the normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .alphabet import IndependenceAlphabet
from .errors import AlphabetMismatchError, CapExceededError, PreconditionError
from .words import Letter, Word


@dataclass(frozen=True)
class TraceWord:
    alphabet: IndependenceAlphabet
    word: Word

    def __post_init__(self) -> None:
        for x in self.word:
            if x not in self.alphabet:
                raise PreconditionError(f"letter {x!r} not in the alphabet")

    def __mul__(self, other: "TraceWord") -> "TraceWord":
        if self.alphabet != other.alphabet:
            raise AlphabetMismatchError("cannot concatenate over different alphabets")
        return TraceWord(self.alphabet, self.word + other.word)

    def __len__(self) -> int:
        return len(self.word)


def lex_normal_form(u: TraceWord, order: Sequence[Letter] | None = None) -> TraceWord:
    """Least representative of u's class in the length-lexicographic order.

    The order on letters defaults to declaration order.  Greedy scheme: a
    letter can come first exactly when its first occurrence is preceded
    only by letters independent of it; among those candidates the least is
    emitted and its occurrence deleted.
    """
    g = u.alphabet
    if order is None:
        rank = {x: g.rank(x) for x in g.letters}
    else:
        rank = {x: i for i, x in enumerate(order)}
        for x in g.letters:
            if x not in rank:
                raise PreconditionError(f"order is missing letter {x!r}")
    remaining = list(u.word)
    out: list[Letter] = []
    while remaining:
        best_pos = None
        best_rank = None
        seen: set[Letter] = set()
        for i, x in enumerate(remaining):
            if x in seen:
                continue
            seen.add(x)
            if all(g.independent(y, x) for y in remaining[:i]):
                r = rank[x]
                if best_rank is None or r < best_rank:
                    best_pos, best_rank = i, r
        assert best_pos is not None  # position 0 always qualifies
        out.append(remaining.pop(best_pos))
    return TraceWord(g, tuple(out))


def trace_equivalent(u: TraceWord, v: TraceWord) -> bool:
    """Whether u and v denote the same trace."""
    if u.alphabet != v.alphabet:
        raise AlphabetMismatchError("cannot compare over different alphabets")
    if len(u.word) != len(v.word):
        return False
    return lex_normal_form(u).word == lex_normal_form(v).word


def bfs_trace_class(u: TraceWord, cap: int = 1_000_000) -> set[Word]:
    """All words of u's class, by closure under adjacent independent swaps."""
    g = u.alphabet
    seen = {u.word}
    frontier = [u.word]
    while frontier:
        nxt: list[Word] = []
        for w in frontier:
            for i in range(len(w) - 1):
                if g.independent(w[i], w[i + 1]):
                    s = w[:i] + (w[i + 1], w[i]) + w[i + 2:]
                    if s not in seen:
                        seen.add(s)
                        if len(seen) > cap:
                            raise CapExceededError("trace class exceeds cap")
                        nxt.append(s)
        frontier = nxt
    return seen


def clique_projection(u: TraceWord, letters: Sequence[Letter]) -> Word:
    """Erase every letter outside the given set.

    When the kept letters are pairwise dependent the projection is a word
    whose value is invariant across u's class.
    """
    keep = set(letters)
    return tuple(x for x in u.word if x in keep)
