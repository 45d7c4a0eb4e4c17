"""The queue monoid: action semantics, normal forms, and multiplication.

A basic action over a base alphabet A is a write of a letter (token ``x``)
or a read of a letter (token ``~x``).  A sequence of actions transforms
queue contents, which are a word over A, or the absorbing error state
BOTTOM: a write appends its letter at the back, a read removes its letter
from the front and fails to BOTTOM when the front differs or the queue is
empty.  Two action sequences are equivalent when they induce the same
transformation on every queue.

Equivalence is generated by three length-preserving rules, each moving one
read a single position to the left (letters a, b, c need not be distinct
unless stated):

    a ~b      ->  ~b a        for a != b
    a ~b ~c   ->  ~b a ~c
    a b ~c    ->  a ~c b

Read left to right these form a terminating and confluent rewriting
system.  The irreducible words are exactly those of the shape

    <u1|u2|u3>  =  reads(u1) . interleave(u2) . writes(u3)

where interleave(a1 ... an) alternates each letter with its own read,
a1 ~a1 a2 ~a2 ...  The triple is the normal form of its class.  Writing
pos(w) for the word of written letters and neg(w) for the word of read
letters, a normal form <u1|u2|u3> has neg = u1 u2, pos = u2 u3, and center
u2; two action sequences are equivalent iff these three words agree.

Products can be computed on normal forms directly: the center of a product
x y is overlap(center(x) . neg(y), pos(x) . center(y)), and the outer
blocks are read off the concatenated projections.
"""

from __future__ import annotations

import string
from typing import Collection, Iterable, NamedTuple, Union

from .errors import (
    CapExceededError,
    InternalError,
    ParseError,
    PreconditionError,
)
from .words import Letter, Word, overlap

Action = str  # 'x' writes letter x, '~x' reads letter x
QueueWord = tuple[Action, ...]

DEFAULT_ALPHABET: tuple[Letter, ...] = tuple(string.ascii_lowercase)


class _BottomType:
    """Absorbing error state of the queue action."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "BOTTOM"


BOTTOM = _BottomType()

QueueState = Union[Word, _BottomType]


def is_read(a: Action) -> bool:
    return a.startswith("~")


def action_letter(a: Action) -> Letter:
    return a[1:] if a.startswith("~") else a


def write_actions(w: Word) -> QueueWord:
    """The action sequence writing the letters of w in order."""
    return tuple(w)


def read_actions(w: Word) -> QueueWord:
    """The action sequence reading the letters of w in order."""
    return tuple("~" + x for x in w)


def action(state: QueueState, w: QueueWord) -> QueueState:
    """Apply the actions of w to the given queue contents.

    BOTTOM is absorbing; a failed read yields BOTTOM.
    """
    for a in w:
        if state is BOTTOM:
            return BOTTOM
        if a.startswith("~"):
            x = a[1:]
            if state and state[0] == x:
                state = state[1:]
            else:
                state = BOTTOM
        else:
            state = state + (a,)
    return state


def project_pos(w: QueueWord) -> Word:
    """The written letters of w, in order."""
    return tuple(a for a in w if not a.startswith("~"))


def project_neg(w: QueueWord) -> Word:
    """The read letters of w, in order."""
    return tuple(a[1:] for a in w if a.startswith("~"))


class QueueNormalForm(NamedTuple):
    """Irreducible representative <reads|center|writes> of an equivalence class."""

    reads: Word
    center: Word
    writes: Word

    def neg(self) -> Word:
        return self.reads + self.center

    def pos(self) -> Word:
        return self.center + self.writes

    def to_queue_word(self) -> QueueWord:
        out: list[Action] = ["~" + x for x in self.reads]
        for x in self.center:
            out.append(x)
            out.append("~" + x)
        out.extend(self.writes)
        return tuple(out)


NF_IDENTITY = QueueNormalForm((), (), ())


def multiply(x: QueueNormalForm, y: QueueNormalForm) -> QueueNormalForm:
    """Normal form of the product of two classes given in normal form."""
    center = overlap(x.center + y.reads + y.center, x.center + x.writes + y.center)
    neg = x.reads + x.center + y.reads + y.center
    pos = x.center + x.writes + y.center + y.writes
    cut = len(neg) - len(center)
    if neg[cut:] != center:
        raise InternalError("product center is not a suffix of the read projection")
    if pos[: len(center)] != center:
        raise InternalError("product center is not a prefix of the write projection")
    return QueueNormalForm(neg[:cut], center, pos[len(center):])


def normal_form(w: QueueWord) -> QueueNormalForm:
    """Normal form of an action sequence, folding multiply over its letters."""
    nf = NF_IDENTITY
    for a in w:
        if a.startswith("~"):
            nf = multiply(nf, QueueNormalForm((a[1:],), (), ()))
        else:
            nf = multiply(nf, QueueNormalForm((), (), (a,)))
    return nf


def mu(w: QueueWord) -> Word:
    """Center of the normal form of w."""
    return normal_form(w).center


def nf_power(x: QueueNormalForm, n: int) -> QueueNormalForm:
    """n-th power of a class given in normal form, n >= 0."""
    if n < 0:
        raise PreconditionError("exponent must be nonnegative")
    out = NF_IDENTITY
    for _ in range(n):
        out = multiply(out, x)
    return out


def power_mu(x: QueueNormalForm, n: int) -> Word:
    """Center of the n-th power, computed in closed form, n >= 1.

    mu(x^n) = overlap(center(x) . neg(x)^(n-1), pos(x)^(n-1) . center(x)).
    """
    if n < 1:
        raise PreconditionError("exponent must be positive")
    return overlap(x.center + x.neg() * (n - 1), x.pos() * (n - 1) + x.center)


def equivalent(u: QueueWord, v: QueueWord) -> bool:
    """Whether u and v act identically on every queue."""
    return normal_form(u) == normal_form(v)


# -- reference implementations used as oracles in the test suite ------------

def rewrite_nf_oracle(w: QueueWord) -> QueueWord:
    """Normal form by exhaustive rewriting with the three directed rules.

    Applies the leftmost applicable rule until a fixpoint is reached.  Each
    application moves one read a position to the left, so at most |w|^2 + |w|
    steps can occur; exceeding that bound raises CapExceededError.
    """
    word = list(w)
    n = len(word)
    cap = n * n + n
    steps = 0
    changed = True
    while changed:
        changed = False
        for i in range(n):
            a = word[i]
            if a.startswith("~") or i + 1 >= n:
                continue
            b = word[i + 1]
            if b.startswith("~"):
                if b[1:] != a:
                    word[i], word[i + 1] = b, a  # a ~b -> ~b a
                elif i + 2 < n and word[i + 2].startswith("~"):
                    word[i], word[i + 1] = b, a  # a ~b ~c -> ~b a ~c
                else:
                    continue
            else:
                if i + 2 < n and word[i + 2].startswith("~"):
                    word[i + 1], word[i + 2] = word[i + 2], b  # a b ~c -> a ~c b
                else:
                    continue
            changed = True
            steps += 1
            if steps > cap:
                raise CapExceededError("rewriting exceeded its step bound")
            break
    return tuple(word)


def bfs_class_oracle(w: QueueWord, cap: int = 1_000_000) -> set[QueueWord]:
    """The full equivalence class of w, by closure under the undirected rules."""
    seen = {tuple(w)}
    frontier = [tuple(w)]
    while frontier:
        nxt: list[QueueWord] = []
        for u in frontier:
            for v in _neighbors(u):
                if v not in seen:
                    seen.add(v)
                    if len(seen) > cap:
                        raise CapExceededError("equivalence class exceeds cap")
                    nxt.append(v)
        frontier = nxt
    return seen


def _neighbors(u: QueueWord) -> Iterable[QueueWord]:
    n = len(u)
    for i in range(n - 1):
        a, b = u[i], u[i + 1]
        a_read, b_read = a.startswith("~"), b.startswith("~")
        if not a_read and b_read:
            if b[1:] != a:
                yield u[:i] + (b, a) + u[i + 2:]  # a ~b <-> ~b a
            if i + 2 < n and u[i + 2].startswith("~"):
                yield u[:i] + (b, a) + u[i + 2:]  # a ~b ~c <-> ~b a ~c
        if a_read and not b_read:
            if i + 2 < n and u[i + 2].startswith("~"):
                yield u[:i] + (b, a) + u[i + 2:]  # ~b a ~c <-> a ~b ~c
            if a[1:] != b:
                yield u[:i] + (b, a) + u[i + 2:]  # ~b a <-> a ~b
        if not a_read and not b_read and i + 2 < n and u[i + 2].startswith("~"):
            yield u[:i] + (a, u[i + 2], b) + u[i + 3:]  # a b ~c <-> a ~c b
        if not a_read and b_read and i + 2 < n and not u[i + 2].startswith("~"):
            yield u[:i] + (a, u[i + 2], b) + u[i + 3:]  # a ~c b <-> a b ~c
    return


def generalized_shift(
    u: Word, v: Word, w: Word, side: str
) -> tuple[QueueWord, QueueWord, bool]:
    """Shift identities between blocks of writes and reads.

    side='read-block' requires |u| <= |w| and relates
        writes(u) reads(v) reads(w)  ==  reads(v) writes(u) reads(w);
    side='write-block' requires |u| >= |w| and relates
        writes(u) writes(v) reads(w)  ==  writes(u) reads(w) writes(v).

    Returns (lhs, rhs, holds) with holds decided by normal forms.
    """
    if side == "read-block":
        if len(u) > len(w):
            raise PreconditionError("read-block shift needs |u| <= |w|")
        lhs = write_actions(u) + read_actions(v) + read_actions(w)
        rhs = read_actions(v) + write_actions(u) + read_actions(w)
    elif side == "write-block":
        if len(u) < len(w):
            raise PreconditionError("write-block shift needs |u| >= |w|")
        lhs = write_actions(u) + write_actions(v) + read_actions(w)
        rhs = write_actions(u) + read_actions(w) + write_actions(v)
    else:
        raise PreconditionError(f"unknown side {side!r}")
    return lhs, rhs, equivalent(lhs, rhs)


# -- text syntax -------------------------------------------------------------

def _tokenize(text: str, letters: Collection[Letter]) -> tuple[Action, ...]:
    letter_set = set(letters)
    tokens: list[Action] = []
    for chunk in text.split():
        body = chunk[1:] if chunk.startswith("~") else chunk
        if body in letter_set:
            # a whole chunk naming one letter; required form for letters
            # longer than one character
            tokens.append(chunk)
            continue
        i = 0
        while i < len(chunk):
            if chunk[i] == "~":
                if i + 1 >= len(chunk):
                    raise ParseError(f"dangling ~ in {chunk!r}")
                x = chunk[i + 1]
                if x not in letter_set:
                    raise ParseError(f"unknown letter {x!r} in {chunk!r}")
                tokens.append("~" + x)
                i += 2
            else:
                x = chunk[i]
                if x not in letter_set:
                    raise ParseError(f"unknown letter {x!r} in {chunk!r}")
                tokens.append(x)
                i += 1
    return tuple(tokens)


def parse_queue_word(text: str, alphabet: Collection[Letter] | None = None) -> QueueWord:
    """Parse an action sequence; ``x`` writes, ``~x`` reads.

    Whitespace between tokens is optional for single-character letters and
    required for longer ones.
    """
    return _tokenize(text, DEFAULT_ALPHABET if alphabet is None else alphabet)


def parse_word(text: str, alphabet: Collection[Letter] | None = None) -> Word:
    """Parse a plain word over the base alphabet; read tokens are rejected."""
    tokens = _tokenize(text, DEFAULT_ALPHABET if alphabet is None else alphabet)
    for t in tokens:
        if t.startswith("~"):
            raise ParseError(f"read token {t!r} not allowed in a plain word")
    return tokens


def format_word(w: Word) -> str:
    if all(len(x) == 1 for x in w):
        return "".join(w)
    return " ".join(w)


def format_queue_word(w: QueueWord) -> str:
    if all(len(action_letter(a)) == 1 for a in w):
        return "".join(w)
    return " ".join(w)


def format_normal_form(nf: QueueNormalForm) -> str:
    return f"<{format_word(nf.reads)}|{format_word(nf.center)}|{format_word(nf.writes)}>"


def parse_normal_form(text: str, alphabet: Collection[Letter] | None = None) -> QueueNormalForm:
    if not (text.startswith("<") and text.endswith(">")):
        raise ParseError(f"normal form must look like <u1|u2|u3>, got {text!r}")
    parts = text[1:-1].split("|")
    if len(parts) != 3:
        raise ParseError(f"normal form must have three components, got {text!r}")
    u1, u2, u3 = (parse_word(p, alphabet) for p in parts)
    return QueueNormalForm(u1, u2, u3)


def format_state(state: QueueState) -> str:
    return "BOTTOM" if state is BOTTOM else format_word(state)
