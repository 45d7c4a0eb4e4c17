"""Word combinatorics: overlaps, primitive roots, conjugacy of primitive words.

A word is a tuple of letters; a letter is a nonempty string.  Everything in
this module is classical periodicity reasoning on plain words.  Inputs stay
small (desk scale), so the implementations favour the obvious quadratic
scans over failure-function machinery.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    EmptyWordError,
    InternalError,
    NotPrimitiveError,
    PreconditionError,
)

Letter = str
Word = tuple[Letter, ...]


def overlap(u: Word, v: Word) -> Word:
    """Longest word that is simultaneously a suffix of u and a prefix of v."""
    for k in range(min(len(u), len(v)), 0, -1):
        if u[len(u) - k:] == v[:k]:
            return v[:k]
    return ()


def primitive_root(w: Word) -> tuple[Word, int]:
    """Return (root, e) where root is primitive and root repeated e times is w.

    The root is the shortest period that divides w evenly; e is maximal.
    Raises EmptyWordError on the empty word, which is a power of everything.
    """
    if not w:
        raise EmptyWordError("the empty word has no primitive root")
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d], n // d
    raise InternalError("unreachable: every word is a power of itself")


def is_primitive(w: Word) -> bool:
    """True when w is nonempty and not a proper power."""
    return bool(w) and primitive_root(w)[1] == 1


def power_exponent(w: Word, base: Word) -> int | None:
    """The k with base repeated k times equal to w, or None if there is none.

    The empty word is base**0.  With an empty base only w == () matches.
    """
    if not base:
        return 0 if not w else None
    k, r = divmod(len(w), len(base))
    if r != 0 or base * k != w:
        return None
    return k


@dataclass(frozen=True)
class ConjugacyDecomposition:
    """A split (g, h) witnessing that p = gh and q = hg are conjugate.

    h must be nonempty and gh primitive; every rotation of a primitive word
    is again primitive, so hg needs no separate check.
    """

    g: Word
    h: Word

    def __post_init__(self) -> None:
        if not self.h:
            raise EmptyWordError("h must be nonempty")
        if not is_primitive(self.g + self.h):
            raise NotPrimitiveError(f"gh is not primitive: {self.g + self.h!r}")

    @property
    def p(self) -> Word:
        return self.g + self.h

    @property
    def q(self) -> Word:
        return self.h + self.g


def conjugacy_decomposition(p: Word, q: Word) -> ConjugacyDecomposition | None:
    """Split p into g, h with q = hg, or None when p and q are not conjugate.

    Both inputs must be primitive.  Among all valid splits the one with the
    shortest g is returned, which makes the choice deterministic; for p == q
    that is g = (), h = p.
    """
    if not p or not q:
        raise EmptyWordError("conjugacy is defined for nonempty words")
    if not is_primitive(p):
        raise NotPrimitiveError(f"not primitive: {p!r}")
    if not is_primitive(q):
        raise NotPrimitiveError(f"not primitive: {q!r}")
    if len(p) != len(q):
        return None
    for i in range(len(p)):
        g, h = p[:i], p[i:]
        if h + g == q:
            return ConjugacyDecomposition(g, h)
    return None


def sandwich_form(dec: ConjugacyDecomposition, y: Word) -> int | None:
    """Exponent k with y = g q^k = p^k g, for y caught between powers of q and p.

    For p = gh and q = hg, a word y with |y| >= |q| that is a suffix of some
    q^i and a prefix of some p^j necessarily has the sandwich shape above
    with k = |y| // |q|.  Returns that k, or None when y is not such a word.
    Raises PreconditionError when |y| < |q|.
    """
    p, q = dec.p, dec.q
    if len(y) < len(q):
        raise PreconditionError(f"need |y| >= |q| = {len(q)}, got {len(y)}")
    reps = -(-len(y) // len(q))
    if y != (q * reps)[len(q) * reps - len(y):]:
        return None
    if y != (p * reps)[: len(y)]:
        return None
    k = len(y) // len(q)
    if y != dec.g + q * k or y != p * k + dec.g:
        raise InternalError("sandwich identity failed for a qualifying word")
    return k


def overlap_gq(
    dec: ConjugacyDecomposition,
    p_suffix: Word,
    q_prefix: Word,
    i: int,
    j: int,
) -> Word:
    """overlap(p_suffix + g + q^i, p^j + g + q_prefix) in closed form.

    p_suffix must be a proper suffix of p and q_prefix a proper prefix of q;
    i and j are nonnegative repetition counts.  For min(i, j) >= 1 the
    overlap is exactly g q^min(i, j): it contains g q^min as a common
    suffix/prefix, and being at least |q| long it has the sandwich shape,
    whose length is pinned by |p_suffix| < |p|.  For min(i, j) = 0 that
    argument breaks down (the overlap can be longer than g but shorter
    than |q|, e.g. p = q = aba, p_suffix = ba against p g: overlap a with
    g empty), so the overlap is computed directly.
    """
    p, q = dec.p, dec.q
    if i < 0 or j < 0:
        raise PreconditionError("exponents must be nonnegative")
    if len(p_suffix) >= len(p) or p[len(p) - len(p_suffix):] != p_suffix:
        raise PreconditionError(f"{p_suffix!r} is not a proper suffix of {p!r}")
    if len(q_prefix) >= len(q) or q[: len(q_prefix)] != q_prefix:
        raise PreconditionError(f"{q_prefix!r} is not a proper prefix of {q!r}")
    if min(i, j) == 0:
        return overlap(p_suffix + dec.g + q * i, p * j + dec.g + q_prefix)
    return dec.g + q * min(i, j)
