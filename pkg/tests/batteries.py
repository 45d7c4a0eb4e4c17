"""Shared input batteries for the witness builders.

Each entry is a tuple of argument texts for one builder, parsed with the
default alphabet.  Conjugated entries also carry the rotation name the
builder is expected to pick, so the batteries jointly exercise every
rotation.
"""

from quemon import ConjugacyDecomposition, parse_queue_word, parse_word


def _q(*texts):
    return tuple(parse_queue_word(t) for t in texts)


# (u, v, w): u writes only, v and w commute and are inequivalent
P2P3_BATTERY = [
    _q("a", "~c", "~c~c"),
    _q("a", "~c", "~c~c~c"),
    _q("b", "~a", "~a~a"),
    _q("ab", "~c~c", "~c"),
    _q("a", "b", "~c"),
    _q("a", "bb", "~c"),
    _q("b", "aa", "~c~c"),
    _q("a", "b~c", "bb~c~c"),
    _q("a", "b~d", "bb~d~d"),
    _q("ab", "c~d", "cc~d~d"),
    _q("a", "bc~d", "bcbc~d~d"),
    _q("a", "b~c", "bb~c"),
    _q("a", "bb~c", "b~c"),
    _q("c", "a~b~b", "aa~b"),
    _q("c", "aa~b", "a~b~b"),
]

# (u, v, w, p, q): projections are positive powers of non-conjugate roots
NONCONJUGATED_BATTERY = [
    _q("a~b", "a~b", "a~b") + (("a",), ("b",)),
    _q("aa~b", "a~b", "a~b") + (("a",), ("b",)),
    _q("a~b", "aa~b", "a~b") + (("a",), ("b",)),
    _q("a~b", "a~b", "aa~b") + (("a",), ("b",)),
    _q("a~b~b", "a~b", "a~b") + (("a",), ("b",)),
    _q("a~b", "a~b~b", "aa~b") + (("a",), ("b",)),
    _q("aa~b~b", "a~b", "a~b") + (("a",), ("b",)),
    _q("a~ba~b", "a~b", "aa~b") + (("a",), ("b",)),
    _q("ab~a", "ab~a", "ab~a") + (("a", "b"), ("a",)),
    _q("abab~a", "ab~a", "ab~a") + (("a", "b"), ("a",)),
    _q("ab~a", "ab~a~a", "ab~a") + (("a", "b"), ("a",)),
    _q("ab~a", "ab~a", "abab~a~a") + (("a", "b"), ("a",)),
    _q("a~b~c", "a~b~c", "a~b~c") + (("a",), ("b", "c")),
]

_DEC_A = ConjugacyDecomposition((), ("a",))
_DEC_AB = ConjugacyDecomposition(parse_word("a"), parse_word("b"))

# (u, v, w, decomposition, expected rotation)
CONJUGATED_BATTERY = [
    _q("a~a", "a~a", "a~a") + (_DEC_A, "trivial"),
    _q("~aa", "a~a", "a~a") + (_DEC_A, "trivial"),
    _q("a~a", "~aa", "~aa") + (_DEC_A, "trivial"),
    _q("a~aa~a", "a~a", "~aa") + (_DEC_A, "trivial"),
    _q("a~aa", "a~a", "a~a") + (_DEC_A, "trivial"),
    _q("a~a", "a~aa", "a~a") + (_DEC_A, "vwu"),
    _q("~aa", "a~aa", "~aa") + (_DEC_A, "vwu"),
    _q("a~a", "a~a", "a~aa") + (_DEC_A, "wuv"),
    _q("a~a", "~aa", "a~aa") + (_DEC_A, "wuv"),
    _q("~aa~a", "a~a", "a~a") + (_DEC_A, "vwu"),
    _q("a~a", "~aa~a", "a~a") + (_DEC_A, "wuv"),
    _q("a~a", "a~a", "~aa~a") + (_DEC_A, "trivial"),
    _q("~ba~ab", "~ba~ab", "~ba~ab") + (_DEC_AB, "trivial"),
    _q("~b~aab", "~ba~ab", "~ba~ab") + (_DEC_AB, "trivial"),
    _q("~ba~abab", "~ba~ab", "~ba~ab") + (_DEC_AB, "trivial"),
    _q("~ba~ab", "~ba~abab", "~b~aab") + (_DEC_AB, "vwu"),
    _q("~b~a~ba~ab", "~ba~ab", "~ba~ab") + (_DEC_AB, "vwu"),
]

# (t, u, v, w): u writes only, v reads only, vw = wv, tu = ut
P4_BATTERY = [
    _q("a", "a", "~b", "~b"),
    _q("aa", "a", "~b", "~b~b"),
    _q("a", "aa", "~b", "~b"),
    _q("a", "a", "~b~b", "~b"),
    _q("a", "a", "~b", "~ba"),
    _q("a~a", "a", "~b", "~b"),
    _q("aa", "aa", "~b", "~b"),
    _q("a", "a", "~b~b", "~b~b"),
    _q("ab", "ab", "~c", "~c"),
    _q("abab", "ab", "~c", "~c~c"),
    _q("a", "a", "~b~c", "~b~c"),
    _q("a", "a", "~b", "~b~b~b"),
    _q("c", "c", "~a", "~a~a"),
]
