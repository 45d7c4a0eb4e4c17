"""Verified witness equations showing letter images must commute or align.

Each builder takes queue-monoid elements satisfying structural hypotheses,
derives exponent vectors from a small exact linear system, assembles the
two sides of an equation, and verifies the equation by normal forms before
returning it.  A report with verified=False is never returned; a failed
check raises VerificationFailedError instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    CapExceededError,
    DegenerateSystemError,
    EmptyWordError,
    InternalError,
    PreconditionError,
    RootMismatchError,
    VerificationFailedError,
)
from .queue import (
    QueueNormalForm,
    QueueWord,
    equivalent,
    format_queue_word,
    normal_form,
    project_neg,
    project_pos,
)
from .words import (
    ConjugacyDecomposition,
    Word,
    conjugacy_decomposition,
    is_primitive,
    power_exponent,
    primitive_root,
)

_ENLARGE_CAP = 1_000_000


@dataclass(frozen=True)
class WitnessReport:
    """A verified equation between two products of powers.

    kind is one of 'p2p3', 'nonconjugated', 'conjugated:trivial',
    'conjugated:vwu', 'conjugated:wuv', or 'p4'.  For 'p4' the x vector has
    five entries (x_t, x_u1, x_u2, x_v, x_w) and y is None; otherwise x and
    y list the exponents of the three factors on each side.
    """

    kind: str
    x: tuple[int, ...]
    y: tuple[int, ...] | None
    lhs: QueueWord
    rhs: QueueWord
    verified: bool

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "x": list(self.x),
            "y": None if self.y is None else list(self.y),
            "lhs": format_queue_word(self.lhs),
            "rhs": format_queue_word(self.rhs),
            "verified": self.verified,
        }


# -- exact linear algebra -----------------------------------------------------

def _integer_kernel_vector(rows: Sequence[Sequence[int]], ncols: int) -> tuple[int, ...] | None:
    """One nonzero integer kernel vector of the given row system, or None.

    Deterministic: reduced row echelon form, first free variable set to one,
    denominators cleared, content divided out, first nonzero entry positive.
    """
    mat = [[Fraction(x) for x in row] for row in rows if any(row)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c]
        mat[r] = [x / inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    sol = [Fraction(0)] * ncols
    sol[free[0]] = Fraction(1)
    for i, c in enumerate(pivots):
        sol[c] = -mat[i][free[0]]
    denom = math.lcm(*(x.denominator for x in sol))
    ints = [int(x * denom) for x in sol]
    content = math.gcd(*ints)
    ints = [x // content for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def solve_projection_system(
    a: Sequence[int], b: Sequence[int], min_entry: int = 0
) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
    """Distinct vectors x, y over the naturals with a.x = a.y and b.x = b.y.

    All six entries are at least min_entry.  Found by taking an integer
    kernel vector of the two rows, splitting it into its positive and
    negative parts, and shifting both sides by the same constant, which
    preserves the equations because the coefficient rows are shared.
    """
    a = tuple(a)
    b = tuple(b)
    if len(a) != 3 or len(b) != 3:
        raise PreconditionError("coefficient rows must have three entries")
    if min_entry < 0:
        raise PreconditionError("min_entry must be nonnegative")
    if not any(a) and not any(b):
        raise DegenerateSystemError("both coefficient rows are zero")
    z = _integer_kernel_vector([a, b], 3)
    if z is None:
        raise InternalError("two equations in three unknowns left no kernel")
    x = tuple(max(zi, 0) + min_entry for zi in z)
    y = tuple(max(-zi, 0) + min_entry for zi in z)
    if sum(ai * xi for ai, xi in zip(a, x)) != sum(ai * yi for ai, yi in zip(a, y)):
        raise InternalError("kernel vector fails the first row")
    if sum(bi * xi for bi, xi in zip(b, x)) != sum(bi * yi for bi, yi in zip(b, y)):
        raise InternalError("kernel vector fails the second row")
    return x, y  # type: ignore[return-value]


# -- witness builders ---------------------------------------------------------

def _require(cond: bool, message: str) -> None:
    if not cond:
        raise PreconditionError(message)


def _verify(kind: str, x, y, lhs: QueueWord, rhs: QueueWord) -> WitnessReport:
    if not equivalent(lhs, rhs):
        raise VerificationFailedError(
            f"{kind} equation failed its normal-form check: "
            f"{format_queue_word(lhs)} vs {format_queue_word(rhs)}"
        )
    return WitnessReport(kind, tuple(x), None if y is None else tuple(y), lhs, rhs, True)


def p2p3_witness(u: QueueWord, v: QueueWord, w: QueueWord) -> WitnessReport:
    """Nontrivial identity u^xu v^xv u w^xw = u^yu w^yw u v^yv.

    Requires nonempty u, v, w where u only writes, v and w commute, and v
    and w are inequivalent.  The exponents for v and w come from a case
    split on the exponents of the shared primitive roots of the write and
    read projections; u's exponent is the least one making the write block
    long enough to absorb all reads to its right.
    """
    _require(bool(u) and bool(v) and bool(w), "u, v, w must be nonempty")
    _require(not project_neg(u), "u must not read")
    _require(equivalent(v + w, w + v), "v and w must commute")
    _require(not equivalent(v, w), "v and w must be inequivalent")

    a_v, a_w = _common_root_exponents(project_pos(v), project_pos(w))
    b_v, b_w = _common_root_exponents(project_neg(v), project_neg(w))

    if a_v == 0:
        x_v, y_v, x_w, y_w = 1, 1, 0, 0
    elif a_w == 0:
        x_v, y_v, x_w, y_w = 0, 0, 1, 1
    elif a_v * b_w == a_w * b_v:
        x_v = y_v = a_w + b_w
        x_w = y_w = a_v + b_v
    else:
        z = _integer_kernel_vector(
            [
                (a_v, 0, 0, -a_w),
                (0, a_w, -a_v, 0),
                (b_v, b_w, -b_v, -b_w),
            ],
            4,
        )
        if z is None:
            raise InternalError("proportional exponent system left no kernel")
        signs = {1 if e > 0 else -1 for e in z if e}
        if len(signs) != 1:
            raise InternalError("exponent solution is not sign coherent")
        x_v, x_w, y_v, y_w = (abs(e) for e in z)

    reads = len(project_neg(v)) * x_v + len(project_neg(w)) * x_w
    x_u = -(-reads // len(u))
    lhs = u * x_u + v * x_v + u + w * x_w
    rhs = u * x_u + w * y_w + u + v * y_v
    report = _verify("p2p3", (x_u, x_v, x_w), (x_u, y_v, y_w), lhs, rhs)
    if x_v + x_w == 0:
        raise InternalError("trivial exponents for v and w")
    return report


def _common_root_exponents(first: Word, second: Word) -> tuple[int, int]:
    """Exponents of both words over their shared primitive root.

    An empty projection contributes exponent zero; words known to commute
    always share a root, so a mismatch is an internal error.
    """
    if first and second:
        root, e1 = primitive_root(first)
        e2 = power_exponent(second, root)
        if e2 is None:
            raise InternalError("commuting projections with different roots")
        return e1, e2
    if first:
        return primitive_root(first)[1], 0
    if second:
        return 0, primitive_root(second)[1]
    return 0, 0


def nonconjugated_witness(
    u: QueueWord, v: QueueWord, w: QueueWord, p: Word, q: Word
) -> WitnessReport:
    """Identity u^xu v^xv w^xw = u^yu v^yv w^yw with x distinct from y.

    p and q must be primitive and not conjugate; the write projections of
    u, v, w must be positive powers of p and the read projections positive
    powers of q.  Exponent vectors solve the projection-length system and
    are then enlarged uniformly until both sides are long enough that the
    central factor is pinned by the projections alone.
    """
    if not p or not q:
        raise EmptyWordError("p and q must be nonempty")
    _require(is_primitive(p), f"p is not primitive: {p!r}")
    _require(is_primitive(q), f"q is not primitive: {q!r}")
    if len(p) == len(q) and conjugacy_decomposition(p, q) is not None:
        raise PreconditionError("p and q must not be conjugate")

    a = tuple(_positive_exponent(project_pos(x), p, "write") for x in (u, v, w))
    b = tuple(_positive_exponent(project_neg(x), q, "read") for x in (u, v, w))
    x0, y0 = solve_projection_system(a, b, min_entry=0)

    need = len(p) + len(q)
    for n in range(_ENLARGE_CAP):
        xs = tuple(e + n for e in x0)
        ys = tuple(e + n for e in y0)
        long_enough = all(
            (
                need <= b[2] * vec[2] * len(q)
                and need <= (a[0] * vec[0] + a[1] * vec[1]) * len(p)
            )
            for vec in (xs, ys)
        )
        if long_enough:
            break
    else:
        raise CapExceededError("enlargement bound reached")

    lhs = u * xs[0] + v * xs[1] + w * xs[2]
    rhs = u * ys[0] + v * ys[1] + w * ys[2]
    report = _verify("nonconjugated", xs, ys, lhs, rhs)
    if xs == ys:
        raise InternalError("exponent vectors collapsed")
    return report


def _positive_exponent(proj: Word, base: Word, which: str) -> int:
    e = power_exponent(proj, base)
    if not e:
        raise PreconditionError(
            f"{which} projection {proj!r} is not a positive power of {base!r}"
        )
    return e


# -- powers with conjugate roots ----------------------------------------------

def conjugacy_profile(
    x: QueueNormalForm, dec: ConjugacyDecomposition
) -> tuple[int, int, int]:
    """Parameters (a, b, c) of an element whose projections are powers of p, q.

    a and b are the positive exponents with pos = p^a and neg = q^b; c is
    -1 when the center is shorter than g and |center| // |q| otherwise.
    """
    a = _positive_exponent(x.pos(), dec.p, "write")
    b = _positive_exponent(x.neg(), dec.q, "read")
    if len(x.center) < len(dec.g):
        c = -1
    else:
        c = len(x.center) // len(dec.q)
    return a, b, c


def _mixed_rows(
    profiles: Sequence[tuple[int, int, int]], x: Sequence[int]
) -> tuple[int, int, int]:
    (a_u, b_u, c_u), (a_v, b_v, c_v), (a_w, b_w, c_w) = profiles
    x_u, x_v, x_w = x
    m_u, m_v, m_w = min(a_u, b_u), min(a_v, b_v), min(a_w, b_w)
    return (
        m_u * x_u + b_v * x_v + b_w * x_w + c_u - m_u,
        a_u * x_u + m_v * x_v + b_w * x_w + c_v - m_v,
        a_u * x_u + a_v * x_v + m_w * x_w + c_w - m_w,
    )


def mixed_exponent(
    dec: ConjugacyDecomposition,
    profiles: Sequence[tuple[int, int, int]],
    x: Sequence[int],
) -> int:
    """Exponent X with center(u^xu v^xv w^xw) = g q^X for conjugate roots.

    profiles lists (a, b, c) for the three factors as produced by
    conjugacy_profile, with a, b >= 1; every exponent in x must be >= 2.
    X is the least of three affine forms, one per factor, each charging the
    factors to its left by their write exponents and those to its right by
    their read exponents.
    """
    profiles = tuple(tuple(p) for p in profiles)
    x = tuple(x)
    if len(profiles) != 3 or any(len(p) != 3 for p in profiles):
        raise PreconditionError("profiles must be three (a, b, c) triples")
    if len(x) != 3:
        raise PreconditionError("x must have three entries")
    if any(p[0] < 1 or p[1] < 1 for p in profiles):
        raise PreconditionError("projection exponents must be positive")
    if any(e < 2 for e in x):
        raise PreconditionError("every exponent must be at least 2")
    return min(_mixed_rows(profiles, x))


_ROTATIONS = (("trivial", (0, 1, 2)), ("vwu", (1, 2, 0)), ("wuv", (2, 0, 1)))


def conjugated_witness(
    u: QueueWord, v: QueueWord, w: QueueWord, dec: ConjugacyDecomposition
) -> WitnessReport:
    """Identity between two products of powers for conjugate roots p = gh, q = hg.

    The write projections of u, v, w must be positive powers of p and the
    read projections positive powers of q.  The inputs are rotated so that
    either all factors are balanced, the first writes more than it reads,
    or the last reads more than it writes; exponents solve the projection
    system with entries at least two and one coordinate is raised until the
    designated row of the center formula is the minimum on both sides.
    """
    words = (u, v, w)
    profiles = tuple(conjugacy_profile(normal_form(x), dec) for x in words)

    if all(a == b for a, b, _ in profiles):
        name, idx, case = "trivial", (0, 1, 2), "balanced"
    else:
        for name, idx in _ROTATIONS:
            a, b, _ = profiles[idx[0]]
            if a > b:
                case = "pos-heavy"
                break
        else:
            for name, idx in _ROTATIONS:
                a, b, _ = profiles[idx[2]]
                if a < b:
                    case = "neg-heavy"
                    break
            else:
                raise InternalError("no rotation applicable to unbalanced input")

    rwords = tuple(words[i] for i in idx)
    rprof = tuple(profiles[i] for i in idx)
    a_row = tuple(p[0] for p in rprof)
    b_row = tuple(p[1] for p in rprof)
    x0, y0 = solve_projection_system(a_row, b_row, min_entry=2)

    if case == "balanced":
        x, y = x0, y0
    else:
        coord, row = (0, 0) if case == "pos-heavy" else (2, 2)
        for k in range(_ENLARGE_CAP):
            x = tuple(e + k if i == coord else e for i, e in enumerate(x0))
            y = tuple(e + k if i == coord else e for i, e in enumerate(y0))
            rows_x = _mixed_rows(rprof, x)
            rows_y = _mixed_rows(rprof, y)
            if rows_x[row] == min(rows_x) and rows_y[row] == min(rows_y):
                break
        else:
            raise CapExceededError("row-domination bound reached")

    if mixed_exponent(dec, rprof, x) != mixed_exponent(dec, rprof, y):
        raise InternalError("center exponents of the two sides disagree")

    lhs = rwords[0] * x[0] + rwords[1] * x[1] + rwords[2] * x[2]
    rhs = rwords[0] * y[0] + rwords[1] * y[1] + rwords[2] * y[2]
    report = _verify(f"conjugated:{name}", x, y, lhs, rhs)
    if x == y:
        raise InternalError("exponent vectors collapsed")
    return report


def p4_witness(t: QueueWord, u: QueueWord, v: QueueWord, w: QueueWord) -> WitnessReport:
    """Identity u^x1 v^xv w t^xt w^xw u^x2 = u^x1 w u^x2 w^xw t^xt v^xv.

    Requires nonempty t, u, v, w where u only writes, v only reads, v and w
    commute, and t and u commute.  The exponents come from the primitive
    roots of u's write projection and v's read projection; the report's x
    lists (x_t, x_u1, x_u2, x_v, x_w) and y is None.
    """
    _require(all((t, u, v, w)), "t, u, v, w must be nonempty")
    _require(not project_neg(u), "u must not read")
    _require(not project_pos(v), "v must not write")
    _require(equivalent(v + w, w + v), "v and w must commute")
    _require(equivalent(t + u, u + t), "t and u must commute")

    p, a_u = primitive_root(project_pos(u))
    q, b_v = primitive_root(project_neg(v))
    a_t = power_exponent(project_pos(t), p)
    if a_t is None:
        raise RootMismatchError(f"write projection of t is not a power of {p!r}")
    b_w = power_exponent(project_neg(w), q)
    if b_w is None:
        raise RootMismatchError(f"read projection of w is not a power of {q!r}")

    reads = (
        len(project_neg(v)) * b_w
        + len(project_neg(w)) * (1 + b_v)
        + len(project_neg(t)) * a_u
    )
    x_u1 = -(-reads // len(u))
    x = (a_u, x_u1, a_t, b_w, b_v)
    lhs = u * x_u1 + v * b_w + w + t * a_u + w * b_v + u * a_t
    rhs = u * x_u1 + w + u * a_t + w * b_v + t * a_u + v * b_w
    report = _verify("p4", x, None, lhs, rhs)
    if a_u == 0 or b_v == 0:
        raise InternalError("trivial exponents for t and w")
    return report
