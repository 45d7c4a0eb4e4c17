"""Command-line front end.

Exit codes: 0 on success, 2 on parse errors (including bad command lines),
3 on precondition violations, 4 when `embed` is given a non-embeddable
alphabet.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .alphabet import (
    BipartiteRecipe,
    IndependenceAlphabet,
    MatchingRecipe,
    MissingPair,
    NotCompleteBipartite,
    NotEmbeddable,
    OddCycle,
    TwoNontrivialComponents,
    decide_embeddable,
)
from .embed import embed_to_two_free
from .errors import NotEmbeddableError, ParseError, PreconditionError
from .queue import (
    DEFAULT_ALPHABET,
    action,
    action_letter,
    equivalent,
    format_normal_form,
    format_queue_word,
    format_state,
    format_word,
    multiply,
    normal_form,
    parse_queue_word,
    parse_word,
)
from .trace import TraceWord, lex_normal_form, trace_equivalent
from .witness import (
    conjugated_witness,
    nonconjugated_witness,
    p2p3_witness,
    p4_witness,
)
from .words import ConjugacyDecomposition

_WITNESS_ARGS = {
    "p2p3": ("U", "V", "W"),
    "nonconjugated": ("U", "V", "W", "P", "Q"),
    "conjugated": ("U", "V", "W", "G", "H"),
    "p4": ("T", "U", "V", "W"),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quemon",
        description="Queue monoid computations, trace monoids, and embeddings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    def add_queue_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--alphabet",
            metavar="FILE",
            help="independence alphabet JSON declaring the letters",
        )

    p = add("decide", "decide embeddability of an independence alphabet")
    p.add_argument("file", help="independence alphabet JSON")

    p = add("nf", "normal form of a queue word")
    add_queue_flags(p)
    p.add_argument("word")

    p = add("mul", "normal form of the product of two queue words")
    add_queue_flags(p)
    p.add_argument("word1")
    p.add_argument("word2")

    p = add("eq", "decide equivalence of two queue words")
    add_queue_flags(p)
    p.add_argument(
        "--max-len",
        type=int,
        default=8,
        metavar="N",
        help="bound for the distinguishing-queue search (default 8)",
    )
    p.add_argument("word1")
    p.add_argument("word2")

    p = add("action", "apply a queue word to a queue state")
    add_queue_flags(p)
    p.add_argument("queue", help="initial queue contents (may be empty)")
    p.add_argument("word")

    p = add("traceeq", "decide trace equivalence over an independence alphabet")
    p.add_argument("file", help="independence alphabet JSON")
    p.add_argument("word1")
    p.add_argument("word2")

    p = add("lexnf", "lexicographic trace normal form")
    p.add_argument("file", help="independence alphabet JSON")
    p.add_argument("word")

    p = add("embed", "embed a word into a product of two free monoids")
    p.add_argument("file", help="independence alphabet JSON")
    p.add_argument("word")

    p = add("witness", "generate a verified witness equation (JSON)")
    add_queue_flags(p)
    p.add_argument("kind", choices=sorted(_WITNESS_ARGS))
    p.add_argument("args", nargs="*", help="queue words and root words per kind")

    return parser


def _letters(ns: argparse.Namespace) -> tuple[str, ...]:
    if getattr(ns, "alphabet", None):
        return IndependenceAlphabet.load(ns.alphabet).letters
    return DEFAULT_ALPHABET


def _emit(ns: argparse.Namespace, payload: dict, text: str) -> None:
    if ns.json:
        print(json.dumps(payload, sort_keys=False))
    else:
        print(text)


def _nf_payload(nf) -> dict:
    return {
        "reads": format_word(nf.reads),
        "center": format_word(nf.center),
        "writes": format_word(nf.writes),
        "text": format_normal_form(nf),
    }


def _reason_text(reason) -> str:
    if isinstance(reason, NotCompleteBipartite):
        reason = reason.witness
    if isinstance(reason, OddCycle):
        return "odd cycle " + " ".join(reason.vertices)
    if isinstance(reason, MissingPair):
        return "missing pair " + " ".join(reason.pair)
    if isinstance(reason, TwoNontrivialComponents):
        return "two nontrivial components " + ", ".join(
            "-".join(edge) for edge in reason.edges
        )
    return str(reason)


def _reason_payload(reason) -> dict:
    if isinstance(reason, NotCompleteBipartite):
        reason = reason.witness
    if isinstance(reason, OddCycle):
        return {"kind": "odd-cycle", "vertices": list(reason.vertices)}
    if isinstance(reason, MissingPair):
        return {"kind": "missing-pair", "pair": list(reason.pair)}
    assert isinstance(reason, TwoNontrivialComponents)
    return {
        "kind": "two-nontrivial-components",
        "edges": [list(edge) for edge in reason.edges],
    }


def _cmd_decide(ns: argparse.Namespace) -> int:
    g = IndependenceAlphabet.load(ns.file)
    verdict = decide_embeddable(g)
    if isinstance(verdict, NotEmbeddable):
        reason = verdict.reason
        text = "NOT EMBEDDABLE: " + _reason_text(reason)
        payload = {"embeddable": False, "reason": _reason_payload(reason)}
        _emit(ns, payload, text)
        return 0

    recipe = verdict.recipe
    if isinstance(recipe, MatchingRecipe):
        parts = [
            f"{letter}->{index}/{role}"
            for letter, (index, role) in recipe.pairing.items()
        ]
        text = "EMBEDDABLE (matching): " + " ".join(parts)
        payload = {
            "embeddable": True,
            "kind": "matching",
            "pairing": {
                letter: {"index": index, "role": role}
                for letter, (index, role) in recipe.pairing.items()
            },
        }
    else:
        assert isinstance(recipe, BipartiteRecipe)
        text = (
            "EMBEDDABLE (complete bipartite): "
            f"C1={{{','.join(recipe.part1)}}} "
            f"C2={{{','.join(recipe.part2)}}} "
            f"isolated={{{','.join(recipe.isolated)}}}"
        )
        payload = {
            "embeddable": True,
            "kind": "bipartite",
            "part1": list(recipe.part1),
            "part2": list(recipe.part2),
            "isolated": list(recipe.isolated),
        }
    _emit(ns, payload, text)
    return 0


def _cmd_nf(ns: argparse.Namespace) -> int:
    nf = normal_form(parse_queue_word(ns.word, _letters(ns)))
    _emit(ns, _nf_payload(nf), format_normal_form(nf))
    return 0


def _cmd_mul(ns: argparse.Namespace) -> int:
    letters = _letters(ns)
    x = normal_form(parse_queue_word(ns.word1, letters))
    y = normal_form(parse_queue_word(ns.word2, letters))
    nf = multiply(x, y)
    _emit(ns, _nf_payload(nf), format_normal_form(nf))
    return 0


def _distinguishing_queue(u, v, max_len: int):
    """Shortest queue (by length, then letter order) on which u and v act differently."""
    letters = sorted({action_letter(a) for a in u} | {action_letter(a) for a in v})
    level: list[tuple[str, ...]] = [()]
    for _ in range(max_len + 1):
        for q in level:
            if action(q, u) != action(q, v):
                return q
        level = [q + (a,) for q in level for a in letters]
    return None


def _cmd_eq(ns: argparse.Namespace) -> int:
    letters = _letters(ns)
    u = parse_queue_word(ns.word1, letters)
    v = parse_queue_word(ns.word2, letters)
    if equivalent(u, v):
        _emit(ns, {"equivalent": True}, "EQUIVALENT")
        return 0
    queue = _distinguishing_queue(u, v, ns.max_len)
    if queue is None:
        payload = {"equivalent": False, "queue": None}
        text = f"DISTINGUISHED: no separating queue up to length {ns.max_len}"
    else:
        lhs = format_state(action(queue, u))
        rhs = format_state(action(queue, v))
        payload = {
            "equivalent": False,
            "queue": format_word(queue),
            "lhs": lhs,
            "rhs": rhs,
        }
        text = f"DISTINGUISHED queue='{format_word(queue)}' lhs={lhs} rhs={rhs}"
    _emit(ns, payload, text)
    return 0


def _cmd_action(ns: argparse.Namespace) -> int:
    letters = _letters(ns)
    queue = parse_word(ns.queue, letters)
    word = parse_queue_word(ns.word, letters)
    state = action(queue, word)
    _emit(ns, {"state": format_state(state)}, format_state(state))
    return 0


def _cmd_traceeq(ns: argparse.Namespace) -> int:
    g = IndependenceAlphabet.load(ns.file)
    u = TraceWord(g, parse_word(ns.word1, g.letters))
    v = TraceWord(g, parse_word(ns.word2, g.letters))
    eq = trace_equivalent(u, v)
    _emit(ns, {"equivalent": eq}, "EQUIVALENT" if eq else "NOT EQUIVALENT")
    return 0


def _cmd_lexnf(ns: argparse.Namespace) -> int:
    g = IndependenceAlphabet.load(ns.file)
    u = TraceWord(g, parse_word(ns.word, g.letters))
    nf = format_word(lex_normal_form(u).word)
    _emit(ns, {"word": nf}, nf)
    return 0


def _cmd_embed(ns: argparse.Namespace) -> int:
    g = IndependenceAlphabet.load(ns.file)
    u = TraceWord(g, parse_word(ns.word, g.letters))
    image = embed_to_two_free(g, u)
    text = f"({format_word(image.first)} | {format_word(image.second)})"
    payload = {
        "first": format_word(image.first),
        "second": format_word(image.second),
        "text": text,
    }
    _emit(ns, payload, text)
    return 0


def _cmd_witness(ns: argparse.Namespace) -> int:
    expected = _WITNESS_ARGS[ns.kind]
    if len(ns.args) != len(expected):
        raise ParseError(
            f"witness {ns.kind} takes {len(expected)} arguments "
            f"({' '.join(expected)}), got {len(ns.args)}"
        )
    letters = _letters(ns)
    if ns.kind == "p2p3":
        words = [parse_queue_word(a, letters) for a in ns.args]
        report = p2p3_witness(*words)
    elif ns.kind == "nonconjugated":
        u, v, w = (parse_queue_word(a, letters) for a in ns.args[:3])
        p = parse_word(ns.args[3], letters)
        q = parse_word(ns.args[4], letters)
        report = nonconjugated_witness(u, v, w, p, q)
    elif ns.kind == "conjugated":
        u, v, w = (parse_queue_word(a, letters) for a in ns.args[:3])
        g = parse_word(ns.args[3], letters)
        h = parse_word(ns.args[4], letters)
        report = conjugated_witness(u, v, w, ConjugacyDecomposition(g, h))
    else:
        words = [parse_queue_word(a, letters) for a in ns.args]
        report = p4_witness(*words)
    print(json.dumps(report.to_json(), sort_keys=False))
    return 0


_COMMANDS = {
    "decide": _cmd_decide,
    "nf": _cmd_nf,
    "mul": _cmd_mul,
    "eq": _cmd_eq,
    "action": _cmd_action,
    "traceeq": _cmd_traceeq,
    "lexnf": _cmd_lexnf,
    "embed": _cmd_embed,
    "witness": _cmd_witness,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    try:
        return _COMMANDS[ns.command](ns)
    except NotEmbeddableError as exc:
        print(f"not embeddable: {_reason_text(exc.args[0])}", file=sys.stderr)
        return 4
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
