"""Independence alphabets and the embeddability decision.

An independence alphabet is a finite set of letters together with an
irreflexive symmetric relation, viewed as an undirected graph.  The trace
monoid over it embeds into a direct product of two free monoids exactly
when either every letter has at most one independent partner, or the
letters with partners form a single connected component that is complete
bipartite.  ``decide_embeddable`` returns a recipe in the positive case
and a concrete witness substructure in the negative case.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from .errors import IdentityImageError, ParseError, PreconditionError
from .queue import QueueWord, project_neg, project_pos
from .words import Letter


class IndependenceAlphabet:
    """Letters in declaration order plus an irreflexive symmetric relation."""

    def __init__(
        self,
        letters: Iterable[Letter],
        independent: Iterable[Sequence[Letter]] = (),
    ) -> None:
        self.letters: tuple[Letter, ...] = tuple(letters)
        self._rank: dict[Letter, int] = {}
        for x in self.letters:
            if not isinstance(x, str) or not x:
                raise ParseError(f"letters must be nonempty strings, got {x!r}")
            if x in self._rank:
                raise ParseError(f"duplicate letter {x!r}")
            self._rank[x] = len(self._rank)
        edges: set[tuple[Letter, Letter]] = set()
        adj: dict[Letter, set[Letter]] = {x: set() for x in self.letters}
        for pair in independent:
            pair = tuple(pair)
            if len(pair) != 2:
                raise ParseError(f"independence pair must have two letters, got {pair!r}")
            a, b = pair
            for x in (a, b):
                if x not in self._rank:
                    raise ParseError(f"unknown letter {x!r} in pair {pair!r}")
            if a == b:
                raise ParseError(f"self-pair ({a!r}, {b!r}) is not allowed")
            e = self._canonical(a, b)
            if e in edges:
                raise ParseError(f"duplicate pair ({a!r}, {b!r})")
            edges.add(e)
            adj[a].add(b)
            adj[b].add(a)
        self.edges: frozenset[tuple[Letter, Letter]] = frozenset(edges)
        self._adj = adj

    def _canonical(self, a: Letter, b: Letter) -> tuple[Letter, Letter]:
        if self._rank[a] <= self._rank[b]:
            return (a, b)
        return (b, a)

    def __contains__(self, x: Letter) -> bool:
        return x in self._rank

    def rank(self, x: Letter) -> int:
        return self._rank[x]

    def independent(self, a: Letter, b: Letter) -> bool:
        return a != b and b in self._adj.get(a, ())

    def neighbors(self, x: Letter) -> tuple[Letter, ...]:
        return tuple(y for y in self.letters if y in self._adj[x])

    def degree(self, x: Letter) -> int:
        return len(self._adj[x])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IndependenceAlphabet):
            return NotImplemented
        return self.letters == other.letters and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.letters, self.edges))

    def __repr__(self) -> str:
        pairs = ",".join(f"({a},{b})" for a, b in sorted(self.edges, key=lambda e: (self._rank[e[0]], self._rank[e[1]])))
        return f"IndependenceAlphabet({''.join(self.letters)!r}, [{pairs}])"

    def to_json(self) -> dict:
        ordered = sorted(self.edges, key=lambda e: (self._rank[e[0]], self._rank[e[1]]))
        return {"letters": list(self.letters), "independent": [list(e) for e in ordered]}

    @classmethod
    def from_json(cls, obj: object) -> "IndependenceAlphabet":
        if not isinstance(obj, dict):
            raise ParseError("alphabet file must contain a JSON object")
        unknown = set(obj) - {"letters", "independent"}
        if unknown:
            raise ParseError(f"unknown keys in alphabet file: {sorted(unknown)}")
        letters = obj.get("letters")
        if not isinstance(letters, list):
            raise ParseError("'letters' must be a list")
        independent = obj.get("independent", [])
        if not isinstance(independent, list):
            raise ParseError("'independent' must be a list of pairs")
        return cls(letters, independent)

    @classmethod
    def loads(cls, text: str) -> "IndependenceAlphabet":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        return cls.from_json(obj)

    @classmethod
    def load(cls, path: str) -> "IndependenceAlphabet":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.loads(fh.read())


# -- graph structure ---------------------------------------------------------

def connected_components(g: IndependenceAlphabet) -> list[tuple[Letter, ...]]:
    """Components as tuples in declaration order, listed by their least letter."""
    seen: set[Letter] = set()
    out: list[tuple[Letter, ...]] = []
    for start in g.letters:
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for y in g.neighbors(x):
                if y not in comp:
                    comp.add(y)
                    frontier.append(y)
        seen |= comp
        out.append(tuple(x for x in g.letters if x in comp))
    return out


@dataclass(frozen=True)
class OddCycle:
    """Closed walk of odd length; consecutive vertices are independent pairs."""

    vertices: tuple[Letter, ...]


@dataclass(frozen=True)
class MissingPair:
    """Two letters on opposite sides of the attempted bipartition with no edge."""

    pair: tuple[Letter, Letter]


BipartiteWitness = Union[OddCycle, MissingPair]


def is_complete_bipartite(
    component: Sequence[Letter], g: IndependenceAlphabet
) -> tuple[tuple[Letter, ...], tuple[Letter, ...]] | BipartiteWitness:
    """Check one connected component for being complete bipartite.

    Returns the two parts (smaller first, ties broken by the part holding
    the least letter) or a witness: an OddCycle when the component is not
    bipartite, otherwise a MissingPair that should be independent but is not.
    The component must be a connected component of g containing an edge.
    """
    comp = tuple(component)
    if comp not in connected_components(g):
        raise PreconditionError(f"{comp!r} is not a connected component")
    if len(comp) < 2:
        raise PreconditionError("component has no edge")

    root = comp[0]
    color = {root: 0}
    parent: dict[Letter, Letter | None] = {root: None}
    queue = [root]
    while queue:
        x = queue.pop(0)
        for y in g.neighbors(x):
            if y not in color:
                color[y] = 1 - color[x]
                parent[y] = x
                queue.append(y)
            elif color[y] == color[x]:
                return OddCycle(_cycle_through(x, y, parent))

    part0 = tuple(x for x in comp if color[x] == 0)
    part1 = tuple(x for x in comp if color[x] == 1)
    for a in part0:
        for b in part1:
            if not g.independent(a, b):
                return MissingPair((a, b))
    if len(part1) < len(part0):
        return part1, part0
    return part0, part1


def _cycle_through(
    x: Letter, y: Letter, parent: Mapping[Letter, Letter | None]
) -> tuple[Letter, ...]:
    """Odd cycle from two equally colored endpoints of an edge in a BFS tree."""

    def ancestors(v: Letter) -> list[Letter]:
        chain = [v]
        while parent[chain[-1]] is not None:
            chain.append(parent[chain[-1]])  # type: ignore[arg-type]
        return chain

    up_x, up_y = ancestors(x), ancestors(y)
    common = set(up_x) & set(up_y)
    trim_x = []
    for v in up_x:
        trim_x.append(v)
        if v in common:
            break
    meet = trim_x[-1]
    trim_y = []
    for v in up_y:
        if v == meet:
            break
        trim_y.append(v)
    cycle = tuple(trim_x + list(reversed(trim_y)))
    # canonical orientation: least vertex first, then the smaller neighbor
    k = min(range(len(cycle)), key=lambda i: cycle[i])
    cycle = cycle[k:] + cycle[:k]
    if len(cycle) > 1 and cycle[-1] < cycle[1]:
        cycle = (cycle[0],) + tuple(reversed(cycle[1:]))
    return cycle


def is_p4_free(g: IndependenceAlphabet) -> tuple[Letter, Letter, Letter, Letter] | None:
    """None when g has no induced path on four vertices, else such a path.

    The witness (a, b, c, d) carries edges ab, bc, cd and no other edges
    among the four vertices.
    """
    from itertools import combinations, permutations

    for quad in combinations(g.letters, 4):
        for a, b, c, d in permutations(quad):
            if (
                g.independent(a, b)
                and g.independent(b, c)
                and g.independent(c, d)
                and not g.independent(a, c)
                and not g.independent(a, d)
                and not g.independent(b, d)
            ):
                return (a, b, c, d)
    return None


# -- embeddability classification --------------------------------------------

Role = str  # 'a', 'b', or 'isolated'


@dataclass(frozen=True, eq=True)
class MatchingRecipe:
    """Pairing for alphabets of maximum degree one.

    Maps each letter to (index, role); partners share an index, the letter
    declared first takes role 'a' and its partner role 'b'; letters without
    a partner get a fresh index and role 'isolated'.
    """

    pairing: Mapping[Letter, tuple[int, Role]]


@dataclass(frozen=True, eq=True)
class BipartiteRecipe:
    """Parts of the unique nontrivial component plus the isolated letters."""

    part1: tuple[Letter, ...]
    part2: tuple[Letter, ...]
    isolated: tuple[Letter, ...]


@dataclass(frozen=True, eq=True)
class TwoNontrivialComponents:
    """One edge from each of two distinct components that both have edges."""

    edges: tuple[tuple[Letter, Letter], tuple[Letter, Letter]]


@dataclass(frozen=True, eq=True)
class NotCompleteBipartite:
    witness: BipartiteWitness


@dataclass(frozen=True, eq=True)
class Embeddable:
    recipe: Union[MatchingRecipe, BipartiteRecipe]


@dataclass(frozen=True, eq=True)
class NotEmbeddable:
    reason: Union[TwoNontrivialComponents, NotCompleteBipartite]


Classification = Union[Embeddable, NotEmbeddable]


def decide_embeddable(g: IndependenceAlphabet) -> Classification:
    """Decide embeddability into a product of two free monoids.

    Embeddable when every degree is at most one (matching recipe), or when
    the letters of positive degree form one connected component that is
    complete bipartite (bipartite recipe).  Otherwise the classification
    carries a reason: two nontrivial components are reported in preference
    to a failed bipartiteness check.
    """
    if all(g.degree(x) <= 1 for x in g.letters):
        pairing: dict[Letter, tuple[int, Role]] = {}
        index = 0
        for x in g.letters:
            if x in pairing:
                continue
            nbrs = g.neighbors(x)
            if nbrs:
                pairing[x] = (index, "a")
                pairing[nbrs[0]] = (index, "b")
            else:
                pairing[x] = (index, "isolated")
            index += 1
        return Embeddable(MatchingRecipe(pairing))

    nontrivial = [c for c in connected_components(g) if len(c) > 1]
    if len(nontrivial) > 1:
        first = next(e for e in _ordered_edges(g) if e[0] in set(nontrivial[0]))
        second = next(e for e in _ordered_edges(g) if e[0] in set(nontrivial[1]))
        return NotEmbeddable(TwoNontrivialComponents((first, second)))

    core = nontrivial[0]
    verdict = is_complete_bipartite(core, g)
    if isinstance(verdict, (OddCycle, MissingPair)):
        return NotEmbeddable(NotCompleteBipartite(verdict))
    part1, part2 = verdict
    covered = set(part1) | set(part2)
    isolated = tuple(x for x in g.letters if x not in covered)
    return Embeddable(BipartiteRecipe(part1, part2, isolated))


def _ordered_edges(g: IndependenceAlphabet) -> list[tuple[Letter, Letter]]:
    return sorted(g.edges, key=lambda e: (g.rank(e[0]), g.rank(e[1])))


# -- sign pattern of letter images in the queue monoid -----------------------

@dataclass(frozen=True, eq=True)
class GammaPartition:
    """Letters split by which projections of their image are nonempty."""

    plus: tuple[Letter, ...]
    minus: tuple[Letter, ...]
    plusminus: tuple[Letter, ...]


def gamma_partition(images: Mapping[Letter, QueueWord]) -> GammaPartition:
    """Partition letters by the projections of their queue-monoid images.

    'plus' collects letters whose image only writes, 'minus' those whose
    image only reads, 'plusminus' the rest.  Images equivalent to the
    identity are rejected.
    """
    plus: list[Letter] = []
    minus: list[Letter] = []
    both: list[Letter] = []
    for x, w in images.items():
        has_pos = bool(project_pos(w))
        has_neg = bool(project_neg(w))
        if not has_pos and not has_neg:
            raise IdentityImageError(f"image of {x!r} is the identity")
        if has_pos and has_neg:
            both.append(x)
        elif has_pos:
            plus.append(x)
        else:
            minus.append(x)
    return GammaPartition(tuple(plus), tuple(minus), tuple(both))
