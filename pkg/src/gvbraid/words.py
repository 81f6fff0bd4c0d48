"""Words and formal sums in the positive generalized virtual braid monoid.

The monoid GVB_n^+ has two families of generators on n strands: crossings
``s1 .. s{n-1}`` (written sigma_i in math notation) and virtual crossings
``x1 .. x{n-1}`` (xi_i).  Defining relations, all length-preserving:

  distant letters commute          si sj = sj si,  si xj = xj si,
                                   xi xj = xj xi          for |i - j| > 1
  crossing braid relation          si s{i+1} si = s{i+1} si s{i+1}
  virtual braid relation           xi x{i+1} xi = x{i+1} xi x{i+1}
  mixed relations                  xi s{i+1} si = s{i+1} si x{i+1}
                                   x{i+1} si s{i+1} = si s{i+1} xi

Words multiply by concatenation and act like function composition: in
``w = g1 g2 ... gk`` the rightmost letter acts first (matching the
permutation convention in :mod:`gvbraid.symgroup`).

Formal Z[q^±1, t^±1]-linear combinations of words (:class:`WordSum`) model
the monoid algebra.  Two algebra quotients are provided:

- :func:`drop_virtual_terms` kills every word containing a virtual letter
  (the quotient sending x_i to 0), leaving the positive braid monoid algebra;
- :func:`cancel_double_crossings` imposes s_i^2 = 1, the quotient onto the
  monoid where crossings are involutive.

At the group/monoid level, :func:`erase_virtual_letters` deletes virtual
letters (x_i -> identity) and :func:`to_permutation` sends every generator to
the transposition with the same index.  These quotients commute: killing the
virtual letters first, or cancelling double crossings first, or projecting
straight down, all land on the same permutation.

Naming note: in this presentation the *crossing* family s_i is the one whose
involutivity is imposed by :func:`cancel_double_crossings`, while the virtual
family x_i stays free; representations may additionally make x_i involutive
(see :mod:`gvbraid.rmatrix`).
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Union

from .scalars import DEFAULT_VARIABLES, ONE, Scalar, rational
from .symgroup import Permutation, identity, transposition

__all__ = [
    "BRAID",
    "Generator",
    "GvbWord",
    "RelationInstance",
    "VIRTUAL",
    "WordSum",
    "braid_gen",
    "cancel_double_crossings",
    "drop_virtual_terms",
    "empty_word",
    "equivalent_bounded",
    "erase_virtual_letters",
    "parse_word",
    "relation_instances",
    "to_permutation",
    "virtual_gen",
    "word",
]

BRAID = "s"
VIRTUAL = "x"


class Generator(NamedTuple):
    """A single monoid generator: kind 's' (crossing) or 'x' (virtual)."""

    kind: str
    index: int

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


def braid_gen(index: int) -> Generator:
    return Generator(BRAID, index)


def virtual_gen(index: int) -> Generator:
    return Generator(VIRTUAL, index)


@dataclass(frozen=True)
class GvbWord:
    """A word in GVB_n^+: strand count plus a tuple of generators."""

    strands: int
    letters: tuple[Generator, ...] = ()

    def __post_init__(self):
        if self.strands < 0:
            raise ValueError("strand count must be nonnegative")
        for g in self.letters:
            if g.kind not in (BRAID, VIRTUAL):
                raise ValueError(f"unknown generator kind {g.kind!r}")
            if not 1 <= g.index <= self.strands - 1:
                raise ValueError(
                    f"generator index {g.index} out of range 1..{self.strands - 1}"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "GvbWord") -> "GvbWord":
        if other.strands != self.strands:
            raise ValueError("strand count mismatch")
        return GvbWord(self.strands, self.letters + other.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(map(str, self.letters))

    def sort_key(self) -> tuple:
        return (len(self.letters), tuple((g.kind, g.index) for g in self.letters))


def empty_word(strands: int) -> GvbWord:
    return GvbWord(strands, ())


def word(strands: int, letters: Iterable[Union[Generator, tuple[str, int]]]) -> GvbWord:
    return GvbWord(strands, tuple(Generator(*g) for g in letters))


_LETTER = re.compile(r"([sx])(\d+)$")


def parse_word(text: str, strands: int) -> GvbWord:
    """Parse words like ``"s2 s3 x1 s2"``; ``""`` and ``"e"`` are the empty word."""
    text = text.strip()
    if text in ("", "e"):
        return empty_word(strands)
    letters = []
    for piece in text.split():
        match = _LETTER.match(piece)
        if match is None:
            raise ValueError(f"bad generator {piece!r} (expected s<k> or x<k>)")
        letters.append(Generator(match.group(1), int(match.group(2))))
    return GvbWord(strands, tuple(letters))


def to_permutation(w: GvbWord) -> Permutation:
    """Monoid morphism onto S_n sending both s_i and x_i to the transposition s_i.

    >>> to_permutation(parse_word("s2 s3 s1 s2", 4)).images
    (3, 4, 1, 2)
    """
    acc = identity(w.strands)
    for g in w.letters:
        acc = acc * transposition(w.strands, g.index)
    return acc


def erase_virtual_letters(w: GvbWord) -> GvbWord:
    """Monoid-level quotient x_i -> identity: delete every virtual letter."""
    return GvbWord(w.strands, tuple(g for g in w.letters if g.kind == BRAID))


# -- formal sums ---------------------------------------------------------------


class WordSum:
    """A finite Z[q^±1, t^±1]-linear combination of GVB words."""

    __slots__ = ("strands", "terms")

    def __init__(self, strands: int, terms: dict[GvbWord, Scalar] | None = None):
        self.strands = strands
        clean: dict[GvbWord, Scalar] = {}
        if terms:
            for w, coeff in terms.items():
                if w.strands != strands:
                    raise ValueError("strand count mismatch in word sum")
                if not coeff.is_zero():
                    clean[w] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, strands: int) -> "WordSum":
        return cls(strands, {})

    @classmethod
    def unit(cls, strands: int) -> "WordSum":
        return cls(strands, {empty_word(strands): ONE})

    @classmethod
    def of(cls, w: GvbWord, coeff: Scalar = ONE) -> "WordSum":
        return cls(w.strands, {w: coeff})

    def __add__(self, other: "WordSum") -> "WordSum":
        if other.strands != self.strands:
            raise ValueError("strand count mismatch")
        merged = dict(self.terms)
        for w, coeff in other.terms.items():
            acc = merged.get(w)
            merged[w] = coeff if acc is None else acc + coeff
        return WordSum(self.strands, merged)

    def __sub__(self, other: "WordSum") -> "WordSum":
        return self + other.scale(rational(-1))

    def scale(self, coeff: Scalar) -> "WordSum":
        return WordSum(self.strands, {w: coeff * c for w, c in self.terms.items()})

    def __mul__(self, other: Union["WordSum", GvbWord]) -> "WordSum":
        """Concatenation product, extended bilinearly."""
        if isinstance(other, GvbWord):
            other = WordSum.of(other)
        if other.strands != self.strands:
            raise ValueError("strand count mismatch")
        out: dict[GvbWord, Scalar] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 * w2
                coeff = c1 * c2
                acc = out.get(w)
                out[w] = coeff if acc is None else acc + coeff
        return WordSum(self.strands, out)

    def reindexed(self, shift: int, strands: int) -> "WordSum":
        """Shift every generator index by ``shift`` into an n=``strands`` monoid."""
        out = {}
        for w, coeff in self.terms.items():
            letters = tuple(Generator(g.kind, g.index + shift) for g in w.letters)
            out[GvbWord(strands, letters)] = coeff
        return WordSum(strands, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WordSum):
            return NotImplemented
        return self.strands == other.strands and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[GvbWord, Scalar]]:
        return sorted(self.terms.items(), key=lambda item: item[0].sort_key())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for w, coeff in self.sorted_terms():
            if coeff.is_one():
                pieces.append(f"({w})")
            else:
                pieces.append(f"({coeff})*({w})")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"WordSum({self.strands}, {str(self)})"


def drop_virtual_terms(ws: WordSum) -> WordSum:
    """Algebra quotient x_i -> 0: delete every term containing a virtual letter."""
    kept = {
        w: coeff
        for w, coeff in ws.terms.items()
        if all(g.kind == BRAID for g in w.letters)
    }
    return WordSum(ws.strands, kept)


def _cancel_word(letters: tuple[Generator, ...]) -> tuple[Generator, ...]:
    out: list[Generator] = []
    for g in letters:
        if out and g.kind == BRAID and out[-1] == g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def cancel_double_crossings(ws: WordSum) -> WordSum:
    """Algebra quotient s_i^2 -> 1: cancel adjacent equal crossings in every word.

    Virtual letters never cancel.  Terms whose words become equal after
    cancellation are combined.
    """
    out: dict[GvbWord, Scalar] = {}
    for w, coeff in ws.terms.items():
        reduced = GvbWord(w.strands, _cancel_word(w.letters))
        acc = out.get(reduced)
        out[reduced] = coeff if acc is None else acc + coeff
    return WordSum(ws.strands, out)


# -- defining relations --------------------------------------------------------


class RelationInstance(NamedTuple):
    name: str
    lhs: GvbWord
    rhs: GvbWord


def relation_instances(strands: int) -> list[RelationInstance]:
    """All defining relation instances of GVB_n^+ on ``strands`` strands."""
    n = strands
    out: list[RelationInstance] = []

    def w(*letters: Generator) -> GvbWord:
        return GvbWord(n, letters)

    s, x = braid_gen, virtual_gen
    for i in range(1, n - 1):
        j = i + 1
        out.append(RelationInstance(f"crossing_braid_{i}", w(s(i), s(j), s(i)), w(s(j), s(i), s(j))))
        out.append(RelationInstance(f"virtual_braid_{i}", w(x(i), x(j), x(i)), w(x(j), x(i), x(j))))
        out.append(RelationInstance(f"mixed_low_{i}", w(x(i), s(j), s(i)), w(s(j), s(i), x(j))))
        out.append(RelationInstance(f"mixed_high_{i}", w(x(j), s(i), s(j)), w(s(i), s(j), x(i))))
    for i in range(1, n - 1):
        for j in range(i + 2, n):
            out.append(RelationInstance(f"commute_ss_{i}_{j}", w(s(i), s(j)), w(s(j), s(i))))
            out.append(RelationInstance(f"commute_xx_{i}_{j}", w(x(i), x(j)), w(x(j), x(i))))
            out.append(RelationInstance(f"commute_sx_{i}_{j}", w(s(i), x(j)), w(x(j), s(i))))
            out.append(RelationInstance(f"commute_xs_{i}_{j}", w(x(i), s(j)), w(s(j), x(i))))
    return out


@lru_cache(maxsize=None)
def _rewrite_rules(strands: int) -> tuple[tuple[tuple[Generator, ...], tuple[Generator, ...]], ...]:
    rules = []
    for rel in relation_instances(strands):
        rules.append((rel.lhs.letters, rel.rhs.letters))
        rules.append((rel.rhs.letters, rel.lhs.letters))
    return tuple(rules)


def equivalent_bounded(w1: GvbWord, w2: GvbWord, max_steps: int = 1000) -> str:
    """Breadth-first search through relation rewrites, bounded by ``max_steps``
    node expansions.  Returns ``"equivalent"`` when w2 is reached, otherwise
    ``"unknown"`` (the relations preserve length, so this is a semi-decision).

    >>> equivalent_bounded(parse_word("x1 s2 s1", 3), parse_word("s2 s1 x2", 3))
    'equivalent'
    """
    if w1.strands != w2.strands:
        raise ValueError("strand count mismatch")
    if w1.letters == w2.letters:
        return "equivalent"
    if len(w1.letters) != len(w2.letters):
        return "unknown"  # length-preserving relations can never connect them
    rules = _rewrite_rules(w1.strands)
    start, goal = w1.letters, w2.letters
    seen = {start}
    frontier = deque([start])
    expansions = 0
    while frontier and expansions < max_steps:
        current = frontier.popleft()
        expansions += 1
        for lhs, rhs in rules:
            span = len(lhs)
            for pos in range(len(current) - span + 1):
                if current[pos : pos + span] == lhs:
                    candidate = current[:pos] + rhs + current[pos + span :]
                    if candidate == goal:
                        return "equivalent"
                    if candidate not in seen:
                        seen.add(candidate)
                        frontier.append(candidate)
    return "unknown"
