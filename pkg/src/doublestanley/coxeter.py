"""Words in the generators of A_n and C_{n+1}, and signed permutations.

Letters are plain ints: ``i`` is the generator ``s_i`` and ``-i`` is the
barred generator ``s_{-i}``.  Bars only matter for factorization data;
evaluation strips them since ``s_{-i} = s_i``.

A word ``a_1 ... a_m`` evaluates to the product ``s_{a_1} ... s_{a_m}``,
computed by right multiplication on the window: ``s_i`` (i >= 1) swaps
window positions ``i`` and ``i+1`` and ``s_0`` negates position 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ParseError, ResourceCapError

DEFAULT_LENGTH_CAP = 12


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...]
    rank: int = field(default=0)
    group_type: str = field(default="")

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        object.__setattr__(self, "letters", letters)
        gtype = self.group_type or ("C" if 0 in letters else "A")
        if gtype not in ("A", "C"):
            raise DomainError(f"unknown group type {gtype!r}")
        object.__setattr__(self, "group_type", gtype)
        rank = self.rank or max((abs(a) for a in letters), default=1)
        object.__setattr__(self, "rank", rank)
        low = 1 if gtype == "A" else 0
        for a in letters:
            if not low <= abs(a) <= rank:
                raise DomainError(
                    f"letter {a} out of range for type {gtype} rank {rank}")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def unsigned(self) -> tuple[int, ...]:
        return tuple(abs(a) for a in self.letters)

    def __str__(self):
        return format_word(self.letters)

    @classmethod
    def parse(cls, text: str, rank: int = 0, group_type: str = "") -> "Word":
        return cls(parse_word(text), rank, group_type)


def parse_word(text: str) -> tuple[int, ...]:
    """Parse ``"-3,-2,1"`` into a letter tuple.  The empty string is the empty word."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad word {text!r}") from exc


def format_word(letters: Iterable[int]) -> str:
    return ",".join(str(a) for a in letters)


@dataclass(frozen=True, order=True)
class SignedPermutation:
    """Window notation ``[w(1), ..., w(n+1)]`` of an element of C_{n+1}."""

    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(v) for v in self.window)
        object.__setattr__(self, "window", window)
        if sorted(abs(v) for v in window) != list(range(1, len(window) + 1)):
            raise DomainError(f"{list(window)} is not a signed permutation")

    @classmethod
    def identity(cls, rank: int) -> "SignedPermutation":
        return cls(tuple(range(1, rank + 2)))

    @classmethod
    def parse(cls, text: str) -> "SignedPermutation":
        body = text.strip().strip("[]{}() ")
        try:
            values = tuple(int(v) for v in body.replace(" ", "").split(",") if v)
        except ValueError as exc:
            raise ParseError(f"bad window {text!r}") from exc
        if not values:
            raise ParseError("empty window")
        try:
            return cls(values)
        except DomainError as exc:
            raise ParseError(str(exc)) from exc

    def __str__(self):
        return "[" + ",".join(str(v) for v in self.window) + "]"

    @property
    def rank(self) -> int:
        return len(self.window) - 1

    @property
    def is_type_a(self) -> bool:
        return all(v > 0 for v in self.window)

    def __call__(self, i: int) -> int:
        return self.window[i - 1] if i > 0 else -self.window[-i - 1]

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return SignedPermutation(tuple(self(other(i)) for i in range(1, len(self.window) + 1)))

    def inverse(self) -> "SignedPermutation":
        inv = [0] * len(self.window)
        for i, v in enumerate(self.window, start=1):
            inv[abs(v) - 1] = i if v > 0 else -i
        return SignedPermutation(tuple(inv))

    def times_generator(self, a: int) -> "SignedPermutation":
        """Right multiplication by ``s_a`` (bars ignored)."""
        a = abs(a)
        w = list(self.window)
        if a == 0:
            w[0] = -w[0]
        elif a <= self.rank:
            w[a - 1], w[a] = w[a], w[a - 1]
        else:
            raise DomainError(f"generator s_{a} not in rank {self.rank}")
        return SignedPermutation(tuple(w))

    def length(self) -> int:
        return length(self)

    def is_right_descent(self, a: int) -> bool:
        w = self.window
        return w[0] < 0 if a == 0 else w[a - 1] > w[a]

    def right_descents(self) -> tuple[int, ...]:
        gens = range(0 if not self.is_type_a else 1, self.rank + 1)
        return tuple(a for a in gens if self.is_right_descent(a))


def length(p: SignedPermutation) -> int:
    """Coxeter length: inversions, plus negative-sum pairs and negative entries."""
    w = p.window
    inv = nsp = 0
    for i, j in itertools.combinations(range(len(w)), 2):
        if w[i] > w[j]:
            inv += 1
        if w[i] + w[j] < 0:
            nsp += 1
    return inv + nsp + sum(1 for v in w if v < 0)


def evaluate(word: Word | Sequence[int], rank: int | None = None) -> SignedPermutation:
    if not isinstance(word, Word):
        word = Word(tuple(word), rank or 0)
    elif rank is not None and rank != word.rank:
        word = Word(word.letters, rank, word.group_type)
    p = SignedPermutation.identity(word.rank)
    for a in word.letters:
        p = p.times_generator(a)
    return p


def is_reduced(word: Word | Sequence[int], rank: int | None = None) -> bool:
    letters = word.letters if isinstance(word, Word) else tuple(word)
    return length(evaluate(word, rank)) == len(letters)


def reduced_words(p: SignedPermutation, cap: int = DEFAULT_LENGTH_CAP) -> tuple[tuple[int, ...], ...]:
    """All reduced words of ``p`` (plain letters), in lexicographic order."""
    ell = length(p)
    if ell > cap:
        raise ResourceCapError(f"length {ell} exceeds cap {cap}")
    return _reduced_words(p)


@lru_cache(maxsize=None)
def _reduced_words(p: SignedPermutation) -> tuple[tuple[int, ...], ...]:
    descents = [a for a in range(0, p.rank + 1) if p.is_right_descent(a)]
    if not descents:
        return ((),)
    words = [w + (a,) for a in descents for w in _reduced_words(p.times_generator(a))]
    return tuple(sorted(words))


def elements(rank: int, group_type: str = "A", max_length: int | None = None) -> list[SignedPermutation]:
    """Every element of A_rank or C_{rank+1}, sorted by (length, window)."""
    out = []
    n = rank + 1
    signs = [(1,)] * n if group_type == "A" else [(1, -1)] * n
    for perm in itertools.permutations(range(1, n + 1)):
        for sgn in itertools.product(*signs):
            p = SignedPermutation(tuple(s * v for s, v in zip(sgn, perm)))
            if max_length is None or length(p) <= max_length:
                out.append(p)
    out.sort(key=lambda p: (length(p), p.window))
    return out


def cayley_distances(rank: int, group_type: str = "C") -> dict[SignedPermutation, int]:
    """Breadth-first distances from the identity in the Cayley graph."""
    gens = range(0 if group_type == "C" else 1, rank + 1)
    start = SignedPermutation.identity(rank)
    dist = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for p in frontier:
            for a in gens:
                q = p.times_generator(a)
                if q not in dist:
                    dist[q] = dist[p] + 1
                    nxt.append(q)
        frontier = nxt
    return dist


def s0_count(words: Iterable[Sequence[int]]) -> set[int]:
    return {sum(1 for a in w if a == 0) for w in words}


def iter_words(alphabet: Sequence[int], max_len: int) -> Iterator[tuple[int, ...]]:
    for m in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=m)
