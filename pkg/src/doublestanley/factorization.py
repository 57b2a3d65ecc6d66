"""Reduced increasing, unimodal and signed increasing factorizations."""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .coxeter import DEFAULT_LENGTH_CAP, SignedPermutation, reduced_words
from .errors import DomainError, ParseError

KINDS = ("RIF", "RUF", "RSIF")


@dataclass(frozen=True)
class DoubleWeight:
    neg: tuple[int, ...]
    nonneg: tuple[int, ...]

    def __iter__(self):
        return iter((self.neg, self.nonneg))


@dataclass(frozen=True)
class Factorization:
    blocks: tuple[tuple[int, ...], ...]
    kind: str = "RSIF"

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))
        if self.kind not in KINDS:
            raise DomainError(f"unknown factorization kind {self.kind!r}")

    @property
    def k(self) -> int:
        return len(self.blocks)

    def word(self) -> tuple[int, ...]:
        return tuple(itertools.chain.from_iterable(self.blocks))

    def unsigned_word(self) -> tuple[int, ...]:
        return tuple(abs(a) for a in self.word())

    def weight(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def ne(self) -> int:
        """Number of nonempty blocks."""
        return sum(1 for b in self.blocks if b)

    def __str__(self):
        return "".join("(" + ",".join(str(a) for a in b) + ")" for b in self.blocks)

    @classmethod
    def parse(cls, text: str, kind: str = "RSIF") -> "Factorization":
        text = text.replace(" ", "")
        if not re.fullmatch(r"(\((-?\d+(,-?\d+)*)?\))+", text):
            raise ParseError(f"bad factorization {text!r}")
        blocks = []
        for body in re.findall(r"\(([^)]*)\)", text):
            blocks.append(tuple(int(a) for a in body.split(",")) if body else ())
        return cls(tuple(blocks), kind)


def double_weight(f: Factorization) -> DoubleWeight:
    if f.kind != "RSIF":
        raise DomainError("double weight is defined for signed factorizations only")
    neg = tuple(sum(1 for a in b if a < 0) for b in f.blocks)
    nonneg = tuple(sum(1 for a in b if a >= 0) for b in f.blocks)
    return DoubleWeight(neg, nonneg)


def is_increasing(block: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(block, block[1:]))


def is_unimodal(block: Sequence[int]) -> bool:
    """Strictly decreasing then strictly increasing; either leg may be empty."""
    m = 0
    while m + 1 < len(block) and block[m] > block[m + 1]:
        m += 1
    return is_increasing(block[m:])


def splits(word: Sequence[int], k: int, ok: Callable[[Sequence[int]], bool]) -> Iterator[tuple[int, ...]]:
    """Cut points ``0 <= c_1 <= ... <= c_{k-1} <= len(word)`` with every block accepted by ``ok``."""
    m = len(word)

    def rec(start, left):
        if left == 1:
            if ok(word[start:]):
                yield ()
            return
        for end in range(start, m + 1):
            if not ok(word[start:end]):
                break
            for rest in rec(end, left - 1):
                yield (end,) + rest

    if k < 1:
        raise DomainError("k must be positive")
    yield from rec(0, k)


def _cut(word, cuts):
    bounds = (0,) + cuts + (len(word),)
    return tuple(tuple(word[a:b]) for a, b in zip(bounds, bounds[1:]))


def enumerate_rif(p: SignedPermutation, k: int, cap: int = DEFAULT_LENGTH_CAP) -> list[Factorization]:
    if not p.is_type_a:
        raise DomainError(f"{p} is not in type A")
    out = []
    for u in reduced_words(p, cap):
        for cuts in splits(u, k, is_increasing):
            out.append(Factorization(_cut(u, cuts), "RIF"))
    return out


def enumerate_ruf(p: SignedPermutation, k: int, cap: int = DEFAULT_LENGTH_CAP) -> list[Factorization]:
    out = []
    for u in reduced_words(p, cap):
        for cuts in splits(u, k, is_unimodal):
            out.append(Factorization(_cut(u, cuts), "RUF"))
    return out


def sign_choices(u: Sequence[int]) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every signing of ``u`` as ``(mask, signed word)``; ``0`` is never barred."""
    free = [i for i, a in enumerate(u) if a != 0]
    for bits in itertools.product((0, 1), repeat=len(free)):
        mask = [0] * len(u)
        for i, b in zip(free, bits):
            mask[i] = b
        yield tuple(mask), tuple(-a if b else a for a, b in zip(u, mask))


@functools.lru_cache(maxsize=None)
def _block_signings(block: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    return tuple((mask, signed) for mask, signed in sign_choices(block) if is_increasing(signed))


def enumerate_rsif(p: SignedPermutation, k: int, cap: int = DEFAULT_LENGTH_CAP) -> list[Factorization]:
    """Ordered by (reduced word, cut points, sign mask)."""
    keyed = []
    for u in reduced_words(p, cap):
        for cuts in splits(u, k, lambda b: bool(_block_signings(tuple(b)))):
            blocks = _cut(u, cuts)
            for choice in itertools.product(*(_block_signings(b) for b in blocks)):
                mask = sum((m for m, _ in choice), ())
                keyed.append(((u, cuts, mask), Factorization(tuple(sb for _, sb in choice), "RSIF")))
    keyed.sort(key=lambda kv: kv[0])
    return [f for _, f in keyed]
