"""Tableaux over plain integers and over the primed/barred alphabet.

Primed-alphabet entries are stored on a doubled integer scale::

    i' -> 2i - 1      i -> 2i      barred i -> -2i

so the order  k̄ < ... < 1̄ < 1' < 1 < 2' < ... < k' < k  is integer order and
a half-unit step is ``+1``.  The text format writes primes as a trailing
apostrophe and bars as a leading minus; rows are separated by ``/`` and
inner (skew) cells are written ``.``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ParseError

# --- entries -----------------------------------------------------------------


def primed(i: int) -> int:
    return 2 * i - 1


def plain(i: int) -> int:
    return 2 * i


def barred(i: int) -> int:
    return -2 * i


def letter(e: int) -> int:
    return -e // 2 if e < 0 else (e + 1) // 2


def is_primed(e: int) -> bool:
    return e > 0 and e % 2 == 1


def is_barred(e: int) -> bool:
    return e < 0


def is_marked(e: int) -> bool:
    return is_barred(e) or is_primed(e)


def format_entry(e: int) -> str:
    if e < 0:
        return f"-{letter(e)}"
    return f"{letter(e)}'" if e % 2 else str(e // 2)


def parse_entry(tok: str) -> int:
    tok = tok.strip()
    try:
        if tok.endswith("'"):
            i = int(tok[:-1])
            if i < 1:
                raise ValueError
            return primed(i)
        i = int(tok)
    except ValueError as exc:
        raise ParseError(f"bad entry {tok!r}") from exc
    if i == 0:
        raise ParseError("0 is not in the primed alphabet")
    return barred(-i) if i < 0 else plain(i)


# --- partitions --------------------------------------------------------------


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(1 for part in lam if part > c) for c in range(lam[0])) if lam and lam[0] else ()


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def strict_partitions(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(lam for lam in partitions(n) if all(a > b for a, b in zip(lam, lam[1:])))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def strip_zeros(v: Sequence[int]) -> tuple[int, ...]:
    v = list(v)
    while v and v[-1] == 0:
        v.pop()
    return tuple(v)


@dataclass(frozen=True)
class SkewShape:
    lam: tuple[int, ...]
    mu: tuple[int, ...] = ()

    def __post_init__(self):
        lam = strip_zeros(self.lam)
        mu = strip_zeros(self.mu)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        for part in (lam, mu):
            if any(a < b for a, b in zip(part, part[1:])):
                raise DomainError(f"{part} is not a partition")
        if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
            raise DomainError(f"{mu} is not contained in {lam}")

    def mu_row(self, r: int) -> int:
        return self.mu[r] if r < len(self.mu) else 0

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r, l in enumerate(self.lam) for c in range(self.mu_row(r), l)]

    @property
    def size(self) -> int:
        return sum(self.lam) - sum(self.mu)


# --- tableaux ----------------------------------------------------------------


@dataclass(frozen=True)
class Tableau:
    """Rows of entries; ``None`` marks inner cells of a skew shape (row prefixes only)."""

    rows: tuple[tuple[int | None, ...], ...]

    def __post_init__(self):
        rows = [tuple(r) for r in self.rows]
        while rows and all(v is None for v in rows[-1]):
            rows.pop()
        for r in rows:
            seen_filled = False
            for v in r:
                if v is None and seen_filled:
                    raise DomainError("inner cells must precede filled cells in a row")
                seen_filled = seen_filled or v is not None
        object.__setattr__(self, "rows", tuple(rows))
        SkewShape(self.lam, self.mu)  # validates the shape

    @classmethod
    def empty(cls):
        return cls(())

    @classmethod
    def from_cells(cls, cells: dict[tuple[int, int], int], mu: Sequence[int] = ()):
        nrows = max([r + 1 for r, _ in cells] + [len(mu)])
        rows: list[list[int | None]] = [[None] * (mu[r] if r < len(mu) else 0) for r in range(nrows)]
        for (r, c), v in cells.items():
            row = rows[r]
            while len(row) <= c:
                row.append(None)
            row[c] = v
        return cls(tuple(tuple(r) for r in rows))

    @property
    def lam(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def mu(self) -> tuple[int, ...]:
        return strip_zeros(tuple(sum(1 for v in r if v is None) for r in self.rows))

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.lam, self.mu)

    @property
    def size(self) -> int:
        return sum(1 for r in self.rows for v in r if v is not None)

    def get(self, r: int, c: int) -> int | None:
        if 0 <= r < len(self.rows) and 0 <= c < len(self.rows[r]):
            return self.rows[r][c]
        return None

    def cells(self) -> list[tuple[int, int, int]]:
        return [(r, c, v) for r, row in enumerate(self.rows) for c, v in enumerate(row) if v is not None]

    def entries(self) -> list[int]:
        return [v for _, _, v in self.cells()]

    def replace(self, changes: dict[tuple[int, int], int]) -> "Tableau":
        rows = [list(r) for r in self.rows]
        for (r, c), v in changes.items():
            rows[r][c] = v
        return type(self)(tuple(tuple(r) for r in rows))

    def transpose(self) -> "Tableau":
        cells = {(c, r): v for r, c, v in self.cells()}
        return type(self).from_cells(cells, conjugate(self.mu))

    def reading_word(self) -> tuple[int, ...]:
        """Rows left to right, bottom row first."""
        return tuple(v for row in reversed(self.rows) for v in row if v is not None)

    def row_strict(self) -> bool:
        return all(a < b for row in self.rows for a, b in _pairs(row))

    def column_strict(self) -> bool:
        return all(a < b for a, b in self._column_pairs())

    def rows_weak(self) -> bool:
        return all(a <= b for row in self.rows for a, b in _pairs(row))

    def columns_weak(self) -> bool:
        return all(a <= b for a, b in self._column_pairs())

    def _column_pairs(self):
        for r in range(len(self.rows) - 1):
            for c, v in enumerate(self.rows[r + 1]):
                u = self.get(r, c)
                if u is not None and v is not None:
                    yield u, v

    def format_entry(self, v: int) -> str:
        return str(v)

    def __str__(self):
        return " / ".join(" ".join("." if v is None else self.format_entry(v) for v in row)
                          for row in self.rows)

    @classmethod
    def parse_entry(cls, tok: str) -> int:
        try:
            return int(tok)
        except ValueError as exc:
            raise ParseError(f"bad entry {tok!r}") from exc

    @classmethod
    def parse(cls, text: str):
        text = text.strip()
        if not text:
            return cls(())
        rows = []
        for chunk in text.split("/"):
            toks = chunk.split()
            rows.append(tuple(None if t == "." else cls.parse_entry(t) for t in toks))
        try:
            return cls(tuple(rows))
        except DomainError as exc:
            raise ParseError(f"bad tableau {text!r}: {exc}") from exc


def _pairs(row):
    for a, b in zip(row, row[1:]):
        if a is not None and b is not None:
            yield a, b


class PrimedTableau(Tableau):
    """A tableau over the primed/barred alphabet (doubled encoding)."""

    def format_entry(self, v: int) -> str:
        return format_entry(v)

    @classmethod
    def parse_entry(cls, tok: str) -> int:
        return parse_entry(tok)

    def unprimed_positions(self) -> list[tuple[int, int]]:
        """Cells of unmarked entries in reading order (bottom row first)."""
        return [(r, c) for r in range(len(self.rows) - 1, -1, -1)
                for c, v in enumerate(self.rows[r]) if v is not None and v > 0 and v % 2 == 0]

    def reading_word(self) -> tuple[int, ...]:
        """The unprimed letters, rows left to right, bottom row first."""
        return tuple(letter(self.rows[r][c]) for r, c in self.unprimed_positions())

    def max_letter(self) -> int:
        return max((letter(v) for v in self.entries()), default=0)

    def dw(self, k: int | None = None) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(marked counts, unmarked counts) by letter."""
        k = self.max_letter() if k is None else k
        X = [0] * k
        Y = [0] * k
        for v in self.entries():
            i = letter(v)
            if i > k:
                raise DomainError(f"entry {format_entry(v)} exceeds k={k}")
            if is_marked(v):
                X[i - 1] += 1
            else:
                Y[i - 1] += 1
        return tuple(X), tuple(Y)

    def has_bars(self) -> bool:
        return any(v < 0 for v in self.entries())

    def has_primes(self) -> bool:
        return any(is_primed(v) for v in self.entries())


def plus_transform(T: PrimedTableau) -> PrimedTableau:
    """Transpose, then raise every entry by a half unit."""
    if T.has_bars():
        raise DomainError("plus_transform is defined on primed tableaux only")
    return PrimedTableau.from_cells({(c, r): v + 1 for r, c, v in T.cells()}, conjugate(T.mu))


def minus_transform(T: PrimedTableau) -> PrimedTableau:
    """Transpose, then lower every entry by a half unit."""
    if T.has_bars():
        raise DomainError("minus_transform is defined on primed tableaux only")
    if any(v == 1 for v in T.entries()):
        raise DomainError("cannot lower 1' by a half unit")
    return PrimedTableau.from_cells({(c, r): v - 1 for r, c, v in T.cells()}, conjugate(T.mu))


# --- primed signed tableaux ----------------------------------------------------

REASONS = {
    "shape": "shape differs from the requested skew shape",
    "alphabet": "entry outside the alphabet for k",
    "order": "a row or column is not weakly increasing",
    "row-marked": "a row holds two marked copies of one letter",
    "column-unmarked": "a column holds two unmarked copies of one letter",
    "unmarked-count": "unmarked letter counts differ from Y",
    "barred-regime": "letters above j must be barred (X of them) and never primed",
    "primed-regime": "letters up to j must be primed (X of them) and never barred",
}


def pst_violations(T: PrimedTableau, X: Sequence[int], Y: Sequence[int], j: int,
                   shape: SkewShape | None = None) -> list[str]:
    k = len(X)
    if len(Y) != k or not 0 <= j <= k:
        raise DomainError("X and Y must have length k and 0 <= j <= k")
    bad = []
    if shape is not None and T.shape != shape:
        bad.append("shape")
    if any(not 1 <= letter(v) <= k for v in T.entries()):
        bad.append("alphabet")
        return bad
    if not (T.rows_weak() and T.columns_weak()):
        bad.append("order")
    for row in T.rows:
        marked = [letter(v) for v in row if v is not None and is_marked(v)]
        if len(marked) != len(set(marked)):
            bad.append("row-marked")
            break
    cols: dict[int, list[int]] = {}
    for _, c, v in T.cells():
        if not is_marked(v):
            cols.setdefault(c, []).append(letter(v))
    if any(len(col) != len(set(col)) for col in cols.values()):
        bad.append("column-unmarked")
    n_plain = [0] * k
    n_bar = [0] * k
    n_prime = [0] * k
    for v in T.entries():
        i = letter(v) - 1
        if is_barred(v):
            n_bar[i] += 1
        elif is_primed(v):
            n_prime[i] += 1
        else:
            n_plain[i] += 1
    if n_plain != list(Y):
        bad.append("unmarked-count")
    for i in range(1, k + 1):
        if i > j and (n_bar[i - 1] != X[i - 1] or n_prime[i - 1]):
            bad.append("barred-regime")
            break
    for i in range(1, k + 1):
        if i <= j and (n_prime[i - 1] != X[i - 1] or n_bar[i - 1]):
            bad.append("primed-regime")
            break
    return bad


def validate_pst(T: PrimedTableau, X: Sequence[int], Y: Sequence[int], j: int,
                 shape: SkewShape | None = None) -> bool:
    return not pst_violations(T, X, Y, j, shape)


def is_valid_primed(T: PrimedTableau) -> bool:
    """Valid primed tableau (no bars) for its own double weight."""
    if T.has_bars():
        return False
    k = max(T.max_letter(), 1)
    X, Y = T.dw(k)
    return validate_pst(T, X, Y, k)


def regime_of(T: PrimedTableau, k: int) -> list[int]:
    """Every j for which T lies in some PST(., ., ., j)."""
    out = []
    for j in range(k + 1):
        X = [0] * k
        for v in T.entries():
            if is_marked(v):
                X[letter(v) - 1] += 1
        Y = T.dw(k)[1]
        if validate_pst(T, X, Y, j):
            out.append(j)
    return out


def pst_alphabet(k: int, j: int) -> list[int]:
    out = []
    for i in range(1, k + 1):
        out.append(primed(i) if i <= j else barred(i))
        out.append(plain(i))
    return sorted(out)


def enumerate_pst(shape: SkewShape | Sequence[int], k: int, j: int) -> Iterator[PrimedTableau]:
    """All fillings of ``shape`` valid in PST(shape, X, Y, j) for some X, Y."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(tuple(shape))
    alphabet = pst_alphabet(k, j)
    cells = shape.cells()
    grid: dict[tuple[int, int], int] = {}
    row_marked: dict[int, set[int]] = {}
    col_plain: dict[int, set[int]] = {}

    def rec(idx):
        if idx == len(cells):
            yield PrimedTableau.from_cells(dict(grid), shape.mu)
            return
        r, c = cells[idx]
        lo = max(grid.get((r, c - 1), alphabet[0]), grid.get((r - 1, c), alphabet[0]))
        for v in alphabet:
            if v < lo:
                continue
            i = letter(v)
            if is_marked(v):
                if i in row_marked.setdefault(r, set()):
                    continue
                row_marked[r].add(i)
            else:
                if i in col_plain.setdefault(c, set()):
                    continue
                col_plain[c].add(i)
            grid[(r, c)] = v
            yield from rec(idx + 1)
            del grid[(r, c)]
            if is_marked(v):
                row_marked[r].discard(i)
            else:
                col_plain[c].discard(i)

    yield from rec(0)


def enumerate_primed_tableaux(shape, k: int) -> Iterator[PrimedTableau]:
    return enumerate_pst(shape, k, k)


def enumerate_signed_tableaux(shape, k: int) -> Iterator[PrimedTableau]:
    return enumerate_pst(shape, k, 0)


# --- Edelman-Greene tableaux ------------------------------------------------


def enumerate_eg_tableaux(p) -> list[Tableau]:
    """E(p): distinct insertion tableaux over all reduced words of ``p``."""
    from .coxeter import reduced_words
    from .insertion import eg_insert

    if not p.is_type_a:
        raise DomainError(f"{p} is not in type A")
    found = {eg_insert(u)[0] for u in reduced_words(p)}
    return sorted(found, key=lambda T: (tuple(-x for x in T.lam), T.rows))


def eg_tableaux_direct(p) -> list[Tableau]:
    """E(p) by filtering all strictly increasing fillings; independent of insertion."""
    from .coxeter import evaluate, length

    n = p.rank
    ell = length(p)
    found = []
    for lam in partitions(ell):
        cells = SkewShape(lam).cells()
        grid: dict[tuple[int, int], int] = {}

        def rec(idx):
            if idx == len(cells):
                T = Tableau.from_cells(dict(grid))
                if evaluate(T.reading_word(), n) == p:
                    found.append(T)
                return
            r, c = cells[idx]
            lo = max(grid.get((r, c - 1), 0), grid.get((r - 1, c), 0)) + 1
            for v in range(lo, n + 1):
                grid[(r, c)] = v
                rec(idx + 1)
            grid.pop((r, c), None)

        rec(0)
    return sorted(found, key=lambda T: (tuple(-x for x in T.lam), T.rows))


def iter_skew_shapes(max_cells: int, max_rows: int, max_cols: int) -> Iterable[SkewShape]:
    """Nonempty skew shapes inside a box, at most ``max_cells`` cells; no empty last row."""
    def boxed(rows, cols):
        def rec(r, cap):
            if r == rows:
                yield ()
                return
            for part in range(cap, -1, -1):
                for rest in rec(r + 1, part):
                    yield (part,) + rest
        return [strip_zeros(p) for p in rec(0, cols)]

    lams = boxed(max_rows, max_cols)
    for lam in lams:
        for mu in lams:
            if len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam)):
                if lam and len(mu) == len(lam) and mu[-1] == lam[-1]:
                    continue
                size = sum(lam) - sum(mu)
                if 0 < size <= max_cells:
                    yield SkewShape(lam, mu)
