"""Edelman-Greene insertion with primed recording, and Haiman mixed insertion."""

from __future__ import annotations

from typing import Sequence

from .coxeter import is_reduced
from .errors import DomainError
from .factorization import Factorization
from .tableau import (PrimedTableau, Tableau, is_primed, is_valid_primed, letter, plain,
                      primed)

Cell = tuple[int, int]

# --- Edelman-Greene ------------------------------------------------------------


def _eg_row_insert(row: list[int], a: int) -> int | None:
    for idx, b in enumerate(row):
        if b > a:
            if b == a + 1 and a in row:
                return b
            row[idx] = a
            return b
    row.append(a)
    return None


def _eg_insert_into(rows: list[list[int]], a: int) -> Cell:
    r = 0
    while True:
        if r == len(rows):
            rows.append([a])
            return r, 0
        bumped = _eg_row_insert(rows[r], a)
        if bumped is None:
            return r, len(rows[r]) - 1
        a = bumped
        r += 1


def eg_insert(u: Sequence[int]) -> tuple[Tableau, list[Cell]]:
    """Insert the plain reduced word ``u``; returns P and the cell added at each step."""
    u = tuple(u)
    if any(a < 1 for a in u):
        raise DomainError("Edelman-Greene insertion takes plain positive letters")
    if u and not is_reduced(u, max(u)):
        raise DomainError(f"{u} is not reduced")
    rows: list[list[int]] = []
    cells = [_eg_insert_into(rows, a) for a in u]
    return Tableau(tuple(tuple(r) for r in rows)), cells


def _recording_entry(a: int, block: int) -> int:
    return primed(block) if a < 0 else plain(block)


def primed_recording_steps(v: Factorization) -> list[tuple[Tableau, PrimedTableau]]:
    """The (P, Q) pair after each inserted letter."""
    if v.kind != "RSIF":
        raise DomainError("primed recording takes a signed increasing factorization")
    word = v.unsigned_word()
    if any(a < 1 for a in word):
        raise DomainError("primed recording is defined for type A factorizations")
    if word and not is_reduced(word, max(word)):
        raise DomainError(f"{v} is not reduced")
    rows: list[list[int]] = []
    q: dict[Cell, int] = {}
    steps = []
    for block, part in enumerate(v.blocks, start=1):
        for a in part:
            cell = _eg_insert_into(rows, abs(a))
            q[cell] = _recording_entry(a, block)
            steps.append((Tableau(tuple(tuple(r) for r in rows)), PrimedTableau.from_cells(dict(q))))
    return steps


def primed_recording_map(v: Factorization) -> tuple[Tableau, PrimedTableau]:
    steps = primed_recording_steps(v)
    return steps[-1] if steps else (Tableau.empty(), PrimedTableau.empty())


def standardization(Q: PrimedTableau) -> list[Cell]:
    """Cells of Q in standard order: value first; equal unprimed left to right, equal primed top to bottom."""
    def key(cell):
        r, c, v = cell
        return (v, r if is_primed(v) else c)

    return [(r, c) for r, c, _ in sorted(Q.cells(), key=key)]


def _eg_reverse_row(row: list[int], b: int) -> int:
    idx = max((i for i, a in enumerate(row) if a < b), default=None)
    if idx is None:
        raise DomainError("reverse bump failed")
    a = row[idx]
    if not (a == b - 1 and b in row):
        row[idx] = b
    return a


def inverse_primed_recording(P: Tableau, Q: PrimedTableau, k: int | None = None) -> Factorization:
    if P.shape != Q.shape or P.mu:
        raise DomainError("P and Q must share a straight shape")
    if Q.size and not is_valid_primed(Q):
        raise DomainError("Q is not a primed tableau")
    k = Q.max_letter() if k is None else k
    if Q.max_letter() > k:
        raise DomainError(f"Q uses letters beyond k={k}")
    rows = [list(r) for r in P.rows]
    order = standardization(Q)
    letters: list[int] = []
    for r, c in reversed(order):
        if c != len(rows[r]) - 1 or (r + 1 < len(rows) and len(rows[r + 1]) > c):
            raise DomainError("Q is not a recording tableau for P")
        b = rows[r].pop()
        if not rows[r]:
            rows.pop()
        for rr in range(r - 1, -1, -1):
            b = _eg_reverse_row(rows[rr], b)
        letters.append(b)
    letters.reverse()
    blocks: list[list[int]] = [[] for _ in range(k)]
    for a, (r, c) in zip(letters, order):
        v = Q.get(r, c)
        blocks[letter(v) - 1].append(-a if is_primed(v) else a)
    f = Factorization(tuple(tuple(b) for b in blocks), "RSIF")
    if any(not all(x < y for x, y in zip(b, b[1:])) for b in f.blocks):
        raise DomainError("Q is not a recording tableau for P")
    return f


# --- Haiman mixed insertion ---------------------------------------------------


def _mixed_insert(grid: list[list[int | None]], v: int, mode: str, index: int) -> Cell:
    """Row-insert (``mode='row'``) or column-insert ``v`` at ``index`` and follow the bumps."""
    while True:
        if mode == "row":
            while len(grid) <= index:
                grid.append([])
            row = grid[index]
            pos = next((c for c, y in enumerate(row) if y is not None and y > v), None)
            if pos is None:
                if index > 0 and len(grid[index - 1]) <= len(row):
                    raise DomainError("row insertion left the shape")
                row.append(v)
                return index, len(row) - 1
            v, row[pos] = row[pos], v
            r, c = index, pos
        else:
            col = index
            pos = next((r for r, row in enumerate(grid)
                        if len(row) > col and row[col] is not None and row[col] > v), None)
            if pos is None:
                r = sum(1 for row in grid if len(row) > col)
                if r == len(grid):
                    grid.append([])
                if len(grid[r]) != col:
                    raise DomainError("column insertion left the shape")
                grid[r].append(v)
                return r, col
            v, grid[pos][col] = grid[pos][col], v
            r, c = pos, col
        if is_primed(v):
            mode, index = "col", c + 1
        else:
            mode, index = "row", r + 1


def _grid(T: PrimedTableau) -> list[list[int | None]]:
    return [list(r) for r in T.rows]


def _freeze(grid) -> PrimedTableau:
    return PrimedTableau(tuple(tuple(r) for r in grid))


def haiman_insert(w: Sequence[int]) -> tuple[PrimedTableau, Tableau]:
    """Mixed insertion of a word over the primed alphabet (doubled encoding)."""
    grid: list[list[int | None]] = []
    rec: dict[Cell, int] = {}
    for s, v in enumerate(w, start=1):
        if v < 1:
            raise DomainError("Haiman insertion takes primed or unprimed letters only")
        cell = _mixed_insert(grid, v, "col" if is_primed(v) else "row", 0)
        rec[cell] = s
    return _freeze(grid), Tableau.from_cells(rec)


def haiman_P(w: Sequence[int]) -> PrimedTableau:
    return haiman_insert(w)[0]


def inner_corners(T: Tableau) -> list[Cell]:
    return [(r, c) for r, c, _ in T.cells() if T.get(r - 1, c) is None and T.get(r, c - 1) is None]


def bump_from(T: PrimedTableau, z: Cell) -> PrimedTableau:
    """Empty the inner corner ``z`` and continue mixed insertion as if its entry had been bumped."""
    if z not in inner_corners(T):
        raise DomainError(f"{z} is not an inner corner")
    grid = _grid(T)
    r, c = z
    v = grid[r][c]
    grid[r][c] = None
    if is_primed(v):
        _mixed_insert(grid, v, "col", c + 1)
    else:
        _mixed_insert(grid, v, "row", r + 1)
    return _freeze(grid)


def plus_word(w: Sequence[int]) -> tuple[int, ...]:
    return tuple(v + 1 for v in w)


def minus_word(w: Sequence[int]) -> tuple[int, ...]:
    if any(v <= 1 for v in w):
        raise DomainError("cannot lower 1' by a half unit")
    return tuple(v - 1 for v in w)
