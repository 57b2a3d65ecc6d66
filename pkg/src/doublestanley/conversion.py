"""Inward/outward conversion between the regimes of primed signed tableaux.

Inward conversion at ``j`` turns one primed ``j`` into a barred ``j`` and
bubbles it up/left; outward conversion is its inverse.  Each step can also
report its conversion path (the boxes it altered, in order).
"""

from __future__ import annotations

from .errors import DomainError
from .tableau import PrimedTableau, barred, is_barred, is_marked, is_primed, letter, primed

Cell = tuple[int, int]


def in_regime(T: PrimedTableau, j: int) -> bool:
    """Letters <= j carry no bars, letters > j carry no primes."""
    for v in T.entries():
        i = letter(v)
        if (i <= j and is_barred(v)) or (i > j and is_primed(v)):
            return False
    return True


def _ordered(T: PrimedTableau) -> bool:
    return T.rows_weak() and T.columns_weak()


def _swap(grid, a: Cell, b: Cell):
    (ar, ac), (br, bc) = a, b
    grid[ar][ac], grid[br][bc] = grid[br][bc], grid[ar][ac]


def _freeze(grid) -> PrimedTableau:
    return PrimedTableau(tuple(tuple(r) for r in grid))


def _choose(first, second, prefer_larger: bool, unmarked_pick, marked_pick):
    """Tie rules shared by both directions; ``first``/``second`` are (cell, value) or None."""
    if first is None or second is None:
        return first or second
    (_, va), (_, vb) = first, second
    if va != vb:
        return first if (va > vb) == prefer_larger else second
    return unmarked_pick(first, second) if not is_marked(va) else marked_pick(first, second)


def inward_step(T: PrimedTableau, j: int, with_path: bool = False):
    cells = [(r, c) for r, c, v in T.cells() if v == primed(j)]
    if not cells:
        raise DomainError(f"no primed {j} in {T}")
    grid = [list(r) for r in T.rows]
    r, c = min(cells)
    grid[r][c] = barred(j)
    path = [(r, c)]
    while not _ordered(_freeze(grid)):
        r, c = max(((rr, cc) for rr, row in enumerate(grid) for cc, v in enumerate(row)
                    if v == barred(j)))
        above = ((r - 1, c), grid[r - 1][c]) if r > 0 and c < len(grid[r - 1]) and grid[r - 1][c] is not None else None
        left = ((r, c - 1), grid[r][c - 1]) if c > 0 and grid[r][c - 1] is not None else None
        pick = _choose(above, left, True,
                       unmarked_pick=lambda a, b: a,    # equal and unmarked: the one above
                       marked_pick=lambda a, b: b)      # equal and marked: the one on the left
        if pick is None:
            raise DomainError(f"inward conversion stuck at {(r, c)}")
        _swap(grid, (r, c), pick[0])
        path.append(pick[0])
    out = _freeze(grid)
    return (out, path) if with_path else out


def outward_step(T: PrimedTableau, j: int, with_path: bool = False):
    cells = [(r, c) for r, c, v in T.cells() if v == barred(j)]
    if not cells:
        raise DomainError(f"no barred {j} in {T}")
    grid = [list(r) for r in T.rows]
    r, c = max(cells)
    grid[r][c] = primed(j)
    path = [(r, c)]
    while not _ordered(_freeze(grid)):
        r, c = min(((rr, cc) for rr, row in enumerate(grid) for cc, v in enumerate(row)
                    if v == primed(j)))
        below = ((r + 1, c), grid[r + 1][c]) if r + 1 < len(grid) and c < len(grid[r + 1]) else None
        right = ((r, c + 1), grid[r][c + 1]) if c + 1 < len(grid[r]) else None
        pick = _choose(below, right, False,
                       unmarked_pick=lambda a, b: a,    # equal and unmarked: the one below
                       marked_pick=lambda a, b: b)      # equal and marked: the one on the right
        if pick is None:
            raise DomainError(f"outward conversion stuck at {(r, c)}")
        _swap(grid, (r, c), pick[0])
        path.append(pick[0])
    out = _freeze(grid)
    return (out, path) if with_path else out


def convert_level(T: PrimedTableau, j: int, direction: str, k: int | None = None,
                  with_paths: bool = False):
    """Inward: level j -> j-1 (X(j) steps).  Outward: level j -> j+1 (X(j+1) steps)."""
    k = max(T.max_letter(), j) if k is None else k
    if not 0 <= j <= k:
        raise DomainError(f"level {j} outside 0..{k}")
    if not in_regime(T, j):
        raise DomainError(f"{T} is not in regime {j}")
    paths = []
    if direction == "inward":
        if j == 0:
            raise DomainError("cannot convert inward from level 0")
        steps = sum(1 for v in T.entries() if v == primed(j))
        for _ in range(steps):
            T, path = inward_step(T, j, True)
            paths.append(path)
    elif direction == "outward":
        if j == k:
            raise DomainError(f"cannot convert outward from level k={k}")
        steps = sum(1 for v in T.entries() if v == barred(j + 1))
        for _ in range(steps):
            T, path = outward_step(T, j + 1, True)
            paths.append(path)
    else:
        raise DomainError(f"unknown direction {direction!r}")
    return (T, paths) if with_paths else T


def pt_to_st(T: PrimedTableau, k: int | None = None) -> PrimedTableau:
    k = T.max_letter() if k is None else k
    if T.has_bars():
        raise DomainError(f"{T} is not a primed tableau")
    for j in range(k, 0, -1):
        T = convert_level(T, j, "inward", k)
    return T


def st_to_pt(T: PrimedTableau, k: int | None = None) -> PrimedTableau:
    k = T.max_letter() if k is None else k
    if T.has_primes():
        raise DomainError(f"{T} is not a signed tableau")
    for j in range(0, k):
        T = convert_level(T, j, "outward", k)
    return T
