"""The A_{k-1} bicrystal on primed tableaux and on primed words.

Bracketing on a reading word: scanning left to right, each ``i`` closes the
nearest still-open ``j = i+1`` to its left.  ``f_i`` acts at the rightmost
unbracketed ``i``; ``e_i`` at the leftmost unbracketed ``j``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, ResourceCapError
from .tableau import (PrimedTableau, SkewShape, enumerate_primed_tableaux, is_primed,
                      letter, minus_transform, plain, plus_transform, primed)

INF = float("inf")
DEFAULT_NODE_CAP = 100_000


# --- bracketing -----------------------------------------------------------------


def bracket(word: Sequence[int], i: int) -> tuple[bool | None, ...]:
    """Per-letter flags: True if bracketed, False if not, None for letters other than i, i+1."""
    j = i + 1
    flags: list[bool | None] = [None] * len(word)
    open_j: list[int] = []
    for pos, a in enumerate(word):
        if a == j:
            flags[pos] = False
            open_j.append(pos)
        elif a == i:
            if open_j:
                flags[open_j.pop()] = True
                flags[pos] = True
            else:
                flags[pos] = False
    return tuple(flags)


def unbracketed(word: Sequence[int], i: int) -> tuple[list[int], list[int]]:
    """Positions of unbracketed i's and of unbracketed j's."""
    flags = bracket(word, i)
    lows = [p for p, f in enumerate(flags) if f is False and word[p] == i]
    highs = [p for p, f in enumerate(flags) if f is False and word[p] == i + 1]
    return lows, highs


# --- tableau operators ------------------------------------------------------------


def _content(T: PrimedTableau, r: int, c: int, missing: float) -> float:
    v = T.get(r, c)
    return missing if v is None else v


def _check_index(i: int):
    if i < 1:
        raise DomainError(f"crystal index {i} must be positive")


def f_i(T: PrimedTableau, i: int) -> PrimedTableau | None:
    _check_index(i)
    j = i + 1
    Jp, J = primed(j), plain(j)
    pos = T.unprimed_positions()
    lows, _ = unbracketed(T.reading_word(), i)
    if not lows:
        return None
    r, c = pos[lows[-1]]
    east = _content(T, r, c + 1, INF)
    south = _content(T, r + 1, c, INF)
    if east == Jp:                                   # F2
        return T.replace({(r, c): Jp, (r, c + 1): J})
    if east >= J and south > J:                      # F1
        return T.replace({(r, c): J})
    if east >= J and south in (Jp, J):               # F3
        qr, qc = r + 1, c
        while True:
            if T.get(qr + 1, qc) in (Jp, J):
                qr += 1
            elif T.get(qr, qc - 1) in (Jp, J):
                qc -= 1
            else:
                break
        if T.get(qr, qc) != Jp:
            raise DomainError(f"ribbon ends at an unprimed entry; {T} is not a primed tableau")
        return T.replace({(r, c): Jp, (qr, qc): J})
    raise DomainError(f"no case of f_{i} applies; {T} is not a primed tableau")


def e_i(T: PrimedTableau, i: int) -> PrimedTableau | None:
    _check_index(i)
    j = i + 1
    I, Jp = plain(i), primed(j)
    pos = T.unprimed_positions()
    _, highs = unbracketed(T.reading_word(), i)
    if not highs:
        return None
    r, c = pos[highs[0]]
    # West/North of the first column/row (or inside the inner shape) count as -infinity.
    west = _content(T, r, c - 1, -INF)
    north = _content(T, r - 1, c, -INF)
    if west == Jp:
        return T.replace({(r, c - 1): I, (r, c): Jp})
    if west <= I and north < I:
        return T.replace({(r, c): I})
    if west <= I and north in (I, Jp):
        pr, pc = r - 1, c
        while True:
            if T.get(pr - 1, pc) in (I, Jp):
                pr -= 1
            elif T.get(pr, pc + 1) in (I, Jp):
                pc += 1
            else:
                break
        if T.get(pr, pc) != Jp:
            raise DomainError(f"ribbon ends at an unprimed entry; {T} is not a primed tableau")
        return T.replace({(r, c): Jp, (pr, pc): I})
    raise DomainError(f"no case of e_{i} applies; {T} is not a primed tableau")


def f_bar(T: PrimedTableau, i: int) -> PrimedTableau | None:
    out = f_i(plus_transform(T), i)
    return None if out is None else minus_transform(out)


def e_bar(T: PrimedTableau, i: int) -> PrimedTableau | None:
    out = e_i(plus_transform(T), i)
    return None if out is None else minus_transform(out)


OPERATORS = {("f", False): f_i, ("e", False): e_i, ("f", True): f_bar, ("e", True): e_bar}


def apply(T: PrimedTableau, i: int, barred: bool = False, lowering: bool = True):
    return OPERATORS[("f" if lowering else "e", barred)](T, i)


# --- word operators --------------------------------------------------------------


def _word_plain(w: Sequence[int], i: int, lowering: bool) -> tuple[int, ...] | None:
    idx = [p for p, v in enumerate(w) if not is_primed(v)]
    lows, highs = unbracketed([letter(w[p]) for p in idx], i)
    w = list(w)
    if lowering:
        if not lows:
            return None
        w[idx[lows[-1]]] += 2
    else:
        if not highs:
            return None
        w[idx[highs[0]]] -= 2
    return tuple(w)


def word_f(w: Sequence[int], i: int, layer: str = "plain") -> tuple[int, ...] | None:
    return _word_op(w, i, layer, True)


def word_e(w: Sequence[int], i: int, layer: str = "plain") -> tuple[int, ...] | None:
    return _word_op(w, i, layer, False)


def _word_op(w, i, layer, lowering):
    _check_index(i)
    if any(v < 1 for v in w):
        raise DomainError("crystal operators act on words over the primed alphabet")
    if layer == "plain":
        return _word_plain(w, i, lowering)
    if layer == "primed":
        out = _word_plain([v + 1 for v in w], i, lowering)
        return None if out is None else tuple(v - 1 for v in out)
    raise DomainError(f"unknown layer {layer!r}")


def word_dw(w: Sequence[int], k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    X, Y = [0] * k, [0] * k
    for v in w:
        (X if is_primed(v) else Y)[letter(v) - 1] += 1
    return tuple(X), tuple(Y)


# --- highest weights -------------------------------------------------------------


def is_reverse_yamanouchi(word: Sequence[int]) -> bool:
    """Reading right to left, every prefix has at least as many i as i+1."""
    counts: dict[int, int] = {}
    for a in reversed(word):
        counts[a] = counts.get(a, 0) + 1
        if a > 1 and counts[a] > counts.get(a - 1, 0):
            return False
    return True


def plus_reading_word(T: PrimedTableau) -> tuple[int, ...]:
    """Reading word of T^+: letters of the primed entries, columns right to left, each top to bottom."""
    return plus_transform(T).reading_word()


def is_highest_weight(T: PrimedTableau, k: int | None = None) -> bool:
    k = max(T.max_letter(), 1) if k is None else k
    return all(e_i(T, i) is None and e_bar(T, i) is None for i in range(1, k))


def enumerate_H(shape, k: int) -> list[PrimedTableau]:
    """Primed tableaux whose reading word and T^+ reading word are both reverse Yamanouchi."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(tuple(shape))
    if shape.mu:
        raise DomainError("highest weights are enumerated on straight shapes")
    out = [T for T in enumerate_primed_tableaux(shape, k)
           if is_reverse_yamanouchi(T.reading_word()) and is_reverse_yamanouchi(plus_reading_word(T))]
    return sorted(out, key=canonical_key)


def canonical_key(T: PrimedTableau):
    return tuple(tuple(-99 if v is None else v for v in r) for r in T.rows)


# --- components --------------------------------------------------------------------


@dataclass(frozen=True)
class BicrystalNode:
    tableau: PrimedTableau
    dw: tuple[tuple[int, ...], tuple[int, ...]]

    @classmethod
    def of(cls, T: PrimedTableau, k: int) -> "BicrystalNode":
        return cls(T, T.dw(k))


def edge_label(i: int, barred: bool) -> str:
    return f"f_{i}bar" if barred else f"f_{i}"


@dataclass
class CrystalGraph:
    k: int
    nodes: list[BicrystalNode]
    edges: list[tuple[PrimedTableau, PrimedTableau, str]]

    def tableaux(self) -> list[PrimedTableau]:
        return [n.tableau for n in self.nodes]

    def edge_set(self) -> set[tuple[str, str, str]]:
        return {(str(a), str(b), lab) for a, b, lab in self.edges}

    def highest_weights(self) -> list[PrimedTableau]:
        targets = {b for _, b, _ in self.edges}
        return [T for T in self.tableaux() if T not in targets]

    def to_dot(self) -> str:
        colors = ["blue", "red", "darkgreen", "orange", "purple", "brown"]
        ids = {n.tableau: f"n{idx}" for idx, n in enumerate(self.nodes)}
        lines = ["digraph crystal {", "  rankdir=LR;"]
        for n in self.nodes:
            lines.append(f'  {ids[n.tableau]} [label="{n.tableau}"];')
        for a, b, lab in self.edges:
            i = int(lab[2:].removesuffix("bar"))
            style = "dashed" if lab.endswith("bar") else "solid"
            color = colors[(i - 1) % len(colors)]
            lines.append(f'  {ids[a]} -> {ids[b]} [label="{lab}", style={style}, color={color}];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        data = {
            "k": self.k,
            "nodes": [{"tableau": str(n.tableau), "dw": [list(n.dw[0]), list(n.dw[1])]} for n in self.nodes],
            "edges": [{"from": str(a), "to": str(b), "label": lab} for a, b, lab in self.edges],
        }
        return json.dumps(data, indent=2, sort_keys=True) + "\n"


def crystal_component(T: PrimedTableau, k: int | None = None, cap: int = DEFAULT_NODE_CAP) -> CrystalGraph:
    """Closure of ``T`` under every f_i, e_i, f_ī, e_ī with 1 <= i < k."""
    k = max(T.max_letter(), 1) if k is None else k
    if T.max_letter() > k:
        raise DomainError(f"{T} uses letters beyond k={k}")
    seen = {T}
    frontier = deque([T])
    edges = set()
    while frontier:
        S = frontier.popleft()
        for i in range(1, k):
            for barred in (False, True):
                down = apply(S, i, barred, True)
                up = apply(S, i, barred, False)
                if down is not None:
                    edges.add((S, down, edge_label(i, barred)))
                if up is not None:
                    edges.add((up, S, edge_label(i, barred)))
                for U in (down, up):
                    if U is not None and U not in seen:
                        if len(seen) >= cap:
                            raise ResourceCapError(f"component exceeds {cap} nodes")
                        seen.add(U)
                        frontier.append(U)
    order = sorted(seen, key=lambda S: _node_key(S, k))
    rank = {S: idx for idx, S in enumerate(order)}
    return CrystalGraph(k, [BicrystalNode.of(S, k) for S in order],
                        sorted(edges, key=lambda e: (rank[e[0]], rank[e[1]], e[2])))


def _node_key(T: PrimedTableau, k: int):
    X, Y = T.dw(k)
    return (tuple(-x for x in X), tuple(-y for y in Y), canonical_key(T))


def crystal_components(shape, k: int) -> list[CrystalGraph]:
    """Partition all primed tableaux of ``shape`` with letters <= k into components."""
    remaining = set(enumerate_primed_tableaux(shape, k))
    out = []
    while remaining:
        start = min(remaining, key=lambda T: _node_key(T, k))
        g = crystal_component(start, k)
        remaining -= set(g.tableaux())
        out.append(g)
    return out


def component_character(g: CrystalGraph) -> dict[tuple[tuple[int, ...], tuple[int, ...]], int]:
    out: dict = {}
    for n in g.nodes:
        out[n.dw] = out.get(n.dw, 0) + 1
    return out


def axiom_violations(g: CrystalGraph) -> list[str]:
    """Check A1/A2: f and e are mutually inverse and shift dw by (0, -a_i) or (-a_i, 0)."""
    bad = []
    k = g.k
    for a, b, lab in g.edges:
        i = int(lab[2:].removesuffix("bar"))
        barred = lab.endswith("bar")
        if apply(b, i, barred, False) != a:
            bad.append(f"e does not invert {lab} at {a}")
        (xa, ya), (xb, yb) = a.dw(k), b.dw(k)
        shift = [0] * k
        shift[i - 1], shift[i] = -1, 1
        moved, fixed = ((xa, xb), (ya, yb)) if barred else ((ya, yb), (xa, xb))
        if fixed[0] != fixed[1] or [q - p for p, q in zip(*moved)] != shift:
            bad.append(f"{lab} at {a} shifts dw incorrectly")
    return bad


# --- reference component ----------------------------------------------------------

# Hand transcription of a published drawing of the component of shape (2,2), k=3,
# through "1' 1 / 1 2'": three rows of six nodes; solid edges f_1 (blue) / f_2 (red)
# inside a row, dashed edges between rows.
REFERENCE_NODES = {
    1: "1' 1 / 1 2'", 2: "1' 2' / 1 2", 3: "1' 2' / 2 2", 4: "1' 2' / 1 3", 5: "1' 2' / 2 3", 6: "1' 2' / 3 3",
    11: "1' 1 / 1 3'", 12: "1' 2 / 1 3'", 13: "1' 2 / 2 3'", 14: "1' 3' / 1 3", 15: "1' 3' / 2 3", 16: "1' 3' / 3 3",
    21: "1 1 / 2' 3'", 22: "1 2 / 2' 3'", 23: "2' 2 / 2 3'", 24: "1 3' / 2' 3", 25: "2' 3' / 2 3", 26: "2' 3' / 3 3",
}
_ROW = [(0, 1, "f_1"), (1, 2, "f_1"), (1, 3, "f_2"), (2, 4, "f_2"), (3, 4, "f_1"), (4, 5, "f_2")]
REFERENCE_EDGES = (
    [(base + a + 1, base + b + 1, lab) for base in (0, 10, 20) for a, b, lab in _ROW]
    + [(n, n + 10, "f_1bar") for n in range(1, 7)]
    + [(n, n + 10, "f_2bar") for n in range(11, 17)]
)
# The drawing's dashed labels are exchanged relative to the operators as defined here:
# its first dashed layer is f_2bar and its second is f_1bar (checked edge by edge).
REFERENCE_RELABEL = {"f_1bar": "f_2bar", "f_2bar": "f_1bar"}


def reference_edge_set() -> set[tuple[str, str, str]]:
    return {(REFERENCE_NODES[a], REFERENCE_NODES[b], REFERENCE_RELABEL.get(lab, lab))
            for a, b, lab in REFERENCE_EDGES}


def golden_comparison() -> list[str]:
    """Differences between the computed component and the reference drawing (empty = match)."""
    g = crystal_component(PrimedTableau.parse(REFERENCE_NODES[1]), 3)
    got, want = g.edge_set(), reference_edge_set()
    out = [f"missing edge {e}" for e in sorted(want - got)] + [f"extra edge {e}" for e in sorted(got - want)]
    nodes = {str(n.tableau) for n in g.nodes}
    if nodes != set(REFERENCE_NODES.values()):
        out.append(f"node sets differ: {sorted(nodes ^ set(REFERENCE_NODES.values()))}")
    return out
