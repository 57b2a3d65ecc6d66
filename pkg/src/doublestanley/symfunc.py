"""Exact polynomials in x_1..x_k, y_1..y_k and t, with Schur-type bases.

A monomial is an exponent tuple ``(x_1, ..., x_k, y_1, ..., y_k, t)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DomainError, TruncationError
from .tableau import SkewShape, conjugate, enumerate_pst, strip_zeros

Exps = tuple[int, ...]
RULES = ("y:=0", "x:=0", "y:=x", "y:=-x", "y:=t*x")


@dataclass(frozen=True)
class MultiPoly:
    k: int
    terms: Mapping[Exps, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for e, c in self.terms.items():
            e = tuple(e)
            if len(e) != 2 * self.k + 1:
                raise DomainError(f"exponent {e} has wrong length for k={self.k}")
            if c:
                clean[e] = clean.get(e, 0) + c
        object.__setattr__(self, "terms", {e: c for e, c in sorted(clean.items()) if c})

    # construction
    @classmethod
    def zero(cls, k: int) -> "MultiPoly":
        return cls(k, {})

    @classmethod
    def one(cls, k: int) -> "MultiPoly":
        return cls(k, {(0,) * (2 * k + 1): 1})

    @classmethod
    def monomial(cls, k: int, x: Sequence[int] = (), y: Sequence[int] = (), t: int = 0, c: int = 1):
        x = tuple(x) + (0,) * (k - len(x))
        y = tuple(y) + (0,) * (k - len(y))
        return cls(k, {x + y + (t,): c})

    @classmethod
    def from_monomials(cls, k: int, items: Iterable[tuple[Sequence[int], Sequence[int]]]) -> "MultiPoly":
        acc: dict[Exps, int] = {}
        for x, y in items:
            e = tuple(x) + tuple(y) + (0,)
            acc[e] = acc.get(e, 0) + 1
        return cls(k, acc)

    # access
    def x(self, e: Exps) -> Exps:
        return e[:self.k]

    def y(self, e: Exps) -> Exps:
        return e[self.k:2 * self.k]

    def items(self):
        return self.terms.items()

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == MultiPoly(self.k, {(0,) * (2 * self.k + 1): other})
        return isinstance(other, MultiPoly) and self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, tuple(self.terms.items())))

    def degree(self) -> int:
        return max((sum(e[:2 * self.k]) for e in self.terms), default=0)

    def coefficient(self, x: Sequence[int] = (), y: Sequence[int] = (), t: int = 0) -> int:
        x = tuple(x) + (0,) * (self.k - len(x))
        y = tuple(y) + (0,) * (self.k - len(y))
        return self.terms.get(x + y + (t,), 0)

    # arithmetic
    def _same(self, other: "MultiPoly"):
        if self.k != other.k:
            raise DomainError(f"variable counts differ: {self.k} vs {other.k}")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._same(other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            acc[e] = acc.get(e, 0) + c
        return MultiPoly(self.k, acc)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.k, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def scale(self, c: int) -> "MultiPoly":
        return MultiPoly(self.k, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._same(other)
        acc: dict[Exps, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return MultiPoly(self.k, acc)

    __rmul__ = __mul__

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = []
            for name, block in (("x", e[:self.k]), ("y", e[self.k:2 * self.k])):
                for i, a in enumerate(block, start=1):
                    if a:
                        mono.append(f"{name}{i}" + (f"^{a}" if a > 1 else ""))
            if e[-1]:
                mono.append("t" + (f"^{e[-1]}" if e[-1] > 1 else ""))
            body = "*".join(mono)
            coef = "" if (abs(c) == 1 and body) else str(abs(c))
            sep = "*" if coef and body else ""
            parts.append(("-" if c < 0 else "+") + coef + sep + body)
        s = " ".join(p[0] + " " + p[1:] for p in parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    # variable manipulations
    def extend(self, k: int) -> "MultiPoly":
        """The same polynomial viewed in ``k >= self.k`` variables per block."""
        if k < self.k:
            raise DomainError("extend cannot drop variables")
        pad = (0,) * (k - self.k)
        return MultiPoly(k, {self.x(e) + pad + self.y(e) + pad + (e[-1],): c for e, c in self.terms.items()})

    def swap_xy(self) -> "MultiPoly":
        return MultiPoly(self.k, {self.y(e) + self.x(e) + (e[-1],): c for e, c in self.terms.items()})

    def permute(self, block: str, i: int, j: int) -> "MultiPoly":
        off = 0 if block == "x" else self.k
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[off + i], e[off + j] = e[off + j], e[off + i]
            out[tuple(e)] = c
        return MultiPoly(self.k, out)

    def asymmetry(self) -> str | None:
        """Name an adjacent transposition that moves the polynomial, if any."""
        for block in ("x", "y"):
            for i in range(self.k - 1):
                if self.permute(block, i, i + 1) != self:
                    return f"{block}{i + 1}<->{block}{i + 2}"
        return None

    def is_symmetric(self) -> bool:
        return self.asymmetry() is None

    def to_json_obj(self) -> dict:
        return {"k": self.k, "terms": [{"x": list(self.x(e)), "y": list(self.y(e)), "t": e[-1], "c": c}
                                       for e, c in self.terms.items()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "MultiPoly":
        k = obj["k"]
        return cls(k, {tuple(t["x"]) + tuple(t["y"]) + (t["t"],): t["c"] for t in obj["terms"]})


def specialize(p: MultiPoly, rule: str) -> MultiPoly:
    """Rewrite the y-block (or x-block) according to ``rule``; results keep k per block."""
    if rule not in RULES:
        raise DomainError(f"unknown specialization {rule!r}; expected one of {RULES}")
    k = p.k
    zero = (0,) * k
    acc: dict[Exps, int] = {}
    for e, c in p.terms.items():
        x, y, t = p.x(e), p.y(e), e[-1]
        if rule == "y:=0":
            if any(y):
                continue
            new = x + zero + (t,)
        elif rule == "x:=0":
            if any(x):
                continue
            new = zero + y + (t,)
        else:
            merged = tuple(a + b for a, b in zip(x, y))
            if rule == "y:=-x" and sum(y) % 2:
                c = -c
            new = merged + zero + (t + sum(y) if rule == "y:=t*x" else t,)
        acc[new] = acc.get(new, 0) + c
    return MultiPoly(k, acc)


# --- Schur functions -----------------------------------------------------------


def _ssyt_contents(shape: SkewShape, k: int) -> Iterator[tuple[int, ...]]:
    cells = shape.cells()
    grid: dict[tuple[int, int], int] = {}
    content = [0] * k

    def rec(idx):
        if idx == len(cells):
            yield tuple(content)
            return
        r, c = cells[idx]
        lo = max(grid.get((r, c - 1), 1), grid.get((r - 1, c), 0) + 1)
        for v in range(lo, k + 1):
            grid[(r, c)] = v
            content[v - 1] += 1
            yield from rec(idx + 1)
            content[v - 1] -= 1
        grid.pop((r, c), None)

    yield from rec(0)


@lru_cache(maxsize=None)
def _schur_counts(lam: tuple[int, ...], mu: tuple[int, ...], k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    acc: dict[tuple[int, ...], int] = {}
    for content in _ssyt_contents(SkewShape(lam, mu), k):
        acc[content] = acc.get(content, 0) + 1
    return tuple(sorted(acc.items()))


def schur(lam: Sequence[int], k: int, block: str = "x", mu: Sequence[int] = ()) -> MultiPoly:
    """s_{lam/mu} in the chosen block of ``k`` variables (SSYT generating function)."""
    lam, mu = strip_zeros(lam), strip_zeros(mu)
    zero = (0,) * k
    terms = {}
    for content, c in _schur_counts(lam, mu, k):
        terms[(content + zero if block == "x" else zero + content) + (0,)] = c
    return MultiPoly(k, terms)


def schur_xy(lam: Sequence[int], k: int) -> MultiPoly:
    """s_lam in the doubled variable set (x_1..x_k, y_1..y_k) read as one block."""
    counts = _schur_counts(strip_zeros(lam), (), 2 * k)
    return MultiPoly(k, {content + (0,): c for content, c in counts})


def _is_strict(lam: Sequence[int]) -> bool:
    return all(a > b for a, b in zip(lam, lam[1:])) and all(a > 0 for a in lam)


@lru_cache(maxsize=None)
def _schur_p_counts(lam: tuple[int, ...], k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    # shifted shape: row r occupies columns r .. r + lam[r] - 1; entries on the doubled scale
    cells = [(r, c) for r, part in enumerate(lam) for c in range(r, r + part)]
    grid: dict[tuple[int, int], int] = {}
    acc: dict[tuple[int, ...], int] = {}
    content = [0] * k

    def rec(idx):
        if idx == len(cells):
            key = tuple(content)
            acc[key] = acc.get(key, 0) + 1
            return
        r, c = cells[idx]
        left, up = grid.get((r, c - 1)), grid.get((r - 1, c))
        lo = max(left or 1, up or 1)
        for v in range(lo, 2 * k + 1):
            marked = v % 2 == 1
            if r == c and marked:
                continue                    # P: diagonal entries unmarked
            if marked and left == v:
                continue                    # a marked letter at most once per row
            if not marked and up == v:
                continue                    # an unmarked letter at most once per column
            grid[(r, c)] = v
            content[(v + 1) // 2 - 1] += 1
            rec(idx + 1)
            content[(v + 1) // 2 - 1] -= 1
            del grid[(r, c)]

    rec(0)
    return tuple(sorted(acc.items()))


def schur_p(lam: Sequence[int], k: int) -> MultiPoly:
    """Schur P-polynomial via marked shifted tableaux with unmarked diagonal."""
    lam = strip_zeros(lam)
    if not _is_strict(lam):
        raise DomainError(f"{lam} is not a strict partition")
    zero = (0,) * k
    return MultiPoly(k, {content + zero + (0,): c for content, c in _schur_p_counts(lam, k)})


def tableau_gf(shape, k: int, j: int) -> MultiPoly:
    """Sum of x^X y^Y over PST(shape, X, Y, j)."""
    items = (T.dw(k) for T in enumerate_pst(shape, k, j))
    return MultiPoly.from_monomials(k, items)


def super_schur(shape, k: int) -> MultiPoly:
    """Supersymmetric Schur polynomial: generating function of signed tableaux."""
    return tableau_gf(shape, k, 0)


def primed_gf(shape, k: int) -> MultiPoly:
    """Generating function of primed tableaux of ``shape``."""
    return tableau_gf(shape, k, k)


# --- expansions --------------------------------------------------------------------


@dataclass(frozen=True)
class SchurExpansion:
    """Integer combination of s_mu(x) s_nu(y) t^e, keyed by (mu, nu, e)."""

    terms: Mapping[tuple[tuple[int, ...], tuple[int, ...], int], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (mu, nu, e), c in self.terms.items():
            key = (strip_zeros(mu), strip_zeros(nu), e)
            clean[key] = clean.get(key, 0) + c
        object.__setattr__(self, "terms", {key: c for key, c in sorted(clean.items()) if c})

    @classmethod
    def of(cls, mapping: Mapping) -> "SchurExpansion":
        """Accepts keys ``mu``, ``(mu, nu)`` or ``(mu, nu, e)``."""
        out = {}
        for key, c in mapping.items():
            if not key or isinstance(key[0], int):
                key = (tuple(key), (), 0)
            elif len(key) == 2:
                key = (tuple(key[0]), tuple(key[1]), 0)
            out[key] = out.get(key, 0) + c
        return cls(out)

    def __eq__(self, other):
        return isinstance(other, SchurExpansion) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def items(self):
        return self.terms.items()

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def t_part(self, e: int) -> "SchurExpansion":
        return SchurExpansion({(mu, nu, 0): c for (mu, nu, f), c in self.terms.items() if f == e})

    def __str__(self):
        if not self.terms:
            return "0"

        def sname(p, var):
            return f"s{''.join(map(str, p))}({var})" if p else ""

        parts = []
        order = sorted(self.terms.items(), key=lambda kv: (kv[0][2], [-a for a in kv[0][0]], [-a for a in kv[0][1]]))
        for (mu, nu, e), c in order:
            body = sname(mu, "x") + sname(nu, "y")
            if e:
                body = ("t" + (f"^{e}" if e > 1 else "")) + ("*" + body if body else "")
            body = body or "1"
            coef = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(("-" if c < 0 else "+") + " " + coef + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def to_json_obj(self) -> list:
        return [{"mu": list(mu), "nu": list(nu), "t": e, "c": c} for (mu, nu, e), c in self.terms.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)


def _leading(p: MultiPoly, t: int) -> tuple[Exps, int] | None:
    best = None
    for e, c in p.terms.items():
        if e[-1] != t:
            continue
        key = (p.x(e), p.y(e))
        if best is None or key > best[0]:
            best = (key, c)
    return best


def expand_in_schur(p: MultiPoly) -> SchurExpansion:
    """Unique expansion in s_mu(x) s_nu(y) t^e; the input must be symmetric in each block."""
    bad = p.asymmetry()
    if bad is not None:
        raise DomainError(f"not symmetric: transposition {bad} changes the polynomial")
    k = p.k
    out: dict = {}
    rest = p
    for t in sorted({e[-1] for e in p.terms}):
        while True:
            lead = _leading(rest, t)
            if lead is None:
                break
            (x, y), c = lead
            if list(x) != sorted(x, reverse=True) or list(y) != sorted(y, reverse=True):
                raise DomainError("leading exponent is not a partition pair; input not symmetric")
            mu, nu = strip_zeros(x), strip_zeros(y)
            out[(mu, nu, t)] = c
            rest = rest - _basis(mu, nu, t, k).scale(c)
    return SchurExpansion(out)


@lru_cache(maxsize=None)
def _basis(mu, nu, t, k) -> MultiPoly:
    sx, sy = schur(mu, k, "x"), schur(nu, k, "y")
    prod = sx * sy
    if not t:
        return prod
    return MultiPoly(k, {e[:-1] + (e[-1] + t,): c for e, c in prod.terms.items()})


def reconstruct(e: SchurExpansion, k: int) -> MultiPoly:
    out = MultiPoly.zero(k)
    for (mu, nu, t), c in e.terms.items():
        out = out + _basis(mu, nu, t, k).scale(c)
    return out


def omega_x(e: SchurExpansion, k: int | None = None) -> SchurExpansion:
    """Conjugate the x-partition of every term."""
    out = {}
    for (mu, nu, t), c in e.terms.items():
        mu2 = conjugate(mu)
        if k is not None and len(mu2) > k:
            raise TruncationError(f"s_{mu2} needs {len(mu2)} x-variables but only {k} are present")
        out[(mu2, nu, t)] = c
    return SchurExpansion(out)


def expand_in_schur_p(p: MultiPoly) -> dict[tuple[int, ...], int]:
    """Expansion of an x-only symmetric polynomial in Schur P-polynomials."""
    if any(any(p.y(e)) or e[-1] for e in p.terms):
        raise DomainError("Schur-P expansion takes x-only polynomials")
    bad = p.asymmetry()
    if bad is not None:
        raise DomainError(f"not symmetric: transposition {bad} changes the polynomial")
    out = {}
    rest = p
    while rest:
        (x, _), c = _leading(rest, 0)
        lam = strip_zeros(x)
        if not _is_strict(lam):
            raise DomainError(f"leading term {lam} is not strict; not in the span of P-polynomials")
        out[lam] = c
        rest = rest - schur_p(lam, p.k).scale(c)
    return dict(sorted(out.items()))


def expand_schur_x(p: MultiPoly) -> dict[tuple[int, ...], int]:
    """Shorthand for x-only polynomials: {mu: c}."""
    if any(any(p.y(e)) or e[-1] for e in p.terms):
        raise DomainError("expand_schur_x takes x-only polynomials")
    return {mu: c for (mu, _, _), c in expand_in_schur(p).terms.items()}
