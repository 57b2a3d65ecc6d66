"""Type A, type C and double Stanley symmetric polynomials by several routes."""

from __future__ import annotations

from .coxeter import DEFAULT_LENGTH_CAP, SignedPermutation, length
from .crystal import enumerate_H
from .errors import DomainError
from .factorization import double_weight, enumerate_rif, enumerate_rsif, enumerate_ruf
from .insertion import inverse_primed_recording, primed_recording_map
from .symfunc import (MultiPoly, SchurExpansion, expand_in_schur, primed_gf, reconstruct,
                      specialize, super_schur)
from .tableau import SkewShape, enumerate_eg_tableaux, enumerate_primed_tableaux, strip_zeros


def working_k(p: SignedPermutation, k: int) -> int:
    """Enough variables for every Schur coefficient of a degree-l(p) polynomial."""
    return max(k, length(p), 1)


def _require_a(p: SignedPermutation):
    if not p.is_type_a:
        raise DomainError(f"{p} is not in type A")


def f_a(p: SignedPermutation, k: int, cap: int = DEFAULT_LENGTH_CAP) -> MultiPoly:
    zero = (0,) * k
    return MultiPoly.from_monomials(k, ((v.weight(), zero) for v in enumerate_rif(p, k, cap)))


def f_c(p: SignedPermutation, k: int, cap: int = DEFAULT_LENGTH_CAP) -> MultiPoly:
    zero = (0,) * k
    acc: dict = {}
    for v in enumerate_ruf(p, k, cap):
        e = v.weight() + zero + (0,)
        acc[e] = acc.get(e, 0) + 2 ** v.ne()
    return MultiPoly(k, acc)


def f_d(p: SignedPermutation, k: int, cap: int = DEFAULT_LENGTH_CAP) -> MultiPoly:
    return MultiPoly.from_monomials(k, (tuple(double_weight(v)) for v in enumerate_rsif(p, k, cap)))


def f_d_via_tableaux(p: SignedPermutation, k: int) -> MultiPoly:
    _require_a(p)
    out = MultiPoly.zero(k)
    for T in enumerate_eg_tableaux(p):
        out = out + primed_gf(SkewShape(T.lam), k)
    return out


def f_d_via_crystal(p: SignedPermutation, k: int) -> SchurExpansion:
    _require_a(p)
    acc: dict = {}
    for T in enumerate_eg_tableaux(p):
        for S in enumerate_H(T.lam, k):
            X, Y = S.dw(k)
            key = (strip_zeros(X), strip_zeros(Y), 0)
            acc[key] = acc.get(key, 0) + 1
    return SchurExpansion(acc)


def f_a_super(p: SignedPermutation, k: int) -> MultiPoly:
    _require_a(p)
    out = MultiPoly.zero(k)
    for T in enumerate_eg_tableaux(p):
        out = out + super_schur(SkewShape(T.lam), k)
    return out


def f_d_schur(p: SignedPermutation, k: int) -> SchurExpansion:
    """Schur expansion of f_d computed with enough working variables."""
    return expand_in_schur(f_d(p, working_k(p, k)))


# --- bijection and identity drivers ----------------------------------------------


def check_main(p: SignedPermutation, k: int) -> list[str]:
    """Round trip and weight preservation of the primed recording map on RSIF_k(p)."""
    _require_a(p)
    problems = []
    eg = set(enumerate_eg_tableaux(p))
    images = set()
    facts = enumerate_rsif(p, k)
    for v in facts:
        P, Q = primed_recording_map(v)
        if P not in eg:
            problems.append(f"{v}: insertion tableau {P} not in E(p)")
        if Q.shape != P.shape or Q.max_letter() > k:
            problems.append(f"{v}: recording tableau {Q} has the wrong shape or letters")
        if Q.dw(k) != tuple(double_weight(v)):
            problems.append(f"{v}: double weight {Q.dw(k)} != {tuple(double_weight(v))}")
        if inverse_primed_recording(P, Q, k) != v:
            problems.append(f"{v}: inverse map does not return the factorization")
        images.add((P, Q))
    if len(images) != len(facts):
        problems.append("primed recording map is not injective")
    target = sum(sum(1 for _ in enumerate_primed_tableaux(T.lam, k)) for T in eg)
    if target != len(facts):
        problems.append(f"|RSIF| = {len(facts)} but the tableau side has {target} pairs")
    return problems


def route_report(p: SignedPermutation, k: int) -> dict[str, bool]:
    d = f_d(p, k)
    return {
        "f_d == f_d_via_tableaux": d == f_d_via_tableaux(p, k),
        "f_d == f_a_super": d == f_a_super(p, k),
        "f_d == reconstruct(f_d_via_crystal)": d == reconstruct(f_d_via_crystal(p, k), k),
    }


def identity_report(p: SignedPermutation, k: int) -> dict[str, bool]:
    d = f_d(p, k)
    return {
        "f_d symmetric in x and in y": d.is_symmetric(),
        "f_d(0,x) == f_a(x)": specialize(d, "x:=0").swap_xy() == f_a(p, k),
        "f_d(x,x) == f_c(x)": specialize(d, "y:=x") == f_c(p, k),
        "f_d(p)(x,y) == f_d(p^-1)(y,x)": d == f_d(p.inverse(), k).swap_xy(),
        "f_a_super(x,x) == f_c(x)": specialize(f_a_super(p, k), "y:=x") == f_c(p, k),
    }
