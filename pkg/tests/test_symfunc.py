from itertools import permutations
from math import factorial

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from doublestanley.errors import DomainError, TruncationError
from doublestanley.symfunc import (MultiPoly, SchurExpansion, expand_in_schur, expand_in_schur_p, omega_x,
                                   reconstruct, schur, schur_p, schur_xy, specialize, super_schur)
from doublestanley.tableau import SkewShape, partitions, strict_partitions

K = 3
XS = sympy.symbols("x1:4")


def from_sympy(expr, k=K):
    poly = sympy.Poly(sympy.expand(expr), *XS[:k])
    return MultiPoly(k, {tuple(m) + (0,) * k + (0,): int(c) for m, c in poly.terms()})


def bialternant(lam, k=K):
    lam = tuple(lam) + (0,) * (k - len(lam))
    num = sympy.Matrix(k, k, lambda i, j: XS[i] ** (lam[j] + k - 1 - j))
    den = sympy.Matrix(k, k, lambda i, j: XS[i] ** (k - 1 - j))
    return sympy.cancel(num.det() / den.det())


def schur_p_symmetrized(lam, k=K):
    ell = len(lam)
    x = XS[:k]
    base = sympy.Mul(*[x[i] ** lam[i] for i in range(ell)])
    for i in range(ell):
        for j in range(i + 1, k):
            base *= (x[i] + x[j]) / (x[i] - x[j])
    total = sum(base.subs(dict(zip(x, perm)), simultaneous=True) for perm in permutations(x))
    return sympy.cancel(total / factorial(k - ell))


@pytest.mark.parametrize("lam", [lam for n in range(1, 6) for lam in partitions(n) if len(lam) <= K])
def test_schur_matches_bialternant(lam):
    assert schur(lam, K) == from_sympy(bialternant(lam))


@pytest.mark.parametrize("lam", [lam for n in range(1, 6) for lam in strict_partitions(n) if len(lam) <= K])
def test_schur_p_matches_symmetrization(lam):
    assert schur_p(lam, K) == from_sympy(schur_p_symmetrized(lam))


def test_frozen_schur_p_expansions():
    def sx(*pairs):
        return SchurExpansion.of(dict(zip(pairs[::2], pairs[1::2])))
    assert expand_in_schur(schur_p((2,), 4)) == sx((2,), 1, (1, 1), 1)
    assert expand_in_schur(schur_p((2, 1), 4)) == sx((2, 1), 1)
    assert expand_in_schur(schur_p((3, 1), 4)) == sx((3, 1), 1, (2, 2), 1, (2, 1, 1), 1)
    assert expand_in_schur(schur_p((3,), 4)) == sx((3,), 1, (2, 1), 1, (1, 1, 1), 1)


def test_skew_schur_and_small_cases():
    assert schur((), K) == MultiPoly.one(K)
    assert schur((2, 1), K, "x", (1,)) == schur((2,), K) + schur((1, 1), K)
    assert schur((1, 1, 1, 1), K) == MultiPoly.zero(K)
    assert schur((1,), 2, "y") == MultiPoly.monomial(2, y=(1,)) + MultiPoly.monomial(2, y=(0, 1))


def test_super_schur_of_one_box():
    assert super_schur(SkewShape((1,)), 2) == schur((1,), 2, "x") + schur((1,), 2, "y")
    assert specialize(super_schur(SkewShape((2, 1)), 3), "y:=-x") == MultiPoly.zero(3)


def test_doubled_variable_schur():
    # s_lam in the 2k variables (x, y) restricted to x-only is s_lam(x)
    assert specialize(schur_xy((2, 1), 2), "y:=0") == schur((2, 1), 2)


def test_specializations():
    p = MultiPoly.monomial(2, x=(1,), y=(0, 2)) + MultiPoly.monomial(2, y=(1,))
    assert specialize(p, "y:=0") == MultiPoly.zero(2)
    assert specialize(p, "x:=0") == MultiPoly.monomial(2, y=(1,))
    assert specialize(p, "y:=x") == MultiPoly.monomial(2, x=(1, 2)) + MultiPoly.monomial(2, x=(1,))
    assert specialize(p, "y:=-x") == MultiPoly.monomial(2, x=(1, 2)) - MultiPoly.monomial(2, x=(1,))
    assert specialize(p, "y:=t*x") == MultiPoly.monomial(2, x=(1, 2), t=2) + MultiPoly.monomial(2, x=(1,), t=1)
    with pytest.raises(DomainError):
        specialize(p, "x:=y")


def test_expansion_errors_and_formatting():
    p = MultiPoly.monomial(2, x=(1,))
    assert p.asymmetry() == "x1<->x2"
    with pytest.raises(DomainError):
        expand_in_schur(p)
    with pytest.raises(DomainError):
        expand_in_schur_p(schur((1,), 2, "y"))
    with pytest.raises(DomainError):
        expand_in_schur_p(schur((1, 1), 3))
    e = SchurExpansion({((4, 1), (), 0): 2, ((3,), (), 1): 1, ((), (1,), 0): -1})
    assert str(e) == "-s1(y) + 2*s41(x) + t*s3(x)"
    assert str(SchurExpansion({})) == "0" and str(SchurExpansion({((), (), 0): 1})) == "1"
    with pytest.raises(TruncationError):
        omega_x(SchurExpansion({((3,), (), 0): 1}), 2)
    assert omega_x(SchurExpansion({((3,), (), 0): 1})) == SchurExpansion({((1, 1, 1), (), 0): 1})


terms = st.dictionaries(
    st.tuples(st.sampled_from([lam for n in range(4) for lam in partitions(n)]),
              st.sampled_from([lam for n in range(3) for lam in partitions(n)]), st.integers(0, 2)),
    st.integers(-3, 3), max_size=5)


@given(terms)
def test_expansion_round_trip(t):
    e = SchurExpansion(t)
    p = reconstruct(e, 3)
    assert expand_in_schur(p) == e
    assert MultiPoly.from_json_obj(p.to_json_obj()) == p


@given(terms, terms)
def test_polynomial_ring_laws(a, b):
    p, q = reconstruct(SchurExpansion(a), 2), reconstruct(SchurExpansion(b), 2)
    assert p * q == q * p
    assert (p + q) - q == p
    assert p.swap_xy().swap_xy() == p
    assert p.is_symmetric()


@pytest.mark.parametrize("lam", [lam for n in range(1, 5) for lam in partitions(n)])
def test_omega_of_doubled_schur_is_super_schur(lam):
    assert omega_x(expand_in_schur(schur_xy(lam, 4))) == expand_in_schur(super_schur(SkewShape(lam), 4))
