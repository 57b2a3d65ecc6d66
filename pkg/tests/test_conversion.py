import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from doublestanley.conversion import convert_level, in_regime, inward_step, outward_step, pt_to_st, st_to_pt
from doublestanley.errors import DomainError
from doublestanley.tableau import (PrimedTableau, enumerate_primed_tableaux, enumerate_pst, iter_skew_shapes,
                                   pst_violations)

P = PrimedTableau.parse
EXAMPLE = P("-4 -3 1 4 / -4 1' 2' / -3 1 2' / 2 2")


def test_worked_example_step_by_step():
    once, path = inward_step(EXAMPLE, 2, with_path=True)
    assert path[0] == (1, 2)                       # the uppermost primed 2 is barred first
    twice, paths = convert_level(EXAMPLE, 2, "inward", 4, with_paths=True)
    assert str(twice) == "-4 -3 -2 4 / -4 -2 1' / -3 1 1 / 2 2"
    assert len(paths) == 2 and paths[0] == path
    assert inward_step(once, 2) == twice
    assert convert_level(twice, 1, "outward", 4) == EXAMPLE


def test_regimes_and_boundaries():
    assert in_regime(EXAMPLE, 2) and not in_regime(EXAMPLE, 1) and not in_regime(EXAMPLE, 3)
    with pytest.raises(DomainError):
        convert_level(EXAMPLE, 0, "inward", 4)
    with pytest.raises(DomainError):
        convert_level(P("1'"), 1, "outward", 1)
    with pytest.raises(DomainError):
        convert_level(EXAMPLE, 1, "inward", 4)
    with pytest.raises(DomainError):
        convert_level(EXAMPLE, 2, "sideways", 4)
    with pytest.raises(DomainError):
        inward_step(P("1 1"), 1)
    with pytest.raises(DomainError):
        outward_step(P("1 1"), 1)
    with pytest.raises(DomainError):
        pt_to_st(EXAMPLE)
    with pytest.raises(DomainError):
        st_to_pt(P("1'"))


def test_skew_shapes_convert_bijectively():
    k = 2
    for shape in iter_skew_shapes(5, 3, 3):
        for j in range(1, k + 1):
            src = list(enumerate_pst(shape, k, j))
            image = set()
            for T in src:
                U = convert_level(T, j, "inward", k)
                X, Y = T.dw(k)
                assert pst_violations(U, X, Y, j - 1, shape) == []
                assert convert_level(U, j - 1, "outward", k) == T
                image.add(U)
            assert image == set(enumerate_pst(shape, k, j - 1))


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([(4, 2), (3, 3, 1), (5, 1), (2, 2, 2)]), st.data())
def test_full_conversion_round_trip(lam, data):
    T = data.draw(st.sampled_from(list(enumerate_primed_tableaux(lam, 3))))
    S = pt_to_st(T, 3)
    assert not S.has_primes() and S.dw(3) == T.dw(3)
    assert st_to_pt(S, 3) == T


def _inward_paths_ok(p, q):
    for c in {c for _, c in p}:
        top = min(r for r, cc in p if cc == c)
        if any(cc == c and r <= top for r, cc in q):
            return False
    r0, c0 = p[-1]
    return all(r > r0 for r, c in q if c < c0)


def _outward_paths_ok(p, q):
    for c in {c for _, c in p}:
        bot = max(r for r, cc in p if cc == c)
        if any(cc == c and r >= bot for r, cc in q):
            return False
    r0, c0 = p[-1]
    return all(r < r0 for r, c in q if c > c0)


def test_successive_conversion_paths_are_nested():
    checked = 0
    for shape in iter_skew_shapes(5, 3, 3):
        for j in (1, 2):
            for T in enumerate_pst(shape, 2, j):
                _, ps = convert_level(T, j, "inward", 2, with_paths=True)
                assert all(_inward_paths_ok(a, b) for a, b in zip(ps, ps[1:])), T
                if j < 2:
                    _, qs = convert_level(T, j, "outward", 2, with_paths=True)
                    assert all(_outward_paths_ok(a, b) for a, b in zip(qs, qs[1:])), T
                checked += 1
    assert checked == 5960
