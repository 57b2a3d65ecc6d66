import pytest
from hypothesis import assume, given
from hypothesis import strategies as st
from sympy import partition as npartitions

from doublestanley.coxeter import elements
from doublestanley.errors import DomainError, ParseError
from doublestanley.tableau import (PrimedTableau, SkewShape, Tableau, barred, conjugate, dominates,
                                   eg_tableaux_direct, enumerate_eg_tableaux, enumerate_primed_tableaux,
                                   enumerate_pst, enumerate_signed_tableaux, format_entry, is_valid_primed,
                                   iter_skew_shapes, letter, minus_transform, parse_entry, partitions, plain,
                                   plus_transform, primed, pst_violations, regime_of, strict_partitions,
                                   validate_pst)


def test_entry_encoding():
    assert [format_entry(v) for v in (primed(1), plain(1), barred(2), primed(3))] == ["1'", "1", "-2", "3'"]
    assert all(parse_entry(format_entry(v)) == v for v in (1, 2, 3, 4, -2, -6))
    assert primed(1) < plain(1) < primed(2) and barred(2) < barred(1) < primed(1)
    assert letter(barred(3)) == letter(primed(3)) == letter(plain(3)) == 3
    with pytest.raises(ParseError):
        parse_entry("x")


def test_partitions():
    assert [len(partitions(n)) for n in range(12)] == [npartitions(n) for n in range(12)]
    assert partitions(3) == ((3,), (2, 1), (1, 1, 1))
    assert strict_partitions(6) == ((6,), (5, 1), (4, 2), (3, 2, 1))
    assert dominates((3, 1), (2, 2)) and not dominates((2, 2), (3, 1))


@given(st.integers(0, 9).flatmap(lambda n: st.sampled_from(partitions(n))))
def test_conjugate_is_an_involution(lam):
    assert conjugate(conjugate(lam)) == lam and sum(conjugate(lam)) == sum(lam)


def test_text_format():
    T = PrimedTableau.parse(". 2 2 / 2 3' 3 / 3'")
    assert T.mu == (1,) and T.lam == (3, 3, 1) and T.size == 6
    assert str(T) == ". 2 2 / 2 3' 3 / 3'"
    assert Tableau.parse("-3 -1 0 1 / 0").reading_word() == (0, -3, -1, 0, 1)
    assert str(PrimedTableau.empty()) == ""
    with pytest.raises(ParseError):
        Tableau.parse("1 2 / 3 4 5")


@given(st.integers(1, 5).flatmap(lambda n: st.sampled_from(partitions(n))), st.integers(1, 3), st.data())
def test_round_trip_through_text(lam, k, data):
    tabs = list(enumerate_pst(lam, k, data.draw(st.integers(0, k))))
    assume(tabs)
    T = data.draw(st.sampled_from(tabs))
    assert PrimedTableau.parse(str(T)) == T


def test_frozen_primed_counts():
    assert len(list(enumerate_primed_tableaux((1,), 1))) == 2
    assert [str(T) for T in enumerate_primed_tableaux((2,), 1)] == ["1' 1", "1 1"]
    assert sorted(str(T) for T in enumerate_primed_tableaux((1, 1), 1)) == ["1' / 1", "1' / 1'"]


def test_pst_violation_reasons():
    T = PrimedTableau.parse("-4 -3 1 4 / -4 1' 2' / -3 1 2' / 2 2")
    assert validate_pst(T, (1, 2, 2, 2), (2, 2, 0, 1), 2, SkewShape((4, 3, 3, 2)))
    assert "shape" in pst_violations(T, (1, 2, 2, 2), (2, 2, 0, 1), 2, SkewShape((4, 3, 3, 3)))
    assert "unmarked-count" in pst_violations(T, (1, 2, 2, 2), (2, 2, 1, 0), 2)
    assert "barred-regime" in pst_violations(T, (1, 2, 2, 2), (2, 2, 0, 1), 1)
    assert pst_violations(PrimedTableau.parse("1' 1'"), (2,), (0,), 1) == ["row-marked"]
    assert pst_violations(PrimedTableau.parse("1 / 1"), (0,), (2,), 1) == ["column-unmarked"]
    assert pst_violations(PrimedTableau.parse("2 1"), (0, 0), (1, 1), 2) == ["order"]
    with pytest.raises(DomainError):
        pst_violations(T, (1,), (1, 2), 0)


def test_regimes_and_transforms():
    T = PrimedTableau.parse("1' 1 / 1 2'")
    assert regime_of(T, 3) == [2, 3] and is_valid_primed(T)
    assert str(plus_transform(T)) == "1 2' / 2' 2"
    assert minus_transform(plus_transform(T)) == T


@pytest.mark.parametrize("lam,k", [((2, 1), 2), ((2, 2), 3), ((3, 1), 2)])
def test_every_regime_has_the_same_size(lam, k):
    sizes = {len(list(enumerate_pst(lam, k, j))) for j in range(k + 1)}
    assert len(sizes) == 1
    assert sizes == {len(list(enumerate_signed_tableaux(lam, k)))}


def test_eg_tableaux_by_insertion_match_direct_filtering():
    for p in elements(3, "A"):
        assert enumerate_eg_tableaux(p) == eg_tableaux_direct(p)
    assert [str(T) for T in enumerate_eg_tableaux(elements(2, "A")[-1])] == ["1 2 / 2"]


def test_skew_shape_iteration():
    shapes = list(iter_skew_shapes(3, 2, 2))
    assert len(shapes) == len(set(shapes))
    assert all(0 < s.size <= 3 for s in shapes)
    assert SkewShape((2, 1)) in shapes and SkewShape((2, 2), (1,)) in shapes
