from collections import Counter
from itertools import product

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from doublestanley.coxeter import elements, evaluate, reduced_words
from doublestanley.errors import DomainError
from doublestanley.factorization import Factorization, double_weight, enumerate_rsif
from doublestanley.insertion import (bump_from, eg_insert, haiman_insert, haiman_P, inner_corners,
                                     inverse_primed_recording, minus_word, plus_word, primed_recording_map)
from doublestanley.tableau import PrimedTableau, Tableau, enumerate_primed_tableaux, partitions, plus_transform


def syt_count(lam):
    """Hook length formula."""
    from math import factorial
    conj = [sum(1 for p in lam if p > c) for c in range(lam[0])] if lam else []
    hooks = 1
    for r, part in enumerate(lam):
        for c in range(part):
            hooks *= part - c + conj[c] - r - 1
    return factorial(sum(lam)) // hooks


def test_eg_insertion_small():
    P, cells = eg_insert([3])
    assert str(P) == "3" and cells == [(0, 0)]
    assert str(eg_insert([1, 2, 1])[0]) == "1 2 / 2"
    assert str(eg_insert([2, 1, 2])[0]) == "1 2 / 2"
    assert eg_insert([])[0] == Tableau(())
    with pytest.raises(DomainError):
        eg_insert([1, 1])


def test_eg_cell_rows_track_ascents():
    # u_r < u_{r+1} exactly when the r-th new cell lies weakly above the (r+1)-th
    for p in elements(3, "A"):
        for u in reduced_words(p):
            _, cells = eg_insert(u)
            for r in range(len(u) - 1):
                assert (u[r] < u[r + 1]) == (cells[r][0] >= cells[r + 1][0]), (u, cells)


def test_primed_recording_small():
    assert primed_recording_map(Factorization(((),))) == (Tableau(()), PrimedTableau(()))
    assert str(primed_recording_map(Factorization(((1,),)))[1]) == "1"
    assert str(primed_recording_map(Factorization(((-1,),)))[1]) == "1'"


def test_inverse_of_the_worked_pair():
    P = Tableau.parse("1 2 3 / 2 3 4 / 3 4 / 4")
    Q = PrimedTableau.parse("1' 1 3' / 1' 2' 3 / 1 2' / 3")
    assert str(inverse_primed_recording(P, Q, 3)) == "(-3,-2,1,4)(-3,-2)(-4,1,3)"
    assert inverse_primed_recording(Tableau(()), PrimedTableau(()), 1) == Factorization(((),))


def test_all_pairs_for_121_invert_to_rsif():
    p = evaluate([1, 2, 1])
    P = Tableau.parse("1 2 / 2")
    got = {inverse_primed_recording(P, Q, 2) for Q in enumerate_primed_tableaux((2, 1), 2)}
    assert got == set(enumerate_rsif(p, 2))


def test_inverse_rejects_bad_input():
    with pytest.raises(DomainError):
        inverse_primed_recording(Tableau.parse("1 2"), PrimedTableau.parse("1 / 1'"))
    with pytest.raises(DomainError):
        inverse_primed_recording(Tableau.parse("1 2"), PrimedTableau.parse("2 2"), 1)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(elements(3, "A", 5)), st.integers(1, 3), st.data())
def test_round_trip_and_weight(p, k, data):
    facts = enumerate_rsif(p, k)
    assume(facts)
    v = data.draw(st.sampled_from(facts))
    P, Q = primed_recording_map(v)
    assert Q.dw(k) == tuple(double_weight(v))
    assert inverse_primed_recording(P, Q, k) == v


def test_haiman_small_traces():
    assert tuple(map(str, haiman_insert([2]))) == ("1", "1")
    # 2 then 1': the primed letter column-inserts and bumps the plain 2 into the next row
    P, S = haiman_insert([4, 1])
    assert str(P) == "1' / 2" and str(S) == "1 / 2"


def test_haiman_is_a_bijection_by_counting():
    k = 2
    for n in range(1, 5):
        pairs = Counter(tuple(map(str, haiman_insert(w))) for w in product(range(1, 2 * k + 1), repeat=n))
        assert max(pairs.values()) == 1
        assert len(pairs) == sum(len(list(enumerate_primed_tableaux(lam, k))) * syt_count(lam)
                                 for lam in partitions(n))


def test_haiman_preserves_double_weight():
    from doublestanley.crystal import word_dw
    for w in product(range(1, 7), repeat=4):
        assert haiman_P(w).dw(3) == word_dw(w, 3)


def test_haiman_commutes_with_half_shifts():
    for n in range(1, 6):
        for w in product(range(1, 5), repeat=n):
            P = haiman_P(w)
            assert haiman_P(plus_word(w)) == plus_transform(P)
            if 1 not in w:
                assert plus_transform(haiman_P(minus_word(w))) == P


def test_bump_from_worked_example():
    T = PrimedTableau.parse(". 2 2 / 2 3' 3 / 3'")
    assert inner_corners(T) == [(0, 1), (1, 0)]
    assert str(bump_from(T, (0, 1))) == ". . 2 / 2 2 3' / 3' 3"
    with pytest.raises(DomainError):
        bump_from(T, (1, 1))
