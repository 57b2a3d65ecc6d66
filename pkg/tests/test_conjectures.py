import json
import warnings
from pathlib import Path

import pytest

from doublestanley.conjectures import (check_conjecture, enumerate_signed_eg, is_signed_eg,
                                       is_unknotted, is_untangled, signed_eg_violations, sweep,
                                       verify_2ze_relation, word_is_unknotted, word_is_untangled, ze)
from doublestanley.coxeter import SignedPermutation, elements, evaluate, length, reduced_words
from doublestanley.errors import DomainError
from doublestanley.tableau import Tableau

DATA = Path(__file__).parent / "data"


@pytest.mark.parametrize("word,rank", [((1, 2, 3, 4, 5, 4), 5), ((2, 1, 0, 1, 2, 3, 2), 3),
                                       ((1, 0, 1, 0, 3, 4, 3), 4), ((2, 1, 3, 2, 4, 3), 4)])
def test_anchor_words_are_unknotted(word, rank):
    assert is_unknotted(evaluate(word, rank))


def test_word_level_definitions():
    assert word_is_unknotted(()) and word_is_untangled(())
    assert not word_is_unknotted((0, 1, 0, 1, 2))
    assert word_is_unknotted((0, 1, 3, 0, 1, 2), strict_factor=True)
    assert not word_is_unknotted((0, 1, 3, 0, 1, 2), strict_factor=False)
    assert not word_is_unknotted((1, 2, 1, 3))
    assert not word_is_untangled((2,))
    assert not word_is_untangled((3, 4, 3, 5)) and word_is_untangled((3, 4, 3))


def test_classification_table_of_c3():
    rows = [line.split("\t") for line in (DATA / "c3_classification.txt").read_text().splitlines()
            if not line.startswith("#")]
    assert len(rows) == len(elements(2, "C", 6))
    for window, ell, knot_f, knot_s, tangle, zeros in rows:
        p = SignedPermutation.parse(window)
        assert length(p) == int(ell)
        assert (is_unknotted(p), is_unknotted(p, False), is_untangled(p)) == (knot_f == "1", knot_s == "1", tangle == "1")
        assert sorted({w.count(0) for w in reduced_words(p)}) == [int(z) for z in zeros.split(",")]
        # untangled implies unknotted under either reading
        assert tangle == "0" or knot_s == "1"


def test_ze_and_the_2ze_relation():
    assert ze(evaluate([1, 2, 1])) == 0
    assert ze(evaluate([0], 1)) == 1
    assert verify_2ze_relation(evaluate([0], 1), 2)
    assert verify_2ze_relation(evaluate([0, 1, 0, 3, 1], 3), 4)
    for p in elements(2, "C", 6):
        assert verify_2ze_relation(p, 4)


def test_signed_eg_conditions():
    p = evaluate([1, 2, 1], 3)
    assert is_signed_eg(Tableau.parse("-2 1 / -1"), p)
    assert "rows or columns not weakly increasing" in signed_eg_violations(Tableau.parse("2 1 / 2"), p)
    assert "reading word is not a reduced word for the element" in signed_eg_violations(Tableau.parse("1 2"), p)
    # the -1/0 column pattern licenses a vertical repeat of -1
    q = evaluate([0, 1, 0, 1], 2)
    T = Tableau.parse("-1 0 / -1 0")
    assert T.reading_word() == (-1, 0, -1, 0) and is_signed_eg(T, q)


def test_enumeration_warns_outside_scope():
    knotted = next(p for p in elements(2, "C", 6) if not is_unknotted(p))
    with pytest.warns(UserWarning):
        enumerate_signed_eg(knotted)


def test_report_statuses_and_json():
    rep = check_conjecture(evaluate([1, 2, 1], 3), 3)
    assert rep.status == "EQUAL" and rep.reading == "factor"
    obj = json.loads(rep.to_json())
    assert set(obj) == {"element", "conjecture", "status", "lhs", "rhs", "diff", "reason", "reading"}
    assert obj["lhs"] == obj["rhs"] and obj["diff"] == []
    assert check_conjecture(evaluate([0], 1), 3).status == "SKIPPED"
    assert check_conjecture(evaluate([0, 1, 0, 3, 1], 3), 2).reason == "a reduced word has more than one s_0"
    with pytest.raises(DomainError):
        check_conjecture(evaluate([1], 1), 4)


def test_sign_finding_for_a_single_s0():
    # one s_0 in an odd-length element: the sides differ exactly by (-1)^l
    rep = check_conjecture(evaluate([0], 1), 2)
    assert rep.status == "COUNTEREXAMPLE"
    assert rep.reason == "sides agree up to the global sign (-1)^1"
    assert rep.lhs.terms == {((1,), (), 0): -1} and rep.rhs.terms == {((1,), (), 0): 1}


def test_sweep_reaches_a_status_for_every_element():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        reports = sweep(2, 4)
    assert len(reports) == 3 * len(elements(2, "C", 4))
    for r in reports:
        assert r.status in ("EQUAL", "COUNTEREXAMPLE", "SKIPPED")
        if r.status == "COUNTEREXAMPLE":
            assert r.diff or r.lhs is None


def test_rank_seven_signed_eg_example():
    # the window is often quoted as [-2,-1,...]; the reading word evaluates to [-1,-2,...]
    p = evaluate([3, 4, 3, 1, 0, 6, 7, 1, 0, 6], 7)
    assert str(p) == "[-1,-2,5,4,3,8,7,6]"
    assert is_unknotted(p)
    assert is_signed_eg(Tableau.parse("-7 -1 0 6 / -3 -1 0 6 / -3 4"), p)
