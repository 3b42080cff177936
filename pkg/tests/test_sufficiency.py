import pytest

from degseq.oracle import graphic_sequences
from degseq.realize import potentially
from degseq.sufficiency import (
    all_verdicts,
    sufficient_A,
    sufficient_Kr1_minus_e,
    sufficient_Kr1_minus_K1t,
    sufficient_Kr1_minus_P2,
    sufficient_Kr1_minus_P2uK2,
    sufficient_Kr1_minus_Z4,
    sum_bound,
)
from degseq.targets import parse_target


def seq(*parts):
    out = []
    for value, count in parts:
        out += [value] * count
    return tuple(out)


@pytest.mark.parametrize(
    "fn, terms, r, rule",
    [
        (sufficient_A, (5, 4, 3, 3, 3, 2), 3, "T2.1"),
        (sufficient_A, seq((3, 8)), 3, "T2.2"),
        (sufficient_A, (3, 3, 3, 3, 1, 1), 3, None),
        (sufficient_Kr1_minus_e, (5, 4, 3, 2, 2, 2), 3, "T2.3"),
        (sufficient_Kr1_minus_e, (5, 3, 3, 2, 2, 1), 3, "L3.1"),
        (sufficient_Kr1_minus_e, seq((3, 2), (2, 6)), 3, "T2.4"),
        (sufficient_Kr1_minus_P2, seq((4, 10)), 4, "L2.2"),
        (sufficient_Kr1_minus_P2, seq((3, 10)), 4, None),
        (sufficient_Kr1_minus_P2, seq((5, 2), (4, 8)), 4, "L2.2"),
        (sufficient_Kr1_minus_Z4, seq((9, 2), (4, 2), (3, 6)), 4, "L3.3"),
        (sufficient_Kr1_minus_Z4, seq((6, 1), (3, 8), (2, 1)), 4, None),
        (sufficient_Kr1_minus_P2uK2, seq((5, 12)), 5, "L3.5"),
        (sufficient_Kr1_minus_P2uK2, seq((4, 12)), 5, None),
        (sufficient_Kr1_minus_P2uK2, seq((8, 1), (4, 8)), 5, None),
    ],
)
def test_verdict_examples(fn, terms, r, rule):
    v = fn(terms, r)
    assert v.rule == rule
    assert v.applicable is (rule is not None)
    if v.applicable:
        assert potentially(terms, v.guaranteed)


def test_z4_boundary_case_is_applicable():
    # sum 28 equals the even-parity bound at r=4, n=10 and d1=7 meets 2r-1
    terms = seq((7, 1), (3, 3), (2, 6))
    assert sum(terms) == sum_bound(4, 10) == 28
    v = sufficient_Kr1_minus_Z4(terms, 4)
    assert v.applicable
    assert potentially(terms, "K5-Z4")


@pytest.mark.parametrize(
    "terms, r, t, expected",
    [
        (seq((4, 10)), 4, 2, True),
        (seq((4, 1), (3, 9)), 4, 2, False),
        (seq((5, 4), (4, 8)), 5, 3, True),
    ],
)
def test_k1t_examples(terms, r, t, expected):
    v = sufficient_Kr1_minus_K1t(terms, r, t)
    assert v.applicable is expected
    assert v.guaranteed == f"K{r + 1}-K1_{t}"
    if expected:
        assert potentially(terms, v.guaranteed)


def test_k1t_rejects_t_out_of_range():
    with pytest.raises(ValueError):
        sufficient_Kr1_minus_K1t(seq((4, 10)), 4, 4)
    with pytest.raises(ValueError):
        sufficient_Kr1_minus_K1t(seq((4, 10)), 4, 0)


def test_small_r_is_inapplicable_for_lemmas_that_need_it():
    assert not sufficient_Kr1_minus_Z4(seq((9, 2), (4, 2), (3, 6)), 3).applicable
    assert not sufficient_Kr1_minus_P2uK2(seq((5, 12)), 4).applicable


def test_verdict_text_forms():
    assert str(sufficient_Kr1_minus_Z4(seq((9, 2), (4, 2), (3, 6)), 4)) == "L3.3 applicable → K5-Z4"
    assert str(sufficient_A((3, 3, 3, 3, 1, 1), 3)) == "T2.1|T2.2|L3.2 inapplicable → A4"
    d = sufficient_A((5, 4, 3, 3, 3, 2), 3).to_dict()
    assert d["rule"] == "T2.1" and d["applicable"] and d["guaranteed"] == "A4"


def test_all_verdicts_order():
    names = [v.guaranteed for v in all_verdicts(seq((4, 10)), 4)]
    assert names == ["A5", "K5-e", "K5-P2", "K5-Z4", "K5-K1_1", "K5-K1_2", "K5-K1_3", "K5-(P2uK2)"]


@pytest.mark.parametrize("n", range(4, 9))
@pytest.mark.parametrize("r", [3, 4])
def test_soundness_small_sweep(n, r):
    if r + 1 > n:
        return
    cache = {}
    for pi in graphic_sequences(n):
        for v in all_verdicts(pi, r):
            if not v.applicable:
                continue
            key = (pi.terms, v.guaranteed)
            if key not in cache:
                cache[key] = potentially(pi, parse_target(v.guaranteed))
            assert cache[key], (pi, str(v))
