import pytest
from hypothesis import given
from hypothesis import strategies as st

from degseq import graphcore as gc
from degseq.oracle import sigma_bruteforce
from degseq.realize import enumerate_realizations
from degseq.seqcore import is_graphic_eg
from degseq.targets import parse_target
from degseq.thresholds import (
    SIGMA_K4_MINUS_E,
    extremal_construction,
    extremal_sequence,
    known_sigma,
    lemma36_lower,
    lemma37_lower,
    sigma_lower_bound_kpt,
    theorem_rhs,
)


@pytest.mark.parametrize(
    "which, r, n, value, branch",
    [
        ("T1.1", 4, 36, 110, "even_nr"),
        ("T1.1", 4, 37, 112, "odd_nr"),
        ("T1.2", 4, 36, 106, "even_nr"),
        ("T1.2", 4, 9, 26, "odd_nr"),
    ],
)
def test_theorem_rhs_examples(which, r, n, value, branch):
    sv = theorem_rhs(which, r, n)
    assert sv.value == value
    assert sv.parity_branch == branch


def test_theorem_rhs_range_flag_and_errors():
    assert theorem_rhs("T1.1", 4, 36).in_range
    assert not theorem_rhs("T1.1", 4, 35).in_range
    assert not theorem_rhs("T1.2", 4, 38).in_range
    assert theorem_rhs("T1.2", 4, 39).in_range
    assert str(theorem_rhs("T1.1", 4, 36)) == "110 even-branch T1.1 in-range"
    with pytest.raises(ValueError):
        theorem_rhs("T1.1", 3, 10)
    with pytest.raises(ValueError):
        theorem_rhs("T1.2", 4, 4)
    with pytest.raises(ValueError):
        theorem_rhs("T9", 4, 9)


@pytest.mark.parametrize("p, t, n, value", [(4, 1, 9, 28), (4, 2, 10, 46), (3, 1, 4, 10)])
def test_kpt_examples(p, t, n, value):
    assert sigma_lower_bound_kpt(p, t, n).value == value


def test_kpt_matches_t11_at_r4_n9():
    assert sigma_lower_bound_kpt(4, 1, 9).value == theorem_rhs("T1.1", 4, 9).value


@pytest.mark.parametrize("r, n, value", [(4, 9, 28), (5, 12, 56), (4, 10, 32)])
def test_lemma36_examples(r, n, value):
    assert lemma36_lower(r, n).value == value


@pytest.mark.parametrize(
    "family, n, kw, value",
    [("C4", 4, {}, 10), ("pK2", 4, {"p": 2}, 8), ("Kk", 6, {"k": 3}, 12), ("C4", 7, {}, 20)],
)
def test_known_sigma_examples(family, n, kw, value):
    assert known_sigma(family, n, **kw).value == value


@pytest.mark.parametrize(
    "r, n, terms",
    [
        (4, 9, (8,) + (2,) * 8),
        (4, 8, (7,) + (2,) * 6 + (1,)),
        (5, 10, (9, 9) + (3,) * 8),
        (5, 11, (10, 10) + (3,) * 8 + (2,)),
    ],
)
def test_extremal_construction_examples(r, n, terms):
    g = extremal_construction(r, n)
    assert gc.degree_sequence(g).terms == terms
    assert extremal_sequence(r, n).terms == terms
    assert sum(terms) + 2 == theorem_rhs("T1.2", r, n).value == lemma37_lower(r, n).value


def test_construct_r4_n9_is_k1_join_matching():
    g = extremal_construction(4, 9)
    assert gc.edge_count(g) == 12
    assert gc.is_isomorphic(g, gc.join(gc.complete(1), gc.disjoint_copies(gc.complete(2), 4)))


@pytest.mark.parametrize("r", [4, 5])
@pytest.mark.parametrize("offset", range(1, 7))
def test_construction_avoids_kr1_minus_z4(r, offset):
    g = extremal_construction(r, r + offset)
    assert not gc.contains_subgraph(g, parse_target(f"K{r + 1}-Z4").graph)


@pytest.mark.parametrize("r", [4, 5])
@pytest.mark.parametrize("offset", range(1, 7))
def test_construction_does_contain_kr1_minus_k4(r, offset):
    # K_{r+1}-K4 is K_{r-3} joined to 4 isolated vertices; the r-3 hub
    # vertices plus any 4 others realize it, so the construction cannot
    # avoid it (nor K_{r+1}-(K4-e), which is a subgraph of it)
    g = extremal_construction(r, r + offset)
    assert gc.contains_subgraph(g, parse_target(f"K{r + 1}-K4").graph)


@pytest.mark.parametrize("n", range(5, 10))
def test_r4_construction_sequence_has_unique_realization(n):
    assert len(list(enumerate_realizations(extremal_sequence(4, n)))) == 1


@given(st.integers(4, 12), st.integers(1, 60))
def test_formula_invariants(r, offset):
    n = r + offset
    for sv in (theorem_rhs("T1.1", r, n), theorem_rhs("T1.2", r, n), lemma36_lower(r, n), lemma37_lower(r, n)):
        assert sv.value % 2 == 0
    seq = extremal_sequence(r, n)
    assert is_graphic_eg(seq)
    assert seq.sum + 2 == theorem_rhs("T1.2", r, n).value
    assert lemma36_lower(r, n).value == sigma_lower_bound_kpt(4, r - 3, n).value
    assert theorem_rhs("T1.1", r, n).value - theorem_rhs("T1.2", r, n).value in (2, 4)


@pytest.mark.parametrize("n", sorted(SIGMA_K4_MINUS_E))
def test_k4_minus_e_table_matches_oracle(n):
    assert sigma_bruteforce(parse_target("K4-e"), n).value == SIGMA_K4_MINUS_E[n]
