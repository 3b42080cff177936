import pytest

from degseq import graphcore as gc
from degseq.oracle import graphic_sequences
from degseq.realize import (
    SearchBudget,
    SearchTimeout,
    enumerate_realizations,
    is_potentially_A,
    labeled_realizations,
    potentially,
    potentially_exhaustive,
    potentially_witness,
    realize,
)
from degseq.seqcore import DegreeSequence, NotGraphic
from degseq.targets import parse_target

from conftest import all_graphs, potentially_table

PATTERNS = ["K3", "C4", "2K2", "Z4", "K4-e", "K4"]


def test_realize_examples():
    g = realize((2, 2, 2, 2)).graph
    assert gc.is_isomorphic(g, gc.cycle(4))
    assert gc.is_isomorphic(realize((3, 1, 1, 1)).graph, gc.star(3))
    with pytest.raises(NotGraphic):
        realize((3, 3, 1, 1))


@pytest.mark.parametrize("n", range(1, 9))
def test_realize_matches_sequence_exactly(n):
    for pi in graphic_sequences(n):
        assert realize(pi).graph.degrees == pi.terms


@pytest.mark.parametrize(
    "terms, token, expected",
    [
        ((2, 2, 2, 2), "C4", True),
        ((3, 2, 2, 1), "C4", False),
        ((3, 3, 3, 3, 3, 3), "K4", False),
        ((3, 3, 2, 2), "Z4", True),
    ],
)
def test_potentially_examples(terms, token, expected):
    assert potentially(terms, token) is expected
    assert potentially_exhaustive(terms, token) is expected


def test_potentially_rejects_non_graphic():
    with pytest.raises(NotGraphic):
        potentially((3, 3, 1, 1), "K3")


def test_pattern_larger_than_sequence_is_false():
    assert potentially((1, 1), "K3") is False


@pytest.mark.parametrize(
    "terms, r, expected",
    [((3, 3, 3, 3), 3, True), ((2, 2, 2, 2), 2, False), ((5, 4, 3, 3, 3, 2), 3, True)],
)
def test_potentially_A_examples(terms, r, expected):
    assert is_potentially_A(terms, r) is expected


def test_potentially_A_range_error():
    with pytest.raises(ValueError):
        is_potentially_A((1, 1), 2)


@pytest.mark.parametrize("n", range(2, 7))
@pytest.mark.parametrize("token", PATTERNS)
def test_potentially_matches_all_graphs_table(n, token):
    h = parse_target(token).graph
    if h.order > n:
        return
    table = potentially_table(n, h)
    for terms, want in table.items():
        assert potentially(terms, h) is want, terms


@pytest.mark.parametrize("n", range(1, 6))
def test_labeled_realizations_counts_match_all_graphs(n):
    counts: dict = {}
    for g in all_graphs(n):
        if list(g.degrees) == sorted(g.degrees, reverse=True):
            counts[g.degrees] = counts.get(g.degrees, 0) + 1
    for pi in graphic_sequences(n):
        assert sum(1 for _ in labeled_realizations(pi)) == counts[pi.terms]


@pytest.mark.parametrize("n", range(1, 8))
def test_witnesses_are_sound(n):
    targets = [parse_target(t) for t in PATTERNS]
    for pi in graphic_sequences(n):
        for t in targets:
            if t.order > n:
                continue
            w = potentially_witness(pi, t)
            if w is None:
                continue
            assert w.graph.degrees == pi.terms
            emb = w.embedding
            assert len(set(emb.values())) == t.order
            assert all(w.graph.has_edge(emb[u], emb[v]) for u, v in t.graph.edges)


@pytest.mark.parametrize("n", range(4, 8))
def test_monotone_in_pattern(n):
    chain = ["K3", "Z4", "K4-e", "K4"]
    for pi in graphic_sequences(n):
        got = [potentially(pi, t) for t in chain]
        # once a bigger pattern is contained, every smaller one is too
        for small, big in zip(got, got[1:]):
            assert small or not big, pi


@pytest.mark.parametrize("n", range(4, 9))
def test_potentially_A_implies_clique(n):
    for pi in graphic_sequences(n):
        for r in range(2, min(n, 5)):
            if is_potentially_A(pi, r):
                assert potentially(pi, gc.complete(r + 1))


@pytest.mark.parametrize("n", range(4, 8))
def test_missing_edge_can_sit_on_last_two_top_positions(n):
    # a K_{r+1}-e witness can use positions 1..r+1 with the missing edge
    # between positions r and r+1 (0-based r-1, r)
    for r in (3, 4):
        if r + 1 > n:
            continue
        t = parse_target(f"K{r + 1}-e")
        # K_{r+1}-e built from complete_minus places the missing edge on 0-1
        placement = {0: r - 1, 1: r}
        rest = iter(range(r - 1))
        for v in range(2, r + 1):
            placement[v] = next(rest)
        for pi in graphic_sequences(n):
            assert potentially(pi, t) is potentially(pi, t, placement=placement), pi


def test_enumerate_realizations_examples():
    assert len(list(enumerate_realizations((2, 2, 2, 2)))) == 1
    reps = list(enumerate_realizations((8, 2, 2, 2, 2, 2, 2, 2, 2)))
    assert len(reps) == 1
    assert gc.is_isomorphic(reps[0], gc.join(gc.complete(1), gc.disjoint_copies(gc.complete(2), 4)))
    assert gc.is_isomorphic(next(enumerate_realizations((1, 1, 1, 1))), gc.disjoint_copies(gc.complete(2), 2))


def test_enumerate_realizations_distinct_and_capped():
    # 3-regular graphs on 6 vertices: K_{3,3} and the prism
    reps = list(enumerate_realizations((3,) * 6))
    assert len(reps) == 2
    assert not gc.is_isomorphic(reps[0], reps[1])
    assert len(list(enumerate_realizations((3,) * 6, cap=1))) == 1


def test_budget_timeout_is_distinguishable():
    with pytest.raises(SearchTimeout):
        potentially(DegreeSequence((3,) * 10), "K4", budget=SearchBudget(node_cap=3))


def test_budget_from_env(monkeypatch):
    monkeypatch.setenv("DEGSEQ_NODE_CAP", "5")
    monkeypatch.setenv("DEGSEQ_TIME_CAP", "1.5")
    b = SearchBudget.from_env()
    assert b.node_cap == 5 and b.time_cap == 1.5
