from functools import lru_cache
from itertools import combinations, permutations

import pytest

from degseq.graphcore import SimpleGraph

ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[SimpleGraph, ...]:
    """Every labeled simple graph on n vertices (2^(n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    out = []
    for mask in range(1 << len(pairs)):
        out.append(SimpleGraph(n, [p for i, p in enumerate(pairs) if mask >> i & 1]))
    return tuple(out)


@lru_cache(maxsize=None)
def degree_sequences_by_brute_force(n: int) -> frozenset:
    return frozenset(tuple(sorted(g.degrees, reverse=True)) for g in all_graphs(n))


def embeds_brute(g: SimpleGraph, h: SimpleGraph) -> bool:
    """Try every injective vertex map; no pruning at all."""
    if h.order > g.order:
        return False
    for image in permutations(range(g.order), h.order):
        if all(g.has_edge(image[u], image[v]) for u, v in h.edges):
            return True
    return False


@lru_cache(maxsize=None)
def potentially_table(n: int, h: SimpleGraph) -> dict:
    """sorted degree sequence -> does some graph with it contain h."""
    table: dict = {}
    for g in all_graphs(n):
        key = tuple(sorted(g.degrees, reverse=True))
        if table.get(key):
            continue
        table[key] = embeds_brute(g, h)
    return table


def record_acceptance(line: str) -> None:
    print(line)
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance():
    return record_acceptance
