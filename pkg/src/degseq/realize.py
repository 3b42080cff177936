"""Realizations of graphic sequences and the "potentially H-graphic" decision.

The decision procedure places the pattern on the highest-degree positions
(any realization containing H can be rearranged so that H sits on the
largest degrees), so only assignments of pattern vertices to the top
``m = |V(H)|`` positions are tried. Assignments that differ only by
swapping equal-degree positions, or by an automorphism of the pattern, are
explored once.

Given an assignment, the residual demands are completed as follows. Pattern
positions are processed in order; each one branches over which free
partners inside the pattern block it takes (pairs that are not pattern
edges). Its remaining demand goes to the outer vertices with the largest
current residual. The usual Havel-Hakimi exchange makes that greedy choice
safe: the outer vertices carry no forbidden pairs, so a neighbour of lower
residual can always be swapped for a non-neighbour of higher residual. Once
the pattern block is settled the outer residual is a plain graphicality
question, answered by Erdos-Gallai.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Optional, Union

from .graphcore import SimpleGraph, find_embedding, is_isomorphic
from .seqcore import DegreeSequence, NotGraphic, eg_terms, is_graphic_eg
from .targets import TargetSpec, parse_target

__all__ = [
    "SearchBudget",
    "SearchTimeout",
    "RealizationWitness",
    "realize",
    "potentially",
    "potentially_witness",
    "potentially_exhaustive",
    "is_potentially_A",
    "labeled_realizations",
    "enumerate_realizations",
    "format_witness",
]

NODE_CAP_ENV = "DEGSEQ_NODE_CAP"
TIME_CAP_ENV = "DEGSEQ_TIME_CAP"


class SearchTimeout(RuntimeError):
    """The search budget ran out before the question was decided."""


@dataclass
class SearchBudget:
    """Node and wall-clock caps shared by one decision (or one oracle cell).

    ``None`` means unlimited. Defaults come from the DEGSEQ_NODE_CAP and
    DEGSEQ_TIME_CAP (seconds) environment variables when set.
    """

    node_cap: Optional[int] = None
    time_cap: Optional[float] = None
    nodes: int = 0
    started: float = field(default_factory=time.monotonic)

    @classmethod
    def from_env(cls) -> "SearchBudget":
        node = os.environ.get(NODE_CAP_ENV)
        secs = os.environ.get(TIME_CAP_ENV)
        return cls(
            node_cap=int(node) if node else None,
            time_cap=float(secs) if secs else None,
        )

    def tick(self, count: int = 1) -> None:
        self.nodes += count
        if self.node_cap is not None and self.nodes > self.node_cap:
            raise SearchTimeout(f"node cap {self.node_cap} exhausted")
        if self.time_cap is not None and self.nodes % 256 == 0:
            if time.monotonic() - self.started > self.time_cap:
                raise SearchTimeout(f"time cap {self.time_cap}s exhausted")


@dataclass(frozen=True)
class RealizationWitness:
    graph: SimpleGraph
    embedding: Optional[dict] = None


Pattern = Union[TargetSpec, SimpleGraph, str]


def _as_pattern(h: Pattern) -> tuple[SimpleGraph, bool]:
    if isinstance(h, str):
        h = parse_target(h)
    if isinstance(h, TargetSpec):
        return h.graph, h.anchored
    return h, False


def _as_sequence(pi) -> DegreeSequence:
    return pi if isinstance(pi, DegreeSequence) else DegreeSequence(pi)


def _havel_hakimi_edges(ids: list[int], demand: list[int]) -> list[tuple[int, int]]:
    """Edges realizing ``demand`` on vertex ``ids``; caller guarantees graphicity."""
    res = dict(zip(ids, demand))
    edges = []
    while True:
        live = sorted((v for v in res if res[v] > 0), key=lambda v: (-res[v], ids.index(v)))
        if not live:
            return edges
        v = live[0]
        k = res[v]
        targets = live[1:k + 1]
        if len(targets) < k:
            raise NotGraphic(f"demand {demand} is not graphic")
        res[v] = 0
        for w in targets:
            res[w] -= 1
            edges.append((v, w))


def realize(pi) -> RealizationWitness:
    """Some realization of ``pi``, built by repeatedly laying off the largest term.

    Vertex i of the returned graph has degree ``pi[i]``.
    """
    pi = _as_sequence(pi)
    if not is_graphic_eg(pi):
        raise NotGraphic(f"({pi}) is not graphic")
    n = len(pi)
    return RealizationWitness(SimpleGraph(n, _havel_hakimi_edges(list(range(n)), list(pi.terms))))


@lru_cache(maxsize=256)
def _automorphisms(h: SimpleGraph) -> tuple[tuple[int, ...], ...]:
    n = h.order
    deg = h.degrees
    edges = h.edges
    out = []
    for perm in permutations(range(n)):
        if any(deg[perm[v]] != deg[v] for v in range(n)):
            continue
        if all(((perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])) in edges for u, v in edges):
            out.append(perm)
    return tuple(out)


def _multiset_perms(values: list[int]) -> Iterator[tuple[int, ...]]:
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    keys = sorted(counts, reverse=True)
    n = len(values)
    cur: list[int] = []

    def rec():
        if len(cur) == n:
            yield tuple(cur)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                cur.append(k)
                yield from rec()
                cur.pop()
                counts[k] += 1

    return rec()


def _placements(top: tuple[int, ...], h: SimpleGraph) -> Iterator[tuple[int, ...]]:
    """Distinct pattern-vertex -> position maps onto the top positions.

    Two maps are the same up to symmetry when they give every pattern
    vertex the same position degree, possibly after a pattern automorphism.
    """
    m = h.order
    hdeg = h.degrees
    # pattern vertices sorted by degree so the multiset walk tries the
    # natural "largest degree to largest position" assignment first
    hv = sorted(range(m), key=lambda v: (-hdeg[v], v))
    autos = _automorphisms(h) if m <= 8 else ((tuple(range(m))),)
    seen = set()
    for vals in _multiset_perms(list(top)):
        label = [0] * m
        ok = True
        for v, val in zip(hv, vals):
            if val < hdeg[v]:
                ok = False
                break
            label[v] = val
        if not ok:
            continue
        key = min(tuple(label[a[v]] for v in range(m)) for a in autos)
        if key in seen:
            continue
        seen.add(key)
        # concrete positions: equal values fill their position block in order
        nxt: dict[int, int] = {}
        for i, d in enumerate(top):
            nxt.setdefault(d, i)
        pos = [0] * m
        for v in hv:
            pos[v] = nxt[label[v]]
            nxt[label[v]] += 1
        yield tuple(pos)


def _complete(
    terms: tuple[int, ...],
    h: SimpleGraph,
    pos: tuple[int, ...],
    budget: SearchBudget,
    want_edges: bool,
) -> Optional[list[tuple[int, int]]]:
    """Try to extend the pattern (placed at ``pos``) to a realization.

    Returns the list of graph edges (positions as vertex ids) or None.
    """
    n = len(terms)
    m = h.order
    res = list(terms)
    hdeg = h.degrees
    for v in range(m):
        res[pos[v]] -= hdeg[v]
        if res[pos[v]] < 0:
            return None
    pattern_edges = {tuple(sorted((pos[a], pos[b]))) for a, b in h.edges}
    # free pairs inside the pattern block, keyed by the lower position
    later: list[list[int]] = [[] for _ in range(m)]
    for i, j in combinations(range(m), 2):
        if (i, j) not in pattern_edges:
            later[i].append(j)
    outer = list(range(m, n))
    failed: set = set()

    def rec(i: int) -> Optional[list[tuple[int, int]]]:
        budget.tick()
        if i == m:
            rest = tuple(sorted((res[w] for w in outer), reverse=True))
            if not eg_terms(rest):
                return None
            if not want_edges:
                return []
            return _havel_hakimi_edges(outer, [res[w] for w in outer])
        key = (i, tuple(res[i:m]), tuple(sorted((res[w] for w in outer), reverse=True)))
        if key in failed:
            return None
        need = res[i]
        partners = [j for j in later[i] if res[j] > 0]
        live_outer = sorted((w for w in outer if res[w] > 0), key=lambda w: (-res[w], w))
        lo = max(0, need - len(live_outer))
        for size in range(min(need, len(partners)), lo - 1, -1):
            rest_need = need - size
            chosen_outer = live_outer[:rest_need]
            for subset in combinations(partners, size):
                for j in subset:
                    res[j] -= 1
                for w in chosen_outer:
                    res[w] -= 1
                res[i] = 0
                got = rec(i + 1)
                res[i] = need
                for w in chosen_outer:
                    res[w] += 1
                for j in subset:
                    res[j] += 1
                if got is not None:
                    if want_edges:
                        got = [(i, j) for j in subset] + [(i, w) for w in chosen_outer] + got
                    return got
        failed.add(key)
        return None

    found = rec(0)
    if found is None:
        return None
    return found + sorted(pattern_edges)


def _decide(pi, h: Pattern, want_witness: bool, budget: Optional[SearchBudget], placement):
    pi = _as_sequence(pi)
    g_h, anchored = _as_pattern(h)
    if not is_graphic_eg(pi):
        raise NotGraphic(f"({pi}) is not graphic")
    if budget is None:
        budget = SearchBudget.from_env()
    n, m = len(pi), g_h.order
    if m > n:
        return False, None
    if placement is not None:
        cands = [tuple(placement[v] for v in range(m))]
    elif anchored:
        cands = [tuple(range(m))]
    else:
        cands = _placements(pi.terms[:m], g_h)
    for pos in cands:
        edges = _complete(pi.terms, g_h, pos, budget, want_witness)
        if edges is not None:
            if not want_witness:
                return True, None
            g = SimpleGraph(n, edges)
            return True, RealizationWitness(g, {v: pos[v] for v in range(m)})
    return False, None


def potentially(pi, h: Pattern, budget: Optional[SearchBudget] = None, placement=None) -> bool:
    """True iff some realization of ``pi`` contains ``h`` as a subgraph.

    ``placement`` optionally pins pattern vertex v to position ``placement[v]``
    (0-based), restricting the search to that single assignment.

    Raises:
        NotGraphic: ``pi`` is not graphic.
        SearchTimeout: the budget ran out.
    """
    return _decide(pi, h, False, budget, placement)[0]


def potentially_witness(pi, h: Pattern, budget: Optional[SearchBudget] = None, placement=None):
    """Like ``potentially`` but returns the witness (or None when false)."""
    return _decide(pi, h, True, budget, placement)[1]


def is_potentially_A(pi, r: int, budget: Optional[SearchBudget] = None) -> bool:
    """Some realization makes the r+1 highest-degree positions a clique."""
    pi = _as_sequence(pi)
    if r + 1 > len(pi):
        raise ValueError(f"r+1={r + 1} exceeds n={len(pi)}")
    return potentially(pi, parse_target(f"A{r + 1}"), budget=budget)


def labeled_realizations(pi) -> Iterator[SimpleGraph]:
    """Every graph on 0..n-1 in which vertex i has degree ``pi[i]``.

    Plain backtracking over neighbour sets with an Erdos-Gallai cut on the
    unprocessed suffix; no symmetry reduction, so it serves as an oracle.
    """
    pi = _as_sequence(pi)
    if not is_graphic_eg(pi):
        raise NotGraphic(f"({pi}) is not graphic")
    n = len(pi)
    res = list(pi.terms)
    edges: list[tuple[int, int]] = []

    def rec(v: int):
        if v == n:
            yield SimpleGraph(n, edges)
            return
        cands = [w for w in range(v + 1, n) if res[w] > 0]
        need = res[v]
        if need > len(cands):
            return
        for chosen in combinations(cands, need):
            for w in chosen:
                res[w] -= 1
                edges.append((v, w))
            if eg_terms(tuple(sorted(res[v + 1:], reverse=True))):
                saved, res[v] = res[v], 0
                yield from rec(v + 1)
                res[v] = saved
            for w in chosen:
                res[w] += 1
                edges.pop()

    yield from rec(0)


def potentially_exhaustive(pi, h: Pattern) -> bool:
    """Reference decision: scan every labeled realization for ``h`` anywhere."""
    g_h, anchored = _as_pattern(h)
    fixed = {v: v for v in range(g_h.order)} if anchored else None
    for g in labeled_realizations(pi):
        if g_h.order <= g.order and find_embedding(g, g_h, fixed=fixed) is not None:
            return True
    return False


def _invariant(g: SimpleGraph) -> tuple:
    deg = g.degrees
    return tuple(sorted((deg[v], tuple(sorted(deg[w] for w in g.adj[v]))) for v in range(g.order)))


def enumerate_realizations(pi, cap: Optional[int] = None) -> Iterator[SimpleGraph]:
    """Pairwise non-isomorphic realizations of ``pi``, at most ``cap`` of them.

    Exhaustive when fewer than ``cap`` are produced.
    """
    buckets: dict[tuple, list[SimpleGraph]] = {}
    count = 0
    for g in labeled_realizations(pi):
        if cap is not None and count >= cap:
            return
        reps = buckets.setdefault(_invariant(g), [])
        if any(is_isomorphic(g, other) for other in reps):
            continue
        reps.append(g)
        count += 1
        yield g


def format_witness(w: RealizationWitness, header: Optional[str] = None) -> str:
    from .graphcore import format_graph

    text = format_graph(w.graph, header)
    if w.embedding:
        text += "".join(f"map {h}→{g}\n" for h, g in sorted(w.embedding.items()))
    return text
