"""Simple graphs, the join/union algebra, and non-induced subgraph search.

Vertices are dense integers ``0..order-1``. Constructions relabel
canonically: ``union`` and ``join`` append the second operand's vertices
after the first's.

Path naming follows the convention used throughout this package:
``path_paper(k)`` is a path with k *edges* and k+1 vertices, so
``path_paper(2)`` is the 3-vertex path and Z4 = K4 - path_paper(2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .seqcore import DegreeSequence

__all__ = [
    "SimpleGraph",
    "empty",
    "complete",
    "cycle",
    "path_paper",
    "star",
    "z4",
    "union",
    "disjoint_copies",
    "join",
    "complete_minus",
    "induced",
    "edge_count",
    "degree_sequence",
    "find_embedding",
    "contains_subgraph",
    "is_isomorphic",
    "is_valid_Z",
    "parse_graph",
    "format_graph",
]


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    order: int
    edges: frozenset

    def __init__(self, order: int, edges: Iterable[tuple[int, int]] = ()):
        if order < 0:
            raise ValueError("order must be >= 0")
        es = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge {u}-{v} outside 0..{order - 1}")
            es.add(_norm(u, v))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "edges", frozenset(es))

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        nbrs: list[set] = [set() for _ in range(self.order)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << w for w in nb) for nb in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nb) for nb in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"SimpleGraph({self.order}, {self.sorted_edges()})"


def empty(n: int) -> SimpleGraph:
    return SimpleGraph(n)


def complete(k: int) -> SimpleGraph:
    if k < 1:
        raise ValueError("complete(k) needs k >= 1")
    return SimpleGraph(k, combinations(range(k), 2))


def cycle(k: int) -> SimpleGraph:
    if k < 3:
        raise ValueError("cycle(k) needs k >= 3")
    return SimpleGraph(k, ((i, (i + 1) % k) for i in range(k)))


def path_paper(k: int) -> SimpleGraph:
    """Path with k edges on k+1 vertices (not the "k vertices" convention)."""
    if k < 1:
        raise ValueError("path_paper(k) needs k >= 1")
    return SimpleGraph(k + 1, ((i, i + 1) for i in range(k)))


def star(t: int) -> SimpleGraph:
    """K_{1,t}: centre 0 joined to leaves 1..t."""
    if t < 1:
        raise ValueError("star(t) needs t >= 1")
    return SimpleGraph(t + 1, ((0, i) for i in range(1, t + 1)))


def union(g: SimpleGraph, g1: SimpleGraph) -> SimpleGraph:
    off = g.order
    return SimpleGraph(g.order + g1.order, list(g.edges) + [(u + off, v + off) for u, v in g1.edges])


def disjoint_copies(g: SimpleGraph, count: int) -> SimpleGraph:
    """The count-fold disjoint union, e.g. ``disjoint_copies(complete(2), 4)`` is 4K2."""
    out = SimpleGraph(0)
    for _ in range(count):
        out = union(out, g)
    return out


def join(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    u = union(g, h)
    cross = [(a, g.order + b) for a in range(g.order) for b in range(h.order)]
    return SimpleGraph(u.order, list(u.edges) + cross)


def complete_minus(m: int, h: SimpleGraph) -> SimpleGraph:
    """K_m with the edges of ``h`` removed; ``h`` is placed on vertices 0..h.order-1."""
    if h.order > m:
        raise ValueError(f"pattern on {h.order} vertices does not fit in K_{m}")
    return SimpleGraph(m, (e for e in combinations(range(m), 2) if e not in h.edges))


def z4() -> SimpleGraph:
    """K4 minus a 2-edge path: a triangle with a pendant edge (the paw)."""
    return complete_minus(4, path_paper(2))


def induced(g: SimpleGraph, vs: Sequence[int]) -> SimpleGraph:
    vs = list(vs)
    if len(set(vs)) != len(vs):
        raise ValueError("duplicate vertices in induced()")
    for v in vs:
        if not 0 <= v < g.order:
            raise ValueError(f"vertex {v} outside 0..{g.order - 1}")
    index = {v: i for i, v in enumerate(vs)}
    return SimpleGraph(len(vs), ((index[u], index[v]) for u, v in g.edges if u in index and v in index))


def edge_count(g: SimpleGraph) -> int:
    return len(g.edges)


def degree_sequence(g: SimpleGraph) -> DegreeSequence:
    if g.order == 0:
        raise ValueError("the empty graph has no degree sequence")
    return DegreeSequence(g.degrees)


def _search_order(h: SimpleGraph) -> list[int]:
    """Highest degree first, then greedily prefer vertices touching the mapped set."""
    remaining = set(range(h.order))
    order: list[int] = []
    while remaining:
        placed = set(order)
        best = max(
            remaining,
            key=lambda v: (len(h.adj[v] & placed), h.degree(v), -v),
        )
        order.append(best)
        remaining.discard(best)
    return order


def find_embedding(
    g: SimpleGraph,
    h: SimpleGraph,
    fixed: Optional[dict[int, int]] = None,
) -> Optional[dict[int, int]]:
    """Injective map V(h) -> V(g) sending every h-edge to a g-edge, or None.

    Backtracks over h's vertices in descending-degree order, only trying
    g-vertices whose degree is at least the h-vertex degree and which are
    adjacent to the images of every already-mapped h-neighbour.
    """
    if h.order > g.order or len(h.edges) > len(g.edges):
        return None
    fixed = dict(fixed or {})
    order = [v for v in _search_order(h) if v not in fixed]
    gmask = g.masks
    gdeg = g.degrees
    hdeg = h.degrees
    full = (1 << g.order) - 1
    for hv, gv in fixed.items():
        for hw in h.adj[hv]:
            if hw in fixed and not (gmask[gv] >> fixed[hw]) & 1:
                return None
    if len(set(fixed.values())) != len(fixed):
        return None
    mapping = dict(fixed)
    used = 0
    for gv in fixed.values():
        used |= 1 << gv

    def rec(i: int, used: int) -> bool:
        if i == len(order):
            return True
        hv = order[i]
        cand = full & ~used
        for hw in h.adj[hv]:
            if hw in mapping:
                cand &= gmask[mapping[hw]]
        while cand:
            low = cand & -cand
            gv = low.bit_length() - 1
            cand ^= low
            if gdeg[gv] < hdeg[hv]:
                continue
            mapping[hv] = gv
            if rec(i + 1, used | low):
                return True
            del mapping[hv]
        return False

    return dict(mapping) if rec(0, used) else None


def contains_subgraph(g: SimpleGraph, h: SimpleGraph) -> bool:
    """Non-induced containment: some injective map carries E(h) into E(g)."""
    return find_embedding(g, h) is not None


def is_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    # same order and edge count turn subgraph containment into isomorphism
    if g.order != h.order or len(g.edges) != len(h.edges):
        return False
    if sorted(g.degrees) != sorted(h.degrees):
        return False
    return contains_subgraph(g, h)


def is_valid_Z(h: SimpleGraph, k: int, j: int) -> bool:
    """k >= 5 vertices, j >= 5 edges, contains Z4, contains no C4."""
    if h.order != k or len(h.edges) != j or k < 5 or j < 5:
        return False
    return contains_subgraph(h, z4()) and not contains_subgraph(h, cycle(4))


def format_graph(g: SimpleGraph, header: Optional[str] = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {line}" for line in header.splitlines())
    lines.append(f"{g.order} {len(g.edges)}")
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> SimpleGraph:
    """Read the ``n m`` header plus ``u v`` edge-line format; '#' starts a comment line.

    Lines starting with ``map`` are ignored so witness files parse as graphs.
    """
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith("map"):
            continue
        rows.append(line.split())
    if not rows:
        raise ValueError("graph text has no header line")
    try:
        n, m = (int(x) for x in rows[0])
    except ValueError:
        raise ValueError(f"bad graph header {' '.join(rows[0])!r}") from None
    edges = []
    for row in rows[1:]:
        if len(row) != 2 or not all(x.isdigit() for x in row):
            raise ValueError(f"bad edge line {' '.join(row)!r}")
        edges.append((int(row[0]), int(row[1])))
    if len(edges) != m:
        raise ValueError(f"header says {m} edges, found {len(edges)}")
    g = SimpleGraph(n, edges)
    if len(g.edges) != m:
        raise ValueError("duplicate edges in graph text")
    return g
