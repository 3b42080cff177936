"""Pattern graphs to look for inside realizations, and their text DSL.

Grammar (whitespace ignored)::

    target   := "A" INT                      top INT positions form a clique
              | "@" PATH                     explicit pattern from a graph file
              | union [ "-" operand ]        K_m - H when the left side is K_m
    operand  := "(" target ")" | union
    union    := atom ( "u" atom )*
    atom     := [INT] base                   leading INT = that many disjoint copies
    base     := "K" INT [ "_" INT ]          K_k, or the star K_{1,t} as K1_t
              | "C" INT | "P" INT | "Z4" | "e"

``P k`` is the path with k edges, ``e`` is a single edge. Examples:
``K5-Z4``, ``K6-K4``, ``K5-(K4-e)``, ``C4``, ``2K2``, ``K5-K1_2``,
``K6-(P2uK2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import graphcore as gc
from .graphcore import SimpleGraph

__all__ = ["TargetSpec", "TargetSyntaxError", "parse_target", "complete_minus_target"]


class TargetSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class TargetSpec:
    """A pattern graph plus how it was described.

    ``kind`` is ``"explicit"``, ``"complete_minus"`` or ``"named"``. For
    ``complete_minus`` the removed graph is kept in ``removed`` (placed on
    vertices 0..removed.order-1 of K_m). ``anchored`` requires the pattern's
    vertex i to sit on degree position i exactly (used for A_{r+1}).
    """

    token: str
    graph: SimpleGraph
    kind: str = "named"
    m: Optional[int] = None
    removed: Optional[SimpleGraph] = None
    anchored: bool = False

    def __str__(self) -> str:
        return self.token

    @property
    def order(self) -> int:
        return self.graph.order


def complete_minus_target(m: int, removed: SimpleGraph, token: Optional[str] = None) -> TargetSpec:
    if removed.order > m:
        raise ValueError(f"removed graph on {removed.order} vertices exceeds K_{m}")
    return TargetSpec(
        token=token or f"K{m}-@",
        graph=gc.complete_minus(m, removed),
        kind="complete_minus",
        m=m,
        removed=removed,
    )


class _Parser:
    def __init__(self, text: str):
        self.src = text
        self.s = re.sub(r"\s+", "", text)
        self.i = 0

    def fail(self, what: str):
        tail = self.s[self.i:] or "<end>"
        raise TargetSyntaxError(f"bad target {self.src!r}: {what} at {tail!r}")

    def peek(self) -> str:
        return self.s[self.i] if self.i < len(self.s) else ""

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.i += 1
            return True
        return False

    def integer(self, required: bool = True) -> Optional[int]:
        m = re.match(r"\d+", self.s[self.i:])
        if not m:
            if required:
                self.fail("expected an integer")
            return None
        self.i += m.end()
        return int(m.group())

    def base(self) -> tuple[SimpleGraph, Optional[int]]:
        """Returns (graph, m) where m is set when the base is a bare K_m."""
        c = self.peek()
        if c == "K":
            self.i += 1
            k = self.integer()
            if self.eat("_"):
                t = self.integer()
                if k != 1:
                    self.fail("star must be written K1_t")
                return gc.star(t), None
            return gc.complete(k), k
        if c == "C":
            self.i += 1
            return gc.cycle(self.integer()), None
        if c == "P":
            self.i += 1
            return gc.path_paper(self.integer()), None
        if c == "Z":
            self.i += 1
            if self.integer() != 4:
                self.fail("only Z4 is a named Z graph")
            return gc.z4(), None
        if c == "e":
            self.i += 1
            return gc.complete(2), None
        self.fail("unknown graph token")

    def atom(self) -> tuple[SimpleGraph, Optional[int]]:
        count = self.integer(required=False)
        g, m = self.base()
        if count is not None:
            if count < 1:
                self.fail("copy count must be >= 1")
            if count > 1:
                return gc.disjoint_copies(g, count), None
        return g, m

    def union(self) -> tuple[SimpleGraph, Optional[int]]:
        g, m = self.atom()
        while self.eat("u"):
            g2, _ = self.atom()
            g, m = gc.union(g, g2), None
        return g, m

    def operand(self) -> SimpleGraph:
        if self.eat("("):
            t = self.target()
            if not self.eat(")"):
                self.fail("expected ')'")
            return t.graph
        g, _ = self.union()
        return g

    def target(self) -> TargetSpec:
        start = self.i
        g, m = self.union()
        if self.eat("-"):
            if m is None:
                self.fail("only K_m may have edges removed")
            removed = self.operand()
            if removed.order > m:
                self.fail(f"removed graph has more than {m} vertices")
            return complete_minus_target(m, removed, token=self.s[start:self.i])
        return TargetSpec(token=self.s[start:self.i], graph=g)


def parse_target(text: str) -> TargetSpec:
    """Parse the target DSL; unknown tokens fail fast with TargetSyntaxError."""
    s = text.strip()
    if s.startswith("@"):
        path = Path(s[1:])
        try:
            g = gc.parse_graph(path.read_text())
        except OSError as exc:
            raise TargetSyntaxError(f"cannot read pattern file {str(path)!r}: {exc.strerror}") from None
        return TargetSpec(token=s, graph=g, kind="explicit")
    m = re.fullmatch(r"A(\d+)", s)
    if m:
        k = int(m.group(1))
        if k < 1:
            raise TargetSyntaxError(f"bad target {text!r}: A needs k >= 1")
        return TargetSpec(token=s, graph=gc.complete(k), kind="named", anchored=True)
    p = _Parser(s)
    try:
        t = p.target()
    except TargetSyntaxError:
        raise
    except ValueError as exc:
        raise TargetSyntaxError(f"bad target {text!r}: {exc}") from None
    if p.i != len(p.s):
        p.fail("unexpected trailing input")
    return t
