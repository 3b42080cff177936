"""Degree sequences, graphicality tests and the laying-off reduction."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "DegreeSequence",
    "NotGraphic",
    "parse_sequence",
    "sigma",
    "is_graphic_eg",
    "eg_terms",
    "lay_off",
    "lay_off_terms",
    "is_graphic_recursive",
    "from_powers",
]


class NotGraphic(ValueError):
    """Raised when an operation needs a graphic sequence and gets another."""


@dataclass(frozen=True, order=False)
class DegreeSequence:
    """A non-increasing sequence of nonnegative integers.

    Input in any order is accepted and sorted once at construction. The sum
    is cached since every threshold comparison uses it.
    """

    terms: tuple[int, ...]
    sum: int = field(init=False, compare=False, repr=False)

    def __init__(self, terms: Iterable[int]):
        ts = tuple(sorted((int(t) for t in terms), reverse=True))
        if not ts:
            raise ValueError("a degree sequence needs at least one term")
        if ts[-1] < 0:
            raise ValueError(f"negative degree {ts[-1]}")
        object.__setattr__(self, "terms", ts)
        object.__setattr__(self, "sum", sum(ts))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def d(self, i: int) -> int:
        """1-based access, matching the d_1 >= d_2 >= ... convention."""
        if not 1 <= i <= len(self.terms):
            raise IndexError(f"d_{i} out of range for n={len(self.terms)}")
        return self.terms[i - 1]

    @property
    def n(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return " ".join(map(str, self.terms))


SequenceLike = Union[DegreeSequence, Sequence[int]]

_TOKEN = re.compile(r"[\s,]+")


def parse_sequence(text: str) -> DegreeSequence:
    """Parse whitespace- or comma-separated integers, e.g. ``"4 4 3 3 2 2"``.

    Raises ValueError naming the first token that is not a nonnegative int.
    """
    tokens = [t for t in _TOKEN.split(text.strip().strip("()[]")) if t]
    if not tokens:
        raise ValueError("empty sequence")
    values = []
    for tok in tokens:
        if not re.fullmatch(r"\d+", tok):
            raise ValueError(f"bad sequence token {tok!r}")
        values.append(int(tok))
    return DegreeSequence(values)


def from_powers(*parts: tuple[int, int]) -> DegreeSequence:
    """Build a sequence from ``(value, multiplicity)`` pairs, as in (x^y)."""
    terms: list[int] = []
    for value, count in parts:
        if count < 0:
            raise ValueError(f"negative multiplicity for {value}")
        terms.extend([value] * count)
    return DegreeSequence(terms)


def _terms(pi: SequenceLike) -> tuple[int, ...]:
    if isinstance(pi, DegreeSequence):
        return pi.terms
    return tuple(sorted(pi, reverse=True))


def sigma(pi: SequenceLike) -> int:
    if isinstance(pi, DegreeSequence):
        return pi.sum
    return sum(pi)


def eg_terms(ts: Sequence[int]) -> bool:
    """Erdos-Gallai on a non-increasing tuple that may hold any integers."""
    n = len(ts)
    if n == 0:
        return True
    if ts[-1] < 0 or ts[0] > n - 1 or sum(ts) % 2:
        return False
    lhs = 0
    for t in range(1, n):
        lhs += ts[t - 1]
        rhs = t * (t - 1)
        for j in range(t, n):
            dj = ts[j]
            if dj >= t:
                rhs += t
            else:
                # non-increasing: the rest are all below t as well
                rhs += sum(ts[j:])
                break
        if lhs > rhs:
            return False
    return True


def is_graphic_eg(pi: SequenceLike) -> bool:
    """Erdos-Gallai test: even sum and the t(t-1) + sum min{t, d_j} bound."""
    return eg_terms(_terms(pi))


def lay_off_terms(ts: Sequence[int], k: int) -> tuple[int, ...]:
    """Residual of laying off position ``k`` (1-based); may contain negatives.

    Raises ValueError when d_k exceeds n-1, where the reduction is undefined.
    """
    n = len(ts)
    if not 1 <= k <= n:
        raise IndexError(f"k={k} out of range 1..{n}")
    dk = ts[k - 1]
    if dk > n - 1:
        raise ValueError(f"d_{k}={dk} exceeds n-1={n - 1}")
    out = list(ts)
    if dk >= k:
        hit = [i for i in range(dk + 1) if i != k - 1]
    else:
        hit = range(dk)
    for i in hit:
        out[i] -= 1
    del out[k - 1]
    # sorted() is stable, so ties keep their prior relative order
    return tuple(sorted(out, reverse=True))


def lay_off(pi: SequenceLike, k: int) -> DegreeSequence:
    """The residual sequence obtained by laying off d_k from ``pi``.

    Raises:
        ValueError: n < 2, d_k > n-1, or the residual has a negative term.
        IndexError: k outside 1..n.
    """
    ts = _terms(pi)
    if len(ts) < 2:
        raise ValueError("laying off needs n >= 2")
    res = lay_off_terms(ts, k)
    if res and res[-1] < 0:
        raise ValueError(f"laying off d_{k} leaves a negative term: {res}")
    return DegreeSequence(res)


def is_graphic_recursive(pi: SequenceLike, pivot_rule: Union[str, int] = "first") -> bool:
    """Decide graphicality by repeated laying off.

    ``pivot_rule`` is ``"first"``, ``"last"`` or a fixed 1-based index k,
    clamped to the current length as the sequence shrinks.
    """
    ts = _terms(pi)
    if sum(ts) % 2:
        return False
    while True:
        n = len(ts)
        if not ts or ts[0] == 0:
            return not ts or ts[-1] >= 0
        if ts[-1] < 0 or ts[0] > n - 1:
            return False
        if pivot_rule == "first":
            k = 1
        elif pivot_rule == "last":
            k = n
        elif isinstance(pivot_rule, int) and pivot_rule >= 1:
            k = min(pivot_rule, n)
        else:
            raise ValueError(f"unknown pivot rule {pivot_rule!r}")
        ts = lay_off_terms(ts, k)
