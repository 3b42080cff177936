"""Exhaustive enumeration of graphic sequences and brute-force thresholds.

``sigma_bruteforce`` computes the smallest even l such that every n-term
graphic sequence with sum >= l is potentially H-graphic. Every graphic sum
is even, so that l is (largest sum of a failing sequence) + 2; sequences are
scanned by decreasing sum and the scan stops at the first sum level that
contains a failure.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Union

from .realize import SearchBudget, potentially
from .seqcore import DegreeSequence, eg_terms
from .targets import TargetSpec, parse_target

__all__ = [
    "EnumerationConfig",
    "SigmaResult",
    "enumerate_graphic_sequences",
    "graphic_sequences",
    "sigma_bruteforce",
    "fixture_sequences",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnumerationConfig:
    n: int
    allow_zero: bool = True
    max_degree: Optional[int] = None
    prefix: tuple[int, ...] = ()


def _prefix_ok(prefix: Sequence[int], n: int) -> bool:
    """Erdos-Gallai with every unknown term replaced by its largest possible value.

    Unknown terms are at most prefix[-1], so this upper-bounds each right
    side; a violation rules out every completion of the prefix.
    """
    L = len(prefix)
    last = prefix[-1]
    lhs = 0
    for t in range(1, L + 1):
        lhs += prefix[t - 1]
        rhs = t * (t - 1) + (n - L) * min(t, last)
        for j in range(t, L):
            rhs += min(t, prefix[j])
        if lhs > rhs:
            return False
    return True


def enumerate_graphic_sequences(cfg: EnumerationConfig) -> Iterator[DegreeSequence]:
    """Graphic sequences matching ``cfg``, each once, in descending lexicographic order."""
    n = cfg.n
    if n < 1:
        raise ValueError("n must be >= 1")
    top = n - 1 if cfg.max_degree is None else min(cfg.max_degree, n - 1)
    lo = 0 if cfg.allow_zero else 1
    prefix = list(cfg.prefix)
    if any(a < b for a, b in zip(prefix, prefix[1:])):
        raise ValueError("prefix must be non-increasing")
    if prefix and (prefix[0] > top or prefix[-1] < lo or len(prefix) > n):
        return
    cur = list(prefix)

    def rec():
        if len(cur) == n:
            ts = tuple(cur)
            if sum(ts) % 2 == 0 and eg_terms(ts):
                yield DegreeSequence(ts)
            return
        hi = cur[-1] if cur else top
        for v in range(hi, lo - 1, -1):
            cur.append(v)
            if _prefix_ok(cur, n):
                yield from rec()
            cur.pop()

    if cur and not _prefix_ok(cur, n):
        return
    yield from rec()


@lru_cache(maxsize=32)
def graphic_sequences(n: int, allow_zero: bool = True) -> tuple[DegreeSequence, ...]:
    return tuple(enumerate_graphic_sequences(EnumerationConfig(n, allow_zero)))


@dataclass(frozen=True)
class SigmaResult:
    value: int
    witness: Optional[DegreeSequence]
    vacuous: bool = False
    checked: int = 0


def sigma_bruteforce(
    h: Union[TargetSpec, str],
    n: int,
    allow_zero: bool = True,
    budget: Optional[SearchBudget] = None,
) -> SigmaResult:
    """Brute-force threshold of ``h`` over n-term graphic sequences.

    The witness is the lexicographically largest failing sequence of
    maximal sum. With no failing sequence the result is 0 and ``vacuous``.

    Raises:
        SearchTimeout: the shared budget ran out.
    """
    if isinstance(h, str):
        h = parse_target(h)
    if h.order > n:
        raise ValueError(f"target has {h.order} vertices but n={n}")
    if budget is None:
        budget = SearchBudget.from_env()
    seqs = sorted(graphic_sequences(n, allow_zero), key=lambda s: -s.sum)
    checked = 0
    for pi in seqs:
        checked += 1
        if not potentially(pi, h, budget=budget):
            # sort is stable, so this is the lexicographically largest at its sum
            log.debug("sigma(%s, %d): first failure %s", h, n, pi)
            return SigmaResult(pi.sum + 2, pi, False, checked)
    return SigmaResult(0, None, True, checked)


def _pw(*parts: tuple[int, int]) -> Optional[DegreeSequence]:
    if any(c < 0 for _, c in parts):
        return None
    terms = [v for v, c in parts for _ in range(c)]
    if not terms or min(terms) < 0:
        return None
    return DegreeSequence(terms)


# name -> (required parity of n-r, builder(r, n))
_L35_FAMILIES = {
    "L3.5/odd/a": (1, lambda r, n: _pw((n - 1, r - 5), (n - 2, 1), (r - 1, n - r + 4))),
    "L3.5/odd/b": (1, lambda r, n: _pw((n - 1, r - 4), (r - 1, n - r + 3), (r - 2, 1))),
    "L3.5/even/a": (0, lambda r, n: _pw((n - 1, r - 4), (r - 1, n - r + 4))),
    "L3.5/even/b": (0, lambda r, n: _pw((n - 1, r - 6), (n - 2, 2), (r - 1, n - r + 4))),
    "L3.5/even/c": (0, lambda r, n: _pw((n - 1, r - 5), (n - 3, 1), (r - 1, n - r + 4))),
    "L3.5/even/d": (0, lambda r, n: _pw((n - 1, r - 5), (n - 2, 1), (r - 1, n - r + 3), (r - 2, 1))),
    "L3.5/even/e": (0, lambda r, n: _pw((n - 1, r - 4), (r - 1, n - r + 3), (r - 3, 1))),
    "L3.5/even/f": (0, lambda r, n: _pw((n - 1, r - 4), (r - 1, n - r + 2), (r - 2, 2))),
}


def fixture_sequences(r: int, n: int) -> list[tuple[str, DegreeSequence, str]]:
    """Boundary sequences singled out in the Z4 and P2uK2 sufficiency arguments.

    Returns ``(family id, sequence, target token)`` for every family whose
    parity condition on n-r holds and whose exponents are nonnegative at
    (r, n).
    """
    out = []
    if (n - r) % 2 == 0:
        seq = _pw((n - 1, r - 3), (r - 1, 1), (r - 2, n - r + 2))
        if seq is not None:
            out.append(("L3.3/case2", seq, f"K{r + 1}-Z4"))
    for name, (parity, build) in _L35_FAMILIES.items():
        if (n - r) % 2 != parity:
            continue
        seq = build(r, n)
        if seq is not None and len(seq) == n:
            out.append((name, seq, f"K{r + 1}-(P2uK2)"))
    return out
