"""Closed-form degree-sum thresholds, lower bounds and extremal graphs.

All arithmetic is exact integer arithmetic. Formulas evaluate outside the
parameter ranges where they are proven; ``SigmaValue.in_range`` records
whether the call falls inside that range.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import graphcore as gc
from .graphcore import SimpleGraph
from .seqcore import DegreeSequence, from_powers

__all__ = [
    "SigmaValue",
    "theorem_rhs",
    "sigma_lower_bound_kpt",
    "known_sigma",
    "extremal_construction",
    "extremal_sequence",
    "lemma36_lower",
    "lemma37_lower",
    "SIGMA_K4_MINUS_E",
]

# sigma(K4-e, n) is used without a closed form here; these are oracle values
# (allow_zero=True), kept as data and rechecked by the test suite
SIGMA_K4_MINUS_E = {4: 10, 5: 14, 6: 20, 7: 20, 8: 22, 9: 26}


@dataclass(frozen=True)
class SigmaValue:
    value: int
    parity_branch: Optional[str]  # "odd_nr" / "even_nr", None when no r applies
    source: str
    in_range: bool = True

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        parity = {"odd_nr": "odd-branch", "even_nr": "even-branch", None: "-"}[self.parity_branch]
        return f"{self.value} {parity} {self.source} {'in-range' if self.in_range else 'out-of-range'}"


def _parity(n: int, r: int) -> str:
    return "odd_nr" if (n - r) % 2 else "even_nr"


def _check_rn(r: int, n: int) -> None:
    if r < 4:
        raise ValueError(f"r={r} < 4")
    if n <= r:
        raise ValueError(f"n={n} must exceed r={r}")


def _base(r: int, n: int) -> int:
    return (r - 1) * (2 * n - r) - 3 * (n - r)


def theorem_rhs(which: str, r: int, n: int) -> SigmaValue:
    """``T1.1``: base+1 (n-r odd) / base+2 (even); ``T1.2``: base-1 / base-2.

    base = (r-1)(2n-r) - 3(n-r). Proven for n >= 5r+16 (T1.1) and
    n >= 5r+19 (T1.2).
    """
    _check_rn(r, n)
    odd = (n - r) % 2 == 1
    base = _base(r, n)
    if which == "T1.1":
        value, lo = base + (1 if odd else 2), 5 * r + 16
    elif which == "T1.2":
        value, lo = base - (1 if odd else 2), 5 * r + 19
    else:
        raise ValueError(f"unknown theorem {which!r}")
    return SigmaValue(value, _parity(n, r), which, n >= lo)


def sigma_lower_bound_kpt(p: int, t: int, n: int) -> SigmaValue:
    """Lower bound 2*floor(((p+2t-3)n + p+2t+1 - pt - t^2) / 2) for K_{p+t} - K_p."""
    if p < 1 or t < 1:
        raise ValueError("p and t must be >= 1")
    if n < p + t:
        raise ValueError(f"n={n} < p+t={p + t}")
    value = 2 * (((p + 2 * t - 3) * n + p + 2 * t + 1 - p * t - t * t) // 2)
    # K_{p+t} - K_p is K_{r+1} - K_p with r = p+t-1
    return SigmaValue(value, _parity(n, p + t - 1), "T2.8", True)


def lemma36_lower(r: int, n: int) -> SigmaValue:
    """Lower bound for K_{r+1} - K4 (and so for K_{r+1} - Z4): base+1 / base+2."""
    _check_rn(r, n)
    odd = (n - r) % 2 == 1
    return SigmaValue(_base(r, n) + (1 if odd else 2), _parity(n, r), "L3.6", True)


def lemma37_lower(r: int, n: int) -> SigmaValue:
    """Lower bound for K_{r+1} - H, H C4-free on 4..r+1 vertices: base-1 / base-2."""
    _check_rn(r, n)
    odd = (n - r) % 2 == 1
    return SigmaValue(_base(r, n) - (1 if odd else 2), _parity(n, r), "L3.7", True)


def known_sigma(family: str, n: int, p: Optional[int] = None, k: Optional[int] = None) -> SigmaValue:
    """Previously established values: ``pK2`` (needs p), ``C4``, ``Kk`` (needs k).

    The Kk value is the conjectured (k-2)(2n-k+1)+2; ``in_range`` is set
    only for k=3, n>=6, the case quoted without qualification here (and
    that one concerns sequences without zero terms).
    """
    if family == "C4":
        if n < 4:
            raise ValueError("C4 needs n >= 4")
        return SigmaValue(2 * ((3 * n - 1) // 2), None, "known_C4", True)
    if family == "pK2":
        if p is None or p < 2:
            raise ValueError("pK2 needs p >= 2")
        if n < 2 * p:
            raise ValueError(f"pK2 needs n >= 2p = {2 * p}")
        return SigmaValue((p - 1) * (2 * n - 2) + 2, None, "known_pK2", True)
    if family == "Kk":
        if k is None or k < 2:
            raise ValueError("Kk needs k >= 2")
        if n < k:
            raise ValueError(f"Kk needs n >= k = {k}")
        return SigmaValue((k - 2) * (2 * n - k + 1) + 2, None, "known_Kk", k == 3 and n >= 6)
    raise ValueError(f"unknown family {family!r}")


def extremal_sequence(r: int, n: int) -> DegreeSequence:
    """((n-1)^{r-3}, (r-2)^{n-r+3}) for odd n-r, else ((n-1)^{r-3}, (r-2)^{n-r+2}, (r-3)^1)."""
    _check_rn(r, n)
    if (n - r) % 2:
        return from_powers((n - 1, r - 3), (r - 2, n - r + 3))
    return from_powers((n - 1, r - 3), (r - 2, n - r + 2), (r - 3, 1))


def extremal_construction(r: int, n: int) -> SimpleGraph:
    """K_{r-3} joined to a perfect matching on n-r+3 vertices (n-r odd), or
    to a matching on n-r+2 vertices plus one isolated vertex (n-r even)."""
    _check_rn(r, n)
    k2 = gc.complete(2)
    if (n - r) % 2:
        rest = gc.disjoint_copies(k2, (n - r + 1) // 2 + 1)
    else:
        rest = gc.union(gc.disjoint_copies(k2, (n - r + 2) // 2), gc.empty(1))
    return gc.join(gc.complete(r - 3), rest)
