"""Search-free sufficient conditions for potential containment.

Each predicate reads degree conditions off a graphic sequence and reports
which rule fired, together with the target it guarantees. Indices are
1-based in the rule descriptions (d_1 >= d_2 >= ...). A condition that
refers to an index beyond n simply fails; the length hypotheses of every
rule already exclude those cases.

Rule identifiers:

==========  ===============================================================
T2.1        n>=r+1, d_{r+1}>=r, d_i>=2r-i (i<=r-1)            -> A_{r+1}
T2.2        n>=2r+2, d_{r+1}>=r, d_{2r+2}>=r-1                 -> A_{r+1}
L3.2        n>=2r, d_{r-2}>=r+1, d_{r+1}>=r, d_r-1>=d_{d_{r+1}+2},
            d_i>=2r-i (i<=r-3)                                 -> A_{r+1}
T2.3        n>=r+1, d_{r+1}>=r-1, d_i>=2r-i (i<=r-1)           -> K_{r+1}-e
T2.4        n>=2r+2, d_{r-1}>=r, d_{2r+2}>=r-1                 -> K_{r+1}-e
L3.1        n>=2r, d_{r-1}>=r, d_{r+1}>=r-1, d_i>=2r-i (i<=r-2) -> K_{r+1}-e
L2.2        n>=2r+2, d_{r-2}>=r, d_{2r+2}>=r-1                 -> K_{r+1}-P2
L3.3        n>=2r+2, d_{r-2}>=r-1, d_{r+1}>=r-2, sum bound,
            d_i>=2r-i (i<=r-3)                                 -> K_{r+1}-Z4
L3.4(t)     n>=2r+2, d_{r-t}>=r, d_{2r+2}>=r-1                 -> K_{r+1}-K_{1,t}
L3.5        n>=2r+2, d_{r-4}>=r, sum bound, d_{2r+2}>=r-1      -> K_{r+1}-(P2uK2)
==========  ===============================================================

The sum bound is (r-1)(2n-r)-3(n-r)-1 when n-r is odd and -2 when even.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .seqcore import DegreeSequence

__all__ = [
    "SufficiencyVerdict",
    "sufficient_A",
    "sufficient_Kr1_minus_e",
    "sufficient_Kr1_minus_P2",
    "sufficient_Kr1_minus_Z4",
    "sufficient_Kr1_minus_K1t",
    "sufficient_Kr1_minus_P2uK2",
    "all_verdicts",
    "sum_bound",
]


@dataclass(frozen=True)
class SufficiencyVerdict:
    """``rules`` lists every branch checked; ``fired`` the ones that held."""

    rules: tuple[str, ...]
    guaranteed: str
    fired: tuple[str, ...] = ()

    @property
    def applicable(self) -> bool:
        return bool(self.fired)

    @property
    def rule(self) -> Optional[str]:
        return self.fired[0] if self.fired else None

    def __str__(self) -> str:
        if self.fired:
            return f"{self.fired[0]} applicable → {self.guaranteed}"
        return f"{'|'.join(self.rules)} inapplicable → {self.guaranteed}"

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "rules": list(self.rules),
            "fired": list(self.fired),
            "applicable": self.applicable,
            "guaranteed": self.guaranteed,
        }


class _D:
    """1-based view of a sequence that returns None past either end."""

    def __init__(self, pi):
        self.ts = pi.terms if isinstance(pi, DegreeSequence) else tuple(sorted(pi, reverse=True))
        self.n = len(self.ts)

    def __call__(self, i: int) -> Optional[int]:
        if 1 <= i <= self.n:
            return self.ts[i - 1]
        return None

    def ge(self, i: int, bound: int) -> bool:
        v = self(i)
        return v is not None and v >= bound

    def floors(self, r: int, upto: int) -> bool:
        """d_i >= 2r - i for i = 1..upto (vacuous when upto < 1)."""
        return all(self.ge(i, 2 * r - i) for i in range(1, upto + 1))


def sum_bound(r: int, n: int) -> int:
    base = (r - 1) * (2 * n - r) - 3 * (n - r)
    return base - 1 if (n - r) % 2 else base - 2


def _t21(d: _D, r: int) -> bool:
    return d.n >= r + 1 and d.ge(r + 1, r) and d.floors(r, r - 1)


def _t22(d: _D, r: int) -> bool:
    return d.n >= 2 * r + 2 and d.ge(r + 1, r) and d.ge(2 * r + 2, r - 1)


def _l32(d: _D, r: int) -> bool:
    if not (d.n >= 2 * r and d.ge(r - 2, r + 1) and d.ge(r + 1, r) and d.floors(r, r - 3)):
        return False
    nested = d(d(r + 1) + 2)
    return nested is not None and d(r) - 1 >= nested


def _t23(d: _D, r: int) -> bool:
    return d.n >= r + 1 and d.ge(r + 1, r - 1) and d.floors(r, r - 1)


def _t24(d: _D, r: int) -> bool:
    return d.n >= 2 * r + 2 and d.ge(r - 1, r) and d.ge(2 * r + 2, r - 1)


def _l31(d: _D, r: int) -> bool:
    return d.n >= 2 * r and d.ge(r - 1, r) and d.ge(r + 1, r - 1) and d.floors(r, r - 2)


def _run(pi, r: int, guaranteed: str, branches: list[tuple[str, Callable[[_D, int], bool]]]):
    d = _D(pi)
    fired = tuple(name for name, test in branches if test(d, r))
    return SufficiencyVerdict(tuple(name for name, _ in branches), guaranteed, fired)


def sufficient_A(pi, r: int) -> SufficiencyVerdict:
    return _run(pi, r, f"A{r + 1}", [("T2.1", _t21), ("T2.2", _t22), ("L3.2", _l32)])


def sufficient_Kr1_minus_e(pi, r: int) -> SufficiencyVerdict:
    return _run(pi, r, f"K{r + 1}-e", [("T2.3", _t23), ("T2.4", _t24), ("L3.1", _l31)])


def sufficient_Kr1_minus_P2(pi, r: int) -> SufficiencyVerdict:
    def l22(d: _D, r: int) -> bool:
        return d.n >= 2 * r + 2 and d.ge(r - 2, r) and d.ge(2 * r + 2, r - 1)

    return _run(pi, r, f"K{r + 1}-P2", [("L2.2", l22)])


def sufficient_Kr1_minus_Z4(pi, r: int) -> SufficiencyVerdict:
    """Needs r >= 4; smaller r is reported inapplicable."""

    def l33(d: _D, r: int) -> bool:
        return (
            r >= 4
            and d.n >= 2 * r + 2
            and d.ge(r - 2, r - 1)
            and d.ge(r + 1, r - 2)
            and sum(d.ts) >= sum_bound(r, d.n)
            and d.floors(r, r - 3)
        )

    return _run(pi, r, f"K{r + 1}-Z4", [("L3.3", l33)])


def sufficient_Kr1_minus_K1t(pi, r: int, t: int) -> SufficiencyVerdict:
    if not 1 <= t <= r - 1:
        raise ValueError(f"t={t} outside 1..r-1")

    def l34(d: _D, r: int) -> bool:
        return d.n >= 2 * r + 2 and d.ge(r - t, r) and d.ge(2 * r + 2, r - 1)

    return _run(pi, r, f"K{r + 1}-K1_{t}", [(f"L3.4({t})", l34)])


def sufficient_Kr1_minus_P2uK2(pi, r: int) -> SufficiencyVerdict:
    def l35(d: _D, r: int) -> bool:
        return (
            r >= 5
            and d.n >= 2 * r + 2
            and d.ge(r - 4, r)
            and sum(d.ts) >= sum_bound(r, d.n)
            and d.ge(2 * r + 2, r - 1)
        )

    return _run(pi, r, f"K{r + 1}-(P2uK2)", [("L3.5", l35)])


def all_verdicts(pi, r: int, ts: Optional[list[int]] = None) -> list[SufficiencyVerdict]:
    """Every predicate at (pi, r); star sizes default to t = 1..r-1."""
    out = [
        sufficient_A(pi, r),
        sufficient_Kr1_minus_e(pi, r),
        sufficient_Kr1_minus_P2(pi, r),
        sufficient_Kr1_minus_Z4(pi, r),
    ]
    for t in ts if ts is not None else range(1, r):
        out.append(sufficient_Kr1_minus_K1t(pi, r, t))
    out.append(sufficient_Kr1_minus_P2uK2(pi, r))
    return out
