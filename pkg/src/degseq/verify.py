"""Verification harness: compare formulas and bounds against the oracle.

A grid is a list of ``GridCell``; each cell runs one check and yields a
``CellReport``. Checks:

``formula_eq``
    oracle threshold equals the closed form, asserted only where the
    closed form is proven for the cell.
``lower_bound``
    oracle threshold is at least every lower bound that applies.
``order``
    oracle threshold of ``family`` is at least that of ``compare``.
``construction``
    the extremal graph has the stated degree sequence, avoids
    K_{r+1} - Z4, sits 2 below the T1.2 value and
    (optionally) is the unique realization of its sequence.
``sufficiency_soundness``
    every applicable sufficiency verdict is confirmed by the search.
``fixtures``
    the boundary sequences are graphic and contain their targets.
``machinery``
    Erdos-Gallai agrees with repeated laying off, and the top-degree
    placement search agrees with a scan of all labeled realizations.
``invariants``
    evenness and construction identities over a wide (r, n) grid.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations_with_replacement
from typing import Optional

from . import graphcore as gc
from . import thresholds as th
from .oracle import fixture_sequences, graphic_sequences, sigma_bruteforce
from .realize import SearchBudget, SearchTimeout, enumerate_realizations, potentially, potentially_exhaustive
from .seqcore import is_graphic_eg, is_graphic_recursive
from .sufficiency import all_verdicts
from .targets import TargetSpec, parse_target

__all__ = [
    "GridCell",
    "CellReport",
    "VerificationReport",
    "REPORT_SCHEMA",
    "SUITES",
    "suite",
    "run_cell",
    "verify",
    "machinery_mismatches",
    "invariant_violations",
]

CHECKS = (
    "formula_eq",
    "lower_bound",
    "order",
    "construction",
    "sufficiency_soundness",
    "fixtures",
    "machinery",
    "invariants",
)


@dataclass(frozen=True)
class GridCell:
    check: str
    family: Optional[str] = None
    r: Optional[int] = None
    n: Optional[int] = None
    allow_zero: bool = True
    ts: tuple[int, ...] = ()
    compare: Optional[str] = None
    unique: bool = False

    @property
    def cell_id(self) -> str:
        parts = [self.check]
        if self.family:
            parts.append(self.family)
        if self.compare:
            parts.append(f">={self.compare}")
        if self.r is not None:
            parts.append(f"r={self.r}")
        if self.n is not None:
            parts.append(f"n={self.n}")
        if not self.allow_zero:
            parts.append("nozero")
        return ":".join(parts)


@dataclass
class CellReport:
    cell_id: str
    check: str
    family: Optional[str]
    r: Optional[int]
    n: Optional[int]
    formula: Optional[int] = None
    bound: Optional[int] = None
    bounds: dict = field(default_factory=dict)
    oracle: Optional[int] = None
    witness: Optional[list] = None
    violations: list = field(default_factory=list)
    status: str = "ok"
    elapsed_ms: int = 0
    details: dict = field(default_factory=dict)


@dataclass
class VerificationReport:
    cells: list
    suite: Optional[str] = None
    elapsed_ms: int = 0

    @property
    def violations(self) -> list:
        return [f"{c.cell_id}: {v}" for c in self.cells for v in c.violations]

    @property
    def timeouts(self) -> list:
        return [c.cell_id for c in self.cells if c.status == "timeout"]

    @property
    def ok(self) -> bool:
        return not self.violations and not self.timeouts

    def to_dict(self) -> dict:
        return {
            "schema": "degseq.verification-report/1",
            "suite": self.suite,
            "elapsed_ms": self.elapsed_ms,
            "ok": self.ok,
            "cells": [asdict(c) for c in self.cells],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    def to_text(self) -> str:
        blocks = []
        for c in self.cells:
            lines = [f"cell: {c.cell_id}"]
            for key in ("check", "family", "r", "n", "formula", "bound", "oracle", "status", "elapsed_ms"):
                val = getattr(c, key)
                if val is not None:
                    lines.append(f"{key}: {val}")
            for name, val in sorted(c.bounds.items()):
                lines.append(f"bound.{name}: {val}")
            if c.witness is not None:
                lines.append("witness: " + " ".join(map(str, c.witness)))
            for key, val in sorted(c.details.items()):
                lines.append(f"detail.{key}: {val}")
            lines.extend(f"violation: {v}" for v in c.violations)
            blocks.append("\n".join(lines))
        summary = f"summary: {len(self.cells)} cells, {len(self.violations)} violations, {len(self.timeouts)} timeouts"
        return "\n\n".join(blocks + [summary]) + "\n"


_NULLABLE_INT = {"type": ["integer", "null"]}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema", "suite", "elapsed_ms", "ok", "cells"],
    "properties": {
        "schema": {"const": "degseq.verification-report/1"},
        "suite": {"type": ["string", "null"]},
        "elapsed_ms": {"type": "integer", "minimum": 0},
        "ok": {"type": "boolean"},
        "cells": {
            "type": "array",
            "items": {
                "type": "object",
                "required": [
                    "cell_id", "check", "family", "r", "n", "formula", "bound", "bounds",
                    "oracle", "witness", "violations", "status", "elapsed_ms", "details",
                ],
                "additionalProperties": False,
                "properties": {
                    "cell_id": {"type": "string"},
                    "check": {"enum": list(CHECKS)},
                    "family": {"type": ["string", "null"]},
                    "r": _NULLABLE_INT,
                    "n": _NULLABLE_INT,
                    "formula": _NULLABLE_INT,
                    "bound": _NULLABLE_INT,
                    "bounds": {"type": "object", "additionalProperties": {"type": "integer"}},
                    "oracle": _NULLABLE_INT,
                    "witness": {"type": ["array", "null"], "items": {"type": "integer"}},
                    "violations": {"type": "array", "items": {"type": "string"}},
                    "status": {"enum": ["ok", "timeout"]},
                    "elapsed_ms": {"type": "integer", "minimum": 0},
                    "details": {"type": "object"},
                },
            },
        },
    },
}


def _formula_for(t: TargetSpec, n: int, allow_zero: bool) -> Optional[th.SigmaValue]:
    """Closed form for the family, with ``in_range`` saying whether it is proven here."""
    g = t.graph
    if t.kind == "named":
        if g == gc.cycle(4):
            return th.known_sigma("C4", n) if n >= 4 else None
        k2 = gc.complete(2)
        for p in range(2, g.order // 2 + 1):
            if g == gc.disjoint_copies(k2, p):
                return th.known_sigma("pK2", n, p=p) if n >= 2 * p else None
        if len(g.edges) == g.order * (g.order - 1) // 2 and g.order >= 2 and n >= g.order:
            sv = th.known_sigma("Kk", n, k=g.order)
            # the proven k=3 case excludes zero terms
            return th.SigmaValue(sv.value, None, sv.source, sv.in_range and not allow_zero)
        return None
    if t.kind == "complete_minus" and t.m is not None and t.m - 1 >= 4 and n > t.m - 1:
        r = t.m - 1
        removed = _strip_isolated(t.removed)
        if removed in (gc.z4(), gc.complete_minus(4, gc.complete(2)), gc.complete(4)):
            return th.theorem_rhs("T1.1", r, n)
        if removed.order <= r + 1 and gc.is_valid_Z(removed, removed.order, len(removed.edges)):
            return th.theorem_rhs("T1.2", r, n)
    return None


def _strip_isolated(g: gc.SimpleGraph) -> gc.SimpleGraph:
    keep = [v for v in range(g.order) if g.degree(v) > 0]
    return gc.induced(g, keep)


def _bounds_for(t: TargetSpec, n: int) -> dict:
    out = {}
    if t.kind != "complete_minus" or t.m is None:
        return out
    r = t.m - 1
    removed = _strip_isolated(t.removed)
    if r >= 4 and n > r:
        if removed.order <= 4:
            out["L3.6"] = th.lemma36_lower(r, n).value
        if not gc.contains_subgraph(removed, gc.cycle(4)):
            out["L3.7"] = th.lemma37_lower(r, n).value
    p = removed.order
    if p >= 1 and len(removed.edges) == p * (p - 1) // 2 and t.m - p >= 1 and n >= t.m:
        out["T2.8"] = th.sigma_lower_bound_kpt(p, t.m - p, n).value
    return out


def _check_sigma(cell: GridCell, rep: CellReport, budget: SearchBudget) -> None:
    t = parse_target(cell.family)
    res = sigma_bruteforce(t, cell.n, cell.allow_zero, budget=budget)
    rep.oracle = res.value
    rep.witness = list(res.witness) if res.witness is not None else None
    rep.details["checked_sequences"] = res.checked
    if res.vacuous:
        rep.details["vacuous"] = True
    if cell.check == "formula_eq":
        sv = _formula_for(t, cell.n, cell.allow_zero)
        if sv is None:
            rep.violations.append("no closed form known for this family")
            return
        rep.formula = sv.value
        rep.details["formula_source"] = sv.source
        rep.details["formula_in_range"] = sv.in_range
        if sv.in_range and sv.value != res.value:
            rep.violations.append(f"oracle {res.value} != formula {sv.value}")
    elif cell.check == "lower_bound":
        rep.bounds = _bounds_for(t, cell.n)
        if rep.bounds:
            rep.bound = max(rep.bounds.values())
        else:
            rep.details["note"] = "no lower bound applies to this family"
        for name, b in sorted(rep.bounds.items()):
            if res.value < b:
                rep.violations.append(f"oracle {res.value} < {name} bound {b}")
    elif cell.check == "order":
        other = sigma_bruteforce(parse_target(cell.compare), cell.n, cell.allow_zero, budget=budget)
        rep.bound = other.value
        rep.bounds = {cell.compare: other.value}
        if res.value < other.value:
            rep.violations.append(f"oracle {res.value} < {cell.compare} oracle {other.value}")


def _check_construction(cell: GridCell, rep: CellReport, budget: SearchBudget) -> None:
    r, n = cell.r, cell.n
    g = th.extremal_construction(r, n)
    seq = gc.degree_sequence(g)
    want = th.extremal_sequence(r, n)
    rep.witness = list(seq)
    rep.formula = th.theorem_rhs("T1.2", r, n).value
    rep.oracle = seq.sum + 2
    if seq != want:
        rep.violations.append(f"degree sequence {seq} != {want}")
    if seq.sum + 2 != rep.formula:
        rep.violations.append(f"sum+2 = {seq.sum + 2} != T1.2 value {rep.formula}")
    # K4-e and K4 contain C4 and K_{r+1}-K4 = K_{r-3} + 4K1 always embeds,
    # so the last two are reported even though no construction can avoid them
    for token in (f"K{r + 1}-Z4", f"K{r + 1}-(K4-e)", f"K{r + 1}-K4"):
        if gc.contains_subgraph(g, parse_target(token).graph):
            rep.violations.append(f"construction contains {token}")
    if cell.unique:
        reps = list(enumerate_realizations(seq, cap=2))
        rep.details["realizations"] = len(reps)
        if len(reps) != 1:
            rep.violations.append(f"{len(reps)} non-isomorphic realizations, expected 1")
        elif not gc.is_isomorphic(reps[0], g):
            rep.violations.append("unique realization is not the construction")


def _check_sufficiency(cell: GridCell, rep: CellReport, budget: SearchBudget) -> None:
    r, n = cell.r, cell.n
    ts = list(cell.ts) if cell.ts else list(range(1, r))
    fired: dict[str, int] = {}
    confirmed = 0
    t23_not_l31 = 0
    cache: dict = {}
    for pi in graphic_sequences(n, cell.allow_zero):
        verdicts = all_verdicts(pi, r, ts)
        for v in verdicts:
            if not v.applicable:
                continue
            for rule in v.fired:
                fired[rule] = fired.get(rule, 0) + 1
            key = (pi.terms, v.guaranteed)
            if key not in cache:
                cache[key] = potentially(pi, v.guaranteed, budget=budget)
            if cache[key]:
                confirmed += 1
            else:
                rep.violations.append(f"{v} but ({pi}) is not potentially {v.guaranteed}")
        e = verdicts[1]
        if "T2.3" in e.fired and "L3.1" not in e.fired:
            t23_not_l31 += 1
    rep.details["sequences"] = len(graphic_sequences(n, cell.allow_zero))
    rep.details["fired"] = dict(sorted(fired.items()))
    rep.details["confirmed"] = confirmed
    rep.details["t23_without_l31"] = t23_not_l31


def _check_fixtures(cell: GridCell, rep: CellReport, budget: SearchBudget) -> None:
    fixtures = fixture_sequences(cell.r, cell.n)
    rep.details["fixtures"] = {name: " ".join(map(str, seq)) for name, seq, _ in fixtures}
    if not fixtures:
        rep.details["note"] = "no family instantiates at this (r, n)"
    for name, seq, token in fixtures:
        if not is_graphic_eg(seq):
            rep.violations.append(f"{name} ({seq}) is not graphic")
        elif not potentially(seq, token, budget=budget):
            rep.violations.append(f"{name} ({seq}) is not potentially {token}")


MACHINERY_TARGETS = ("K3", "C4", "2K2", "Z4", "K4-e", "K4")


def machinery_mismatches(eg_max_n: int = 8, search_max_n: int = 7, budget: Optional[SearchBudget] = None) -> dict:
    """Cross-check the two graphicality routes and the two containment routes.

    Returns counts plus a list of mismatch descriptions (empty when all agree).
    """
    budget = budget or SearchBudget.from_env()
    mismatches = []
    seqs = 0
    for n in range(1, eg_max_n + 1):
        rules = ["first", "last"] + list(range(1, n + 1))
        for terms in combinations_with_replacement(range(n - 1, -1, -1), n):
            seqs += 1
            want = is_graphic_eg(terms)
            for rule in rules:
                if is_graphic_recursive(terms, rule) != want:
                    mismatches.append(f"graphic({terms}) rule={rule}")
    pairs = 0
    targets = [parse_target(t) for t in MACHINERY_TARGETS]
    for n in range(1, search_max_n + 1):
        for pi in graphic_sequences(n, True):
            for t in targets:
                if t.order > n:
                    continue
                pairs += 1
                if potentially(pi, t, budget=budget) != potentially_exhaustive(pi, t):
                    mismatches.append(f"potentially(({pi}), {t})")
    return {"sequences": seqs, "pairs": pairs, "mismatches": mismatches}


def invariant_violations(r_range=range(4, 13), span: int = 60) -> dict:
    """Evenness and construction identities for r in ``r_range``, r+1 <= n <= r+span."""
    bad = []
    cells = 0
    for r in r_range:
        for n in range(r + 1, r + span + 1):
            cells += 1
            values = {
                "T1.1": th.theorem_rhs("T1.1", r, n),
                "T1.2": th.theorem_rhs("T1.2", r, n),
                "L3.6": th.lemma36_lower(r, n),
                "L3.7": th.lemma37_lower(r, n),
                "T2.8": th.sigma_lower_bound_kpt(4, r - 3, n),
            }
            for name, sv in values.items():
                if sv.value % 2:
                    bad.append(f"{name}(r={r}, n={n}) = {sv.value} is odd")
                if sv.parity_branch != ("odd_nr" if (n - r) % 2 else "even_nr"):
                    bad.append(f"{name}(r={r}, n={n}) parity tag {sv.parity_branch}")
            if values["L3.6"].value != values["T2.8"].value:
                bad.append(f"L3.6 != T2.8(4, r-3) at r={r}, n={n}")
            gap = values["T1.1"].value - values["T1.2"].value
            if gap != (2 if (n - r) % 2 else 4):
                bad.append(f"T1.1 - T1.2 = {gap} at r={r}, n={n}")
            seq = th.extremal_sequence(r, n)
            g = th.extremal_construction(r, n)
            if gc.degree_sequence(g) != seq:
                bad.append(f"construction degree sequence mismatch at r={r}, n={n}")
            if seq.sum + 2 != values["T1.2"].value:
                bad.append(f"construction sum+2 != T1.2 at r={r}, n={n}")
    return {"cells": cells, "violations": bad}


def run_cell(cell: GridCell, node_cap: Optional[int] = None, time_cap: Optional[float] = None) -> CellReport:
    if cell.check not in CHECKS:
        raise ValueError(f"unknown check {cell.check!r}")
    env = SearchBudget.from_env()
    budget = SearchBudget(
        node_cap=node_cap if node_cap is not None else env.node_cap,
        time_cap=time_cap if time_cap is not None else env.time_cap,
    )
    rep = CellReport(cell.cell_id, cell.check, cell.family, cell.r, cell.n)
    start = time.monotonic()
    try:
        if cell.check in ("formula_eq", "lower_bound", "order"):
            _check_sigma(cell, rep, budget)
        elif cell.check == "construction":
            _check_construction(cell, rep, budget)
        elif cell.check == "sufficiency_soundness":
            _check_sufficiency(cell, rep, budget)
        elif cell.check == "fixtures":
            _check_fixtures(cell, rep, budget)
        elif cell.check == "machinery":
            out = machinery_mismatches(budget=budget)
            rep.details.update(sequences=out["sequences"], pairs=out["pairs"])
            rep.violations.extend(out["mismatches"])
        else:
            out = invariant_violations()
            rep.details["grid_cells"] = out["cells"]
            rep.violations.extend(out["violations"])
    except SearchTimeout as exc:
        rep.status = "timeout"
        rep.details["timeout"] = str(exc)
    rep.elapsed_ms = int((time.monotonic() - start) * 1000)
    return rep


def verify(
    cells: list,
    workers: int = 1,
    node_cap: Optional[int] = None,
    time_cap: Optional[float] = None,
    suite_name: Optional[str] = None,
) -> VerificationReport:
    """Run every cell; results keep the grid order whatever ``workers`` is."""
    start = time.monotonic()
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(run_cell, cells, [node_cap] * len(cells), [time_cap] * len(cells)))
    else:
        reports = [run_cell(c, node_cap, time_cap) for c in cells]
    return VerificationReport(reports, suite_name, int((time.monotonic() - start) * 1000))


def _c4():
    return [GridCell("formula_eq", "C4", n=n) for n in range(4, 8)]


def _pk2():
    return [GridCell("formula_eq", "2K2", n=n) for n in range(4, 8)]


def _k3():
    return [GridCell("formula_eq", "K3", n=n, allow_zero=False) for n in range(6, 9)]


def _construction():
    return [
        GridCell("construction", r=r, n=n, unique=(r == 4 and n <= 9))
        for r in (4, 5)
        for n in range(r + 1, r + 7)
    ]


def _lower_bound():
    cells = []
    for n in range(7, 11):
        cells.append(GridCell("lower_bound", "K5-K4", r=4, n=n))
        cells.append(GridCell("lower_bound", "K5-Z4", r=4, n=n))
        cells.append(GridCell("order", "K5-Z4", r=4, n=n, compare="K5-K4"))
    return cells


def _sufficiency():
    return [GridCell("sufficiency_soundness", r=4, n=n, ts=(1, 2, 3)) for n in (9, 10)]


def _fixtures():
    return [GridCell("fixtures", r=r, n=n) for r, n in ((4, 10), (4, 11), (5, 12), (5, 13), (6, 14), (6, 15))]


SUITES = {
    "c4": _c4,
    "pk2": _pk2,
    "k3": _k3,
    "construction": _construction,
    "lower-bound": _lower_bound,
    "sufficiency": _sufficiency,
    "fixtures": _fixtures,
    "machinery": lambda: [GridCell("machinery")],
    "invariants": lambda: [GridCell("invariants")],
}
_PARTS = tuple(SUITES)
SUITES["acceptance"] = lambda: [c for name in _PARTS for c in SUITES[name]()]


def suite(name: str) -> list:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name]()
