"""Command-line interface.

Exit status: 0 on success, 1 on domain errors (bad input, non-graphic
sequence, failed verification), 2 when a search budget runs out.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import graphcore as gc
from . import thresholds as th
from .oracle import sigma_bruteforce
from .realize import (
    SearchBudget,
    SearchTimeout,
    enumerate_realizations,
    format_witness,
    potentially_witness,
    realize,
)
from .seqcore import NotGraphic, is_graphic_eg, is_graphic_recursive, lay_off, parse_sequence
from .sufficiency import all_verdicts, sufficient_Kr1_minus_K1t
from .targets import parse_target
from .verify import SUITES, suite, verify

EXIT_OK, EXIT_DOMAIN, EXIT_TIMEOUT = 0, 1, 2

_SEQ = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_GRAPH = {
    "type": "object",
    "required": ["order", "edges"],
    "properties": {
        "order": {"type": "integer", "minimum": 0},
        "edges": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}},
    },
}

# one schema per subcommand that supports --json
CLI_SCHEMAS = {
    "graphic": {
        "type": "object",
        "required": ["sequence", "graphic"],
        "properties": {"sequence": _SEQ, "graphic": {"type": "boolean"}},
    },
    "layoff": {
        "type": "object",
        "required": ["sequence", "k", "residual"],
        "properties": {"sequence": _SEQ, "k": {"type": "integer"}, "residual": _SEQ},
    },
    "potential": {
        "type": "object",
        "required": ["sequence", "target", "potentially"],
        "properties": {
            "sequence": _SEQ,
            "target": {"type": "string"},
            "potentially": {"type": "boolean"},
            "witness": {"anyOf": [{"type": "null"}, _GRAPH]},
            "embedding": {"type": ["object", "null"], "additionalProperties": {"type": "integer"}},
        },
    },
    "sufficient": {
        "type": "object",
        "required": ["sequence", "r", "verdicts"],
        "properties": {
            "sequence": _SEQ,
            "r": {"type": "integer"},
            "verdicts": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["rule", "rules", "fired", "applicable", "guaranteed"],
                    "properties": {
                        "rule": {"type": ["string", "null"]},
                        "applicable": {"type": "boolean"},
                        "guaranteed": {"type": "string"},
                    },
                },
            },
        },
    },
    "sigma": {
        "type": "object",
        "required": ["value", "source"],
        "properties": {
            "value": {"type": "integer"},
            "source": {"type": "string"},
            "parity_branch": {"type": ["string", "null"]},
            "in_range": {"type": "boolean"},
            "witness": {"anyOf": [{"type": "null"}, _SEQ]},
            "vacuous": {"type": "boolean"},
        },
    },
    "construct": _GRAPH,
    "realize": {"type": "object", "required": ["sequence", "graphs"], "properties": {"sequence": _SEQ, "graphs": {"type": "array", "items": _GRAPH}}},
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # argparse would exit 2, which is reserved for budget timeouts
        self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")


def _graph_json(g: gc.SimpleGraph) -> dict:
    return {"order": g.order, "edges": [list(e) for e in g.sorted_edges()]}


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _budget(args) -> SearchBudget:
    b = SearchBudget.from_env()
    if getattr(args, "node_cap", None) is not None:
        b.node_cap = args.node_cap
    if getattr(args, "time_cap", None) is not None:
        b.time_cap = args.time_cap
    return b


def cmd_graphic(args) -> int:
    pi = parse_sequence(args.sequence)
    ok = is_graphic_eg(pi) if args.method == "eg" else is_graphic_recursive(pi)
    _emit(args, {"sequence": list(pi), "graphic": ok}, "yes" if ok else "no")
    return EXIT_OK


def cmd_layoff(args) -> int:
    pi = parse_sequence(args.sequence)
    res = lay_off(pi, args.k)
    _emit(args, {"sequence": list(pi), "k": args.k, "residual": list(res)}, str(res))
    return EXIT_OK


def cmd_potential(args) -> int:
    pi = parse_sequence(args.sequence)
    target = parse_target(args.target)
    w = potentially_witness(pi, target, budget=_budget(args))
    payload = {"sequence": list(pi), "target": target.token, "potentially": w is not None}
    if args.witness or args.json:
        payload["witness"] = _graph_json(w.graph) if w else None
        payload["embedding"] = {str(k): v for k, v in w.embedding.items()} if w else None
    text = "yes" if w else "no"
    if w and args.witness:
        text += "\n" + format_witness(w, header=f"realization of ({pi}) containing {target.token}").rstrip("\n")
    _emit(args, payload, text)
    return EXIT_OK


def cmd_sufficient(args) -> int:
    pi = parse_sequence(args.sequence)
    if not is_graphic_eg(pi):
        raise NotGraphic(f"({pi}) is not graphic")
    if args.t is not None:
        verdicts = [sufficient_Kr1_minus_K1t(pi, args.r, args.t)]
    else:
        verdicts = all_verdicts(pi, args.r)
    _emit(
        args,
        {"sequence": list(pi), "r": args.r, "verdicts": [v.to_dict() for v in verdicts]},
        "\n".join(str(v) for v in verdicts),
    )
    return EXIT_OK


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise ValueError(f"sigma formula --which {args.which} needs {' '.join(missing)}")


def cmd_sigma(args) -> int:
    if args.mode == "formula":
        w = args.which
        if w in ("T1.1", "T1.2"):
            _need(args, "r", "n")
            sv = th.theorem_rhs(w, args.r, args.n)
        elif w == "T2.8":
            _need(args, "p", "t", "n")
            sv = th.sigma_lower_bound_kpt(args.p, args.t, args.n)
        elif w == "L3.6":
            _need(args, "r", "n")
            sv = th.lemma36_lower(args.r, args.n)
        elif w == "L3.7":
            _need(args, "r", "n")
            sv = th.lemma37_lower(args.r, args.n)
        else:
            _need(args, "family", "n")
            sv = th.known_sigma(args.family, args.n, p=args.p, k=args.k)
        payload = {"value": sv.value, "source": sv.source, "parity_branch": sv.parity_branch, "in_range": sv.in_range}
        _emit(args, payload, str(sv))
        return EXIT_OK
    target = parse_target(args.target)
    res = sigma_bruteforce(target, args.n, allow_zero=not args.no_zeros, budget=_budget(args))
    witness = list(res.witness) if res.witness is not None else None
    payload = {"value": res.value, "source": "oracle", "witness": witness, "vacuous": res.vacuous}
    text = f"{res.value} oracle {target.token} n={args.n}"
    text += " vacuous" if res.vacuous else " witness " + " ".join(map(str, witness))
    _emit(args, payload, text)
    return EXIT_OK


def cmd_construct(args) -> int:
    g = th.extremal_construction(args.r, args.n)
    header = f"extremal construction r={args.r} n={args.n}; degree sequence {gc.degree_sequence(g)}"
    if args.json:
        print(json.dumps(_graph_json(g), sort_keys=True))
    else:
        sys.stdout.write(gc.format_graph(g, header))
    return EXIT_OK


def cmd_realize(args) -> int:
    pi = parse_sequence(args.sequence)
    if args.all:
        graphs = list(enumerate_realizations(pi, cap=args.cap))
    else:
        graphs = [realize(pi).graph]
    if args.json:
        print(json.dumps({"sequence": list(pi), "graphs": [_graph_json(g) for g in graphs]}, sort_keys=True))
    else:
        sys.stdout.write("\n".join(gc.format_graph(g) for g in graphs))
    return EXIT_OK


def cmd_verify(args) -> int:
    cells = suite(args.suite)
    rep = verify(cells, workers=args.workers, node_cap=args.node_cap, time_cap=args.time_cap, suite_name=args.suite)
    if args.json:
        Path(args.json).write_text(rep.to_json() + "\n")
    if args.text:
        Path(args.text).write_text(rep.to_text())
    for c in rep.cells:
        mark = "TIMEOUT" if c.status == "timeout" else ("FAIL" if c.violations else "ok")
        print(f"{mark:7} {c.cell_id} ({c.elapsed_ms} ms)")
        for v in c.violations:
            print(f"        {v}")
    print(f"{len(rep.cells)} cells, {len(rep.violations)} violations, {len(rep.timeouts)} timeouts")
    if rep.timeouts:
        return EXIT_TIMEOUT
    return EXIT_OK if not rep.violations else EXIT_DOMAIN


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="degseq", description="Degree-sequence thresholds for potentially K_{r+1}-H-graphic sequences.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def budget_flags(sp):
        sp.add_argument("--node-cap", type=int, default=None, help="search node cap (env DEGSEQ_NODE_CAP)")
        sp.add_argument("--time-cap", type=float, default=None, help="wall-clock cap in seconds (env DEGSEQ_TIME_CAP)")

    sp = sub.add_parser("graphic", help="is the sequence graphic?")
    sp.add_argument("sequence")
    sp.add_argument("--method", choices=["eg", "recursive"], default="eg")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_graphic)

    sp = sub.add_parser("layoff", help="residual sequence after laying off d_k")
    sp.add_argument("sequence")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_layoff)

    sp = sub.add_parser("potential", help="is the sequence potentially T-graphic?")
    sp.add_argument("sequence")
    sp.add_argument("--target", required=True)
    sp.add_argument("--witness", action="store_true")
    sp.add_argument("--json", action="store_true")
    budget_flags(sp)
    sp.set_defaults(func=cmd_potential)

    sp = sub.add_parser("sufficient", help="which sufficient conditions apply")
    sp.add_argument("sequence")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--t", type=int, default=None)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_sufficient)

    sp = sub.add_parser("sigma", help="closed-form or brute-force thresholds")
    modes = sp.add_subparsers(dest="mode", required=True, parser_class=_Parser)
    f = modes.add_parser("formula")
    f.add_argument("--which", choices=["T1.1", "T1.2", "T2.8", "L3.6", "L3.7", "known"], required=True)
    for name in ("r", "n", "p", "t", "k"):
        f.add_argument(f"--{name}", type=int, default=None)
    f.add_argument("--family", choices=["pK2", "C4", "Kk"], default=None)
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_sigma)
    b = modes.add_parser("brute")
    b.add_argument("--target", required=True)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--no-zeros", action="store_true")
    b.add_argument("--json", action="store_true")
    budget_flags(b)
    b.set_defaults(func=cmd_sigma)

    sp = sub.add_parser("construct", help="print the extremal graph for (r, n)")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("realize", help="one realization, or all up to isomorphism with --all")
    sp.add_argument("sequence")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--cap", type=int, default=None)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_realize)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", choices=sorted(SUITES), required=True)
    sp.add_argument("--json", metavar="PATH", default=None, help="write the machine-readable report here")
    sp.add_argument("--text", metavar="PATH", default=None, help="write the key:value report here")
    sp.add_argument("--workers", type=int, default=1)
    budget_flags(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SearchTimeout as exc:
        print(f"timeout: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
