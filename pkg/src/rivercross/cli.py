"""Command-line interface.

Exit codes: 0 for success (including a solvable instance), 2 when the instance
is provably unsolvable, 1 on usage errors.  Text output is deterministic; JSON
output carries a timing field unless --deterministic is given.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .families import FamilySpec, conjecture_report, family_counts, format_terms
from .puzzle import (
    McParams,
    mc_graph,
    mc_species,
    solve_mc,
    spell_out,
    validate_params,
)
from .strategies import Strategy, applicability, build_strategy, validate_solution
from .transfer import format_polynomial, solve_by_transfer, transfer_trace
from .walkcount import count_shortest_walks

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNSOLVABLE = 2

_INT64_MAX = 2**63 - 1


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; this tool reserves 2 for 'unsolvable'."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        payload, status = args.handler(args)
    except ValueError as exc:  # ParamError included
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        payload.pop("text", None)
        meta = {"tool": "rivercross", "version": __version__}
        if not args.deterministic:
            meta["elapsed_ms"] = round((time.perf_counter() - started) * 1000, 3)
        payload["meta"] = meta
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(payload["text"])
    return status


def _build_parser() -> _Parser:
    parser = _Parser(prog="rivercross", description=__doc__)
    parser.add_argument("--version", action="version", version=f"rivercross {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    output = _Parser(add_help=False)
    output.add_argument("--format", choices=("text", "json"), default="text")
    output.add_argument("--deterministic", action="store_true",
                        help="omit timing so identical runs are byte-identical")

    instance = _Parser(add_help=False)
    for name, help_text in (
        ("missionaries", "number of missionaries"),
        ("cannibals", "number of cannibals"),
        ("boat", "boat capacity"),
        ("margin", "required surplus of missionaries wherever both groups meet"),
    ):
        instance.add_argument(name, type=int, help=help_text)

    family = _Parser(add_help=False)
    family.add_argument("surplus", type=int, help="missionary surplus over cannibals")
    family.add_argument("boat", type=int, help="boat capacity")
    family.add_argument("margin", type=int, help="safety margin")
    family.add_argument("terms", type=int, help="number of terms to generate")

    p = sub.add_parser("solve", parents=[instance, output],
                       help="find shortest solutions by graph search")
    p.add_argument("--all", action="store_true", help="print every shortest solution")
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("spell", parents=[instance, output],
                       help="spell one solution out crossing by crossing")
    p.add_argument("--index", type=int, default=0,
                   help="which solution, in lexicographic order (default 0)")
    p.set_defaults(handler=_cmd_spell)

    p = sub.add_parser("count", parents=[instance, output],
                       help="count shortest solutions without listing them")
    p.add_argument("--method", choices=("graph", "matrix", "transfer"), default="transfer")
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("trace", parents=[instance, output],
                       help="print the transfer iteration's polynomials")
    p.add_argument("--steps", type=int, default=None,
                   help="stages to print (default: run to success or the state bound)")
    p.set_defaults(handler=_cmd_trace)

    p = sub.add_parser("sequence", parents=[family, output],
                       help="counting sequence over a one-parameter family")
    p.set_defaults(handler=_cmd_sequence)

    p = sub.add_parser("conjecture", parents=[family, output],
                       help="fit a recurrence and generating function to a family")
    p.add_argument("--max-order", type=int, default=4)
    p.set_defaults(handler=_cmd_conjecture)

    p = sub.add_parser("strategy", parents=[instance, output],
                       help="list applicable strategies or print one move script")
    p.add_argument("--name", choices=[s.value for s in Strategy], default=None)
    p.set_defaults(handler=_cmd_strategy)

    return parser


def _params(args) -> McParams:
    p = McParams(args.missionaries, args.cannibals, args.boat, args.margin)
    validate_params(p)
    return p


def _params_dict(p: McParams) -> dict:
    return {
        "missionaries": p.missionaries,
        "cannibals": p.cannibals,
        "boat_capacity": p.boat_capacity,
        "safety_margin": p.safety_margin,
    }


def _params_line(p: McParams) -> str:
    return (f"M={p.missionaries} C={p.cannibals} "
            f"B={p.boat_capacity} d={p.safety_margin}")


def _json_count(count: int):
    # Decimal string for anything a 64-bit consumer would truncate.
    return count if abs(count) <= _INT64_MAX else str(count)


def _cmd_solve(args) -> tuple[dict, int]:
    p = _params(args)
    result = solve_mc(p)
    payload: dict = {"command": "solve", "params": _params_dict(p)}
    if result is None:
        payload.update({"solvable": False, "crossings": None, "count": None, "solutions": []})
        payload["text"] = (f"{_params_line(p)}\n"
                           "UNSOLVABLE: the goal is unreachable from the initial state")
        return payload, EXIT_UNSOLVABLE
    crossings, solutions = result
    shown = solutions if args.all else solutions[:1]
    payload.update({
        "solvable": True,
        "crossings": crossings,
        "count": _json_count(len(solutions)),
        "solutions": [[list(s) for s in sol] for sol in shown],
    })
    lines = [_params_line(p), f"crossings: {crossings}", f"solutions: {len(solutions)}"]
    for k, sol in enumerate(shown, start=1):
        lines.append(f"solution {k}: " + " ".join(f"[{s[0]},{s[1]},{s[2]}]" for s in sol))
    payload["text"] = "\n".join(lines)
    return payload, EXIT_OK


def _cmd_spell(args) -> tuple[dict, int]:
    p = _params(args)
    result = solve_mc(p)
    payload: dict = {"command": "spell", "params": _params_dict(p), "index": args.index}
    if result is None:
        payload.update({"solvable": False, "transcript": []})
        payload["text"] = f"{_params_line(p)}\nUNSOLVABLE: nothing to spell out"
        return payload, EXIT_UNSOLVABLE
    crossings, solutions = result
    if not 0 <= args.index < len(solutions):
        raise ValueError(f"index {args.index} out of range: {len(solutions)} solutions exist")
    transcript = spell_out(p, solutions[args.index])
    payload.update({
        "solvable": True,
        "crossings": crossings,
        "transcript": transcript.split("\n"),
    })
    payload["text"] = transcript
    return payload, EXIT_OK


def _count_by_method(p: McParams, method: str):
    """(crossings, count) by the chosen backend, or None when unsolvable."""
    if method == "graph":
        result = solve_mc(p)
        return None if result is None else (result[0], len(result[1]))
    if method == "matrix":
        graph, _ = mc_graph(p)
        return count_shortest_walks(graph, 1, graph.n)
    outcome = solve_by_transfer(mc_species(p))
    return (outcome.crossings, outcome.count) if outcome.solvable else None


def _cmd_count(args) -> tuple[dict, int]:
    p = _params(args)
    result = _count_by_method(p, args.method)
    payload: dict = {"command": "count", "params": _params_dict(p), "method": args.method}
    if result is None:
        payload.update({"solvable": False, "crossings": None, "count": None})
        payload["text"] = f"{_params_line(p)}\nmethod: {args.method}\nUNSOLVABLE"
        return payload, EXIT_UNSOLVABLE
    crossings, count = result
    payload.update({"solvable": True, "crossings": crossings, "count": _json_count(count)})
    payload["text"] = (f"{_params_line(p)}\nmethod: {args.method}\n"
                       f"crossings: {crossings}\ncount: {count}")
    return payload, EXIT_OK


def _poly_json(poly) -> list:
    from .transfer import monomial_sort_key
    return [[poly[mono], list(mono)] for mono in sorted(poly, key=monomial_sort_key)]


def _cmd_trace(args) -> tuple[dict, int]:
    p = _params(args)
    sp = mc_species(p)
    outcome = solve_by_transfer(sp)
    if args.steps is not None:
        stages = args.steps
    else:
        stages = outcome.iterations_run
    trace = transfer_trace(sp, stages)
    lines = [_params_line(p), f"f0 = {format_polynomial(trace.initial)}"]
    polys = {"f0": _poly_json(trace.initial)}
    stop = outcome.success_index if outcome.solvable and args.steps is None else None
    for i, (g, f) in enumerate(trace.steps, start=1):
        lines.append(f"g{i} = {format_polynomial(g)}")
        polys[f"g{i}"] = _poly_json(g)
        if stop is not None and i == stop:
            break
        lines.append(f"f{i} = {format_polynomial(f)}")
        polys[f"f{i}"] = _poly_json(f)
    if args.steps is None:
        if outcome.solvable:
            lines.append(
                f"success: constant term {outcome.count} at stage {outcome.success_index}; "
                f"solvable in {outcome.crossings} crossings, {outcome.count} solutions")
        else:
            lines.append(
                f"no constant term through stage {outcome.iterations_run}; "
                f"{outcome.states_bound} legal states, so the instance is UNSOLVABLE")
    payload = {
        "command": "trace",
        "params": _params_dict(p),
        "solvable": outcome.solvable,
        "states_bound": outcome.states_bound,
        "polynomials": polys,
        "text": "\n".join(lines),
    }
    return payload, EXIT_OK


def _family(args) -> FamilySpec:
    fs = FamilySpec(args.surplus, args.boat, args.margin, args.terms)
    if fs.num_terms < 1:
        raise ValueError("need at least one term")
    return fs


def _family_dict(fs: FamilySpec) -> dict:
    return {
        "surplus": fs.surplus,
        "boat_capacity": fs.boat_capacity,
        "safety_margin": fs.safety_margin,
        "num_terms": fs.num_terms,
    }


def _cmd_sequence(args) -> tuple[dict, int]:
    fs = _family(args)
    counts = family_counts(fs)
    payload = {
        "command": "sequence",
        "family": _family_dict(fs),
        "terms": [None if v is None else _json_count(v) for v in counts],
        "text": format_terms(counts),
    }
    return payload, EXIT_OK


def _cmd_conjecture(args) -> tuple[dict, int]:
    fs = _family(args)
    report = conjecture_report(fs, args.max_order)
    payload: dict = {
        "command": "conjecture",
        "family": _family_dict(fs),
        "terms": [None if v is None else _json_count(v) for v in report.counts],
        "recurrence": None,
        "gf": None,
        "text": report.render(),
    }
    if report.recurrence is not None:
        rec = report.recurrence
        payload["recurrence"] = {
            "order": rec.order,
            "coefficients": [str(c) for c in rec.coefficients],
            "valid_from_term": report.valid_from_term,
        }
        payload["gf"] = {
            "numerator": list(report.gf.numerator),
            "denominator": list(report.gf.denominator),
        }
        payload["series_ok"] = report.series_ok
    return payload, EXIT_OK


def _cmd_strategy(args) -> tuple[dict, int]:
    p = _params(args)
    names = sorted(s.value for s in applicability(p))
    payload: dict = {"command": "strategy", "params": _params_dict(p), "applicable": names}
    if args.name is None:
        text = f"{_params_line(p)}\napplicable: " + (" ".join(names) if names else "(none)")
        payload["text"] = text
        return payload, EXIT_OK
    strategy = Strategy(args.name)
    moves = build_strategy(p, strategy)
    if moves is None:
        payload.update({"name": args.name, "moves": None, "valid": None})
        payload["text"] = f"{_params_line(p)}\n{args.name}: not applicable"
        return payload, EXIT_OK
    check = validate_solution(p, moves)
    payload.update({
        "name": args.name,
        "moves": [[mv.missionaries, mv.cannibals, "F" if mv.forward else "B"] for mv in moves],
        "move_count": len(moves),
        "valid": check is None,
    })
    lines = [_params_line(p), f"{args.name}:"]
    lines += [mv.render() for mv in moves]
    lines.append(f"moves: {len(moves)}")
    lines.append("valid: yes" if check is None else f"valid: NO ({check.rule} at {check.index})")
    payload["text"] = "\n".join(lines)
    return payload, EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
