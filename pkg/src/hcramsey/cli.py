"""Command-line surface tying the workbench together, with an append-only
JSON-lines result store of run manifests.

Exit codes: 0 success, 1 failed verification, 2 input error, 3 budget
exhausted / unknown outcome.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import __version__
from .colorings import (
    BitstringFamily,
    blowup_coloring,
    format_coloring_text,
    forest_partition_coloring,
    mine_delta_system,
    parse_coloring_text,
    parse_family_text,
    parse_set_family_text,
    random_coloring,
    sierpinski_coloring,
)
from .graphs import (
    InputFormatError,
    is_connected,
    is_kappa_connected,
    parse_graph_text,
    vertex_connectivity,
)
from .satbridge import (
    decode_model,
    emit_cnf,
    parse_dimacs_provenance,
    parse_model_text,
    to_dimacs,
)
from .search import UNKNOWN, arrow_check, exists_avoiding_coloring, ramsey_number

DEFAULT_SEED = 20181215
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_UNKNOWN = 3


def _strip_volatile(value):
    """Drop wall-clock fields so the digest is replay-stable."""
    if isinstance(value, dict):
        return {k: _strip_volatile(v) for k, v in value.items() if k != "wall_time"}
    if isinstance(value, list):
        return [_strip_volatile(v) for v in value]
    return value


def outcome_digest(outcome) -> str:
    blob = json.dumps(_strip_volatile(outcome), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def append_manifest(store_path, command, params, seed, workers, wall_time, outcome):
    manifest = {
        "command": command,
        "params": params,
        "seed": seed,
        "workers": workers,
        "tool_version": __version__,
        "wall_time": wall_time,
        "outcome": outcome,
        "digest": outcome_digest(outcome),
    }
    with open(store_path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(manifest, sort_keys=True) + "\n")
    return manifest


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputFormatError(f"{path}: {exc.strerror}") from None


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_connectivity(args):
    g = parse_graph_text(_read(args.graph_file))
    if args.kappa is not None:
        ok, verdict = is_kappa_connected(g, args.kappa)
        print("true" if ok else "false")
        if verdict.kind == "separated":
            print(f"separator: {sorted(verdict.separator)}")
        elif verdict.paths:
            print(f"pair: {verdict.pair}")
            for path in verdict.paths:
                print("path: " + " ".join(map(str, path)))
        outcome = {
            "kappa": args.kappa,
            "answer": ok,
            "separator": sorted(verdict.separator),
            "paths": [list(p) for p in verdict.paths],
        }
    else:
        kappa = vertex_connectivity(g) if g.n > 0 else 0
        print(f"connected: {is_connected(g)}")
        print(f"vertex_connectivity: {kappa}")
        outcome = {"connected": is_connected(g), "vertex_connectivity": kappa}
    return outcome, EXIT_OK


def cmd_arrow(args):
    c = parse_coloring_text(_read(args.coloring_file))
    mode = "atLeast" if args.at_least else "exact"
    witness = arrow_check(c, args.kappa, args.m, mode)
    if witness is None:
        print("none")
        outcome = {"witness": None}
    else:
        print(f"color {witness.color} on vertices {list(witness.vertices)}")
        outcome = {
            "witness": {"color": witness.color, "vertices": list(witness.vertices)}
        }
    outcome.update({"kappa": args.kappa, "m": args.m, "mode": mode})
    return outcome, EXIT_OK


def cmd_search(args):
    result = exists_avoiding_coloring(
        args.n, args.m, args.kappa, args.colors,
        node_budget=args.budget, workers=args.workers,
    )
    outcome = result.to_json_dict()
    outcome["tool_version"] = __version__
    outcome["seed"] = args.seed
    print(json.dumps(outcome, sort_keys=True, indent=2))
    return outcome, EXIT_UNKNOWN if result.kind == UNKNOWN else EXIT_OK


def cmd_number(args):
    result = ramsey_number(
        args.m, args.kappa, args.colors, args.nmax,
        node_budget=args.budget, workers=args.workers,
    )
    if result.status == "determined":
        print(result.value)
    elif result.status == "open":
        print(f"> {args.nmax}")
    else:
        print("unknown (budget exhausted)")
    outcome = result.to_json_dict()
    return outcome, EXIT_UNKNOWN if result.status == UNKNOWN else EXIT_OK


def cmd_coloring(args):
    if args.kind == "sierpinski":
        if args.family:
            family = parse_family_text(_read(args.family))
        elif args.length is not None:
            family = BitstringFamily.full(args.length)
        else:
            raise InputFormatError("sierpinski needs --family or --length")
        c = sierpinski_coloring(family)
    elif args.kind == "forest":
        if args.n is None:
            raise InputFormatError("forest needs --n")
        c = forest_partition_coloring(args.n)
    elif args.kind == "blowup":
        if not (args.base and args.blocks):
            raise InputFormatError("blowup needs --base and --blocks")
        base = parse_coloring_text(_read(args.base))
        try:
            blocks = [int(b) for b in args.blocks.split(",")]
        except ValueError:
            raise InputFormatError("--blocks must be comma-separated integers") from None
        c = blowup_coloring(base, blocks, args.inner_color)
    else:  # random
        if args.n is None or args.colors is None:
            raise InputFormatError("random needs --n and --colors")
        c = random_coloring(args.n, args.colors, args.seed)
    _emit(format_coloring_text(c), args.out)
    outcome = {"kind": args.kind, "n": c.n, "k": c.k, "colors": list(c.colors)}
    return outcome, EXIT_OK


def cmd_cnf(args):
    inst = emit_cnf(args.n, args.m, args.kappa, args.colors)
    _emit(to_dimacs(inst), args.out)
    outcome = {
        "n": args.n, "m": args.m, "kappa": args.kappa, "k": args.colors,
        "num_vars": inst.num_vars, "num_clauses": len(inst.clauses),
        "forbidden_hash": inst.forbidden_hash,
    }
    return outcome, EXIT_OK


def cmd_verify_model(args):
    text = _read(args.cnf_file)
    params = parse_dimacs_provenance(text)
    inst = emit_cnf(params["n"], params["m"], params["kappa"], params["k"])
    literals = parse_model_text(_read(args.model_file))
    try:
        coloring = decode_model(inst, literals)
    except ValueError as exc:
        print(f"invalid model: {exc}")
        return {"params": params, "valid": False, "error": str(exc)}, EXIT_FAILED
    witness = arrow_check(coloring, params["kappa"], params["m"], "exact")
    if witness is None:
        print("model decodes to an avoiding coloring")
        return {"params": params, "valid": True}, EXIT_OK
    print(
        f"model decodes, but color {witness.color} on {list(witness.vertices)} "
        "is a monochromatic well-connected set"
    )
    outcome = {
        "params": params,
        "valid": False,
        "witness": {"color": witness.color, "vertices": list(witness.vertices)},
    }
    return outcome, EXIT_FAILED


def cmd_delta_mine(args):
    family, n = parse_set_family_text(_read(args.family_file))
    report = mine_delta_system(family, n, args.size)
    if report is None:
        print("none")
        return {"B": None}, EXIT_OK
    print(f"B = {list(report.B)}")
    outcome = {
        "B": list(report.B),
        "row_roots": {str(a): sorted(r) if r is not None else None
                      for a, r in report.row_roots.items()},
        "col_roots": {str(b): sorted(r) if r is not None else None
                      for b, r in report.col_roots.items()},
        "union_root": sorted(report.union_root),
        "residues_disjoint": report.residues_disjoint,
        "root_sizes_uniform": report.root_sizes_uniform,
    }
    print(json.dumps(outcome, sort_keys=True, indent=2))
    return outcome, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hcramsey",
        description="Finite workbench for connected Ramsey relations.",
    )
    parser.add_argument("--store", default="results.jsonl",
                        help="append-only JSON-lines manifest store")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("connectivity", help="connectivity of a graph file")
    p.add_argument("graph_file")
    p.add_argument("--kappa", type=int)
    p.set_defaults(func=cmd_connectivity)

    p = sub.add_parser("arrow", help="arrow relation on a coloring file")
    p.add_argument("coloring_file")
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--at-least", action="store_true")
    p.set_defaults(func=cmd_arrow)

    p = sub.add_parser("search", help="search for an avoiding coloring")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("number", help="finite connected Ramsey number")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_number)

    p = sub.add_parser("coloring", help="emit a coloring file")
    p.add_argument("kind", choices=["sierpinski", "forest", "blowup", "random"])
    p.add_argument("--n", type=int)
    p.add_argument("--colors", type=int)
    p.add_argument("--length", type=int, help="bitstring length for sierpinski")
    p.add_argument("--family", help="bitstring family file for sierpinski")
    p.add_argument("--base", help="base coloring file for blowup")
    p.add_argument("--blocks", help="comma-separated block sizes for blowup")
    p.add_argument("--inner-color", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_coloring)

    p = sub.add_parser("cnf", help="emit a DIMACS CNF avoidance instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_cnf)

    p = sub.add_parser("verify-model", help="check a solver model against a CNF")
    p.add_argument("cnf_file")
    p.add_argument("model_file")
    p.set_defaults(func=cmd_verify_model)

    p = sub.add_parser("delta-mine", help="mine a two-dimensional sunflower")
    p.add_argument("family_file")
    p.add_argument("--size", type=int, required=True)
    p.set_defaults(func=cmd_delta_mine)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        outcome, code = args.func(args)
    except InputFormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    wall_time = time.perf_counter() - start
    params = {
        key: value
        for key, value in vars(args).items()
        if key not in ("func", "store", "command") and value is not None
    }
    append_manifest(
        args.store, args.command, params, args.seed,
        getattr(args, "workers", 1), wall_time, outcome,
    )
    return code


if __name__ == "__main__":
    sys.exit(main())
