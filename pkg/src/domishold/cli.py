"""Command-line front end: parse graph/hypergraph/DNF files, dispatch the
recognizers and solvers, and emit human-readable or JSON reports whose
certificates re-verify through the ``verify`` subcommand.

Exit codes are a stable contract: 0 = yes/success, 1 = no, 2 = error or
unknown.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .boolean import (
    SeparatingStructure,
    SummabilityWitness,
    dnf_of_hypergraph,
    is_threshold,
    verify_separating_structure,
    verify_summability_witness,
)
from .catalog import forbidden_catalog
from .errors import CapabilityError
from .fileio import parse_graph, parse_hypergraph, write_graph
from .graphs import Graph, generate, is_induced_embedding
from .hypergraphs import dually_sperner_violation
from .recognition import (
    TdStructure,
    check_equivalence_chain,
    neighborhood_dnf,
    recognize_htd,
    recognize_td,
    verify_td_structure,
)
from .solvers import approx_dominating_set, gamma_bruteforce, gamma_t_bruteforce, greedy_min_tds

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2


def _report_skeleton(args) -> dict:
    return {
        "command": args._argv,
        "verdict": None,
        "structure": None,
        "witness": None,
        "legs": None,
        "solution": None,
        "elapsed_ms": 0,
        "version": __version__,
        "error": None,
    }


def _emit(args, report: dict, human_lines: list[str]) -> None:
    text = json.dumps(report, indent=2) if args.json else "\n".join(human_lines)
    if getattr(args, "out", None):
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _vertices_1based(vertices) -> list[int]:
    return sorted(v + 1 for v in vertices)


def _structure_dict(s) -> dict:
    return {"weights": list(s.weights), "t": s.t}


def _summability_dict(w: SummabilityWitness) -> dict:
    return {
        "kind": "summability",
        "false_points": [list(p) for p in w.false_points],
        "true_points": [list(p) for p in w.true_points],
    }


def _load_graph(path: str) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def cmd_recognize_td(args) -> int:
    report = _report_skeleton(args)
    start = time.monotonic()
    G = _load_graph(args.path)
    result = recognize_td(G, dual_cap=args.cap_dual)
    report["elapsed_ms"] = int((time.monotonic() - start) * 1000)
    human = [f"total domishold: {result.verdict}"]
    if result.verdict is None:
        report["error"] = result.note
        human.append(result.note)
        _emit(args, report, human)
        return EXIT_ERROR
    report["verdict"] = result.verdict
    if result.structure is not None:
        report["structure"] = _structure_dict(result.structure)
        human.append(f"weights: {list(result.structure.weights)}  t: {result.structure.t}")
        if args.oracle and G.n <= args.max_oracle_n:
            ok = verify_td_structure(G, result.structure, max_n=args.max_oracle_n)
            human.append(f"oracle verification: {'ok' if ok else 'FAILED'}")
            if not ok:
                report["error"] = "structure failed exhaustive verification"
                _emit(args, report, human)
                return EXIT_ERROR
    if result.witness is not None:
        report["witness"] = _summability_dict(result.witness)
        human.append("2-summability witness on the neighborhood function found")
    _emit(args, report, human)
    return EXIT_YES if result.verdict else EXIT_NO


def cmd_recognize_htd(args) -> int:
    report = _report_skeleton(args)
    start = time.monotonic()
    G = _load_graph(args.path)
    result = recognize_htd(G)
    report["elapsed_ms"] = int((time.monotonic() - start) * 1000)
    report["verdict"] = result.verdict
    human = [f"hereditary total domishold: {result.verdict}"]
    if result.witness is not None:
        index, image = result.witness
        name = forbidden_catalog()[index - 1].name
        report["witness"] = {
            "kind": "forbidden_subgraph",
            "index": index,
            "name": name,
            "embedding": [v + 1 for v in image],
        }
        human.append(f"induced F{index} ({name}) on vertices {[v + 1 for v in image]}")
    _emit(args, report, human)
    return EXIT_YES if result.verdict else EXIT_NO


def cmd_solve(args) -> int:
    report = _report_skeleton(args)
    start = time.monotonic()

    def emit(lines):
        report["elapsed_ms"] = int((time.monotonic() - start) * 1000)
        _emit(args, report, lines)

    G = _load_graph(args.path)
    human: list[str] = []
    if args.tds:
        rec = recognize_td(G)
        if rec.verdict is None:
            report["error"] = rec.note
            emit([rec.note])
            return EXIT_ERROR
        if not rec.verdict:
            report["verdict"] = False
            human.append("graph is not total domishold")
            emit(human)
            return EXIT_NO
        result = greedy_min_tds(G, rec.structure)
        report["structure"] = _structure_dict(rec.structure)
    else:
        result = approx_dominating_set(G)
    solution = {
        "vertices": _vertices_1based(result.vertices),
        "size": result.size,
        "method": result.method,
    }
    human.append(f"{result.method} solution: {solution['vertices']} (size {result.size})")
    if args.oracle:
        oracle = (
            gamma_t_bruteforce(G, args.max_oracle_n)
            if args.tds
            else gamma_bruteforce(G, args.max_oracle_n)
        )
        agrees = (
            oracle.size == result.size if args.tds else result.size <= 2 * oracle.size
        )
        solution["oracle_size"] = oracle.size
        solution["agrees"] = agrees
        human.append(f"oracle size: {oracle.size} ({'ok' if agrees else 'MISMATCH'})")
        if not agrees:
            report["solution"] = solution
            report["error"] = "solver disagrees with brute-force oracle"
            emit(human)
            return EXIT_ERROR
    report["verdict"] = True
    report["solution"] = solution
    emit(human)
    return EXIT_YES


def cmd_hypergraph(args) -> int:
    report = _report_skeleton(args)
    start = time.monotonic()
    H = parse_hypergraph(Path(args.path).read_text(encoding="utf-8"))
    human: list[str] = []
    if args.dually_sperner:
        pair = dually_sperner_violation(H)
        report["verdict"] = pair is None
        human.append(f"dually Sperner: {pair is None}")
        if pair is not None:
            report["witness"] = {
                "kind": "dually_sperner_violation",
                "edges": [_vertices_1based(pair[0]), _vertices_1based(pair[1])],
            }
            human.append(
                f"violating pair: {_vertices_1based(pair[0])} / {_vertices_1based(pair[1])}"
            )
    else:
        f = dnf_of_hypergraph(H)
        if f.is_constant_one():
            # an empty edge is contained in every set; no non-negative
            # threshold separates, but the split-incidence graph is total
            # domishold, so the degenerate case counts as threshold
            report["verdict"] = True
            human.append("threshold: True (degenerate: contains the empty edge)")
            report["elapsed_ms"] = int((time.monotonic() - start) * 1000)
            _emit(args, report, human)
            return EXIT_YES
        result = is_threshold(f, dual_cap=args.cap_dual)
        report["verdict"] = result.is_threshold
        human.append(f"threshold: {result.is_threshold}")
        if result.structure is not None:
            report["structure"] = _structure_dict(result.structure)
            human.append(
                f"weights: {list(result.structure.weights)}  t: {result.structure.t}"
            )
        if result.witness is not None:
            report["witness"] = _summability_dict(result.witness)
            human.append("2-summability witness found")
    report["elapsed_ms"] = int((time.monotonic() - start) * 1000)
    _emit(args, report, human)
    return EXIT_YES if report["verdict"] else EXIT_NO


def cmd_generate(args) -> int:
    family = args.family
    params: list = list(args.params)
    file_families = {"add_universal", "add_isolated", "add_pendant", "disjoint_union", "join"}
    if family in file_families:
        params = [_load_graph(p) for p in params]
    if family == "random_threshold":
        # parameter order (seed, n); the seed defaults to --seed
        params = [args.seed, int(params[0])]
    G = generate(family, *params)
    text = write_graph(G)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_YES


def cmd_equivalence(args) -> int:
    report = _report_skeleton(args)
    start = time.monotonic()
    if args.census is not None:
        from .graphs import all_graphs

        disagreements = 0
        total = 0
        for n in range(args.census + 1):
            for G in all_graphs(n):
                total += 1
                if not check_equivalence_chain(G).unanimous():
                    disagreements += 1
        report["legs"] = {"census_graphs": total, "disagreements": disagreements}
        report["verdict"] = disagreements == 0
        report["elapsed_ms"] = int((time.monotonic() - start) * 1000)
        _emit(
            args,
            report,
            [f"census n<={args.census}: {total} graphs, {disagreements} disagreements"],
        )
        return EXIT_YES if disagreements == 0 else EXIT_ERROR
    G = _load_graph(args.path)
    chain = check_equivalence_chain(G)
    report["legs"] = chain.as_dict()
    report["verdict"] = chain.unanimous()
    report["elapsed_ms"] = int((time.monotonic() - start) * 1000)
    marks = "  ".join(
        f"({name}) {'?' if leg is None else '+' if leg else '-'}"
        for name, leg in chain.as_dict().items()
    )
    _emit(args, report, [marks, f"unanimous: {chain.unanimous()}"])
    return EXIT_YES if chain.unanimous() else EXIT_ERROR


def cmd_verify(args) -> int:
    """Re-verify the certificates of an emitted JSON report against the
    original input file."""
    text = Path(args.path).read_text(encoding="utf-8")
    report = json.loads(Path(args.report).read_text(encoding="utf-8"))
    is_hypergraph = any(
        line.strip().startswith("p hgraph") for line in text.splitlines()
    )
    checks: list[tuple[str, bool]] = []
    if is_hypergraph:
        H = parse_hypergraph(text)
        f = dnf_of_hypergraph(H)
        if report.get("structure"):
            s = SeparatingStructure(
                tuple(report["structure"]["weights"]), report["structure"]["t"]
            )
            checks.append(("separating structure", verify_separating_structure(f, s)))
        if report.get("witness") and report["witness"]["kind"] == "summability":
            w = _witness_from_dict(report["witness"])
            checks.append(("summability witness", verify_summability_witness(f, w)))
        if report.get("witness") and report["witness"]["kind"] == "dually_sperner_violation":
            e, g = (frozenset(v - 1 for v in edge) for edge in report["witness"]["edges"])
            ok = (
                e in H.edges
                and g in H.edges
                and len(e - g) > 1
                and len(g - e) > 1
            )
            checks.append(("dually Sperner violation", ok))
    else:
        G = parse_graph(text)
        if report.get("structure"):
            s = TdStructure(
                tuple(report["structure"]["weights"]), report["structure"]["t"]
            )
            checks.append(("total domishold structure", verify_td_structure(G, s)))
        if report.get("witness"):
            kind = report["witness"]["kind"]
            if kind == "summability":
                w = _witness_from_dict(report["witness"])
                checks.append(
                    ("summability witness", verify_summability_witness(neighborhood_dnf(G), w))
                )
            elif kind == "forbidden_subgraph":
                image = tuple(v - 1 for v in report["witness"]["embedding"])
                pattern = forbidden_catalog()[report["witness"]["index"] - 1].graph
                checks.append(
                    ("forbidden subgraph embedding", is_induced_embedding(G, pattern, image))
                )
    if not checks:
        print("no certificates to verify")
        return EXIT_ERROR
    ok = True
    for name, passed in checks:
        print(f"{name}: {'ok' if passed else 'FAILED'}")
        ok = ok and passed
    return EXIT_YES if ok else EXIT_ERROR


def _witness_from_dict(d: dict) -> SummabilityWitness:
    return SummabilityWitness(
        tuple(tuple(p) for p in d["false_points"]),
        tuple(tuple(p) for p in d["true_points"]),
    )


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--out", help="write the report to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domishold",
        description="Recognition and solving toolkit for total domishold graphs, "
        "threshold hypergraphs and threshold positive Boolean functions.",
    )
    default_seed = int(os.environ.get("DOMISHOLD_SEED", "20130919"))
    seed_parent = argparse.ArgumentParser(add_help=False)
    seed_parent.add_argument("--seed", type=int, default=default_seed, help="random seed")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[seed_parent], **kwargs)

    p = add_parser("recognize-td", help="total domishold recognition with certificate")
    p.add_argument("path")
    p.add_argument("--oracle", action="store_true", help="exhaustively re-verify the structure")
    p.add_argument("--max-oracle-n", type=int, default=16)
    p.add_argument("--cap-dual", type=int, default=200_000)
    _add_common(p)
    p.set_defaults(func=cmd_recognize_td)

    p = add_parser("recognize-htd", help="hereditary recognition via the forbidden catalog")
    p.add_argument("path")
    _add_common(p)
    p.set_defaults(func=cmd_recognize_htd)

    p = add_parser("solve", help="minimum total dominating set / approximate dominating set")
    p.add_argument("path")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--tds", action="store_true", help="minimum total dominating set")
    group.add_argument("--ds", action="store_true", help="2-approximate dominating set")
    p.add_argument("--oracle", action="store_true", help="cross-check with brute force")
    p.add_argument("--max-oracle-n", type=int, default=16)
    _add_common(p)
    p.set_defaults(func=cmd_solve)

    p = add_parser("hypergraph", help="threshold / dually Sperner hypergraph tests")
    p.add_argument("path")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--threshold", action="store_true")
    group.add_argument("--dually-sperner", action="store_true")
    p.add_argument("--cap-dual", type=int, default=200_000)
    _add_common(p)
    p.set_defaults(func=cmd_hypergraph)

    p = add_parser("generate", help="write a generated graph in the graph file format")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = add_parser("equivalence", help="seven-way total domishold equivalence report")
    p.add_argument("path", nargs="?")
    p.add_argument("--census", type=int, help="sweep all labeled graphs up to this order")
    _add_common(p)
    p.set_defaults(func=cmd_equivalence)

    p = add_parser("verify", help="re-verify certificates from an emitted JSON report")
    p.add_argument("path", help="the original graph or hypergraph file")
    p.add_argument("report", help="the JSON report to check")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args._argv = argv
    if args.subcommand == "equivalence" and args.path is None and args.census is None:
        parser.error("equivalence needs a graph file or --census N")
    try:
        return args.func(args)
    except CapabilityError as exc:
        print(f"unknown: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
