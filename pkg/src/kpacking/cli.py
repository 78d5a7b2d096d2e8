"""Command line front end.

Exit codes: 0 success, 1 verification or consistency failure, 2 bad input or
parameters, 3 a desk-scale cap was exceeded, 4 I/O failure.  Reports are JSON
on standard output with a schema marker; rationals are "p/q" strings; the
analyze timing goes to standard error so reports stay byte-reproducible.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .errors import (
    CapExceededError,
    ConsistencyError,
    FamilyParameterError,
    ParseError,
    ZeroColumnError,
)
from .families import FAMILIES, FamilySpec, cycle, enumerate_connected_graphs, web
from .graphs import (
    BinaryMatrix,
    Graph,
    closed_neighbourhood_matrix,
    format_graph,
    format_matrix,
    is_isomorphic,
    parse_graph,
    parse_matrix,
)
from .perfection import (
    is_perfect_matrix,
    perfection_report,
    polytope_vertices,
)
from .recognition import (
    clique_graph,
    find_undominated_obstruction,
    is_extended_clique_node_by_cliques,
    is_extended_clique_node_by_pattern,
    recheck_certificate,
)
from .solver import (
    check_scaling_identity,
    lp_relaxation,
    solve_kpf,
    solve_kpf_bruteforce,
    solve_limited_bruteforce,
    solve_limited_packing,
)

SCHEMA = 1

KNOWN_CENSUS_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def _rat(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> tuple[Graph, dict]:
    text = _read(path)
    return parse_graph(text), _descriptor(text)


def _load_matrix(path: str) -> tuple[BinaryMatrix, dict]:
    text = _read(path)
    return parse_matrix(text), _descriptor(text)


def _descriptor(text: str) -> dict:
    return {"sha256": hashlib.sha256(text.encode("utf-8")).hexdigest()}


def _parse_k_list(raw: str) -> list[int]:
    try:
        ks = [int(part) for part in raw.split(",") if part.strip()]
    except ValueError:
        raise ValueError(f"bad k list {raw!r}") from None
    if not ks or any(k < 1 for k in ks):
        raise ValueError("k values must be positive integers")
    return ks


# ---------------------------------------------------------------------------
# gen


def _cmd_gen(args) -> int:
    spec = FamilySpec(args.family, tuple(args.parameters))
    obj = spec.build()
    if isinstance(obj, BinaryMatrix):
        text = format_matrix(obj)
    elif args.matrix:
        text = format_matrix(closed_neighbourhood_matrix(obj))
    else:
        text = format_graph(obj)
    _write(text, args.output)
    return 0


# ---------------------------------------------------------------------------
# solve


def _cmd_solve(args) -> int:
    g, descriptor = _load_graph(args.input)
    report: dict = {
        "schema": SCHEMA,
        "command": "solve",
        "input": descriptor,
        "variant": args.variant,
        "k": args.k,
    }
    if args.variant == "lp":
        if args.oracle:
            raise ValueError("--oracle applies to the integer variants only")
        value, point = lp_relaxation(g, args.k)
        report["optimum"] = _rat(value)
        report["witness"] = {"unit_vertex": list(point.as_strings())}
    else:
        solve = solve_kpf if args.variant == "kpf" else solve_limited_packing
        result = solve(g, args.k)
        report["optimum"] = result.optimum
        report["witness"] = {"k": args.k, "values": list(result.witness.values)}
        report["node_order"] = list(result.node_order)
        report["explored"] = result.explored
        if args.oracle:
            brute = (
                solve_kpf_bruteforce if args.variant == "kpf" else solve_limited_bruteforce
            )
            oracle = brute(g, args.k)
            report["oracle"] = {
                "optimum": oracle.optimum,
                "agrees": oracle.optimum == result.optimum,
            }
            if oracle.optimum != result.optimum:
                _write(_dump(report), args.output)
                raise ConsistencyError(
                    f"solver found {result.optimum}, oracle found {oracle.optimum}"
                )
    _write(_dump(report), args.output)
    return 0


# ---------------------------------------------------------------------------
# recognize


def _cmd_recognize(args) -> int:
    if args.graph is not None:
        g, descriptor = _load_graph(args.graph)
        m = closed_neighbourhood_matrix(g)
    else:
        g = None
        m, descriptor = _load_matrix(args.matrix)
        if args.method == "structural":
            raise ValueError("the structural method needs a graph input")

    methods: dict[str, dict] = {}
    verdicts: dict[str, bool] = {}

    def run(name, cert) -> None:
        verdicts[name] = cert.verdict
        entry: dict = {"verdict": cert.verdict}
        if args.certificate:
            entry["certificate"] = cert.to_payload()
        methods[name] = entry

    wanted = (
        ["cliques", "pattern", "structural"] if args.method == "all" else [args.method]
    )
    if g is None and "structural" in wanted:
        wanted = [w for w in wanted if w != "structural"]
    for name in wanted:
        if name == "cliques":
            run(name, is_extended_clique_node_by_cliques(m))
        elif name == "pattern":
            run(name, is_extended_clique_node_by_pattern(m))
        else:
            run(name, find_undominated_obstruction(g))

    report = {
        "schema": SCHEMA,
        "command": "recognize",
        "input": descriptor,
        "methods": methods,
    }
    if "cliques" in verdicts and "pattern" in verdicts:
        report["exact_methods_agree"] = verdicts["cliques"] == verdicts["pattern"]
    if "structural" in verdicts and "cliques" in verdicts:
        report["structural_agrees"] = verdicts["structural"] == verdicts["cliques"]
    _write(_dump(report), args.output)
    if report.get("exact_methods_agree") is False:
        raise ConsistencyError("the exact recognizers disagree")
    return 0


# ---------------------------------------------------------------------------
# perfection


def _vertex_rows(m: BinaryMatrix, cap: int) -> list[list[str]]:
    return [list(p.as_strings()) for p in polytope_vertices(m, cap)]


def _cmd_perfection(args) -> int:
    cap = args.max_vertex_dim
    if args.graph is not None:
        g, descriptor = _load_graph(args.graph)
        rep = perfection_report(g, vertex_cap=cap)
        witness = None
        if rep.clique_graph_witness is not None:
            kind, nodes = rep.clique_graph_witness
            witness = {"kind": kind, "nodes": list(nodes)}
        report = {
            "schema": SCHEMA,
            "command": "perfection",
            "input": descriptor,
            "verdicts": {
                "extended_clique_node": rep.extended_clique_node,
                "clique_graph_perfect": rep.clique_graph_perfect,
                "matrix_perfect": rep.matrix_perfect,
                "structural_verdict": rep.structural_verdict,
                "structural_agrees": rep.structural_agrees,
                "neighbourhood_matrix_perfect": rep.neighbourhood_matrix_perfect,
            },
            "witnesses": {
                "clique_graph": witness,
                "fractional_vertex": (
                    None
                    if rep.fractional_vertex is None
                    else list(rep.fractional_vertex.as_strings())
                ),
            },
        }
        if args.emit_vertices:
            report["vertices"] = _vertex_rows(closed_neighbourhood_matrix(g), cap)
    else:
        m, descriptor = _load_matrix(args.matrix)
        verdict, fractional = is_perfect_matrix(m, cap)
        report = {
            "schema": SCHEMA,
            "command": "perfection",
            "input": descriptor,
            "matrix_perfect": verdict,
            "fractional_vertex": (
                None if fractional is None else list(fractional.as_strings())
            ),
        }
        if args.emit_vertices:
            report["vertices"] = _vertex_rows(m, cap)
    _write(_dump(report), args.output)
    return 0


# ---------------------------------------------------------------------------
# analyze


def _cmd_analyze(args) -> int:
    started = time.monotonic()
    if args.family is not None:
        spec = FamilySpec(args.family[0], tuple(int(x) for x in args.family[1:]))
        obj = spec.build()
        if isinstance(obj, BinaryMatrix):
            raise ValueError("analyze expects a graph family, not a matrix family")
        g = obj
        descriptor = {"family": spec.family, "parameters": list(spec.parameters)}
    elif args.input is not None:
        g, descriptor = _load_graph(args.input)
    else:
        raise ValueError("analyze needs an input file or --family")

    rep = perfection_report(g)
    certificates = {
        name: cert.to_payload() for name, cert in sorted(rep.certificates.items())
    }

    l1 = solve_limited_packing(g, 1).optimum
    unit_lp = None
    if g.n <= 10:
        unit_lp = _rat(lp_relaxation(g, 1)[0])

    per_k = {}
    for k in args.k:
        entry = {
            "kpf": solve_kpf(g, k).optimum,
            "limited": solve_limited_packing(g, k).optimum,
            "k_times_l1": k * l1,
        }
        entry["scaling_equality"] = entry["kpf"] == entry["k_times_l1"]
        if g.n <= 10:
            entry["relaxation"] = _rat(lp_relaxation(g, k)[0])
        else:
            entry["relaxation"] = None
        per_k[str(k)] = entry

    witness = None
    if rep.clique_graph_witness is not None:
        kind, nodes = rep.clique_graph_witness
        witness = {"kind": kind, "nodes": list(nodes)}
    report = {
        "schema": SCHEMA,
        "command": "analyze",
        "input": descriptor,
        "graph": {"nodes": g.n, "edges": [list(e) for e in g.edges()]},
        "verdicts": {
            "extended_clique_node": rep.extended_clique_node,
            "clique_graph_perfect": rep.clique_graph_perfect,
            "matrix_perfect": rep.matrix_perfect,
            "structural_verdict": rep.structural_verdict,
            "structural_agrees": rep.structural_agrees,
            "neighbourhood_matrix_perfect": rep.neighbourhood_matrix_perfect,
        },
        "witnesses": {
            "clique_graph": witness,
            "fractional_vertex": (
                None
                if rep.fractional_vertex is None
                else list(rep.fractional_vertex.as_strings())
            ),
        },
        "packing": {
            "l1": l1,
            "unit_relaxation": unit_lp,
            "per_k": per_k,
        },
    }
    if args.certificates:
        report["certificates"] = certificates
    _write(_dump(report), args.output)
    elapsed = time.monotonic() - started
    sys.stderr.write(json.dumps({"timing": {"seconds": round(elapsed, 6)}}) + "\n")
    return 0


# ---------------------------------------------------------------------------
# verify suites


def _edge_text(g: Graph) -> str:
    return " ".join(f"{u}-{v}" for u, v in g.edges())


def _recognizer_failure(g: Graph) -> str | None:
    m = closed_neighbourhood_matrix(g)
    a = is_extended_clique_node_by_cliques(m).verdict
    b = is_extended_clique_node_by_pattern(m).verdict
    c = find_undominated_obstruction(g).verdict
    if a == b == c:
        return None
    return (
        f"counterexample: n={g.n} edges=[{_edge_text(g)}] "
        f"cliques={a} pattern={b} structural={c}"
    )


def _polytope_failure(g: Graph) -> str | None:
    try:
        perfection_report(g)
    except ConsistencyError as exc:
        return f"counterexample: n={g.n} edges=[{_edge_text(g)}] {exc}"
    return None


def _scaling_failure(task) -> str | None:
    g, ks = task
    for k in ks:
        try:
            report = check_scaling_identity(g, k)
        except ConsistencyError as exc:
            return f"counterexample: n={g.n} k={k} edges=[{_edge_text(g)}] {exc}"
        if report.neighbourhood_perfect and not report.equality:
            return (
                f"counterexample: n={g.n} k={k} edges=[{_edge_text(g)}] "
                f"kpf={report.kpf_value} expected={report.k_times_l1}"
            )
    return None


def _map_tasks(worker, tasks, jobs: int):
    if jobs <= 1:
        return [worker(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks, chunksize=8))


def _census_upto(max_n: int):
    for n in range(1, max_n + 1):
        yield from enumerate_connected_graphs(n)


def _suite_recognizers(args, out) -> bool:
    graphs = list(_census_upto(args.max_n))
    failures = [f for f in _map_tasks(_recognizer_failure, graphs, args.jobs) if f]
    for line in failures:
        out(line)
    out(f"checked: {len(graphs)} connected graphs with at most {args.max_n} nodes")
    return not failures


def _suite_polytope(args, out) -> bool:
    graphs = list(_census_upto(args.max_n))
    failures = [f for f in _map_tasks(_polytope_failure, graphs, args.jobs) if f]
    for line in failures:
        out(line)
    out(f"checked: {len(graphs)} connected graphs with at most {args.max_n} nodes")
    return not failures


def _suite_scaling(args, out) -> bool:
    graphs = list(_census_upto(args.max_n))
    tasks = [(g, tuple(args.k)) for g in graphs]
    failures = [f for f in _map_tasks(_scaling_failure, tasks, args.jobs) if f]
    for line in failures:
        out(line)
    out(
        f"checked: {len(graphs)} connected graphs with at most {args.max_n} nodes, "
        f"k in {{{','.join(map(str, args.k))}}}"
    )
    return not failures


def _suite_webs(args, out) -> bool:
    ok = True
    checked = 0
    for k in args.k:
        for n in range(2, args.max_n + 1):
            g = web(n, k)
            member = perfection_report(g).neighbourhood_matrix_perfect
            expected = n <= 2 * k + 1
            checked += 1
            if member != expected:
                ok = False
                out(
                    f"counterexample: web({n},{k}) membership={member} "
                    f"expected={expected}"
                )
    gq5 = clique_graph(closed_neighbourhood_matrix(cycle(5)))
    if not is_isomorphic(gq5, web(5, 2)):
        ok = False
        out("counterexample: column graph of the 5-cycle matrix is not complete")
    gq6 = clique_graph(closed_neighbourhood_matrix(cycle(6)))
    if not is_isomorphic(gq6, web(6, 2)):
        ok = False
        out("counterexample: column graph of the 6-cycle matrix is not web(6,2)")
    out(f"checked: {checked} webs plus 2 column graph identities")
    return ok


def _suite_census(args, out) -> bool:
    ok = True
    for n in range(1, args.max_n + 1):
        graphs = list(enumerate_connected_graphs(n))
        expected = KNOWN_CENSUS_COUNTS[n]
        if len(graphs) != expected:
            ok = False
            out(f"counterexample: census({n}) has {len(graphs)} classes, expected {expected}")
        for g in graphs:
            from .graphs import is_connected

            if not is_connected(g):
                ok = False
                out(f"counterexample: disconnected census member n={n} [{_edge_text(g)}]")
        out(f"census({n}): {len(graphs)} classes")
    return ok


_SUITES = {
    "recognizers": (_suite_recognizers, 7, None),
    "polytope": (_suite_polytope, 6, None),
    "scaling": (_suite_scaling, 6, [2, 3, 4]),
    "webs": (_suite_webs, 12, [1, 2, 3, 4]),
    "census": (_suite_census, 7, None),
}


def _cmd_verify(args) -> int:
    runner, default_n, default_k = _SUITES[args.suite]
    if args.max_n is None:
        args.max_n = default_n
    if args.k is None:
        args.k = default_k if default_k is not None else [1]
    lines: list[str] = []
    ok = runner(args, lines.append)
    sys.stdout.write(f"suite: {args.suite}\n")
    for line in lines:
        sys.stdout.write(line + "\n")
    sys.stdout.write(f"result: {'PASS' if ok else 'FAIL'}\n")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# verify-certificate


def _cmd_verify_certificate(args) -> int:
    try:
        payload = json.loads(_read(args.certificate))
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad certificate JSON: {exc}") from None
    graph = matrix = None
    if args.graph is not None:
        graph, _ = _load_graph(args.graph)
    if args.matrix is not None:
        matrix, _ = _load_matrix(args.matrix)
    valid = recheck_certificate(payload, graph=graph, matrix=matrix)
    sys.stdout.write(_dump({"schema": SCHEMA, "command": "verify-certificate", "valid": valid}))
    return 0 if valid else 1


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kpacking",
        description="Exact packing-function solvers and perfection recognizers.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("gen", help="materialize a named family member")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("parameters", nargs="*", type=int)
    p.add_argument("--matrix", action="store_true",
                   help="emit the closed neighbourhood matrix instead of the graph")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("solve", help="solve a packing instance from a graph file")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--variant", choices=["kpf", "limited", "lp"], default="kpf")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against the exhaustive oracle")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("recognize", help="run extended clique-node recognizers")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--graph")
    grp.add_argument("--matrix")
    p.add_argument("--method", choices=["cliques", "pattern", "structural", "all"],
                   default="all")
    p.add_argument("--certificate", action="store_true",
                   help="include re-checkable witnesses in the report")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("perfection", help="perfection verdicts for a graph or matrix")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--graph")
    grp.add_argument("--matrix")
    p.add_argument("--max-vertex-dim", type=int, default=10)
    p.add_argument("--emit-vertices", action="store_true")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_perfection)

    p = sub.add_parser("analyze", help="full report: recognizers, perfection, packing")
    p.add_argument("input", nargs="?")
    p.add_argument("--family", nargs="+", metavar=("NAME", "PARAM"),
                   help="analyze a generated family member instead of a file")
    p.add_argument("--k", type=_parse_k_list, default=[2, 3])
    p.add_argument("--certificates", action="store_true")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("suite", choices=sorted(_SUITES))
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--k", type=_parse_k_list, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("verify-certificate", help="recheck an emitted certificate")
    p.add_argument("certificate", help="certificate JSON file")
    p.add_argument("--graph")
    p.add_argument("--matrix")
    p.set_defaults(func=_cmd_verify_certificate)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ParseError, FamilyParameterError, ZeroColumnError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except CapExceededError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except ConsistencyError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 4


if __name__ == "__main__":
    sys.exit(main())
