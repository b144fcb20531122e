"""``modresc`` command line.

Exit codes: 0 success, 1 infeasible within ``--max-k`` (or ``verify``
mismatch), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bigraph import BipartiteGraph, from_biadjacency, to_biadjacency
from .boolmat import BoolMatrix, ModRescPair, format_matrix, load_matrix, verify_solution
from .bridge import saturate
from .errors import BudgetExhausted, InputError
from .kernel import kernelize
from .maximal import maximal_bicliques
from .solve import ALGORITHMS, STRATEGIES, CoverSolution, SolverConfig, generate_planted, solve_modresc

EXIT_OK, EXIT_INFEASIBLE, EXIT_INPUT = 0, 1, 2


def _dump(obj: dict) -> str:
    return json.dumps(obj)


def build_report(c: BoolMatrix, sol: CoverSolution, config: SolverConfig) -> dict:
    stats = sol.stats.to_dict()
    if config.deterministic:
        stats["ms"] = None
    else:
        stats["ms"] = round(stats["ms"], 3)
    return {
        "status": "optimal",
        "n": c.nrows,
        "m": c.ncols,
        "edges": c.count_ones(),
        "k": sol.k,
        "M": sol.pair.mod.to_lists(),
        "R": sol.pair.resc.to_lists(),
        "bicliques": [{"rows": list(b.rows), "cols": list(b.cols)} for b in sol.cover],
        "config": {
            "algorithm": config.algorithm,
            "strategy": config.strategy,
            "max_k": config.max_k,
            "seed": config.seed,
            "deterministic": config.deterministic,
            "kernelize": config.kernelize,
        },
        "stats": stats,
    }


def _report_text(report: dict) -> str:
    lines = [f"n={report['n']} m={report['m']} edges={report['edges']}", f"k={report['k']}"]
    lines.append("M:")
    lines += ["".join(map(str, r)) for r in report["M"]]
    lines.append("R:")
    lines += ["".join(map(str, r)) for r in report["R"]]
    lines.append("bicliques:")
    lines += [_biclique_line(b["rows"], b["cols"]) for b in report["bicliques"]]
    s = report["stats"]
    lines.append(f"nodes={s['nodes']} kernel_offset={s['kernel_offset']} ms={s['ms']}")
    return "\n".join(lines)


def _biclique_line(rows, cols) -> str:
    return f"rows={','.join(map(str, rows))} cols={','.join(map(str, cols))}"


def cover_dot(g: BipartiteGraph, sol: CoverSolution) -> str:
    """Graphviz description: one cluster-free node per vertex, edges labelled by their first biclique."""
    first = {}
    for ell, b in enumerate(sol.cover):
        for e in b.edges():
            first.setdefault(e, ell)
    out = ["graph cover {", "  rankdir=LR;"]
    out += [f'  u{i} [shape=box, label="row {i}"];' for i in range(g.left_count)]
    out += [f'  v{j} [shape=ellipse, label="col {j}"];' for j in range(g.right_count)]
    for i, j in g.edges():
        ell = first[(i, j)]
        out.append(f'  u{i} -- v{j} [label="B{ell}", colorscheme=set312, color={ell % 12 + 1}];')
    out.append("}")
    return "\n".join(out) + "\n"


def cmd_solve(args) -> int:
    c = load_matrix(args.matrix)
    config = SolverConfig(algorithm=args.algorithm, max_k=args.max_k, seed=args.seed,
                          deterministic=args.deterministic, strategy=args.strategy,
                          kernelize=not args.no_kernel)
    try:
        sol = solve_modresc(c, config)
    except BudgetExhausted as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        print(_dump({"status": "infeasible", "n": c.nrows, "m": c.ncols, "k": None,
                     "max_k": exc.max_k, "lower_bound": exc.lower_bound}))
        return EXIT_INFEASIBLE
    report = build_report(c, sol, config)
    if args.format == "json":
        print(_dump(report))
    else:
        print(_report_text(report))
    if args.dot:
        Path(args.dot).write_text(cover_dot(from_biadjacency(c), sol), encoding="utf-8")
    return EXIT_OK


def _load_pair(args) -> ModRescPair:
    if args.solution:
        text = Path(args.solution).read_text(encoding="utf-8")
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"solution is not JSON: {exc}", args.solution) from exc
        if not isinstance(data, dict) or "M" not in data or "R" not in data:
            raise InputError("solution JSON needs 'M' and 'R' arrays", args.solution)
        k = data.get("k")
        mod = BoolMatrix.from_lists(data["M"], ncols=k if not data["M"] else None)
        resc = BoolMatrix.from_lists(data["R"], ncols=k if not data["R"] else None)
        return ModRescPair(mod, resc)
    if args.mod and args.resc:
        return ModRescPair(load_matrix(args.mod), load_matrix(args.resc))
    raise InputError("give a solution JSON file, or both --mod and --resc")


def cmd_verify(args) -> int:
    c = load_matrix(args.matrix)
    pair = _load_pair(args)
    ok = verify_solution(c, pair)
    print("ok" if ok else "mismatch")
    return EXIT_OK if ok else EXIT_INFEASIBLE


def cmd_kernelize(args) -> int:
    c = load_matrix(args.matrix)
    res = kernelize(from_biadjacency(c), args.k)
    kernel = to_biadjacency(res.kernel)
    if args.format == "json":
        print(_dump({
            "kernel": kernel.to_lists(),
            "rows": list(res.left_ids),
            "cols": list(res.right_ids),
            "offset": res.parameter_offset,
            "verdict": res.verdict.value,
            "trace": [e.to_dict() for e in res.trace],
        }))
    else:
        print(f"# kernel {kernel.nrows}x{kernel.ncols} (rows {list(res.left_ids)}, "
              f"cols {list(res.right_ids)})")
        if kernel.nrows and kernel.ncols:
            print(format_matrix(kernel))
        print(f"# offset {res.parameter_offset}")
        print(f"# verdict {res.verdict.value}")
        for e in res.trace:
            print(f"# {e.describe()}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    g = from_biadjacency(load_matrix(args.matrix))
    found = maximal_bicliques(g)
    if args.format == "json":
        print(_dump({"count": len(found),
                     "bicliques": [{"rows": list(b.rows), "cols": list(b.cols)} for b in found]}))
    else:
        for b in found:
            print(_biclique_line(b.rows, b.cols))
    return EXIT_OK


def cmd_transform(args) -> int:
    g = from_biadjacency(load_matrix(args.matrix))
    if args.kernelize:
        g = kernelize(g).kernel
    h = saturate(g)
    if args.format == "json":
        print(_dump({"vertices": h.vertex_count, "left_count": h.left_count,
                     "edges": [list(e) for e in h.sorted_edges()]}))
    else:
        print(f"# {h.vertex_count} vertices, rows 0..{g.left_count - 1}, "
              f"cols {g.left_count}..{h.vertex_count - 1}, {len(h.edges)} edges")
        for a, b in h.sorted_edges():
            print(a, b)
    return EXIT_OK


def cmd_generate(args) -> int:
    c, pair = generate_planted(args.n, args.m, args.k, args.left_density,
                               args.right_density, args.seed)
    prefix = args.prefix
    paths = {}
    header = (f"# planted n={args.n} m={args.m} k_star={args.k} "
              f"densities={args.left_density}/{args.right_density} seed={args.seed}\n")
    for name, mat in (("C", c), ("M", pair.mod), ("R", pair.resc)):
        path = Path(f"{prefix}.{name}.txt")
        path.write_text(header + format_matrix(mat) + "\n", encoding="utf-8")
        paths[name] = str(path)
    print(_dump({"seed": args.seed, "n": args.n, "m": args.m, "k_star": args.k, "files": paths}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="modresc", description="Exact mod/resc parsimony solver")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="minimum k factorisation of a compatibility matrix")
    s.add_argument("matrix")
    s.add_argument("--algorithm", choices=ALGORITHMS, default="branch")
    s.add_argument("--strategy", choices=STRATEGIES, default="linear")
    s.add_argument("--max-k", type=int, default=None)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--deterministic", action=argparse.BooleanOptionalAction, default=True)
    s.add_argument("--no-kernel", action="store_true", help="skip the reduction rules")
    s.add_argument("--format", choices=("json", "text"), default="json")
    s.add_argument("--dot", metavar="FILE", help="write the cover as a Graphviz file")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check that M ⊗ R reproduces C")
    v.add_argument("matrix")
    v.add_argument("solution", nargs="?", help="JSON with 'M' and 'R' (e.g. solve output)")
    v.add_argument("--mod", help="M as a matrix text file")
    v.add_argument("--resc", help="R as a matrix text file")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("kernelize", help="apply the reduction rules and print the kernel")
    k.add_argument("matrix")
    k.add_argument("--k", type=int, default=None, help="budget for the size-bound check")
    k.add_argument("--format", choices=("json", "text"), default="text")
    k.set_defaults(func=cmd_kernelize)

    e = sub.add_parser("enumerate", help="list all maximal bicliques")
    e.add_argument("matrix")
    e.add_argument("--format", choices=("json", "text"), default="text")
    e.set_defaults(func=cmd_enumerate)

    t = sub.add_parser("transform", help="print the saturated graph as an edge list")
    t.add_argument("matrix")
    t.add_argument("--kernelize", action="store_true", help="saturate the kernel instead")
    t.add_argument("--format", choices=("json", "text"), default="text")
    t.set_defaults(func=cmd_transform)

    g = sub.add_parser("generate", help="write a planted instance C = M ⊗ R")
    g.add_argument("prefix", help="output files are PREFIX.C.txt, PREFIX.M.txt, PREFIX.R.txt")
    g.add_argument("--n", type=int, default=15)
    g.add_argument("--m", type=int, default=15)
    g.add_argument("--k", type=int, default=4)
    g.add_argument("--left-density", type=float, default=0.4)
    g.add_argument("--right-density", type=float, default=0.4)
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_generate)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
