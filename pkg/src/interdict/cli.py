"""Command-line front end.

Subcommands: solve (dynamic program), brute (exhaustive oracle), compare
(run both, diff the frontiers), gen (instance generators), decide
(threshold query), check-sp (recognition only). Set INTERDICT_LOG=info
for run reports and per-phase timings; all diagnostics go to stderr so
output files and stdout payloads stay byte-stable.

Exit codes: 0 success/yes; 1 bad input or parameters; 2 not
series-parallel; 3 coordinate overflow; 4 instance too large for the
oracle; 5 frontier mismatch in compare; 6 decide answered no.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from dataclasses import dataclass, field

from .decompose import decompose, recompose
from .errors import (
    CoordinateOverflow,
    InstanceTooLarge,
    MalformedInstance,
    NotSeriesParallel,
)
from .generators import gen_intractable, gen_random_digraph, gen_random_sp
from .model import Instance, Point, dump_instance, instance_to_json_dict, load_instance
from .oracle import DEFAULT_CAP, enumerate_frontier
from .solver import decide, frontier_rows, rows_to_csv, solve

log = logging.getLogger("interdict")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOT_SP = 2
EXIT_OVERFLOW = 3
EXIT_TOO_LARGE = 4
EXIT_MISMATCH = 5
EXIT_NO = 6


@dataclass
class RunReport:
    command: list[str]
    n: int
    m: int
    budget: int
    l_max: int
    solver: str
    frontier_size: int = 0
    wall_s: float = 0.0
    phases: dict = field(default_factory=dict)

    def log(self) -> None:
        log.info("command: %s", " ".join(self.command))
        log.info(
            "instance: n=%d m=%d B=%d L_max=%d", self.n, self.m, self.budget, self.l_max
        )
        log.info(
            "solver=%s frontier_size=%d wall=%.3fs", self.solver,
            self.frontier_size, self.wall_s,
        )
        for phase, seconds in self.phases.items():
            log.info("phase %s: %.3fs", phase, seconds)


def _write_payload(text: str, out_path: str | None) -> None:
    if out_path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _render(rows: list[dict], fmt: str) -> str:
    if fmt == "csv":
        return rows_to_csv(rows)
    return json.dumps(rows, indent=2) + "\n"


def _report(args, inst: Instance, solver: str) -> RunReport:
    return RunReport(
        command=[sys.argv[0] if sys.argv else "interdict"] + list(args._argv),
        n=inst.n,
        m=inst.m,
        budget=inst.budget,
        l_max=inst.max_length,
        solver=solver,
    )


def cmd_solve(args) -> int:
    inst = load_instance(args.instance)
    report = _report(args, inst, "dp")
    t0 = time.perf_counter()
    stats: dict = {}
    try:
        result = solve(inst, threads=args.threads, stats=stats)
    except NotSeriesParallel as exc:
        print(
            f"error: {exc}\nthe instance is not two-terminal series-parallel; "
            "try `interdict brute` for exhaustive solving on general graphs",
            file=sys.stderr,
        )
        return EXIT_NOT_SP
    report.wall_s = time.perf_counter() - t0
    report.frontier_size = len(result.frontier)
    report.phases = {
        "decompose": stats["decompose_s"],
        "dp": stats["dp_s"],
        "filter": stats["filter_s"],
        "recover": stats["recover_s"],
    }
    report.log()
    _write_payload(_render(frontier_rows(result.frontier, result.strategies), args.format), args.out)
    return EXIT_OK


def cmd_brute(args) -> int:
    inst = load_instance(args.instance)
    report = _report(args, inst, "oracle")
    t0 = time.perf_counter()
    result = enumerate_frontier(inst, cap=args.cap)
    report.wall_s = time.perf_counter() - t0
    report.frontier_size = len(result.frontier)
    report.log()
    # one deterministic witness per point: lexicographically smallest id set
    strategies = {
        p: min(result.strategies_per_point[p], key=lambda s: sorted(s.interdicted))
        for p in result.frontier.points
    }
    _write_payload(_render(frontier_rows(result.frontier, strategies), args.format), args.out)
    print(
        json.dumps({"strategies_enumerated": result.strategies_enumerated}),
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_compare(args) -> int:
    inst = load_instance(args.instance)
    report = _report(args, inst, "dp+oracle")
    t0 = time.perf_counter()
    dp_points = set(solve(inst, threads=args.threads).frontier.points)
    oracle_points = set(enumerate_frontier(inst, cap=args.cap).frontier.points)
    report.wall_s = time.perf_counter() - t0
    report.frontier_size = len(dp_points)
    report.log()
    if dp_points == oracle_points:
        print(f"frontiers identical: {len(dp_points)} points")
        return EXIT_OK
    for p in sorted(dp_points - oracle_points):
        print(f"only dp:     ({p[0]}, {p[1]})")
    for p in sorted(oracle_points - dp_points):
        print(f"only oracle: ({p[0]}, {p[1]})")
    return EXIT_MISMATCH


def cmd_gen(args) -> int:
    if args.family == "intractable":
        inst = gen_intractable(args.n)
    elif args.family == "sp-random":
        inst = gen_random_sp(
            args.leaves, args.seed, args.max_len, args.max_cost, args.budget
        )
    else:
        inst = gen_random_digraph(
            args.n, args.arc_prob, args.seed, args.max_len, args.max_cost, args.budget
        )
    if args.out in (None, "-"):
        sys.stdout.write(json.dumps(instance_to_json_dict(inst), indent=2) + "\n")
    else:
        dump_instance(inst, args.out)
    log.info("generated instance: n=%d m=%d B=%d", inst.n, inst.m, inst.budget)
    return EXIT_OK


def cmd_decide(args) -> int:
    inst = load_instance(args.instance)
    mode = "strict" if args.strict else "weak"
    decision = decide(inst, Point(args.k1, args.k2), mode, )
    if decision.answer:
        ids = ",".join(sorted(decision.witness.interdicted)) or "<empty>"
        print(
            f"yes: point ({decision.point[0]}, {decision.point[1]}) "
            f"via strategy {{{ids}}}"
        )
        return EXIT_OK
    print("no")
    return EXIT_NO


def cmd_check_sp(args) -> int:
    inst = load_instance(args.instance)
    tree = decompose(inst)
    trail: list[str] = []
    if not recompose(inst, tree, trail):
        print("recomposition failed:", file=sys.stderr)
        for msg in trail:
            print(f"  {msg}", file=sys.stderr)
        return EXIT_INPUT
    print(
        f"series-parallel: {tree.leaf_count} leaves, {len(tree.nodes)} tree nodes"
    )
    if args.dump_tree:
        with open(args.dump_tree, "w", encoding="utf-8") as fh:
            json.dump(tree.to_json_dict(), fh, indent=2)
            fh.write("\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="interdict",
        description=(
            "Exact biobjective shortest-path network interdiction on "
            "two-terminal series-parallel graphs."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p):
        p.add_argument("-o", "--out", default=None, help="output file (default stdout)")
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("solve", help="dynamic program on a series-parallel instance")
    p.add_argument("instance")
    add_output_flags(p)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("brute", help="exhaustive oracle (any directed graph)")
    p.add_argument("instance")
    add_output_flags(p)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                   help="refuse above this many feasible subsets")
    p.set_defaults(func=cmd_brute)

    p = sub.add_parser("compare", help="run both solvers and diff the frontiers")
    p.add_argument("instance")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("gen", help="write a generated instance")
    gen_sub = p.add_subparsers(dest="family", required=True)
    g = gen_sub.add_parser("intractable", help="exponential-frontier chain family")
    g.add_argument("--n", type=int, required=True, help="odd stage parameter")
    g.add_argument("-o", "--out", default=None)
    g.set_defaults(func=cmd_gen)
    g = gen_sub.add_parser("sp-random", help="random series-parallel instance")
    g.add_argument("--leaves", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--max-len", type=int, default=10)
    g.add_argument("--max-cost", type=int, default=3)
    g.add_argument("--budget", type=int, default=3)
    g.add_argument("-o", "--out", default=None)
    g.set_defaults(func=cmd_gen)
    g = gen_sub.add_parser("digraph-random", help="random DAG (oracle-only)")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--arc-prob", type=float, default=0.5)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--max-len", type=int, default=10)
    g.add_argument("--max-cost", type=int, default=3)
    g.add_argument("--budget", type=int, default=3)
    g.add_argument("-o", "--out", default=None)
    g.set_defaults(func=cmd_gen)

    p = sub.add_parser("decide", help="is some feasible objective pair >= (k1, k2)?")
    p.add_argument("instance")
    p.add_argument("k1", type=int)
    p.add_argument("k2", type=int)
    p.add_argument("--strict", action="store_true",
                   help="require the point to differ from (k1, k2)")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("check-sp", help="recognition and recomposition check only")
    p.add_argument("instance")
    p.add_argument("--dump-tree", default=None, help="write the tree as JSON")
    p.set_defaults(func=cmd_check_sp)

    return parser


def _configure_logging() -> None:
    level_name = os.environ.get("INTERDICT_LOG", "warning").upper()
    level = getattr(logging, level_name, logging.WARNING)
    logging.basicConfig(stream=sys.stderr, level=level, format="%(message)s")


def main(argv: list[str] | None = None) -> int:
    _configure_logging()
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args._argv = argv
    try:
        return args.func(args)
    except NotSeriesParallel as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_SP
    except CoordinateOverflow as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (MalformedInstance, json.JSONDecodeError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
