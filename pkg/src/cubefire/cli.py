"""Command line surface: construct, verify, simulate, census, search, export.

Exit codes: 0 success, 1 invalid input, 2 verification/search negative,
3 undetermined within the step budget.  JSON output is byte-deterministic
for identical invocations.
"""

import argparse
import json
import sys

from . import dynamics, oracle, partition
from .dynamics import (
    DEFAULT_MAX_STEPS,
    Orientation,
    PARALLEL,
    Schedule,
    evolve,
    from_partition,
    hamiltonian_orientation,
)
from .partition import InvalidPartitionError, LeftCyclicPartition, validate

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NEGATIVE = 2
EXIT_UNDETERMINED = 3


def _emit(doc, out_path=None) -> None:
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fail(message: str, code: int = EXIT_INVALID) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _load_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def _even_admissible(n: int, order: int) -> bool:
    return order % 2 == 0 and 2 <= order <= (1 << n)


def _odd_admissible(n: int, order: int) -> bool:
    return n >= 4 and order % 2 == 1 and 5 <= order <= (1 << (n - 1)) - 1


def cmd_partition(args) -> int:
    n, order = args.n, args.order
    if n < 1:
        return _fail(f"dimension must be >= 1, got {n}")
    if order == 3:
        return _fail("no n-cube admits a left cyclic partition of order 3")
    try:
        if _even_admissible(n, order):
            part = partition.construct_even(n, order)
        elif _odd_admissible(n, order):
            part = partition.construct_odd(n, order)
        else:
            return _fail(
                f"order {order} not admissible for H_{n}: even orders are "
                f"2..{1 << n}, odd orders are 5..{(1 << (n - 1)) - 1} (n >= 4 only)"
            )
    except ValueError as exc:
        return _fail(str(exc))
    _emit(part.to_doc(), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        doc = _load_json(args.partition)
        part = LeftCyclicPartition.from_doc(doc)
        report = validate(part)
    except (OSError, json.JSONDecodeError, InvalidPartitionError) as exc:
        return _fail(f"cannot read partition: {exc}")
    structural = [v for v in report.violations if v.condition in ("cover", "disjointness")]
    semantic = [v for v in report.violations if v.condition not in ("cover", "disjointness")]
    _emit(
        {
            "valid": report.valid,
            "violations": [
                {
                    "condition": v.condition,
                    "class": v.class_index,
                    "vertices": list(v.vertices),
                }
                for v in report.violations
            ],
        }
    )
    if structural:
        return EXIT_INVALID
    if semantic:
        return EXIT_NEGATIVE
    return EXIT_OK


def _load_schedule(spec: str) -> Schedule:
    if spec == "parallel":
        return PARALLEL
    doc = _load_json(spec)
    blocks = doc["blocks"] if isinstance(doc, dict) else doc
    return Schedule.periodic(blocks)


def cmd_simulate(args) -> int:
    sources = [s for s in (args.from_partition, args.orientation) if s]
    if args.hamiltonian:
        sources.append("hamiltonian")
    if len(sources) != 1:
        return _fail("exactly one of --from-partition / --orientation / --hamiltonian")
    try:
        if args.from_partition:
            part = LeftCyclicPartition.from_doc(_load_json(args.from_partition))
            report = validate(part)
            if not report.valid:
                return _fail("input partition is not a valid left cyclic partition")
            orientation = from_partition(part)
        elif args.orientation:
            orientation = Orientation.from_doc(_load_json(args.orientation))
        else:
            if args.n is None:
                return _fail("--hamiltonian requires --n")
            orientation = hamiltonian_orientation(args.n)
        schedule = _load_schedule(args.schedule)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        return _fail(str(exc))

    result = evolve(orientation, schedule, args.max_steps)
    n = orientation.n
    doc = {
        "n": n,
        "total_chips": n * (1 << (n - 1)),
        "transient": result.transient,
        "period": result.period,
        "orientation_period": result.orientation_period,
        "firing_sets": [sorted(s) for s in result.firing_sets],
        "steps_executed": result.steps_executed,
        "determined": result.determined,
    }
    if args.format == "json":
        _emit(doc)
    else:
        if result.determined:
            print(f"H_{n}: transient {result.transient}, chip period {result.period}, "
                  f"orientation period {result.orientation_period}")
            for i, s in enumerate(result.firing_sets):
                print(f"  fire[{result.transient + i}] = {sorted(s)}")
        else:
            print(f"H_{n}: undetermined after {result.steps_executed} steps")
    return EXIT_OK if result.determined else EXIT_UNDETERMINED


def cmd_census(args) -> int:
    try:
        result = oracle.census(args.n)
    except ValueError as exc:
        return _fail(str(exc))
    _emit(result.to_doc())
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        outcome = oracle.search_partition(args.n, args.order)
    except ValueError as exc:
        return _fail(str(exc))
    doc = {
        "n": args.n,
        "order": args.order,
        "found": outcome.found,
        "nodes_explored": outcome.nodes_explored,
        "witness": outcome.witness.to_doc() if outcome.witness else None,
    }
    _emit(doc)
    return EXIT_OK if outcome.found else EXIT_NEGATIVE


def _binlabel(v: int, n: int) -> str:
    return format(v, f"0{n}b")


def _dot_partition(part: LeftCyclicPartition) -> str:
    n = part.n
    lines = ["graph hypercube_partition {"]
    for i, s in enumerate(part.sets):
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f'    label="S_{i}";')
        for v in s:
            lines.append(f'    "{_binlabel(v, n)}";')
        lines.append("  }")
    for d in range(n):
        step = 1 << d
        for u in range(1 << n):
            if u & step:
                continue
            lines.append(f'  "{_binlabel(u, n)}" -- "{_binlabel(u | step, n)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_orientation(orientation: Orientation) -> str:
    n = orientation.n
    lines = ["digraph hypercube_orientation {"]
    for v in range(1 << n):
        lines.append(f'  "{_binlabel(v, n)}";')
    for d in range(n):
        step = 1 << d
        plane = orientation.planes[d]
        for u in range(1 << n):
            if u & step:
                continue
            w = u | step
            a, b = (u, w) if (plane >> u) & 1 else (w, u)
            lines.append(f'  "{_binlabel(a, n)}" -> "{_binlabel(b, n)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export_dot(args) -> int:
    if bool(args.partition) == bool(args.orientation):
        return _fail("exactly one of --partition / --orientation")
    try:
        if args.partition:
            part = LeftCyclicPartition.from_doc(_load_json(args.partition))
            if not validate(part).valid:
                return _fail("partition does not validate")
            text = _dot_partition(part)
        else:
            orientation = Orientation.from_doc(_load_json(args.orientation))
            text = _dot_orientation(orientation)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        return _fail(str(exc))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubefire",
        description="Left cyclic partitions and sink-reversal chip firing on n-cubes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partition", help="construct a left cyclic partition")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("verify", help="validate a partition file")
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", help="run the chip firing game")
    p.add_argument("--n", type=int)
    p.add_argument("--from-partition")
    p.add_argument("--orientation")
    p.add_argument("--hamiltonian", action="store_true")
    p.add_argument("--schedule", default="parallel",
                   help='"parallel" or a JSON schedule file')
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("census", help="period census over all orientations")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("search", help="exhaustive partition search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("export-dot", help="emit a DOT graph description")
    p.add_argument("--partition")
    p.add_argument("--orientation")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
