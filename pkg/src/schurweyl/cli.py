"""Command-line surface: single elements, full matrices, verification suites,
dimension tables and the scaling benchmark.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 size cap
exceeded.  Every error path prints a single-line JSON object on stderr.
JSON and CSV outputs are byte-deterministic for a fixed request and seed
(the benchmark's wall-clock columns are the one deliberate exception).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
import time

from functools import lru_cache

from .insertion_graph import amplitude, build_graph, count_paths
from .tableaux import (
    StandardTableau,
    SystemShape,
    WeylTableau,
    content,
    enumerate_partitions,
    enumerate_sswt,
    format_partition,
    parse_configuration,
    parse_partition,
    strip_zeros,
    weight,
)
from .transform import (
    DEFAULT_SIZE_CAP,
    SizeCapExceeded,
    assemble,
    census,
    check_coxeter,
    check_permutation_blocks,
    check_selection_rule,
    check_torus_action,
    check_unitarity,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_CAP = 3


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit_error(code: int, message: str) -> int:
    print(_dumps({"error": message, "exit_code": code}), file=sys.stderr)
    return code


class _Parser(argparse.ArgumentParser):
    # argparse normally prints usage text; the CLI contract wants one JSON line
    def error(self, message):
        raise SystemExit(_emit_error(EXIT_INPUT, message))


def _default_cap() -> int:
    env = os.environ.get("SWT_SIZE_CAP")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"SWT_SIZE_CAP={env!r} is not an integer") from exc
    return DEFAULT_SIZE_CAP


def _write_out(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as handle:
            handle.write(text)


def _graph_doc(graph) -> dict:
    return {
        "levels": [[p.to_string() for p in level] for level in graph.levels],
        "edges": [
            {
                "from": e.source.to_string(),
                "to": e.target.to_string(),
                "letter": e.letter,
                "taus": list(e.taus),
                "value": e.value.canonical().triples(),
            }
            for level in graph.edges
            for e in level
        ],
    }


# ---------------------------------------------------------------------------
# subcommands


def _cmd_element(args) -> int:
    shape = SystemShape(args.n, args.N)
    f = parse_configuration(args.f, n=shape.n, N=shape.N)
    lam = parse_partition(args.lam)
    if sum(lam) != shape.N:
        raise ValueError(f"lambda {format_partition(lam)} is not a partition of N={shape.N}")
    t = WeylTableau.from_string(args.t)
    y = StandardTableau.from_string(args.y)
    amp = amplitude(f, lam, t, y, shape.n)
    doc = {"amplitude": amp.triples(), "text": str(amp), "value": amp.to_float()}
    if args.trace:
        doc["trace"] = _graph_doc(build_graph(f, y, t, shape.n))
    if args.format == "json":
        print(_dumps(doc))
    else:
        print(f"{amp} ({amp.to_float():.6g})")
        if args.trace:
            print(_dumps(doc["trace"]))
    return EXIT_OK


def _cmd_matrix(args) -> int:
    shape = SystemShape(args.n, args.N)
    matrix = assemble(shape, size_cap=args.size_cap)
    if args.format == "json":
        text = _dumps(matrix.to_json_doc()) + "\n"
    elif args.format == "csv":
        text = matrix.to_csv_text()
    else:
        lines = [f"transform n={shape.n} N={shape.N}: {matrix.dim} x {matrix.dim}, {len(matrix.entries)} nonzero entries"]
        for (r, c), v in sorted(matrix.entries.items()):
            key = matrix.columns[c]
            lines.append(f"  <{','.join(str(x) for x in matrix.rows[r])}|{key.label()}> = {v} ({v.to_float():.6g})")
        text = "\n".join(lines) + "\n"
    _write_out(text, args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    shape = SystemShape(args.n, args.N)
    matrix = assemble(shape, size_cap=args.size_cap)
    rng = random.Random(args.seed)
    checks = []
    checks.append(check_unitarity(matrix, mode=args.mode).as_dict())
    checks.append(check_selection_rule(matrix).as_dict())
    checks.append(census(shape).as_dict())
    for k in range(1, shape.N):
        checks.append(check_permutation_blocks(matrix, k).as_dict())
    if shape.N >= 2:
        checks.append(check_coxeter(matrix).as_dict())
    thetas = [rng.uniform(0.0, 2.0 * math.pi) for _ in range(shape.n)]
    checks.append(check_torus_action(matrix, thetas).as_dict())
    passed = all(c["passed"] for c in checks)
    report = {"shape": {"n": shape.n, "N": shape.N}, "seed": args.seed,
              "checks": checks, "passed": passed}
    if args.format == "json":
        print(_dumps(report))
    else:
        for c in checks:
            name = c.pop("name")
            ok = c.pop("passed")
            details = ", ".join(f"{k}={v}" for k, v in c.items() if k != "rows")
            print(f"{name}: {'PASS' if ok else 'FAIL'} ({details})")
        print("all checks passed" if passed else "verification FAILED")
    return EXIT_OK if passed else EXIT_VERIFY_FAILED


def _cmd_dims(args) -> int:
    shape = SystemShape(args.n, args.N)
    report = census(shape)
    if args.format == "json":
        print(_dumps(report.as_dict()))
    elif args.format == "csv":
        print("lambda,dim_symmetric,dim_unitary,product")
        for lam, ds, du, prod in report.rows:
            print(f"\"{format_partition(lam)}\",{ds},{du},{prod}")
        print(f"total,,,{report.total}")
    else:
        width = max(len(format_partition(lam)) for lam, *_ in report.rows)
        for lam, ds, du, prod in report.rows:
            print(f"{format_partition(lam):<{width}}  dim_sym={ds:<6} dim_uni={du:<6} product={prod}")
        status = "OK" if report.passed else "MISMATCH"
        print(f"total {report.total} / expected {report.expected} [{status}]")
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


@lru_cache(maxsize=None)
def _sswt_by_weight(lam, n: int):
    groups: dict[tuple[int, ...], list[WeylTableau]] = {}
    for t in enumerate_sswt(lam, n):
        groups.setdefault(weight(t, n), []).append(t)
    return {w: tuple(ts) for w, ts in groups.items()}


def _random_syt(rng: random.Random, lam) -> StandardTableau:
    """Seeded standard tableau via a random corner-removal walk (cheap; the
    distribution need not be uniform)."""
    shape = list(lam)
    rows: list[list[int]] = [[0] * part for part in shape]
    for letter in range(sum(lam), 0, -1):
        corners = [r for r in range(len(shape))
                   if shape[r] > 0 and (r == len(shape) - 1 or shape[r] > shape[r + 1])]
        r = corners[rng.randrange(len(corners))]
        rows[r][shape[r] - 1] = letter
        shape[r] -= 1
    return StandardTableau(tuple(tuple(row) for row in rows))


def _bench_instance(rng: random.Random, n: int, N: int):
    """Seeded random element with matching letter counts.  The configuration
    is drawn first; lambda, t and y are drawn among the weight-compatible
    labels (zero amplitudes remain possible and are legitimate samples)."""
    f = tuple(rng.randint(1, n) for _ in range(N))
    c = content(f, n)
    feasible = []
    for lam_p in enumerate_partitions(N, n):
        lam = strip_zeros(lam_p)
        ts = _sswt_by_weight(lam, n).get(c)
        if ts:
            feasible.append((lam, ts))
    lam, ts = feasible[rng.randrange(len(feasible))]
    t = ts[rng.randrange(len(ts))]
    y = _random_syt(rng, lam)
    return f, lam, t, y


def _cmd_bench(args) -> int:
    rng = random.Random(args.seed)
    print("N,mean_ns_dp,mean_ns_paths,path_count")
    for N in range(args.min_N, args.max_N + 1):
        instances = [_bench_instance(rng, args.n, N) for _ in range(args.samples)]
        dp_total = 0
        paths_total = 0
        paths_timed = 0
        count_total = 0
        for f, lam, t, y in instances:
            start = time.perf_counter_ns()
            amplitude(f, lam, t, y, args.n)
            dp_total += time.perf_counter_ns() - start
            graph = build_graph(f, y, t, args.n)
            n_paths = count_paths(graph)
            count_total += n_paths
            if n_paths <= args.path_cap:
                start = time.perf_counter_ns()
                amplitude(f, lam, t, y, args.n, by_paths=True)
                paths_total += time.perf_counter_ns() - start
                paths_timed += 1
        mean_dp = dp_total // len(instances)
        mean_paths = paths_total // paths_timed if paths_timed else ""
        mean_count = count_total / len(instances)
        print(f"{N},{mean_dp},{mean_paths},{mean_count:g}")
    print()
    print("shape,rows,assembly_ms")
    for pair in args.assembly_shapes.split(";"):
        if not pair:
            continue
        n_s, N_s = pair.split(",")
        shape = SystemShape(int(n_s), int(N_s))
        start = time.perf_counter()
        matrix = assemble(shape, size_cap=None)
        elapsed = (time.perf_counter() - start) * 1e3
        print(f"{shape.n}x{shape.N},{matrix.dim},{elapsed:.1f}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_shape_args(sub, require: bool = True):
    sub.add_argument("--n", type=int, required=require, help="single-node dimension n = 2s+1")
    sub.add_argument("--N", type=int, required=require, help="number of chain nodes")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="schurweyl", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    element = subs.add_parser("element", help="one matrix element <f|lambda,t,y>")
    _add_shape_args(element)
    element.add_argument("--f", required=True, help="configuration, e.g. 1,3,2,1")
    element.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. 3,1")
    element.add_argument("--t", required=True, help="Weyl tableau, e.g. 1,1,3/2")
    element.add_argument("--y", required=True, help="standard tableau, e.g. 1,2,4/3")
    element.add_argument("--format", choices=("json", "text"), default="text")
    element.add_argument("--trace", action="store_true", help="also emit the insertion graph")
    element.set_defaults(handler=_cmd_element)

    matrix = subs.add_parser("matrix", help="assemble and emit the full transform")
    _add_shape_args(matrix)
    matrix.add_argument("--format", choices=("json", "csv", "text"), default="json")
    matrix.add_argument("--size-cap", type=int, default=None, help="maximum row count (default 4096 or SWT_SIZE_CAP)")
    matrix.add_argument("--out", default=None, help="write to a file instead of stdout")
    matrix.set_defaults(handler=_cmd_matrix)

    verify = subs.add_parser("verify", help="run the verification suite")
    _add_shape_args(verify)
    verify.add_argument("--mode", choices=("exact", "float"), default="exact", help="unitarity check arithmetic")
    verify.add_argument("--seed", type=int, default=0, help="seed for the random rotation angles")
    verify.add_argument("--format", choices=("json", "text"), default="json")
    verify.add_argument("--size-cap", type=int, default=None)
    verify.set_defaults(handler=_cmd_verify)

    dims = subs.add_parser("dims", help="dimension census per sector")
    _add_shape_args(dims)
    dims.add_argument("--format", choices=("json", "csv", "text"), default="text")
    dims.set_defaults(handler=_cmd_dims)

    bench = subs.add_parser("bench", help="per-amplitude scaling table and assembly timings")
    bench.add_argument("--n", type=int, default=2)
    bench.add_argument("--min-N", dest="min_N", type=int, default=4)
    bench.add_argument("--max-N", dest="max_N", type=int, default=16)
    bench.add_argument("--samples", type=int, default=20)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--path-cap", dest="path_cap", type=int, default=20000,
                       help="skip literal path timing above this many paths")
    bench.add_argument("--assembly-shapes", default="2,2;2,3;2,4;2,5;3,2;3,3",
                       help="semicolon-separated n,N pairs timed for full assembly")
    bench.set_defaults(handler=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "size_cap", "absent") is None:
        try:
            args.size_cap = _default_cap()
        except ValueError as exc:
            return _emit_error(EXIT_INPUT, str(exc))
    try:
        return args.handler(args)
    except SizeCapExceeded as exc:
        return _emit_error(EXIT_CAP, str(exc))
    except (ValueError, ArithmeticError, OSError) as exc:
        return _emit_error(EXIT_INPUT, str(exc))


if __name__ == "__main__":
    sys.exit(main())
