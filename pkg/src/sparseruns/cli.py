"""Command-line front end: compute runs of a file (or stdin) read as bytes.

Exit codes: 0 success, 1 I/O failure, 2 invalid flags, 3 verification
mismatch.
"""

import argparse
import json
import random
import sys
import time

from .oracles import naive_runs
from .runs import LceOracle, compute_runs, run_stats
from .symbols import ComparisonCounter, text_from_bytes

VERIFY_LIMIT = 4000
SPARSE_MIN_N = 256
BENCH_SEED = 2024


def _parser():
    p = argparse.ArgumentParser(
        prog="runs",
        description="Compute all runs (maximal repetitions) of the input, "
                    "treated as raw bytes.")
    p.add_argument("file", nargs="?", default=None,
                   help="input file (default: standard input)")
    p.add_argument("--algorithm", default="lyndon-sparse",
                   choices=["lyndon-sparse", "lyndon-naive-lce", "brute"])
    p.add_argument("--tau", type=int, default=0,
                   help="sampling parameter override (0 = automatic)")
    p.add_argument("--format", default="tsv", choices=["tsv", "json"])
    p.add_argument("--stats", action="store_true",
                   help="append a count / sum-of-exponents summary line")
    p.add_argument("--count-comparisons", action="store_true",
                   help="append the total number of symbol comparisons")
    p.add_argument("--verify", action="store_true",
                   help="cross-check against the brute-force oracle "
                        f"(inputs up to {VERIFY_LIMIT} bytes)")
    p.add_argument("--benchmark", default=None, metavar="N1,N2,...",
                   help="benchmark generated inputs of these sizes and emit "
                        "CSV instead of runs")
    return p


def _read_input(path):
    if path is None:
        return sys.stdin.buffer.read()
    with open(path, "rb") as f:
        return f.read()


def _pipeline(data, algorithm, tau, counter=None):
    text = text_from_bytes(data)
    if counter is not None:
        text = text.counted(counter)
    if algorithm == "brute":
        return naive_runs(text)
    if tau <= 0 and algorithm == "lyndon-sparse" and len(data) < SPARSE_MIN_N:
        algorithm = "lyndon-naive-lce"  # identical output, no index overhead
    backend = "sparse" if algorithm == "lyndon-sparse" else "naive"
    return compute_runs(text, backend=backend, tau=tau if tau > 0 else None)


def _emit(runs, fmt, out):
    if fmt == "json":
        out.write(json.dumps([
            {"start": r.start, "end": r.end, "period": r.period,
             "exponent": float(r.exponent)} for r in runs]))
        out.write("\n")
    else:
        for r in runs:
            out.write(f"{r.start}\t{r.end}\t{r.period}\n")


_GENERATORS = ["random2", "random256", "fibonacci", "equal"]


def _generate(kind, n, seed):
    if kind == "random2":
        rng = random.Random(seed)
        return bytes(rng.choice(b"ab") for _ in range(n))
    if kind == "random256":
        rng = random.Random(seed)
        return bytes(rng.randrange(256) for _ in range(n))
    if kind == "fibonacci":
        a, b = b"a", b"ab"
        while len(b) < n:
            a, b = b, b + a
        return b[:n]
    if kind == "equal":
        return b"a" * n
    raise ValueError(kind)


def _benchmark(sizes, algorithm, tau, out):
    out.write("n,generator,seed,algorithm,runs,comparisons,millis\n")
    for n in sizes:
        for kind in _GENERATORS:
            seed = BENCH_SEED
            data = _generate(kind, n, seed)
            counter = ComparisonCounter()
            t0 = time.perf_counter()
            runs = _pipeline(data, algorithm, tau, counter)
            ms = (time.perf_counter() - t0) * 1000.0
            out.write(f"{n},{kind},{seed},{algorithm},{len(runs)},"
                      f"{counter.count},{ms:.1f}\n")
    return 0


def main(argv=None):
    args = _parser().parse_args(argv)
    out = sys.stdout

    if args.benchmark is not None:
        try:
            sizes = [int(s) for s in args.benchmark.split(",") if s]
            if not sizes or any(s < 0 for s in sizes):
                raise ValueError
        except ValueError:
            print("runs: --benchmark expects a comma-separated size list",
                  file=sys.stderr)
            return 2
        return _benchmark(sizes, args.algorithm, args.tau, out)

    try:
        data = _read_input(args.file)
    except OSError as exc:
        print(f"runs: {exc}", file=sys.stderr)
        return 1

    counter = ComparisonCounter() if args.count_comparisons else None
    runs = _pipeline(data, args.algorithm, args.tau, counter)

    if args.verify:
        if len(data) > VERIFY_LIMIT:
            print(f"runs: --verify refuses inputs over {VERIFY_LIMIT} bytes",
                  file=sys.stderr)
            return 2
        expected = naive_runs(text_from_bytes(data))
        if list(runs) != list(expected):
            print("runs: verification mismatch against brute-force oracle",
                  file=sys.stderr)
            return 3

    _emit(runs, args.format, out)
    if args.stats:
        cnt, total = run_stats(runs)
        out.write(f"# runs={cnt} sum_exp={float(total):.6f}\n")
    if counter is not None:
        out.write(f"# comparisons={counter.count}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
