"""Command-line surface: period report, batch spliced-occurrence queries,
bipartite graph matching, benchmarks, and an exhaustive small-string selftest.

Exit codes: 0 success, 1 usage or input error, 2 oracle mismatch.
"""

import argparse
import itertools
import random
import sys

from .bench import run_bipartite_bench, run_build_bench, run_query_bench
from .bipartite import GraphFormatError, match_all, read_graph_file
from .index import PrefSufIndex, expand
from .oracle import naive_bipartite, naive_prefsuf
from .text_core import period, read_text_file

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; this surface reserves 2 for
    oracle mismatches, so downgrade usage errors to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fail(message: str) -> int:
    print(f"prefsuf: {message}", file=sys.stderr)
    return EXIT_USAGE


def cmd_period(args) -> int:
    text = read_text_file(args.text_file, strip_newline=args.strip_newline)
    try:
        info = period(text)
    except ValueError as exc:
        return _fail(f"{args.text_file}: {exc}")
    print(f"period={info.p} periodic={'true' if info.periodic else 'false'}")
    return EXIT_OK


def cmd_query(args) -> int:
    text = read_text_file(args.text_file, strip_newline=args.strip_newline)
    try:
        index = PrefSufIndex(text)
    except ValueError as exc:
        return _fail(f"{args.text_file}: {exc}")
    with open(args.queries_file, "rb") as fh:
        lines = fh.read().split(b"\n")
    had_range_error = False
    mismatch = False
    for line_no, raw in enumerate(lines, start=1):
        if not raw:
            continue
        fields = raw.split(b"\t")
        try:
            if len(fields) != 2:
                raise ValueError
            i, j = int(fields[0]), int(fields[1])
        except ValueError:
            return _fail(f"{args.queries_file} line {line_no}: expected 'i<TAB>j' in decimal")
        try:
            prog = index.query(i, j)
        except IndexError:
            print(f"{i}\t{j}\tERR")
            had_range_error = True
            continue
        print(f"{i}\t{j}\t{prog.start}\t{prog.step}\t{prog.count}")
        if args.oracle and expand(prog) != naive_prefsuf(text, i, j):
            mismatch = True
    if args.oracle:
        print(f"# oracle: {'MISMATCH' if mismatch else 'OK'}")
    if mismatch:
        return EXIT_MISMATCH
    return EXIT_USAGE if had_range_error else EXIT_OK


def _match_line(match) -> str:
    splits = match.splits
    first = splits.start + (splits.count - 1) * splits.step
    return f"{match.u_id}\t{match.v_id}\t{first}\t{splits.step}\t{splits.count}"


def cmd_bipartite(args) -> int:
    pattern = read_text_file(args.pattern_file, strip_newline=args.strip_newline)
    try:
        graph = read_graph_file(args.graph_file)
        matches = match_all(graph, pattern)
    except GraphFormatError as exc:
        return _fail(f"{args.graph_file}: {exc}")
    except ValueError as exc:
        return _fail(str(exc))
    for match in matches:
        print(_match_line(match))
    if args.oracle:
        got = {
            (match.u_id, match.v_id, length)
            for match in matches
            for length in expand(match.splits)
        }
        want = {
            (u_id, v_id, length)
            for u_id, v_id, lengths in naive_bipartite(graph, pattern)
            for length in lengths
        }
        mismatch = got != want
        print(f"# oracle: {'MISMATCH' if mismatch else 'OK'}")
        if mismatch:
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_bench(args) -> int:
    seed = args.seed if args.seed is not None else random.randrange(2**32)
    if args.mode == "build":
        reps = args.repetitions or 3
        lines = run_build_bench(args.size, reps, seed)
    elif args.mode == "query":
        reps = args.repetitions or 1_000_000
        lines = run_query_bench(args.size, reps, seed, threads=args.threads)
    else:
        reps = args.repetitions or 5
        edges = args.edges or max(1, args.size // 100)
        lines = run_bipartite_bench(args.size, edges, reps, seed)
    for line in lines:
        print(line)
    return EXIT_OK


def cmd_selftest(args) -> int:
    texts = 0
    queries = 0
    for n in range(1, args.max_len + 1):
        for letters in itertools.product(b"ab", repeat=n):
            text = bytes(letters)
            index = PrefSufIndex(text)
            texts += 1
            for i in range(n):
                for j in range(n):
                    queries += 1
                    if expand(index.query(i, j)) != naive_prefsuf(text, i, j):
                        print(
                            f"selftest MISMATCH: text={text!r} i={i} j={j}",
                            file=sys.stderr,
                        )
                        return EXIT_MISMATCH
    print(f"selftest: {texts} texts, {queries} queries, all OK")
    return EXIT_OK


def _add_strip_flag(parser) -> None:
    parser.add_argument(
        "--strip-newline",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="drop one trailing newline byte from text/pattern files",
    )


def _build_parser() -> _Parser:
    parser = _Parser(prog="prefsuf", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("period", help="print the shortest period of a text file")
    p.add_argument("text_file")
    _add_strip_flag(p)
    p.set_defaults(fn=cmd_period)

    p = sub.add_parser("query", help="answer a batch of i<TAB>j spliced-occurrence queries")
    p.add_argument("text_file")
    p.add_argument("queries_file")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    _add_strip_flag(p)
    p.set_defaults(fn=cmd_query)

    p = sub.add_parser("bipartite", help="report pattern occurrences spanning graph edges")
    p.add_argument("pattern_file")
    p.add_argument("graph_file")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    _add_strip_flag(p)
    p.set_defaults(fn=cmd_bipartite)

    p = sub.add_parser("bench", help="time index builds, queries, or graph matching")
    p.add_argument("mode", choices=("build", "query", "bipartite"))
    p.add_argument("--size", type=int, required=True, help="text length or total label length")
    p.add_argument("--repetitions", type=int, help="builds / queries / match passes")
    p.add_argument("--edges", type=int, help="edge count (bipartite mode)")
    p.add_argument("--seed", type=int, help="RNG seed (default: fresh, printed either way)")
    p.add_argument("--threads", type=int, default=1, help="concurrent query readers")
    p.set_defaults(fn=cmd_bench)

    p = sub.add_parser("selftest", help="exhaustive oracle check over small binary texts")
    p.add_argument("--max-len", type=int, default=10, help="largest text length (default 10)")
    p.set_defaults(fn=cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except OSError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
