"""Command-line front end.

Exit codes: 0 success, 1 input/data error, 2 usage error (bad arguments or
missing input files).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import dictionary as dct
from .compare import compare, report_tsv
from .exceptions import LexfreqError
from .ingest import read_annotated
from .lemma import default_ruleset, load_ruleset
from .pipeline import analyze
from .statistics import format_decimal, format_stats, stats_tsv

EXIT_OK, EXIT_DATA, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ranks(value: str) -> list[int]:
    try:
        ranks = [int(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid rank list {value!r}") from None
    if not ranks or min(ranks) < 1:
        raise argparse.ArgumentTypeError("ranks must be positive integers")
    return ranks


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--corpus", action="append", default=[], help="UTF-8 corpus file")
    common.add_argument("--ann", action="append", default=[], help="annotation sidecar TSV (one per corpus)")
    common.add_argument("--rules", help="ruleset file (default: built-in rules)")
    common.add_argument("--threshold", type=int, default=10, help="concentration frequency threshold")
    common.add_argument("--decimal", choices=("comma", "dot"), default="comma")
    common.add_argument("--rankless", choices=("keep", "skip", "fold"), default="keep")
    common.add_argument("--strict", action="store_true", help="fail on surface-fallback lemmas")
    common.add_argument("--nfc", action="store_true", help="NFC-normalize corpus text")
    common.add_argument("--out", help="output directory")

    parser = argparse.ArgumentParser(prog="lexfreq", description="Frequency dictionaries from annotated text.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("build", parents=[common], help="write dictionaries, stats and plot data")
    sub.add_parser("stats", parents=[common], help="print the index battery")
    p = sub.add_parser("coverage", parents=[common], help="print rank/coverage points")
    p.add_argument("--ranks", type=_ranks)
    p = sub.add_parser("compare", parents=[common], help="compare two corpora at equal size")
    p.add_argument("--full", action="store_true", help="also report the longer corpus at full length")
    p = sub.add_parser("top", parents=[common], help="print the most frequent lemmas")
    p.add_argument("--n", type=int, default=100)
    return parser


def _load_streams(args, expected: int):
    if len(args.corpus) != expected:
        raise UsageError(f"{args.command} needs exactly {expected} --corpus argument(s), got {len(args.corpus)}")
    if args.ann and len(args.ann) != len(args.corpus):
        raise UsageError("give one --ann per --corpus (use an empty string for none)")
    anns = args.ann or [None] * expected
    for path in args.corpus:
        if not Path(path).is_file():
            raise UsageError(f"corpus file not found: {path}")
    for path in anns:
        if path and not Path(path).is_file():
            raise UsageError(f"annotation file not found: {path}")
    return [read_annotated(c, a or None, nfc=args.nfc) for c, a in zip(args.corpus, anns)]


def _rules(args):
    if not args.rules:
        return default_ruleset()
    if not Path(args.rules).is_file():
        raise UsageError(f"ruleset file not found: {args.rules}")
    return load_ruleset(args.rules)


def _analysis(args):
    (tokens,) = _load_streams(args, 1)
    return analyze(tokens, _rules(args), args.threshold, args.rankless, args.strict)


def _fallback_line(analysis) -> str:
    return f"fallback lemmas: {analysis.fallback_count} ({100 * analysis.fallback_rate:.2f}%)"


def cmd_build(args, out) -> None:
    analysis = _analysis(args)
    sep = "," if args.decimal == "comma" else "."
    outdir = Path(args.out or ".")
    outdir.mkdir(parents=True, exist_ok=True)
    files = {
        "dictionary_freq.tsv": dct.emit(analysis.entries, dct.FREQUENCY_ALPHABETIC, sep),
        "dictionary_alpha.tsv": dct.emit(analysis.entries, dct.ALPHABETIC_FREQUENCY, sep),
        "stats.tsv": stats_tsv(analysis.stats, sep),
        "plot.tsv": dct.emit_plot_data(analysis.entries),
    }
    for name, text in files.items():
        (outdir / name).write_text(text, encoding="utf-8")
    s = analysis.stats
    out.write(f"N={s.N}\nV={s.V}\nV1={s.V1}\n{_fallback_line(analysis)}\n")


def cmd_stats(args, out) -> None:
    analysis = _analysis(args)
    sep = "," if args.decimal == "comma" else "."
    out.write(format_stats(analysis.stats, sep))
    out.write(_fallback_line(analysis) + "\n")
    if args.out:
        Path(args.out).mkdir(parents=True, exist_ok=True)
        (Path(args.out) / "stats.tsv").write_text(stats_tsv(analysis.stats, sep), encoding="utf-8")


def cmd_coverage(args, out) -> None:
    analysis = _analysis(args)
    sep = "," if args.decimal == "comma" else "."
    ranks = args.ranks or dct.default_ranks(analysis.entries)
    out.write("rank\tcoverage_pct\n")
    for point in dct.coverage_table(analysis.entries, ranks):
        out.write(f"{point.rank}\t{format_decimal(point.coverage_pct, 2, sep)}\n")


def cmd_compare(args, out) -> None:
    a, b = _load_streams(args, 2)
    sep = "," if args.decimal == "comma" else "."
    labels = (Path(args.corpus[0]).stem, Path(args.corpus[1]).stem)
    if labels[0] == labels[1]:
        labels = (labels[0] + "#1", labels[1] + "#2")
    report = compare(a, b, _rules(args), labels, args.threshold, args.rankless, include_full=args.full)
    text = report_tsv(report, sep)
    out.write(text)
    if args.out:
        Path(args.out).mkdir(parents=True, exist_ok=True)
        (Path(args.out) / "compare.tsv").write_text(text, encoding="utf-8")


def cmd_top(args, out) -> None:
    analysis = _analysis(args)
    sep = "," if args.decimal == "comma" else "."
    out.write(dct.format_top(analysis.entries, args.n, sep))


COMMANDS = {"build": cmd_build, "stats": cmd_stats, "coverage": cmd_coverage, "compare": cmd_compare, "top": cmd_top}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        COMMANDS[args.command](args, out)
    except UsageError as e:
        err.write(f"lexfreq: {e}\n")
        return EXIT_USAGE
    except (LexfreqError, OSError) as e:
        err.write(f"lexfreq: {e}\n")
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
