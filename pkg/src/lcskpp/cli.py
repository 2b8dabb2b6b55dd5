"""Command-line front end.

Subcommands:

* ``compute``   -- LCSk++/LCSk between two sequences (files or literals).
* ``simulate``  -- Monte Carlo runs of the similarity model, CSV reports,
                   optional score-distribution figures.
* ``suggest-k`` -- pick k so the expected match-pair count stays linear.

Machine-readable results go to stdout, diagnostics to stderr.  Exit codes:
0 success, 1 I/O failure, 2 usage or parameter error.
"""

import argparse
import sys
import time
from pathlib import Path

from . import core, harness, simmodel

DEFAULT_PAIR_CAP = 10 ** 8


class UsageError(Exception):
    """Parameter problem surfaced to the user; exits with code 2."""


def _parse_alphabet(spec):
    """Distribution from a CLI string.

    Forms: ``acgt-uniform``, ``uniform:<SYMBOLS>``, or explicit
    ``A=0.5,C=0.3,G=0.1,T=0.1``.
    """
    try:
        if spec == "acgt-uniform":
            return simmodel.DNA_UNIFORM
        if spec.startswith("uniform:"):
            return simmodel.uniform_distribution(spec[len("uniform:"):])
        if "=" in spec:
            symbols = []
            probs = []
            for part in spec.split(","):
                sym, _, prob = part.partition("=")
                if len(sym) != 1 or not prob:
                    raise ValueError(f"bad alphabet entry {part!r}")
                symbols.append(sym)
                probs.append(float(prob))
            return simmodel.AlphabetDistribution("".join(symbols).encode("latin-1"), probs)
        raise ValueError(
            "expected 'acgt-uniform', 'uniform:<SYMBOLS>', or 'SYM=PROB,...'"
        )
    except ValueError as exc:
        raise UsageError(f"invalid alphabet {spec!r}: {exc}") from exc


def _read_bytes(path):
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc}") from exc


def _parse_fasta(data, record_id, path):
    records = []
    parts = None
    for line in data.split(b"\n"):
        line = line.strip()
        if not line:
            continue
        if line.startswith(b">"):
            fields = line[1:].split()
            rid = fields[0].decode("latin-1") if fields else ""
            parts = []
            records.append((rid, parts))
        elif parts is None:
            raise UsageError(f"{path}: sequence data before any FASTA header")
        else:
            parts.append(line)
    if not records:
        raise UsageError(f"{path}: no FASTA records")
    if record_id is None:
        return b"".join(records[0][1])
    for rid, parts in records:
        if rid == record_id:
            return b"".join(parts)
    raise UsageError(f"{path}: no FASTA record with id {record_id!r}")


def _strip_trailing_newline(data):
    if data.endswith(b"\r\n"):
        return data[:-2]
    if data.endswith((b"\n", b"\r")):
        return data[:-1]
    return data


def _load_sequence(args, side):
    path = getattr(args, side)
    literal = getattr(args, f"{side}_lit")
    if (path is None) == (literal is None):
        raise UsageError(f"exactly one of --{side}/--{side}-lit is required")
    if literal is not None:
        seq = core.as_symbols(literal)
    elif args.format == "fasta":
        seq = _parse_fasta(_read_bytes(path), getattr(args, f"{side}_record"), path)
        if not args.preserve_case:
            seq = seq.upper()
    else:
        seq = _strip_trailing_newline(_read_bytes(path))
    if args.alphabet is not None:
        allowed = set(_parse_alphabet(args.alphabet).symbols)
        bad = sorted(set(seq) - allowed)
        if bad:
            shown = ", ".join(repr(chr(b)) for b in bad[:5])
            raise UsageError(f"{side}: symbols outside declared alphabet: {shown}")
    return seq


def cmd_compute(args):
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    if args.reconstruct and args.mode != core.MODE_LCSKPP:
        raise UsageError("--reconstruct requires --mode lcskpp")
    x = _load_sequence(args, "x")
    y = _load_sequence(args, "y")
    started = time.perf_counter()
    try:
        result = core.sweep(x, y, args.k, args.mode, max_pairs=args.max_pairs)
    except core.PairLimitExceeded as exc:
        raise UsageError(
            f"{exc}; rerun with a larger --k (see the suggest-k subcommand) "
            f"or raise --max-pairs"
        ) from exc
    elapsed = time.perf_counter() - started
    print(result.value)
    if args.reconstruct:
        for i, j in core.reconstruct(result, result.pairs, args.k):
            print(f"{i}\t{j}")
    if args.stats:
        print(f"r={len(result.pairs)} elapsed={elapsed:.6f}s", file=sys.stderr)
    return 0


def _print_stats_line(stats, prefix=""):
    print(f"{prefix}mean={stats.mean_normalized!r} stddev={stats.stddev_normalized!r}")


def cmd_simulate(args):
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    if args.seed < 0:
        raise UsageError("--seed must be >= 0")
    if args.threads < 1:
        raise UsageError("--threads must be >= 1")
    if args.plot and not args.out:
        raise UsageError("--plot requires --out")
    dist = _parse_alphabet(args.alphabet)

    if args.both_classes:
        if args.e is None:
            raise UsageError("--both-classes requires --e")
        report = harness.separability_report(
            args.n, args.k, args.e, args.trials, args.seed, dist, threads=args.threads
        )
        _print_stats_line(report.similar.stats, "similar ")
        _print_stats_line(report.unrelated.stats, "unrelated ")
        flag = "true" if report.separable else "false"
        print(f"gap={report.mean_gap!r} separable={flag} overlap={report.overlap!r}")
        results = [report.similar, report.unrelated]
    else:
        if args.pair_class == simmodel.SIMILAR:
            if args.e is None:
                raise UsageError("--e is required for --class similar")
            pair_class = simmodel.similar_class(args.e)
        else:
            if args.e is not None:
                raise UsageError("--e only applies to --class similar")
            pair_class = simmodel.unrelated_class()
        config = harness.ExperimentConfig(
            args.n, args.k, pair_class, args.trials, args.seed, dist
        )
        result = harness.run_experiment(config, threads=args.threads)
        _print_stats_line(result.stats)
        results = [result]
        report = None

    if args.out:
        out = Path(args.out)
        if out.parent and not out.parent.exists():
            out.parent.mkdir(parents=True, exist_ok=True)
        written = harness.write_table(results, out)
        print(f"wrote {len(written)} files under {out.parent or '.'}", file=sys.stderr)
        if args.plot:
            from . import plotting  # deferred: matplotlib is slow to import

            figure = out.with_suffix(".png")
            if report is not None:
                plotting.save_separability_plot(report, figure)
            else:
                label = results[0].config.error_label
                plotting.save_score_histogram(
                    results[0].stats, figure, label=label,
                    title=f"n={args.n} k={args.k}",
                )
            print(f"wrote {figure}", file=sys.stderr)
    return 0


def cmd_suggest_k(args):
    if args.n < 1 or args.m < 1:
        raise UsageError("--n and --m must be >= 1")
    dist = _parse_alphabet(args.alphabet)
    k = simmodel.k_fast(args.n, args.m, dist)
    s = simmodel.match_probability(dist)
    estimate = simmodel.expected_match_pairs(args.n, args.m, k, dist)
    print(f"k={k} S={s!r} expected_match_pairs={estimate!r}")
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="lcskpp",
        description="LCSk++/LCSk string similarity: computation, simulation, k selection.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute the metric between two sequences")
    p.add_argument("--x", help="path to the first sequence")
    p.add_argument("--y", help="path to the second sequence")
    p.add_argument("--x-lit", help="first sequence given inline")
    p.add_argument("--y-lit", help="second sequence given inline")
    p.add_argument("--format", choices=["plain", "fasta"], default="plain",
                   help="file input format (default plain)")
    p.add_argument("--x-record", help="FASTA record id for --x (default: first record)")
    p.add_argument("--y-record", help="FASTA record id for --y (default: first record)")
    p.add_argument("--preserve-case", action="store_true",
                   help="do not uppercase FASTA sequences")
    p.add_argument("--alphabet", help="declared alphabet; inputs are validated against it")
    p.add_argument("--k", type=int, required=True, help="match length (>= 1)")
    p.add_argument("--mode", choices=[core.MODE_LCSKPP, core.MODE_LCSK],
                   default=core.MODE_LCSKPP)
    p.add_argument("--reconstruct", action="store_true",
                   help="print one 'i<TAB>j' line per matched index pair")
    p.add_argument("--stats", action="store_true",
                   help="print match-pair count and elapsed time to stderr")
    p.add_argument("--max-pairs", type=int, default=DEFAULT_PAIR_CAP,
                   help=f"abort if extraction exceeds this many match pairs "
                        f"(default {DEFAULT_PAIR_CAP})")
    p.set_defaults(handler=cmd_compute)

    p = sub.add_parser("simulate", help="Monte Carlo runs of the similarity model")
    p.add_argument("--n", type=int, required=True, help="string length")
    p.add_argument("--k", type=int, required=True, help="match length (>= 1)")
    p.add_argument("--class", dest="pair_class",
                   choices=[simmodel.UNRELATED, simmodel.SIMILAR],
                   default=simmodel.UNRELATED)
    p.add_argument("--e", type=float, help="mutation rate for similar pairs")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--alphabet", default="acgt-uniform")
    p.add_argument("--both-classes", action="store_true",
                   help="run similar and unrelated back to back and report the gap "
                        "(ignores --class)")
    p.add_argument("--out", help="destination CSV; histograms go to companion files")
    p.add_argument("--plot", action="store_true",
                   help="also render the score distribution next to --out")
    p.add_argument("--threads", type=int, default=1,
                   help="worker processes for trials (results identical for any value)")
    p.set_defaults(handler=cmd_simulate)

    p = sub.add_parser("suggest-k", help="suggest k keeping expected match pairs linear")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--alphabet", default="acgt-uniform")
    p.set_defaults(handler=cmd_suggest_k)
    return parser


def main(argv=None):
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        return int(exc.code) if exc.code else 0
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
