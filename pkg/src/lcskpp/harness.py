"""Monte Carlo experiment runner for the similarity model.

Each experiment draws ``trials`` string pairs from one pair class, computes
the normalized metric value (LCSk++ / n) per pair, and reports the mean,
the sample standard deviation (divisor trials - 1), and a 50-bin histogram
over [0, 1].  Trial t of an experiment uses the derived seed entropy
(base_seed, class_id, t), so runs are reproducible bit-for-bit and trials
may execute in parallel: scores are always aggregated in trial order,
making results independent of the worker count.

Results persist as CSV only (UTF-8, LF, full-precision decimals); figure
rendering lives in :mod:`lcskpp.plotting`.
"""

import csv
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import repeat
from pathlib import Path

import numpy as np

from .core import lcskpp
from .simmodel import (
    AT_RICH_DNA,
    DNA_UNIFORM,
    SIMILAR,
    UNRELATED,
    AlphabetDistribution,
    PairClass,
    generate_pair,
    mismatch_probability,
    similar_class,
    unrelated_class,
)

HISTOGRAM_BINS = 50

_CLASS_IDS = {UNRELATED: 0, SIMILAR: 1}


@dataclass(frozen=True)
class ExperimentConfig:
    """One Monte Carlo experiment: a pair model, a k, and a trial budget."""

    n: int
    k: int
    pair_class: PairClass
    trials: int
    base_seed: int
    dist: AlphabetDistribution = DNA_UNIFORM

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.pair_class.kind == SIMILAR:
            limit = mismatch_probability(self.dist)
            if not self.pair_class.e_similar < limit:
                raise ValueError(f"e_similar must be < {limit} for this alphabet")

    @property
    def error_label(self):
        """CSV value for the error column: 'unrelated' or the mutation rate."""
        if self.pair_class.kind == UNRELATED:
            return UNRELATED
        return repr(self.pair_class.e_similar)


@dataclass(frozen=True)
class TrialStats:
    """Normalized-score statistics of one experiment."""

    mean_normalized: float
    stddev_normalized: float
    histogram_edges: tuple
    histogram_counts: tuple
    trials: int


@dataclass(frozen=True)
class ExperimentResult:
    config: ExperimentConfig
    stats: TrialStats


@dataclass(frozen=True)
class SeparabilityReport:
    """Similar-vs-unrelated comparison at one (n, k, e_similar) setting."""

    similar: ExperimentResult
    unrelated: ExperimentResult
    mean_gap: float
    separable: bool
    overlap: float


def _trial_entropy(config, t):
    return (config.base_seed, _CLASS_IDS[config.pair_class.kind], t)


def _trial_score(config, t):
    x, y = generate_pair(config.n, config.dist, config.pair_class, _trial_entropy(config, t))
    return lcskpp(x, y, config.k) / config.n


def run_trials(config, threads=1):
    """Run the experiment and aggregate scores in trial order."""
    if threads > 1 and config.trials > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunk = max(1, config.trials // (threads * 4))
            scores = list(pool.map(_trial_score, repeat(config), range(config.trials),
                                   chunksize=chunk))
    else:
        scores = [_trial_score(config, t) for t in range(config.trials)]
    assert all(0.0 <= s <= 1.0 for s in scores)
    mean = float(np.mean(scores))
    stddev = float(np.std(scores, ddof=1)) if config.trials > 1 else 0.0
    counts, edges = np.histogram(scores, bins=HISTOGRAM_BINS, range=(0.0, 1.0))
    return TrialStats(
        mean_normalized=mean,
        stddev_normalized=stddev,
        histogram_edges=tuple(float(e) for e in edges),
        histogram_counts=tuple(int(c) for c in counts),
        trials=config.trials,
    )


def run_experiment(config, threads=1):
    return ExperimentResult(config, run_trials(config, threads=threads))


def separability_report(n, k, e_similar, trials, base_seed, dist=DNA_UNIFORM, threads=1):
    """Run both pair classes (disjoint seed streams) and compare them.

    ``separable`` asserts the expected inequality on the empirical means;
    ``overlap`` is the shared histogram mass (0 = perfectly separated, 1 =
    identical score distributions).
    """
    similar = run_experiment(
        ExperimentConfig(n, k, similar_class(e_similar), trials, base_seed, dist),
        threads=threads,
    )
    unrelated = run_experiment(
        ExperimentConfig(n, k, unrelated_class(), trials, base_seed, dist),
        threads=threads,
    )
    gap = similar.stats.mean_normalized - unrelated.stats.mean_normalized
    shared = sum(
        min(a, b)
        for a, b in zip(similar.stats.histogram_counts, unrelated.stats.histogram_counts)
    )
    return SeparabilityReport(
        similar=similar,
        unrelated=unrelated,
        mean_gap=gap,
        separable=gap > 0.0,
        overlap=shared / trials,
    )


def table_sweep_configs(base_seed, trials=200, lengths=(1000, 10000, 100000),
                        ks=(10, 20), errors=(None, 0.20, 0.10, 0.05), dist=AT_RICH_DNA):
    """The full statistics-table grid; ``errors`` entry None means unrelated.

    Defaults to the AT-rich background whose match-pair density the table's
    unrelated rows reflect.  The n = 100000 rows are long-running and meant
    for offline sweeps, not CI; trim ``lengths`` for desk-scale runs.
    """
    configs = []
    for k in ks:
        for n in lengths:
            for err in errors:
                pc = unrelated_class() if err is None else similar_class(err)
                configs.append(ExperimentConfig(n, k, pc, trials, base_seed, dist))
    return configs


def _hist_path(destination, idx):
    dest = Path(destination)
    return dest.with_name(f"{dest.stem}_hist_{idx:03d}{dest.suffix or '.csv'}")


def write_table(results, destination):
    """Persist experiment results as CSV; returns the written paths.

    The main file has one row per experiment (header ``k,n,error,
    mean_normalized,stddev_normalized,trials,seed``); each experiment's
    histogram goes to a companion file ``<stem>_hist_<idx>.csv`` with
    header ``bin_lo,bin_hi,count``.  UTF-8, LF line endings, floats at
    full round-trip precision.
    """
    dest = Path(destination)
    written = [dest]
    try:
        with open(dest, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["k", "n", "error", "mean_normalized",
                             "stddev_normalized", "trials", "seed"])
            for result in results:
                cfg, stats = result.config, result.stats
                writer.writerow([
                    cfg.k, cfg.n, cfg.error_label,
                    repr(stats.mean_normalized), repr(stats.stddev_normalized),
                    stats.trials, cfg.base_seed,
                ])
        for idx, result in enumerate(results):
            hist = _hist_path(dest, idx)
            with open(hist, "w", encoding="utf-8", newline="") as fh:
                writer = csv.writer(fh, lineterminator="\n")
                writer.writerow(["bin_lo", "bin_hi", "count"])
                edges = result.stats.histogram_edges
                for b, count in enumerate(result.stats.histogram_counts):
                    writer.writerow([repr(edges[b]), repr(edges[b + 1]), count])
            written.append(hist)
    except OSError as exc:
        raise OSError(f"cannot write results near {dest}: {exc}") from exc
    return written


def read_table(path):
    """Parse a ``write_table`` main CSV back into row dicts."""
    rows = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            rows.append({
                "k": int(row["k"]),
                "n": int(row["n"]),
                "error": row["error"] if row["error"] == UNRELATED else float(row["error"]),
                "mean_normalized": float(row["mean_normalized"]),
                "stddev_normalized": float(row["stddev_normalized"]),
                "trials": int(row["trials"]),
                "seed": int(row["seed"]),
            })
    return rows


def read_histogram(path):
    """Parse a companion histogram CSV into (bin_lo, bin_hi, count) tuples."""
    bins = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            bins.append((float(row["bin_lo"]), float(row["bin_hi"]), int(row["count"])))
    return bins
