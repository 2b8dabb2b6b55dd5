"""LCSk++ and LCSk string similarity metrics for long strings.

The core computes both metrics through sparse match-pair chaining; the
oracle module carries slow reference implementations for verification;
simmodel and harness provide the random-string similarity model, its
Monte Carlo experiment runner, and k selection.
"""

from . import oracle
from .core import (
    ChainResult,
    PairLimitExceeded,
    PrefixMaxIndex,
    as_symbols,
    build_events,
    continuation_lookup,
    continues,
    find_match_pairs,
    lcsk,
    lcskpp,
    precedes,
    reconstruct,
    sweep,
)
from .harness import (
    ExperimentConfig,
    ExperimentResult,
    SeparabilityReport,
    TrialStats,
    read_histogram,
    read_table,
    run_experiment,
    run_trials,
    separability_report,
    table_sweep_configs,
    write_table,
)
from .simmodel import (
    AT_RICH_DNA,
    DNA_UNIFORM,
    AlphabetDistribution,
    PairClass,
    expected_match_pairs,
    gen_similar,
    gen_unrelated,
    generate_pair,
    k_fast,
    match_probability,
    mismatch_probability,
    similar_class,
    uniform_distribution,
    unrelated_class,
)

__version__ = "0.1.0"

__all__ = [
    "AT_RICH_DNA",
    "AlphabetDistribution",
    "ChainResult",
    "DNA_UNIFORM",
    "ExperimentConfig",
    "ExperimentResult",
    "PairClass",
    "PairLimitExceeded",
    "PrefixMaxIndex",
    "SeparabilityReport",
    "TrialStats",
    "as_symbols",
    "build_events",
    "continuation_lookup",
    "continues",
    "expected_match_pairs",
    "find_match_pairs",
    "gen_similar",
    "gen_unrelated",
    "generate_pair",
    "k_fast",
    "lcsk",
    "lcskpp",
    "match_probability",
    "mismatch_probability",
    "precedes",
    "read_histogram",
    "read_table",
    "reconstruct",
    "run_experiment",
    "run_trials",
    "separability_report",
    "similar_class",
    "sweep",
    "table_sweep_configs",
    "uniform_distribution",
    "unrelated_class",
    "write_table",
]
