"""Render score-distribution figures for simulation reports.

Kept separate from the harness (which persists CSV only) so headless runs
never pay the matplotlib import.  All figures land on files via the Agg
backend; nothing is ever shown interactively.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def _plot_stats(ax, stats, label, color):
    edges = list(stats.histogram_edges)
    fractions = [c / stats.trials for c in stats.histogram_counts]
    ax.stairs(fractions, edges, fill=True, alpha=0.45, color=color, label=label)
    ax.axvline(stats.mean_normalized, color=color, linestyle="--", linewidth=1)


def save_score_histogram(stats, path, label=None, title=None):
    """Histogram of normalized scores for one experiment -> image file."""
    fig, ax = plt.subplots(figsize=(6, 4))
    _plot_stats(ax, stats, label or "scores", "tab:blue")
    ax.set_xlim(0.0, 1.0)
    ax.set_xlabel("metric value / n")
    ax.set_ylabel("fraction of trials")
    if title:
        ax.set_title(title)
    if label:
        ax.legend(loc="upper right")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def save_separability_plot(report, path, title=None):
    """Overlaid similar/unrelated score histograms -> image file."""
    fig, ax = plt.subplots(figsize=(6, 4))
    e = report.similar.config.pair_class.e_similar
    _plot_stats(ax, report.similar.stats, f"similar (e={e:g})", "tab:blue")
    _plot_stats(ax, report.unrelated.stats, "unrelated", "tab:orange")
    ax.set_xlim(0.0, 1.0)
    ax.set_xlabel("metric value / n")
    ax.set_ylabel("fraction of trials")
    ax.set_title(title or f"gap={report.mean_gap:.3f} overlap={report.overlap:.3f}")
    ax.legend(loc="upper right")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
