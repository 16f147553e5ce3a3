"""Figure rendering for the CLI report path.

Each table-producing command can render a two-panel matplotlib figure next to
its delimited output: the left panel compares the exact density with the
limiting shape at the regime's scaling, the right panel shows the scaled
residual against the predicted correction.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def _new_fig():
    fig, axes = plt.subplots(1, 2, figsize=(10.0, 3.6))
    return fig, axes


def plot_density(table: dict, meta: dict, path: str) -> None:
    """Render the global-regime comparison (Fig-1 style) to a file."""
    n = meta["n"]
    fig, (ax1, ax2) = _new_fig()
    if meta["regime"] == "strong":
        scale = n ** -0.5
        ax1.plot(table["x"], [scale * v for v in table["exact"]],
                 lw=1.2, label=r"$N^{-1/2} R_N$")
        ax1.plot(table["x"], table["leading"], "k--", lw=1.0, label="limit")
        ax2.plot(table["x"], table["residual_scaled"], lw=1.0,
                 label=r"$N^{7/2}(R_N - N^{1/2} R^0)$")
    else:
        ax1.plot(table["x"], [v / n for v in table["exact"]],
                 lw=1.2, label=r"$N^{-1} R_N$")
        ax1.plot(table["x"], table["leading"], "k--", lw=1.0, label="limit")
        ax2.plot(table["x"], table["residual_scaled"], lw=1.0,
                 label=r"$R_N - N R^0$")
        ax2.plot(table["x"], table["correction"], "k--", lw=1.0, label=r"$R^1$")
    ax1.set_xlabel("x")
    ax2.set_xlabel("x")
    ax1.legend(frameon=False, fontsize=8)
    ax2.legend(frameon=False, fontsize=8)
    fig.suptitle(_title(meta), fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_edge(table: dict, meta: dict, path: str) -> None:
    """Render the edge-regime comparison (Fig-2 style) to a file."""
    fig, (ax1, ax2) = _new_fig()
    ax1.plot(table["xi"], table["exact"], lw=1.2, label=r"$R_N$")
    ax1.plot(table["xi"], table["r0"], "k--", lw=1.0, label=r"$R^0$")
    power = "1/2" if meta["regime"] == "strong" else "1/3"
    ax2.plot(table["xi"], table["residual_scaled"], lw=1.0,
             label=rf"$N^{{{power}}}(R_N - R^0)$")
    ax2.plot(table["xi"], table["r1"], "k--", lw=1.0, label=r"$R^1$")
    ax1.set_xlabel(r"$\xi$")
    ax2.set_xlabel(r"$\xi$")
    ax1.legend(frameon=False, fontsize=8)
    ax2.legend(frameon=False, fontsize=8)
    fig.suptitle(_title(meta), fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _title(meta: dict) -> str:
    if meta["regime"] == "strong":
        return f"N = {meta['n']}, tau = {meta['tau']:.6g}"
    return f"N = {meta['n']}, alpha = {meta['alpha']:.6g} ({meta['scaling']} scaling)"
