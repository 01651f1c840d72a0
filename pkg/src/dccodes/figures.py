"""Matplotlib renderers for the report path.

Figures are written next to the delimited output when a figures
directory is requested on the CLI; nothing here is needed for the
algebra or the searches themselves.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def _safe_poly(f_text: str) -> str:
    return f_text.replace("^", "").replace("+", "_")


def weight_distribution_path(directory: str, tag: str, m: int, f_text: str, alpha: int | None = None) -> str:
    name = f"wd_{tag}_m{m:02d}"
    if alpha is not None:
        name += f"_a{alpha}"
    return os.path.join(directory, f"{name}_{_safe_poly(f_text)}.png")


def render_weight_distribution(counts, title: str, path: str) -> str:
    """Bar chart of codeword counts per weight, log-scaled, saved to path."""
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    weights = [w for w, c in enumerate(counts) if c]
    values = [counts[w] for w in weights]
    fig, ax = plt.subplots(figsize=(7.0, 4.0))
    ax.bar(weights, values, width=0.8, color="#33658a")
    ax.set_yscale("log")
    ax.set_xlim(-0.5, len(counts) - 0.5)
    ax.set_xlabel("codeword weight")
    ax.set_ylabel("codewords")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_search_summary(reports, path: str) -> str:
    """Per-m counts of found, extremal, and LCD reports as grouped bars."""
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    ms = sorted({r.m for r in reports})
    total = [sum(1 for r in reports if r.m == m) for m in ms]
    extremal = [sum(1 for r in reports if r.m == m and r.extremal) for m in ms]
    lcd = [sum(1 for r in reports if r.m == m and r.lcd) for m in ms]
    fig, ax = plt.subplots(figsize=(7.0, 4.0))
    xs = range(len(ms))
    ax.bar([x - 0.25 for x in xs], total, width=0.25, label="found", color="#33658a")
    ax.bar(list(xs), extremal, width=0.25, label="extremal", color="#f26419")
    ax.bar([x + 0.25 for x in xs], lcd, width=0.25, label="lcd", color="#55852f")
    ax.set_xticks(list(xs))
    ax.set_xticklabels([str(m) for m in ms])
    ax.set_xlabel("m")
    ax.set_ylabel("reports")
    ax.set_title("search results per m")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
