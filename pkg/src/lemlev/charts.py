"""Render the level distribution to an image file.

Companion to the delimited/JSON output: a grouped bar chart of token and
type counts per level, written wherever the caller points it. Uses a
non-interactive backend so it works headless.
"""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  backend must be pinned first

from .readability import ALL_LEVELS
from .report import _LEVEL_LABELS, DEFAULT_PALETTE, DocumentReport


def render_distribution_chart(
    report: DocumentReport,
    path: str | Path,
    palette: dict[str, str] | None = None,
) -> Path:
    """Write a grouped token/type bar chart; returns the path written."""
    palette = {**DEFAULT_PALETTE, **(palette or {})}
    path = Path(path)

    labels = [_LEVEL_LABELS[level.token] for level in ALL_LEVELS]
    colors = [palette[level.token] for level in ALL_LEVELS]
    tokens = [report.token_counts[level] for level in ALL_LEVELS]
    types = [report.type_counts[level] for level in ALL_LEVELS]

    positions = range(len(labels))
    width = 0.38
    fig, ax = plt.subplots(figsize=(8, 4.5))
    token_bars = ax.bar(
        [p - width / 2 for p in positions], tokens, width, color=colors, label="tokens"
    )
    type_bars = ax.bar(
        [p + width / 2 for p in positions], types, width,
        color=colors, alpha=0.55, hatch="//", label="types",
    )
    ax.bar_label(token_bars, padding=2, fontsize=8)
    ax.bar_label(type_bars, padding=2, fontsize=8)
    ax.set_xticks(list(positions), labels, rotation=20, ha="right", fontsize=9)
    ax.set_ylabel("count")
    ax.set_title("Readability level distribution")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
