"""Matplotlib rendering of report tables to PNG files.

Figures accompany the delimited output and the JSON report; they are a
convenience view, not a stability surface (the JSON report is the
deterministic artifact).
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def _ensure_dir(path):
    os.makedirs(path, exist_ok=True)
    return path


def dims_bar(dims: dict, stable: dict, title: str, out_path: str):
    """Bar chart of homology dimensions per degree; unstable bars hatched."""
    degrees = sorted(int(n) for n in dims)
    values = [dims[n] for n in degrees]
    fig, ax = plt.subplots(figsize=(7, 3.2))
    for n, v in zip(degrees, values):
        ok = stable.get(n, False)
        ax.bar(n, v, width=0.8,
               color="#3b6ea5" if ok else "#c8cdd4",
               hatch=None if ok else "//",
               edgecolor="#27425f" if ok else "#8a8f98")
    ax.set_xlabel("homological degree")
    ax.set_ylabel("dimension")
    ax.set_title(title)
    ax.set_xticks(degrees)
    ax.margins(y=0.15)
    if values and max(values) > 0:
        ax.set_yticks(range(0, max(values) + 1))
    fig.text(0.99, 0.01, "hatched = unstable at this window",
             ha="right", fontsize=7, color="#555555")
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return out_path


def e1_table(table: dict, title: str, out_path: str):
    """Grid of E1 dimensions: rows are total degrees, columns are u-powers."""
    degrees = sorted(int(n) for n in table)
    powers = sorted(int(i) for i in table[degrees[0]]) if degrees else []
    fig, ax = plt.subplots(figsize=(1.2 + 0.8 * len(powers), 0.8 + 0.38 * len(degrees)))
    ax.set_axis_off()
    cells, colors = [], []
    for n in degrees:
        row, crow = [], []
        for i in powers:
            cell = table[n].get(i) or table[n].get(str(i))
            if cell is None:
                row.append("-")
                crow.append("#f2f2f2")
            else:
                row.append(str(cell["dim"]) + ("" if cell["stable"] else "?"))
                crow.append("#dce8f5" if cell["stable"] else "#f5e9dc")
        cells.append(row)
        colors.append(crow)
    tab = ax.table(cellText=cells, cellColours=colors,
                   rowLabels=[f"n={n}" for n in degrees],
                   colLabels=[f"u^{i}" for i in powers],
                   loc="center")
    tab.scale(1.0, 1.2)
    ax.set_title(title + "   (? = unstable)", fontsize=9)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return out_path


def delta_ranks(verdicts: list, title: str, out_path: str):
    """Stem plot of rank(delta) per degree, verdict-coloured."""
    degrees = [v.degree for v in verdicts]
    fig, ax = plt.subplots(figsize=(7, 3.0))
    from .exactla import rank as _rank

    for v in verdicts:
        if v.verdict == "unstable" or v.matrix is None:
            ax.plot(v.degree, 0, marker="x", color="#b0b0b0", markersize=8)
            continue
        rk = _rank(v.matrix)
        color = "#2e8b57" if v.verdict == "zero" else "#c0392b"
        ax.plot([v.degree, v.degree], [0, rk], color=color)
        ax.plot(v.degree, rk, marker="o", color=color)
    ax.set_xlabel("homological degree")
    ax.set_ylabel("rank of the boundary map")
    ax.set_title(title)
    ax.set_xticks(degrees)
    ax.margins(y=0.2)
    fig.text(0.99, 0.01, "green = zero verdict, red = nonzero, x = unstable",
             ha="right", fontsize=7, color="#555555")
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return out_path


def suite_summary(entries: list, out_path: str):
    """One pass/fail row per acceptance criterion."""
    fig, ax = plt.subplots(figsize=(8, 0.42 * max(4, len(entries)) + 0.8))
    ax.set_axis_off()
    for i, e in enumerate(entries):
        y = len(entries) - i
        ok = e["verdict"] == "pass"
        ax.text(0.01, y, e["id"], fontsize=9, va="center", family="monospace")
        ax.text(0.62, y, e["statement"][:58], fontsize=7, va="center", color="#444444")
        ax.text(0.95, y, "PASS" if ok else "FAIL", fontsize=9, va="center",
                color="#2e8b57" if ok else "#c0392b", weight="bold")
    ax.set_xlim(0, 1)
    ax.set_ylim(0, len(entries) + 1)
    ax.set_title("acceptance suite")
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return out_path
