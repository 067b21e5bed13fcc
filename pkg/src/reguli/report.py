"""Rendering of the motivic pipeline table: aligned text, CSV, and a
coefficient-profile figure.

The figure and the delimited file are side outputs of the ``motivic`` CLI
command; they carry exactly the data of the JSON table.
"""

from __future__ import annotations

import csv
from pathlib import Path

from .motivic import PoincarePolynomial, euler

#: human-readable labels for the pipeline rows
ROW_DESCRIPTIONS = {
    "M2_infinity": "pairs, large parameter",
    "M2_zero_plus": "pairs, small parameter",
    "M2_stable": "stable locus",
    "M2": "sheaves on the quadric",
    "R": "double cover of |O(2)|",
}


def table_rows(table: dict[str, PoincarePolynomial]):
    return [(name, list(poly.coeffs), euler(poly)) for name, poly in table.items()]


def format_text_table(table: dict[str, PoincarePolynomial]) -> str:
    lines = []
    width = max(len(name) for name in table)
    for name, poly in table.items():
        lines.append(f"{name:<{width}}  e = {euler(poly):>3}   P = {poly}")
    return "\n".join(lines)


def write_csv(table: dict[str, PoincarePolynomial], path: str | Path) -> None:
    rows = table_rows(table)
    max_degree = max(len(coeffs) for _, coeffs, _ in rows)
    header = ["space", "euler"] + [f"p^{i}" for i in range(max_degree)]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for name, coeffs, e in rows:
            padded = coeffs + [0] * (max_degree - len(coeffs))
            writer.writerow([name, e] + padded)


def render_figure(table: dict[str, PoincarePolynomial], path: str | Path) -> None:
    """Bar chart of the Betti profiles of the pipeline spaces."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    rows = table_rows(table)
    max_degree = max(len(coeffs) for _, coeffs, _ in rows)
    fig, ax = plt.subplots(figsize=(9, 4.5))
    n = len(rows)
    bar_width = 0.8 / n
    for k, (name, coeffs, e) in enumerate(rows):
        padded = coeffs + [0] * (max_degree - len(coeffs))
        positions = [i + (k - (n - 1) / 2) * bar_width for i in range(max_degree)]
        ax.bar(positions, padded, width=bar_width, label=f"{name} (e={e})")
    ax.set_xticks(range(max_degree))
    ax.set_xticklabels([f"$p^{{{i}}}$" for i in range(max_degree)])
    ax.set_ylabel("coefficient")
    ax.set_title("virtual Poincare polynomials along the pipeline")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
