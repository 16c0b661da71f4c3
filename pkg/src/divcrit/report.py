"""Figure rendering: reduction traces, rule tables, and audit summaries.

Figures are written straight to files (Agg backend, no display) so the CLI
can drop them next to its text or CSV output.
"""

from __future__ import annotations

from collections import Counter

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .rules import ReductionTrace
from .tables import RuleRow, TableAuditFinding


def save_reduction_figure(trace: ReductionTrace, path: str) -> None:
    """|R_k| against the step index; log scale when no value is zero."""
    magnitudes = [abs(v) for v in trace.values]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(range(len(magnitudes)), magnitudes, marker="o", color="tab:blue")
    if min(magnitudes) > 0:
        ax.set_yscale("log")
    ps = trace.params
    ax.set_xlabel("step")
    ax.set_ylabel("|R|")
    ax.set_title(f"reduction: n={ps.n}, base {ps.t}, rule (w, u) = ({ps.w}, {ps.u})")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def save_table_figure(rows: list[RuleRow], path: str) -> None:
    """Parameter magnitudes per divisor, with unsound/blank rows marked."""
    fig, ax = plt.subplots(figsize=(7.0, 4.0))
    ns = [row.n for row in rows]
    ax.plot(ns, [abs(row.u) for row in rows], "o", label="|u|", color="tab:blue")
    ax.plot(ns, [abs(row.w) for row in rows], "s", label="|w|", color="tab:orange",
            fillstyle="none")
    flagged = [row.n for row in rows if not row.soundness.is_full or not row.rule]
    if flagged:
        ax.plot(flagged, [0] * len(flagged), "x", color="tab:red",
                label="no sound rule")
    base = rows[0].t if rows else 0
    ax.set_xlabel("divisor n")
    ax.set_ylabel("parameter magnitude")
    ax.set_title(f"rule parameters, base {base}")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def save_audit_figure(findings: list[TableAuditFinding], path: str) -> None:
    """Finding counts per kind."""
    counts = Counter(f.kind.value for f in findings)
    kinds = sorted(counts)
    fig, ax = plt.subplots(figsize=(7.0, 4.0))
    ax.bar(range(len(kinds)), [counts[k] for k in kinds], color="tab:blue")
    ax.set_xticks(range(len(kinds)))
    ax.set_xticklabels(kinds, rotation=20, ha="right")
    ax.set_ylabel("findings")
    ax.set_title("table audit findings by kind" if findings else "no findings")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
