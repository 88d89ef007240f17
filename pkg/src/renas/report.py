"""Report rendering: aligned tables for humans, TSV and JSON for machines,
and matplotlib figures written next to the delimited output."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .evaluation import METRIC_NAMES, MetricsReport
from .scoring import RecommendResult

_PLOT_METRICS = ("precision", "recall", "f1", "averagePrecision", "reciprocalRank")
_PLOT_LABELS = {
    "precision": "precision",
    "recall": "recall",
    "f1": "F1",
    "averagePrecision": "MAP",
    "reciprocalRank": "MRR",
    "top1": "top-1 recall",
    "top5": "top-5 recall",
    "top10": "top-10 recall",
}


def _align(rows: list[list[str]]) -> str:
    if not rows:
        return ""
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return "\n".join(
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
        for row in rows
    )


def _tsv(rows: list[list[str]]) -> str:
    return "".join("\t".join(row) + "\n" for row in rows)


# -- recommendations ----------------------------------------------------------

_REC_COLUMNS = (
    "rank", "score", "scoreSim", "scoreRel", "distance", "kind", "name",
    "location", "suggested", "path", "operation",
)


def _recommendation_rows(result: RecommendResult, precise: bool) -> list[list[str]]:
    fmt = (lambda x: repr(x)) if precise else (lambda x: f"{x:.4f}")
    rows = [list(_REC_COLUMNS)]
    for rank, rec in enumerate(result.recommendations, start=1):
        entity = rec.entity
        rows.append(
            [
                str(rank),
                fmt(rec.score),
                fmt(rec.score_sim),
                fmt(rec.score_rel),
                str(rec.distance),
                entity.kind,
                entity.name,
                f"{entity.file}:{entity.line}:{entity.col}",
                rec.suggested_name or "-",
                ">".join(rec.path),
                rec.applied_op.describe(),
            ]
        )
    return rows


def recommendation_table(result: RecommendResult) -> str:
    seed = result.seed
    lines = [
        f"seed: {seed.file}:{seed.line} {seed.kind} "
        f"{seed.name} -> {result.new_name.raw}",
        f"operations: {result.ops.describe()}",
        f"mode: {result.config.mode} (alpha={result.config.alpha:g}, "
        f"beta={result.config.beta:g}, cap={result.cap})",
    ]
    for note in result.notes:
        lines.append(f"note: {note}")
    if result.recommendations:
        lines.append(_align(_recommendation_rows(result, precise=False)))
    else:
        lines.append("no recommendations")
    return "\n".join(lines) + "\n"


def recommendation_tsv(result: RecommendResult) -> str:
    return _tsv(_recommendation_rows(result, precise=True))


def recommendation_payload(result: RecommendResult) -> dict:
    seed = result.seed
    return {
        "seed": {
            "id": seed.id,
            "kind": seed.kind,
            "name": seed.name,
            "file": seed.file,
            "line": seed.line,
            "col": seed.col,
            "newName": result.new_name.raw,
        },
        "operations": [op.describe() for op in result.ops.ops],
        "eligibleOperations": [
            op.describe() for op in result.ops.recommend_eligible
        ],
        "config": {
            "alpha": result.config.alpha,
            "beta": result.config.beta,
            "mode": result.config.mode,
            "cap": result.cap,
        },
        "notes": list(result.notes),
        "recommendations": [
            {
                "rank": rank,
                "id": rec.entity.id,
                "name": rec.entity.name,
                "kind": rec.entity.kind,
                "file": rec.entity.file,
                "line": rec.entity.line,
                "col": rec.entity.col,
                "scoreSim": rec.score_sim,
                "scoreRel": rec.score_rel,
                "score": rec.score,
                "distance": rec.distance,
                "path": list(rec.path),
                "operation": rec.applied_op.describe(),
                "suggestedName": rec.suggested_name,
            }
            for rank, rec in enumerate(result.recommendations, start=1)
        ],
    }


# -- evaluation reports --------------------------------------------------------


def _metric_cells(values: dict[str, float], precise: bool) -> list[str]:
    fmt = (lambda x: repr(x)) if precise else (lambda x: f"{x:.4f}")
    return [fmt(values[name]) for name in METRIC_NAMES]


def metrics_table(report: MetricsReport) -> str:
    header = ["scope", "project", "set", "seed"] + list(METRIC_NAMES)
    rows = [header]
    for query in report.per_query:
        rows.append(
            ["query", query.project, query.set_id, query.seed]
            + _metric_cells(query.values, precise=False)
        )
    for project, set_id, values in report.per_set:
        rows.append(
            ["set", project, set_id, "-"] + _metric_cells(values, precise=False)
        )
    for project, values in report.per_project:
        rows.append(
            ["project", project, "-", "-"] + _metric_cells(values, precise=False)
        )
    rows.append(
        ["overall", "-", "-", "-"] + _metric_cells(report.aggregates, precise=False)
    )
    lines = [_align(rows)]
    skipped = report.diagnostics.get("skippedCount", 0)
    lines.append(
        f"queries: {report.diagnostics.get('queries', 0)}, skipped: {skipped}"
    )
    for item in report.diagnostics.get("skipped", []):
        lines.append(
            f"skipped: {item['project']}/{item['set']} {item['member']}: "
            f"{item['reason']}"
        )
    return "\n".join(lines) + "\n"


def metrics_per_query_tsv(report: MetricsReport) -> str:
    rows = [["project", "set", "seed"] + list(METRIC_NAMES)]
    for query in report.per_query:
        rows.append(
            [query.project, query.set_id, query.seed]
            + _metric_cells(query.values, precise=True)
        )
    return _tsv(rows)


def metrics_summary_tsv(report: MetricsReport) -> str:
    rows = [["scope", "project", "set"] + list(METRIC_NAMES)]
    for project, set_id, values in report.per_set:
        rows.append(["set", project, set_id] + _metric_cells(values, precise=True))
    for project, values in report.per_project:
        rows.append(["project", project, "-"] + _metric_cells(values, precise=True))
    rows.append(["overall", "-", "-"] + _metric_cells(report.aggregates, precise=True))
    return _tsv(rows)


def sweep_summary_tsv(sweep: list[tuple[float, MetricsReport]]) -> str:
    rows = [["alpha"] + list(METRIC_NAMES)]
    for alpha, report in sweep:
        rows.append([repr(alpha)] + _metric_cells(report.aggregates, precise=True))
    return _tsv(rows)


# -- figures -------------------------------------------------------------------


def plot_project_metrics(report: MetricsReport, path: str | Path) -> None:
    """Grouped bars of the headline metrics per project, plus the overall."""
    groups = [(project, values) for project, values in report.per_project]
    groups.append(("overall", report.aggregates))
    labels = [name for name, _ in groups]
    fig, ax = plt.subplots(figsize=(max(6.0, 1.8 * len(groups)), 4.0))
    width = 0.8 / len(_PLOT_METRICS)
    for m_idx, metric in enumerate(_PLOT_METRICS):
        xs = [g_idx + m_idx * width for g_idx in range(len(groups))]
        ax.bar(
            xs,
            [values[metric] for _, values in groups],
            width=width,
            label=_PLOT_LABELS[metric],
        )
    ax.set_xticks([g_idx + 0.4 - width / 2 for g_idx in range(len(groups))])
    ax.set_xticklabels(labels, rotation=15, ha="right")
    ax.set_ylim(0.0, 1.05)
    ax.set_ylabel("score")
    ax.set_title("co-rename recommendation quality")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_alpha_sweep(
    sweep: list[tuple[float, MetricsReport]], path: str | Path
) -> None:
    """Metric curves over the similarity/relationship mixing ratio."""
    alphas = [alpha for alpha, _ in sweep]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for metric in ("f1", "averagePrecision", "reciprocalRank", "top5"):
        ax.plot(
            alphas,
            [report.aggregates[metric] for _, report in sweep],
            marker="o",
            label=_PLOT_LABELS[metric],
        )
    ax.set_xlabel("alpha (similarity weight)")
    ax.set_ylabel("score")
    ax.set_ylim(0.0, 1.05)
    ax.set_title("priority mixing sweep")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
