"""Evaluation harness for co-renamed-set datasets.

For every member of each co-renamed set, the recommender is seeded with
that rename and judged on how well it finds the other members: set-style
precision/recall/F1 at the threshold, and rank-style AP/RR/top-k recall
over the full ordering. Aggregation is macro: queries average into sets,
sets into projects, projects into the overall figures.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .errors import DatasetFormatError, EntityResolutionError
from .graph import build_graph
from .scoring import RANKED, ScoreConfig, recommend
from .sourcemodel.model import ENTITY_KINDS, SourceModel
from .sourcemodel.project import parse_project

TOP_KS = (1, 5, 10)

METRIC_NAMES = (
    "precision",
    "recall",
    "f1",
    "averagePrecision",
    "reciprocalRank",
    "top1",
    "top5",
    "top10",
)


@dataclass(frozen=True)
class RenameRecord:
    file: str
    line: int
    kind: str
    old_name: str
    new_name: str

    def __post_init__(self) -> None:
        if self.old_name == self.new_name:
            raise DatasetFormatError(
                f"member {self.file}:{self.line}: oldName equals newName "
                f"({self.old_name!r})"
            )
        if self.kind not in ENTITY_KINDS:
            raise DatasetFormatError(
                f"member {self.file}:{self.line}: unknown kind {self.kind!r}"
            )

    def describe(self) -> str:
        return f"{self.file}:{self.line} {self.kind} {self.old_name}->{self.new_name}"


@dataclass
class CoRenamedSet:
    id: str
    members: list[RenameRecord]


@dataclass
class ProjectDataset:
    project: str
    root: str
    sets: list[CoRenamedSet]


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DatasetFormatError(message)


def load_dataset(path: str | Path) -> list[ProjectDataset]:
    """Load and validate a dataset file (schema documented in the README).

    Project roots are resolved against the dataset file's directory but not
    checked for existence; a missing root surfaces at evaluation time.
    """
    path = Path(path)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DatasetFormatError(f"{path}: invalid JSON: {exc}") from exc

    if isinstance(payload, dict):
        payload = [payload]
    _require(isinstance(payload, list), f"{path}: expected an object or a list")

    datasets: list[ProjectDataset] = []
    for p_idx, raw_project in enumerate(payload):
        where = f"{path}: projects[{p_idx}]"
        _require(isinstance(raw_project, dict), f"{where}: expected an object")
        for key in ("project", "projectRoot", "sets"):
            _require(key in raw_project, f"{where}: missing field {key!r}")
        _require(
            isinstance(raw_project["sets"], list) and raw_project["sets"],
            f"{where}: sets must be a non-empty list",
        )
        root = Path(raw_project["projectRoot"])
        if not root.is_absolute():
            root = path.parent / root
        sets = []
        for s_idx, raw_set in enumerate(raw_project["sets"]):
            set_where = f"{where}.sets[{s_idx}]"
            _require(isinstance(raw_set, dict), f"{set_where}: expected an object")
            _require("id" in raw_set, f"{set_where}: missing field 'id'")
            members_raw = raw_set.get("members")
            _require(
                isinstance(members_raw, list) and len(members_raw) >= 2,
                f"{set_where}: members must list at least two renames",
            )
            members = []
            for m_idx, raw_member in enumerate(members_raw):
                member_where = f"{set_where}.members[{m_idx}]"
                _require(
                    isinstance(raw_member, dict), f"{member_where}: expected an object"
                )
                for key in ("file", "line", "kind", "oldName", "newName"):
                    _require(
                        key in raw_member, f"{member_where}: missing field {key!r}"
                    )
                _require(
                    isinstance(raw_member["line"], int),
                    f"{member_where}: line must be an integer",
                )
                try:
                    members.append(
                        RenameRecord(
                            file=raw_member["file"],
                            line=raw_member["line"],
                            kind=raw_member["kind"],
                            old_name=raw_member["oldName"],
                            new_name=raw_member["newName"],
                        )
                    )
                except DatasetFormatError as exc:
                    raise DatasetFormatError(f"{member_where}: {exc}") from None
            sets.append(CoRenamedSet(id=str(raw_set["id"]), members=members))
        datasets.append(
            ProjectDataset(
                project=str(raw_project["project"]), root=str(root), sets=sets
            )
        )
    return datasets


# -- metric primitives -------------------------------------------------------


def precision_recall_f1(
    recommended: set[str], relevant: set[str]
) -> tuple[float, float, float]:
    hits = len(recommended & relevant)
    precision = hits / len(recommended) if recommended else 0.0
    recall = hits / len(relevant) if relevant else 0.0
    f1 = (
        2 * precision * recall / (precision + recall)
        if precision + recall > 0
        else 0.0
    )
    return precision, recall, f1


def average_precision(ranking: list[str], relevant: set[str]) -> float:
    """Mean of precision-at-rank over the relevant items; unranked relevant
    items contribute zero."""
    if not relevant:
        raise ValueError("average precision needs a non-empty relevant set")
    hits = 0
    total = 0.0
    for rank, item in enumerate(ranking, start=1):
        if item in relevant:
            hits += 1
            total += hits / rank
    return total / len(relevant)


def reciprocal_rank(ranking: list[str], relevant: set[str]) -> float:
    for rank, item in enumerate(ranking, start=1):
        if item in relevant:
            return 1.0 / rank
    return 0.0


def top_k_recall(ranking: list[str], relevant: set[str], k: int) -> float:
    if not relevant:
        raise ValueError("top-k recall needs a non-empty relevant set")
    return len(set(ranking[:k]) & relevant) / len(relevant)


# -- evaluation ---------------------------------------------------------------


@dataclass
class QueryMetrics:
    project: str
    set_id: str
    seed: str
    values: dict[str, float]


@dataclass
class MetricsReport:
    per_query: list[QueryMetrics] = field(default_factory=list)
    per_set: list[tuple[str, str, dict[str, float]]] = field(default_factory=list)
    per_project: list[tuple[str, dict[str, float]]] = field(default_factory=list)
    aggregates: dict[str, float] = field(default_factory=dict)
    diagnostics: dict = field(default_factory=dict)

    def to_payload(self) -> dict:
        return {
            "perQuery": [
                {
                    "project": q.project,
                    "set": q.set_id,
                    "seed": q.seed,
                    **q.values,
                }
                for q in self.per_query
            ],
            "perSet": [
                {"project": project, "set": set_id, **values}
                for project, set_id, values in self.per_set
            ],
            "perProject": [
                {"project": project, **values} for project, values in self.per_project
            ],
            "aggregates": dict(self.aggregates),
            "diagnostics": self.diagnostics,
        }


def _mean_values(rows: list[dict[str, float]]) -> dict[str, float]:
    return {
        name: sum(row[name] for row in rows) / len(rows) for name in METRIC_NAMES
    }


def evaluate(
    datasets: list[ProjectDataset],
    config: ScoreConfig | None = None,
    models: Mapping[str, SourceModel] | None = None,
) -> MetricsReport:
    """Run every query of every co-renamed set and aggregate macro means.

    ``models`` may supply pre-parsed projects keyed by dataset root to avoid
    re-indexing across sweeps.
    """
    if config is None:
        config = ScoreConfig()
    report = MetricsReport()
    skipped: list[dict] = []

    project_rows: list[dict[str, float]] = []
    for dataset in datasets:
        if models is not None and dataset.root in models:
            model = models[dataset.root]
        else:
            model = parse_project(dataset.root)
        graph = build_graph(model)

        set_rows: list[dict[str, float]] = []
        for co_set in dataset.sets:
            resolved: dict[int, str] = {}
            for idx, member in enumerate(co_set.members):
                try:
                    resolved[idx] = model.resolve(
                        member.file, member.line, member.old_name, member.kind
                    ).id
                except EntityResolutionError as exc:
                    skipped.append(
                        {
                            "project": dataset.project,
                            "set": co_set.id,
                            "member": member.describe(),
                            "reason": str(exc),
                        }
                    )

            query_rows: list[dict[str, float]] = []
            for idx, member in enumerate(co_set.members):
                if idx not in resolved:
                    continue
                relevant = {
                    eid for other, eid in resolved.items() if other != idx
                }
                if not relevant:
                    skipped.append(
                        {
                            "project": dataset.project,
                            "set": co_set.id,
                            "member": member.describe(),
                            "reason": "no other member of the set resolved",
                        }
                    )
                    continue
                seed = model.entities[resolved[idx]]
                ranked_config = ScoreConfig(
                    alpha=config.alpha,
                    beta=config.beta,
                    mode=RANKED,
                    cap=config.cap,
                )
                result = recommend(model, graph, seed, member.new_name, ranked_config)
                ranking = [r.entity.id for r in result.recommendations]
                threshold_set = {
                    r.entity.id
                    for r in result.recommendations
                    if r.score >= config.beta
                }
                precision, recall, f1 = precision_recall_f1(threshold_set, relevant)
                values = {
                    "precision": precision,
                    "recall": recall,
                    "f1": f1,
                    "averagePrecision": average_precision(ranking, relevant),
                    "reciprocalRank": reciprocal_rank(ranking, relevant),
                }
                for k in TOP_KS:
                    values[f"top{k}"] = top_k_recall(ranking, relevant, k)
                report.per_query.append(
                    QueryMetrics(
                        project=dataset.project,
                        set_id=co_set.id,
                        seed=member.describe(),
                        values=values,
                    )
                )
                query_rows.append(values)

            if query_rows:
                set_mean = _mean_values(query_rows)
                report.per_set.append((dataset.project, co_set.id, set_mean))
                set_rows.append(set_mean)

        if set_rows:
            project_mean = _mean_values(set_rows)
            report.per_project.append((dataset.project, project_mean))
            project_rows.append(project_mean)

    report.aggregates = (
        _mean_values(project_rows)
        if project_rows
        else {name: 0.0 for name in METRIC_NAMES}
    )
    report.diagnostics = {
        "queries": len(report.per_query),
        "skipped": skipped,
        "skippedCount": len(skipped),
    }
    return report
