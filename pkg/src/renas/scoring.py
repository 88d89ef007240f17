"""Priority scoring and recommendation.

Each reachable candidate gets a similarity priority (word-overlap Dice
against the pre-rename name), a relationship priority (inverse graph
distance), and their linear combination; results come back either as a
thresholded set or as a full ranking.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping

from .errors import DegenerateNameError, NotApplicableError
from .graph import RelationshipGraph, shortest_distances
from .lexical import (
    ExpansionContext,
    NormalizedName,
    detect_case_style,
    merged_dictionary,
    normalize,
    render_words,
)
from .ops import OpSet, RenameOperation, applicable, apply_op, extract_ops
from .sourcemodel.model import Entity, SourceModel

THRESHOLD_SET = "threshold"
RANKED = "ranked"

DEFAULT_ALPHA = 0.5
DEFAULT_BETA = 0.53
DEFAULT_RANKED_CAP = 30


@dataclass
class ScoreConfig:
    alpha: float = DEFAULT_ALPHA
    beta: float = DEFAULT_BETA
    mode: str = THRESHOLD_SET
    cap: int | None = None

    def effective_cap(self) -> int:
        """Distance beyond which no candidate can reach the threshold.

        The best possible score at distance d is alpha + (1 - alpha) / d,
        so distances past (1 - alpha) / (beta - alpha) are provably below
        beta. Ranking mode falls back to a fixed horizon.
        """
        if self.cap is not None:
            return self.cap
        if self.mode == THRESHOLD_SET and self.beta > self.alpha:
            horizon = (1 - self.alpha) / (self.beta - self.alpha)
            return max(1, math.ceil(horizon - 1e-9))
        return DEFAULT_RANKED_CAP


def score_sim(change: NormalizedName, cand: NormalizedName) -> float:
    """Dice word overlap over lemma multisets, in [0, 1]."""
    if not change.tokens or not cand.tokens:
        raise DegenerateNameError("cannot compare empty names")
    a, b = Counter(change.lemmas), Counter(cand.lemmas)
    shared = sum(min(a[w], b[w]) for w in a)
    return 2.0 * shared / (len(change.lemmas) + len(cand.lemmas))


def score_rel(distance: int) -> float:
    """Inverse distance, in (0, 1]."""
    if distance <= 0:
        raise ValueError("distance must be a positive integer")
    return 1.0 / distance


def combined_score(sim: float, rel: float, alpha: float) -> float:
    return alpha * sim + (1.0 - alpha) * rel


@dataclass
class Recommendation:
    entity: Entity
    score_sim: float
    score_rel: float
    score: float
    distance: int
    path: tuple[str, ...]
    applied_op: RenameOperation
    suggested_name: str | None


@dataclass
class RecommendResult:
    seed: Entity
    old_name: NormalizedName
    new_name: NormalizedName
    ops: OpSet
    config: ScoreConfig
    cap: int
    recommendations: list[Recommendation] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


def recommend(
    model: SourceModel,
    graph: RelationshipGraph,
    seed: Entity,
    new_name: str,
    config: ScoreConfig | None = None,
    user_dictionary: Mapping[str, str] | None = None,
) -> RecommendResult:
    """Score every reachable identifier the extracted operations apply to."""
    if config is None:
        config = ScoreConfig()
    if seed.normalized is None:
        raise DegenerateNameError(f"seed {seed.name!r} has no words to compare")

    old_norm = seed.normalized
    old_words = tuple(dict.fromkeys(old_norm.surfaces + old_norm.raw_words))
    new_norm = normalize(
        new_name,
        ExpansionContext(
            old_name_words=old_words,
            history=model.history,
            source_file=seed.file,
            dictionary=merged_dictionary(user_dictionary),
        ),
    )

    ops = extract_ops(old_norm, new_norm)
    cap = config.effective_cap()
    result = RecommendResult(
        seed=seed,
        old_name=old_norm,
        new_name=new_norm,
        ops=ops,
        config=config,
        cap=cap,
    )
    eligible = ops.recommend_eligible
    if not ops.ops:
        result.notes.append("old and new names normalize identically")
        return result
    if not eligible:
        result.notes.append(
            "all extracted operations are excluded from recommendation "
            f"({ops.describe()})"
        )
        return result

    distances = shortest_distances(graph, seed.id, cap)
    for entity_id, reach in distances.items():
        if entity_id == seed.id:
            continue
        candidate = model.entities[entity_id]
        if candidate.normalized is None:
            continue
        chosen = None
        for op in eligible:
            if applicable(op, candidate.normalized):
                chosen = op
                break
        if chosen is None:
            continue
        sim = score_sim(old_norm, candidate.normalized)
        rel = score_rel(reach.distance)
        suggested = None
        try:
            words = apply_op(chosen, candidate.normalized)
            suggested = render_words(words, detect_case_style(candidate.name))
        except (DegenerateNameError, NotApplicableError) as exc:
            result.notes.append(f"no suggestion for {candidate.name}: {exc}")
        result.recommendations.append(
            Recommendation(
                entity=candidate,
                score_sim=sim,
                score_rel=rel,
                score=combined_score(sim, rel, config.alpha),
                distance=reach.distance,
                path=reach.path,
                applied_op=chosen,
                suggested_name=suggested,
            )
        )

    result.recommendations.sort(key=lambda r: (-r.score, r.entity.sort_key))
    if config.mode == THRESHOLD_SET:
        result.recommendations = [
            r for r in result.recommendations if r.score >= config.beta
        ]
    return result
