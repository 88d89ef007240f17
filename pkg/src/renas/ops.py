"""Word-level renaming operations.

A developer's rename is diffed into insert/delete/replace/order/format
operations over normalized word sequences; the same operations are then
tested against candidate names and applied to produce suggested names.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import DegenerateNameError, NotApplicableError
from .lexical import Inflection, NormalizedName

# Operations that do not follow relationships and are therefore excluded
# from recommendation: reordering, abbreviating, and conjugation changes.
RECOMMEND_EXCLUDED = frozenset({"order", "format_a", "format_c"})


@dataclass(frozen=True)
class Insert:
    words: tuple[str, ...]
    left_anchor: str | None
    right_anchor: str | None
    kind = "insert"

    def describe(self) -> str:
        anchors = []
        if self.left_anchor:
            anchors.append(f"after {self.left_anchor}")
        if self.right_anchor:
            anchors.append(f"before {self.right_anchor}")
        where = " or ".join(anchors)
        return f"insert([{', '.join(self.words)}]{', ' + where if where else ''})"


@dataclass(frozen=True)
class Delete:
    words: tuple[str, ...]
    kind = "delete"

    def describe(self) -> str:
        return f"delete([{', '.join(self.words)}])"


@dataclass(frozen=True)
class Replace:
    before: tuple[str, ...]
    after: tuple[str, ...]
    kind = "replace"

    def describe(self) -> str:
        return f"replace([{', '.join(self.before)}], [{', '.join(self.after)}])"


@dataclass(frozen=True)
class Order:
    before: tuple[str, ...]
    after: tuple[str, ...]
    kind = "order"

    def describe(self) -> str:
        return f"order([{', '.join(self.before)}], [{', '.join(self.after)}])"


@dataclass(frozen=True)
class Format:
    variant: str  # "p" (plural) | "a" (abbreviation) | "c" (conjugation)
    word_before: str
    word_after: str

    @property
    def kind(self) -> str:
        return f"format_{self.variant}"

    def describe(self) -> str:
        return f"{self.kind}({self.word_before}, {self.word_after})"


RenameOperation = Insert | Delete | Replace | Order | Format


@dataclass(frozen=True)
class OpSet:
    ops: tuple[RenameOperation, ...]

    @property
    def recommend_eligible(self) -> tuple[RenameOperation, ...]:
        return tuple(op for op in self.ops if op.kind not in RECOMMEND_EXCLUDED)

    def describe(self) -> str:
        return "; ".join(op.describe() for op in self.ops) or "(none)"


def _classify_format(old_token, new_token) -> Format:
    if old_token.expanded_from != new_token.expanded_from:
        variant = "a"
    elif Inflection.PLURAL in (old_token.inflection, new_token.inflection):
        variant = "p"
    else:
        variant = "c"
    return Format(variant, old_token.raw, new_token.raw)


def _lcs_matches(
    old: tuple[str, ...], new: tuple[str, ...]
) -> list[tuple[int, int]]:
    """Matched index pairs of a longest common subsequence, leftmost on ties."""
    n, m = len(old), len(new)
    lcs = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n - 1, -1, -1):
        for j in range(m - 1, -1, -1):
            if old[i] == new[j]:
                lcs[i][j] = lcs[i + 1][j + 1] + 1
            else:
                lcs[i][j] = max(lcs[i + 1][j], lcs[i][j + 1])
    matches = []
    i = j = 0
    while i < n and j < m:
        if old[i] == new[j] and lcs[i][j] == lcs[i + 1][j + 1] + 1:
            matches.append((i, j))
            i += 1
            j += 1
        elif lcs[i + 1][j] >= lcs[i][j + 1]:
            i += 1
        else:
            j += 1
    return matches


def extract_ops(old: NormalizedName, new: NormalizedName) -> OpSet:
    """Diff two normalized names into renaming operations.

    Equal lemma sequences with differing written words give format
    operations; equal multisets give a single order operation; anything
    else is aligned word-by-word into insert/delete/replace regions.
    """
    if not old.tokens or not new.tokens:
        raise DegenerateNameError("cannot extract operations from an empty name")

    old_lemmas, new_lemmas = old.lemmas, new.lemmas
    if old_lemmas == new_lemmas:
        ops = tuple(
            _classify_format(t_old, t_new)
            for t_old, t_new in zip(old.tokens, new.tokens)
            if t_old.raw != t_new.raw
        )
        return OpSet(ops)

    if Counter(old_lemmas) == Counter(new_lemmas):
        return OpSet((Order(old_lemmas, new_lemmas),))

    ops: list[RenameOperation] = []
    matches = _lcs_matches(old_lemmas, new_lemmas)
    boundaries = [(-1, -1)] + matches + [(len(old_lemmas), len(new_lemmas))]
    for (prev_i, prev_j), (next_i, next_j) in zip(boundaries, boundaries[1:]):
        removed = old_lemmas[prev_i + 1 : next_i]
        added = new_lemmas[prev_j + 1 : next_j]
        if not removed and not added:
            continue
        if removed and added:
            ops.append(Replace(removed, added))
        elif removed:
            ops.append(Delete(removed))
        else:
            left = old_lemmas[prev_i] if prev_i >= 0 else None
            right = old_lemmas[next_i] if next_i < len(old_lemmas) else None
            ops.append(Insert(added, left, right))
    return OpSet(tuple(ops))


def _find_contiguous(haystack: tuple[str, ...], needle: tuple[str, ...]) -> int:
    if not needle or len(needle) > len(haystack):
        return -1
    for i in range(len(haystack) - len(needle) + 1):
        if haystack[i : i + len(needle)] == needle:
            return i
    return -1


def applicable(op: RenameOperation, cand: NormalizedName) -> bool:
    """Whether the operation fits the candidate name."""
    lemmas = cand.lemmas
    if isinstance(op, Insert):
        anchors = [a for a in (op.left_anchor, op.right_anchor) if a is not None]
        return any(anchor in lemmas for anchor in anchors)
    if isinstance(op, Delete):
        return _find_contiguous(lemmas, op.words) >= 0
    if isinstance(op, Replace):
        return _find_contiguous(lemmas, op.before) >= 0
    if isinstance(op, Order):
        wanted = set(op.before)
        remaining = Counter(op.before)
        for lemma in lemmas:
            if remaining.get(lemma, 0) > 0:
                remaining[lemma] -= 1
        if any(count > 0 for count in remaining.values()):
            return False
        appearance = [lemma for lemma in lemmas if lemma in wanted]
        return tuple(appearance[: len(op.after)]) != op.after
    if isinstance(op, Format):
        return op.word_before in cand.surfaces
    raise TypeError(f"unknown operation {op!r}")


def apply_op(op: RenameOperation, cand: NormalizedName) -> list[str]:
    """Apply the operation to a candidate, returning the new written words.

    Retained tokens keep the word as originally written (including
    unexpanded abbreviations); inserted and replacement words appear as
    given by the operation.
    """
    if not applicable(op, cand):
        raise NotApplicableError(f"{op.describe()} does not apply to {cand.raw!r}")
    lemmas = cand.lemmas
    words = list(cand.raw_words)

    if isinstance(op, Insert):
        position = None
        if op.left_anchor is not None and op.right_anchor is not None:
            for i in range(len(lemmas) - 1):
                if lemmas[i] == op.left_anchor and lemmas[i + 1] == op.right_anchor:
                    position = i + 1
                    break
        if position is None and op.left_anchor is not None and op.left_anchor in lemmas:
            position = lemmas.index(op.left_anchor) + 1
        if position is None:
            position = lemmas.index(op.right_anchor)
        result = words[:position] + list(op.words) + words[position:]
    elif isinstance(op, Delete):
        start = _find_contiguous(lemmas, op.words)
        result = words[:start] + words[start + len(op.words) :]
        if not result:
            raise DegenerateNameError(
                f"deleting [{', '.join(op.words)}] empties {cand.raw!r}"
            )
    elif isinstance(op, Replace):
        start = _find_contiguous(lemmas, op.before)
        result = words[:start] + list(op.after) + words[start + len(op.before) :]
    elif isinstance(op, Order):
        remaining = Counter(op.before)
        slots = [i for i, lemma in enumerate(lemmas) if remaining.get(lemma, 0) > 0]
        for i in slots:
            remaining[lemmas[i]] -= 1
        replacement = list(op.after[: len(slots)])
        result = list(words)
        for slot, lemma in zip(slots, replacement):
            source = lemmas.index(lemma) if lemma in lemmas else None
            result[slot] = words[source] if source is not None else lemma
    else:  # Format
        index = cand.surfaces.index(op.word_before)
        result = list(words)
        result[index] = op.word_after
    return result
