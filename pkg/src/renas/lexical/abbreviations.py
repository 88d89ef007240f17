"""Abbreviation detection and expansion.

A short word is treated as an expansion candidate only when it is not a
known common word. Expansion sources are tried strictly in order:

1. words of the identifier's own pre-rename name,
2. the expansion history of the same file (most expansions, then longest),
3. the expansion history of the whole project (longest),
4. the built-in / user-supplied dictionary.

Failure to expand is a normal outcome, not an error.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from .lemmatizer import lemmatize
from .wordlists import COMMON_WORDS, DEFAULT_ABBREVIATIONS, NON_EXPAND

MAX_ABBREVIATION_LENGTH = 6


@dataclass(frozen=True)
class ExpansionRecord:
    """One observed expansion of an abbreviation inside a source file."""

    abbreviation: str
    expansion: str
    source_file: str
    count: int = 1

    def __post_init__(self) -> None:
        if len(self.abbreviation) >= len(self.expansion):
            raise ValueError(
                f"expansion {self.expansion!r} is not longer than "
                f"abbreviation {self.abbreviation!r}"
            )
        if self.count < 1:
            raise ValueError("count must be >= 1")


class ExpansionHistory:
    """Aggregated expansion records, queryable per file and project-wide."""

    def __init__(self) -> None:
        self._per_file: dict[str, dict[str, Counter]] = {}
        self._project: dict[str, Counter] = {}

    def add(self, abbreviation: str, expansion: str, source_file: str,
            count: int = 1) -> None:
        ExpansionRecord(abbreviation, expansion, source_file, count)
        by_abbr = self._per_file.setdefault(source_file, {})
        by_abbr.setdefault(abbreviation, Counter())[expansion] += count
        self._project.setdefault(abbreviation, Counter())[expansion] += count

    def file_expansions(self, source_file: str, abbreviation: str) -> Counter:
        return self._per_file.get(source_file, {}).get(abbreviation, Counter())

    def project_expansions(self, abbreviation: str) -> Counter:
        return self._project.get(abbreviation, Counter())

    def records(self) -> list[ExpansionRecord]:
        out = []
        for source_file in sorted(self._per_file):
            for abbr in sorted(self._per_file[source_file]):
                for expansion, count in sorted(
                    self._per_file[source_file][abbr].items()
                ):
                    out.append(ExpansionRecord(abbr, expansion, source_file, count))
        return out


@dataclass
class ExpansionContext:
    """Everything expand_abbreviation may consult, in step order."""

    old_name_words: tuple[str, ...] = ()
    history: ExpansionHistory = field(default_factory=ExpansionHistory)
    source_file: str = ""
    dictionary: Mapping[str, str] = field(
        default_factory=lambda: dict(DEFAULT_ABBREVIATIONS)
    )


def is_expansion(abbreviation: str, word: str) -> bool:
    """True when word is a plausible long form of abbreviation.

    Either the abbreviation is a prefix of the word, or it starts with the
    same letter and is a character subsequence of the word.
    """
    if len(word) <= len(abbreviation) or not word:
        return False
    if not abbreviation or word[0] != abbreviation[0]:
        return False
    it = iter(word)
    return all(ch in it for ch in abbreviation)


def is_expansion_candidate(word: str) -> bool:
    """Gate: short, alphabetic, and not a known word or famous acronym."""
    if not word.isalpha() or len(word) > MAX_ABBREVIATION_LENGTH:
        return False
    if word in NON_EXPAND or word in COMMON_WORDS:
        return False
    return lemmatize(word)[0] not in COMMON_WORDS


def _best_by_count_then_length(expansions: Counter) -> str:
    return min(expansions, key=lambda w: (-expansions[w], -len(w), w))


def _best_by_length(expansions: Counter) -> str:
    return min(expansions, key=lambda w: (-len(w), -expansions[w], w))


def expand_abbreviation(
    word: str, context: ExpansionContext
) -> tuple[str, int | None]:
    """Expand word via the four-step search; (word, None) when not expanded."""
    if not is_expansion_candidate(word):
        return word, None

    from_old_name = sorted(
        {w for w in context.old_name_words if is_expansion(word, w)},
        key=lambda w: (-len(w), w),
    )
    if from_old_name:
        return from_old_name[0], 1

    file_hits = context.history.file_expansions(context.source_file, word)
    if file_hits:
        return _best_by_count_then_length(file_hits), 2

    project_hits = context.history.project_expansions(word)
    if project_hits:
        return _best_by_length(project_hits), 3

    if word in context.dictionary:
        return context.dictionary[word], 4

    return word, None


def load_abbreviation_file(path: str | Path) -> dict[str, str]:
    """Parse a user dictionary: one ``abbr=expansion`` per line, # comments."""
    entries: dict[str, str] = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected abbr=expansion, got {raw!r}")
        abbr, _, expansion = line.partition("=")
        abbr, expansion = abbr.strip().lower(), expansion.strip().lower()
        if not abbr or not expansion or len(abbr) >= len(expansion):
            raise ValueError(
                f"{path}:{lineno}: abbreviation must be shorter than expansion"
            )
        entries[abbr] = expansion
    return entries


def merged_dictionary(user_entries: Mapping[str, str] | None = None) -> dict[str, str]:
    merged = dict(DEFAULT_ABBREVIATIONS)
    if user_entries:
        merged.update(user_entries)
    return merged


def scan_expansions(
    abbreviation: str, nearby_words: Iterable[str]
) -> list[str]:
    """All plausible long forms of abbreviation among nearby identifier words."""
    return sorted({w for w in nearby_words if is_expansion(abbreviation, w)})
