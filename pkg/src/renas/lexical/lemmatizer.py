"""Rule-based lemmatization for identifier words.

Plural nouns go to the singular, -ing verb forms and irregular verb forms
go to the infinitive, and comparative/superlative adjectives go to the
positive degree. Noun rules run before verb rules, so an ambiguous -s form
counts as a plural. Regular -ed forms are deliberately left alone: inside
identifiers they almost always act as participial adjectives (matched,
sorted, cached).
"""

from __future__ import annotations

import enum

from .wordlists import (
    COMMON_WORDS,
    GRADABLE_ADJECTIVES,
    IRREGULAR_ADJECTIVES,
    IRREGULAR_PLURALS,
    IRREGULAR_VERBS,
    UNINFLECTED,
)


class Inflection(enum.Enum):
    NONE = "none"
    PLURAL = "plural"
    VERB_CONJUGATED = "verb_conjugated"
    COMPARATIVE_OR_SUPERLATIVE = "comparative_or_superlative"


_DOUBLABLE = set("bdgkmnprt")


def _singularize(word: str) -> str | None:
    """One plural-stripping step, or None if no noun rule fires."""
    if not word.endswith("s") or len(word) < 3:
        return None
    if word.endswith(("ss", "us", "is")):
        return None
    if word.endswith("ies"):
        if len(word) == 4:
            return word[:-1]          # ties -> tie
        return word[:-3] + "y"        # entries -> entry
    if word.endswith(("sses", "xes", "ches", "shes", "zzes", "oes")):
        return word[:-2]              # classes -> class, boxes -> box
    return word[:-1]                  # names -> name


def _deconjugate(word: str) -> str | None:
    """Strip a regular -ing ending, restoring the stem when possible."""
    if len(word) < 5 or not word.endswith("ing") or word in COMMON_WORDS:
        return None
    stem = word[:-3]
    if stem in COMMON_WORDS:
        return stem                   # loading -> load
    if stem + "e" in COMMON_WORDS:
        return stem + "e"             # parsing -> parse
    if (
        len(stem) >= 3
        and stem[-1] == stem[-2]
        and stem[-1] in _DOUBLABLE
        and stem[:-1] in COMMON_WORDS
    ):
        return stem[:-1]              # running -> run
    return None


def _degrade(word: str) -> str | None:
    """Reduce -er/-est to the positive degree of a known adjective."""
    for suffix in ("est", "er"):
        if not word.endswith(suffix):
            continue
        stem = word[: -len(suffix)]
        if len(stem) < 2:
            continue
        candidates = [stem, stem + "e"]
        if stem[-1] == stem[-2]:
            candidates.append(stem[:-1])      # bigger -> big
        if stem.endswith("i"):
            candidates.append(stem[:-1] + "y")  # easier -> easy
        for cand in candidates:
            if cand in GRADABLE_ADJECTIVES:
                return cand
    return None


def _step(word: str) -> tuple[str, Inflection] | None:
    """Apply the first matching rule once; None when word is a fixed point."""
    if word in UNINFLECTED:
        return None
    if word in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[word], Inflection.PLURAL
    if word in IRREGULAR_VERBS:
        return IRREGULAR_VERBS[word], Inflection.VERB_CONJUGATED
    if word in IRREGULAR_ADJECTIVES:
        return IRREGULAR_ADJECTIVES[word], Inflection.COMPARATIVE_OR_SUPERLATIVE
    singular = _singularize(word)
    if singular is not None:
        return singular, Inflection.PLURAL
    infinitive = _deconjugate(word)
    if infinitive is not None:
        return infinitive, Inflection.VERB_CONJUGATED
    positive = _degrade(word)
    if positive is not None:
        return positive, Inflection.COMPARATIVE_OR_SUPERLATIVE
    return None


def lemmatize(word: str) -> tuple[str, Inflection]:
    """Return (lemma, inflection tag) for a lowercase alphabetic word.

    Rules are applied until a fixed point is reached, so the returned lemma
    always lemmatizes to itself; the tag records the first rule that fired.
    Total: a word matching no rule comes back unchanged with tag NONE.
    """
    tag = Inflection.NONE
    current = word
    while True:
        outcome = _step(current)
        if outcome is None:
            return current, tag
        current, fired = outcome
        if tag is Inflection.NONE:
            tag = fired
