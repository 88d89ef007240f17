"""Identifier normalization: split, expand abbreviations, remove inflection.

An identifier such as ``getArgumentMapName`` becomes an ordered sequence of
word tokens, each remembering its surface form, lemma, inflection tag, and
(when an abbreviation was expanded) the original short form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import DegenerateNameError
from .abbreviations import ExpansionContext, expand_abbreviation
from .lemmatizer import Inflection, lemmatize

# lower runs, Title words, and UPPER runs; an UPPER run followed by a Title
# word gives up its last capital to the next word (HTTPResponse -> http,
# response).
_WORD_RE = re.compile(r"[A-Z]+(?![a-z])|[A-Z][a-z]*|[a-z]+")
_DELIMITER_RE = re.compile(r"[$_0-9]+")


def split(name: str) -> list[str]:
    """Split an identifier into lowercase words.

    ``$``, ``_`` and digit runs act as delimiters and are discarded; the
    remaining fragments are divided at lower/Title/UPPER boundaries.
    Raises DegenerateNameError when nothing alphabetic remains.
    """
    words: list[str] = []
    for fragment in _DELIMITER_RE.split(name):
        words.extend(m.group(0).lower() for m in _WORD_RE.finditer(fragment))
    if not words:
        raise DegenerateNameError(f"identifier {name!r} contains no words")
    return words


@dataclass(frozen=True)
class WordToken:
    """One word of a normalized identifier."""

    surface: str
    lemma: str
    inflection: Inflection = Inflection.NONE
    expanded_from: str | None = None

    @property
    def raw(self) -> str:
        """The word as it was written, before abbreviation expansion."""
        return self.expanded_from if self.expanded_from is not None else self.surface


@dataclass(frozen=True)
class NormalizedName:
    """An identifier as an ordered word-token sequence."""

    raw: str
    tokens: tuple[WordToken, ...]

    @property
    def lemmas(self) -> tuple[str, ...]:
        return tuple(t.lemma for t in self.tokens)

    @property
    def surfaces(self) -> tuple[str, ...]:
        return tuple(t.surface for t in self.tokens)

    @property
    def raw_words(self) -> tuple[str, ...]:
        return tuple(t.raw for t in self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)


def normalize(name: str, context: ExpansionContext | None = None) -> NormalizedName:
    """Run the full pipeline: split, expand each word, lemmatize each word."""
    if context is None:
        context = ExpansionContext()
    tokens = []
    for word in split(name):
        expanded, step = expand_abbreviation(word, context)
        lemma, inflection = lemmatize(expanded)
        tokens.append(
            WordToken(
                surface=expanded,
                lemma=lemma,
                inflection=inflection,
                expanded_from=word if step is not None else None,
            )
        )
    return NormalizedName(raw=name, tokens=tuple(tokens))


class CaseStyle:
    CAMEL = "camel"
    PASCAL = "pascal"
    SNAKE = "snake"
    SCREAMING = "screaming"


def detect_case_style(raw: str) -> str:
    letters = [c for c in raw if c.isalpha()]
    if "_" in raw and all(c.isupper() for c in letters):
        return CaseStyle.SCREAMING
    if "_" in raw:
        return CaseStyle.SNAKE
    if letters and letters[0].isupper():
        return CaseStyle.PASCAL
    return CaseStyle.CAMEL


def render_words(words: list[str] | tuple[str, ...], style: str) -> str:
    """Render a word sequence in the given identifier convention."""
    if not words:
        raise DegenerateNameError("cannot render an empty word sequence")
    if style == CaseStyle.SCREAMING:
        return "_".join(w.upper() for w in words)
    if style == CaseStyle.SNAKE:
        return "_".join(w.lower() for w in words)
    if style == CaseStyle.PASCAL:
        return "".join(w.capitalize() for w in words)
    return words[0].lower() + "".join(w.capitalize() for w in words[1:])
