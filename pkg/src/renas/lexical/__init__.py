from .abbreviations import (
    ExpansionContext,
    ExpansionHistory,
    ExpansionRecord,
    expand_abbreviation,
    is_expansion,
    is_expansion_candidate,
    load_abbreviation_file,
    merged_dictionary,
)
from .lemmatizer import Inflection, lemmatize
from .normalizer import (
    CaseStyle,
    NormalizedName,
    WordToken,
    detect_case_style,
    normalize,
    render_words,
    split,
)

__all__ = [
    "CaseStyle",
    "ExpansionContext",
    "ExpansionHistory",
    "ExpansionRecord",
    "Inflection",
    "NormalizedName",
    "WordToken",
    "detect_case_style",
    "expand_abbreviation",
    "is_expansion",
    "is_expansion_candidate",
    "lemmatize",
    "load_abbreviation_file",
    "merged_dictionary",
    "normalize",
    "render_words",
    "split",
]
