from __future__ import annotations

import random
import string

import pytest

from renas.errors import DegenerateNameError
from renas.lexical import (
    ExpansionContext,
    ExpansionHistory,
    Inflection,
    NormalizedName,
    detect_case_style,
    lemmatize,
    normalize,
    render_words,
    split,
)
from renas.lexical.wordlists import (
    COMMON_WORDS,
    GRADABLE_ADJECTIVES,
    IRREGULAR_ADJECTIVES,
    IRREGULAR_PLURALS,
    IRREGULAR_VERBS,
)


def split_oracle(name: str) -> list[str]:
    """Straight-line restatement of the splitting rules, kept independent of
    the regex implementation: delimiters first, then character-class walks."""
    fragments = []
    current = []
    for ch in name:
        if ch in "$_" or ch.isdigit():
            if current:
                fragments.append("".join(current))
                current = []
        else:
            current.append(ch)
    if current:
        fragments.append("".join(current))

    words = []
    for frag in fragments:
        start = 0
        for i in range(1, len(frag)):
            prev, cur = frag[i - 1], frag[i]
            if prev.islower() and cur.isupper():
                words.append(frag[start:i])
                start = i
            elif prev.isupper() and cur.islower() and i - 1 > start:
                # UPPER run gives its last capital to the following word
                words.append(frag[start : i - 1])
                start = i - 1
        words.append(frag[start:])
    return [w.lower() for w in words if w]


class TestSplit:
    def test_snake_case_delimiters(self):
        assert split("DEFAULT_ARGUMENT_MAP_NAME") == ["default", "argument", "map", "name"]

    def test_camel_case_boundaries(self):
        assert split("getArgumentMapName") == ["get", "argument", "map", "name"]

    def test_upper_run_and_digit_delimiter(self):
        expected = split_oracle("parseHTTPResponse2Xml")
        assert expected == ["parse", "http", "response", "xml"]
        assert split("parseHTTPResponse2Xml") == expected

    @pytest.mark.parametrize(
        "name",
        [
            "x",
            "URI",
            "IOError",
            "a$b",
            "snake_case_name",
            "HTML5Parser",
            "value2",
            "__init__",
            "AClass",
            "toXML",
            "XMLHttpRequest",
            "simpleName",
        ],
    )
    def test_matches_rule_oracle(self, name):
        assert split(name) == split_oracle(name)

    def test_matches_rule_oracle_randomized(self):
        rng = random.Random(20240501)
        alphabet = string.ascii_letters + string.digits + "$_"
        for _ in range(500):
            name = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 18)))
            if not any(c.isalpha() for c in name):
                continue
            assert split(name) == split_oracle(name), name

    @pytest.mark.parametrize("name", ["_", "$", "123", "_42_", "$_$"])
    def test_degenerate_names_rejected(self, name):
        with pytest.raises(DegenerateNameError):
            split(name)

    def test_output_charset(self):
        rng = random.Random(7)
        alphabet = string.ascii_letters + string.digits + "$_"
        for _ in range(300):
            name = "a" + "".join(rng.choice(alphabet) for _ in range(12))
            for word in split(name):
                assert word
                assert word.islower()
                assert word.isalpha()


class TestLemmatize:
    @pytest.mark.parametrize(
        "word, lemma, tag",
        [
            ("names", "name", Inflection.PLURAL),
            ("ancestors", "ancestor", Inflection.PLURAL),
            ("word", "word", Inflection.NONE),
            ("resources", "resource", Inflection.PLURAL),
            ("preferences", "preference", Inflection.PLURAL),
            ("matched", "matched", Inflection.NONE),
            ("sorted", "sorted", Inflection.NONE),
            ("refering", "refer", Inflection.VERB_CONJUGATED),
            ("running", "run", Inflection.VERB_CONJUGATED),
            ("parsing", "parse", Inflection.VERB_CONJUGATED),
            ("children", "child", Inflection.PLURAL),
            ("indices", "index", Inflection.PLURAL),
            ("went", "go", Inflection.VERB_CONJUGATED),
            ("higher", "high", Inflection.COMPARATIVE_OR_SUPERLATIVE),
            ("latest", "late", Inflection.COMPARATIVE_OR_SUPERLATIVE),
            ("copies", "copy", Inflection.PLURAL),
            ("classes", "class", Inflection.PLURAL),
            ("boxes", "box", Inflection.PLURAL),
            ("matches", "match", Inflection.PLURAL),
            ("caches", "cache", Inflection.PLURAL),
            ("statuses", "status", Inflection.PLURAL),
        ],
    )
    def test_known_forms(self, word, lemma, tag):
        assert lemmatize(word) == (lemma, tag)

    @pytest.mark.parametrize(
        "word",
        ["status", "class", "analysis", "axis", "string", "parser", "user",
         "number", "counter", "handler", "lower", "upper", "settings"],
    )
    def test_code_vocabulary_not_mangled(self, word):
        lemma, _ = lemmatize(word)
        assert lemma in (word, "setting")

    def test_idempotent_over_lexicon(self):
        lexicon = set(COMMON_WORDS)
        lexicon.update(IRREGULAR_PLURALS)
        lexicon.update(IRREGULAR_PLURALS.values())
        lexicon.update(IRREGULAR_VERBS)
        lexicon.update(IRREGULAR_VERBS.values())
        lexicon.update(IRREGULAR_ADJECTIVES)
        lexicon.update(IRREGULAR_ADJECTIVES.values())
        lexicon.update(GRADABLE_ADJECTIVES)
        for word in sorted(lexicon):
            lemma, _ = lemmatize(word)
            again, _ = lemmatize(lemma)
            assert again == lemma, (word, lemma, again)

    def test_total_on_arbitrary_words(self):
        rng = random.Random(99)
        for _ in range(500):
            word = "".join(rng.choice(string.ascii_lowercase) for _ in range(rng.randint(1, 12)))
            lemma, tag = lemmatize(word)
            assert lemma and lemma.islower() and lemma.isalpha()
            assert isinstance(tag, Inflection)


class TestNormalize:
    def test_paper_style_pipeline(self, prefs_history):
        ctx = ExpansionContext(history=prefs_history, source_file="Settings.java")
        name = normalize("getPreferences", ctx)
        assert name.lemmas == ("get", "preference")

    def test_single_base_word(self):
        assert normalize("name").lemmas == ("name",)

    def test_multi_word_method(self):
        assert normalize("getAncestorResources").lemmas == ("get", "ancestor", "resource")

    def test_expansion_then_inflection(self, prefs_history):
        ctx = ExpansionContext(history=prefs_history, source_file="Settings.java")
        name = normalize("prefs", ctx)
        token = name.tokens[0]
        assert token.surface == "preferences"
        assert token.lemma == "preference"
        assert token.inflection is Inflection.PLURAL
        assert token.expanded_from == "prefs"
        assert token.raw == "prefs"

    def test_idempotent_on_rendered_lemmas(self):
        for raw in ["getAncestorResources", "DEFAULT_ARGUMENT_MAP_NAME", "parseHTTPResponse2Xml"]:
            first = normalize(raw)
            rendered = "_".join(first.lemmas)
            assert normalize(rendered).lemmas == first.lemmas

    def test_degenerate_propagates(self):
        with pytest.raises(DegenerateNameError):
            normalize("_123")

    def test_tokens_nonempty_for_real_identifier(self):
        name = normalize("x")
        assert isinstance(name, NormalizedName)
        assert len(name) == 1

    def test_invariant_none_tag_means_surface_equals_lemma(self):
        rng = random.Random(4242)
        pool = sorted(COMMON_WORDS)
        for _ in range(300):
            raw = "".join(
                w.capitalize() for w in rng.sample(pool, rng.randint(1, 4))
            )
            for token in normalize(raw).tokens:
                if token.inflection is Inflection.NONE:
                    assert token.surface == token.lemma

    def test_invariant_raw_words_reconstruct_the_letters(self, prefs_history):
        ctx = ExpansionContext(history=prefs_history, source_file="Settings.java")
        rng = random.Random(137)
        pool = sorted(COMMON_WORDS) + ["prefs"]
        samples = ["getPrefs2Xml", "DEFAULT_ARGUMENT_MAP_NAME", "a$b_c9d"]
        for _ in range(200):
            samples.append(
                "_".join(rng.sample(pool, rng.randint(1, 4)))
                + rng.choice(["", "2", "_X"])
            )
        for raw in samples:
            name = normalize(raw, ctx)
            joined = "".join(t.raw for t in name.tokens)
            letters = "".join(c.lower() for c in raw if c.isalpha())
            assert joined == letters, raw


@pytest.fixture
def prefs_history() -> ExpansionHistory:
    history = ExpansionHistory()
    history.add("prefs", "preferences", "Settings.java", count=3)
    return history


class TestRendering:
    @pytest.mark.parametrize(
        "raw, style",
        [
            ("getName", "camel"),
            ("GetName", "pascal"),
            ("get_name", "snake"),
            ("GET_NAME", "screaming"),
            ("name", "camel"),
        ],
    )
    def test_detect(self, raw, style):
        assert detect_case_style(raw) == style

    def test_round_trip(self):
        assert render_words(["get", "argument", "variable", "names"], "camel") == "getArgumentVariableNames"
        assert render_words(["default", "argument", "map", "variable", "name"], "screaming") == "DEFAULT_ARGUMENT_MAP_VARIABLE_NAME"
        assert render_words(["get", "storage"], "camel") == "getStorage"
        assert render_words(["call", "context"], "pascal") == "CallContext"

    def test_empty_rejected(self):
        with pytest.raises(DegenerateNameError):
            render_words([], "camel")
