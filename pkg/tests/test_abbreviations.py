from __future__ import annotations

from collections import Counter

import pytest

from renas.lexical import (
    ExpansionContext,
    ExpansionHistory,
    ExpansionRecord,
    expand_abbreviation,
    is_expansion,
    is_expansion_candidate,
    load_abbreviation_file,
    merged_dictionary,
)


def expand_oracle(word, old_words, file_records, project_records, dictionary):
    """Exhaustive restatement of the four-step policy and its tie rules,
    independent of the production implementation."""
    step1 = [w for w in set(old_words) if is_expansion(word, w)]
    if step1:
        return sorted(step1, key=lambda w: (-len(w), w))[0], 1
    if file_records:
        ranked = sorted(
            file_records.items(), key=lambda kv: (-kv[1], -len(kv[0]), kv[0])
        )
        return ranked[0][0], 2
    if project_records:
        ranked = sorted(
            project_records.items(), key=lambda kv: (-len(kv[0]), -kv[1], kv[0])
        )
        return ranked[0][0], 3
    if word in dictionary:
        return dictionary[word], 4
    return word, None


class TestPredicates:
    @pytest.mark.parametrize(
        "abbr, word, expected",
        [
            ("prefs", "preferences", True),
            ("num", "number", True),
            ("num", "numeric", True),
            ("ctx", "context", True),
            ("msg", "message", True),
            ("impl", "implementation", True),
            ("abc", "abc", False),        # not longer
            ("num", "enum", False),       # first letter differs
            ("xyz", "example", False),
            ("pref", "prefs", True),
        ],
    )
    def test_is_expansion(self, abbr, word, expected):
        assert is_expansion(abbr, word) is expected

    def test_gate(self):
        assert is_expansion_candidate("prefs")
        assert is_expansion_candidate("num")
        assert not is_expansion_candidate("storage")   # longer than 6
        assert not is_expansion_candidate("name")      # common word
        assert not is_expansion_candidate("names")     # lemma is common
        assert not is_expansion_candidate("id")        # famous abbreviation
        assert not is_expansion_candidate("pdf")
        assert not is_expansion_candidate("uml")
        assert not is_expansion_candidate("x1")        # not alphabetic


class TestStepOrder:
    def test_step1_beats_later_steps(self):
        history = ExpansionHistory()
        history.add("num", "numeric", "A.java", count=50)
        ctx = ExpansionContext(
            old_name_words=("number",),
            history=history,
            source_file="A.java",
            dictionary={"num": "numerator"},
        )
        assert expand_abbreviation("num", ctx) == ("number", 1)

    def test_step2_beats_step3_and_4(self):
        history = ExpansionHistory()
        history.add("num", "number", "A.java")
        history.add("num", "numeric", "B.java", count=50)
        ctx = ExpansionContext(
            history=history, source_file="A.java", dictionary={"num": "numerator"}
        )
        assert expand_abbreviation("num", ctx) == ("number", 2)

    def test_step3_beats_step4(self):
        history = ExpansionHistory()
        history.add("num", "numeral", "B.java")
        ctx = ExpansionContext(
            history=history, source_file="A.java", dictionary={"num": "numerator"}
        )
        assert expand_abbreviation("num", ctx) == ("numeral", 3)

    def test_step4_dictionary(self):
        ctx = ExpansionContext(dictionary={"num": "number"})
        assert expand_abbreviation("num", ctx) == ("number", 4)

    def test_no_expansion_is_valid(self):
        ctx = ExpansionContext(dictionary={})
        assert expand_abbreviation("qqq", ctx) == ("qqq", None)

    def test_common_word_never_expands(self):
        history = ExpansionHistory()
        history.add("nam", "namespace", "A.java")
        ctx = ExpansionContext(history=history, source_file="A.java")
        assert expand_abbreviation("storage", ctx) == ("storage", None)
        assert expand_abbreviation("name", ctx) == ("name", None)


class TestTieRules:
    def test_step2_most_expansions_wins(self):
        history = ExpansionHistory()
        history.add("num", "number", "A.java", count=3)
        history.add("num", "numeric", "A.java", count=1)
        ctx = ExpansionContext(history=history, source_file="A.java")
        assert expand_abbreviation("num", ctx) == ("number", 2)

    def test_step2_count_tie_longest_wins(self):
        history = ExpansionHistory()
        history.add("num", "number", "A.java", count=2)
        history.add("num", "numeric", "A.java", count=2)
        ctx = ExpansionContext(history=history, source_file="A.java")
        assert expand_abbreviation("num", ctx) == ("numeric", 2)

    def test_step3_count_tie_falls_to_length(self):
        # Frozen from the oracle: counts tie, "numeric" is longer.
        history = ExpansionHistory()
        for _ in range(3):
            history.add("num", "number", "B.java")
            history.add("num", "numeric", "B.java")
        ctx = ExpansionContext(history=history, source_file="A.java")
        oracle = expand_oracle(
            "num", (), {}, Counter({"number": 3, "numeric": 3}), {}
        )
        assert oracle == ("numeric", 3)
        assert expand_abbreviation("num", ctx) == oracle

    def test_randomized_against_oracle(self):
        import random

        rng = random.Random(1234)
        pool = ["number", "numeric", "numeral", "numerator", "nucleus"]
        for _ in range(200):
            file_recs = Counter(
                {w: rng.randint(1, 4) for w in rng.sample(pool, rng.randint(0, 3))}
            )
            proj_recs = Counter(
                {w: rng.randint(1, 4) for w in rng.sample(pool, rng.randint(0, 4))}
            )
            proj_recs.update(file_recs)
            old = tuple(rng.sample(pool, rng.randint(0, 2)))
            dictionary = {"num": "number"} if rng.random() < 0.5 else {}

            history = ExpansionHistory()
            for w, c in file_recs.items():
                history.add("num", w, "A.java", count=c)
            for w, c in (proj_recs - file_recs).items():
                history.add("num", w, "B.java", count=c)
            ctx = ExpansionContext(
                old_name_words=old,
                history=history,
                source_file="A.java",
                dictionary=dictionary,
            )
            expected = expand_oracle("num", old, file_recs, proj_recs, dictionary)
            assert expand_abbreviation("num", ctx) == expected


class TestRecordsAndDictionary:
    def test_record_invariants(self):
        with pytest.raises(ValueError):
            ExpansionRecord("longer", "long", "A.java")
        with pytest.raises(ValueError):
            ExpansionRecord("n", "name", "A.java", count=0)

    def test_records_are_sorted_and_aggregated(self):
        history = ExpansionHistory()
        history.add("num", "number", "B.java")
        history.add("num", "number", "B.java")
        history.add("ctx", "context", "A.java")
        recs = history.records()
        assert [(r.abbreviation, r.source_file, r.count) for r in recs] == [
            ("ctx", "A.java", 1),
            ("num", "B.java", 2),
        ]

    def test_user_dictionary_file(self, tmp_path):
        path = tmp_path / "abbr.txt"
        path.write_text(
            "# project abbreviations\n"
            "cfg = configuration\n"
            "\n"
            "tkn=token\n",
            encoding="utf-8",
        )
        entries = load_abbreviation_file(path)
        assert entries == {"cfg": "configuration", "tkn": "token"}
        merged = merged_dictionary(entries)
        assert merged["tkn"] == "token"
        assert merged["msg"] == "message"

    def test_user_dictionary_rejects_bad_lines(self, tmp_path):
        path = tmp_path / "abbr.txt"
        path.write_text("cfg configuration\n", encoding="utf-8")
        with pytest.raises(ValueError):
            load_abbreviation_file(path)
        path.write_text("long=abc\n", encoding="utf-8")
        with pytest.raises(ValueError):
            load_abbreviation_file(path)
