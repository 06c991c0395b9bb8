"""Tagging, lemmatization, inflection, and the round-trip guarantee."""

from importlib import resources

import pytest

from lexsimp.morphology import (
    POS,
    InflectionSpec,
    indefinite_article,
    infer_spec,
    inflect,
    lemmatize,
    tag_pos,
)


def roundtrip_entries():
    path = resources.files("lexsimp").joinpath("data", "morphology", "roundtrip_lexicon.tsv")
    entries = []
    with path.open(encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if line:
                surface, pos = line.split("\t")
                entries.append((surface, POS(pos)))
    return entries


ROUNDTRIP = roundtrip_entries()


class TestTagPos:
    def test_lexicon_backed(self):
        assert tag_pos(["the", "cat", "sat"]) == [POS.OTHER, POS.NOUN, POS.VERB]

    def test_adjective(self):
        assert tag_pos(["vital"]) == [POS.ADJ]

    def test_punctuation_and_numbers_are_other(self):
        assert tag_pos([".", ",", "2000", "£5,000"]) == [POS.OTHER] * 4

    def test_suffix_heuristics_for_unknown_words(self):
        assert tag_pos(["blorply"]) == [POS.ADV]
        assert tag_pos(["blorpous"]) == [POS.ADJ]
        assert tag_pos(["blorped"]) == [POS.VERB]
        assert tag_pos(["blorp"]) == [POS.NOUN]

    def test_one_tag_per_token(self):
        tokens = "oregano is an indispensable ingredient in greek cuisine .".split()
        assert len(tag_pos(tokens)) == len(tokens)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            tag_pos([])


class TestLemmatize:
    def test_verb_third_singular(self):
        assert lemmatize("looks", POS.VERB) == "look"

    def test_regular_y_rule(self):
        assert lemmatize("cities", POS.NOUN) == "city"

    def test_irregular_table(self):
        assert lemmatize("went", POS.VERB) == "go"
        assert lemmatize("men", POS.NOUN) == "man"
        assert lemmatize("better", POS.ADJ) == "good"

    def test_e_restore(self):
        assert lemmatize("situated", POS.VERB) == "situate"
        assert lemmatize("making", POS.VERB) == "make"

    def test_undouble(self):
        assert lemmatize("wrapped", POS.VERB) == "wrap"
        assert lemmatize("bigger", POS.ADJ) == "big"

    def test_other_passes_through(self):
        assert lemmatize("the", POS.OTHER) == "the"

    def test_idempotent_on_roundtrip_lexicon(self):
        for surface, pos in ROUNDTRIP:
            lemma = lemmatize(surface, pos)
            assert lemmatize(lemma, pos) == lemma, (surface, pos, lemma)

    def test_idempotent_on_unknown_words(self):
        for word, pos in [("blorbs", POS.NOUN), ("blorbed", POS.VERB), ("blorbing", POS.VERB)]:
            lemma = lemmatize(word, pos)
            assert lemmatize(lemma, pos) == lemma


class TestInferSpec:
    def test_third_singular(self):
        assert infer_spec("encloses", POS.VERB) == InflectionSpec(POS.VERB, "third_singular")

    def test_past_participle(self):
        assert infer_spec("situated", POS.VERB) == InflectionSpec(POS.VERB, "past_participle")

    def test_positive_degree(self):
        assert infer_spec("vital", POS.ADJ) == InflectionSpec(POS.ADJ, "positive")

    def test_other_yields_none(self):
        assert infer_spec("the", POS.OTHER) is None

    def test_irregular_forms_distinguished(self):
        assert infer_spec("went", POS.VERB) == InflectionSpec(POS.VERB, "past")
        assert infer_spec("gone", POS.VERB) == InflectionSpec(POS.VERB, "past_participle")


class TestInflect:
    def test_regular_third_singular(self):
        assert inflect("wrap", InflectionSpec(POS.VERB, "third_singular")) == "wraps"

    def test_regular_plural_y(self):
        assert inflect("city", InflectionSpec(POS.NOUN, "plural")) == "cities"

    def test_irregular_past(self):
        assert inflect("go", InflectionSpec(POS.VERB, "past")) == "went"

    def test_no_spec_passes_through(self):
        assert inflect("lemma", None) == "lemma"

    def test_invalid_spec_rejected(self):
        with pytest.raises(ValueError):
            InflectionSpec(POS.NOUN, "past")
        with pytest.raises(ValueError):
            InflectionSpec(POS.OTHER, "positive")

    def test_never_returns_empty(self):
        for surface, pos in ROUNDTRIP[:200]:
            lemma = lemmatize(surface, pos)
            spec = infer_spec(surface, pos)
            assert inflect(lemma, spec) != ""


def test_roundtrip_lexicon_size():
    assert len(ROUNDTRIP) >= 300


def test_roundtrip_property():
    """inflect(lemmatize(w), infer_spec(w)) == w for every bundled entry."""
    for surface, pos in ROUNDTRIP:
        lemma = lemmatize(surface, pos)
        spec = infer_spec(surface, pos)
        assert inflect(lemma, spec) == surface, (surface, pos, lemma, spec)


class TestIndefiniteArticle:
    def test_vowel_start(self):
        assert indefinite_article("indispensable") == "an"
        assert indefinite_article("element") == "an"

    def test_consonant_start(self):
        assert indefinite_article("necessary") == "a"
        assert indefinite_article("big") == "a"
