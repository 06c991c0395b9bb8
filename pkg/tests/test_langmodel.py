"""Count tables, probability conventions, and the cache format."""

import math
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lexsimp.langmodel import (
    CorpusError,
    ModelFormatError,
    bigram_prob,
    build_model,
    load_model,
    save_model,
    tokenize,
    unigram_prob,
    word_stats,
)


class TestBuildModel:
    def test_hand_tally(self, tiny_model):
        m = tiny_model
        assert m.unigram_count == {"the": 2, "cat": 1, "sat": 2, "dog": 1}
        assert m.sentence_count == {"the": 2, "cat": 1, "sat": 2, "dog": 1}
        assert m.bigram_count == {
            ("the", "cat"): 1,
            ("cat", "sat"): 1,
            ("the", "dog"): 1,
            ("dog", "sat"): 1,
        }
        assert m.vocab_size == 4
        assert m.total_tokens == 6

    def test_single_token_corpus(self):
        m = build_model([["a"]])
        assert m.unigram_count == {"a": 1}
        assert m.sentence_count == {"a": 1}
        assert m.bigram_count == {}
        assert m.vocab_size == 1

    def test_empty_corpus_rejected(self):
        with pytest.raises(CorpusError):
            build_model([])

    def test_empty_sentence_rejected(self):
        with pytest.raises(CorpusError):
            build_model([["a"], []])

    def test_no_cross_sentence_bigrams(self):
        m = build_model([["a", "b"], ["c", "d"]])
        assert ("b", "c") not in m.bigram_count

    def test_rebuild_is_deterministic(self):
        sentences = [["the", "cat", "sat"], ["the", "dog", "sat"]]
        assert build_model(sentences) == build_model(sentences)

    def test_count_invariants(self, fixture_model):
        m = fixture_model
        assert sum(m.unigram_count.values()) == m.total_tokens
        assert m.vocab_size == len(m.vocabulary) >= 1
        outgoing = Counter()
        for (prev, _word), count in m.bigram_count.items():
            outgoing[prev] += count
        for word in m.vocabulary:
            assert outgoing[word] <= m.unigram_count[word]
            assert 1 <= m.sentence_count[word] <= m.unigram_count[word]


class TestUnigramProb:
    def test_paper_formula(self, tiny_model):
        assert unigram_prob(tiny_model, "the") == pytest.approx(0.5)
        assert unigram_prob(tiny_model, "cat") == pytest.approx(0.25)

    def test_oov_floor(self, tiny_model):
        assert unigram_prob(tiny_model, "zebra") == pytest.approx(1 / 24)

    def test_always_positive(self, fixture_model):
        for word in ["", "qqq", "the", "zebra", "a b"]:
            assert unigram_prob(fixture_model, word) > 0

    def test_floor_below_observed(self, fixture_model):
        floor = fixture_model.floor
        smallest = min(
            unigram_prob(fixture_model, w) for w in fixture_model.vocabulary
        )
        assert floor < smallest


class TestBigramProb:
    def test_hand_tally(self, tiny_model):
        assert bigram_prob(tiny_model, "the", "cat") == pytest.approx(0.5)
        assert bigram_prob(tiny_model, "cat", "sat") == pytest.approx(1.0)

    def test_unseen_pair_floor(self, tiny_model):
        assert bigram_prob(tiny_model, "sat", "the") == pytest.approx(1 / 24)

    def test_conditional_mass_bounded(self, fixture_model):
        m = fixture_model
        sums = Counter()
        for (prev, word), count in m.bigram_count.items():
            sums[prev] += bigram_prob(m, prev, word)
        for total in sums.values():
            assert total <= 1 + 1e-12


class TestWordStats:
    def test_in_vocabulary(self, tiny_model):
        assert word_stats(tiny_model, "the") == (2, 2)
        assert word_stats(tiny_model, "cat") == (1, 1)

    def test_oov(self, tiny_model):
        assert word_stats(tiny_model, "zebra") == (0, 0)


class TestTokenize:
    def test_lowercase_and_split(self):
        assert tokenize("The Cat  sat .") == ["the", "cat", "sat", "."]

    def test_blank(self):
        assert tokenize("   ") == []


@settings(max_examples=200, deadline=None)
@given(
    st.lists(
        st.lists(
            st.sampled_from([f"w{i}" for i in range(15)]), min_size=1, max_size=8
        ),
        min_size=1,
        max_size=20,
    )
)
def test_counts_match_brute_force(sentences):
    """Counts equal a direct tally oracle on random small corpora."""
    m = build_model(sentences)

    unigrams = Counter(t for s in sentences for t in s)
    assert m.unigram_count == dict(unigrams)
    assert m.total_tokens == sum(len(s) for s in sentences)
    assert m.vocab_size == len(unigrams)

    sentence_counts = Counter()
    for s in sentences:
        for token in set(s):
            sentence_counts[token] += 1
    assert m.sentence_count == dict(sentence_counts)

    bigrams = Counter()
    for s in sentences:
        for i in range(len(s) - 1):
            bigrams[(s[i], s[i + 1])] += 1
    assert m.bigram_count == dict(bigrams)


class TestPersistence:
    def test_round_trip(self, fixture_model, tmp_path):
        path = tmp_path / "model.lm"
        save_model(fixture_model, path)
        loaded = load_model(path)
        assert loaded == fixture_model

    def test_round_trip_bit_exact(self, fixture_model, tmp_path):
        first = tmp_path / "a.lm"
        second = tmp_path / "b.lm"
        save_model(fixture_model, first)
        save_model(load_model(first), second)
        assert first.read_bytes() == second.read_bytes()

    def test_bad_magic(self, tmp_path):
        path = tmp_path / "junk.lm"
        path.write_text("not a model\n")
        with pytest.raises(ModelFormatError):
            load_model(path)

    def test_truncated(self, fixture_model, tmp_path):
        path = tmp_path / "model.lm"
        save_model(fixture_model, path)
        content = path.read_text().splitlines()
        path.write_text("\n".join(content[: len(content) // 2]) + "\n")
        with pytest.raises(ModelFormatError):
            load_model(path)
