"""Perplexity formulas against direct-product oracles, and selection rules."""

import math

import numpy as np
import pytest

from lexsimp.embeddings import MockSentenceEmbeddings
from lexsimp.langmodel import NGramModel, bigram_prob, build_model, unigram_prob
from lexsimp.ranking import (
    pp1,
    pp2,
    pp_score,
    rank_by_cosine,
    rank_by_perplexity,
    validate_phi,
)


def direct_pp1(model, tokens):
    """Oracle: (prod p(w_i)) ** (-1/n), no log space."""
    product = 1.0
    for token in tokens:
        product *= unigram_prob(model, token)
    return product ** (-1.0 / len(tokens))


def direct_pp2(model, tokens):
    """Oracle: (p(w1) * prod p(w_i | w_{i-1})) ** (-1/n)."""
    product = unigram_prob(model, tokens[0])
    for prev, word in zip(tokens, tokens[1:]):
        product *= bigram_prob(model, prev, word)
    return product ** (-1.0 / len(tokens))


class TestPP1:
    def test_the_cat(self, tiny_model):
        assert pp1(tiny_model, ["the", "cat"]) == pytest.approx(2 ** 1.5, rel=1e-9)
        assert pp1(tiny_model, ["the", "cat"]) == pytest.approx(
            direct_pp1(tiny_model, ["the", "cat"]), rel=1e-9
        )

    def test_certain_token_scores_one(self):
        model = build_model([["a"]])
        assert pp1(model, ["a"]) == pytest.approx(1.0)

    def test_the_the(self, tiny_model):
        assert pp1(tiny_model, ["the", "the"]) == pytest.approx(2.0, rel=1e-9)

    def test_empty_rejected(self, tiny_model):
        with pytest.raises(ValueError):
            pp1(tiny_model, [])


class TestPP2:
    def test_the_cat(self, tiny_model):
        assert pp2(tiny_model, ["the", "cat"]) == pytest.approx(2.0, rel=1e-9)

    def test_single_token_collapses_to_pp1(self, tiny_model):
        for word in ["the", "cat", "zebra"]:
            assert pp2(tiny_model, [word]) == pytest.approx(
                pp1(tiny_model, [word]), rel=1e-12
            )

    def test_cat_sat(self, tiny_model):
        assert pp2(tiny_model, ["cat", "sat"]) == pytest.approx(2.0, rel=1e-9)


class TestPPScore:
    def test_phi_zero_endpoint(self, tiny_model):
        score = pp_score(tiny_model, ["the", "cat"], 0.0)
        assert score.combined == pytest.approx(score.pp1)
        assert score.combined == pytest.approx(2 ** 1.5, rel=1e-9)

    def test_phi_one_endpoint(self, tiny_model):
        score = pp_score(tiny_model, ["the", "cat"], 1.0)
        assert score.combined == pytest.approx(score.pp2)
        assert score.combined == pytest.approx(2.0, rel=1e-9)

    def test_phi_half(self, tiny_model):
        score = pp_score(tiny_model, ["the", "cat"], 0.5)
        assert score.combined == pytest.approx(0.5 * 2 ** 1.5 + 0.5 * 2.0, rel=1e-9)

    def test_combined_between_endpoints(self, fixture_model):
        tokens = "the test was hard for every student .".split()
        for phi in (0.0, 0.25, 0.5, 0.75, 1.0):
            score = pp_score(fixture_model, tokens, phi)
            low, high = sorted((score.pp1, score.pp2))
            assert low - 1e-12 <= score.combined <= high + 1e-12

    def test_invalid_phi(self, tiny_model):
        for phi in (-0.1, 1.5, float("nan")):
            with pytest.raises(ValueError):
                pp_score(tiny_model, ["the"], phi)


def random_model_and_sentence(rng):
    vocab = [f"w{i}" for i in range(rng.integers(2, 11))]
    n_sentences = int(rng.integers(1, 6))
    sentences = [
        [vocab[rng.integers(0, len(vocab))] for _ in range(rng.integers(1, 7))]
        for _ in range(n_sentences)
    ]
    model = build_model(sentences)
    length = int(rng.integers(1, 7))
    tokens = [vocab[rng.integers(0, len(vocab))] for _ in range(length)]
    return model, tokens


def test_log_space_matches_direct_products():
    rng = np.random.default_rng(42)
    for _ in range(1000):
        model, tokens = random_model_and_sentence(rng)
        assert pp1(model, tokens) == pytest.approx(direct_pp1(model, tokens), rel=1e-9)
        assert pp2(model, tokens) == pytest.approx(direct_pp2(model, tokens), rel=1e-9)


def test_substitution_monotonicity_phi_zero(tiny_model):
    """Replacing a token with a strictly more probable one lowers pp1."""
    worse = ["the", "cat", "sat"]
    better = ["the", "the", "sat"]  # p(the) > p(cat)
    assert pp1(tiny_model, better) < pp1(tiny_model, worse)


class TestRankByPerplexity:
    def test_dominant_candidate_wins(self, tiny_model):
        candidates = [["the", "cat"], ["the", "the"]]
        best, score = rank_by_perplexity(tiny_model, candidates, 0.0)
        assert best == ["the", "the"]
        assert score.combined == pytest.approx(2.0)

    def test_single_candidate(self, tiny_model):
        best, _ = rank_by_perplexity(tiny_model, [["cat"]], 0.5)
        assert best == ["cat"]

    def test_tie_breaks_to_first(self, tiny_model):
        candidates = [["the", "cat"], ["the", "cat"]]
        best, _ = rank_by_perplexity(tiny_model, candidates, 0.0)
        assert best is not candidates[0]  # a copy, not the input object
        assert best == candidates[0]

    def test_output_is_an_input_element(self, fixture_model):
        rng = np.random.default_rng(3)
        vocab = sorted(fixture_model.vocabulary)
        for _ in range(20):
            candidates = [
                [vocab[rng.integers(0, len(vocab))] for _ in range(4)]
                for _ in range(5)
            ]
            best, _ = rank_by_perplexity(fixture_model, candidates, 0.5)
            assert best in candidates

    def test_empty_rejected(self, tiny_model):
        with pytest.raises(ValueError):
            rank_by_perplexity(tiny_model, [], 0.0)


class TestRankByCosine:
    def test_original_among_candidates_wins(self, mock_provider):
        original = "the cat sat on the mat".split()
        candidates = [
            "the dog sat on the mat".split(),
            original,
            "the cat lay on the mat".split(),
        ]
        best, sim = rank_by_cosine(original, candidates, mock_provider)
        assert best == original
        assert sim == pytest.approx(1.0)

    def test_fewer_substitutions_win(self, mock_provider):
        original = "the old wall encloses the town center".split()
        one = "the old wall surrounds the town center".split()
        two = "the old fence surrounds the town center".split()
        best, _ = rank_by_cosine(original, [two, one], mock_provider)
        assert best == one

    def test_single_candidate(self, mock_provider):
        candidate = "just one option".split()
        best, sim = rank_by_cosine("the original one".split(), [candidate], mock_provider)
        assert best == candidate
        assert -1.0 <= sim <= 1.0

    def test_output_is_an_input_element(self, mock_provider):
        original = "a b c".split()
        candidates = [["a", "b", x] for x in "defg"]
        best, _ = rank_by_cosine(original, candidates, mock_provider)
        assert best in candidates


def test_validate_phi_passthrough():
    assert validate_phi(0.0) == 0.0
    assert validate_phi(1) == 1.0
    with pytest.raises(ValueError):
        validate_phi(1.0001)
