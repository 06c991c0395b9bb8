"""Shared test resources.

``tiny_model`` is the two-sentence model whose counts are small enough to
tally by hand; most expected values in the unit tests were derived from it
on paper.  The fixture classifier thresholds on the raw occurrence-count
feature (complex iff the word appears at most twice in the corpus), which
makes pipeline behavior over the bundled corpus fully predictable.
"""

from __future__ import annotations

import numpy as np
import pytest

from lexsimp import fixtures
from lexsimp.complexity import ComplexityClassifier
from lexsimp.embeddings import MockSentenceEmbeddings, load_word_vectors
from lexsimp.langmodel import build_model, read_corpus
from lexsimp.thesaurus import load_thesaurus


def make_threshold_classifier(max_complex_count: float = 2.5) -> ComplexityClassifier:
    """Classifier that predicts complex iff occurrence_count < max_complex_count.

    Identity scaler; hidden unit 1 passes the count through ReLU, and the
    output layer compares it against the threshold.
    """
    return ComplexityClassifier(
        w1=np.array([[0, 0, 1, 0, 0], [0, 0, 0, 0, 0], [0, 0, 0, 0, 0]], dtype=float),
        b1=np.zeros(3),
        w2=np.array([[1, 0, 0], [-1, 0, 0]], dtype=float),
        b2=np.array([-max_complex_count, max_complex_count]),
        scaler_mean=np.zeros(5),
        scaler_std=np.ones(5),
    )


@pytest.fixture(scope="session")
def tiny_model():
    return build_model([["the", "cat", "sat"], ["the", "dog", "sat"]])


@pytest.fixture(scope="session")
def fixture_model():
    return build_model(read_corpus(fixtures.corpus_path()))


@pytest.fixture(scope="session")
def fixture_thesaurus():
    return load_thesaurus(fixtures.thesaurus_path())


@pytest.fixture(scope="session")
def fixture_vectors():
    return load_word_vectors(fixtures.vectors_path())


@pytest.fixture(scope="session")
def threshold_classifier():
    return make_threshold_classifier()


@pytest.fixture()
def mock_provider():
    return MockSentenceEmbeddings()


@pytest.fixture(scope="session")
def eval_sentences():
    originals = [
        line.split()
        for line in fixtures.eval_original_path().read_text(encoding="utf-8").splitlines()
        if line
    ]
    references = [
        line.split()
        for line in fixtures.eval_references_path().read_text(encoding="utf-8").splitlines()
        if line
    ]
    return originals, references
