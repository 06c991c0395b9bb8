"""Paths to the bundled desk-scale fixture resources.

These back the demos and the test suite: a ~900-token corpus, a pinned
offline thesaurus, hand-shaped word vectors whose cosine orderings are
fixed, a small rating lexicon, and an aligned evaluation pair.
"""

from __future__ import annotations

from importlib import resources

__all__ = [
    "corpus_path",
    "thesaurus_path",
    "vectors_path",
    "lexicon_path",
    "eval_original_path",
    "eval_references_path",
]


def _fixture(name: str):
    return resources.files("lexsimp").joinpath("data", "fixtures", name)


def corpus_path():
    return _fixture("corpus.txt")


def thesaurus_path():
    return _fixture("thesaurus.tsv")


def vectors_path():
    return _fixture("vectors.txt")


def lexicon_path():
    return _fixture("complexity_lexicon.tsv")


def eval_original_path():
    return _fixture("eval_original.txt")


def eval_references_path():
    return _fixture("eval_references.txt")
