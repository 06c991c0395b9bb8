"""Unigram/bigram statistics over a tokenized corpus.

The model records token occurrence counts, within-sentence bigram counts,
and the number of distinct sentences each token appears in.  These counts
back both the word-complexity features and the perplexity scoring used to
rank candidate sentences.

Unigram "probabilities" follow the f_w / |V| convention required by the
scoring functions.  They are comparative scores, not a normalized
distribution, and are deliberately left unnormalized.  Unseen unigrams and
bigrams are floored at 1 / (|V| * total_tokens), the largest value strictly
below every observed probability, so log-space scoring stays finite without
disturbing the ranking of observed events.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "CorpusError",
    "ModelFormatError",
    "NGramModel",
    "build_model",
    "unigram_prob",
    "bigram_prob",
    "word_stats",
    "save_model",
    "load_model",
    "read_corpus",
    "tokenize",
]

LM_MAGIC = "SIMPLEX-LM1"


class CorpusError(ValueError):
    """Raised when the corpus cannot back a model build."""


class ModelFormatError(ValueError):
    """Raised when a model cache file is malformed."""


def tokenize(line: str) -> list[str]:
    """Lowercase and split on whitespace.

    Corpus files are expected to be pre-tokenized (punctuation already
    spaced), so whitespace splitting is the whole tokenization policy.
    """
    return line.lower().split()


def read_corpus(path) -> list[list[str]]:
    """Read a one-sentence-per-line UTF-8 corpus file, skipping blank lines."""
    sentences = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            tokens = tokenize(line)
            if tokens:
                sentences.append(tokens)
    if not sentences:
        raise CorpusError(f"corpus file {path!r} contains no sentences")
    return sentences


@dataclass(frozen=True)
class NGramModel:
    """Immutable count tables; build once, share freely across threads."""

    vocabulary: frozenset[str]
    unigram_count: dict[str, int]
    bigram_count: dict[tuple[str, str], int]
    sentence_count: dict[str, int]
    total_tokens: int
    vocab_size: int

    @property
    def floor(self) -> float:
        """Probability floor for unseen unigrams and bigrams."""
        return 1.0 / (self.vocab_size * self.total_tokens)


def build_model(sentences: Sequence[Sequence[str]]) -> NGramModel:
    """Tally unigram, bigram, and per-sentence counts.

    Bigrams are counted within each sentence only; nothing crosses a
    sentence boundary.  Tokens are assumed lowercased by the caller.
    """
    if not sentences:
        raise CorpusError("cannot build a model from an empty corpus")

    unigrams: Counter[str] = Counter()
    bigrams: Counter[tuple[str, str]] = Counter()
    in_sentences: Counter[str] = Counter()

    for sentence in sentences:
        if not sentence:
            raise CorpusError("corpus contains an empty sentence")
        unigrams.update(sentence)
        in_sentences.update(set(sentence))
        bigrams.update(zip(sentence, sentence[1:]))

    return NGramModel(
        vocabulary=frozenset(unigrams),
        unigram_count=dict(unigrams),
        bigram_count=dict(bigrams),
        sentence_count=dict(in_sentences),
        total_tokens=sum(unigrams.values()),
        vocab_size=len(unigrams),
    )


def unigram_prob(model: NGramModel, word: str) -> float:
    """f_w / |V| for in-vocabulary words, the floor otherwise.

    Always positive, so downstream log-space scoring is safe for any
    query string.
    """
    count = model.unigram_count.get(word, 0)
    if count == 0:
        return model.floor
    return count / model.vocab_size


def bigram_prob(model: NGramModel, prev: str, word: str) -> float:
    """f_{v,w} / f_v for observed bigrams, the floor otherwise."""
    prev_count = model.unigram_count.get(prev, 0)
    pair_count = model.bigram_count.get((prev, word), 0)
    if prev_count == 0 or pair_count == 0:
        return model.floor
    return pair_count / prev_count


def word_stats(model: NGramModel, word: str) -> tuple[int, int]:
    """Return (occurrence count, distinct-sentence count); (0, 0) for OOV."""
    return (
        model.unigram_count.get(word, 0),
        model.sentence_count.get(word, 0),
    )


def save_model(model: NGramModel, path) -> None:
    """Write the versioned cache file.

    Layout: magic line; "vocab_size<TAB>total_tokens<TAB>bigram_rows";
    one "word<TAB>f_w<TAB>s_w" row per vocabulary word (sorted); one
    "v<TAB>w<TAB>f_vw" row per bigram (sorted).  Counts are integers, so
    the format round-trips bit-exactly.
    """
    lines = [LM_MAGIC]
    lines.append(f"{model.vocab_size}\t{model.total_tokens}\t{len(model.bigram_count)}")
    for word in sorted(model.vocabulary):
        lines.append(f"{word}\t{model.unigram_count[word]}\t{model.sentence_count[word]}")
    for (prev, word) in sorted(model.bigram_count):
        lines.append(f"{prev}\t{word}\t{model.bigram_count[(prev, word)]}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def load_model(path) -> NGramModel:
    """Read a cache file written by :func:`save_model`."""
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0] != LM_MAGIC:
        raise ModelFormatError(f"{path!r} is not a {LM_MAGIC} model cache")
    try:
        vocab_size, total_tokens, n_bigrams = (int(x) for x in lines[1].split("\t"))
        unigram_count: dict[str, int] = {}
        sentence_count: dict[str, int] = {}
        for line in lines[2 : 2 + vocab_size]:
            word, f_w, s_w = line.split("\t")
            unigram_count[word] = int(f_w)
            sentence_count[word] = int(s_w)
        bigram_count: dict[tuple[str, str], int] = {}
        for line in lines[2 + vocab_size : 2 + vocab_size + n_bigrams]:
            prev, word, f_vw = line.split("\t")
            bigram_count[(prev, word)] = int(f_vw)
    except (IndexError, ValueError) as exc:
        raise ModelFormatError(f"corrupt model cache {path!r}: {exc}") from exc
    if len(unigram_count) != vocab_size or len(bigram_count) != n_bigrams:
        raise ModelFormatError(f"corrupt model cache {path!r}: truncated tables")
    return NGramModel(
        vocabulary=frozenset(unigram_count),
        unigram_count=unigram_count,
        bigram_count=bigram_count,
        sentence_count=sentence_count,
        total_tokens=total_tokens,
        vocab_size=vocab_size,
    )


def is_model_cache(path) -> bool:
    """Sniff whether ``path`` holds a model cache rather than raw text."""
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.readline().rstrip("\n") == LM_MAGIC
    except (OSError, UnicodeDecodeError):
        return False
