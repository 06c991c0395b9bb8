"""Sentence scoring and candidate selection.

Two perplexity variants are computed in log space, base 2: a unigram form
(treating every token as independent) and a bigram form (first-order Markov,
with the opening token scored by its unigram probability).  The final score
mixes the two with a bigram factor phi in [0, 1]:

    combined = (1 - phi) * pp1 + phi * pp2

Lower is better for perplexity ranking; higher is better for cosine ranking.
Ties always break toward the earliest candidate, which follows thesaurus
order, so selection is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .embeddings import SentenceEmbeddingProvider, cosine, embed_sentence
from .langmodel import NGramModel, bigram_prob, unigram_prob

__all__ = [
    "PerplexityScore",
    "validate_phi",
    "pp1",
    "pp2",
    "pp_score",
    "score_candidates",
    "rank_by_perplexity",
    "cosine_scores",
    "rank_by_cosine",
]


def validate_phi(phi: float) -> float:
    if not (isinstance(phi, (int, float)) and 0.0 <= phi <= 1.0):
        raise ValueError(f"bigram factor must be in [0, 1], got {phi!r}")
    return float(phi)


@dataclass(frozen=True)
class PerplexityScore:
    pp1: float
    pp2: float
    phi: float
    combined: float


def pp1(model: NGramModel, tokens: Sequence[str]) -> float:
    """Unigram perplexity: 2 ** (-(1/n) * sum of log2 p(w_i))."""
    if not tokens:
        raise ValueError("cannot score an empty sentence")
    log_sum = sum(math.log2(unigram_prob(model, w)) for w in tokens)
    return 2.0 ** (-log_sum / len(tokens))


def pp2(model: NGramModel, tokens: Sequence[str]) -> float:
    """Bigram perplexity; the first factor is the unigram p(w_1)."""
    if not tokens:
        raise ValueError("cannot score an empty sentence")
    log_sum = math.log2(unigram_prob(model, tokens[0]))
    for prev, word in zip(tokens, tokens[1:]):
        log_sum += math.log2(bigram_prob(model, prev, word))
    return 2.0 ** (-log_sum / len(tokens))


def pp_score(model: NGramModel, tokens: Sequence[str], phi: float) -> PerplexityScore:
    """Mix the two perplexities: (1 - phi) * pp1 + phi * pp2."""
    phi = validate_phi(phi)
    p1 = pp1(model, tokens)
    p2 = pp2(model, tokens)
    return PerplexityScore(pp1=p1, pp2=p2, phi=phi, combined=(1.0 - phi) * p1 + phi * p2)


def score_candidates(
    model: NGramModel,
    candidates: Sequence[Sequence[str]],
    phi: float,
) -> list[PerplexityScore]:
    """Combined perplexity for every candidate, in order."""
    return [pp_score(model, candidate, phi) for candidate in candidates]


def rank_by_perplexity(
    model: NGramModel,
    candidates: Sequence[Sequence[str]],
    phi: float,
) -> tuple[list[str], PerplexityScore]:
    """Return the candidate with the lowest combined perplexity.

    Ties break toward the earliest list position.
    """
    if not candidates:
        raise ValueError("no candidates to rank")
    scores = score_candidates(model, candidates, phi)
    best_idx = min(range(len(scores)), key=lambda i: (scores[i].combined, i))
    return list(candidates[best_idx]), scores[best_idx]


def cosine_scores(
    original: Sequence[str],
    candidates: Sequence[Sequence[str]],
    provider: SentenceEmbeddingProvider,
) -> list[float]:
    """Cosine of each candidate's sentence embedding against the original's."""
    reference = embed_sentence(provider, original)
    return [cosine(reference, embed_sentence(provider, c)) for c in candidates]


def rank_by_cosine(
    original: Sequence[str],
    candidates: Sequence[Sequence[str]],
    provider: SentenceEmbeddingProvider,
) -> tuple[list[str], float]:
    """Return the candidate whose sentence embedding is closest to the original.

    Ties break toward the earliest list position.  Provider failures
    propagate to the caller.
    """
    if not candidates:
        raise ValueError("no candidates to rank")
    sims = cosine_scores(original, candidates, provider)
    best_idx = max(range(len(sims)), key=lambda i: (sims[i], -i))
    return list(candidates[best_idx]), sims[best_idx]
