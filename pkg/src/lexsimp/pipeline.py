"""End-to-end sentence simplification.

Tokens are examined left to right over the working sentence, so each
substitution is visible to the language-model context of the tokens after
it.  For every token predicted complex, synonyms are fetched by lemma and
part of speech, re-inflected to the surface form the slot requires, and
filtered down to simple words.  The surviving candidates are ranked by
combined perplexity (word-embedding mode, after an above-average cosine
filter on the synonyms) or by sentence-embedding cosine against the
working sentence (transformer mode).  Each decision is recorded in a
per-position trace that drives both the evaluation harness and the UI.

Tokens shorter than three characters and tokens without letters bypass
complexity prediction entirely and are never replaced.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .complexity import Complexity, ComplexityClassifier, extract_features, predict
from .embeddings import (
    EmbeddingError,
    SentenceEmbeddingProvider,
    WordVectorStore,
    cosine,
)
from .langmodel import NGramModel
from .morphology import POS, indefinite_article, infer_spec, inflect, lemmatize, tag_pos
from .ranking import PerplexityScore, cosine_scores, pp_score, score_candidates, validate_phi
from .thesaurus import ThesaurusError

__all__ = [
    "Mode",
    "SimplificationConfig",
    "ReplacementTrace",
    "SimplificationResult",
    "generate_candidates",
    "filter_synonyms_complexity",
    "filter_synonyms_cosine",
    "simplify",
]

TRACE_VERSION = "1"

_HAS_LETTER = re.compile(r"[a-z]", re.IGNORECASE)
_MIN_WORD_LENGTH = 3
_ARTICLES = {"a", "an"}


class Mode(str, Enum):
    WORD_EMBEDDING = "we"
    TRANSFORMER = "transformer"


@dataclass
class SimplificationConfig:
    """Resources and knobs for one simplification run."""

    mode: Mode
    model: NGramModel
    classifier: ComplexityClassifier
    thesaurus: object  # ThesaurusStore or RemoteThesaurus
    phi: float = 0.0
    word_vectors: WordVectorStore | None = None
    sentence_provider: SentenceEmbeddingProvider | None = None

    def __post_init__(self):
        self.mode = Mode(self.mode)
        self.phi = validate_phi(self.phi)
        if self.mode is Mode.WORD_EMBEDDING and self.word_vectors is None:
            raise ValueError("word-embedding mode requires a word vector store")
        if self.mode is Mode.TRANSFORMER and self.sentence_provider is None:
            raise ValueError("transformer mode requires a sentence embedding provider")


@dataclass
class ReplacementTrace:
    """What happened at one complex-word position (0-based index)."""

    position: int
    original: str
    probabilities: tuple[float, float]
    fetched: list[str] = field(default_factory=list)
    complexity_filtered: list[str] = field(default_factory=list)
    survivors: list[str] = field(default_factory=list)
    chosen: str | None = None
    candidate_scores: list[tuple[str, float]] = field(default_factory=list)
    article_fixed: bool = False
    cosine_filter_skipped: bool = False
    error: str | None = None

    def to_dict(self) -> dict:
        return {
            "position": self.position,
            "original": self.original,
            "probabilities": list(self.probabilities),
            "fetched": list(self.fetched),
            "complexity_filtered": list(self.complexity_filtered),
            "survivors": list(self.survivors),
            "chosen": self.chosen,
            "candidate_scores": [[text, score] for text, score in self.candidate_scores],
            "article_fixed": self.article_fixed,
            "cosine_filter_skipped": self.cosine_filter_skipped,
            "error": self.error,
        }


@dataclass
class SimplificationResult:
    output: list[str]
    traces: list[ReplacementTrace]
    final_pp_score: PerplexityScore

    @property
    def text(self) -> str:
        return " ".join(self.output)


def generate_candidates(
    tokens: Sequence[str],
    position: int,
    surfaces: Sequence[str],
) -> list[list[str]]:
    """One candidate sentence per synonym surface form.

    Only ``position`` changes, except that an immediately preceding
    "a"/"an" is re-agreed with the new word's initial letter.  Candidate
    order follows ``surfaces`` order.
    """
    if not 0 <= position < len(tokens):
        raise ValueError(f"position {position} out of range for {len(tokens)} tokens")
    candidates = []
    for surface in surfaces:
        candidate = list(tokens)
        candidate[position] = surface
        if position > 0 and candidate[position - 1].lower() in _ARTICLES:
            candidate[position - 1] = _match_case(
                indefinite_article(surface), candidate[position - 1]
            )
        candidates.append(candidate)
    return candidates


def _match_case(word: str, template: str) -> str:
    return word.capitalize() if template[:1].isupper() else word


def filter_synonyms_complexity(
    surfaces: Sequence[str],
    classifier: ComplexityClassifier,
    model: NGramModel,
    thesaurus,
) -> list[str]:
    """Keep only synonyms the classifier predicts simple; order preserved."""
    kept = []
    for surface in surfaces:
        label = predict(classifier, extract_features(surface, model, thesaurus))
        if label.label is Complexity.SIMPLE:
            kept.append(surface)
    return kept


def filter_synonyms_cosine(
    word: str,
    surfaces: Sequence[str],
    store: WordVectorStore,
) -> list[str]:
    """Keep synonyms whose vectors sit strictly above the average cosine.

    Synonyms without a vector are dropped.  If the target word itself has
    no vector the list passes through unfiltered, and if filtering would
    empty a non-empty input the single highest-cosine synonym survives
    (first position wins ties).
    """
    target = store.get(word)
    if target is None:
        return list(surfaces)
    scored: list[tuple[str, float]] = []
    for surface in surfaces:
        vec = store.get(surface)
        if vec is not None:
            scored.append((surface, cosine(target, vec)))
    if not scored:
        return []
    mean = sum(sim for _, sim in scored) / len(scored)
    kept = [surface for surface, sim in scored if sim > mean]
    if not kept:
        best = max(scored, key=lambda pair: pair[1])
        kept = [best[0]]
    return kept


def _bypass(word: str) -> bool:
    return len(word) < _MIN_WORD_LENGTH or not _HAS_LETTER.search(word)


def _synonym_surfaces(word: str, tag: POS, thesaurus) -> list[str]:
    """Lemma lookup plus re-inflection back to the slot's surface form."""
    lemma = lemmatize(word, tag)
    lemmas = thesaurus.lookup(lemma, tag)
    spec = infer_spec(word, tag)
    surfaces = []
    for candidate in lemmas:
        surface = inflect(candidate, spec) if spec is not None else candidate
        if surface and surface != word and surface not in surfaces:
            surfaces.append(surface)
    return surfaces


def simplify(tokens: Sequence[str], config: SimplificationConfig) -> SimplificationResult:
    """Run the full substitution pipeline over one sentence."""
    if not tokens or any((not t) or t.split() != [t] for t in tokens):
        raise ValueError("input must be a non-empty list of whitespace-free tokens")

    working = list(tokens)
    lowered = [t.lower() for t in working]
    tags = tag_pos(lowered)
    traces: list[ReplacementTrace] = []

    for position, word in enumerate(list(lowered)):
        if _bypass(word):
            continue
        label = predict(
            config.classifier, extract_features(word, config.model, config.thesaurus)
        )
        if label.label is Complexity.SIMPLE:
            continue

        trace = ReplacementTrace(
            position=position, original=working[position], probabilities=label.probabilities
        )
        traces.append(trace)

        try:
            surfaces = _synonym_surfaces(word, tags[position], config.thesaurus)
        except ThesaurusError as exc:
            trace.error = str(exc)
            continue
        trace.fetched = surfaces

        simple_surfaces = filter_synonyms_complexity(
            surfaces, config.classifier, config.model, config.thesaurus
        )
        trace.complexity_filtered = simple_surfaces

        if config.mode is Mode.WORD_EMBEDDING:
            assert config.word_vectors is not None
            if config.word_vectors.get(word) is None:
                trace.cosine_filter_skipped = True
                survivors = list(simple_surfaces)
            else:
                survivors = filter_synonyms_cosine(word, simple_surfaces, config.word_vectors)
        else:
            survivors = list(simple_surfaces)
        trace.survivors = survivors

        if not survivors:
            continue
        candidates = generate_candidates(working, position, survivors)

        if config.mode is Mode.WORD_EMBEDDING:
            # Score on lowercased copies: the language model is lowercase.
            scores = score_candidates(
                config.model, [[t.lower() for t in c] for c in candidates], config.phi
            )
            values = [s.combined for s in scores]
            best_idx = min(range(len(values)), key=lambda i: (values[i], i))
        else:
            assert config.sentence_provider is not None
            try:
                values = cosine_scores(working, candidates, config.sentence_provider)
            except EmbeddingError as exc:
                trace.error = str(exc)
                continue
            best_idx = max(range(len(values)), key=lambda i: (values[i], -i))
        trace.candidate_scores = [
            (" ".join(c), values[i]) for i, c in enumerate(candidates)
        ]

        best = candidates[best_idx]
        trace.chosen = best[position]
        trace.article_fixed = position > 0 and best[position - 1] != working[position - 1]
        working = best
        lowered = [t.lower() for t in working]

    final = pp_score(config.model, lowered, config.phi)
    return SimplificationResult(output=working, traces=traces, final_pp_score=final)
