"""Lexical text simplification.

Detects complex words in a tokenized English sentence, generates
grammatically fitted synonym candidates, and picks the best simplified
sentence by n-gram perplexity or sentence-embedding cosine similarity.
Ships with an evaluation harness (SARI, perplexity decrease), a CLI, and
an HTTP service.
"""

from .complexity import (
    Complexity,
    ComplexityClassifier,
    ComplexityLabel,
    TrainConfig,
    WordFeatureVector,
    extract_features,
    predict,
    relabel,
    train,
)
from .embeddings import (
    CachedSentenceEmbeddings,
    MockSentenceEmbeddings,
    RemoteSentenceEmbeddings,
    WordVectorStore,
    cosine,
    load_word_vectors,
)
from .evalmetrics import EvaluationRecord, EvaluationReport, evaluate_corpus, perplexity_decrease, sari
from .langmodel import NGramModel, bigram_prob, build_model, unigram_prob, word_stats
from .morphology import POS, InflectionSpec, infer_spec, inflect, lemmatize, tag_pos
from .pipeline import (
    Mode,
    ReplacementTrace,
    SimplificationConfig,
    SimplificationResult,
    simplify,
)
from .ranking import PerplexityScore, pp1, pp2, pp_score, rank_by_cosine, rank_by_perplexity
from .thesaurus import RemoteThesaurus, ThesaurusStore, load_thesaurus

__version__ = "0.1.0"
