"""Resource loading and configuration shared by the CLI and HTTP service.

Everything loads once at startup and is shared read-only afterwards; the
pipeline never loads resources per request.  The corpus path may point at
either a raw one-sentence-per-line text file or a saved model cache, and
the lexicon path at either a "word<TAB>rating" lexicon (a classifier is
then trained deterministically at load time) or a saved classifier file;
both are sniffed by their magic strings.

The sentence-embedding setting is a single string: an http(s) URL selects
the remote provider, the literal "mock" (optionally "mock:<seed>") selects
the deterministic mock, and anything else is read as a cache-file path.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from . import complexity, embeddings, langmodel, thesaurus
from .complexity import ComplexityClassifier, TrainConfig, extract_features, relabel
from .embeddings import SentenceEmbeddingProvider, WordVectorStore
from .langmodel import NGramModel
from .pipeline import Mode, SimplificationConfig

__all__ = [
    "ConfigError",
    "ResourceError",
    "ServiceConfig",
    "Resources",
    "load_resources",
    "train_from_lexicon",
    "DEFAULT_MODEL_ID",
]

DEFAULT_MODEL_ID = "default"

ENV_CORPUS = "SIMPLEX_CORPUS"
ENV_LEXICON = "SIMPLEX_LEXICON"
ENV_THESAURUS = "SIMPLEX_THESAURUS"
ENV_VECTORS = "SIMPLEX_VECTORS"
ENV_EMBED_ENDPOINT = "SIMPLEX_EMBED_ENDPOINT"
ENV_LISTEN = "SIMPLEX_LISTEN"
ENV_PHI = "SIMPLEX_PHI"
ENV_MODE = "SIMPLEX_MODE"


class ConfigError(ValueError):
    """Configuration is invalid or incomplete (CLI exit code 2)."""


class ResourceError(RuntimeError):
    """A configured resource failed to load (CLI exit code 3)."""


@dataclass
class ServiceConfig:
    corpus_path: str
    lexicon_path: str
    thesaurus_path: str
    vectors_path: str | None = None
    embed_endpoint: str | None = None
    listen: str = "127.0.0.1:8000"
    phi: float = 0.0
    mode: str = "we"

    @classmethod
    def from_env(cls, env: dict | None = None) -> "ServiceConfig":
        env = dict(os.environ if env is None else env)
        missing = [
            name
            for name in (ENV_CORPUS, ENV_LEXICON, ENV_THESAURUS)
            if not env.get(name)
        ]
        if missing:
            raise ConfigError(f"missing environment variables: {', '.join(missing)}")
        try:
            phi = float(env.get(ENV_PHI, "0"))
        except ValueError as exc:
            raise ConfigError(f"{ENV_PHI} must be a number: {exc}") from exc
        return cls(
            corpus_path=env[ENV_CORPUS],
            lexicon_path=env[ENV_LEXICON],
            thesaurus_path=env[ENV_THESAURUS],
            vectors_path=env.get(ENV_VECTORS) or None,
            embed_endpoint=env.get(ENV_EMBED_ENDPOINT) or None,
            listen=env.get(ENV_LISTEN, "127.0.0.1:8000"),
            phi=phi,
            mode=env.get(ENV_MODE, "we"),
        )

    def validate(self) -> None:
        if not 0.0 <= self.phi <= 1.0:
            raise ConfigError(f"phi must be in [0, 1], got {self.phi}")
        try:
            mode = Mode(self.mode)
        except ValueError as exc:
            raise ConfigError(f"mode must be 'we' or 'transformer', got {self.mode!r}") from exc
        if mode is Mode.WORD_EMBEDDING and not self.vectors_path:
            raise ConfigError("word-embedding mode requires a word-vector path")
        if mode is Mode.TRANSFORMER and not self.embed_endpoint:
            raise ConfigError("transformer mode requires an embedding endpoint or cache path")


def train_from_lexicon(
    lexicon_path,
    model: NGramModel,
    store,
    seed: int = 0,
) -> ComplexityClassifier:
    """Build a classifier from a rating lexicon, deterministically."""
    entries = complexity.read_lexicon(lexicon_path)
    dataset = [
        (extract_features(word, model, store), relabel(rating))
        for word, rating in entries
    ]
    return complexity.train(dataset, TrainConfig(seed=seed))


@dataclass
class Resources:
    """Everything a simplification run needs, loaded once."""

    model: NGramModel
    classifier: ComplexityClassifier
    thesaurus: thesaurus.ThesaurusStore
    word_vectors: WordVectorStore | None
    embed_setting: str | None
    default_phi: float
    default_mode: Mode
    _providers: dict[str, SentenceEmbeddingProvider] = field(default_factory=dict)

    def provider_for(self, model_id: str) -> SentenceEmbeddingProvider:
        """Resolve (and cache) the sentence-embedding provider for a model id."""
        if self.embed_setting is None:
            raise ResourceError("no sentence-embedding endpoint or cache configured")
        cached = self._providers.get(model_id)
        if cached is not None:
            return cached
        setting = self.embed_setting
        if setting.startswith(("http://", "https://")):
            provider: SentenceEmbeddingProvider = embeddings.RemoteSentenceEmbeddings(
                setting, model_id
            )
        elif setting == "mock" or setting.startswith("mock:"):
            seed = int(setting.split(":", 1)[1]) if ":" in setting else 0
            provider = embeddings.MockSentenceEmbeddings(model_id=model_id, seed=seed)
        else:
            try:
                provider = embeddings.CachedSentenceEmbeddings(setting, model_id)
            except (OSError, embeddings.VectorParseError) as exc:
                raise ResourceError(f"embedding cache {setting!r}: {exc}") from exc
        self._providers[model_id] = provider
        return provider

    def pipeline_config(
        self,
        mode: Mode,
        phi: float,
        model_id: str = DEFAULT_MODEL_ID,
    ) -> SimplificationConfig:
        return SimplificationConfig(
            mode=mode,
            model=self.model,
            classifier=self.classifier,
            thesaurus=self.thesaurus,
            phi=phi,
            word_vectors=self.word_vectors,
            sentence_provider=(
                self.provider_for(model_id) if mode is Mode.TRANSFORMER else None
            ),
        )


def load_resources(config: ServiceConfig) -> Resources:
    """Load every configured resource; raises ResourceError on failure."""
    config.validate()
    try:
        if langmodel.is_model_cache(config.corpus_path):
            model = langmodel.load_model(config.corpus_path)
        else:
            model = langmodel.build_model(langmodel.read_corpus(config.corpus_path))
    except (OSError, ValueError) as exc:
        raise ResourceError(f"corpus {config.corpus_path!r}: {exc}") from exc

    try:
        store = thesaurus.load_thesaurus(config.thesaurus_path)
    except (OSError, thesaurus.ThesaurusError) as exc:
        raise ResourceError(f"thesaurus {config.thesaurus_path!r}: {exc}") from exc

    try:
        if complexity.is_classifier_file(config.lexicon_path):
            classifier = complexity.load_classifier(config.lexicon_path)
        else:
            classifier = train_from_lexicon(config.lexicon_path, model, store)
    except (OSError, ValueError) as exc:
        raise ResourceError(f"lexicon {config.lexicon_path!r}: {exc}") from exc

    word_vectors = None
    if config.vectors_path:
        try:
            word_vectors = embeddings.load_word_vectors(config.vectors_path)
        except (OSError, embeddings.VectorParseError) as exc:
            raise ResourceError(f"word vectors {config.vectors_path!r}: {exc}") from exc

    return Resources(
        model=model,
        classifier=classifier,
        thesaurus=store,
        word_vectors=word_vectors,
        embed_setting=config.embed_endpoint,
        default_phi=config.phi,
        default_mode=Mode(config.mode),
    )
