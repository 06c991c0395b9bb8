"""Word vectors, sentence vectors, and cosine similarity.

Word vectors come from a plain-text file (one word plus its components per
line).  Sentence vectors come from a provider with three interchangeable
modes: a remote HTTP endpoint, a precomputed cache file, or a deterministic
mock that needs no model runtime.  The engine never hosts a neural model
itself; transformer inference stays out of process behind the provider
contract.
"""

from __future__ import annotations

import hashlib
import json
from typing import Protocol, Sequence

import numpy as np
import requests

__all__ = [
    "EmbeddingError",
    "ZeroVectorError",
    "VectorParseError",
    "ProviderError",
    "MissingEmbeddingError",
    "cosine",
    "WordVectorStore",
    "load_word_vectors",
    "SentenceEmbeddingProvider",
    "MockSentenceEmbeddings",
    "CachedSentenceEmbeddings",
    "RemoteSentenceEmbeddings",
    "embed_sentence",
    "write_embedding_cache",
]

EMB_CACHE_MAGIC = "SIMPLEX-EMB1"


class EmbeddingError(Exception):
    """Base class for embedding failures."""


class ZeroVectorError(EmbeddingError):
    """Cosine similarity is undefined for a zero-norm vector."""


class VectorParseError(EmbeddingError):
    """A word-vector or cache file is malformed."""


class ProviderError(EmbeddingError):
    """A remote embedding provider failed or is unreachable."""


class MissingEmbeddingError(EmbeddingError):
    """A cache-file provider has no entry for the requested sentence."""


def cosine(a, b) -> float:
    """Cosine similarity of two equal-dimension vectors, clamped to [-1, 1]."""
    va = np.asarray(a, dtype=np.float64)
    vb = np.asarray(b, dtype=np.float64)
    if va.shape != vb.shape:
        raise ValueError(f"dimension mismatch: {va.shape} vs {vb.shape}")
    na = float(np.linalg.norm(va))
    nb = float(np.linalg.norm(vb))
    if na == 0.0 or nb == 0.0:
        raise ZeroVectorError("cosine similarity is undefined for a zero vector")
    return float(np.clip(np.dot(va, vb) / (na * nb), -1.0, 1.0))


class WordVectorStore:
    """Fixed-dimension word -> vector map.

    Lookups for absent words return ``None``; a zero vector is never
    substituted because it would poison cosine similarity.
    """

    def __init__(self, vectors: dict[str, np.ndarray], dim: int):
        self.dim = dim
        self._vectors = vectors

    def get(self, word: str) -> np.ndarray | None:
        return self._vectors.get(word)

    def __contains__(self, word: str) -> bool:
        return word in self._vectors

    def __len__(self) -> int:
        return len(self._vectors)


def load_word_vectors(path) -> WordVectorStore:
    """Parse a text vector file: "word c1 c2 ... cd", one word per line.

    An optional leading "count dim" header line is accepted and skipped.
    The first data line fixes the dimension; any later line that disagrees
    is a parse error naming the offending line.
    """
    vectors: dict[str, np.ndarray] = {}
    dim: int | None = None
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            parts = line.split()
            if not parts:
                continue
            if lineno == 1 and len(parts) == 2:
                try:
                    int(parts[0]), int(parts[1])
                    continue  # header line
                except ValueError:
                    pass
            word, comps = parts[0], parts[1:]
            if not comps:
                raise VectorParseError(f"{path}:{lineno}: no vector components")
            try:
                vec = np.array([float(c) for c in comps], dtype=np.float64)
            except ValueError as exc:
                raise VectorParseError(f"{path}:{lineno}: {exc}") from exc
            if not np.all(np.isfinite(vec)):
                raise VectorParseError(f"{path}:{lineno}: non-finite component")
            if dim is None:
                dim = len(vec)
            elif len(vec) != dim:
                raise VectorParseError(
                    f"{path}:{lineno}: dimension {len(vec)} != {dim}"
                )
            vectors[word] = vec
    if dim is None:
        raise VectorParseError(f"{path}: no vectors found")
    return WordVectorStore(vectors, dim)


class SentenceEmbeddingProvider(Protocol):
    """Same sentence + same model id => same vector, within a session."""

    model_id: str

    def embed(self, sentence: str) -> np.ndarray:
        ...

    def ping(self) -> None:
        """Raise ProviderError if the provider cannot serve requests."""


def embed_sentence(provider: SentenceEmbeddingProvider, tokens: Sequence[str]) -> np.ndarray:
    """Embed a token sequence through the provider (space-joined)."""
    return provider.embed(" ".join(tokens))


class MockSentenceEmbeddings:
    """Deterministic hash-derived sentence embeddings for hermetic tests.

    Each token maps to a fixed unit vector seeded from a digest of the
    token, and a sentence embeds as the mean of its token vectors.  A
    single-word substitution therefore moves the sentence vector by a
    bounded, proportional amount, which is exactly what pipeline tests
    need from a stand-in for a transformer backend.
    """

    def __init__(self, model_id: str = "mock", dim: int = 256, seed: int = 0):
        self.model_id = model_id
        self.dim = dim
        self.seed = seed
        self._token_cache: dict[str, np.ndarray] = {}

    def _token_vector(self, token: str) -> np.ndarray:
        cached = self._token_cache.get(token)
        if cached is not None:
            return cached
        digest = hashlib.sha256(f"{self.model_id}\x1f{self.seed}\x1f{token}".encode()).digest()
        rng = np.random.default_rng(int.from_bytes(digest[:8], "little"))
        vec = rng.standard_normal(self.dim)
        vec /= np.linalg.norm(vec)
        self._token_cache[token] = vec
        return vec

    def embed(self, sentence: str) -> np.ndarray:
        tokens = sentence.split()
        if not tokens:
            raise ValueError("cannot embed an empty sentence")
        return np.mean([self._token_vector(t) for t in tokens], axis=0)

    def ping(self) -> None:
        return None


class CachedSentenceEmbeddings:
    """Sentence embeddings read from a precomputed cache file."""

    def __init__(self, path, model_id: str):
        self.model_id = model_id
        self._table = _read_embedding_cache(path)
        self._path = str(path)

    def embed(self, sentence: str) -> np.ndarray:
        try:
            return self._table[(self.model_id, sentence)]
        except KeyError:
            raise MissingEmbeddingError(
                f"no cached embedding for model {self.model_id!r} and "
                f"sentence {sentence!r} in {self._path}"
            ) from None

    def ping(self) -> None:
        return None


class RemoteSentenceEmbeddings:
    """Sentence embeddings from a remote endpoint.

    Contract: POST <endpoint> with {"model": id, "sentences": [...]}
    returns {"vectors": [...]} in the same order.  Responses are cached
    per sentence so repeated queries are deterministic within a session.
    """

    def __init__(self, endpoint: str, model_id: str, timeout: float = 10.0):
        self.endpoint = endpoint
        self.model_id = model_id
        self.timeout = timeout
        self._cache: dict[str, np.ndarray] = {}

    def _post(self, sentences: list[str]) -> list[list[float]]:
        try:
            resp = requests.post(
                self.endpoint,
                json={"model": self.model_id, "sentences": sentences},
                timeout=self.timeout,
            )
            resp.raise_for_status()
            return resp.json()["vectors"]
        except (requests.RequestException, KeyError, ValueError) as exc:
            raise ProviderError(f"embedding endpoint {self.endpoint} failed: {exc}") from exc

    def embed(self, sentence: str) -> np.ndarray:
        cached = self._cache.get(sentence)
        if cached is not None:
            return cached
        vectors = self._post([sentence])
        if len(vectors) != 1:
            raise ProviderError(f"embedding endpoint returned {len(vectors)} vectors for 1 sentence")
        vec = np.asarray(vectors[0], dtype=np.float64)
        self._cache[sentence] = vec
        return vec

    def ping(self) -> None:
        self._post([])


def write_embedding_cache(path, entries: dict[tuple[str, str], Sequence[float]]) -> None:
    """Write a cache file keyed by (model id, exact sentence string)."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(EMB_CACHE_MAGIC + "\n")
        for (model_id, sentence), vec in entries.items():
            record = {
                "model": model_id,
                "sentence": sentence,
                "vector": [float(x) for x in vec],
            }
            fh.write(json.dumps(record) + "\n")


def _read_embedding_cache(path) -> dict[tuple[str, str], np.ndarray]:
    table: dict[tuple[str, str], np.ndarray] = {}
    with open(path, encoding="utf-8") as fh:
        magic = fh.readline().rstrip("\n")
        if magic != EMB_CACHE_MAGIC:
            raise VectorParseError(f"{path} is not a {EMB_CACHE_MAGIC} cache file")
        for lineno, line in enumerate(fh, start=2):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
                key = (record["model"], record["sentence"])
                table[key] = np.asarray(record["vector"], dtype=np.float64)
            except (KeyError, ValueError, TypeError) as exc:
                raise VectorParseError(f"{path}:{lineno}: {exc}") from exc
    return table
