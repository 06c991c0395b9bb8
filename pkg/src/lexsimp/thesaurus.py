"""Synonym lookup and sense-count features.

The primary provider is an offline tab-separated snapshot so every lookup
is deterministic and tests stay hermetic.  An optional remote provider
implements the same contract over HTTP (GET /synonyms?lemma=&pos=) with a
per-session cache; it is off by default and the pipeline degrades to "no
synonyms" when it fails.
"""

from __future__ import annotations

from collections import defaultdict
from urllib.parse import urlencode

import requests

from .morphology import POS

__all__ = [
    "ThesaurusError",
    "ThesaurusFormatError",
    "ThesaurusProviderError",
    "ThesaurusStore",
    "load_thesaurus",
    "RemoteThesaurus",
]


class ThesaurusError(Exception):
    """Base class for thesaurus failures."""


class ThesaurusFormatError(ThesaurusError):
    """The offline thesaurus file is malformed."""


class ThesaurusProviderError(ThesaurusError):
    """The remote synonym provider failed or is unreachable."""


class ThesaurusStore:
    """Offline synonym store indexed by (lemma, pos).

    Lookup results never contain the query lemma and are deduplicated in
    file order.  synset_size counts sense groups recorded for a word
    across all parts of speech.
    """

    def __init__(
        self,
        synonyms: dict[tuple[str, POS], list[str]],
        sense_counts: dict[str, int],
    ):
        self._synonyms = synonyms
        self._sense_counts = sense_counts

    def lookup(self, lemma: str, pos: POS) -> list[str]:
        return list(self._synonyms.get((lemma, pos), ()))

    def synset_size(self, word: str) -> int:
        return self._sense_counts.get(word, 0)

    def __len__(self) -> int:
        return len(self._synonyms)


def load_thesaurus(path) -> ThesaurusStore:
    """Parse "lemma<TAB>pos<TAB>sense_count<TAB>syn1,syn2,..." records.

    Duplicate (lemma, pos) records merge: synonym lists union in order,
    sense counts add up.
    """
    synonyms: dict[tuple[str, POS], list[str]] = {}
    sense_counts: dict[str, int] = defaultdict(int)
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 4:
                raise ThesaurusFormatError(f"{path}:{lineno}: expected 4 fields, got {len(parts)}")
            lemma, pos_str, count_str, syn_str = parts
            try:
                pos = POS(pos_str)
                senses = int(count_str)
            except ValueError as exc:
                raise ThesaurusFormatError(f"{path}:{lineno}: {exc}") from exc
            entry = synonyms.setdefault((lemma, pos), [])
            for syn in syn_str.split(","):
                syn = syn.strip()
                if syn and syn != lemma and syn not in entry:
                    entry.append(syn)
            sense_counts[lemma] += senses
    return ThesaurusStore(synonyms, dict(sense_counts))


class RemoteThesaurus:
    """Synonym provider backed by a remote endpoint.

    Contract: GET <endpoint>?lemma=<lemma>&pos=<pos> returns
    {"synonyms": [...], "sense_count": n}.  Responses are cached so
    repeated queries are deterministic within a session.
    """

    def __init__(self, endpoint: str, timeout: float = 10.0):
        self.endpoint = endpoint
        self.timeout = timeout
        self._cache: dict[tuple[str, POS], tuple[list[str], int]] = {}

    def _fetch(self, lemma: str, pos: POS) -> tuple[list[str], int]:
        key = (lemma, pos)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        url = f"{self.endpoint}?{urlencode({'lemma': lemma, 'pos': pos.value})}"
        try:
            resp = requests.get(url, timeout=self.timeout)
            resp.raise_for_status()
            payload = resp.json()
            syns = [s for s in payload["synonyms"] if s != lemma]
            deduped: list[str] = []
            for syn in syns:
                if syn not in deduped:
                    deduped.append(syn)
            result = (deduped, int(payload.get("sense_count", 0)))
        except (requests.RequestException, KeyError, ValueError, TypeError) as exc:
            raise ThesaurusProviderError(f"synonym endpoint {self.endpoint} failed: {exc}") from exc
        self._cache[key] = result
        return result

    def lookup(self, lemma: str, pos: POS) -> list[str]:
        return list(self._fetch(lemma, pos)[0])

    def synset_size(self, word: str) -> int:
        total = 0
        for pos in (POS.NOUN, POS.VERB, POS.ADJ, POS.ADV):
            total += self._fetch(word, pos)[1]
        return total
