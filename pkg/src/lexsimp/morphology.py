"""Rule-plus-exception-table English morphology.

Covers three jobs the substitution pipeline needs: tagging tokens with a
coarse part of speech, reducing an inflected surface form to its lemma
before thesaurus lookup, and re-inflecting a synonym lemma into the surface
form the sentence requires.

All behavior is driven by bundled data tables (a tag lexicon over surface
forms, a base-form lexicon, irregular-form tables, and explicit lemma
exceptions) plus regular suffix rules.  The coverage target is the bundled
round-trip lexicon, not all of English: for every (surface, tag) entry
there, inflect(lemmatize(surface), infer_spec(surface)) reproduces the
surface exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources
from typing import Sequence

__all__ = [
    "POS",
    "InflectionSpec",
    "tag_pos",
    "lemmatize",
    "infer_spec",
    "inflect",
    "indefinite_article",
]


class POS(str, Enum):
    NOUN = "noun"
    VERB = "verb"
    ADJ = "adj"
    ADV = "adv"
    OTHER = "other"


VERB_FORMS = ("base", "past", "past_participle", "present_participle", "third_singular")
NOUN_FORMS = ("singular", "plural")
DEGREE_FORMS = ("positive", "comparative", "superlative")

_FORMS_FOR_POS = {
    POS.NOUN: NOUN_FORMS,
    POS.VERB: VERB_FORMS,
    POS.ADJ: DEGREE_FORMS,
    POS.ADV: DEGREE_FORMS,
}


@dataclass(frozen=True)
class InflectionSpec:
    """A target surface form: verb tense, noun number, or adjective degree."""

    pos: POS
    form: str

    def __post_init__(self):
        allowed = _FORMS_FOR_POS.get(self.pos)
        if allowed is None or self.form not in allowed:
            raise ValueError(f"form {self.form!r} is not valid for {self.pos.value}")


_VOWELS = "aeiou"
_HAS_LETTER = re.compile(r"[a-z]", re.IGNORECASE)
_VOWEL_GROUPS = re.compile(r"[aeiouy]+")


@dataclass(frozen=True)
class _VerbForms:
    past: str
    past_participle: str
    third_singular: str | None = None
    present_participle: str | None = None


@dataclass(frozen=True)
class _Tables:
    primary_tag: dict[str, POS]
    base_forms: frozenset[tuple[str, POS]]
    lemma_exceptions: dict[tuple[str, POS], str]
    verb_irregular: dict[str, _VerbForms]
    noun_irregular: dict[str, str]
    adj_irregular: dict[str, tuple[str, str]]
    verb_reverse: dict[str, tuple[str, str]]
    noun_reverse: dict[str, str]
    adj_reverse: dict[str, tuple[str, str]]


def _data_path(name: str):
    return resources.files("lexsimp").joinpath("data", "morphology", name)


def _read_rows(name: str) -> list[list[str]]:
    rows = []
    with _data_path(name).open(encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            rows.append(line.split("\t"))
    return rows


@lru_cache(maxsize=1)
def _tables() -> _Tables:
    primary_tag: dict[str, POS] = {}
    for word, pos in _read_rows("tag_lexicon.tsv"):
        primary_tag.setdefault(word, POS(pos))

    base_forms = frozenset(
        (word, POS(pos)) for word, pos in _read_rows("base_lexicon.tsv")
    )

    verb_irregular: dict[str, _VerbForms] = {}
    verb_reverse: dict[str, tuple[str, str]] = {}
    for row in _read_rows("verb_irregulars.tsv"):
        lemma, past, past_part = row[0], row[1], row[2]
        third = row[3] if len(row) > 3 and row[3] != "-" else None
        pres = row[4] if len(row) > 4 and row[4] != "-" else None
        verb_irregular[lemma] = _VerbForms(past, past_part, third, pres)
        # Reverse map prefers the participle reading for surfaces that
        # serve as both past and past participle.
        verb_reverse.setdefault(past, (lemma, "past"))
        verb_reverse[past_part] = (lemma, "past_participle")
        if third:
            verb_reverse[third] = (lemma, "third_singular")
        if pres:
            verb_reverse[pres] = (lemma, "present_participle")

    noun_irregular: dict[str, str] = {}
    noun_reverse: dict[str, str] = {}
    for lemma, plural in _read_rows("noun_irregulars.tsv"):
        noun_irregular[lemma] = plural
        noun_reverse[plural] = lemma

    adj_irregular: dict[str, tuple[str, str]] = {}
    adj_reverse: dict[str, tuple[str, str]] = {}
    for lemma, comp, sup in _read_rows("adj_irregulars.tsv"):
        adj_irregular[lemma] = (comp, sup)
        adj_reverse[comp] = (lemma, "comparative")
        adj_reverse[sup] = (lemma, "superlative")

    lemma_exceptions: dict[tuple[str, POS], str] = {}
    for surface, pos, lemma in _read_rows("lemma_exceptions.tsv"):
        lemma_exceptions[(surface, POS(pos))] = lemma
    for surface, (lemma, _form) in verb_reverse.items():
        lemma_exceptions.setdefault((surface, POS.VERB), lemma)
    for surface, lemma in noun_reverse.items():
        lemma_exceptions.setdefault((surface, POS.NOUN), lemma)
    for surface, (lemma, _form) in adj_reverse.items():
        lemma_exceptions.setdefault((surface, POS.ADJ), lemma)
        lemma_exceptions.setdefault((surface, POS.ADV), lemma)

    return _Tables(
        primary_tag=primary_tag,
        base_forms=base_forms,
        lemma_exceptions=lemma_exceptions,
        verb_irregular=verb_irregular,
        noun_irregular=noun_irregular,
        adj_irregular=adj_irregular,
        verb_reverse=verb_reverse,
        noun_reverse=noun_reverse,
        adj_reverse=adj_reverse,
    )


# ---------------------------------------------------------------------------
# Tagging


def tag_pos(tokens: Sequence[str]) -> list[POS]:
    """One coarse tag per token: lexicon first, suffix heuristics after."""
    if not tokens:
        raise ValueError("cannot tag an empty sentence")
    tables = _tables()
    tags = []
    for token in tokens:
        word = token.lower()
        if not _HAS_LETTER.search(word):
            tags.append(POS.OTHER)
            continue
        tag = tables.primary_tag.get(word)
        if tag is None:
            tag = _suffix_tag(word)
        tags.append(tag)
    return tags


def _suffix_tag(word: str) -> POS:
    if word.endswith("ly"):
        return POS.ADV
    if word.endswith(("ous", "al", "ive")):
        return POS.ADJ
    if word.endswith(("ed", "ing")):
        return POS.VERB
    return POS.NOUN


# ---------------------------------------------------------------------------
# Regular inflection rules


def _vowel_group_count(word: str) -> int:
    return len(_VOWEL_GROUPS.findall(word))


def _should_double(word: str) -> bool:
    # Monosyllabic consonant-vowel-consonant endings double the final
    # consonant (wrap -> wrapped); polysyllables are left alone and the
    # irregular tables pick up the stragglers.
    if len(word) < 2 or _vowel_group_count(word) != 1:
        return False
    if word[-1] in _VOWELS + "wxy" or not word[-1].isalpha():
        return False
    if word[-2] not in _VOWELS:
        return False
    if len(word) >= 3 and word[-3] in _VOWELS:
        return False
    return True


def _undouble(stem: str) -> str | None:
    if len(stem) >= 2 and stem[-1] == stem[-2] and stem[-1] not in _VOWELS:
        return stem[:-1]
    return None


def _pluralize_noun(word: str) -> str:
    if word.endswith(("s", "x", "z", "ch", "sh")):
        return word + "es"
    if len(word) > 1 and word.endswith("y") and word[-2] not in _VOWELS:
        return word[:-1] + "ies"
    return word + "s"


def _verb_third(word: str) -> str:
    if word.endswith(("s", "x", "z", "ch", "sh", "o")):
        return word + "es"
    if len(word) > 1 and word.endswith("y") and word[-2] not in _VOWELS:
        return word[:-1] + "ies"
    return word + "s"


def _verb_past(word: str) -> str:
    if word.endswith("e"):
        return word + "d"
    if len(word) > 1 and word.endswith("y") and word[-2] not in _VOWELS:
        return word[:-1] + "ied"
    if _should_double(word):
        return word + word[-1] + "ed"
    return word + "ed"


def _verb_present_participle(word: str) -> str:
    if word.endswith("ie"):
        return word[:-2] + "ying"
    if word.endswith("e") and not word.endswith("ee") and len(word) > 2:
        return word[:-1] + "ing"
    if _should_double(word):
        return word + word[-1] + "ing"
    return word + "ing"


def _degree(word: str, suffix: str) -> str:
    # suffix is "er" or "est"
    if word.endswith("e"):
        return word + suffix[1:]
    if len(word) > 1 and word.endswith("y") and word[-2] not in _VOWELS:
        return word[:-1] + "i" + suffix
    if _should_double(word):
        return word + word[-1] + suffix
    return word + suffix


# ---------------------------------------------------------------------------
# Lemmatization


def _noun_candidates(word: str) -> list[str]:
    out = []
    if word.endswith("ies") and len(word) > 4:
        out.append(word[:-3] + "y")
    if word.endswith("ves") and len(word) > 4:
        out.append(word[:-3] + "f")
        out.append(word[:-3] + "fe")
    if word.endswith("es") and len(word) > 3:
        out.append(word[:-2])
    if word.endswith("s") and not word.endswith("ss") and len(word) > 2:
        out.append(word[:-1])
    return out


def _verb_candidates(word: str) -> list[str]:
    out = []
    if word.endswith("ies") and len(word) > 4:
        out.append(word[:-3] + "y")
    if word.endswith("es") and len(word) > 3:
        out.append(word[:-2])
    if word.endswith("s") and not word.endswith("ss") and len(word) > 2:
        out.append(word[:-1])
    if word.endswith("ied") and len(word) > 4:
        out.append(word[:-3] + "y")
    if word.endswith("ed") and len(word) > 3:
        stem = word[:-2]
        out.append(word[:-1])  # restores a final e: situated -> situate
        out.append(stem)
        undoubled = _undouble(stem)
        if undoubled:
            out.append(undoubled)
    if word.endswith("ing") and len(word) > 4:
        stem = word[:-3]
        out.append(stem)
        out.append(stem + "e")
        undoubled = _undouble(stem)
        if undoubled:
            out.append(undoubled)
    return out


def _degree_candidates(word: str) -> list[str]:
    out = []
    for suffix in ("est", "er"):
        if word.endswith(suffix) and len(word) > len(suffix) + 1:
            stem = word[: -len(suffix)]
            if stem.endswith("i"):
                out.append(stem[:-1] + "y")
            out.append(stem)
            out.append(stem + "e")
            undoubled = _undouble(stem)
            if undoubled:
                out.append(undoubled)
    return out


_CANDIDATE_RULES = {
    POS.NOUN: _noun_candidates,
    POS.VERB: _verb_candidates,
    POS.ADJ: _degree_candidates,
    POS.ADV: _degree_candidates,
}


def _heuristic_lemma(word: str, pos: POS) -> str:
    """Best-effort fallback for words outside the lexicon."""
    if pos in (POS.NOUN, POS.VERB):
        if word.endswith("ies") and len(word) > 4:
            return word[:-3] + "y"
        if word.endswith("es") and len(word) > 3 and word[:-2].endswith(("s", "x", "z", "ch", "sh", "o")):
            return word[:-2]
        if word.endswith("s") and not word.endswith("ss") and len(word) > 2:
            return word[:-1]
    if pos == POS.VERB:
        if word.endswith("ied") and len(word) > 4:
            return word[:-3] + "y"
        if word.endswith("ed") and len(word) > 3:
            stem = word[:-2]
            return _undouble(stem) or stem
        if word.endswith("ing") and len(word) > 4:
            stem = word[:-3]
            return _undouble(stem) or stem
    if pos in (POS.ADJ, POS.ADV):
        for suffix in ("est", "er"):
            if word.endswith(suffix) and len(word) > len(suffix) + 1:
                stem = word[: -len(suffix)]
                if stem.endswith("i"):
                    return stem[:-1] + "y"
                return _undouble(stem) or stem
    return word


def lemmatize(word: str, tag: POS) -> str:
    """Reduce a surface form to its base form.

    Exception tables are consulted first, then suffix-rule candidates
    validated against the base-form lexicon, then a bare heuristic.
    Idempotent: lemmatize(lemmatize(w)) == lemmatize(w).
    """
    tables = _tables()
    exception = tables.lemma_exceptions.get((word, tag))
    if exception is not None:
        return exception
    if tag == POS.OTHER:
        return word
    if (word, tag) in tables.base_forms:
        return word
    for candidate in _CANDIDATE_RULES[tag](word):
        if (candidate, tag) in tables.base_forms:
            return candidate
    return _heuristic_lemma(word, tag)


# ---------------------------------------------------------------------------
# Inflection


def infer_spec(word: str, tag: POS) -> InflectionSpec | None:
    """Work out which form of its lemma a surface word is.

    Returns None for OTHER-tagged words; such candidates pass through
    the pipeline unchanged.
    """
    if tag == POS.OTHER:
        return None
    tables = _tables()
    lemma = lemmatize(word, tag)

    if tag == POS.NOUN:
        form = "singular" if word == lemma else "plural"
        return InflectionSpec(POS.NOUN, form)

    if tag == POS.VERB:
        if word == lemma:
            return InflectionSpec(POS.VERB, "base")
        irregular = tables.verb_reverse.get(word)
        if irregular is not None and irregular[0] == lemma:
            return InflectionSpec(POS.VERB, irregular[1])
        if word.endswith("ing"):
            return InflectionSpec(POS.VERB, "present_participle")
        if word.endswith("ed"):
            return InflectionSpec(POS.VERB, "past_participle")
        if word.endswith("s"):
            return InflectionSpec(POS.VERB, "third_singular")
        return InflectionSpec(POS.VERB, "base")

    # Adjectives and adverbs share degree morphology.
    if word == lemma:
        return InflectionSpec(tag, "positive")
    irregular = tables.adj_reverse.get(word)
    if irregular is not None and irregular[0] == lemma:
        return InflectionSpec(tag, irregular[1])
    if word.endswith("est"):
        return InflectionSpec(tag, "superlative")
    if word.endswith("er"):
        return InflectionSpec(tag, "comparative")
    return InflectionSpec(tag, "positive")


def inflect(lemma: str, spec: InflectionSpec | None) -> str:
    """Apply an inflection spec to a base form; irregular tables first."""
    if spec is None:
        return lemma
    tables = _tables()

    if spec.pos == POS.NOUN:
        if spec.form == "singular":
            return lemma
        return tables.noun_irregular.get(lemma) or _pluralize_noun(lemma)

    if spec.pos == POS.VERB:
        if spec.form == "base":
            return lemma
        irregular = tables.verb_irregular.get(lemma)
        if spec.form == "past":
            if irregular:
                return irregular.past
            return _verb_past(lemma)
        if spec.form == "past_participle":
            if irregular:
                return irregular.past_participle
            return _verb_past(lemma)
        if spec.form == "third_singular":
            if irregular and irregular.third_singular:
                return irregular.third_singular
            return _verb_third(lemma)
        if irregular and irregular.present_participle:
            return irregular.present_participle
        return _verb_present_participle(lemma)

    # Degree morphology for adjectives and adverbs.
    if spec.form == "positive":
        return lemma
    irregular = tables.adj_irregular.get(lemma)
    if spec.form == "comparative":
        if irregular:
            return irregular[0]
        return _degree(lemma, "er")
    if irregular:
        return irregular[1]
    return _degree(lemma, "est")


def indefinite_article(word: str) -> str:
    """Choose "a" or "an" by the vowel-letter heuristic."""
    return "an" if word and word[0].lower() in _VOWELS else "a"
