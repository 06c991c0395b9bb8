"""Corpus evaluation: SARI and mean perplexity decrease.

SARI compares the system output against both the input and one or more
references over n-gram orders 1-4, combining three components per order:
F1 over kept n-grams, F1 over added n-grams, and precision over deleted
n-grams.  All comparisons are multiset comparisons.  Conventions used
throughout (and shared with the independent test oracle):

* the keep target is the n-grams of the input kept by *all* references;
  add and delete targets use the reference multiset union;
* a precision or recall whose denominator multiset is empty scores 1 when
  the opposite side is empty too (no mistakes were possible) and 0
  otherwise, so a perfect identity triple scores exactly 1.0;
* an n-gram order contributes to the average only if at least one of the
  input, output, or references has n-grams of that order.

Perplexity decrease is the percentage drop of the mean combined perplexity
from the original corpus to the simplified one; it is negative when
simplification made sentences less likely.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .langmodel import NGramModel
from .ranking import pp_score, validate_phi

__all__ = [
    "EvaluationRecord",
    "EvaluationReport",
    "sari",
    "perplexity_decrease",
    "evaluate_corpus",
]

_MAX_ORDER = 4


@dataclass(frozen=True)
class EvaluationRecord:
    """One aligned evaluation triple; all sentences are token lists."""

    input: tuple[str, ...]
    system_output: tuple[str, ...]
    references: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if not self.input or not self.system_output:
            raise ValueError("input and system output must be non-empty")
        if not self.references or any(not r for r in self.references):
            raise ValueError("at least one non-empty reference is required")


@dataclass(frozen=True)
class EvaluationReport:
    per_record_sari: tuple[float, ...]
    mean_sari: float
    mean_original_pp: float
    mean_simplified_pp: float
    perplexity_decrease_pct: float


def _ngrams(tokens: Sequence[str], order: int) -> Counter:
    return Counter(
        tuple(tokens[i : i + order]) for i in range(len(tokens) - order + 1)
    )


def _size(counter: Counter) -> int:
    return sum(counter.values())


def _precision(sys_set: Counter, target: Counter) -> float:
    if _size(sys_set) == 0:
        return 1.0 if _size(target) == 0 else 0.0
    return _size(sys_set & target) / _size(sys_set)


def _recall(sys_set: Counter, target: Counter) -> float:
    if _size(target) == 0:
        return 1.0 if _size(sys_set) == 0 else 0.0
    return _size(sys_set & target) / _size(target)


def _f1(p: float, r: float) -> float:
    if p + r == 0.0:
        return 0.0
    return 2.0 * p * r / (p + r)


def sari(
    input_tokens: Sequence[str],
    output_tokens: Sequence[str],
    references: Sequence[Sequence[str]],
) -> float:
    """Score one (input, output, references) triple in [0, 1]."""
    if not references:
        raise ValueError("SARI requires at least one reference")
    if not input_tokens or not output_tokens or any(not r for r in references):
        raise ValueError("SARI sentences must be non-empty")

    order_scores = []
    for order in range(1, _MAX_ORDER + 1):
        inp = _ngrams(input_tokens, order)
        out = _ngrams(output_tokens, order)
        refs = [_ngrams(r, order) for r in references]
        if not inp and not out and not any(refs):
            continue  # order unsupported by every sentence

        ref_union = reduce(lambda a, b: a | b, refs, Counter())
        ref_all = reduce(lambda a, b: a & b, refs[1:], refs[0])

        keep_sys = inp & out
        keep_target = inp & ref_all
        keep = _f1(_precision(keep_sys, keep_target), _recall(keep_sys, keep_target))

        add_sys = out - inp
        add_target = ref_union - inp
        add = _f1(_precision(add_sys, add_target), _recall(add_sys, add_target))

        del_sys = inp - out
        del_target = inp - ref_union
        deletion = _precision(del_sys, del_target)

        order_scores.append((keep + add + deletion) / 3.0)

    score = sum(order_scores) / len(order_scores)
    return min(1.0, max(0.0, score))


def perplexity_decrease(
    model: NGramModel,
    originals: Sequence[Sequence[str]],
    simplified: Sequence[Sequence[str]],
    phi: float,
) -> float:
    """Percentage drop in mean combined perplexity; negative means worse."""
    if not originals or len(originals) != len(simplified):
        raise ValueError(
            f"original and simplified lists must be non-empty and equal length "
            f"({len(originals)} vs {len(simplified)})"
        )
    phi = validate_phi(phi)
    mean_orig = sum(pp_score(model, s, phi).combined for s in originals) / len(originals)
    mean_simp = sum(pp_score(model, s, phi).combined for s in simplified) / len(simplified)
    return 100.0 * (mean_orig - mean_simp) / mean_orig


def evaluate_corpus(
    records: Sequence[EvaluationRecord],
    model: NGramModel,
    phi: float,
) -> EvaluationReport:
    """Aggregate SARI and perplexity decrease over a record list."""
    if not records:
        raise ValueError("no evaluation records")
    phi = validate_phi(phi)
    per_record = []
    for index, record in enumerate(records):
        try:
            per_record.append(
                sari(record.input, record.system_output, record.references)
            )
        except ValueError as exc:
            raise ValueError(f"record {index}: {exc}") from exc
    originals = [record.input for record in records]
    outputs = [record.system_output for record in records]
    mean_orig = sum(pp_score(model, s, phi).combined for s in originals) / len(records)
    mean_simp = sum(pp_score(model, s, phi).combined for s in outputs) / len(records)
    return EvaluationReport(
        per_record_sari=tuple(per_record),
        mean_sari=sum(per_record) / len(per_record),
        mean_original_pp=mean_orig,
        mean_simplified_pp=mean_simp,
        perplexity_decrease_pct=100.0 * (mean_orig - mean_simp) / mean_orig,
    )
