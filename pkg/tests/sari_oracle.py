"""Brute-force SARI reference implementation for oracle testing.

Written independently of the library code: plain dicts and explicit loops
instead of Counter algebra.  It follows the same documented conventions
(keep target intersected across references, add/delete against the
reference union, both-sides-empty ratios scoring 1), so any numeric
disagreement with the library marks a real defect in one of the two.
"""

from __future__ import annotations


def ngram_counts(tokens, order):
    counts = {}
    for i in range(len(tokens) - order + 1):
        gram = tuple(tokens[i : i + order])
        counts[gram] = counts.get(gram, 0) + 1
    return counts


def inter(a, b):
    out = {}
    for gram in a:
        if gram in b:
            m = a[gram] if a[gram] < b[gram] else b[gram]
            if m > 0:
                out[gram] = m
    return out


def union(a, b):
    out = dict(a)
    for gram, count in b.items():
        if gram not in out or out[gram] < count:
            out[gram] = count
    return out


def diff(a, b):
    out = {}
    for gram, count in a.items():
        remaining = count - b.get(gram, 0)
        if remaining > 0:
            out[gram] = remaining
    return out


def total(counts):
    result = 0
    for value in counts.values():
        result += value
    return result


def ratio(numerator_set, denominator_set, other_set):
    """|num ∩ den| / |den|, with the both-empty convention scoring 1."""
    if total(denominator_set) == 0:
        return 1.0 if total(other_set) == 0 else 0.0
    return total(inter(numerator_set, denominator_set)) / total(denominator_set)


def f1(p, r):
    if p + r == 0.0:
        return 0.0
    return 2.0 * p * r / (p + r)


def oracle_sari(input_tokens, output_tokens, references):
    order_scores = []
    for order in (1, 2, 3, 4):
        inp = ngram_counts(input_tokens, order)
        out = ngram_counts(output_tokens, order)
        refs = [ngram_counts(ref, order) for ref in references]
        if total(inp) == 0 and total(out) == 0 and all(total(r) == 0 for r in refs):
            continue

        ref_union = {}
        for counts in refs:
            ref_union = union(ref_union, counts)
        ref_all = refs[0]
        for counts in refs[1:]:
            ref_all = inter(ref_all, counts)

        keep_sys = inter(inp, out)
        keep_target = inter(inp, ref_all)
        keep_p = ratio(keep_target, keep_sys, keep_target)
        keep_r = ratio(keep_sys, keep_target, keep_sys)
        keep = f1(keep_p, keep_r)

        add_sys = diff(out, inp)
        add_target = diff(ref_union, inp)
        add_p = ratio(add_target, add_sys, add_target)
        add_r = ratio(add_sys, add_target, add_sys)
        add = f1(add_p, add_r)

        del_sys = diff(inp, out)
        del_target = diff(inp, ref_union)
        deletion = ratio(del_target, del_sys, del_target)

        order_scores.append((keep + add + deletion) / 3.0)

    score = 0.0
    for value in order_scores:
        score += value
    score /= len(order_scores)
    if score < 0.0:
        return 0.0
    if score > 1.0:
        return 1.0
    return score
