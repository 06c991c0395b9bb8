"""Build the n-gram model and poke at its counts and perplexities.

The bundled corpus is small enough to inspect by hand: common words get
high unigram scores, rare words fall back to the floor, and sentence
perplexity drops as its words get more ordinary.
"""

import tempfile

from lexsimp import fixtures
from lexsimp.langmodel import (
    bigram_prob,
    build_model,
    load_model,
    read_corpus,
    save_model,
    unigram_prob,
    word_stats,
)
from lexsimp.ranking import pp1, pp2, pp_score

model = build_model(read_corpus(fixtures.corpus_path()))
print(f"vocabulary: {model.vocab_size} words, {model.total_tokens} tokens")
print(f"probability floor for unseen events: {model.floor:.2e}\n")

for word in ["the", "house", "cooking", "indispensable", "qwzx"]:
    occurrences, sentences = word_stats(model, word)
    print(f"{word:>15}: p={unigram_prob(model, word):.5f} "
          f"occurrences={occurrences} sentences={sentences}")

print()
for prev, word in [("the", "house"), ("fresh", "food"), ("house", "fresh")]:
    print(f"p({word!r} | {prev!r}) = {bigram_prob(model, prev, word):.5f}")

print()
for text in ["the fresh food is at the market .",
             "oregano is an indispensable ingredient in greek cuisine ."]:
    tokens = text.split()
    score = pp_score(model, tokens, 0.5)
    print(f"pp1={pp1(model, tokens):10.3f}  pp2={pp2(model, tokens):10.3f}  "
          f"combined(phi=0.5)={score.combined:10.3f}  | {text}")

# the model round-trips through its cache file bit-exactly
with tempfile.NamedTemporaryFile(suffix=".lm") as handle:
    save_model(model, handle.name)
    assert load_model(handle.name) == model
    print("\nmodel cache round-trip: ok")
