"""Simplify sentences in both modes and read the per-word traces.

Word-embedding mode filters synonyms by cosine against the target word and
picks the candidate with the lowest combined perplexity; transformer mode
(here backed by the deterministic mock provider) picks the candidate whose
sentence embedding stays closest to the working sentence.  The bigram
factor phi shifts the perplexity score from pure unigram (0.0) to pure
bigram (1.0).
"""

import numpy as np

from lexsimp import fixtures
from lexsimp.complexity import ComplexityClassifier
from lexsimp.embeddings import MockSentenceEmbeddings, load_word_vectors
from lexsimp.langmodel import build_model, read_corpus
from lexsimp.pipeline import Mode, SimplificationConfig, simplify
from lexsimp.thesaurus import load_thesaurus

model = build_model(read_corpus(fixtures.corpus_path()))
store = load_thesaurus(fixtures.thesaurus_path())
vectors = load_word_vectors(fixtures.vectors_path())

# rare-word classifier: complex iff the word appears at most twice
classifier = ComplexityClassifier(
    w1=np.array([[0, 0, 1, 0, 0], [0, 0, 0, 0, 0], [0, 0, 0, 0, 0]], dtype=float),
    b1=np.zeros(3),
    w2=np.array([[1, 0, 0], [-1, 0, 0]], dtype=float),
    b2=np.array([-2.5, 2.5]),
    scaler_mean=np.zeros(5),
    scaler_std=np.ones(5),
)

sentence = "oregano is an indispensable ingredient in greek cuisine .".split()
print("input:", " ".join(sentence), "\n")

for phi in (0.0, 0.25, 0.5, 0.75, 1.0):
    config = SimplificationConfig(
        mode=Mode.WORD_EMBEDDING, model=model, classifier=classifier,
        thesaurus=store, phi=phi, word_vectors=vectors,
    )
    result = simplify(sentence, config)
    print(f"word-embedding phi={phi:4.2f}: {result.text}")

config = SimplificationConfig(
    mode=Mode.TRANSFORMER, model=model, classifier=classifier,
    thesaurus=store, phi=0.0, sentence_provider=MockSentenceEmbeddings(),
)
result = simplify(sentence, config)
print(f"transformer (mock)     : {result.text}\n")

print("trace of the transformer run:")
for trace in result.traces:
    print(f"  position {trace.position} {trace.original!r}: "
          f"fetched {trace.fetched} -> simple {trace.complexity_filtered} "
          f"-> chose {trace.chosen!r}"
          + (" (article fixed)" if trace.article_fixed else ""))
print(f"\nfinal combined perplexity: {result.final_pp_score.combined:.3f}")
