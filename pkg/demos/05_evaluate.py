"""Score the bundled evaluation pair with SARI and perplexity decrease.

Runs the word-embedding pipeline over the aligned originals at several
bigram factors and reports the same two columns the evaluation harness
produces: mean SARI against the references and the percentage drop in
mean combined perplexity.
"""

import numpy as np

from lexsimp import fixtures
from lexsimp.complexity import ComplexityClassifier
from lexsimp.embeddings import load_word_vectors
from lexsimp.evalmetrics import EvaluationRecord, evaluate_corpus
from lexsimp.langmodel import build_model, read_corpus
from lexsimp.pipeline import Mode, SimplificationConfig, simplify
from lexsimp.thesaurus import load_thesaurus

model = build_model(read_corpus(fixtures.corpus_path()))
store = load_thesaurus(fixtures.thesaurus_path())
vectors = load_word_vectors(fixtures.vectors_path())
classifier = ComplexityClassifier(
    w1=np.array([[0, 0, 1, 0, 0], [0, 0, 0, 0, 0], [0, 0, 0, 0, 0]], dtype=float),
    b1=np.zeros(3),
    w2=np.array([[1, 0, 0], [-1, 0, 0]], dtype=float),
    b2=np.array([-2.5, 2.5]),
    scaler_mean=np.zeros(5),
    scaler_std=np.ones(5),
)

originals = [line.split() for line in
             fixtures.eval_original_path().read_text().splitlines() if line]
references = [line.split() for line in
              fixtures.eval_references_path().read_text().splitlines() if line]

print(f"{'phi':>5}  {'mean SARI':>9}  {'pp decrease':>11}")
for phi in (0.0, 0.25, 0.5, 0.75, 1.0):
    config = SimplificationConfig(
        mode=Mode.WORD_EMBEDDING, model=model, classifier=classifier,
        thesaurus=store, phi=phi, word_vectors=vectors,
    )
    records = [
        EvaluationRecord(tuple(orig), tuple(simplify(orig, config).output), (tuple(ref),))
        for orig, ref in zip(originals, references)
    ]
    report = evaluate_corpus(records, model, phi)
    print(f"{phi:>5.2f}  {report.mean_sari:>9.3f}  {report.perplexity_decrease_pct:>10.2f}%")
