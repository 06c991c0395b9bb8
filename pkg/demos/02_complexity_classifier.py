"""Train the word-complexity classifier and inspect its decisions.

Trains the 5-3-2 network on the bundled rating lexicon (words rated below
3.0 are simple, 3.0 and above complex) and shows the five features feeding
each prediction.
"""

from lexsimp import fixtures
from lexsimp.complexity import (
    TrainConfig,
    extract_features,
    predict,
    read_lexicon,
    relabel,
    train,
)
from lexsimp.langmodel import build_model, read_corpus
from lexsimp.thesaurus import load_thesaurus

model = build_model(read_corpus(fixtures.corpus_path()))
store = load_thesaurus(fixtures.thesaurus_path())

entries = read_lexicon(fixtures.lexicon_path())
dataset = [(extract_features(word, model, store), relabel(rating))
           for word, rating in entries]
labels = [label for _, label in dataset]
print(f"lexicon: {len(dataset)} words "
      f"({sum(l.value == 'simple' for l in labels)} simple, "
      f"{sum(l.value == 'complex' for l in labels)} complex)")

classifier = train(dataset, TrainConfig(seed=0))
print(f"training loss: {classifier.loss_history[0]:.4f} -> {classifier.loss_history[-1]:.4f} "
      f"over {len(classifier.loss_history)} epochs\n")

header = f"{'word':>15} {'p(w)':>9} {'sents':>5} {'occur':>5} {'len':>3} {'syns':>4}  prediction"
print(header)
for word in ["house", "water", "market", "indispensable", "physician", "frigid"]:
    feats = extract_features(word, model, store)
    label = predict(classifier, feats)
    print(f"{word:>15} {feats.unigram_probability:>9.5f} {feats.sentence_count:>5} "
          f"{feats.occurrence_count:>5} {feats.word_length:>3} {feats.synset_size:>4}  "
          f"{label.label.value} (p_simple={label.probabilities[0]:.3f}, "
          f"p_complex={label.probabilities[1]:.3f})")
