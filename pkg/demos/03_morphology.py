"""Tagging, lemmatization, and re-inflection on real substitution cases.

The substitution pipeline needs all three steps: find the part of speech,
reduce the surface form to its lemma for the thesaurus, then push synonym
lemmas back into the form the sentence slot requires.
"""

from lexsimp.morphology import (
    POS,
    infer_spec,
    inflect,
    lemmatize,
    tag_pos,
)

sentence = "it is situated at the coast , where it encloses the city .".split()
tags = tag_pos(sentence)
print(" ".join(sentence))
print(" ".join(f"{t.value[:1]}" for t in tags), "\n")

for surface in ["situated", "encloses", "cities", "looks", "went", "better"]:
    for pos in (POS.VERB, POS.NOUN, POS.ADJ):
        spec = infer_spec(surface, pos)
        lemma = lemmatize(surface, pos)
        if spec is not None and inflect(lemma, spec) == surface and lemma != surface:
            print(f"{surface:>10} [{pos.value}] -> lemma {lemma!r}, form {spec.form!r}")
            break

print()
# re-inflect synonyms of "encloses" into the slot's third-singular form
spec = infer_spec("encloses", POS.VERB)
for synonym in ["wrap", "cover", "surround"]:
    print(f"enclose -> {synonym:>9} -> {inflect(synonym, spec)}")

print()
# degree morphology round trip
for adjective in ["big", "happy", "nice", "good"]:
    comparative = inflect(adjective, infer_spec("bigger", POS.ADJ))
    superlative = inflect(adjective, infer_spec("biggest", POS.ADJ))
    print(f"{adjective:>7} -> {comparative}, {superlative}")
