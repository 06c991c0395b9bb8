#!/usr/bin/env python3
"""Regenerate the bundled desk-scale fixture resources.

The corpus, thesaurus, word vectors, complexity lexicon, and aligned
evaluation files are designed together: every synonym the thesaurus offers
for a fixture target appears at least three times in the corpus, while the
targets themselves appear at most twice.  A word-count check and a cosine
ordering check run at build time so the invariants the tests rely on are
enforced at the source.

Run from the repository root:

    python tools/build_fixtures.py
"""

from __future__ import annotations

import sys
from collections import Counter
from pathlib import Path

import numpy as np

DATA_DIR = Path(__file__).resolve().parents[1] / "src" / "lexsimp" / "data" / "fixtures"

CORPUS = """\
the cook adds a fresh herb to the dish .
greek cooking uses fresh herbs and olive oil .
good cooking starts with fresh food .
she learned cooking from her mother .
salt is a necessary element in most recipes .
water is a necessary element of life .
flour is a common element of bread .
it is necessary to wash the fresh food .
a vital part of the meal is the sauce .
rest is vital for good health .
clean water is vital for every village .
each component of the recipe is simple .
the second component of the dish is rice .
one component of the sauce is lemon .
the town is located near the sea .
the school is located on the main street .
the farm is located in the valley .
the shop is placed between the church and the market .
the photo is placed on the wall .
a small lamp is placed near the door .
the story is based on a real event .
the recipe is based on an old family book .
the film is based on a famous story .
the wall surrounds the old garden .
the forest surrounds the small lake .
the sea surrounds the island .
the roof covers the whole house .
snow covers the mountain in winter .
the blanket covers the child .
the paper wraps the fresh fish .
she wraps the gift in red paper .
the cook wraps the meat in leaves .
the doctor works at the village school .
the doctor helps the old man every week .
a good doctor listens to every patient .
the nurse helps the doctor at the hospital .
they help the old woman every day .
we help our friends when times are hard .
the students help the teacher clean the room .
the receiver of the prize was a young teacher .
the receiver of the award gave a short speech .
the receiver of the medal smiled .
the host of the party opened the door .
the host welcomed every guest .
our host cooked a large meal .
the car stopped near the bridge .
a new car costs a lot of money .
the red car is fast .
the train is fast and clean .
a fast horse won the race .
the bus is slow but cheap .
the quick dog caught the ball .
she gave a quick answer .
a quick walk helps the mind .
the big house has a large garden .
a big dog sat near the gate .
the big tree fell in the storm .
the large room was full of books .
they built a large bridge over the river .
the cold wind came from the mountain .
the water in the lake is cold .
a cold winter is hard for the birds .
the test was hard for every student .
it is hard to learn a new language .
the house has a small kitchen .
her home is near the school .
they stayed at home in the evening .
the family made the home warm .
he took a drink of cold water .
the drink was sweet and warm .
she bought a drink at the market .
they buy fresh bread every morning .
we buy food at the market .
people buy books at the shop .
the cat sat on the warm roof .
the dog ran across the road .
the children walked to the school .
the teacher read a story to the class .
the old man told a long story .
the young woman wrote a book .
the bird sang in the tall tree .
the fish swam in the deep lake .
the horse ran across the field .
the farmer grew corn on the farm .
the boy drank cold water after the game .
the girl ate fresh fruit in the morning .
the family lived in a small town .
the men built a wall near the road .
the women sold fruit at the market .
the students read books at the school .
the friends met at the old bridge .
the sun was warm in the morning .
the night was cold and quiet .
the shop sells fresh bread and fruit .
the market opens early in the morning .
the church stands near the river .
the road goes over the mountain .
the river runs through the town .
the garden has many green plants .
the winter was long and cold .
the summer was warm and dry .
oregano is an indispensable ingredient in greek cuisine .
the recipient of the medal was proud .
the house is situated near the coast .
the old wall encloses the garden .
the physician visited the village .
his residence is a large house near the river .
the beverage was served cold .
they purchase fresh fish at the market .
the students assist the teacher .
the journey was difficult in winter .
the rapid river flows under the bridge .
an enormous wave hit the coast .
the frigid air filled the room .
the automobile waits near the house .
"""

# Every synonym surface the thesaurus can produce for the fixture targets
# must be a simple (frequent) corpus word; every target must stay rare.
MIN_THREE = """
necessary vital element component cooking receiver host located placed based
wraps covers surrounds car doctor house home drink help buy hard quick fast
big large cold
""".split()

MAX_TWO = """
indispensable ingredient cuisine recipient situated encloses automobile
physician residence beverage assist purchase difficult rapid enormous frigid
""".split()

# target lemma -> (pos, sense count, synonym lemmas; intended winner first)
THESAURUS = [
    ("indispensable", "adj", 1, ["necessary", "vital"]),
    ("ingredient", "noun", 2, ["element", "component"]),
    ("cuisine", "noun", 1, ["cooking"]),
    ("recipient", "noun", 2, ["receiver", "host"]),
    ("situate", "verb", 1, ["locate", "place", "base"]),
    ("enclose", "verb", 2, ["wrap", "cover", "surround"]),
    ("automobile", "noun", 1, ["car"]),
    ("physician", "noun", 1, ["doctor"]),
    ("residence", "noun", 2, ["house", "home"]),
    ("beverage", "noun", 1, ["drink"]),
    ("assist", "verb", 1, ["help"]),
    ("purchase", "verb", 2, ["buy"]),
    ("difficult", "adj", 2, ["hard"]),
    ("rapid", "adj", 1, ["quick", "fast"]),
    ("enormous", "adj", 1, ["big", "large"]),
    ("frigid", "adj", 1, ["cold"]),
    ("zebra", "noun", 2, ["horse"]),
]

# vector clusters: target surface followed by synonym surfaces, intended
# winner first; offsets grow so the first synonym is closest to the target.
VECTOR_CLUSTERS = [
    ["indispensable", "necessary", "vital"],
    ["ingredient", "element", "component"],
    ["cuisine", "cooking"],
    ["recipient", "receiver", "host"],
    ["situated", "located", "placed", "based"],
    ["encloses", "wraps", "covers", "surrounds"],
    ["automobile", "car"],
    ["physician", "doctor"],
    ["residence", "house", "home"],
    ["beverage", "drink"],
    ["assist", "help"],
    ["purchase", "buy"],
    ["difficult", "hard"],
    ["rapid", "quick", "fast"],
    ["enormous", "big", "large"],
    ["frigid", "cold"],
]

SIMPLE_LEXICON_WORDS = """
house water food good small warm clean fresh help home road book tree door
fish bird story school friend morning market bread fruit garden river town
window happy cold fast hard quick large night winter summer family
""".split()

COMPLEX_LEXICON_WORDS = """
indispensable physician residence beverage automobile cuisine ingredient
recipient situated enormous frigid rapid difficult purchase assist enclose
component luminous obsolete adjacent tremendous intricate formidable
meticulous peculiar profound ambiguous arbitrary auspicious benevolent
clandestine detrimental eloquent ephemeral fastidious gregarious
""".split()

EVAL_ORIGINAL = """\
the automobile waits near the house .
the physician works in the town .
his residence is near the river .
he wants to purchase a new car .
they assist the old man every day .
the test was difficult for the students .
the rapid train was full .
an enormous dog sat near the door .
the frigid water was deep .
the recipient of the medal was happy .
"""

EVAL_REFERENCES = """\
the car waits near the house .
the doctor works in the town .
his house is near the river .
he wants to buy a new car .
they help the old man every day .
the test was hard for the students .
the quick train was full .
a big dog sat near the door .
the cold water was deep .
the receiver of the medal was happy .
"""


def build_vectors(dim: int = 16, seed: int = 7) -> dict[str, np.ndarray]:
    rng = np.random.default_rng(seed)
    vectors: dict[str, np.ndarray] = {}
    for cluster in VECTOR_CLUSTERS:
        base = rng.standard_normal(dim)
        base /= np.linalg.norm(base)
        vectors[cluster[0]] = np.round(base, 6)
        for rank, word in enumerate(cluster[1:]):
            offset = rng.standard_normal(dim)
            offset /= np.linalg.norm(offset)
            vec = base + (0.15 + 0.45 * rank) * offset
            vec /= np.linalg.norm(vec)
            if word not in vectors:
                vectors[word] = np.round(vec, 6)
    return vectors


def check_vectors(vectors: dict[str, np.ndarray]) -> None:
    def cos(a, b):
        return float(np.dot(vectors[a], vectors[b]) /
                     (np.linalg.norm(vectors[a]) * np.linalg.norm(vectors[b])))

    for cluster in VECTOR_CLUSTERS:
        target, syns = cluster[0], cluster[1:]
        sims = [cos(target, s) for s in syns]
        if sorted(sims, reverse=True) != sims or len(set(np.round(sims, 9))) != len(sims):
            raise SystemExit(f"cosine ordering broken for cluster {cluster}: {sims}")
        if len(syns) > 1:
            mean = sum(sims) / len(sims)
            above = [s for s, v in zip(syns, sims) if v > mean]
            if len(syns) == 2 and above != [syns[0]]:
                raise SystemExit(
                    f"above-average filter must keep exactly {syns[0]!r} "
                    f"for cluster {cluster}: sims={sims}"
                )
            if not above or above[0] != syns[0]:
                raise SystemExit(
                    f"above-average filter must rank {syns[0]!r} first "
                    f"for cluster {cluster}: sims={sims}"
                )


def main() -> int:
    DATA_DIR.mkdir(parents=True, exist_ok=True)

    counts = Counter(CORPUS.split())
    problems = []
    for word in MIN_THREE:
        if counts[word] < 3:
            problems.append(f"{word!r} must appear >= 3 times, appears {counts[word]}")
    for word in MAX_TWO:
        if counts[word] > 2:
            problems.append(f"{word!r} must appear <= 2 times, appears {counts[word]}")
    if problems:
        for problem in problems:
            print("ERROR:", problem, file=sys.stderr)
        return 1

    (DATA_DIR / "corpus.txt").write_text(CORPUS, encoding="utf-8")
    print(f"wrote corpus.txt ({len(CORPUS.splitlines())} sentences, "
          f"{sum(counts.values())} tokens, vocab {len(counts)})")

    rows = [
        f"{lemma}\t{pos}\t{senses}\t{','.join(syns)}"
        for lemma, pos, senses, syns in THESAURUS
    ]
    (DATA_DIR / "thesaurus.tsv").write_text("\n".join(rows) + "\n", encoding="utf-8")
    print(f"wrote thesaurus.tsv ({len(rows)} records)")

    vectors = build_vectors()
    check_vectors(vectors)
    lines = [f"{word} " + " ".join(f"{x:.6f}" for x in vec) for word, vec in vectors.items()]
    (DATA_DIR / "vectors.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote vectors.txt ({len(lines)} vectors, dim 16)")

    rng = np.random.default_rng(11)
    lex_rows = []
    for word in SIMPLE_LEXICON_WORDS:
        lex_rows.append(f"{word}\t{rng.uniform(1.0, 2.4):.2f}")
    for word in COMPLEX_LEXICON_WORDS:
        lex_rows.append(f"{word}\t{rng.uniform(3.2, 5.9):.2f}")
    (DATA_DIR / "complexity_lexicon.tsv").write_text("\n".join(lex_rows) + "\n", encoding="utf-8")
    print(f"wrote complexity_lexicon.tsv ({len(lex_rows)} words)")

    (DATA_DIR / "eval_original.txt").write_text(EVAL_ORIGINAL, encoding="utf-8")
    (DATA_DIR / "eval_references.txt").write_text(EVAL_REFERENCES, encoding="utf-8")
    print("wrote eval_original.txt and eval_references.txt")
    return 0


if __name__ == "__main__":
    sys.exit(main())
