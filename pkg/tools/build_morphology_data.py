#!/usr/bin/env python3
"""Regenerate the bundled morphology tables.

Writes the base lexicon, irregular tables, and lemma exceptions from the
hand-authored lists below, then derives the surface tag lexicon and the
round-trip lexicon by inflecting every base form and keeping only entries
that survive lemmatize -> infer_spec -> inflect unchanged.  Failures are
printed so the tables can be patched; the committed round-trip lexicon
contains only verified entries.

Run from the repository root after an editable install:

    python tools/build_morphology_data.py
"""

from __future__ import annotations

import sys
from pathlib import Path

DATA_DIR = Path(__file__).resolve().parents[1] / "src" / "lexsimp" / "data" / "morphology"

FUNCTION_WORDS = """
the a an and or but if then than that this these those it its he she they we you
his her their our your my me him them us not no yes so too very also there here
when where who what why how which while because about into over under after
before between through during since until up down out off again once all any
both each few more most other some such only own same just now ever of in on at
to for with by from as was were been being is are am do does did done doing has
have had having will would can could may might must shall should
""".split()

# has/have etc. appear above so they tag as OTHER rather than VERB; the
# pipeline never tries to simplify auxiliaries.

NOUNS = """
cat dog city town house home food water sea coast ingredient element component
cuisine cooking kitchen recipe dish meal herb plant spice medal award prize
winner receiver recipient host river country place area region island mountain
book story word sentence language school teacher student child man woman person
year day time way thing part number group problem question answer idea work job
money family friend name world life hand eye head car door street road tree
flower animal bird fish horse bus glass box church photo automobile physician
residence beverage test train wall roof forest lake garden village farm bridge
market shop price winter summer morning evening night week month doctor nurse
building look
""".split()

NOUN_IRREGULARS = [
    ("man", "men"),
    ("woman", "women"),
    ("child", "children"),
    ("person", "people"),
    ("foot", "feet"),
    ("tooth", "teeth"),
    ("mouse", "mice"),
    ("goose", "geese"),
    ("life", "lives"),
    ("leaf", "leaves"),
    ("knife", "knives"),
    ("wife", "wives"),
    ("half", "halves"),
]

VERBS = """
look enclose situate wrap go locate cover surround award give receive get place
find make take use keep help show work call move live believe carry stop plan
open close start finish walk run talk play cook bake eat drink read write learn
teach build buy sell pay send bring think know say tell see hear feel leave
meet sit stand win lose begin grow draw drive ride sing swim throw catch fall
rise speak spend stay travel visit watch want need like love ask answer change
turn follow include contain hold happen seem remain appear offer serve name
base border establish determine assist purchase die agree arrive park wait
clean wash fix add carve
""".split()

# lemma, past, past participle, [third singular], [present participle]
VERB_IRREGULARS = [
    ("be", "was", "been", "is", "being"),
    ("go", "went", "gone", "goes", "going"),
    ("do", "did", "done", "does", "doing"),
    ("have", "had", "had", "has", "having"),
    ("make", "made", "made"),
    ("take", "took", "taken"),
    ("get", "got", "gotten"),
    ("give", "gave", "given"),
    ("find", "found", "found"),
    ("think", "thought", "thought"),
    ("know", "knew", "known"),
    ("say", "said", "said"),
    ("tell", "told", "told"),
    ("see", "saw", "seen"),
    ("hear", "heard", "heard"),
    ("feel", "felt", "felt"),
    ("leave", "left", "left"),
    ("meet", "met", "met"),
    ("sit", "sat", "sat"),
    ("stand", "stood", "stood"),
    ("win", "won", "won"),
    ("lose", "lost", "lost"),
    ("begin", "began", "begun", "-", "beginning"),
    ("grow", "grew", "grown"),
    ("draw", "drew", "drawn"),
    ("drive", "drove", "driven"),
    ("ride", "rode", "ridden"),
    ("sing", "sang", "sung"),
    ("swim", "swam", "swum", "-", "swimming"),
    ("throw", "threw", "thrown"),
    ("catch", "caught", "caught"),
    ("fall", "fell", "fallen"),
    ("rise", "rose", "risen"),
    ("speak", "spoke", "spoken"),
    ("spend", "spent", "spent"),
    ("bring", "brought", "brought"),
    ("buy", "bought", "bought"),
    ("sell", "sold", "sold"),
    ("pay", "paid", "paid"),
    ("send", "sent", "sent"),
    ("build", "built", "built"),
    ("teach", "taught", "taught"),
    ("eat", "ate", "eaten"),
    ("drink", "drank", "drunk"),
    ("read", "read", "read"),
    ("write", "wrote", "written"),
    ("run", "ran", "run", "-", "running"),
    ("keep", "kept", "kept"),
    ("hold", "held", "held"),
    ("come", "came", "come"),
    ("put", "put", "put", "-", "putting"),
    ("let", "let", "let", "-", "letting"),
    ("set", "set", "set", "-", "setting"),
    ("hit", "hit", "hit", "-", "hitting"),
    ("cut", "cut", "cut", "-", "cutting"),
]

GRADABLE_ADJECTIVES = """
big small large long short high low old young new easy hard quick slow fast
happy sad nice warm cold hot cool clean dark rich poor strong weak clear bright
deep wide thin early late full close near great free busy funny pretty smart
wise brave calm proud tall heavy simple safe cheap
""".split()

ADJ_IRREGULARS = [
    ("good", "better", "best"),
    ("bad", "worse", "worst"),
    ("far", "further", "furthest"),
]

PLAIN_ADJECTIVES = """
indispensable necessary vital essential important common rare complex difficult
rapid enormous frigid dangerous beautiful useful helpful famous local fresh
greek various several open certain special real whole private public main
""".split()

ADVERBS = """
quickly slowly easily really simply clearly nearly fully mostly often never
always soon well again away together alone carefully quietly suddenly
""".split()

# (surface, pos, lemma) rows the rules cannot derive.
LEMMA_EXCEPTIONS = [
    ("were", "verb", "be"),
    ("am", "verb", "be"),
    ("are", "verb", "be"),
    ("dying", "verb", "die"),
    ("lying", "verb", "lie"),
]


def write_rows(name: str, rows) -> None:
    path = DATA_DIR / name
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for row in rows:
            fh.write("\t".join(row) + "\n")
    print(f"wrote {path} ({len(rows)} rows)")


def base_rows():
    rows = []
    for word in FUNCTION_WORDS:
        rows.append((word, "other"))
    for word in NOUNS:
        rows.append((word, "noun"))
    for lemma, _plural in NOUN_IRREGULARS:
        if lemma not in NOUNS:
            rows.append((lemma, "noun"))
    for word in VERBS:
        rows.append((word, "verb"))
    for irregular in VERB_IRREGULARS:
        if irregular[0] not in VERBS:
            rows.append((irregular[0], "verb"))
    for word in GRADABLE_ADJECTIVES + PLAIN_ADJECTIVES:
        rows.append((word, "adj"))
    for lemma, _c, _s in ADJ_IRREGULARS:
        rows.append((lemma, "adj"))
    for word in ADVERBS:
        rows.append((word, "adv"))
    return rows


def main() -> int:
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    bases = base_rows()

    write_rows("base_lexicon.tsv", bases)
    write_rows(
        "verb_irregulars.tsv",
        [tuple(row) + ("-",) * (5 - len(row)) for row in VERB_IRREGULARS],
    )
    write_rows("noun_irregulars.tsv", NOUN_IRREGULARS)
    write_rows("adj_irregulars.tsv", ADJ_IRREGULARS)
    write_rows("lemma_exceptions.tsv", LEMMA_EXCEPTIONS)
    # Seed the tag lexicon with base rows so the module can load.
    write_rows("tag_lexicon.tsv", bases)

    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
    import lexsimp.morphology as morph

    morph._tables.cache_clear()

    surfaces: list[tuple[str, str]] = []
    roundtrip_candidates: list[tuple[str, str]] = []

    def add(surface: str, pos: str) -> None:
        surfaces.append((surface, pos))
        roundtrip_candidates.append((surface, pos))

    for word, pos in bases:
        if pos == "other":
            continue
        roundtrip_candidates.append((word, pos))

    for word in NOUNS:
        add(morph.inflect(word, morph.InflectionSpec(morph.POS.NOUN, "plural")), "noun")
    for lemma, plural in NOUN_IRREGULARS:
        add(plural, "noun")

    verb_lemmas = list(dict.fromkeys(VERBS + [row[0] for row in VERB_IRREGULARS]))
    for lemma in verb_lemmas:
        for form in ("past", "past_participle", "third_singular", "present_participle"):
            add(morph.inflect(lemma, morph.InflectionSpec(morph.POS.VERB, form)), "verb")

    for word in GRADABLE_ADJECTIVES:
        for form in ("comparative", "superlative"):
            add(morph.inflect(word, morph.InflectionSpec(morph.POS.ADJ, form)), "adj")
    for lemma, comp, sup in ADJ_IRREGULARS:
        add(comp, "adj")
        add(sup, "adj")

    tag_rows = bases + [(s, p) for s, p in surfaces]
    seen = set()
    deduped = []
    for word, pos in tag_rows:
        if word not in seen:
            seen.add(word)
            deduped.append((word, pos))
    write_rows("tag_lexicon.tsv", deduped)
    morph._tables.cache_clear()

    verified = []
    failures = []
    seen_rt = set()
    for surface, pos_str in roundtrip_candidates:
        key = (surface, pos_str)
        if key in seen_rt:
            continue
        seen_rt.add(key)
        pos = morph.POS(pos_str)
        lemma = morph.lemmatize(surface, pos)
        spec = morph.infer_spec(surface, pos)
        back = morph.inflect(lemma, spec)
        if back == surface and morph.lemmatize(lemma, pos) == lemma:
            verified.append((surface, pos_str))
        else:
            failures.append((surface, pos_str, lemma, str(spec), back))

    write_rows("roundtrip_lexicon.tsv", verified)
    print(f"round-trip entries: {len(verified)}, failures dropped: {len(failures)}")
    for failure in failures:
        print("  FAIL", failure)
    if len(verified) < 300:
        print("ERROR: round-trip lexicon has fewer than 300 entries", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
