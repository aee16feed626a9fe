#!/usr/bin/env python3
# Copyright 2026 The termrank Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the bundled lexicon and the 50-document synthetic test corpus.

Deterministic: rerunning produces byte-identical files.

  tools/gen_synthetic_corpus.py --lexicon data/lexicon.tsv \
      --corpus tests/data/synthetic_corpus.txt
"""

import argparse
import random

NOUNS = {
    "drug": "drugs", "effect": "effects", "therapy": "therapies",
    "protein": "proteins", "cell": "cells", "fault": "faults",
    "system": "systems", "pressure": "pressures", "solution": "solutions",
    "creep": "creeps", "sheet": "sheets", "ice": "ices",
    "channel": "channels", "area": "areas", "study": "studies",
    "data": "datas", "use": "uses", "supply": "supplies", "blood": "bloods",
    "radiation": "radiations", "rock": "rocks", "basin": "basins",
    "sediment": "sediments", "patient": "patients", "dose": "doses",
    "trial": "trials", "model": "models", "rate": "rates",
    "earth": "earths", "science": "sciences", "letter": "letters",
    "imaging": "imagings", "binding": "bindings", "response": "responses",
}
ADJECTIVES = [
    "normal", "therapeutic", "adverse", "dendritic", "submarine", "numerical",
    "diagnostic", "clinical", "tectonic", "sedimentary", "high", "low",
    "significant", "strong", "solid", "planetary", "immune",
]
VERBS = {
    "reduce": ["reduced", "reduces"], "increase": ["increased", "increases"],
    "show": ["showed", "shows"], "cause": ["caused", "causes"],
    "occur": ["occurred", "occurs"], "observe": ["observed", "observes"],
    "treat": ["treated", "treats"], "form": ["formed", "forms"],
    "study": ["studied"], "control": ["controlled", "controls"],
}
ADVERBS = ["rapidly", "significantly", "strongly", "slowly", "often", "highly",
           "markedly"]
FUNCTION = [
    ("the", "the", "DET"), ("a", "a", "DET"), ("an", "an", "DET"),
    ("of", "of", "ADP"), ("in", "in", "ADP"), ("on", "on", "ADP"),
    ("with", "with", "ADP"), ("by", "by", "ADP"), ("for", "for", "ADP"),
    ("from", "from", "ADP"), ("between", "between", "ADP"),
    ("and", "and", "CCONJ"), ("or", "or", "CCONJ"),
    ("were", "be", "AUX"), ("was", "be", "AUX"), ("is", "be", "AUX"),
    ("are", "be", "AUX"), ("been", "be", "AUX"), ("be", "be", "AUX"),
    ("this", "this", "DET"), ("these", "these", "DET"),
    ("we", "we", "PRON"), ("it", "it", "PRON"), ("its", "its", "PRON"),
    ("our", "our", "PRON"), ("to", "to", "PART"), ("not", "not", "PART"),
    ("also", "also", "ADV"), ("very", "very", "ADV"),
]

# Domain terms that recur across documents so that nesting and frequency
# corrections actually fire.
TERMS = [
    "drug effects", "drug therapy", "therapeutic use", "adverse effects",
    "binding proteins", "numerical data", "radiation effects",
    "diagnostic imaging", "dendritic cells", "blood supply",
    "normal fault", "normal fault system", "pressure solution",
    "pressure solution creep", "submarine channel", "study area",
    "ice sheet", "solid earth", "planetary science letter",
    "drug effects study", "immune response", "clinical trial",
]


def lexicon_lines():
    lines = []
    for lemma, plural in NOUNS.items():
        lines.append((lemma, lemma, "NOUN"))
        lines.append((plural, lemma, "NOUN"))
    for adj in ADJECTIVES:
        lines.append((adj, adj, "ADJ"))
    for lemma, forms in VERBS.items():
        if lemma not in NOUNS:
            lines.append((lemma, lemma, "VERB"))
        for form in forms:
            if form not in NOUNS.values():
                lines.append((form, lemma, "VERB"))
    for adv in ADVERBS:
        lines.append((adv, adv, "ADV"))
    lines.extend(FUNCTION)
    seen = {}
    for surface, lemma, upos in lines:
        seen.setdefault(surface, (lemma, upos))
    return sorted((s, l, u) for s, (l, u) in seen.items())


def surface_of(word, rng):
    if word in NOUNS and rng.random() < 0.3:
        return NOUNS[word]
    return word


def term_phrase(rng):
    words = rng.choice(TERMS).split()
    words[-1] = surface_of(words[-1], rng)
    return " ".join(words)


def sentence(rng):
    kind = rng.randrange(9)
    noun = lambda: surface_of(rng.choice(list(NOUNS)), rng)
    verb = lambda: rng.choice(rng.choice(list(VERBS.values())))
    if kind == 0:
        return f"The {term_phrase(rng)} {verb()} {rng.choice(ADVERBS)}"
    if kind == 1:
        return f"We observed {term_phrase(rng)} in {rng.randint(2, 99)} {noun()}"
    if kind == 2:
        return (f"{rng.choice(ADJECTIVES).capitalize()} {term_phrase(rng)} "
                f"and {term_phrase(rng)} were studied")
    if kind == 3:
        return f"{noun().capitalize()} {rng.choice(ADVERBS)} {noun()} {noun()}"
    if kind == 4:
        return (f"The {noun()} {rng.choice(ADJECTIVES)} {noun()} "
                f"{rng.choice(ADJECTIVES)} of {term_phrase(rng)}")
    if kind == 5:
        return f"COVID-19 {term_phrase(rng)} (n = {rng.randint(10, 500)}) was {verb()}"
    if kind == 6:
        return f"{term_phrase(rng).capitalize()} {term_phrase(rng)} quickly zorblax"
    if kind == 7:
        return f"The α-synuclein {noun()} of {term_phrase(rng)} is {rng.choice(ADJECTIVES)}"
    return f"This {term_phrase(rng)} {verb()} the {term_phrase(rng)}"


def corpus_lines(rng, n_docs):
    docs = []
    for _ in range(n_docs):
        parts = []
        for _ in range(rng.randint(3, 8)):
            parts.append(sentence(rng) + rng.choice([".", ".", "!", ";", "?"]))
        docs.append(" ".join(parts))
    return docs


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--lexicon", required=True)
    parser.add_argument("--corpus", required=True)
    parser.add_argument("--docs", type=int, default=50)
    parser.add_argument("--seed", type=int, default=20260915)
    args = parser.parse_args()

    with open(args.lexicon, "w", encoding="utf-8") as out:
        out.write("# surface\tlemma\tupos\n")
        for surface, lemma, upos in lexicon_lines():
            out.write(f"{surface}\t{lemma}\t{upos}\n")
    rng = random.Random(args.seed)
    with open(args.corpus, "w", encoding="utf-8") as out:
        for line in corpus_lines(rng, args.docs):
            out.write(line + "\n")


if __name__ == "__main__":
    main()
