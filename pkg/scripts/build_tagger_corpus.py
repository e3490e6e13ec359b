#!/usr/bin/env python3
"""Generate the bundled POS training corpus.

Real tagged corpora (OntoNotes, the WSJ treebank) are not redistributable,
so the bundled corpus is synthetic: template sentences over incident-report
vocabulary, written as token<TAB>tag lines with blank-line sentence breaks.
The templates keep every scan-critical word unambiguous (one tag corpus-wide)
so the trained tagger's seen-word shortcut stays deterministic; the generator
asserts that property before writing.

Deterministic: fixed RNG seed, so the output file is reproducible.
"""

import os
import random

HERE = os.path.dirname(os.path.abspath(__file__))
OUT_PATH = os.path.join(HERE, os.pardir, "src", "attrex", "data", "tagger",
                        "corpus.tsv")

COLORS = ["blue", "black", "white", "red", "gray", "grey", "green", "pink",
          "brown", "yellow", "orange", "purple", "dark"]
GARMENTS_SG = ["shirt", "jacket", "coat", "hat", "sweatshirt", "sweater",
               "scarf", "cap", "dress", "top", "tank", "jean", "boot",
               "sock", "shoe", "sneaker", "glove", "hood", "hoodie"]
GARMENTS_PL = ["jeans", "pants", "boots", "shorts", "trousers", "dockers",
               "gloves", "socks", "shoes", "sneakers", "clothes"]
PEOPLE = ["man", "woman", "guy", "boy", "girl", "person", "victim",
          "suspect", "individual", "witness", "officer", "resident", "lady",
          "male", "female"]
RACES = ["White", "Black", "Asian", "Caucasian", "Hispanic"]
STREETS = ["Vernon", "Elm", "Main", "Oak", "Maple", "Birch"]
ADJS = ["missing", "unknown", "young", "old", "heavy", "thin", "slim",
        "medium"]
PLACES = ["park", "area", "house", "street", "road", "car", "yard", "store"]
VBD_ACTIONS = ["fled", "ran", "hid", "chased", "carried", "reported",
               "stated", "noticed", "observed", "responded", "arrived",
               "searched", "found", "left", "saw"]
VBG_ACTIONS = ["running", "walking", "carrying", "holding", "standing",
               "fleeing"]
DIGITS = ["2", "3", "4", "5", "6", "8", "10", "11"]
# Low-frequency vocabulary: some types end up only in a held-out slice, so
# evaluation exercises the suffix/context features on unseen words.
RARE_GARMENTS_SG = ["vest", "poncho", "beanie", "windbreaker", "raincoat",
                    "parka", "cardigan", "blazer", "tunic", "kilt"]
RARE_GARMENTS_PL = ["mittens", "overalls", "leggings", "flannels", "slacks",
                    "loafers", "sandals", "moccasins"]
RARE_COLORS = ["maroon", "beige", "navy", "tan", "khaki", "violet",
               "crimson", "turquoise", "lavender", "scarlet"]
RARE_STREETS = ["Ashby", "Granger", "Linden", "Spruce", "Walnut", "Juniper",
                "Hawthorn", "Sycamore"]

DET = lambda w: (w, "DT")
CC = lambda w: (w, "CC")
IN = lambda w: (w, "IN")
JJ = lambda w: (w, "JJ")
NN = lambda w: (w, "NN")
NNS = lambda w: (w, "NNS")
NNP = lambda w: (w, "NNP")
CD = lambda w: (w, "CD")
COMMA = (",", ",")
STOP = (".", ".")


def noun_phrase(rng, with_det=True, n_colors=None):
    """a/an + colors + garment, or bare plural garment."""
    out = []
    if n_colors is None:
        n_colors = rng.choice([0, 1, 1, 1, 2])
    colors = rng.sample(COLORS, n_colors)
    plural = rng.random() < 0.45
    head = rng.choice(GARMENTS_PL if plural else GARMENTS_SG)
    if not plural and with_det:
        first = colors[0] if colors else head
        out.append(DET("an" if first[0] in "aeiou" else "a"))
    for i, c in enumerate(colors):
        out.append(JJ(c))
        if i + 1 < len(colors) and rng.random() < 0.5:
            out.append(CC("and"))
    out.append((head, "NNS" if plural else "NN"))
    return out


def np_list(rng, k):
    """k noun phrases joined by and/with/commas."""
    out = noun_phrase(rng)
    for i in range(1, k):
        joiner = rng.choice(["and", "with", ","])
        if joiner == ",":
            out.append(COMMA)
        elif joiner == "with":
            out.append(IN("with"))
        else:
            out.append(CC("and"))
        out.extend(noun_phrase(rng))
    return out


def subject(rng):
    roll = rng.random()
    if roll < 0.3:
        return [rng.choice([("He", "PRP"), ("She", "PRP"), ("They", "PRP")])]
    out = [DET("The")]
    if rng.random() < 0.3:
        out.append(JJ(rng.choice(ADJS)))
    out.append(NN(rng.choice(PEOPLE)))
    return out


def be_past(sent):
    """was/were agreeing with the subject just built."""
    return ("were" if sent[-1][0] == "They" else "was", "VBD")


def t_wearing(rng):
    sent = subject(rng)
    sent += [be_past(sent), ("wearing", "VBG")]
    sent += np_list(rng, rng.choice([1, 2, 2, 3]))
    return sent + [STOP]


def t_race_gender(rng):
    person = rng.choice(["Person", "Victim", "Suspect"])
    race = rng.choice(RACES)
    sent = [NN(person), ("was", "VBD"),
            DET("an" if race[0] in "AEIOU" else "a"), JJ(race),
            NN(rng.choice(["male", "female", "man", "woman"]))]
    if rng.random() < 0.4:
        sent += [IN("with"), JJ("medium"), NN("build"), COMMA,
                 ("wearing", "VBG")]
    else:
        sent += [CC("and"), ("was", "VBD"), ("last", "RB"), ("seen", "VBN"),
                 ("wearing", "VBG")]
    sent += np_list(rng, rng.choice([1, 2]))
    return sent + [STOP]


def t_buttoned(rng):
    sent = subject(rng)
    sent += [be_past(sent), ("wearing", "VBG"), DET("a")]
    if rng.random() < 0.5:
        c1, c2 = rng.sample(COLORS, 2)
        sent += [JJ(c1), CC("and"), JJ(c2)]
    sent += [("buttoned", "VBN"), ("up", "RB"), NN("shirt")]
    if rng.random() < 0.4:
        sent += [CC("and"), JJ(rng.choice(COLORS)), NNS(rng.choice(GARMENTS_PL))]
    return sent + [STOP]


def t_had(rng):
    who = rng.choice([("She", "PRP"), ("He", "PRP"), ("The", "DT")])
    sent = [who] if who[1] == "PRP" else [who, NN(rng.choice(PEOPLE))]
    sent.append(("had", "VBD"))
    sent += np_list(rng, rng.choice([1, 2]))
    return sent + [STOP]


def t_have_has(rng):
    if rng.random() < 0.5:
        sent = [("They", "PRP"), ("have", "VBP")]
    else:
        sent = [("She", "PRP"), ("has", "VBZ")]
    sent += np_list(rng, 1)
    return sent + [STOP]


def t_is_are(rng):
    if rng.random() < 0.5:
        return [DET("The"), NN(rng.choice(PEOPLE)), ("is", "VBZ"),
                JJ(rng.choice(["tall", "short"] + ADJS)), STOP]
    return [DET("The"), NNS(rng.choice(GARMENTS_PL)), ("are", "VBP"),
            JJ(rng.choice(COLORS)), STOP]


def t_street(rng):
    sent = subject(rng)
    be = be_past(sent)
    sent += [be]
    if rng.random() < 0.5:
        sent += [("last", "RB"), ("seen", "VBN")]
    else:
        sent += [("seen", "VBN")]
    sent += [IN("in"), NNP(rng.choice(STREETS)), NNP("St"), STOP]
    if rng.random() < 0.6:
        sent = sent[:-1] + [CC("and"), be, ("wearing", "VBG")]
        sent += np_list(rng, rng.choice([1, 2, 3]))
        sent += [STOP]
    return sent


def t_height(rng):
    sent = subject(rng)
    roll = rng.random()
    if roll < 0.4:
        sent += [be_past(sent), CD(rng.choice(DIGITS)), NNS("feet"),
                 CD(rng.choice(DIGITS)), NNS("inches"), JJ("tall"), STOP]
    elif roll < 0.7:
        sent += [be_past(sent), ("approximately", "RB"),
                 CD(rng.choice(DIGITS)), NNS("feet"), JJ("tall"), STOP]
    else:
        sent += [be_past(sent), JJ(rng.choice(["tall", "short"])), STOP]
    return sent


def t_riding(rng):
    sent = subject(rng)
    sent += [be_past(sent), ("seen", "VBN"), ("wearing", "VBG"),
             JJ("dark"), NN("clothing"), CC("and"), ("riding", "VBG"),
             DET("a"), JJ(rng.choice(COLORS)), NN(rng.choice(["bicycle", "bike"])),
             STOP]
    return sent


def t_word_on_garment(rng):
    garment = rng.choice(["sweatshirt", "shirt", "jacket", "cap"])
    sent = [DET("The"), NN(garment), ("had", "VBD"), DET("the"),
            NN("word"), NN("love"), ("written", "VBN"), IN("across"),
            DET("the"), NN("chest"), STOP]
    return sent


def t_filler(rng):
    roll = rng.random()
    if roll < 0.2:
        return [DET("The"), NN(rng.choice(["dog", "cat", "puppy", "kitten"])),
                (rng.choice(["chased", "saw"]), "VBD"), DET("the"),
                NN(rng.choice(["cat", "dog"])), STOP]
    if roll < 0.4:
        return [NNS("Officers"), (rng.choice(["searched", "observed"]), "VBD"),
                DET("the"), NN(rng.choice(PLACES)), STOP]
    if roll < 0.55:
        return [DET("The"), NN("report"), ("was", "VBD"), ("written", "VBN"),
                IN("by"), DET("the"), NN("officer"), STOP]
    if roll < 0.7:
        who = rng.choice([("She", "PRP"), ("He", "PRP"), ("They", "PRP")])
        return [who, (rng.choice(["ran", "fled"]), "VBD"), IN("into") if
                rng.random() < 0.5 else ("to", "TO"), DET("the"),
                NN(rng.choice(PLACES)), STOP]
    if roll < 0.85:
        return [DET("A"), NN("witness"), ("saw", "VBD"), DET("the"),
                NN(rng.choice(PEOPLE)), IN("near"),
                NNP(rng.choice(STREETS)), NNP("St"), STOP]
    return [DET("The"), NN("officer"), (rng.choice(VBD_ACTIONS[5:]), "VBD"),
            IN("on"), NNP(rng.choice(["Monday", "Tuesday", "Friday"])), STOP]


def t_carrying(rng):
    sent = subject(rng)
    sent += [be_past(sent), ("seen", "VBN"),
             (rng.choice(VBG_ACTIONS), "VBG"), IN("near"), DET("the"),
             NN(rng.choice(PLACES)), STOP]
    return sent


def t_description(rng):
    return [DET("The"), NN(rng.choice(["description", "height"])),
            IN("of"), DET("the"), NN(rng.choice(PEOPLE)), ("is", "VBZ"),
            JJ("unknown"), STOP]


def t_possessive(rng):
    who = rng.choice([("His", "PRP$"), ("Her", "PRP$"), ("Their", "PRP$")])
    sent = [who, NNS("clothes") if rng.random() < 0.4 else
            NN(rng.choice(GARMENTS_SG))]
    sent += [("were", "VBD") if sent[1][1] == "NNS" else ("was", "VBD"),
             JJ(rng.choice(COLORS)), STOP]
    return sent


def t_ambiguous(rng):
    """Genuinely ambiguous words (that, left, found, reported) so the
    perceptron has real mistakes to learn from."""
    roll = rng.random()
    if roll < 0.2:
        return [DET("The"), NN("officer"), ("stated", "VBD"), ("that", "IN"),
                DET("the"), NN(rng.choice(PEOPLE)), ("fled", "VBD"), STOP]
    if roll < 0.35:
        return [("That", "DT"), NN(rng.choice(PEOPLE)),
                (rng.choice(["fled", "ran", "hid"]), "VBD"), STOP]
    if roll < 0.5:
        return [DET("The"), NN(rng.choice(PEOPLE)), ("had", "VBD"),
                DET("a"), NN("scar"), IN("on"), DET("the"), ("left", "JJ"),
                NN(rng.choice(["arm", "hand", "cheek"])), STOP]
    if roll < 0.65:
        return [DET("The"), NN(rng.choice(["bag", "bicycle", "car", "hat"])),
                ("was", "VBD"), ("found", "VBN"), IN("near"), DET("the"),
                NN(rng.choice(PLACES)), STOP]
    if roll < 0.8:
        return [DET("The"), NN(rng.choice(PEOPLE)), ("was", "VBD"),
                ("reported", "VBN"), JJ("missing"), IN("on"),
                NNP(rng.choice(["Monday", "Tuesday", "Friday"])), STOP]
    return [("They", "PRP"), ("left", "VBD"), DET("the"),
            NN(rng.choice(PLACES)), IN("on"),
            NNP(rng.choice(["Monday", "Tuesday", "Friday"])), STOP]


def t_wore(rng):
    """The wear paradigm beyond "wearing": wore/wears/wear all show up in
    real reports and the extraction keywords match them, so the tagger
    should not treat them as unknowns."""
    roll = rng.random()
    if roll < 0.45:
        sent = subject(rng)
        sent.append(("wore", "VBD"))
        sent += np_list(rng, rng.choice([1, 2]))
        return sent + [STOP]
    if roll < 0.75:
        sent = [DET("The"), NN(rng.choice(PEOPLE)), ("wears", "VBZ")]
        sent += np_list(rng, 1)
        return sent + [STOP]
    sent = [("They", "PRP"), ("wear", "VBP")]
    sent += np_list(rng, 1)
    return sent + [STOP]


def t_rare(rng):
    sent = subject(rng)
    sent += [be_past(sent), ("wearing", "VBG")]
    color = rng.choice(RARE_COLORS + COLORS)
    if rng.random() < 0.55:
        head = rng.choice(RARE_GARMENTS_SG)
        sent += [DET("an" if color[0] in "aeiou" else "a"), JJ(color),
                 NN(head)]
    else:
        sent += [JJ(color), NNS(rng.choice(RARE_GARMENTS_PL))]
    return sent + [STOP]


def t_rare_street(rng):
    sent = subject(rng)
    sent += [be_past(sent), ("seen", "VBN"), IN("near"),
             NNP(rng.choice(RARE_STREETS)), NNP("Ave"), STOP]
    return sent


TEMPLATES = [
    (t_wearing, 420),
    (t_race_gender, 240),
    (t_buttoned, 120),
    (t_had, 170),
    (t_have_has, 90),
    (t_is_are, 110),
    (t_street, 200),
    (t_height, 180),
    (t_riding, 90),
    (t_word_on_garment, 60),
    (t_filler, 330),
    (t_carrying, 90),
    (t_description, 60),
    (t_possessive, 90),
    (t_ambiguous, 260),
    (t_wore, 120),
    (t_rare, 120),
    (t_rare_street, 40),
]

CRITICAL = (["a", "an", "the", "and", "or", "with", "in", "on", "at", "near",
             "across", "of", "into", "by", "was", "were", "is", "are", "had",
             "has", "have", "wearing", "wore", "wears", "wear", "riding",
             "seen", "buttoned",
             "written", "up", ",", ".", "word", "chest", "build", "clothing",
             "bicycle", "tank", "top", "jean", "dockers", "last"]
            + COLORS + GARMENTS_SG + GARMENTS_PL + PEOPLE
            + [r.lower() for r in RACES])


def build():
    rng = random.Random(20250814)
    sentences = []
    for template, count in TEMPLATES:
        for _ in range(count):
            sentences.append(template(rng))
    rng.shuffle(sentences)

    tags_by_word = {}
    for sent in sentences:
        for token, tag in sent:
            tags_by_word.setdefault(token.lower(), set()).add(tag)
    ambiguous = [w for w in CRITICAL if len(tags_by_word.get(w, {"?"})) != 1]
    if ambiguous:
        raise SystemExit("ambiguous critical words: %s" % ambiguous)

    os.makedirs(os.path.dirname(OUT_PATH), exist_ok=True)
    with open(OUT_PATH, "w", encoding="utf-8") as fh:
        fh.write("# Synthetic POS training corpus for the attrex tagger.\n")
        fh.write("# Generated by scripts/build_tagger_corpus.py (fixed seed);"
                 " token<TAB>tag, blank line between sentences.\n")
        for sent in sentences:
            for token, tag in sent:
                fh.write("%s\t%s\n" % (token, tag))
            fh.write("\n")
    print("wrote %d sentences (%d tokens, %d word types) to %s" % (
        len(sentences),
        sum(len(s) for s in sentences),
        len(tags_by_word),
        os.path.relpath(OUT_PATH)))


if __name__ == "__main__":
    build()
