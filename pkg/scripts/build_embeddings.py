#!/usr/bin/env python3
"""Generate the bundled word vectors.

Real pretrained vectors are hundreds of megabytes, so the bundled table is
synthetic: every word belongs to a semantic group, each group gets an
orthogonalized base direction, and each word is the group base plus seeded
md5-derived noise, normalized. That puts within-group cosines around 0.8-0.95
and cross-group cosines near zero, which is all the similarity provider needs.
Deterministic; regenerate freely.
"""

import hashlib
import os

import numpy as np

HERE = os.path.dirname(os.path.abspath(__file__))
OUT_PATH = os.path.join(HERE, os.pardir, "src", "attrex", "data",
                        "embeddings", "mini.vec")

DIM = 16
NOISE = 0.35

GROUPS = {
    "clothing": [
        "clothes", "clothing", "wear", "wearing", "wore", "wears", "worn",
        "attire", "garment", "garments", "dressed", "shirt", "shirts",
        "jacket", "jackets", "coat", "coats", "hat", "hats", "sweatshirt",
        "sweater", "top", "tank", "jean", "jeans", "pants", "trousers",
        "shorts", "boot", "boots", "shoe", "shoes", "sneakers", "scarf",
        "glove", "gloves", "cap", "dress", "dockers", "hoodie", "vest",
    ],
    "color": [
        "color", "colors", "white", "black", "blue", "red", "gray", "grey",
        "green", "pink", "brown", "yellow", "orange", "purple", "dark",
        "maroon", "navy", "beige", "tan", "khaki",
    ],
    "person": [
        "person", "man", "woman", "guy", "victim", "suspect", "male",
        "female", "individual", "boy", "girl", "lady", "witness", "officer",
        "resident", "people",
    ],
    "place": [
        "street", "avenue", "road", "park", "area", "house", "store", "car",
        "yard",
    ],
    "verb": [
        "was", "were", "is", "are", "had", "has", "have", "seen", "saw",
        "ran", "fled", "hid", "left", "found", "reported", "stated",
        "observed", "noticed", "riding", "rode", "carried", "carrying",
        "holding", "running", "walking",
    ],
    "function": [
        "the", "a", "an", "and", "or", "with", "in", "on", "at", "near",
        "across", "of", "into", "by", "to", "from", "this", "she", "he",
        "they", "her", "his", "their",
    ],
    "misc": [
        "word", "chest", "build", "height", "description", "report", "bag",
        "bicycle", "bike", "dog", "cat", "medium", "approximately", "feet",
        "inches", "tall", "short", "love", "written", "buttoned", "up",
        "last", "missing",
    ],
}


def seeded_unit(name: str) -> np.ndarray:
    digest = hashlib.md5(name.encode("utf-8")).digest()
    raw = np.array([b / 127.5 - 1.0 for b in digest[:DIM]], dtype=np.float64)
    return raw / np.linalg.norm(raw)


def build():
    # Orthogonalize the group bases so cross-group cosines stay near zero.
    bases = {}
    collected = []
    for group in GROUPS:
        v = seeded_unit("group:" + group)
        for b in collected:
            v = v - np.dot(v, b) * b
        v = v / np.linalg.norm(v)
        collected.append(v)
        bases[group] = v

    rows = []
    for group, words in GROUPS.items():
        for word in words:
            v = bases[group] + NOISE * seeded_unit("word:" + word)
            v = v / np.linalg.norm(v)
            rows.append((word, v))

    seen = set()
    for word, _ in rows:
        if word in seen:
            raise SystemExit("duplicate word %r" % word)
        seen.add(word)

    os.makedirs(os.path.dirname(OUT_PATH), exist_ok=True)
    with open(OUT_PATH, "w", encoding="utf-8") as fh:
        fh.write("%d %d\n" % (len(rows), DIM))
        for word, v in rows:
            fh.write(word + " " + " ".join("%.6f" % x for x in v) + "\n")

    # sanity: within/cross group margins around the 0.5 retrieval threshold
    vecs = dict(rows)

    def cos(a, b):
        return float(np.dot(vecs[a], vecs[b]))

    lo = min(cos(a, b) for a in GROUPS["clothing"][:12]
             for b in GROUPS["clothing"][:12])
    hi = max(cos(a, b) for a in GROUPS["clothing"] for b in
             GROUPS["verb"] + GROUPS["misc"] + GROUPS["function"])
    print("wrote %d vectors (dim %d) to %s" % (len(rows), DIM,
                                               os.path.relpath(OUT_PATH)))
    print("min within-clothing cos=%.3f, max clothing-vs-other cos=%.3f"
          % (lo, hi))
    if lo <= 0.55 or hi >= 0.45:
        raise SystemExit("similarity margins too tight")


if __name__ == "__main__":
    build()
