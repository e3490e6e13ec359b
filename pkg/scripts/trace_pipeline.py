"""Run the full pipeline over the bundled incident corpus and print every
record next to the gold annotation. Debugging aid, not part of the package."""

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from attrex.candidates import ChainElement, ExtractorConfig
from attrex.scan import Pipeline
from attrex.similarity import RegexProvider, WordnetProvider
from attrex.tagger import load_model
from attrex.text import make_document
from attrex.wordnet import load_wordnet

DATA = os.path.join(os.path.dirname(__file__), "..", "src", "attrex", "data")


def main():
    graph = load_wordnet(os.path.join(DATA, "wordnet"))
    model = load_model(os.path.join(DATA, "tagger", "model.json"))
    config = ExtractorConfig(chain=(
        ChainElement("re"),
        ChainElement("wordnet", threshold=0.9,
                     key_phrases=("clothes", "wear")),
    ))
    providers = {"re": RegexProvider(), "wordnet": WordnetProvider(graph)}
    pipe = Pipeline(model, graph, config, providers)

    gold = {}
    with open(os.path.join(DATA, "corpus", "gold.jsonl")) as fh:
        for line in fh:
            doc = json.loads(line)
            gold[doc["document_id"]] = doc["properties"]

    with open(os.path.join(DATA, "corpus", "incidents.jsonl")) as fh:
        for line in fh:
            doc = json.loads(line)
            result = pipe.extract(make_document(doc["id"], doc["text"]))
            print("==", doc["id"], "provider:", result.provider_used,
                  "candidates:", result.candidates)
            print("  text:", doc["text"])
            got = [(r.name, list(r.values)) for r in result.properties]
            want = [(p["name"], p["values"]) for p in gold[doc["id"]]]
            for name, values in got:
                print("   out: %-22s %s" % (name, values))
            for name, values in want:
                print("  gold: %-22s %s" % (name, values))
            print("  MATCH" if got == want else "  DIFF")


if __name__ == "__main__":
    main()
