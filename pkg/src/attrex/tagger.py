"""Averaged perceptron POS tagger.

Trained from scratch on the bundled corpus; no pretrained weights. The
feature template is deliberately small: word shape flags, two suffixes, the
lowercased word, the two previous predicted tags and the neighboring words.
Words that occur with exactly one tag in the training corpus bypass the
model entirely (seen_tags), which keeps the scan-critical closed-class words
deterministic.
"""

import json
import random
from dataclasses import dataclass

from .text import PTB_TAGS, TaggedToken

MODEL_FORMAT_VERSION = 1

_START = ("-START-", "-START2-")


@dataclass
class TaggedCorpus:
    """Training/eval sentences: lists of (token, gold tag) pairs."""

    sentences: list

    def __post_init__(self):
        for si, sent in enumerate(self.sentences):
            if not sent:
                raise ValueError("empty sentence at index %d" % si)
            for token, tag in sent:
                if tag not in PTB_TAGS:
                    raise ValueError(
                        "unknown gold tag %r for token %r (sentence %d)"
                        % (tag, token, si))

    def __len__(self):
        return len(self.sentences)


class PerceptronModel:
    """Trained weights plus the unambiguous-word shortcut table."""

    def __init__(self, weights, classes, seen_tags):
        self.weights = weights
        self.classes = sorted(classes)
        self.seen_tags = dict(seen_tags)

    def predict(self, features) -> str:
        scores = {}
        for feat in features:
            for tag, weight in self.weights.get(feat, {}).items():
                scores[tag] = scores.get(tag, 0.0) + weight
        best_tag, best = None, None
        for tag in self.classes:  # sorted: ties go to the smallest tag
            score = scores.get(tag, 0.0)
            if best is None or score > best:
                best_tag, best = tag, score
        return best_tag


def _features(i, word, tokens, prev, prev2):
    lower = word.lower()
    prev_word = tokens[i - 1].lower() if i > 0 else "-START-"
    next_word = tokens[i + 1].lower() if i + 1 < len(tokens) else "-END-"
    feats = [
        "suffix3=" + lower[-3:],
        "suffix2=" + lower[-2:],
        "word=" + lower,
        "ptag=" + prev,
        "pptag=" + prev2,
        "pword=" + prev_word,
        "nword=" + next_word,
    ]
    if word[:1].isupper():
        feats.append("cap")
    if any(ch.isdigit() for ch in word):
        feats.append("digit")
    if "-" in word:
        feats.append("hyphen")
    return feats


def _seen_tags(corpus):
    tags_by_word = {}
    for sent in corpus.sentences:
        for token, tag in sent:
            tags_by_word.setdefault(token.lower(), set()).add(tag)
    return {w: tags.pop() for w, tags in tags_by_word.items() if len(tags) == 1}


def train(corpus: TaggedCorpus, epochs: int = 5, seed: int = 0) -> PerceptronModel:
    """Train with per-update weight averaging; deterministic for a seed."""
    if not corpus.sentences:
        raise ValueError("empty training corpus")
    if epochs < 1:
        raise ValueError("epochs must be >= 1")

    classes = sorted({tag for sent in corpus.sentences for _, tag in sent})
    seen = _seen_tags(corpus)
    model = PerceptronModel({}, classes, seen)
    weights = model.weights
    totals = {}   # (feat, tag) -> accumulated weight over update snapshots
    stamps = {}   # (feat, tag) -> update index when the current value was set
    updates = 0

    def bump(feat, tag, delta):
        row = weights.setdefault(feat, {})
        value = row.get(tag, 0.0)
        key = (feat, tag)
        totals[key] = totals.get(key, 0.0) + value * (updates - stamps.get(key, 0))
        stamps[key] = updates
        row[tag] = value + delta

    rng = random.Random(seed)
    order = list(range(len(corpus.sentences)))
    for _epoch in range(epochs):
        rng.shuffle(order)
        for si in order:
            sent = corpus.sentences[si]
            tokens = [token for token, _ in sent]
            prev, prev2 = _START
            for i, (token, gold) in enumerate(sent):
                lower = token.lower()
                if lower in seen:
                    pred = seen[lower]
                else:
                    feats = _features(i, token, tokens, prev, prev2)
                    pred = model.predict(feats)
                    if pred != gold:
                        updates += 1
                        for feat in feats:
                            bump(feat, gold, 1.0)
                            bump(feat, pred, -1.0)
                prev2, prev = prev, pred
    if updates:
        averaged = {}
        for feat, row in weights.items():
            for tag, value in row.items():
                key = (feat, tag)
                total = totals.get(key, 0.0)
                total += value * (updates - stamps.get(key, 0) + 1)
                avg = total / updates
                if avg:
                    averaged.setdefault(feat, {})[tag] = avg
        model.weights = averaged
    return model


def tag(model: PerceptronModel, tokens) -> list:
    """Tag a token sequence; output always aligns 1:1 with the input."""
    tokens = list(tokens)
    out = []
    prev, prev2 = _START
    for i, token in enumerate(tokens):
        lower = token.lower()
        picked = model.seen_tags.get(lower)
        if picked is None:
            picked = model.predict(_features(i, token, tokens, prev, prev2))
        out.append(TaggedToken(token, picked))
        prev2, prev = prev, picked
    return out


def accuracy(model: PerceptronModel, corpus: TaggedCorpus) -> float:
    """Token-level accuracy of the model on gold-tagged sentences."""
    right = total = 0
    for sent in corpus.sentences:
        got = tag(model, [token for token, _ in sent])
        for tt, (_, gold) in zip(got, sent):
            right += tt.tag == gold
            total += 1
    return right / total if total else 0.0


def save_model(model: PerceptronModel, path) -> None:
    doc = {
        "format_version": MODEL_FORMAT_VERSION,
        "classes": model.classes,
        "seen_tags": model.seen_tags,
        "weights": model.weights,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, sort_keys=True, ensure_ascii=False)
        fh.write("\n")


def load_model(path) -> PerceptronModel:
    with open(path, encoding="utf-8") as fh:
        body = fh.read()
    if not body.strip():
        raise ValueError("%s: empty model file" % path)
    try:
        doc = json.loads(body)
    except json.JSONDecodeError as exc:
        raise ValueError("%s: model parse error: %s" % (path, exc)) from None
    for field in ("format_version", "classes", "seen_tags", "weights"):
        if field not in doc:
            raise ValueError("%s: model missing field %r" % (path, field))
    if doc["format_version"] != MODEL_FORMAT_VERSION:
        raise ValueError(
            "%s: unsupported model format version %r"
            % (path, doc["format_version"]))
    classes = set(doc["classes"])
    for feat, row in doc["weights"].items():
        for tag in row:
            if tag not in classes:
                raise ValueError(
                    "%s: weight for unknown class %r under feature %r"
                    % (path, tag, feat))
    return PerceptronModel(doc["weights"], classes, doc["seen_tags"])


def load_corpus(path) -> TaggedCorpus:
    """Read token<TAB>tag lines; blank lines separate sentences, # comments."""
    sentences, current = [], []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if line.startswith("#"):
                continue
            if not line.strip():
                if current:
                    sentences.append(current)
                    current = []
                continue
            try:
                token, tag_ = line.split("\t")
            except ValueError:
                raise ValueError(
                    "%s: corpus parse error at line %d" % (path, lineno)) from None
            current.append((token, tag_))
    if current:
        sentences.append(current)
    return TaggedCorpus(sentences)


def save_corpus(corpus: TaggedCorpus, path, header: str = "") -> None:
    with open(path, "w", encoding="utf-8") as fh:
        if header:
            for line in header.splitlines():
                fh.write("# " + line + "\n")
        for sent in corpus.sentences:
            for token, tag_ in sent:
                fh.write("%s\t%s\n" % (token, tag_))
            fh.write("\n")
