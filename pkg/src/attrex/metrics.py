"""Scoring extracted properties against gold annotations.

Two modes: attr_only credits a prediction whose (normalized) name matches
an unclaimed gold record, attr_value additionally requires the value
multisets to agree. Matching is one-to-one in document order, which is
optimal here because records compare by key equality only: per key the
match count is min(#predicted, #gold) either way.
"""

import json
from dataclasses import dataclass, field

from .scan import PropertyRecord

MODES = ("attr_only", "attr_value")


def normalize_name(name: str) -> str:
    """Case- and plural-insensitive comparison key for property names."""
    name = name.strip().lower()
    if len(name) > 3 and name.endswith("s") and not name.endswith("ss"):
        name = name[:-1]
    return name


def normalize_value(value: str) -> str:
    return normalize_name(value)


def _record_key(record: PropertyRecord, mode: str):
    name = normalize_name(record.name)
    if mode == "attr_only":
        return name
    return (name, tuple(sorted(normalize_value(v) for v in record.values)))


@dataclass
class GoldAnnotation:
    """Ground truth for one document. Names are stored lowercase and no
    (name, values) pair repeats."""

    document_id: str
    properties: list

    def __post_init__(self):
        if not self.document_id:
            raise ValueError("empty document_id")
        seen = set()
        for record in self.properties:
            if record.name != record.name.lower():
                raise ValueError("gold name %r is not lowercase"
                                 % record.name)
            key = (record.name, tuple(sorted(record.values)))
            if key in seen:
                raise ValueError("duplicate gold record %r in %s"
                                 % (record.name, self.document_id))
            seen.add(key)


def _records(gold):
    return gold.properties if isinstance(gold, GoldAnnotation) else gold


@dataclass
class PropertyMetrics:
    """Match counts plus the usual derived rates."""

    tp: int = 0
    fp: int = 0
    fn: int = 0

    @property
    def precision(self) -> float:
        return self.tp / (self.tp + self.fp) if self.tp + self.fp else 0.0

    @property
    def recall(self) -> float:
        return self.tp / (self.tp + self.fn) if self.tp + self.fn else 0.0

    @property
    def f1(self) -> float:
        p, r = self.precision, self.recall
        return 2 * p * r / (p + r) if p + r else 0.0

    def add(self, other: "PropertyMetrics"):
        self.tp += other.tp
        self.fp += other.fp
        self.fn += other.fn

    def to_dict(self):
        return {
            "tp": self.tp, "fp": self.fp, "fn": self.fn,
            "precision": self.precision, "recall": self.recall,
            "f1": self.f1,
        }


@dataclass
class MetricsReport:
    """Micro-averaged totals plus a per-property-name breakdown."""

    mode: str
    overall: PropertyMetrics
    per_property: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "mode": self.mode,
            "overall": self.overall.to_dict(),
            "per_property": {name: m.to_dict() for name, m in
                             sorted(self.per_property.items())},
        }


def match_records(predicted, gold, mode: str):
    """One-to-one matching; returns (matched gold records, fp records, fn records)."""
    if mode not in MODES:
        raise ValueError("unknown metrics mode %r (expected one of %s)"
                         % (mode, ", ".join(MODES)))
    remaining = list(_records(gold))
    matched = []
    false_pos = []
    for record in predicted:
        key = _record_key(record, mode)
        for i, g in enumerate(remaining):
            if _record_key(g, mode) == key:
                matched.append(remaining.pop(i))
                break
        else:
            false_pos.append(record)
    return matched, false_pos, remaining


def score_document(predicted, gold, mode: str) -> dict:
    """Per-property-name counts for one document."""
    matched, false_pos, missed = match_records(predicted, gold, mode)
    counts = {}

    def bucket(name):
        return counts.setdefault(normalize_name(name), PropertyMetrics())

    for record in matched:
        bucket(record.name).tp += 1
    for record in false_pos:
        bucket(record.name).fp += 1
    for record in missed:
        bucket(record.name).fn += 1
    return counts


def _report_from_counts(counts, mode):
    overall = PropertyMetrics()
    per_property = {}
    for name, m in counts.items():
        per_property.setdefault(name, PropertyMetrics()).add(m)
        overall.add(m)
    return MetricsReport(mode=mode, overall=overall,
                         per_property=per_property)


def attr_only(predicted, gold) -> MetricsReport:
    """Score one document on property names alone."""
    return _report_from_counts(
        score_document(predicted, _records(gold), "attr_only"), "attr_only")


def attr_value(predicted, gold) -> MetricsReport:
    """Score one document on names plus value multisets."""
    return _report_from_counts(
        score_document(predicted, _records(gold), "attr_value"), "attr_value")


def evaluate_corpus(predictions: dict, gold: dict,
                    mode: str = "attr_value") -> MetricsReport:
    """Micro-average across documents.

    Every predicted document needs a gold annotation; gold documents
    without predictions count their records as misses.
    """
    missing = sorted(set(predictions) - set(gold))
    if missing:
        raise ValueError("no gold annotation for document %r"
                         % missing[0])
    overall = PropertyMetrics()
    per_property = {}
    for doc_id in sorted(gold):
        counts = score_document(predictions.get(doc_id, []),
                                _records(gold[doc_id]), mode)
        for name, m in counts.items():
            per_property.setdefault(name, PropertyMetrics()).add(m)
            overall.add(m)
    return MetricsReport(mode=mode, overall=overall,
                         per_property=per_property)


def _parse_records(doc, path, lineno):
    try:
        return [PropertyRecord(p["name"], tuple(p["values"]))
                for p in doc["properties"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError("%s: bad property record at line %d: %s"
                         % (path, lineno, exc)) from None


def load_gold(path: str) -> dict:
    """Gold annotations: one {document_id, properties} object per line."""
    gold = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                doc = json.loads(line)
                doc_id = doc["document_id"]
            except (json.JSONDecodeError, KeyError, TypeError):
                raise ValueError("%s: gold parse error at line %d"
                                 % (path, lineno)) from None
            if doc_id in gold:
                raise ValueError("%s: duplicate document %r at line %d"
                                 % (path, doc_id, lineno))
            records = _parse_records(doc, path, lineno)
            try:
                gold[doc_id] = GoldAnnotation(doc_id, records)
            except ValueError as exc:
                raise ValueError("%s: line %d: %s"
                                 % (path, lineno, exc)) from None
    return gold


def load_predictions(path: str) -> dict:
    """Extraction output: one {id, properties, ...} object per line."""
    predictions = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                doc = json.loads(line)
                doc_id = doc["id"]
            except (json.JSONDecodeError, KeyError, TypeError):
                raise ValueError("%s: predictions parse error at line %d"
                                 % (path, lineno)) from None
            if doc_id in predictions:
                raise ValueError("%s: duplicate document %r at line %d"
                                 % (path, doc_id, lineno))
            predictions[doc_id] = _parse_records(doc, path, lineno)
    return predictions
