"""Tests for record matching and corpus scoring, including a brute-force
matching oracle and the frozen scores for the bundled incident corpus."""

import itertools
import json
import os
import random
from collections import Counter

import pytest

from attrex.candidates import ChainElement, ExtractorConfig
from attrex.metrics import (
    MODES,
    GoldAnnotation,
    PropertyMetrics,
    attr_only,
    attr_value,
    evaluate_corpus,
    load_gold,
    load_predictions,
    match_records,
    normalize_name,
    score_document,
)
from attrex.scan import Pipeline, PropertyRecord
from attrex.similarity import RegexProvider, WordnetProvider
from attrex.tagger import load_model


def rec(name, *values):
    return PropertyRecord(name, tuple(values))


def test_normalize_name():
    assert normalize_name("Jeans") == "jean"
    assert normalize_name("Boots ") == "boot"
    assert normalize_name("dress") == "dress"
    assert normalize_name("gas") == "gas"
    assert normalize_name("buttoned up shirt") == "buttoned up shirt"
    assert normalize_name("jean shorts") == "jean short"


def test_metrics_rates_and_zero_denominators():
    m = PropertyMetrics(tp=3, fp=1, fn=2)
    assert m.precision == 3 / 4
    assert m.recall == 3 / 5
    assert abs(m.f1 - 2 * (3 / 4) * (3 / 5) / (3 / 4 + 3 / 5)) < 1e-12
    empty = PropertyMetrics()
    assert empty.precision == 0.0
    assert empty.recall == 0.0
    assert empty.f1 == 0.0
    assert PropertyMetrics(tp=0, fp=5, fn=0).f1 == 0.0


def test_f1_identity():
    rng = random.Random(7)
    for _ in range(200):
        m = PropertyMetrics(tp=rng.randint(0, 20), fp=rng.randint(0, 20),
                            fn=rng.randint(0, 20))
        if m.tp + m.fp + m.fn == 0:
            continue
        assert abs(m.f1 - 2 * m.tp / (2 * m.tp + m.fp + m.fn)) < 1e-12


def test_attr_only_ignores_values():
    predicted = [rec("shirt", "blue")]
    gold = [rec("shirt", "red")]
    matched, fp, fn = match_records(predicted, gold, "attr_only")
    assert (len(matched), fp, fn) == (1, [], [])
    matched, fp, fn = match_records(predicted, gold, "attr_value")
    assert (len(matched), len(fp), len(fn)) == (0, 1, 1)


def test_attr_value_is_order_insensitive():
    predicted = [rec("shirt", "blue", "red")]
    gold = [rec("shirt", "red", "blue")]
    matched, fp, fn = match_records(predicted, gold, "attr_value")
    assert (len(matched), fp, fn) == (1, [], [])


def test_matching_normalizes_case_and_plurals():
    predicted = [rec("Jeans", "Black")]
    gold = [rec("jean", "black")]
    for mode in MODES:
        matched, fp, fn = match_records(predicted, gold, mode)
        assert (len(matched), fp, fn) == (1, [], []), mode


def test_duplicate_predictions_match_once():
    predicted = [rec("hat", "red"), rec("hat", "red")]
    gold = [rec("hat", "red")]
    matched, fp, fn = match_records(predicted, gold, "attr_value")
    assert (len(matched), len(fp), len(fn)) == (1, 1, 0)


def test_unknown_mode():
    with pytest.raises(ValueError, match="unknown metrics mode"):
        match_records([], [], "strict")


def brute_force_tp(predicted, gold, mode):
    """Maximum one-to-one matching, tried over every assignment order."""
    best = 0
    indices = range(len(gold))
    for perm in itertools.permutations(indices):
        used = set()
        tp = 0
        # walk predictions; each may claim the first unused gold (in this
        # permutation's order) with an equal key
        for record in predicted:
            for gi in perm:
                if gi in used:
                    continue
                m, _fp, _fn = match_records([record], [gold[gi]], mode)
                if m:
                    used.add(gi)
                    tp += 1
                    break
        best = max(best, tp)
    return best


def counter_tp(predicted, gold, mode):
    """Equality-class formula: per key, min of the two multiplicities."""
    def keys(records):
        out = []
        for r in records:
            m, _fp, _fn = match_records([r], [r], mode)
            name = normalize_name(r.name)
            if mode == "attr_only":
                out.append(name)
            else:
                out.append((name, tuple(sorted(normalize_name(v)
                                               for v in r.values))))
        return Counter(out)

    p, g = keys(predicted), keys(gold)
    return sum(min(c, g[k]) for k, c in p.items())


def test_greedy_matching_is_optimal():
    rng = random.Random(20250814)
    names = ["shirt", "shirts", "hat", "jeans", "coat"]
    colors = ["red", "blue", "black", ""]
    for trial in range(300):
        def make(n):
            out = []
            for _ in range(n):
                vals = tuple(v for v in rng.sample(colors, rng.randint(0, 2))
                             if v)
                out.append(PropertyRecord(rng.choice(names), vals))
            return out

        predicted = make(rng.randint(0, 5))
        gold = make(rng.randint(0, 5))
        for mode in MODES:
            matched, fp, fn = match_records(predicted, gold, mode)
            want = counter_tp(predicted, gold, mode)
            assert len(matched) == want, (trial, mode)
            assert len(fp) == len(predicted) - want
            assert len(fn) == len(gold) - want
            if len(gold) <= 4:
                assert brute_force_tp(predicted, gold, mode) == want


def test_score_document_buckets():
    predicted = [rec("gender", "male"), rec("shirt", "blue"), rec("word")]
    gold = [rec("gender", "male"), rec("shirt", "red")]
    counts = score_document(predicted, gold, "attr_value")
    assert counts["gender"].tp == 1
    assert counts["shirt"].fp == 1
    assert counts["shirt"].fn == 1
    assert counts["word"].fp == 1


def test_single_document_reports():
    predicted = [rec("shirt", "blue"), rec("hat", "red")]
    gold = GoldAnnotation("a", [rec("shirt", "striped"), rec("hat", "red")])
    only = attr_only(predicted, gold)
    assert (only.overall.tp, only.overall.fp, only.overall.fn) == (2, 0, 0)
    value = attr_value(predicted, gold)
    assert (value.overall.tp, value.overall.fp, value.overall.fn) == (1, 1, 1)
    assert value.per_property["shirt"].fn == 1


def test_empty_prediction_and_gold_score_zero():
    report = attr_value([], GoldAnnotation("a", []))
    assert (report.overall.precision, report.overall.recall,
            report.overall.f1) == (0.0, 0.0, 0.0)


def test_gold_annotation_invariants():
    with pytest.raises(ValueError, match="not lowercase"):
        GoldAnnotation("a", [rec("Shirt", "blue")])
    with pytest.raises(ValueError, match="duplicate gold record"):
        GoldAnnotation("a", [rec("shirt", "blue"), rec("shirt", "blue")])
    with pytest.raises(ValueError, match="empty document_id"):
        GoldAnnotation("", [])
    # same name with different values is legal
    GoldAnnotation("a", [rec("shirt", "blue"), rec("shirt", "red")])


def test_evaluate_corpus_micro_average():
    predictions = {
        "a": [rec("shirt", "blue"), rec("hat")],
        "b": [rec("jeans", "black")],
    }
    gold = {
        "a": GoldAnnotation("a", [rec("shirt", "blue")]),
        "b": GoldAnnotation("b", [rec("jeans", "blue"), rec("boots", "red")]),
        "d": GoldAnnotation("d", [rec("scarf")]),  # never predicted
    }
    report = evaluate_corpus(predictions, gold, "attr_value")
    assert (report.overall.tp, report.overall.fp, report.overall.fn) == (1, 2, 3)
    assert report.per_property["shirt"].tp == 1
    assert report.per_property["hat"].fp == 1
    assert report.per_property["scarf"].fn == 1
    doc = report.to_dict()
    assert doc["mode"] == "attr_value"
    assert doc["overall"]["tp"] == 1
    assert list(doc["per_property"]) == sorted(doc["per_property"])


def test_evaluate_corpus_requires_gold_for_predictions():
    with pytest.raises(ValueError, match="no gold annotation for document 'x'"):
        evaluate_corpus({"x": [rec("hat")]}, {}, "attr_only")


def test_document_order_never_changes_scores():
    rng = random.Random(3)
    names = ["shirt", "hat", "jeans"]
    gold = {}
    predictions = {}
    for i in range(6):
        doc_id = "doc-%d" % i
        gold[doc_id] = [rec(rng.choice(names), *rng.sample(["red", "blue"],
                                                           rng.randint(0, 2)))
                        for _ in range(rng.randint(0, 3))]
        predictions[doc_id] = [rec(rng.choice(names))
                               for _ in range(rng.randint(0, 3))]
    base = evaluate_corpus(predictions, gold, "attr_only").to_dict()
    shuffled_ids = list(predictions)
    rng.shuffle(shuffled_ids)
    shuffled = evaluate_corpus({k: predictions[k] for k in shuffled_ids},
                               {k: gold[k] for k in reversed(shuffled_ids)},
                               "attr_only").to_dict()
    assert base == shuffled


def test_gold_roundtrip(tmp_path):
    path = tmp_path / "gold.jsonl"
    rows = [
        {"document_id": "a", "properties": [{"name": "shirt",
                                             "values": ["blue"]}]},
        {"document_id": "b", "properties": []},
    ]
    path.write_text("\n".join(json.dumps(r) for r in rows) + "\n")
    gold = load_gold(str(path))
    assert gold["a"].properties == [rec("shirt", "blue")]
    assert gold["a"].document_id == "a"
    assert gold["b"].properties == []


def test_gold_errors(tmp_path):
    bad = tmp_path / "bad.jsonl"
    bad.write_text("not json\n")
    with pytest.raises(ValueError, match="gold parse error at line 1"):
        load_gold(str(bad))
    bad.write_text('{"document_id": "a", "properties": [{"name": "x"}]}\n')
    with pytest.raises(ValueError, match="bad property record at line 1"):
        load_gold(str(bad))
    bad.write_text(
        '{"document_id": "a", "properties": []}\n'
        '{"document_id": "a", "properties": []}\n')
    with pytest.raises(ValueError, match="duplicate document 'a' at line 2"):
        load_gold(str(bad))
    bad.write_text(
        '{"document_id": "a", "properties": [{"name": "Hat", "values": []}]}\n')
    with pytest.raises(ValueError, match="line 1: .*not lowercase"):
        load_gold(str(bad))


def test_predictions_errors(tmp_path):
    bad = tmp_path / "pred.jsonl"
    bad.write_text('{"properties": []}\n')
    with pytest.raises(ValueError, match="predictions parse error"):
        load_predictions(str(bad))


def test_bundled_corpus_scores(data_dir):
    graph_dir = os.path.join(data_dir, "wordnet")
    from attrex.wordnet import load_wordnet
    graph = load_wordnet(graph_dir)
    model = load_model(os.path.join(data_dir, "tagger", "model.json"))
    config = ExtractorConfig(chain=(
        ChainElement("re"),
        ChainElement("wordnet", threshold=0.9,
                     key_phrases=("clothes", "wear")),
    ))
    pipe = Pipeline(model, graph, config,
                    {"re": RegexProvider(), "wordnet": WordnetProvider(graph)})
    predictions = {}
    with open(os.path.join(data_dir, "corpus", "incidents.jsonl")) as fh:
        for line in fh:
            doc = json.loads(line)
            result = pipe.extract_text(doc["id"], doc["text"])
            predictions[doc["id"]] = list(result.properties)
    gold = load_gold(os.path.join(data_dir, "corpus", "gold.jsonl"))

    for mode in MODES:
        report = evaluate_corpus(predictions, gold, mode)
        assert (report.overall.tp, report.overall.fp,
                report.overall.fn) == (31, 2, 0), mode
        assert abs(report.overall.precision - 31 / 33) < 1e-12
        assert report.overall.recall == 1.0
        assert abs(report.overall.f1 - 62 / 64) < 1e-12

    report = evaluate_corpus(predictions, gold, "attr_value")
    assert report.per_property["gender"].tp == 7
    assert report.per_property["race"].tp == 4
    assert report.per_property["shirt"].tp == 3
    assert report.per_property["jean"].tp == 3
    assert report.per_property["word"].fp == 1
    assert report.per_property["chest"].fp == 1
