"""Command-line surface.

Subcommands: extract (corpus -> JSONL results), evaluate (results vs gold
-> metrics), tag and score (debug views of the tagger and the similarity
providers), and train-tagger (rebuild a model file from a corpus).

Exit codes: 0 success, 1 unreadable/invalid data, 2 configuration or
resource problems.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .candidates import ChainElement
from .config import ConfigError, build_pipeline, build_providers, load_config
from .metrics import MODES, evaluate_corpus, load_gold, load_predictions
from .report import format_table, render_metrics_figure, write_metrics_csv
from .tagger import TaggedCorpus, accuracy, load_corpus, load_model, \
    save_model, tag, train
from .text import make_document, tokenize


def read_documents(path: str) -> list:
    """Input corpus: one {"id": ..., "text": ...} object per line."""
    docs = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                doc = json.loads(line)
                doc_id, text = doc["id"], doc["text"]
            except (json.JSONDecodeError, KeyError, TypeError):
                raise ValueError("%s: input parse error at line %d"
                                 % (path, lineno)) from None
            if not isinstance(doc_id, str) or not doc_id:
                raise ValueError("%s: bad document id at line %d"
                                 % (path, lineno))
            if not isinstance(text, str):
                raise ValueError("%s: bad document text at line %d"
                                 % (path, lineno))
            docs.append((doc_id, text))
    return docs


def parse_chain_specs(specs) -> tuple:
    """--provider-chain elements look like "re" or "wordnet:0.85"."""
    chain = []
    for spec in specs:
        kind, sep, raw = spec.partition(":")
        threshold = None
        if sep:
            try:
                threshold = float(raw)
            except ValueError:
                raise ConfigError("provider-chain: bad threshold %r in %r"
                                  % (raw, spec)) from None
        try:
            chain.append(ChainElement(kind, threshold))
        except ValueError as exc:
            raise ConfigError("provider-chain: %s" % exc) from None
    return tuple(chain)


def cmd_extract(args) -> int:
    cfg = load_config(args.config)
    if args.workers is not None:
        cfg.workers = args.workers
    if args.provider_chain:
        cfg.chain = parse_chain_specs(args.provider_chain)

    docs = []
    for path in args.inputs:
        docs.extend(read_documents(path))

    pipeline = build_pipeline(cfg)
    with pipeline:
        if cfg.workers > 1:
            with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
                results = list(pool.map(
                    lambda d: pipeline.extract_text(*d), docs))
        else:
            results = [pipeline.extract_text(*d) for d in docs]

    lines = [json.dumps(r.to_dict(), ensure_ascii=False) for r in results]
    out_path = args.output or cfg.output
    if out_path:
        with open(out_path, "w") as fh:
            fh.write("\n".join(lines) + ("\n" if lines else ""))
    else:
        for line in lines:
            print(line)
    return 0


def cmd_evaluate(args) -> int:
    predictions = load_predictions(args.predictions)
    gold = load_gold(args.gold)
    reports = [evaluate_corpus(predictions, gold, mode) for mode in MODES]

    if args.format in ("json", "both"):
        payload = {report.mode: report.to_dict() for report in reports}
        print(json.dumps(payload, indent=2))
    if args.format in ("table", "both"):
        for report in reports:
            print(format_table(report))
            print()
    if args.report_dir:
        os.makedirs(args.report_dir, exist_ok=True)
        csv_path = os.path.join(args.report_dir, "metrics.csv")
        png_path = os.path.join(args.report_dir, "metrics.png")
        write_metrics_csv(reports, csv_path)
        render_metrics_figure(reports, png_path)
        print("wrote %s and %s" % (csv_path, png_path), file=sys.stderr)
    return 0


def cmd_tag(args) -> int:
    model_path = args.model
    if model_path is None:
        model_path = load_config(args.config).tagger_model_path
    try:
        model = load_model(model_path)
    except (OSError, ValueError) as exc:
        raise ConfigError("tagger model: %s" % exc) from None
    tagged = tag(model, tokenize(args.text))
    print(json.dumps([{"token": t.token, "tag": t.tag} for t in tagged],
                     ensure_ascii=False))
    return 0


def cmd_score(args) -> int:
    cfg = load_config(args.config)
    providers = build_providers(cfg)
    doc = make_document("score", args.sentence)
    if not doc.sentences:
        raise ValueError("empty sentence")
    sentence = doc.sentences[0]
    scores = {}
    try:
        for element in cfg.chain:
            scores[element.provider] = providers[element.provider].score(
                args.key_phrase, sentence)
    finally:
        for provider in providers.values():
            close = getattr(provider, "close", None)
            if close is not None:
                close()
    print(json.dumps({"key_phrase": args.key_phrase,
                      "sentence": sentence.text,
                      "scores": scores}, ensure_ascii=False))
    return 0


def cmd_train_tagger(args) -> int:
    corpus = load_corpus(args.corpus)
    sentences = corpus.sentences
    holdout = args.holdout
    if holdout >= len(sentences):
        raise ValueError("holdout %d leaves no training sentences" % holdout)
    if holdout:
        train_part = TaggedCorpus(sentences[:-holdout])
        eval_part = TaggedCorpus(sentences[-holdout:])
    else:
        train_part = corpus
        eval_part = corpus
    model = train(train_part, epochs=args.epochs, seed=args.seed)
    save_model(model, args.output)
    acc = accuracy(model, eval_part)
    kind = "held-out" if holdout else "training"
    print("wrote %s; %s accuracy %.4f over %d sentences"
          % (args.output, kind, acc, len(eval_part.sentences)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="attrex",
        description="Extract structured appearance properties from "
                    "incident-report text.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extract", help="run the pipeline over JSONL corpora")
    p.add_argument("inputs", nargs="+", metavar="CORPUS",
                   help="JSONL files with one {id, text} object per line")
    p.add_argument("--config", default=None, help="config file path")
    p.add_argument("--output", default=None,
                   help="result path (default: config output or stdout)")
    p.add_argument("--workers", type=int, default=None,
                   help="parallel document workers")
    p.add_argument("--provider-chain", nargs="+", default=None,
                   metavar="KIND[:THRESHOLD]",
                   help="override the retrieval chain, e.g. re wordnet:0.9")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("evaluate", help="score predictions against gold")
    p.add_argument("predictions", help="extract output (JSONL)")
    p.add_argument("gold", help="gold annotations (JSONL)")
    p.add_argument("--format", choices=("json", "table", "both"),
                   default="both")
    p.add_argument("--report-dir", default=None,
                   help="also write metrics.csv and metrics.png here")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("tag", help="print tagger output for a text")
    p.add_argument("text")
    p.add_argument("--model", default=None, help="tagger model path")
    p.add_argument("--config", default=None)
    p.set_defaults(func=cmd_tag)

    p = sub.add_parser("score", help="similarity of a key phrase to a sentence")
    p.add_argument("key_phrase")
    p.add_argument("sentence")
    p.add_argument("--config", default=None)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("train-tagger", help="train a tagger model from a corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--epochs", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--holdout", type=int, default=0,
                   help="evaluate on the last N sentences instead of training"
                        " on them")
    p.set_defaults(func=cmd_train_tagger)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print("config error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        name = getattr(exc, "filename", None)
        print("error: %s%s" % (exc.strerror or exc,
                               ": %s" % name if name else ""),
              file=sys.stderr)
        return 1
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


def entrypoint():
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
