"""Run configuration: where the resource files live, how retrieval is
chained, and which lexicons apply. Configs are JSON, validated against the
shipped schema; unset resource paths fall back to the data bundled with
the package. Relative paths resolve against the config file's directory."""

import json
import os
from dataclasses import dataclass
from importlib import resources

import jsonschema

from .candidates import ChainElement, ExtractorConfig
from .embeddings import load_embeddings
from .nli import NliClient, NliProviderHandle
from .scan import ColorRef, Lexicons, Pipeline
from .similarity import (
    EmbeddingProvider,
    NliProvider,
    RegexProvider,
    WordnetProvider,
)
from .tagger import load_model
from .wordnet import load_wordnet

ENV_CONFIG = "POSID_CONFIG"


class ConfigError(Exception):
    """Bad or unusable run configuration."""


def data_path(*parts) -> str:
    """Absolute path of a file bundled under the package data directory."""
    return str(resources.files("attrex").joinpath("data", *parts))


def default_config_path() -> str:
    return data_path("config", "default.json")


def load_schema(name: str) -> dict:
    with open(data_path("schemas", name)) as fh:
        return json.load(fh)


@dataclass
class RunConfig:
    """Validated settings with every resource path resolved."""

    wordnet_dir: str
    embeddings_path: str
    tagger_model_path: str
    key_phrases: tuple
    chain: tuple
    lexicons: Lexicons
    color_threshold: float
    output: str
    workers: int
    nli: NliProviderHandle
    source_path: str


def _field_name(path) -> str:
    out = ""
    for part in path:
        if isinstance(part, int):
            out += "[%d]" % part
        else:
            out = out + "." + part if out else part
    return out or "(root)"


def _resolve(path, base):
    if path is None:
        return None
    return path if os.path.isabs(path) else os.path.join(base, path)


def parse_config(doc: dict, path: str) -> RunConfig:
    """Validate a parsed config document and resolve everything in it."""
    schema = load_schema("config.schema.json")
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        raise ConfigError("%s: %s: %s" % (path, _field_name(exc.absolute_path),
                                          exc.message)) from None

    base = os.path.dirname(os.path.abspath(path))
    res = doc.get("resources") or {}
    wordnet_dir = _resolve(res.get("wordnet_dir"), base) or data_path("wordnet")
    embeddings_path = (_resolve(res.get("embeddings"), base)
                       or data_path("embeddings", "mini.vec"))
    tagger_model_path = (_resolve(res.get("tagger_model"), base)
                         or data_path("tagger", "model.json"))

    for field_name, file_path in (
            ("resources.wordnet_dir", os.path.join(wordnet_dir, "data.noun")),
            ("resources.wordnet_dir", os.path.join(wordnet_dir, "index.noun")),
            ("resources.embeddings", embeddings_path),
            ("resources.tagger_model", tagger_model_path)):
        if not os.path.isfile(file_path):
            raise ConfigError("%s: %s: no such file %s"
                              % (path, field_name, file_path))

    try:
        lex_doc = doc.get("lexicons") or {}
        lexicons = Lexicons(**{key: tuple(value) if isinstance(value, list)
                               else value
                               for key, value in lex_doc.items()})
    except ValueError as exc:
        raise ConfigError("%s: lexicons: %s" % (path, exc)) from None

    chain = []
    for i, element in enumerate(doc.get("chain") or
                                [{"provider": "re"},
                                 {"provider": "wordnet", "threshold": 0.9,
                                  "key_phrases": ["clothes", "wear"]}]):
        phrases = element.get("key_phrases")
        try:
            chain.append(ChainElement(
                element["provider"], element.get("threshold"),
                tuple(phrases) if phrases is not None else None))
        except ValueError as exc:
            raise ConfigError("%s: chain[%d]: %s" % (path, i, exc)) from None

    nli_doc = doc.get("nli")
    nli = None
    if nli_doc is not None:
        kwargs = dict(nli_doc)
        if "command" in kwargs:
            kwargs["command"] = tuple(kwargs["command"])
        try:
            nli = NliProviderHandle(**kwargs)
        except ValueError as exc:
            raise ConfigError("%s: nli: %s" % (path, exc)) from None

    color_threshold = doc.get("color_threshold", 0.75)
    output = _resolve(doc.get("output"), base)
    return RunConfig(
        wordnet_dir=wordnet_dir,
        embeddings_path=embeddings_path,
        tagger_model_path=tagger_model_path,
        key_phrases=tuple(doc.get("key_phrases") or
                          ("clothes", "wear", "shirts", "pants")),
        chain=tuple(chain),
        lexicons=lexicons,
        color_threshold=color_threshold,
        output=output,
        workers=doc.get("workers", 1),
        nli=nli,
        source_path=path,
    )


def load_config(path: str = None) -> RunConfig:
    """Read a config file; the POSID_CONFIG env var, then the bundled
    default, stand in when no path is given."""
    if path is None:
        path = os.environ.get(ENV_CONFIG) or default_config_path()
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ConfigError("cannot read config %s: %s"
                          % (path, exc.strerror or exc)) from None
    except json.JSONDecodeError as exc:
        raise ConfigError("%s: invalid JSON: %s" % (path, exc)) from None
    if not isinstance(doc, dict):
        raise ConfigError("%s: (root): config must be a JSON object" % path)
    return parse_config(doc, path)


def build_providers(cfg: RunConfig) -> dict:
    """Construct one provider per kind the chain mentions."""
    providers = {}
    for kind in {element.provider for element in cfg.chain}:
        if kind == "re":
            providers[kind] = RegexProvider()
        elif kind == "embedding":
            try:
                table = load_embeddings(cfg.embeddings_path)
            except ValueError as exc:
                raise ConfigError("resources.embeddings: %s" % exc) from None
            providers[kind] = EmbeddingProvider(table)
        elif kind == "wordnet":
            providers[kind] = WordnetProvider(_load_graph(cfg))
        elif kind == "nli":
            if cfg.nli is None:
                raise ConfigError(
                    "chain: provider 'nli' requires the nli section")
            providers[kind] = NliProvider(NliClient(cfg.nli))
    return providers


def _load_graph(cfg: RunConfig):
    try:
        return load_wordnet(cfg.wordnet_dir)
    except ValueError as exc:
        raise ConfigError("resources.wordnet_dir: %s" % exc) from None


def build_pipeline(cfg: RunConfig) -> Pipeline:
    """Load every resource the config references and wire the pipeline."""
    providers = build_providers(cfg)
    if "wordnet" in providers:
        graph = providers["wordnet"].graph
    else:
        graph = _load_graph(cfg)
    try:
        model = load_model(cfg.tagger_model_path)
    except ValueError as exc:
        raise ConfigError("resources.tagger_model: %s" % exc) from None
    extractor = ExtractorConfig(key_phrases=cfg.key_phrases, chain=cfg.chain)
    color_ref = ColorRef.from_graph(
        graph, threshold=cfg.color_threshold,
        overrides=cfg.lexicons.color_overrides)
    return Pipeline(model, graph, extractor, providers,
                    lexicons=cfg.lexicons, color_ref=color_ref)
