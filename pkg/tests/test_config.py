"""Tests for config loading: defaults, env fallback, schema validation
errors that name the offending field, and resource resolution."""

import json
import os

import pytest

from attrex.config import (
    ConfigError,
    ENV_CONFIG,
    build_pipeline,
    build_providers,
    data_path,
    default_config_path,
    load_config,
    parse_config,
)
from attrex.scan import Pipeline


def write_config(tmp_path, doc, name="config.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_bundled_default_config():
    cfg = load_config()
    assert cfg.source_path == default_config_path()
    assert [e.provider for e in cfg.chain] == ["re", "wordnet"]
    assert cfg.chain[1].threshold == 0.9
    assert cfg.chain[1].key_phrases == ("clothes", "wear")
    assert cfg.key_phrases == ("clothes", "wear", "shirts", "pants")
    assert cfg.workers == 1
    assert cfg.nli is None
    assert cfg.output is None
    for path in (cfg.embeddings_path, cfg.tagger_model_path):
        assert os.path.isfile(path)
    assert os.path.isfile(os.path.join(cfg.wordnet_dir, "data.noun"))


def test_env_var_fallback(tmp_path, monkeypatch):
    path = write_config(tmp_path, {"workers": 3})
    monkeypatch.setenv(ENV_CONFIG, path)
    assert load_config().workers == 3
    # an explicit path still wins over the environment
    other = write_config(tmp_path, {"workers": 7}, name="other.json")
    assert load_config(other).workers == 7


def test_unreadable_and_invalid_config(tmp_path):
    with pytest.raises(ConfigError, match="cannot read config"):
        load_config(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    with pytest.raises(ConfigError, match="invalid JSON"):
        load_config(str(bad))
    root = tmp_path / "root.json"
    root.write_text("[]")
    with pytest.raises(ConfigError, match="must be a JSON object"):
        load_config(str(root))


def test_schema_errors_name_the_field(tmp_path):
    cases = [
        ({"workers": 0}, "workers"),
        ({"chain": [{"provider": "sbert"}]}, r"chain\[0\].provider"),
        ({"color_threshold": 1.5}, "color_threshold"),
        ({"lexicons": {"gender_terms": []}}, "lexicons.gender_terms"),
        ({"chain": []}, "chain"),
    ]
    for doc, field in cases:
        path = write_config(tmp_path, doc)
        with pytest.raises(ConfigError, match=field):
            load_config(path)


def test_unknown_top_level_key(tmp_path):
    path = write_config(tmp_path, {"sberts": True})
    with pytest.raises(ConfigError, match="sberts"):
        load_config(path)


def test_semantic_errors_past_the_schema(tmp_path):
    path = write_config(tmp_path, {"lexicons": {"race_terms": ["Asian"]}})
    with pytest.raises(ConfigError, match="lexicons: .*lowercase"):
        load_config(path)
    path = write_config(tmp_path,
                        {"chain": [{"provider": "re", "threshold": 0.5}]})
    with pytest.raises(ConfigError, match=r"chain\[0\]: .*no threshold"):
        load_config(path)


def test_missing_resource_files(tmp_path):
    path = write_config(tmp_path, {"resources": {"embeddings": "missing.vec"}})
    with pytest.raises(ConfigError, match="resources.embeddings: no such file"):
        load_config(path)
    path = write_config(tmp_path, {"resources": {"wordnet_dir": "wn"}})
    with pytest.raises(ConfigError,
                       match="resources.wordnet_dir: no such file"):
        load_config(path)


def test_relative_paths_resolve_against_config_dir(tmp_path):
    vec = tmp_path / "tiny.vec"
    vec.write_text("1 2\nword 0.5 0.5\n")
    cfg = load_config(write_config(tmp_path,
                                   {"resources": {"embeddings": "tiny.vec"}}))
    assert cfg.embeddings_path == str(vec)
    # bundled defaults still in place for the rest
    assert cfg.wordnet_dir == data_path("wordnet")


def test_nli_section(tmp_path):
    doc = {"nli": {"transport": "subprocess-stdio",
                   "command": ["python3", "scorer.py"],
                   "timeout": 2.5}}
    cfg = load_config(write_config(tmp_path, doc))
    assert cfg.nli.command == ("python3", "scorer.py")
    assert cfg.nli.timeout == 2.5
    bad = {"nli": {"transport": "subprocess-stdio",
                   "command": ["x"],
                   "hypothesis_template": "no placeholder"}}
    with pytest.raises(ConfigError, match="nli: .*placeholder"):
        load_config(write_config(tmp_path, bad))


def test_parse_config_output_and_workers(tmp_path):
    doc = {"output": "out/results.jsonl", "workers": 4}
    cfg = parse_config(doc, str(tmp_path / "cfg.json"))
    assert cfg.output == str(tmp_path / "out" / "results.jsonl")
    assert cfg.workers == 4


def test_build_providers_default():
    providers = build_providers(load_config())
    assert set(providers) == {"re", "wordnet"}


def test_nli_chain_requires_section(tmp_path):
    path = write_config(tmp_path, {"chain": [{"provider": "nli"}]})
    with pytest.raises(ConfigError, match="requires the nli section"):
        build_providers(load_config(path))


def test_build_pipeline_roundtrip():
    pipeline = build_pipeline(load_config())
    assert isinstance(pipeline, Pipeline)
    result = pipeline.extract_text(
        "d", "The man was wearing a white coat and blue jeans.")
    assert [r.name for r in result.properties] == ["gender", "coat", "jeans"]


def test_build_pipeline_bad_wordnet_dir(tmp_path):
    wn = tmp_path / "wn"
    wn.mkdir()
    (wn / "data.noun").write_text("garbage\n")
    (wn / "index.noun").write_text("garbage\n")
    path = write_config(tmp_path, {"resources": {"wordnet_dir": "wn"}})
    with pytest.raises(ConfigError, match="resources.wordnet_dir"):
        build_pipeline(load_config(path))
