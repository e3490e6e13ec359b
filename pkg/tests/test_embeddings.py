"""Vector table loader and cosine tests."""

import math
import os
import random

import numpy as np
import pytest

from attrex.embeddings import EmbeddingTable, cosine, load_embeddings, mean_vector

VEC_PATH = os.path.join(
    os.path.dirname(__file__), os.pardir, "src", "attrex", "data",
    "embeddings", "mini.vec")


def pure_python_cosine(u, v):
    """Independent reference: no numpy."""
    dot = sum(a * b for a, b in zip(u, v))
    nu = math.sqrt(sum(a * a for a in u))
    nv = math.sqrt(sum(b * b for b in v))
    return dot / (nu * nv)


@pytest.fixture(scope="module")
def table():
    return load_embeddings(VEC_PATH)


def test_bundled_table_loads(table):
    assert table.dimension == 16
    assert len(table) == 157
    assert "wearing" in table
    assert "Wearing" in table  # case-folded lookups
    assert table.get("zzz-not-a-word") is None


def test_cosine_matches_pure_python(table):
    rng = random.Random(3)
    words = table.words()
    for _ in range(200):
        a, b = rng.choice(words), rng.choice(words)
        got = cosine(table.get(a), table.get(b))
        want = pure_python_cosine(table.get(a), table.get(b))
        assert got == pytest.approx(want, abs=1e-12)


def test_cosine_bounds_and_errors():
    assert cosine([1.0, 0.0], [1.0, 0.0]) == pytest.approx(1.0)
    assert cosine([1.0, 0.0], [-1.0, 0.0]) == pytest.approx(-1.0)
    assert cosine([1.0, 0.0], [0.0, 1.0]) == pytest.approx(0.0)
    with pytest.raises(ValueError, match="zero vector"):
        cosine([0.0, 0.0], [1.0, 0.0])
    with pytest.raises(ValueError, match="dimension mismatch"):
        cosine([1.0], [1.0, 2.0])


def test_related_words_score_high(table):
    # the bundled vectors put morphological relatives in one group
    assert cosine(table.get("wear"), table.get("wearing")) > 0.5
    assert cosine(table.get("clothes"), table.get("shirt")) > 0.5
    assert cosine(table.get("wear"), table.get("dog")) < 0.5


def test_mean_vector(table):
    single = mean_vector(table, ["wear"])
    assert np.allclose(single, table.get("wear"))
    avg = mean_vector(table, ["tank", "top"])
    assert np.allclose(avg, (table.get("tank") + table.get("top")) / 2)
    mixed = mean_vector(table, ["tank", "zzz-not-a-word"])
    assert np.allclose(mixed, table.get("tank"))
    assert mean_vector(table, ["zzz-not-a-word"]) is None
    assert mean_vector(table, []) is None


def _write_vec(tmp_path, body):
    path = tmp_path / "v.vec"
    path.write_text(body)
    return path


def test_load_small_file(tmp_path):
    path = _write_vec(tmp_path, "3 4\nred 1 0 0 0\nblue 0 1 0 0\ncat 0 0 1 0\n")
    t = load_embeddings(path)
    assert len(t) == 3 and t.dimension == 4
    assert cosine(t.get("red"), t.get("blue")) == pytest.approx(0.0)


def test_load_max_vocab_keeps_first(tmp_path):
    path = _write_vec(tmp_path, "3 2\nred 1 0\nblue 0 1\ncat 1 1\n")
    t = load_embeddings(path, max_vocab=2)
    assert sorted(t.words()) == ["blue", "red"]
    with pytest.raises(ValueError, match="max_vocab"):
        load_embeddings(path, max_vocab=0)


def test_load_duplicate_keeps_first(tmp_path):
    path = _write_vec(tmp_path, "2 2\nred 1 0\nred 0 1\n")
    t = load_embeddings(path)
    assert list(t.get("red")) == [1.0, 0.0]


def test_load_errors(tmp_path):
    with pytest.raises(ValueError, match="malformed header"):
        load_embeddings(_write_vec(tmp_path, "what\nred 1 0\n"))
    with pytest.raises(ValueError, match="dimension mismatch at line 2"):
        load_embeddings(_write_vec(tmp_path, "1 3\nred 1 0\n"))
    with pytest.raises(ValueError, match="bad vector value at line 3"):
        load_embeddings(_write_vec(tmp_path, "2 2\nred 1 0\nblue x y\n"))
    with pytest.raises(ValueError, match="non-finite"):
        load_embeddings(_write_vec(tmp_path, "1 2\nred nan 0\n"))
    with pytest.raises(ValueError, match="no vectors"):
        load_embeddings(_write_vec(tmp_path, "0 2\n"))
