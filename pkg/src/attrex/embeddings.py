"""Word-vector table: text-format loading and cosine similarity.

The file format is the common plain-text one: a "<vocab> <dim>" header line,
then one "word v1 v2 ... vdim" row per word, whitespace separated, ordered
by frequency so a max_vocab cap keeps the most frequent entries.
"""

import math

import numpy as np


class EmbeddingTable:
    """Loaded vectors; all share one dimension and contain no NaN/Inf."""

    def __init__(self, dimension, vectors):
        self.dimension = dimension
        self._vectors = vectors

    def __len__(self):
        return len(self._vectors)

    def __contains__(self, word):
        return word.lower() in self._vectors

    def get(self, word):
        """Vector for a word (case-folded), or None when out of vocabulary."""
        return self._vectors.get(word.lower())

    def words(self):
        return list(self._vectors)


def load_embeddings(path, max_vocab=None) -> EmbeddingTable:
    """Parse a text-format vector file, keeping at most max_vocab entries."""
    if max_vocab is not None and max_vocab < 1:
        raise ValueError("max_vocab must be >= 1")
    vectors = {}
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().split()
        if len(header) != 2:
            raise ValueError("%s: malformed header line" % path)
        try:
            declared, dim = int(header[0]), int(header[1])
        except ValueError:
            raise ValueError("%s: malformed header line" % path) from None
        if dim < 1:
            raise ValueError("%s: dimension must be >= 1" % path)
        for lineno, line in enumerate(fh, start=2):
            if not line.strip():
                continue
            parts = line.split()
            word, values = parts[0], parts[1:]
            if len(values) != dim:
                raise ValueError(
                    "%s: dimension mismatch at line %d: expected %d values, got %d"
                    % (path, lineno, dim, len(values)))
            try:
                vec = np.array([float(v) for v in values], dtype=np.float64)
            except ValueError:
                raise ValueError(
                    "%s: bad vector value at line %d" % (path, lineno)) from None
            if not np.all(np.isfinite(vec)):
                raise ValueError(
                    "%s: non-finite vector value at line %d" % (path, lineno))
            vectors.setdefault(word.lower(), vec)
            if max_vocab is not None and len(vectors) >= max_vocab:
                break
    if not vectors:
        raise ValueError("%s: no vectors" % path)
    del declared  # frequency files often under/over-count; trust the rows
    return EmbeddingTable(dim, vectors)


def cosine(u, v) -> float:
    """Cosine similarity of two vectors; rejects zero vectors."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if u.shape != v.shape:
        raise ValueError("dimension mismatch: %s vs %s" % (u.shape, v.shape))
    nu, nv = float(np.linalg.norm(u)), float(np.linalg.norm(v))
    if nu == 0.0 or nv == 0.0:
        raise ValueError("cosine of zero vector")
    value = float(np.dot(u, v) / (nu * nv))
    # guard against rounding drifting just past the mathematical range
    return max(-1.0, min(1.0, value))


def mean_vector(table: EmbeddingTable, words) -> "np.ndarray | None":
    """Mean of the in-vocabulary word vectors; None if all are unknown."""
    found = [table.get(w) for w in words if table.get(w) is not None]
    if not found:
        return None
    return np.mean(found, axis=0)
