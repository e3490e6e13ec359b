"""Key-phrase vs sentence similarity providers.

Four interchangeable scorers, all mapping (key phrase, sentence) to a score
in [0, 1]: exact substring match, word-vector cosine, taxonomy Wu-Palmer,
and an external entailment scorer. The non-lexical scorers aggregate over
sentence tokens with max, so one strongly related token is enough to flag a
sentence.
"""

from dataclasses import dataclass

from .embeddings import EmbeddingTable, cosine, mean_vector
from .nli import NliClient
from .text import Sentence
from .wordnet import WordnetGraph, wup_similarity


@dataclass(frozen=True)
class KeyPhrase:
    """A retrieval phrase like "clothes" or "wear"; non-empty after trim."""

    text: str

    def __post_init__(self):
        if not self.text.strip():
            raise ValueError("empty key phrase")


def _phrase_text(q) -> str:
    text = q.text if isinstance(q, KeyPhrase) else str(q)
    if not text.strip():
        raise ValueError("empty key phrase")
    return text


def regex_sim(q, s: Sentence) -> float:
    """1.0 iff the phrase occurs as a substring, case-insensitive.

    Substring (not word-boundary) on purpose: "wear" should hit "wearing".
    """
    return 1.0 if _phrase_text(q).lower() in s.text.lower() else 0.0


def embedding_sim(table: EmbeddingTable, q, s: Sentence) -> float:
    """Max over sentence tokens of cosine(mean phrase vector, token vector).

    Multi-word phrases are embedded as the mean of their in-vocabulary word
    vectors. Out-of-vocabulary tokens are skipped; if the phrase or the
    whole sentence is out of vocabulary the score is 0. Negative cosines
    clamp to 0 so the score stays in [0, 1].
    """
    qv = mean_vector(table, _phrase_text(q).split())
    if qv is None:
        return 0.0
    best = 0.0
    for token in s.tokens:
        tv = table.get(token)
        if tv is None:
            continue
        best = max(best, cosine(qv, tv))
    return best


def wordnet_sim(graph: WordnetGraph, q, s: Sentence) -> float:
    """Max Wu-Palmer between any phrase synset and any token synset.

    The phrase must have at least one noun synset; sentence tokens without
    one are skipped (0 if none qualifies).
    """
    text = _phrase_text(q)
    phrase_synsets = graph.noun_synsets(text)
    if not phrase_synsets:
        raise ValueError("key phrase %r has no noun synset" % text)
    best = 0.0
    for token in s.tokens:
        for token_syn in graph.noun_synsets(token):
            for phrase_syn in phrase_synsets:
                best = max(best, wup_similarity(graph, phrase_syn.id,
                                                token_syn.id))
    return best


def nli_sim(client: NliClient, q, s: Sentence) -> float:
    """Entailment score of the sentence against the templated hypothesis."""
    hypothesis = client.handle.hypothesis(_phrase_text(q))
    return client.score(s.text, hypothesis)


class RegexProvider:
    kind = "re"

    def score(self, q, s: Sentence) -> float:
        return regex_sim(q, s)


class EmbeddingProvider:
    kind = "embedding"

    def __init__(self, table: EmbeddingTable):
        self.table = table

    def score(self, q, s: Sentence) -> float:
        return embedding_sim(self.table, q, s)


class WordnetProvider:
    kind = "wordnet"

    def __init__(self, graph: WordnetGraph):
        self.graph = graph

    def score(self, q, s: Sentence) -> float:
        return wordnet_sim(self.graph, q, s)


class NliProvider:
    kind = "nli"

    def __init__(self, client: NliClient):
        self.client = client

    def score(self, q, s: Sentence) -> float:
        return nli_sim(self.client, q, s)

    def close(self):
        self.client.close()
