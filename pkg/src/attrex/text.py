"""Sentence segmentation, tokenization and the POS tag vocabulary.

Everything downstream (tagger, similarity scoring, the property scan) works on
the Sentence/TaggedToken types defined here, so the exact token-level behavior
of tokenize() is load-bearing: trailing punctuation becomes its own token,
hyphenated words and apostrophes stay intact, and quoted words keep their
quotes.
"""

import re
from dataclasses import dataclass, field

# Penn Treebank tagset plus the punctuation tags emitted by the tokenizer.
PTB_TAGS = frozenset([
    "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD",
    "NN", "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR",
    "RBS", "RP", "SYM", "TO", "UH", "VB", "VBD", "VBG", "VBN", "VBP",
    "VBZ", "WDT", "WP", "WP$", "WRB",
    ".", ",", ":", "(", ")", "``", "''", "$", "#",
])

# Pseudo-tag for "no previous token" at the start of a scan window.
NONE_TAG = "NONE"

ADJECTIVE_TAGS = frozenset(["JJ", "JJR", "JJS"])
NOUN_TAGS = frozenset(["NN", "NNS", "NNP", "NNPS"])
VERB_TAGS = frozenset(["VB", "VBD", "VBG", "VBN", "VBP", "VBZ"])

# Abbreviations whose trailing period never ends a sentence.
ABBREVIATIONS = frozenset([
    "st.", "ave.", "mr.", "dr.", "ms.", "jr.", "sr.",
])

_TERMINAL_RE = re.compile(r"[.!?]+(?=\s|$)")
_PEELABLE = ".!?,"
_ORDINAL_RE = re.compile(r"\d+[.!?]+")


@dataclass(frozen=True)
class TaggedToken:
    """A surface token with its Penn Treebank tag."""

    token: str
    tag: str

    def __post_init__(self):
        if not self.token:
            raise ValueError("empty token")
        if self.tag != NONE_TAG and self.tag not in PTB_TAGS:
            raise ValueError("unknown tag %r for token %r" % (self.tag, self.token))


@dataclass(frozen=True)
class Sentence:
    """One sentence of a document: ordinal position, raw text, tokens."""

    index: int
    text: str
    tokens: tuple = ()

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("sentence index must be >= 0")
        if not self.text.strip():
            raise ValueError("empty sentence text")


@dataclass(frozen=True)
class Document:
    """An input document split into sentences."""

    id: str
    raw: str
    sentences: tuple = ()

    def __post_init__(self):
        for expected, sent in enumerate(self.sentences):
            if sent.index != expected:
                raise ValueError(
                    "sentence indices must be contiguous from 0, got %d at position %d"
                    % (sent.index, expected)
                )


@dataclass(frozen=True)
class TagSets:
    """Tag groups steering the property scan.

    determiner_group stops the backward name walk but keeps the scan alive;
    participle_group tokens become part of a property name; pronoun_group
    (plus the NONE pseudo-tag for "no previous token") ends a scan when it
    precedes a participle_group token; verb_group covers the leading
    was/wearing relation tokens skipped at the start of a span.
    """

    determiner_group: frozenset = frozenset(["DT", "CC", "IN", ","])
    participle_group: frozenset = frozenset(["VBN", "VBG", "RB"]) | VERB_TAGS
    pronoun_group: frozenset = frozenset(["PRP", "PRP$", NONE_TAG])
    verb_group: frozenset = frozenset(["VBD", "VBG", "VBZ"])

    def __post_init__(self):
        known = PTB_TAGS | {NONE_TAG}
        for name in ("determiner_group", "participle_group", "pronoun_group", "verb_group"):
            bad = set(getattr(self, name)) - known
            if bad:
                raise ValueError("unknown tags in %s: %s" % (name, sorted(bad)))


def tokenize(text: str) -> list:
    """Split text into tokens on whitespace, peeling trailing punctuation.

    Sentence-final punctuation and commas become separate tokens ("jeans." ->
    ["jeans", "."]); hyphenated words ("non-binary") and apostrophes
    ("individual's") are kept whole; quoted words keep their quotes.
    """
    tokens = []
    for chunk in text.split():
        tail = []
        while len(chunk) > 1 and chunk[-1] in _PEELABLE:
            tail.append(chunk[-1])
            chunk = chunk[:-1]
        if chunk:
            tokens.append(chunk)
        tokens.extend(reversed(tail))
    return tokens


def _chunk_before(raw: str, end: int) -> str:
    """Whitespace-delimited chunk ending at position end."""
    start = end
    while start > 0 and not raw[start - 1].isspace():
        start -= 1
    return raw[start:end]


def split_sentences(raw: str) -> list:
    """Split raw text into Sentences on sentence-final punctuation.

    A run of [.!?] followed by whitespace (or end of text) ends a sentence,
    unless it closes a known abbreviation (St., Ave., Mr., Dr., Ms., Jr., Sr.)
    or an ordinal number ("lived at 12. Elm" does not split... it does not
    come up often, but a bare "12." never ends a sentence here).
    """
    sentences = []
    start = 0

    def push(text: str):
        text = text.strip()
        if text:
            sentences.append(Sentence(len(sentences), text, tuple(tokenize(text))))

    for match in _TERMINAL_RE.finditer(raw):
        end = match.end()
        chunk = _chunk_before(raw, end)
        if chunk.lower() in ABBREVIATIONS or _ORDINAL_RE.fullmatch(chunk):
            continue
        push(raw[start:end])
        start = end
    push(raw[start:])
    return sentences


def make_document(doc_id: str, raw: str) -> Document:
    """Build a Document with sentences split and tokenized."""
    return Document(doc_id, raw, tuple(split_sentences(raw)))
