"""Property extraction from candidate sentences.

Two layers per sentence. Finite-valued properties (gender, race, height)
come straight from lexicon/regex matches over the raw text. Clothing comes
from a POS-driven scan of the clothes span: walking the tagged tokens, the
scan buffers adjectives as pending descriptor values and participle/adverb
tokens as pending name prefixes; each non-color noun then closes a record
(name assembled from the noun plus contiguous pending prefixes, values from
the buffered descriptors), color nouns divert into the descriptor buffer,
and any token outside the known groups ends the scan. Adjacent nouns merge
into one multi-word name ("tank" + "top" -> "tank top").
"""

import re
from dataclasses import dataclass, field

from . import tagger as tagger_mod
from .candidates import extract_stacked
from .text import (
    ADJECTIVE_TAGS,
    Document,
    NONE_TAG,
    NOUN_TAGS,
    Sentence,
    TagSets,
    make_document,
    tokenize,
)
from .wordnet import WordnetGraph, wup_similarity

FINITE_PROPERTIES = ("gender", "race", "height")

DEFAULT_GENDER_TERMS = (
    "male", "female", "man", "woman", "boy", "girl", "guy", "lady",
    "gentleman", "non-binary",
)

DEFAULT_RACE_TERMS = (
    "white", "black", "asian", "caucasian", "hispanic", "latino", "latina",
    "african american", "native american", "pacific islander",
)

# Race terms that are also everyday color words: only a capitalized surface
# form ("a White male") counts as race, otherwise "black jeans" would yield
# a race record in nearly every clothing sentence.
DEFAULT_CAPITALIZED_RACE_TERMS = ("black", "white")

# Numeric alternative first; a numeric match suppresses the bare descriptors
# ({tall, short}) in the same sentence.
DEFAULT_HEIGHT_PATTERN = (
    r"(?P<exact>\b\d{1,2}\s*(?:feet|foot|ft\.?)"
    r"(?:\s*(?:and\s+)?\d{1,2}\s*(?:inches|inch|in\b\.?))?"
    r"|\b\d{1,2}\s*'\s*\d{1,2}\s*(?:\"|'')?)"
    r"|(?P<desc>\b(?:tall|short)\b)"
)

# Color names the bundled taxonomy lacks (or spelling variants); checked
# before the taxonomy so common shades never become property names.
DEFAULT_COLOR_OVERRIDES = (
    "gray", "grey", "navy", "beige", "maroon", "khaki", "crimson", "scarlet",
    "turquoise", "lavender", "tan", "violet",
)

_WEAR_RE = re.compile(r"\b(?:wearing|wears|wore|wear)\b", re.IGNORECASE)
_LINKING_RE = re.compile(r"\b(?:was|were|is|are|am|had|has|have)\b",
                         re.IGNORECASE)


@dataclass(frozen=True)
class PropertyRecord:
    """One extracted property: a name and zero or more descriptor values."""

    name: str
    values: tuple = ()

    def __post_init__(self):
        if not self.name:
            raise ValueError("empty property name")
        if isinstance(self.values, list):
            object.__setattr__(self, "values", tuple(self.values))

    def to_dict(self):
        return {"name": self.name, "values": list(self.values)}

    @classmethod
    def from_dict(cls, doc):
        return cls(doc["name"], tuple(doc["values"]))


@dataclass(frozen=True)
class Lexicons:
    """Term lists and patterns for the finite-valued properties."""

    gender_terms: tuple = DEFAULT_GENDER_TERMS
    race_terms: tuple = DEFAULT_RACE_TERMS
    capitalized_race_terms: tuple = DEFAULT_CAPITALIZED_RACE_TERMS
    height_pattern: str = DEFAULT_HEIGHT_PATTERN
    color_overrides: tuple = DEFAULT_COLOR_OVERRIDES

    def __post_init__(self):
        for name in ("gender_terms", "race_terms"):
            terms = getattr(self, name)
            if not terms:
                raise ValueError("%s must be non-empty" % name)
            if any(t != t.lower() for t in terms):
                raise ValueError("%s must be lowercase" % name)
            if len(set(terms)) != len(terms):
                raise ValueError("duplicate terms in %s" % name)
        try:
            compiled = re.compile(self.height_pattern, re.IGNORECASE)
        except re.error as exc:
            raise ValueError("bad height pattern: %s" % exc) from None
        if set(compiled.groupindex) != {"exact", "desc"}:
            raise ValueError(
                "height pattern needs the named groups 'exact' and 'desc'")


@dataclass(frozen=True)
class ColorRef:
    """Anchor synset and threshold for the is-this-noun-a-color test."""

    synset_id: str
    threshold: float = 0.75
    overrides: frozenset = frozenset(DEFAULT_COLOR_OVERRIDES)

    def __post_init__(self):
        if not 0.0 < self.threshold <= 1.0:
            raise ValueError("color threshold must be in (0, 1]")

    @classmethod
    def from_graph(cls, graph: WordnetGraph, lemma: str = "color",
                   threshold: float = 0.75, overrides=DEFAULT_COLOR_OVERRIDES):
        synsets = graph.noun_synsets(lemma)
        if not synsets:
            raise ValueError("color reference lemma %r has no noun synset"
                             % lemma)
        return cls(synsets[0].id, threshold, frozenset(overrides))


def _term_spans(text: str, terms, capitalized_only=()):
    """Longest-first, non-overlapping whole-word matches; text order."""
    spans, taken = [], []
    for term in sorted(terms, key=len, reverse=True):
        pattern = re.compile(
            r"\b" + r"\s+".join(re.escape(w) for w in term.split()) + r"\b",
            re.IGNORECASE)
        for m in pattern.finditer(text):
            if term in capitalized_only and not m.group(0)[0].isupper():
                continue
            if any(m.start() < e and s < m.end() for s, e in taken):
                continue
            taken.append((m.start(), m.end()))
            spans.append((m.start(), m.end(), m.group(0)))
    spans.sort()
    return spans


def _height_spans(text: str, pattern: str):
    exact, desc = [], []
    for m in re.compile(pattern, re.IGNORECASE).finditer(text):
        if m.lastgroup == "exact":
            exact.append((m.start(), m.end(), m.group(0)))
        else:
            desc.append((m.start(), m.end(), m.group(0)))
    return exact if exact else desc


def finite_value_spans(text: str, prop: str, lexicons: Lexicons):
    """(start, end, surface) spans for one finite-valued property."""
    if prop == "gender":
        return _term_spans(text, lexicons.gender_terms)
    if prop == "race":
        return _term_spans(text, lexicons.race_terms,
                           lexicons.capitalized_race_terms)
    if prop == "height":
        return _height_spans(text, lexicons.height_pattern)
    raise ValueError("unknown finite property %r" % prop)


def re_prop_values(s: Sentence, prop: str, lexicons: Lexicons = None) -> list:
    """Matched surface forms for a finite-valued property, in text order."""
    lexicons = lexicons or Lexicons()
    return [surface for _s, _e, surface in
            finite_value_spans(s.text, prop, lexicons)]


def clothes_span(s: Sentence, finite_spans=()) -> str:
    """The sentence suffix worth scanning for clothing.

    After a wear keyword when one exists; otherwise after the last
    finite-valued match; otherwise after the first linking/have verb;
    otherwise the whole sentence.
    """
    m = _WEAR_RE.search(s.text)
    if m:
        return s.text[m.end():].strip()
    if finite_spans:
        last_end = max(end for _start, end, _surface in finite_spans)
        return s.text[last_end:].strip()
    m = _LINKING_RE.search(s.text)
    if m:
        return s.text[m.end():].strip()
    return s.text


def match_color(graph: WordnetGraph, color_ref: ColorRef, word: str) -> bool:
    """Is this noun a color term? Taxonomy proximity or explicit override."""
    lower = word.lower()
    if lower in color_ref.overrides:
        return True
    for syn in graph.noun_synsets(lower):
        if wup_similarity(graph, syn.id, color_ref.synset_id) >= color_ref.threshold:
            return True
    return False


def prop_name(tagged, head: int, name_indices, tagsets: TagSets = None) -> str:
    """Property name for the noun at head: the noun plus the contiguous run
    of pending participle/adverb tokens right before it. Determiners and
    conjunctions in the pending list stop the walk and are dropped."""
    tagsets = tagsets or TagSets()
    eligible = set(name_indices)
    parts = [tagged[head].token]
    j = head - 1
    while j in eligible and tagged[j].tag in tagsets.participle_group:
        parts.insert(0, tagged[j].token)
        j -= 1
    return " ".join(parts)


def scan_clothes(tagged, graph: WordnetGraph, color_ref: ColorRef,
                 tagsets: TagSets = None) -> list:
    """POS-driven scan of a tagged clothes span; see the module docstring."""
    tagsets = tagsets or TagSets()
    records = []
    name_indices = []
    descriptors = []
    for i, tt in enumerate(tagged):
        word, tag_ = tt.token, tt.tag
        # a leading was/wearing style relation carries no property content
        if i == 0 and tag_ == "VBD":
            continue
        if i == 1 and tag_ == "VBG" and tagged[0].tag == "VBD":
            continue
        if tag_ in tagsets.determiner_group or tag_ in tagsets.participle_group:
            prev_tag = tagged[i - 1].tag if i > 0 else NONE_TAG
            if tag_ in tagsets.participle_group and prev_tag in tagsets.pronoun_group:
                break
            name_indices.append(i)
        elif tag_ in ADJECTIVE_TAGS:
            name_indices.clear()
            descriptors.append(word)
        elif tag_ in NOUN_TAGS:
            if match_color(graph, color_ref, word):
                descriptors.append(word)
                name_indices.clear()
                continue
            prev = tagged[i - 1] if i > 0 else None
            if (prev is not None and prev.tag in NOUN_TAGS and records
                    and records[-1].name.split()[-1].lower() == prev.token.lower()):
                records[-1] = PropertyRecord(
                    records[-1].name + " " + word, records[-1].values)
            else:
                records.append(PropertyRecord(
                    prop_name(tagged, i, name_indices, tagsets),
                    tuple(descriptors)))
            name_indices.clear()
            descriptors.clear()
        else:
            break
    return records


def extract_sentence_properties(s: Sentence, model, graph: WordnetGraph,
                                lexicons: Lexicons, color_ref: ColorRef,
                                tagsets: TagSets = None) -> list:
    """All property records for one candidate sentence, finite ones first."""
    records = []
    finite_spans = []
    for prop in FINITE_PROPERTIES:
        spans = finite_value_spans(s.text, prop, lexicons)
        if spans:
            records.append(PropertyRecord(
                prop, tuple(surface for _s, _e, surface in spans)))
            finite_spans.extend(spans)
    span_text = clothes_span(s, finite_spans)
    tagged = tagger_mod.tag(model, tokenize(span_text))
    records.extend(scan_clothes(tagged, graph, color_ref, tagsets))
    return records


@dataclass
class DocumentResult:
    """Everything extracted from one document."""

    id: str
    properties: list
    candidates: list
    provider_used: str

    def to_dict(self):
        return {
            "id": self.id,
            "properties": [r.to_dict() for r in self.properties],
            "candidates": list(self.candidates),
            "provider_used": self.provider_used,
        }

    @classmethod
    def from_dict(cls, doc):
        return cls(
            id=doc["id"],
            properties=[PropertyRecord.from_dict(p) for p in doc["properties"]],
            candidates=list(doc.get("candidates", [])),
            provider_used=doc.get("provider_used", ""),
        )


class Pipeline:
    """Retrieval plus per-sentence extraction, wired to loaded resources."""

    def __init__(self, model, graph, extractor_config, providers,
                 lexicons: Lexicons = None, color_ref: ColorRef = None,
                 tagsets: TagSets = None):
        self.model = model
        self.graph = graph
        self.config = extractor_config
        self.providers = providers
        self.lexicons = lexicons or Lexicons()
        self.color_ref = color_ref or ColorRef.from_graph(
            graph, overrides=self.lexicons.color_overrides)
        self.tagsets = tagsets or TagSets()

    def extract(self, doc: Document) -> DocumentResult:
        cand = extract_stacked(doc, self.config, self.providers)
        properties = []
        for s in cand.sentences:
            properties.extend(extract_sentence_properties(
                s, self.model, self.graph, self.lexicons, self.color_ref,
                self.tagsets))
        return DocumentResult(
            id=doc.id,
            properties=properties,
            candidates=[s.index for s in cand.sentences],
            provider_used=cand.provider_used,
        )

    def extract_text(self, doc_id: str, raw: str) -> DocumentResult:
        return self.extract(make_document(doc_id, raw))

    def close(self):
        for provider in self.providers.values():
            close = getattr(provider, "close", None)
            if close is not None:
                close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()
