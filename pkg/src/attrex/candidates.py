"""Candidate sentence retrieval.

A document rarely devotes every sentence to appearance; retrieval picks the
sentences worth scanning. The lexical pass keeps sentences where some key
phrase occurs verbatim; semantic passes keep sentences whose best
phrase/sentence similarity clears a threshold (strictly greater). Stacked
retrieval runs a provider chain in order and stops at the first provider
that returns anything, so cheap exact matching handles the common case and
semantic fallbacks only fire on documents it misses.
"""

from dataclasses import dataclass, field

from .similarity import regex_sim
from .text import Document

DEFAULT_KEY_PHRASES = ("clothes", "wear", "shirts", "pants")

DEFAULT_THRESHOLDS = {"embedding": 0.5, "wordnet": 0.9, "nli": 0.85}


@dataclass(frozen=True)
class ChainElement:
    """One retrieval pass: provider kind, threshold, optional phrase set."""

    provider: str
    threshold: float = None
    key_phrases: tuple = None

    def __post_init__(self):
        if self.provider not in ("re", "embedding", "wordnet", "nli"):
            raise ValueError("unknown provider kind %r" % self.provider)
        if self.provider == "re":
            if self.threshold is not None:
                raise ValueError("the re provider takes no threshold")
        else:
            threshold = self.threshold
            if threshold is None:
                threshold = DEFAULT_THRESHOLDS[self.provider]
                object.__setattr__(self, "threshold", threshold)
            if not 0.0 < threshold <= 1.0:
                raise ValueError(
                    "threshold for %r must be in (0, 1], got %r"
                    % (self.provider, threshold))
        if self.key_phrases is not None and not self.key_phrases:
            raise ValueError("key_phrases override must be non-empty")


@dataclass(frozen=True)
class ExtractorConfig:
    """Key phrases plus the retrieval chain to run over each document."""

    key_phrases: tuple = DEFAULT_KEY_PHRASES
    chain: tuple = (ChainElement("re"), ChainElement("nli", 0.85))

    def __post_init__(self):
        if not self.key_phrases:
            raise ValueError("key_phrases must be non-empty")
        if not self.chain:
            raise ValueError("chain must be non-empty")


@dataclass(frozen=True)
class CandidateSet:
    """Retrieved sentences (document order) and the provider that found them."""

    sentences: tuple
    provider_used: str


def extract_re(doc: Document, key_phrases) -> CandidateSet:
    """Sentences where any key phrase occurs as a case-insensitive substring."""
    kept = tuple(s for s in doc.sentences
                 if any(regex_sim(q, s) == 1.0 for q in key_phrases))
    return CandidateSet(kept, "re")


def extract_semantic(doc: Document, key_phrases, provider,
                     threshold: float) -> CandidateSet:
    """Sentences whose best key-phrase score strictly exceeds threshold."""
    kept = []
    for s in doc.sentences:
        best = max(provider.score(q, s) for q in key_phrases)
        if best > threshold:
            kept.append(s)
    return CandidateSet(tuple(kept), provider.kind)


def extract_stacked(doc: Document, config: ExtractorConfig,
                    providers) -> CandidateSet:
    """Run the chain in order; first non-empty result wins.

    providers maps provider kind to a provider instance; every kind named in
    the chain must be present. When every pass comes back empty the result
    is an empty set attributed to the last provider tried.
    """
    for element in config.chain:
        if element.provider != "re" and element.provider not in providers:
            raise ValueError(
                "chain names provider %r but none is configured"
                % element.provider)
    result = CandidateSet((), config.chain[-1].provider)
    for element in config.chain:
        phrases = element.key_phrases or config.key_phrases
        if element.provider == "re":
            result = extract_re(doc, phrases)
        else:
            result = extract_semantic(doc, phrases,
                                      providers[element.provider],
                                      element.threshold)
        if result.sentences:
            return result
    return CandidateSet((), config.chain[-1].provider)
