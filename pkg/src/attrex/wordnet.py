"""Noun taxonomy access: WNDB-format parsing and Wu-Palmer similarity.

Reads the standard WordNet database file layout (data.noun + index.noun,
license header lines starting with two spaces, 8-digit byte offsets as synset
keys) and exposes synsets under nltk-style ids like "dog.n.01". Only the noun
files are read; hypernym pointers ("@" and "@i") are the only pointer types
the graph keeps.
"""

import os
from dataclasses import dataclass

_HYPERNYM_SYMBOLS = ("@", "@i")


@dataclass(frozen=True)
class Synset:
    """One noun synset: id, member lemmas and hypernym links."""

    id: str
    offset: int
    pos: str
    lemmas: tuple
    hypernyms: tuple
    gloss: str = ""


class WordnetGraph:
    """Parsed noun taxonomy with depth bookkeeping.

    Depth counts nodes on the longest hypernym path up to a root, so a root
    synset has depth 1. The hypernym relation must be acyclic and every
    synset must reach a root; load_wordnet validates both.
    """

    def __init__(self, synsets, lemma_index):
        self._synsets = {s.id: s for s in synsets}
        self._lemma_index = dict(lemma_index)
        self._depths = {}
        self._check_acyclic()

    def __len__(self):
        return len(self._synsets)

    def __contains__(self, synset_id):
        return synset_id in self._synsets

    def synset(self, synset_id: str) -> Synset:
        try:
            return self._synsets[synset_id]
        except KeyError:
            raise ValueError("unknown synset id %r" % synset_id) from None

    def synset_ids(self):
        return list(self._synsets)

    def noun_synsets(self, lemma: str) -> list:
        """Synsets for a lemma in sense order; [] when the lemma is absent."""
        key = (lemma.lower().replace(" ", "_"), "n")
        return [self._synsets[sid] for sid in self._lemma_index.get(key, ())]

    def roots(self):
        return [sid for sid, s in self._synsets.items() if not s.hypernyms]

    def depth(self, synset_id: str) -> int:
        """Longest root-to-synset path length, counted in nodes."""
        if synset_id not in self._depths:
            syn = self.synset(synset_id)
            if not syn.hypernyms:
                self._depths[synset_id] = 1
            else:
                self._depths[synset_id] = 1 + max(
                    self.depth(h) for h in syn.hypernyms)
        return self._depths[synset_id]

    def ancestors(self, synset_id: str) -> set:
        """All synset ids reachable via hypernym links, including the start."""
        seen = {synset_id}
        stack = [self.synset(synset_id)]
        while stack:
            for hid in stack.pop().hypernyms:
                if hid not in seen:
                    seen.add(hid)
                    stack.append(self.synset(hid))
        return seen

    def _check_acyclic(self):
        done = set()
        for start in self._synsets:
            if start in done:
                continue
            path, stack = set(), [(start, 0)]
            while stack:
                sid, pi = stack.pop()
                if pi == 0:
                    if sid in path:
                        raise ValueError(
                            "cyclic noun hypernym chain through %r" % sid)
                    path.add(sid)
                hyps = self._synsets[sid].hypernyms
                if pi < len(hyps):
                    stack.append((sid, pi + 1))
                    nxt = hyps[pi]
                    if nxt not in done:
                        stack.append((nxt, 0))
                else:
                    path.discard(sid)
                    done.add(sid)


def wup_similarity(graph: WordnetGraph, a: str, b: str) -> float:
    """Wu-Palmer similarity 2*depth(lcs) / (depth(a) + depth(b)).

    The least common subsumer is the shared ancestor maximizing the score.
    Synsets under different roots fall back to a virtual root one level above
    all real roots (depth 1, shifting both synset depths by one), so the
    result is always positive.
    """
    graph.synset(a), graph.synset(b)
    common = graph.ancestors(a) & graph.ancestors(b)
    if common:
        lcs_depth = max(graph.depth(c) for c in common)
        return 2.0 * lcs_depth / (graph.depth(a) + graph.depth(b))
    return 2.0 / (graph.depth(a) + graph.depth(b) + 2)


def _data_lines(path):
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if line.startswith(" ") or not line.strip():
                continue
            yield lineno, line.rstrip("\n")


def _parse_data_line(path, lineno, line):
    head, sep, gloss = line.partition(" | ")
    fields = head.split()
    try:
        offset = int(fields[0])
        ss_type = fields[2]
        w_cnt = int(fields[3], 16)
        words = [fields[4 + 2 * k] for k in range(w_cnt)]
        ptr_at = 4 + 2 * w_cnt
        p_cnt = int(fields[ptr_at])
        ptr_fields = fields[ptr_at + 1:]
        if len(ptr_fields) != 4 * p_cnt or w_cnt < 1:
            raise IndexError
        hypernyms = []
        for k in range(p_cnt):
            symbol, target, pos, _src = ptr_fields[4 * k:4 * k + 4]
            if symbol in _HYPERNYM_SYMBOLS and pos == "n":
                hypernyms.append(int(target))
    except (IndexError, ValueError):
        raise ValueError("%s: data parse error at line %d" % (path, lineno)) from None
    return offset, ss_type, words, hypernyms, gloss.strip()


def _parse_index_line(path, lineno, line):
    fields = line.split()
    try:
        lemma, pos = fields[0], fields[1]
        synset_cnt = int(fields[2])
        p_cnt = int(fields[3])
        at = 4 + p_cnt + 2  # skip pointer symbols, sense_cnt, tagsense_cnt
        offsets = [int(f) for f in fields[at:at + synset_cnt]]
        if len(offsets) != synset_cnt:
            raise IndexError
    except (IndexError, ValueError):
        raise ValueError("%s: index parse error at line %d" % (path, lineno)) from None
    return lemma, pos, offsets


def load_wordnet(directory) -> WordnetGraph:
    """Parse data.noun + index.noun under directory into a WordnetGraph."""
    data_path = os.path.join(os.fspath(directory), "data.noun")
    index_path = os.path.join(os.fspath(directory), "index.noun")
    for path in (data_path, index_path):
        if not os.path.isfile(path):
            raise FileNotFoundError("missing wordnet file: %s" % path)

    raw = {}
    for lineno, line in _data_lines(data_path):
        offset, ss_type, words, hypernyms, gloss = _parse_data_line(
            data_path, lineno, line)
        if ss_type != "n":
            raise ValueError(
                "%s: data parse error at line %d" % (data_path, lineno))
        if offset in raw:
            raise ValueError(
                "%s: duplicate synset offset %08d at line %d"
                % (data_path, offset, lineno))
        raw[offset] = (words, hypernyms, gloss)

    senses = {}
    for lineno, line in _data_lines(index_path):
        lemma, pos, offsets = _parse_index_line(index_path, lineno, line)
        if pos != "n":
            continue
        for off in offsets:
            if off not in raw:
                raise ValueError(
                    "%s: index entry %r references missing synset %08d"
                    % (index_path, lemma, off))
        senses[lemma.lower()] = offsets

    ids = {}
    for offset, (words, _hyp, _gloss) in raw.items():
        first = words[0].lower()
        if first not in senses or offset not in senses[first]:
            raise ValueError(
                "synset %08d: first lemma %r has no matching index entry"
                % (offset, first))
        ids[offset] = "%s.n.%02d" % (first, senses[first].index(offset) + 1)

    synsets = []
    for offset, (words, hypernyms, gloss) in raw.items():
        for target in hypernyms:
            if target not in raw:
                raise ValueError(
                    "synset %08d: dangling synset reference %08d"
                    % (offset, target))
        synsets.append(Synset(
            id=ids[offset],
            offset=offset,
            pos="n",
            lemmas=tuple(w.lower() for w in words),
            hypernyms=tuple(ids[t] for t in hypernyms),
            gloss=gloss,
        ))

    lemma_index = {}
    for lemma, offsets in senses.items():
        lemma_index[(lemma, "n")] = tuple(ids[o] for o in offsets)
    return WordnetGraph(synsets, lemma_index)
