"""Independent reference implementation for taxonomy tests.

Deliberately shares no code with the package: its own minimal data.noun
parser keyed by raw byte offsets, exhaustive enumeration of every hypernym
path to a root, and Wu-Palmer computed by trying every common ancestor.
Slow but obviously correct; the bundled database is small enough for it.
"""


def parse_data_noun(path):
    """offset -> (words, hypernym offsets), ignoring all other pointers."""
    synsets = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.startswith(" ") or not line.strip():
                continue
            head = line.split(" | ")[0]
            fields = head.split()
            off = int(fields[0])
            w_cnt = int(fields[3], 16)
            words = fields[4:4 + 2 * w_cnt:2]
            p_cnt = int(fields[4 + 2 * w_cnt])
            rest = fields[5 + 2 * w_cnt:]
            hyps = []
            for k in range(p_cnt):
                symbol, target, pos = rest[4 * k], rest[4 * k + 1], rest[4 * k + 2]
                if symbol in ("@", "@i") and pos == "n":
                    hyps.append(int(target))
            synsets[off] = (words, hyps)
    return synsets


def paths_to_root(synsets, off):
    """Every hypernym path from off up to a root, as offset lists."""
    out = []

    def walk(cur, acc):
        hyps = synsets[cur][1]
        if not hyps:
            out.append(acc)
            return
        for h in hyps:
            walk(h, acc + [h])

    walk(off, [off])
    return out


def depth(synsets, off):
    """Nodes on the longest path to a root; a root has depth 1."""
    return max(len(p) for p in paths_to_root(synsets, off))


def ancestors(synsets, off):
    return {node for path in paths_to_root(synsets, off) for node in path}


def wup(synsets, a, b):
    """Brute-force Wu-Palmer over raw offsets."""
    common = ancestors(synsets, a) & ancestors(synsets, b)
    if not common:
        # Hook both trees under a virtual root one level above everything.
        return 2.0 * 1 / ((depth(synsets, a) + 1) + (depth(synsets, b) + 1))
    best = max(depth(synsets, c) for c in common)
    return 2.0 * best / (depth(synsets, a) + depth(synsets, b))
