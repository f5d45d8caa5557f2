"""IBM Model 1 word aligner, trained by EM on the submitted corpus itself.

Classic lexical-translation EM with a NULL source word; wholly
deterministic (uniform init, fixed iteration count, first-wins ties), so
repeated runs emit identical alignment files. On the benchmark's templatic
sentences a handful of iterations is plenty for content words to lock on.
"""

from collections import defaultdict

NULL = "<null>"


def train(pairs, iterations=8):
    """pairs: [(src_tokens, tgt_tokens)]. Returns t[(tgt, src)] -> prob."""
    tgt_vocab = {f for _, F in pairs for f in F}
    if not tgt_vocab:
        return {}
    uniform = 1.0 / len(tgt_vocab)
    t = defaultdict(lambda: uniform)
    for _ in range(iterations):
        count = defaultdict(float)
        total = defaultdict(float)
        for E, F in pairs:
            sources = [NULL] + list(E)
            for f in F:
                z = sum(t[(f, e)] for e in sources)
                if z == 0.0:
                    continue
                for e in sources:
                    c = t[(f, e)] / z
                    count[(f, e)] += c
                    total[e] += c
        t = defaultdict(lambda: 0.0,
                        {fe: c / total[fe[1]] for fe, c in count.items()})
    return dict(t)


def align(t, src_tokens, tgt_tokens):
    """Viterbi-style best-source per target token; NULL wins -> no pair."""
    pairs = []
    for j, f in enumerate(tgt_tokens):
        best_i, best_p = None, t.get((f, NULL), 0.0)
        for i, e in enumerate(src_tokens):
            p = t.get((f, e), 0.0)
            if p > best_p:
                best_i, best_p = i, p
        if best_i is not None and best_p > 0.0:
            pairs.append((best_i, j))
    return pairs
