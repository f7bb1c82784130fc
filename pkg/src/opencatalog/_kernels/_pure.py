"""Pure-Python kernel implementations.

Semantics and floating-point operation order are kept identical to the
compiled backend in ``_speedups.pyx`` so that results are bit-equal
regardless of which backend gets selected at import.
"""

from __future__ import annotations


def jaccard_sorted(a, b) -> float:
    """Jaccard similarity of two ascending, duplicate-free int sequences.

    Both-empty input is defined as 0.0 (no shared evidence).
    """
    na, nb = len(a), len(b)
    if na == 0 and nb == 0:
        return 0.0
    i = j = inter = 0
    while i < na and j < nb:
        x, y = a[i], b[j]
        if x == y:
            inter += 1
            i += 1
            j += 1
        elif x < y:
            i += 1
        else:
            j += 1
    return inter / float(na + nb - inter)


def bm25_accumulate(scores, doc_ids, weighted_tf, doc_lens, idf, k1, b, avgdl) -> None:
    """Add one query term's BM25 contribution to ``scores`` in place.

    ``doc_ids``/``weighted_tf`` are the term's posting arrays;
    ``doc_lens`` holds raw token counts per document index.
    """
    for p in range(len(doc_ids)):
        d = doc_ids[p]
        wtf = weighted_tf[p]
        dl = doc_lens[d]
        scores[d] += idf * (wtf * (k1 + 1.0)) / (wtf + k1 * (1.0 - b + b * (dl / avgdl)))
