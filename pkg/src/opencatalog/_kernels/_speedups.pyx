# cython: boundscheck=False, wraparound=False, cdivision=False
"""Compiled kernels for the hot inner loops: token-set Jaccard similarity
(record deduplication) and BM25 score accumulation (search ranking).

Must stay bit-identical to ``_pure.py``; the build disables FP contraction
for that reason.
"""


def jaccard_sorted(int[:] a, int[:] b):
    """Jaccard similarity of two ascending, duplicate-free int arrays."""
    cdef Py_ssize_t na = a.shape[0]
    cdef Py_ssize_t nb = b.shape[0]
    if na == 0 and nb == 0:
        return 0.0
    cdef Py_ssize_t i = 0, j = 0, inter = 0
    cdef int x, y
    while i < na and j < nb:
        x = a[i]
        y = b[j]
        if x == y:
            inter += 1
            i += 1
            j += 1
        elif x < y:
            i += 1
        else:
            j += 1
    return inter / <double>(na + nb - inter)


def bm25_accumulate(double[:] scores, int[:] doc_ids, double[:] weighted_tf,
                    double[:] doc_lens, double idf, double k1, double b,
                    double avgdl):
    """Add one query term's BM25 contribution to ``scores`` in place."""
    cdef Py_ssize_t p
    cdef int d
    cdef double wtf, dl
    for p in range(doc_ids.shape[0]):
        d = doc_ids[p]
        wtf = weighted_tf[p]
        dl = doc_lens[d]
        scores[d] += idf * (wtf * (k1 + 1.0)) / (wtf + k1 * (1.0 - b + b * (dl / avgdl)))
