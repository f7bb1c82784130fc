"""Inverted index with facet tables and BM25 ranking over published entries.

The index is immutable once built and a pure function of its corpus;
rebuilding from the same entries yields identical results. Scoring runs
through the kernel backend (compiled when available).
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass, field

from .._kernels import bm25_accumulate
from ..schema import CatalogEntry, ControlledVocabulary
from .text import expand_query, tokenize

BM25_K1 = 1.2
BM25_B = 0.75
TITLE_WEIGHT = 2.0

FACETS = ("catalog", "modality", "task", "phase", "oer_format", "year", "license")


class UnknownDimension(ValueError):
    pass


def facet_terms(entry: CatalogEntry, facet: str) -> set[str]:
    """Facet bucket labels an entry belongs to (multi-membership allowed)."""
    if facet == "catalog":
        return {entry.catalog}
    if facet == "modality":
        return set(entry.descriptors.modalities)
    if facet == "task":
        return set(entry.descriptors.tasks)
    if facet == "phase":
        return set(entry.descriptors.phases)
    if facet == "oer_format":
        return {entry.descriptors.oer_format} if entry.descriptors.oer_format else set()
    if facet == "year":
        return {str(entry.year)} if entry.year is not None else set()
    if facet == "license":
        return {entry.license} if entry.license else set()
    raise UnknownDimension(facet)


def entry_token_counts(entry: CatalogEntry) -> tuple[dict[str, float], int]:
    """Weighted term frequencies and raw length for one entry.

    Title tokens count double; description and descriptor terms count once.
    """
    weighted: dict[str, float] = {}
    length = 0
    for tok in tokenize(entry.title):
        weighted[tok] = weighted.get(tok, 0.0) + TITLE_WEIGHT
        length += 1
    texts = [entry.description]
    d = entry.descriptors
    texts.extend(sorted(d.modalities | d.tasks | d.phases | d.applications | d.stakeholders | d.technologies))
    if d.oer_format:
        texts.append(d.oer_format)
    for text in texts:
        for tok in tokenize(text):
            weighted[tok] = weighted.get(tok, 0.0) + 1.0
            length += 1
    return weighted, length


@dataclass
class QuerySpec:
    text: str = ""
    facets: dict[str, set[str]] = field(default_factory=dict)
    offset: int = 0
    limit: int | None = None


@dataclass
class SearchPage:
    items: list[tuple[str, float]]  # (entry id, score), ranked
    total: int
    offset: int
    limit: int | None


@dataclass
class SearchIndex:
    entries: list[CatalogEntry]
    ids: list[str]
    postings: dict[str, tuple[array, array]]  # token -> (doc indices, weighted tf)
    doc_lens: array
    avgdl: float
    facet_tables: dict[str, dict[str, frozenset[int]]]
    vocabularies: dict[str, ControlledVocabulary] | None = None

    @property
    def size(self) -> int:
        return len(self.entries)

    def _facet_candidates(self, facets: dict[str, set[str]]) -> set[int] | None:
        """AND across facets, OR within one facet. None = unconstrained."""
        result: set[int] | None = None
        for facet, terms in facets.items():
            if not terms:
                continue
            table = self.facet_tables.get(facet)
            if table is None:
                raise UnknownDimension(facet)
            bucket: set[int] = set()
            for term in terms:
                bucket |= table.get(self._resolve_facet_term(facet, term), frozenset())
            result = bucket if result is None else result & bucket
        return result

    def _resolve_facet_term(self, facet: str, term: str) -> str:
        vocab_name = {"modality": "modalities", "task": "tasks", "phase": "phases", "oer_format": "oer_format"}.get(facet)
        if self.vocabularies and vocab_name and vocab_name in self.vocabularies:
            resolved = self.vocabularies[vocab_name].lookup(term)
            if resolved is not None:
                return resolved
        return term.strip().lower() if facet != "license" else term

    def search(self, spec: QuerySpec) -> SearchPage:
        tokens = expand_query(spec.text, self.vocabularies)
        allowed = self._facet_candidates(spec.facets)

        if tokens:
            candidates: set[int] = set()
            for tok in set(tokens):
                posting = self.postings.get(tok)
                if posting:
                    candidates.update(posting[0])
        else:
            candidates = set(range(self.size))
        if allowed is not None:
            candidates &= allowed

        scores = array("d", [0.0]) * self.size
        if tokens and candidates and self.avgdl > 0.0:
            n = float(self.size)
            for tok in tokens:
                posting = self.postings.get(tok)
                if not posting:
                    continue
                df = float(len(posting[0]))
                idf = math.log((n - df + 0.5) / (df + 0.5) + 1.0)
                bm25_accumulate(
                    scores, posting[0], posting[1], self.doc_lens, idf, BM25_K1, BM25_B, self.avgdl
                )

        ranked = sorted(candidates, key=lambda i: (-scores[i], self.ids[i]))
        total = len(ranked)
        window = ranked[spec.offset :] if spec.limit is None else ranked[spec.offset : spec.offset + spec.limit]
        return SearchPage(
            items=[(self.ids[i], scores[i]) for i in window],
            total=total,
            offset=spec.offset,
            limit=spec.limit,
        )

    def entry_by_id(self, entry_id: str) -> CatalogEntry | None:
        try:
            idx = self.ids.index(entry_id)
        except ValueError:
            return None
        return self.entries[idx]


def build_index(
    entries: list[CatalogEntry],
    vocabularies: dict[str, ControlledVocabulary] | None = None,
) -> SearchIndex:
    """Index title, description, and descriptor terms; populate facet tables."""
    ordered = sorted(entries, key=lambda e: e.id)
    ids = [e.id for e in ordered]

    doc_lens = array("d")
    token_docs: dict[str, list[tuple[int, float]]] = {}
    for idx, entry in enumerate(ordered):
        weighted, length = entry_token_counts(entry)
        doc_lens.append(float(length))
        for tok, wtf in weighted.items():
            token_docs.setdefault(tok, []).append((idx, wtf))

    postings = {}
    for tok, pairs in token_docs.items():
        pairs.sort()
        postings[tok] = (
            array("i", [i for i, _ in pairs]),
            array("d", [w for _, w in pairs]),
        )

    facet_tables: dict[str, dict[str, frozenset[int]]] = {}
    for facet in FACETS:
        table: dict[str, set[int]] = {}
        for idx, entry in enumerate(ordered):
            for term in facet_terms(entry, facet):
                table.setdefault(term, set()).add(idx)
        facet_tables[facet] = {term: frozenset(members) for term, members in table.items()}

    total_len = 0.0
    for length in doc_lens:
        total_len += length
    avgdl = total_len / len(ordered) if ordered else 0.0

    return SearchIndex(
        entries=ordered,
        ids=ids,
        postings=postings,
        doc_lens=doc_lens,
        avgdl=avgdl,
        facet_tables=facet_tables,
        vocabularies=vocabularies,
    )
