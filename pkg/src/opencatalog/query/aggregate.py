"""Facet aggregation: per-term counts over a (filtered) entry collection."""

from __future__ import annotations

from dataclasses import dataclass

from ..schema import CatalogEntry, ControlledVocabulary
from .index import FACETS, UnknownDimension, facet_terms


@dataclass
class AggregateResult:
    dimension: str
    counts: dict[str, int]
    total: int  # distinct entries counted (after filters)

    def to_dict(self) -> dict:
        return {"dimension": self.dimension, "counts": dict(sorted(self.counts.items())), "total": self.total}


def _resolve(facet: str, term: str, vocabularies: dict[str, ControlledVocabulary] | None) -> str:
    vocab_name = {"modality": "modalities", "task": "tasks", "phase": "phases", "oer_format": "oer_format"}.get(facet)
    if vocabularies and vocab_name and vocab_name in vocabularies:
        resolved = vocabularies[vocab_name].lookup(term)
        if resolved is not None:
            return resolved
    return term.strip().lower() if facet != "license" else term


def matches_facets(
    entry: CatalogEntry,
    facets: dict[str, set[str]],
    vocabularies: dict[str, ControlledVocabulary] | None = None,
) -> bool:
    """AND across facets, OR within one facet."""
    for facet, terms in facets.items():
        if not terms:
            continue
        if facet not in FACETS:
            raise UnknownDimension(facet)
        wanted = {_resolve(facet, t, vocabularies) for t in terms}
        if not (facet_terms(entry, facet) & wanted):
            return False
    return True


def aggregate(
    entries: list[CatalogEntry],
    dimension: str,
    filters: dict[str, set[str]] | None = None,
    vocabularies: dict[str, ControlledVocabulary] | None = None,
) -> AggregateResult:
    """Count entries per ``dimension`` term after applying ``filters``.

    Multi-labeled entries are counted once per label; ``total`` is the
    number of distinct entries that passed the filters.
    """
    if dimension not in FACETS:
        raise UnknownDimension(dimension)
    filters = filters or {}
    counts: dict[str, int] = {}
    total = 0
    for entry in entries:
        if not matches_facets(entry, filters, vocabularies):
            continue
        total += 1
        for term in facet_terms(entry, dimension):
            counts[term] = counts.get(term, 0) + 1
    return AggregateResult(dimension=dimension, counts=counts, total=total)
