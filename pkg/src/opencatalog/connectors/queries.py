"""Boolean source-query construction: three keyword categories ANDed,
terms within a category ORed."""

from __future__ import annotations


class EmptyCategory(ValueError):
    """A keyword category was empty."""


def _group(terms: list[str], label: str) -> str:
    if not terms:
        raise EmptyCategory(f"{label} terms must be non-empty")
    return "(" + " OR ".join(f'"{t}"' for t in terms) + ")"


def build_query(domain_terms: list[str], method_terms: list[str], access_terms: list[str]) -> str:
    """Combine domain, method, and access/application keyword groups."""
    return " AND ".join(
        (
            _group(domain_terms, "domain"),
            _group(method_terms, "method"),
            _group(access_terms, "access"),
        )
    )
