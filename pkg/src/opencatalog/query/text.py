"""Query/document tokenization and vocabulary-based query expansion."""

from __future__ import annotations

import re

from ..schema import ControlledVocabulary

_SPLIT = re.compile(r"[^a-z0-9]+")


def tokenize(text: str) -> list[str]:
    """Lowercase, split on non-alphanumeric runs, drop single-character
    tokens unless they are digits. No stemming."""
    return [t for t in _SPLIT.split(text.lower()) if len(t) >= 2 or t.isdigit()]


def expand_query(text: str, vocabularies: dict[str, ControlledVocabulary] | None = None) -> list[str]:
    """Token list for a query string, extended with the canonical-term tokens
    when the whole query resolves through a vocabulary alias."""
    tokens = tokenize(text)
    if vocabularies:
        for vocab in vocabularies.values():
            canonical = vocab.lookup(text)
            if canonical is not None:
                for tok in tokenize(canonical):
                    if tok not in tokens:
                        tokens.append(tok)
    return tokens
