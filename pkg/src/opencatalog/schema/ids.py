"""Persistent identifier minting.

Every record gets a deterministic id of the shape ``oc-<cat>-<slug>-<hash8>``
so that re-harvesting the same resource always yields the same identifier.
"""

from __future__ import annotations

import hashlib
import re

from ..urls import MalformedUrl, canonicalize_url
from .entry import CATALOGS

CATALOG_CODES = {"dataset": "ds", "model": "md", "use_case": "uc", "oer": "er"}
ID_PATTERN = re.compile(r"^oc-(ds|md|uc|er)-[a-z0-9-]{1,40}-[0-9a-f]{8}$")

SLUG_MAX = 40

_NON_ALNUM = re.compile(r"[^a-z0-9]+")


class InvalidIdInput(ValueError):
    """mint_identifier was fed an empty title or malformed URL."""


def normalize_title(title: str) -> str:
    """Lowercase ``title`` and collapse every non-alphanumeric run to a
    single space. Idempotent; empty input yields empty output."""
    return _NON_ALNUM.sub(" ", title.lower()).strip()


def title_slug(title: str) -> str:
    """Hyphen-joined normalized title, truncated to `SLUG_MAX` characters."""
    slug = "-".join(normalize_title(title).split())[:SLUG_MAX].rstrip("-")
    return slug


def mint_identifier(catalog: str, title: str, first_contributor: str, source_url: str) -> str:
    """Mint the persistent id for a record.

    The 8-hex-digit suffix is the SHA-256 prefix over
    ``catalog|normalized_title|first_contributor|canonical_source_url``,
    which makes the id stable across re-harvests and distinct across
    resources.
    """
    if catalog not in CATALOGS:
        raise InvalidIdInput(f"unknown catalog {catalog!r}")
    if not title or not title.strip():
        raise InvalidIdInput("title must be non-empty")
    slug = title_slug(title)
    if not slug:
        raise InvalidIdInput(f"title {title!r} has no alphanumeric characters")
    try:
        canonical_url = canonicalize_url(source_url)
    except MalformedUrl as exc:
        raise InvalidIdInput(f"malformed source url: {exc}") from exc

    key = "|".join(
        (catalog, normalize_title(title), first_contributor.strip().lower(), canonical_url)
    )
    hash8 = hashlib.sha256(key.encode("utf-8")).hexdigest()[:8]
    return f"oc-{CATALOG_CODES[catalog]}-{slug}-{hash8}"


def is_valid_identifier(entry_id: str) -> bool:
    return bool(ID_PATTERN.match(entry_id))
