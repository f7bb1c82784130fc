"""Canonical byte-level serialization of catalog entries.

One JSON spelling per entry: UTF-8, keys sorted at every level, no
insignificant whitespace, sets emitted as sorted arrays, absent optional
fields omitted. Snapshot diffing, deduplication, and provenance replay all
rely on this form being a fixed point of serialize -> parse -> serialize.
"""

from __future__ import annotations

import json
from typing import Any

from .entry import (
    CATALOGS,
    FREE_GROUPS,
    LINK_OUTCOMES,
    SCHEMA_VERSION,
    STATES,
    CatalogEntry,
    ContributorRef,
    DomainDescriptors,
    LinkStatus,
    SourceRef,
)


class EntryParseError(ValueError):
    """Base class for parse failures."""


class MalformedJson(EntryParseError):
    pass


class MissingRequiredKey(EntryParseError):
    def __init__(self, key: str):
        super().__init__(f"missing required key: {key!r}")
        self.key = key


class TypeMismatch(EntryParseError):
    def __init__(self, key: str, expected: str):
        super().__init__(f"key {key!r}: expected {expected}")
        self.key = key
        self.expected = expected


_REQUIRED_KEYS = ("id", "catalog", "title", "access_url", "source", "state")
_SET_GROUPS = ("modalities", "tasks", "phases", *FREE_GROUPS)
_KNOWN_KEYS = frozenset(
    {
        "id",
        "catalog",
        "title",
        "description",
        "contributors",
        "license",
        "access_url",
        "source",
        "year",
        "descriptors",
        "state",
        "link_status",
        "schema_version",
    }
)


def entry_to_dict(entry: CatalogEntry) -> dict[str, Any]:
    """Plain-dict form of an entry with canonical field spellings."""
    doc: dict[str, Any] = {
        "id": entry.id,
        "catalog": entry.catalog,
        "title": entry.title,
        "description": entry.description,
        "contributors": [
            {"name": c.name} if c.affiliation is None else {"name": c.name, "affiliation": c.affiliation}
            for c in entry.contributors
        ],
        "license": entry.license,
        "access_url": entry.access_url,
        "source": {"repository": entry.source.repository, "record_id": entry.source.record_id},
        "state": entry.state,
        "schema_version": entry.schema_version,
    }
    if entry.year is not None:
        doc["year"] = entry.year
    if not entry.descriptors.is_empty():
        d: dict[str, Any] = {}
        for group in _SET_GROUPS:
            terms = getattr(entry.descriptors, group)
            if terms:
                d[group] = sorted(terms)
        if entry.descriptors.oer_format is not None:
            d["oer_format"] = entry.descriptors.oer_format
        doc["descriptors"] = d
    if entry.link_status is not None:
        ls: dict[str, Any] = {
            "url": entry.link_status.url,
            "outcome": entry.link_status.outcome,
            "checked_at": entry.link_status.checked_at,
            "attempts": entry.link_status.attempts,
        }
        if entry.link_status.http_status is not None:
            ls["http_status"] = entry.link_status.http_status
        doc["link_status"] = ls
    # Preserved unknown keys; known keys always win on collision.
    for key, value in entry.extras.items():
        if key not in _KNOWN_KEYS:
            doc[key] = value
    return doc


def canonical_json_bytes(doc: Any) -> bytes:
    """Canonical JSON encoding of an arbitrary JSON-able document."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False).encode(
        "utf-8"
    )


def canonical_serialize(entry: CatalogEntry) -> bytes:
    return canonical_json_bytes(entry_to_dict(entry))


def _expect_str(doc: dict, key: str, *, required: bool = False, default: str = "") -> str:
    if key not in doc:
        if required:
            raise MissingRequiredKey(key)
        return default
    value = doc[key]
    if not isinstance(value, str):
        raise TypeMismatch(key, "string")
    return value


def _expect_enum(doc: dict, key: str, allowed: tuple[str, ...]) -> str:
    value = _expect_str(doc, key, required=True)
    if value not in allowed:
        raise TypeMismatch(key, f"one of {sorted(allowed)}")
    return value


def _parse_contributors(raw: Any) -> list[ContributorRef]:
    if not isinstance(raw, list):
        raise TypeMismatch("contributors", "array of {name, affiliation?}")
    out = []
    for item in raw:
        if not isinstance(item, dict) or not isinstance(item.get("name"), str):
            raise TypeMismatch("contributors", "array of {name, affiliation?}")
        affiliation = item.get("affiliation")
        if affiliation is not None and not isinstance(affiliation, str):
            raise TypeMismatch("contributors", "affiliation must be a string")
        out.append(ContributorRef(name=item["name"], affiliation=affiliation))
    return out


def _parse_term_set(group: str, raw: Any) -> set[str]:
    if not isinstance(raw, list) or not all(isinstance(t, str) for t in raw):
        raise TypeMismatch(f"descriptors.{group}", "array of strings")
    return set(raw)


def _parse_descriptors(raw: Any) -> DomainDescriptors:
    if not isinstance(raw, dict):
        raise TypeMismatch("descriptors", "object")
    d = DomainDescriptors()
    for group, value in raw.items():
        if group in _SET_GROUPS:
            setattr(d, group, _parse_term_set(group, value))
        elif group == "oer_format":
            if not isinstance(value, str):
                raise TypeMismatch("descriptors.oer_format", "string")
            d.oer_format = value
        else:
            raise TypeMismatch(f"descriptors.{group}", "known descriptor group")
    return d


def parse_link_status(raw: Any) -> LinkStatus:
    if not isinstance(raw, dict):
        raise TypeMismatch("link_status", "object")
    for key in ("url", "outcome", "checked_at"):
        if key not in raw:
            raise MissingRequiredKey(f"link_status.{key}")
        if not isinstance(raw[key], str):
            raise TypeMismatch(f"link_status.{key}", "string")
    if raw["outcome"] not in LINK_OUTCOMES:
        raise TypeMismatch("link_status.outcome", f"one of {sorted(LINK_OUTCOMES)}")
    attempts = raw.get("attempts", 0)
    if not isinstance(attempts, int) or isinstance(attempts, bool):
        raise TypeMismatch("link_status.attempts", "integer")
    http_status = raw.get("http_status")
    if http_status is not None and (not isinstance(http_status, int) or isinstance(http_status, bool)):
        raise TypeMismatch("link_status.http_status", "integer")
    return LinkStatus(
        url=raw["url"],
        outcome=raw["outcome"],
        checked_at=raw["checked_at"],
        attempts=attempts,
        http_status=http_status,
    )


def entry_from_dict(doc: dict[str, Any]) -> CatalogEntry:
    if not isinstance(doc, dict):
        raise TypeMismatch("<root>", "object")
    for key in _REQUIRED_KEYS:
        if key not in doc:
            raise MissingRequiredKey(key)

    source_raw = doc["source"]
    if (
        not isinstance(source_raw, dict)
        or not isinstance(source_raw.get("repository"), str)
        or not isinstance(source_raw.get("record_id"), str)
    ):
        raise TypeMismatch("source", "object {repository, record_id}")

    year = doc.get("year")
    if year is not None and (not isinstance(year, int) or isinstance(year, bool)):
        raise TypeMismatch("year", "integer")

    entry = CatalogEntry(
        id=_expect_str(doc, "id", required=True),
        catalog=_expect_enum(doc, "catalog", CATALOGS),
        title=_expect_str(doc, "title", required=True),
        access_url=_expect_str(doc, "access_url", required=True),
        source=SourceRef(repository=source_raw["repository"], record_id=source_raw["record_id"]),
        state=_expect_enum(doc, "state", STATES),
        description=_expect_str(doc, "description"),
        contributors=_parse_contributors(doc.get("contributors", [])),
        license=_expect_str(doc, "license"),
        year=year,
        descriptors=_parse_descriptors(doc.get("descriptors", {})),
        link_status=None if doc.get("link_status") is None else parse_link_status(doc["link_status"]),
        schema_version=_expect_str(doc, "schema_version", default=SCHEMA_VERSION),
        extras={k: v for k, v in doc.items() if k not in _KNOWN_KEYS},
    )
    return entry


def parse_entry(data: bytes | str) -> CatalogEntry:
    """Parse canonical (or foreign) JSON into a CatalogEntry.

    Unknown top-level keys are preserved in ``extras``.
    """
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise MalformedJson(f"malformed json: {exc}") from exc
    if not isinstance(doc, dict):
        raise TypeMismatch("<root>", "object")
    return entry_from_dict(doc)
