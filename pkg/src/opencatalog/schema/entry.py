"""Core record types for the four catalogs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

SCHEMA_VERSION = "1.0"

CATALOGS = ("dataset", "model", "use_case", "oer")
STATES = ("draft", "pending_review", "published", "rejected", "retracted")
LINK_OUTCOMES = ("valid", "broken", "unreachable", "skipped_offline")

# Descriptor groups and the catalogs each one is permitted on. The free-tag
# groups (applications/stakeholders/technologies) are open to every catalog;
# the controlled groups are restricted. Phases are allowed everywhere but
# primarily describe use cases.
CONTROLLED_GROUPS = {"modalities": "modalities", "tasks": "tasks", "phases": "phases"}
FREE_GROUPS = ("applications", "stakeholders", "technologies")
GROUPS_BY_CATALOG = {
    "dataset": frozenset({"modalities", "tasks", "phases", *FREE_GROUPS}),
    "model": frozenset({"modalities", "tasks", "phases", *FREE_GROUPS}),
    "use_case": frozenset({"phases", *FREE_GROUPS}),
    "oer": frozenset({"phases", "oer_format", *FREE_GROUPS}),
}


@dataclass
class ContributorRef:
    name: str
    affiliation: str | None = None


@dataclass
class SourceRef:
    repository: str
    record_id: str


@dataclass
class LinkStatus:
    url: str
    outcome: str  # one of LINK_OUTCOMES
    checked_at: str  # UTC ISO-8601
    attempts: int
    http_status: int | None = None


@dataclass
class DomainDescriptors:
    """Catalog-specific descriptor groups; controlled groups hold canonical
    vocabulary terms, the rest are free-text tags."""

    modalities: set[str] = field(default_factory=set)
    tasks: set[str] = field(default_factory=set)
    phases: set[str] = field(default_factory=set)
    applications: set[str] = field(default_factory=set)
    stakeholders: set[str] = field(default_factory=set)
    technologies: set[str] = field(default_factory=set)
    oer_format: str | None = None

    def is_empty(self) -> bool:
        return not (
            self.modalities
            or self.tasks
            or self.phases
            or self.applications
            or self.stakeholders
            or self.technologies
            or self.oer_format
        )


@dataclass
class CatalogEntry:
    """One curated metadata record referencing an externally hosted resource.

    Unknown keys encountered while parsing foreign JSON are preserved in
    ``extras`` and re-emitted by the canonical serializer.
    """

    id: str
    catalog: str
    title: str
    access_url: str
    source: SourceRef
    state: str = "draft"
    description: str = ""
    contributors: list[ContributorRef] = field(default_factory=list)
    license: str = ""
    year: int | None = None
    descriptors: DomainDescriptors = field(default_factory=DomainDescriptors)
    link_status: LinkStatus | None = None
    schema_version: str = SCHEMA_VERSION
    extras: dict[str, Any] = field(default_factory=dict)
