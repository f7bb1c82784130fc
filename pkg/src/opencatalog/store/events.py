"""Provenance events and the fold that materializes current entry state."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..schema import CatalogEntry, entry_from_dict, entry_to_dict
from ..schema.canonical import parse_link_status

EVENT_KINDS = (
    "harvested",
    "submitted",
    "normalized",
    "validated",
    "dedup_checked",
    "reviewed",
    "published",
    "updated",
    "retracted",
    "link_checked",
)


class IllegalTransition(ValueError):
    """Event kind is not legal for the entry's current state."""


@dataclass
class ProvenanceEvent:
    entry_id: str
    kind: str
    actor: str
    payload: dict[str, Any] = field(default_factory=dict)
    at: str = ""
    seq: int | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "entry_id": self.entry_id,
            "kind": self.kind,
            "actor": self.actor,
            "payload": self.payload,
            "at": self.at,
            "seq": self.seq,
        }

    @classmethod
    def from_dict(cls, doc: dict[str, Any]) -> "ProvenanceEvent":
        return cls(
            entry_id=doc["entry_id"],
            kind=doc["kind"],
            actor=doc.get("actor", "system"),
            payload=doc.get("payload", {}),
            at=doc.get("at", ""),
            seq=doc.get("seq"),
        )


@dataclass
class StoredRecord:
    """Materialized view of one entry's event log."""

    entry: CatalogEntry | None = None
    report: dict[str, Any] | None = None
    matches: list[dict[str, Any]] | None = None
    seq: int = 0

    @property
    def state(self) -> str | None:
        return self.entry.state if self.entry is not None else None


def check_transition(current_state: str | None, kind: str) -> None:
    """Enforce the lifecycle state machine at append time.

    Legal entry-state transitions: draft -> pending_review,
    pending_review -> {published, rejected, draft}, published -> retracted.
    """
    if kind not in EVENT_KINDS:
        raise IllegalTransition(f"unknown event kind {kind!r}")
    if kind == "harvested":
        return
    if kind in ("normalized", "submitted"):
        if current_state in (None, "draft"):
            return
        raise IllegalTransition(f"cannot apply {kind} in state {current_state}")
    if current_state is None:
        raise IllegalTransition(f"no entry exists yet; cannot apply {kind}")
    if kind in ("validated", "dedup_checked", "link_checked"):
        return
    if kind == "updated":
        if current_state in ("draft", "pending_review", "published"):
            return
        raise IllegalTransition(f"cannot update entry in state {current_state}")
    if kind in ("reviewed", "published"):
        if current_state == "pending_review":
            return
        raise IllegalTransition(f"{kind} requires pending_review, entry is {current_state}")
    if kind == "retracted":
        if current_state == "published":
            return
        raise IllegalTransition(f"retraction requires published, entry is {current_state}")
    raise IllegalTransition(f"unhandled event kind {kind!r}")


def apply_event(record: StoredRecord, event: ProvenanceEvent) -> StoredRecord:
    kind = event.kind
    payload = event.payload
    if kind == "normalized" and "entry" in payload:
        record.entry = entry_from_dict(payload["entry"])
        record.entry.state = "draft"
    elif kind == "submitted" and "entry" in payload:
        record.entry = entry_from_dict(payload["entry"])
        record.entry.state = "pending_review"
    elif kind == "validated":
        record.report = payload.get("report")
        if record.entry is not None and record.report and record.report.get("link_status"):
            record.entry.link_status = parse_link_status(record.report["link_status"])
    elif kind == "dedup_checked":
        record.matches = payload.get("matches", [])
    elif kind == "reviewed":
        decision = (payload.get("decision") or {}).get("decision")
        if record.entry is not None:
            if decision == "reject":
                record.entry.state = "rejected"
            elif decision == "request_changes":
                record.entry.state = "draft"
            # approve leaves the state change to the published event
    elif kind == "published":
        if record.entry is not None:
            record.entry.state = "published"
    elif kind == "updated" and "entry" in payload:
        state = record.entry.state if record.entry is not None else "draft"
        record.entry = entry_from_dict(payload["entry"])
        record.entry.state = state
    elif kind == "retracted":
        if record.entry is not None:
            record.entry.state = "retracted"
    elif kind == "link_checked":
        if record.entry is not None and payload.get("link_status"):
            record.entry.link_status = parse_link_status(payload["link_status"])
    record.seq = event.seq or record.seq
    return record


def fold_events(events: list[ProvenanceEvent]) -> StoredRecord:
    """Deterministically fold an event log into its current state."""
    record = StoredRecord()
    for event in sorted(events, key=lambda e: e.seq or 0):
        apply_event(record, event)
    return record


def event_entry_payload(entry: CatalogEntry) -> dict[str, Any]:
    return {"entry": entry_to_dict(entry)}
