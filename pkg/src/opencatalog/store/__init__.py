"""Durable, versioned persistence: append-only provenance logs plus
materialized state and live-catalog snapshots."""

from .accounts import Account, AccountError, AccountRegistry, ROLES, hash_password, verify_password
from .events import (
    EVENT_KINDS,
    IllegalTransition,
    ProvenanceEvent,
    StoredRecord,
    check_transition,
    event_entry_payload,
    fold_events,
)
from .filestore import (
    FileStore,
    LiveCatalog,
    Page,
    StorageFailure,
    StoreError,
    UnknownId,
    WriteConflict,
    utc_now_iso,
)

__all__ = [
    "Account",
    "AccountError",
    "AccountRegistry",
    "EVENT_KINDS",
    "FileStore",
    "IllegalTransition",
    "LiveCatalog",
    "Page",
    "ProvenanceEvent",
    "ROLES",
    "StorageFailure",
    "StoreError",
    "StoredRecord",
    "UnknownId",
    "WriteConflict",
    "check_transition",
    "event_entry_payload",
    "fold_events",
    "hash_password",
    "utc_now_iso",
    "verify_password",
]
