"""File-backed store: append-only per-entry event logs plus atomic
live-catalog snapshots.

Layout under the data directory:
    log/<id>.ndjson   one canonical-JSON event per line, seq == line number
    live/<catalog>.ndjson   published entries, one canonical line, sorted by id
    accounts.json     contributor/curator accounts

Single logical writer (cross-process lock); unlimited concurrent readers.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import threading
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from filelock import FileLock, Timeout

from ..schema import CATALOGS, CatalogEntry, canonical_json_bytes, canonical_serialize
from .accounts import AccountRegistry
from .events import (
    IllegalTransition,
    ProvenanceEvent,
    StoredRecord,
    apply_event,
    check_transition,
    fold_events,
)


class StoreError(Exception):
    pass


class StorageFailure(StoreError):
    pass


class UnknownId(StoreError):
    pass


class WriteConflict(StoreError):
    """A second writer holds the store's write lock."""


@dataclass
class Page:
    items: list[CatalogEntry]
    total: int
    offset: int
    limit: int | None


@dataclass
class LiveCatalog:
    catalog: str
    entries: list[CatalogEntry]
    count: int
    generated_at: str
    path: Path | None = None


def utc_now_iso() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


@dataclass
class FileStore:
    data_dir: Path
    fsync: bool = True
    _write_lock: FileLock | None = field(default=None, repr=False)
    _mutex: threading.RLock = field(default_factory=threading.RLock, repr=False)
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.data_dir = Path(self.data_dir)
        (self.data_dir / "log").mkdir(parents=True, exist_ok=True)
        (self.data_dir / "live").mkdir(parents=True, exist_ok=True)
        self.accounts = AccountRegistry(self.data_dir / "accounts.json")

    # -- paths ------------------------------------------------------------

    def _log_path(self, entry_id: str) -> Path:
        if not entry_id or "/" in entry_id or entry_id.startswith("."):
            raise UnknownId(f"invalid entry id {entry_id!r}")
        return self.data_dir / "log" / f"{entry_id}.ndjson"

    def live_path(self, catalog: str) -> Path:
        return self.data_dir / "live" / f"{catalog}.ndjson"

    # -- write path -------------------------------------------------------

    def _acquire_writer(self) -> None:
        if self._write_lock is None:
            lock = FileLock(str(self.data_dir / ".write.lock"))
            try:
                lock.acquire(timeout=0)
            except Timeout as exc:
                raise WriteConflict("another writer holds the store lock") from exc
            self._write_lock = lock

    def close(self) -> None:
        with self._mutex:
            if self._write_lock is not None:
                self._write_lock.release()
                self._write_lock = None

    def __enter__(self):
        return self

    def __exit__(self, *exc_info):
        self.close()

    def append_event(self, entry_id: str, event: ProvenanceEvent) -> int:
        return self.append_events(entry_id, [event])

    def append_events(self, entry_id: str, events: list[ProvenanceEvent]) -> int:
        """Append events with dense increasing seq; durable before return."""
        with self._mutex:
            self._acquire_writer()
            existing = self._events_unlocked(entry_id)
            record = fold_events(existing)
            seq = len(existing)
            state = record.state
            encoded = []
            for event in events:
                if event.seq is not None:
                    raise StoreError("event.seq is assigned by the store")
                check_transition(state, event.kind)
                seq += 1
                event.entry_id = entry_id
                event.seq = seq
                if not event.at:
                    event.at = utc_now_iso()
                apply_event(record, event)
                state = record.state
                encoded.append(canonical_json_bytes(event.to_dict()) + b"\n")
            path = self._log_path(entry_id)
            try:
                with open(path, "ab") as fh:
                    fh.writelines(encoded)
                    fh.flush()
                    if self.fsync:
                        os.fsync(fh.fileno())
            except OSError as exc:
                raise StorageFailure(f"cannot append to {path}: {exc}") from exc
            self._cache[entry_id] = (seq, record)
            return seq

    # -- read path ----------------------------------------------------------

    def _events_unlocked(self, entry_id: str) -> list[ProvenanceEvent]:
        path = self._log_path(entry_id)
        if not path.exists():
            return []
        events = []
        for line in path.read_text("utf-8").splitlines():
            if line.strip():
                events.append(ProvenanceEvent.from_dict(json.loads(line)))
        return events

    def events(self, entry_id: str) -> list[ProvenanceEvent]:
        events = self._events_unlocked(entry_id)
        if not events:
            raise UnknownId(entry_id)
        return events

    def has_entry(self, entry_id: str) -> bool:
        try:
            return self._log_path(entry_id).exists()
        except UnknownId:
            return False

    def entry_ids(self) -> list[str]:
        return sorted(p.stem for p in (self.data_dir / "log").glob("*.ndjson"))

    def materialize_record(self, entry_id: str) -> StoredRecord:
        events = self._events_unlocked(entry_id)
        if not events:
            raise UnknownId(entry_id)
        cached = self._cache.get(entry_id)
        if cached and cached[0] == len(events):
            return cached[1]
        record = fold_events(events)
        self._cache[entry_id] = (len(events), record)
        return record

    def materialize(self, entry_id: str) -> CatalogEntry:
        record = self.materialize_record(entry_id)
        if record.entry is None:
            raise UnknownId(f"{entry_id}: log holds no entry snapshot yet")
        return record.entry

    def list_entries(
        self,
        *,
        state: str | None = None,
        catalog: str | None = None,
        offset: int = 0,
        limit: int | None = None,
    ) -> Page:
        matched = []
        for entry_id in self.entry_ids():
            record = self.materialize_record(entry_id)
            if record.entry is None:
                continue
            if state is not None and record.entry.state != state:
                continue
            if catalog is not None and record.entry.catalog != catalog:
                continue
            matched.append(record.entry)
        total = len(matched)
        window = matched[offset:] if limit is None else matched[offset : offset + limit]
        return Page(items=window, total=total, offset=offset, limit=limit)

    def published_entries(self, catalog: str | None = None) -> list[CatalogEntry]:
        return self.list_entries(state="published", catalog=catalog).items

    # -- snapshots ----------------------------------------------------------

    def snapshot_live(self, catalog: str, destination: Path | str | None = None) -> LiveCatalog:
        """Write the live NDJSON snapshot for one catalog atomically."""
        if catalog not in CATALOGS:
            raise StoreError(f"unknown catalog {catalog!r}")
        entries = self.published_entries(catalog)
        dest = Path(destination) if destination is not None else self.live_path(catalog)
        dest.parent.mkdir(parents=True, exist_ok=True)
        payload = b"".join(canonical_serialize(e) + b"\n" for e in entries)
        try:
            fd, tmp_name = tempfile.mkstemp(dir=str(dest.parent), prefix=f".{catalog}.", suffix=".tmp")
            with os.fdopen(fd, "wb") as fh:
                fh.write(payload)
                fh.flush()
                if self.fsync:
                    os.fsync(fh.fileno())
            os.replace(tmp_name, dest)
        except OSError as exc:
            raise StorageFailure(f"cannot write snapshot {dest}: {exc}") from exc
        return LiveCatalog(
            catalog=catalog,
            entries=entries,
            count=len(entries),
            generated_at=utc_now_iso(),
            path=dest,
        )

    def snapshot_all(self, destination_dir: Path | str | None = None) -> dict[str, int]:
        counts = {}
        for catalog in CATALOGS:
            dest = None
            if destination_dir is not None:
                dest = Path(destination_dir) / f"{catalog}.ndjson"
            counts[catalog] = self.snapshot_live(catalog, dest).count
        return counts

    # -- integrity helpers ----------------------------------------------------

    def log_digest(self) -> str:
        """SHA-256 over every log file; used to assert append-only behavior."""
        digest = hashlib.sha256()
        for entry_id in self.entry_ids():
            digest.update(entry_id.encode())
            digest.update(self._log_path(entry_id).read_bytes())
        return digest.hexdigest()


__all__ = [
    "FileStore",
    "IllegalTransition",
    "LiveCatalog",
    "Page",
    "StorageFailure",
    "StoreError",
    "UnknownId",
    "WriteConflict",
    "utc_now_iso",
]
