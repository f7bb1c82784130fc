"""Offline fixture connector: numbered JSON files in a directory.

Layout: ``fixtures/sources/<source>/NNN.json``, one record per file,
served in lexicographic filename order.
"""

from __future__ import annotations

import json
from pathlib import Path

from ..schema import SourceRef
from .base import ConnectorError, FetchPage, RawRecord, SourceConfig, utc_now_iso


def fetch_fixture_page(config: SourceConfig, cursor: str | None) -> FetchPage:
    directory = Path(config.base_url)
    if not directory.is_dir():
        raise ConnectorError(f"fixture directory not found: {directory}")
    files = sorted(directory.glob("*.json"))
    offset = int(cursor) if cursor else 0
    window = files[offset : offset + config.page_size]
    records = []
    for path in window:
        try:
            payload = json.loads(path.read_text("utf-8"))
        except json.JSONDecodeError as exc:
            raise ConnectorError(f"{path}: invalid JSON: {exc}") from exc
        records.append(
            RawRecord(
                source=SourceRef(repository=config.source_name, record_id=path.stem),
                payload=payload,
                fetched_at=utc_now_iso(),
                kind="fixture",
            )
        )
    end = offset + len(window)
    next_cursor = str(end) if end < len(files) else None
    return FetchPage(records=records, next_cursor=next_cursor)
