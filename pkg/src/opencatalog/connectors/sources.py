"""Network connectors for the three supported source API shapes.

code_host: GitHub-style repository search (``items`` + ``total_count``,
page-number pagination). open_data: Zenodo-style record search
(``hits.hits`` + ``hits.total``). model_hub: Hugging-Face-style model
listing (bare JSON array, offset pagination via ``skip``).
"""

from __future__ import annotations

import json
import os
from typing import Any
from urllib.parse import urlencode

from ..schema import SourceRef
from .base import (
    AuthRejected,
    ConnectorError,
    FetchContext,
    FetchPage,
    NetworkUnreachable,
    RateLimited,
    RawRecord,
    SourceConfig,
    token_env_name,
    utc_now_iso,
)
from .transport import HttpTransport, TransportFailure


def _auth_headers(config: SourceConfig) -> dict[str, str]:
    token = config.auth_token or os.environ.get(token_env_name(config.source_name))
    headers = {"Accept": "application/json"}
    if token:
        headers["Authorization"] = f"Bearer {token}"
    return headers


def _get_json(config: SourceConfig, url: str, context: FetchContext) -> Any:
    transport = context.transport or HttpTransport(offline=context.offline)
    try:
        resp = transport.request("GET", url, headers=_auth_headers(config))
    except TransportFailure as exc:
        raise NetworkUnreachable(str(exc)) from exc
    if resp.status in (401, 403):
        raise AuthRejected(f"{config.source_name} rejected credentials ({resp.status})")
    if resp.status == 429:
        retry_after = float(resp.header("Retry-After", "60") or "60")
        raise RateLimited(retry_after)
    if resp.status >= 500:
        raise NetworkUnreachable(f"{config.source_name} server error {resp.status}")
    if resp.status != 200:
        raise ConnectorError(f"{config.source_name} returned {resp.status} for {url}")
    try:
        return json.loads(resp.body)
    except json.JSONDecodeError as exc:
        raise ConnectorError(f"{config.source_name}: invalid JSON page: {exc}") from exc


def _record(config: SourceConfig, record_id: str, payload: Any) -> RawRecord:
    return RawRecord(
        source=SourceRef(repository=config.source_name, record_id=record_id),
        payload=payload,
        fetched_at=utc_now_iso(),
        kind=config.kind,
    )


def _fetch_code_host(config: SourceConfig, cursor: str | None, context: FetchContext) -> FetchPage:
    page = int(cursor) if cursor else 1
    params = urlencode({"q": config.query, "per_page": config.page_size, "page": page})
    doc = _get_json(config, f"{config.base_url.rstrip('/')}/search/repositories?{params}", context)
    items = doc.get("items", [])
    total = int(doc.get("total_count", len(items)))
    records = [_record(config, str(item.get("id", i)), item) for i, item in enumerate(items)]
    has_more = items and page * config.page_size < total
    return FetchPage(records=records, next_cursor=str(page + 1) if has_more else None)


def _fetch_open_data(config: SourceConfig, cursor: str | None, context: FetchContext) -> FetchPage:
    page = int(cursor) if cursor else 1
    params = urlencode({"q": config.query, "size": config.page_size, "page": page})
    doc = _get_json(config, f"{config.base_url.rstrip('/')}/api/records?{params}", context)
    hits = doc.get("hits", {})
    items = hits.get("hits", [])
    total = int(hits.get("total", len(items)))
    records = [_record(config, str(item.get("id", i)), item) for i, item in enumerate(items)]
    has_more = items and page * config.page_size < total
    return FetchPage(records=records, next_cursor=str(page + 1) if has_more else None)


def _fetch_model_hub(config: SourceConfig, cursor: str | None, context: FetchContext) -> FetchPage:
    skip = int(cursor) if cursor else 0
    params = urlencode({"search": config.query, "limit": config.page_size, "skip": skip})
    doc = _get_json(config, f"{config.base_url.rstrip('/')}/api/models?{params}", context)
    if not isinstance(doc, list):
        raise ConnectorError(f"{config.source_name}: expected a JSON array page")
    records = [
        _record(config, str(item.get("modelId", item.get("id", skip + i))), item)
        for i, item in enumerate(doc)
    ]
    has_more = len(doc) == config.page_size
    return FetchPage(records=records, next_cursor=str(skip + len(doc)) if has_more else None)


_FETCHERS = {
    "code_host": _fetch_code_host,
    "open_data": _fetch_open_data,
    "model_hub": _fetch_model_hub,
}


def fetch_network_page(config: SourceConfig, cursor: str | None, context: FetchContext) -> FetchPage:
    return _FETCHERS[config.kind](config, cursor, context)
