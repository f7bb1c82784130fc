"""Connector contract: paginated pulls of raw source records."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any
from urllib.parse import urlsplit

from ..schema import SourceRef
from .transport import offline_mode_from_env

KINDS = ("code_host", "open_data", "model_hub", "fixture")
NETWORK_KINDS = ("code_host", "open_data", "model_hub")


class ConnectorError(Exception):
    pass


class NetworkUnreachable(ConnectorError):
    pass


class AuthRejected(ConnectorError):
    pass


class RateLimited(ConnectorError):
    def __init__(self, retry_after: float, message: str = ""):
        super().__init__(message or f"rate limited; retry after {retry_after}s")
        self.retry_after = retry_after


class ConfigError(ConnectorError):
    pass


@dataclass
class SourceConfig:
    kind: str
    base_url: str
    query: str = ""
    page_size: int = 50
    auth_token: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigError(f"unknown connector kind {self.kind!r}")
        if not 1 <= self.page_size <= 100:
            raise ConfigError("page_size must be in [1, 100]")
        if self.kind == "fixture":
            if urlsplit(self.base_url).scheme in ("http", "https"):
                raise ConfigError("fixture kind requires a local directory path")
        else:
            parts = urlsplit(self.base_url)
            if parts.scheme not in ("http", "https") or not parts.netloc:
                raise ConfigError(f"{self.kind} requires an absolute http(s) base_url")

    @property
    def source_name(self) -> str:
        """Stable repository name: directory basename for fixtures, host otherwise."""
        if self.kind == "fixture":
            return Path(self.base_url).name or "fixture"
        return urlsplit(self.base_url).netloc

    @classmethod
    def from_file(cls, path: Path | str) -> "SourceConfig":
        raw = json.loads(Path(path).read_text("utf-8"))
        try:
            return cls(
                kind=raw["kind"],
                base_url=raw["base_url"],
                query=raw.get("query", ""),
                page_size=raw.get("page_size", 50),
                auth_token=raw.get("auth_token"),
            )
        except KeyError as exc:
            raise ConfigError(f"{path}: missing key {exc}") from exc


@dataclass
class RawRecord:
    """One harvested record; payload kept verbatim for provenance."""

    source: SourceRef
    payload: Any
    fetched_at: str
    kind: str = "fixture"


@dataclass
class FetchPage:
    records: list[RawRecord]
    next_cursor: str | None = None  # None means end

    def __iter__(self):
        return iter(self.records)


def utc_now_iso() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def token_env_name(source_name: str) -> str:
    return "OC_SOURCE_TOKEN_" + re.sub(r"[^A-Za-z0-9]+", "_", source_name).upper().strip("_")


@dataclass
class FetchContext:
    transport: Any = None
    offline: bool | None = None

    def is_offline(self) -> bool:
        return offline_mode_from_env() if self.offline is None else self.offline


def fetch_page(config: SourceConfig, cursor: str | None = None, *, context: FetchContext | None = None) -> FetchPage:
    """Fetch one page from the configured source.

    ``cursor=None`` starts from the beginning; a returned ``next_cursor``
    of None marks the end. Rate limits surface as ``RateLimited`` with the
    retry-after delay; scheduling is the caller's concern.
    """
    from . import fixture, sources

    context = context or FetchContext()
    if config.kind == "fixture":
        return fixture.fetch_fixture_page(config, cursor)
    if context.is_offline():
        from .transport import OfflineViolation

        raise OfflineViolation(f"offline mode set; cannot fetch from {config.kind} source")
    return sources.fetch_network_page(config, cursor, context)
