"""Clients for external metadata sources behind one paginated contract."""

from ..urls import MalformedUrl, canonicalize_url
from .base import (
    KINDS,
    NETWORK_KINDS,
    AuthRejected,
    ConfigError,
    ConnectorError,
    FetchContext,
    FetchPage,
    NetworkUnreachable,
    RateLimited,
    RawRecord,
    SourceConfig,
    fetch_page,
    token_env_name,
    utc_now_iso,
)
from .queries import EmptyCategory, build_query
from .transport import (
    HttpTransport,
    OfflineViolation,
    RecordingTransport,
    TransportFailure,
    TransportResponse,
    json_response,
    offline_mode_from_env,
)

__all__ = [
    "AuthRejected",
    "ConfigError",
    "ConnectorError",
    "EmptyCategory",
    "FetchContext",
    "FetchPage",
    "HttpTransport",
    "KINDS",
    "MalformedUrl",
    "NETWORK_KINDS",
    "NetworkUnreachable",
    "OfflineViolation",
    "RateLimited",
    "RawRecord",
    "RecordingTransport",
    "SourceConfig",
    "TransportFailure",
    "TransportResponse",
    "build_query",
    "canonicalize_url",
    "fetch_page",
    "json_response",
    "offline_mode_from_env",
    "token_env_name",
    "utc_now_iso",
]
