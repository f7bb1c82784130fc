"""HTTP transport seam.

Connectors and the link checker issue requests only through a transport
object, so tests can substitute recordings and offline mode can be
enforced in one place. Redirects are never followed automatically; the
caller owns redirect policy.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import requests


class TransportFailure(Exception):
    """Connection-level failure (DNS, refused, reset, timeout)."""


class OfflineViolation(RuntimeError):
    """A network request was attempted while offline mode is set."""


def offline_mode_from_env() -> bool:
    return os.environ.get("OC_OFFLINE", "") not in ("", "0")


@dataclass
class TransportResponse:
    status: int
    headers: dict[str, str]
    body: bytes

    def header(self, name: str, default: str | None = None) -> str | None:
        for key, value in self.headers.items():
            if key.lower() == name.lower():
                return value
        return default


class HttpTransport:
    """Default transport backed by a shared requests session (thread-safe)."""

    def __init__(self, offline: bool | None = None, timeout: float = 10.0):
        self.offline = offline_mode_from_env() if offline is None else offline
        self.timeout = timeout
        self._session = requests.Session()

    def request(
        self,
        method: str,
        url: str,
        *,
        headers: dict[str, str] | None = None,
        timeout: float | None = None,
    ) -> TransportResponse:
        if self.offline:
            raise OfflineViolation(f"offline mode set; refusing {method} {url}")
        try:
            resp = self._session.request(
                method,
                url,
                headers=headers,
                timeout=timeout if timeout is not None else self.timeout,
                allow_redirects=False,
            )
        except requests.RequestException as exc:
            raise TransportFailure(str(exc)) from exc
        return TransportResponse(
            status=resp.status_code, headers=dict(resp.headers), body=resp.content
        )


@dataclass
class RecordingTransport:
    """Test transport: serves scripted responses and records every call.

    ``script`` maps ``(method, url)`` or just ``url`` to a TransportResponse,
    an Exception instance to raise, or a list consumed one element per call.
    """

    script: dict = field(default_factory=dict)
    calls: list = field(default_factory=list)
    offline: bool = False

    def request(self, method, url, *, headers=None, timeout=None) -> TransportResponse:
        self.calls.append((method, url))
        if self.offline:
            raise OfflineViolation(f"offline mode set; refusing {method} {url}")
        outcome = self.script.get((method, url), self.script.get(url))
        if isinstance(outcome, list):
            outcome = outcome.pop(0) if outcome else None
        if outcome is None:
            raise TransportFailure(f"no scripted response for {method} {url}")
        if isinstance(outcome, Exception):
            raise outcome
        return outcome


def json_response(status: int, body: bytes | str, headers: dict[str, str] | None = None) -> TransportResponse:
    if isinstance(body, str):
        body = body.encode("utf-8")
    return TransportResponse(status=status, headers=headers or {}, body=body)
