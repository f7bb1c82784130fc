"""Canonical form for resource URLs.

Repository equality during deduplication and identifier minting both
depend on one canonical spelling per externally hosted resource.
"""

from __future__ import annotations

from urllib.parse import parse_qsl, urlencode, urlsplit, urlunsplit


class MalformedUrl(ValueError):
    """The input string is not an absolute URL."""


def canonicalize_url(url: str) -> str:
    """Return the canonical spelling of ``url``.

    Rules: lowercase scheme and host, upgrade http to https, strip a
    leading ``www.``, trailing slashes, a trailing ``.git``, the fragment,
    and ``utm_*`` tracking query parameters. Path case is preserved.
    Idempotent: the strip rules are applied to a fixed point.
    """
    if not isinstance(url, str) or not url.strip():
        raise MalformedUrl("empty or non-string url")
    parts = urlsplit(url.strip())
    scheme = parts.scheme.lower()
    if not scheme:
        raise MalformedUrl(f"missing scheme: {url!r}")
    if scheme == "http":
        scheme = "https"

    userinfo, sep, hostport = parts.netloc.rpartition("@")
    hostport = hostport.lower()
    while hostport.startswith("www."):
        hostport = hostport[4:]
    if not hostport:
        raise MalformedUrl(f"missing host: {url!r}")
    netloc = userinfo + sep + hostport

    path = parts.path
    while True:
        trimmed = path.rstrip("/")
        if trimmed.endswith(".git"):
            trimmed = trimmed[: -len(".git")]
        if trimmed == path:
            break
        path = trimmed

    query_pairs = [
        (k, v)
        for k, v in parse_qsl(parts.query, keep_blank_values=True)
        if not k.startswith("utm_")
    ]
    query = urlencode(query_pairs)

    return urlunsplit((scheme, netloc, path, query, ""))
