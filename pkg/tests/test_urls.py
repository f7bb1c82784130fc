"""URL canonicalization rules and idempotence."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from opencatalog.urls import MalformedUrl, canonicalize_url


def test_full_rule_application():
    assert (
        canonicalize_url("http://www.github.com/X/Repo.git/")
        == "https://github.com/X/Repo"
    )


def test_already_canonical():
    assert canonicalize_url("https://github.com/X/Repo") == "https://github.com/X/Repo"


def test_not_a_url():
    with pytest.raises(MalformedUrl):
        canonicalize_url("not a url")


def test_missing_host():
    with pytest.raises(MalformedUrl):
        canonicalize_url("mailto:someone@example.org")


def test_fragment_and_utm_stripped():
    assert (
        canonicalize_url("https://example.org/data?utm_source=x&ref=2&utm_medium=y#top")
        == "https://example.org/data?ref=2"
    )


def test_path_case_preserved():
    assert canonicalize_url("HTTPS://EXAMPLE.ORG/Data/Set") == "https://example.org/Data/Set"


def test_repeated_www_stripped():
    assert canonicalize_url("https://www.www.example.org/a") == "https://example.org/a"


def test_git_suffix_then_slash():
    assert canonicalize_url("https://github.com/x/r.git") == "https://github.com/x/r"
    assert canonicalize_url("https://github.com/x/r/.git/") == "https://github.com/x/r"


_hosts = st.from_regex(r"(www\.)?[a-z]{1,8}(\.[a-z]{2,6}){1,2}", fullmatch=True)
_paths = st.from_regex(r"(/[A-Za-z0-9._-]{0,8}){0,4}(\.git)?/?", fullmatch=True)
_queries = st.from_regex(r"((utm_[a-z]{1,5}|[a-z]{1,5})=[A-Za-z0-9]{0,5}&?){0,3}", fullmatch=True)


@given(
    scheme=st.sampled_from(["http", "https", "HTTP"]),
    host=_hosts,
    path=_paths,
    query=_queries,
    fragment=st.from_regex(r"[a-z0-9]{0,6}", fullmatch=True),
)
def test_idempotent(scheme, host, path, query, fragment):
    url = f"{scheme}://{host}{path}"
    if query:
        url += f"?{query}"
    if fragment:
        url += f"#{fragment}"
    once = canonicalize_url(url)
    assert canonicalize_url(once) == once
