"""Schema layer: title normalization, id minting, canonical serialization."""

from __future__ import annotations

import hashlib
import json
import random
import string

import pytest
from hypothesis import given, strategies as st

from opencatalog.schema import (
    CatalogEntry,
    ContributorRef,
    DomainDescriptors,
    InvalidIdInput,
    LinkStatus,
    MalformedJson,
    MissingRequiredKey,
    SourceRef,
    TypeMismatch,
    canonical_serialize,
    is_valid_identifier,
    mint_identifier,
    normalize_title,
    parse_entry,
)


def make_entry(**overrides) -> CatalogEntry:
    base = dict(
        id="oc-ds-sample-entry-0123abcd",
        catalog="dataset",
        title="Sample Entry",
        access_url="https://data.example.org/sample",
        source=SourceRef(repository="seed", record_id="s-1"),
        state="draft",
        description="A sample record.",
        contributors=[ContributorRef(name="A. Author", affiliation="Example Institute")],
        license="CC-BY-4.0",
        year=2024,
        descriptors=DomainDescriptors(modalities={"ground-level rgb"}),
    )
    base.update(overrides)
    return CatalogEntry(**base)


class TestNormalizeTitle:
    def test_collapses_punctuation_runs(self):
        assert normalize_title("  Multi-Worker 3D Pose!! ") == "multi worker 3d pose"

    def test_no_separators(self):
        assert normalize_title("MultiWorker3DPose") == "multiworker3dpose"

    def test_unicode_dash_and_parens(self):
        assert normalize_title("Construction—Site   Safety (v2)") == "construction site safety v2"

    def test_empty(self):
        assert normalize_title("") == ""

    @given(st.text(max_size=80))
    def test_idempotent(self, text):
        once = normalize_title(text)
        assert normalize_title(once) == once


class TestMintIdentifier:
    def test_deterministic(self):
        args = ("dataset", "Crane Pose Dataset", "B. Builder", "https://github.com/x/crane")
        assert mint_identifier(*args) == mint_identifier(*args)

    def test_known_hash(self):
        # sha256("dataset|multiworker3dpose|a. author|https://github.com/x/mwp")[:8]
        entry_id = mint_identifier(
            "dataset", "MultiWorker3DPose", "A. Author", "https://github.com/x/mwp"
        )
        assert entry_id == "oc-ds-multiworker3dpose-ba5b1aab"
        expected = hashlib.sha256(
            b"dataset|multiworker3dpose|a. author|https://github.com/x/mwp"
        ).hexdigest()[:8]
        assert entry_id.endswith(expected)

    def test_different_source_url_changes_hash(self):
        a = mint_identifier("dataset", "MultiWorker3DPose", "A. Author", "https://github.com/x/mwp")
        b = mint_identifier("dataset", "MultiWorker3DPose", "A. Author", "https://gitlab.com/x/mwp")
        assert a != b
        assert a.rsplit("-", 1)[0] == b.rsplit("-", 1)[0]  # same prefix+slug

    def test_url_canonicalized_before_hashing(self):
        a = mint_identifier("model", "Crane Net", "C. Lee", "https://github.com/x/crane")
        b = mint_identifier("model", "Crane Net", "C. Lee", "http://www.github.com/x/crane.git/")
        assert a == b

    def test_catalog_codes(self):
        for catalog, code in [("dataset", "ds"), ("model", "md"), ("use_case", "uc"), ("oer", "er")]:
            entry_id = mint_identifier(catalog, "Some Title", "A", "https://example.org/r")
            assert entry_id.startswith(f"oc-{code}-some-title-")
            assert is_valid_identifier(entry_id)

    def test_slug_truncated_to_40(self):
        entry_id = mint_identifier("oer", "word " * 30, "A", "https://example.org/r")
        slug = entry_id.split("-", 2)[2].rsplit("-", 1)[0]
        assert 1 <= len(slug) <= 40
        assert is_valid_identifier(entry_id)

    def test_empty_title_rejected(self):
        with pytest.raises(InvalidIdInput):
            mint_identifier("dataset", "   ", "A", "https://example.org/r")

    def test_malformed_url_rejected(self):
        with pytest.raises(InvalidIdInput):
            mint_identifier("dataset", "Title", "A", "not a url")

    def test_unknown_catalog_rejected(self):
        with pytest.raises(InvalidIdInput):
            mint_identifier("software", "Title", "A", "https://example.org/r")

    def test_uniqueness_over_random_tuples(self):
        # Id uniqueness invariant: distinct inputs yield pairwise distinct ids.
        rng = random.Random(177)
        catalogs = ("dataset", "model", "use_case", "oer")
        seen = {}
        for i in range(1000):
            title = " ".join(
                "".join(rng.choices(string.ascii_lowercase, k=rng.randint(3, 9)))
                for _ in range(rng.randint(1, 5))
            ) + f" {i}"
            key = (
                rng.choice(catalogs),
                title,
                f"{rng.choice(string.ascii_uppercase)}. Author",
                f"https://example.org/r/{i}",
            )
            entry_id = mint_identifier(*key)
            assert entry_id not in seen, f"collision between {key} and {seen[entry_id]}"
            seen[entry_id] = key


class TestCanonicalSerialize:
    def test_round_trip_fixed_point(self):
        entry = make_entry()
        data = canonical_serialize(entry)
        assert canonical_serialize(parse_entry(data)) == data

    def test_set_order_independent(self):
        a = make_entry(descriptors=DomainDescriptors(modalities={"thermal", "video"}))
        b = make_entry(descriptors=DomainDescriptors(modalities={"video", "thermal"}))
        assert canonical_serialize(a) == canonical_serialize(b)

    def test_absent_year_omitted(self):
        data = canonical_serialize(make_entry(year=None))
        assert b'"year"' not in data
        assert parse_entry(data).year is None

    def test_keys_sorted_no_whitespace(self):
        data = canonical_serialize(make_entry())
        doc = json.loads(data)
        assert list(doc.keys()) == sorted(doc.keys())
        assert b": " not in data and b", " not in data

    def test_link_status_round_trip(self):
        status = LinkStatus(
            url="https://example.org/r",
            outcome="valid",
            checked_at="2025-12-01T00:00:00Z",
            attempts=1,
            http_status=200,
        )
        entry = make_entry(link_status=status)
        parsed = parse_entry(canonical_serialize(entry))
        assert parsed.link_status == status


class TestParseEntry:
    def test_missing_title(self):
        doc = json.loads(canonical_serialize(make_entry()))
        del doc["title"]
        with pytest.raises(MissingRequiredKey) as err:
            parse_entry(json.dumps(doc))
        assert err.value.key == "title"

    def test_malformed_json(self):
        with pytest.raises(MalformedJson):
            parse_entry(b"{not json")

    def test_type_mismatch_names_key(self):
        doc = json.loads(canonical_serialize(make_entry()))
        doc["year"] = "2024"
        with pytest.raises(TypeMismatch) as err:
            parse_entry(json.dumps(doc))
        assert err.value.key == "year"

    def test_bad_enum_value(self):
        doc = json.loads(canonical_serialize(make_entry()))
        doc["state"] = "limbo"
        with pytest.raises(TypeMismatch):
            parse_entry(json.dumps(doc))

    def test_unknown_key_preserved_in_extras(self):
        doc = json.loads(canonical_serialize(make_entry()))
        doc["doi"] = "10.1234/abcd"
        parsed = parse_entry(json.dumps(doc))
        assert parsed.extras == {"doi": "10.1234/abcd"}
        assert b'"doi":"10.1234/abcd"' in canonical_serialize(parsed)

    def test_non_object_rejected(self):
        with pytest.raises(TypeMismatch):
            parse_entry(b"[1,2,3]")
