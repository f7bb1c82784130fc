"""Event log append/fold semantics, snapshots, and the single-writer contract."""

from __future__ import annotations

import json

import pytest

from opencatalog.schema import canonical_serialize
from opencatalog.store import (
    FileStore,
    IllegalTransition,
    ProvenanceEvent,
    UnknownId,
    WriteConflict,
    event_entry_payload,
    fold_events,
)
from tests.test_schema import make_entry


def ev(kind, payload=None, actor="system"):
    return ProvenanceEvent(entry_id="", kind=kind, actor=actor, payload=payload or {})


def submit_events(entry):
    return [
        ev("submitted", event_entry_payload(entry)),
        ev("validated", {"report": {"entry_id": entry.id, "findings": []}}),
    ]


@pytest.fixture
def store(tmp_path):
    with FileStore(tmp_path / "data", fsync=False) as s:
        yield s


class TestAppend:
    def test_first_event_gets_seq_1(self, store):
        entry = make_entry()
        seq = store.append_event(entry.id, ev("submitted", event_entry_payload(entry)))
        assert seq == 1

    def test_sequences_are_dense(self, store):
        entry = make_entry()
        store.append_event(entry.id, ev("submitted", event_entry_payload(entry)))
        seq = store.append_event(entry.id, ev("validated", {"report": {"findings": []}}))
        assert seq == 2
        assert [e.seq for e in store.events(entry.id)] == [1, 2]

    def test_second_writer_conflicts(self, tmp_path):
        entry = make_entry()
        with FileStore(tmp_path / "data", fsync=False) as first:
            first.append_event(entry.id, ev("submitted", event_entry_payload(entry)))
            second = FileStore(tmp_path / "data", fsync=False)
            with pytest.raises(WriteConflict):
                second.append_event(entry.id, ev("validated", {"report": {}}))

    def test_append_only_no_mutation(self, store):
        entry = make_entry()
        store.append_event(entry.id, ev("submitted", event_entry_payload(entry)))
        before = (store.data_dir / "log" / f"{entry.id}.ndjson").read_bytes()
        store.append_event(entry.id, ev("validated", {"report": {"findings": []}}))
        after = (store.data_dir / "log" / f"{entry.id}.ndjson").read_bytes()
        assert after.startswith(before)


class TestMaterialize:
    def test_submit_review_publish_fold(self, store):
        entry = make_entry()
        store.append_events(
            entry.id,
            submit_events(entry)
            + [
                ev("reviewed", {"decision": {"decision": "approve", "curator": "cur"}}),
                ev("published"),
            ],
        )
        assert store.materialize(entry.id).state == "published"

    def test_reject_fold(self, store):
        entry = make_entry()
        store.append_events(
            entry.id,
            [
                ev("submitted", event_entry_payload(entry)),
                ev("reviewed", {"decision": {"decision": "reject"}}),
            ],
        )
        assert store.materialize(entry.id).state == "rejected"

    def test_request_changes_returns_to_draft(self, store):
        entry = make_entry()
        store.append_events(
            entry.id,
            [
                ev("submitted", event_entry_payload(entry)),
                ev("reviewed", {"decision": {"decision": "request_changes"}}),
            ],
        )
        assert store.materialize(entry.id).state == "draft"

    def test_unknown_id(self, store):
        with pytest.raises(UnknownId):
            store.materialize("oc-ds-nope-00000000")

    def test_replay_into_fresh_store_is_identical(self, store, tmp_path):
        entry = make_entry()
        store.append_events(
            entry.id,
            submit_events(entry)
            + [ev("reviewed", {"decision": {"decision": "approve"}}), ev("published")],
        )
        original = canonical_serialize(store.materialize(entry.id))

        replica_dir = tmp_path / "replica"
        with FileStore(replica_dir, fsync=False) as replica:
            src = store.data_dir / "log" / f"{entry.id}.ndjson"
            (replica_dir / "log" / src.name).write_bytes(src.read_bytes())
            assert canonical_serialize(replica.materialize(entry.id)) == original

    def test_fold_is_pure_function_of_log(self, store):
        entry = make_entry()
        store.append_events(entry.id, submit_events(entry))
        events = store.events(entry.id)
        assert fold_events(events).entry == fold_events(events).entry


class TestTransitions:
    def test_publish_requires_pending(self, store):
        entry = make_entry()
        store.append_event(entry.id, ev("normalized", event_entry_payload(entry)))
        with pytest.raises(IllegalTransition):
            store.append_event(entry.id, ev("published"))

    def test_review_requires_pending(self, store):
        entry = make_entry()
        store.append_event(entry.id, ev("normalized", event_entry_payload(entry)))
        with pytest.raises(IllegalTransition):
            store.append_event(entry.id, ev("reviewed", {"decision": {"decision": "approve"}}))

    def test_retract_requires_published(self, store):
        entry = make_entry()
        store.append_events(entry.id, [ev("submitted", event_entry_payload(entry))])
        with pytest.raises(IllegalTransition):
            store.append_event(entry.id, ev("retracted"))

    def test_retract_published(self, store):
        entry = make_entry()
        store.append_events(
            entry.id,
            submit_events(entry)
            + [ev("reviewed", {"decision": {"decision": "approve"}}), ev("published")],
        )
        store.append_event(entry.id, ev("retracted"))
        assert store.materialize(entry.id).state == "retracted"

    def test_resubmit_after_publish_rejected(self, store):
        entry = make_entry()
        store.append_events(
            entry.id,
            submit_events(entry)
            + [ev("reviewed", {"decision": {"decision": "approve"}}), ev("published")],
        )
        with pytest.raises(IllegalTransition):
            store.append_event(entry.id, ev("submitted", event_entry_payload(entry)))


class TestListAndSnapshot:
    def publish(self, store, entry):
        store.append_events(
            entry.id,
            submit_events(entry)
            + [ev("reviewed", {"decision": {"decision": "approve"}}), ev("published")],
        )

    def test_list_filter_and_pagination(self, store):
        for i in range(5):
            entry = make_entry(
                id=f"oc-ds-item-{i}-0000000{i}", title=f"Item {i}", access_url=f"https://x.org/{i}"
            )
            self.publish(store, entry)
        draft = make_entry(id="oc-md-draft-00000009", catalog="model")
        store.append_event(draft.id, ev("normalized", event_entry_payload(draft)))

        page = store.list_entries(state="published")
        assert page.total == 5
        page = store.list_entries(state="published", offset=1, limit=2)
        assert page.total == 5 and len(page.items) == 2
        assert [e.id for e in page.items] == sorted(e.id for e in page.items)

    def test_limit_zero_returns_total_only(self, store):
        self.publish(store, make_entry())
        page = store.list_entries(state="published", limit=0)
        assert page.items == [] and page.total == 1

    def test_snapshot_counts_and_determinism(self, store, tmp_path):
        for i in range(3):
            self.publish(
                store,
                make_entry(
                    id=f"oc-ds-snap-{i}-0000000{i}", title=f"Snap {i}", access_url=f"https://x.org/s{i}"
                ),
            )
        out1 = tmp_path / "live1.ndjson"
        out2 = tmp_path / "live2.ndjson"
        live = store.snapshot_live("dataset", out1)
        assert live.count == 3
        assert len(out1.read_bytes().splitlines()) == 3
        store.snapshot_live("dataset", out2)
        assert out1.read_bytes() == out2.read_bytes()

    def test_snapshot_excludes_retracted(self, store):
        entry = make_entry()
        self.publish(store, entry)
        assert store.snapshot_live("dataset").count == 1
        store.append_event(entry.id, ev("retracted"))
        assert store.snapshot_live("dataset").count == 0
        # provenance survives removal
        assert len(store.events(entry.id)) == 5

    def test_empty_catalog_snapshot(self, store):
        live = store.snapshot_live("oer")
        assert live.count == 0
        assert store.live_path("oer").read_bytes() == b""

    def test_snapshot_lines_parse_canonically(self, store):
        entry = make_entry()
        self.publish(store, entry)
        live = store.snapshot_live("dataset")
        data = live.path.read_bytes().splitlines()[0]
        doc = json.loads(data)
        assert doc["state"] == "published"
        assert data == canonical_serialize(store.materialize(entry.id))
