"""Controlled vocabulary membership and alias resolution."""

from __future__ import annotations

import pytest

from opencatalog.schema import (
    BUILTIN_VOCABULARIES,
    ControlledVocabulary,
    VocabularyError,
    load_vocabularies,
    load_vocabulary,
    vocabulary_lookup,
    write_vocabulary_files,
)

TASKS = BUILTIN_VOCABULARIES["tasks"]


def test_case_insensitive_term():
    assert vocabulary_lookup("Object Detection", TASKS) == "object detection"


def test_lowercase_member():
    assert vocabulary_lookup("slam", TASKS) == "slam"


def test_not_a_member_is_none():
    assert vocabulary_lookup("holography", TASKS) is None


def test_alias_resolution():
    assert vocabulary_lookup("Pose-Estimation", TASKS) == "pose estimation"
    assert vocabulary_lookup("O&M", BUILTIN_VOCABULARIES["phases"]) == "operations and maintenance"


def test_alias_must_target_member():
    with pytest.raises(VocabularyError):
        ControlledVocabulary(name="bad", terms=frozenset({"a"}), aliases={"x": "missing"})


def test_builtin_groups_present():
    assert set(BUILTIN_VOCABULARIES) == {"modalities", "tasks", "phases", "oer_format"}
    assert "ground-level rgb" in BUILTIN_VOCABULARIES["modalities"].terms
    assert "textbook" in BUILTIN_VOCABULARIES["oer_format"].terms


def test_file_round_trip(tmp_path):
    write_vocabulary_files(tmp_path, BUILTIN_VOCABULARIES.values())
    loaded = load_vocabulary(tmp_path / "tasks.json")
    assert loaded.terms == TASKS.terms
    assert loaded.aliases == TASKS.aliases
    merged = load_vocabularies(tmp_path)
    assert set(merged) == set(BUILTIN_VOCABULARIES)


def test_load_vocabularies_falls_back_to_builtins(tmp_path):
    assert load_vocabularies(tmp_path / "missing") == BUILTIN_VOCABULARIES
