"""Controlled vocabularies for descriptor groups.

Terms are closed sets with alias maps; lookup is case-insensitive. The
builtin seeds cover the category labels used across the four catalogs and
can be overridden by ``vocab/<name>.json`` files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping


class VocabularyError(ValueError):
    """Raised for structurally invalid vocabulary definitions."""


@dataclass(frozen=True)
class ControlledVocabulary:
    name: str
    terms: frozenset[str]
    aliases: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        lowered = frozenset(t.strip().lower() for t in self.terms)
        object.__setattr__(self, "terms", lowered)
        norm_aliases = {}
        for alias, target in self.aliases.items():
            target_l = target.strip().lower()
            if target_l not in lowered:
                raise VocabularyError(
                    f"vocabulary {self.name!r}: alias {alias!r} maps to non-member {target!r}"
                )
            norm_aliases[alias.strip().lower()] = target_l
        object.__setattr__(self, "aliases", norm_aliases)

    def lookup(self, term: str) -> str | None:
        """Resolve ``term`` to its canonical form, or None if not a member."""
        t = term.strip().lower()
        if t in self.terms:
            return t
        return self.aliases.get(t)


def vocabulary_lookup(term: str, vocab: ControlledVocabulary) -> str | None:
    return vocab.lookup(term)


BUILTIN_VOCABULARIES: dict[str, ControlledVocabulary] = {
    "modalities": ControlledVocabulary(
        name="modalities",
        terms=frozenset(
            {"ground-level rgb", "aerial rgb", "point cloud", "synthetic", "thermal", "video"}
        ),
        aliases={
            "ground level rgb": "ground-level rgb",
            "rgb imagery": "ground-level rgb",
            "point clouds": "point cloud",
            "pointcloud": "point cloud",
            "lidar": "point cloud",
            "uav rgb": "aerial rgb",
            "drone rgb": "aerial rgb",
            "synthetic data": "synthetic",
            "thermal imagery": "thermal",
        },
    ),
    "tasks": ControlledVocabulary(
        name="tasks",
        terms=frozenset(
            {
                "object detection",
                "segmentation",
                "tracking",
                "pose estimation",
                "slam",
                "image captioning",
                "3d reconstruction",
                "other",
            }
        ),
        aliases={
            "object-detection": "object detection",
            "detection": "object detection",
            "semantic segmentation": "segmentation",
            "instance segmentation": "segmentation",
            "multi-object tracking": "tracking",
            "pose-estimation": "pose estimation",
            "simultaneous localization and mapping": "slam",
            "captioning": "image captioning",
            "3d-reconstruction": "3d reconstruction",
            "reconstruction": "3d reconstruction",
        },
    ),
    "phases": ControlledVocabulary(
        name="phases",
        terms=frozenset({"design", "preconstruction", "construction", "operations and maintenance"}),
        aliases={
            "pre-construction": "preconstruction",
            "operations & maintenance": "operations and maintenance",
            "o&m": "operations and maintenance",
            "maintenance": "operations and maintenance",
            "facility management": "operations and maintenance",
        },
    ),
    "oer_format": ControlledVocabulary(
        name="oer_format",
        terms=frozenset({"textbook", "slides"}),
        aliases={
            "book": "textbook",
            "open textbook": "textbook",
            "slide deck": "slides",
            "lecture slides": "slides",
        },
    ),
}


def load_vocabulary(path: Path | str) -> ControlledVocabulary:
    """Load one vocabulary from a ``vocab/<name>.json`` document."""
    raw = json.loads(Path(path).read_text("utf-8"))
    for key in ("name", "terms"):
        if key not in raw:
            raise VocabularyError(f"{path}: missing key {key!r}")
    if not isinstance(raw["terms"], list):
        raise VocabularyError(f"{path}: terms must be an array")
    aliases = raw.get("aliases", {})
    if not isinstance(aliases, dict):
        raise VocabularyError(f"{path}: aliases must be an object")
    return ControlledVocabulary(
        name=raw["name"], terms=frozenset(raw["terms"]), aliases=aliases
    )


def load_vocabularies(vocab_dir: Path | str | None = None) -> dict[str, ControlledVocabulary]:
    """Load every vocabulary file under ``vocab_dir``; builtins fill the gaps."""
    vocabularies = dict(BUILTIN_VOCABULARIES)
    if vocab_dir is not None and Path(vocab_dir).is_dir():
        for path in sorted(Path(vocab_dir).glob("*.json")):
            vocab = load_vocabulary(path)
            vocabularies[vocab.name] = vocab
    return vocabularies


def write_vocabulary_files(vocab_dir: Path | str, vocabularies: Iterable[ControlledVocabulary]) -> None:
    out = Path(vocab_dir)
    out.mkdir(parents=True, exist_ok=True)
    for vocab in vocabularies:
        doc = {
            "name": vocab.name,
            "terms": sorted(vocab.terms),
            "aliases": dict(sorted(vocab.aliases.items())),
        }
        (out / f"{vocab.name}.json").write_text(
            json.dumps(doc, indent=2, sort_keys=True) + "\n", "utf-8"
        )
