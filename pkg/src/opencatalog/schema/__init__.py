"""Metadata schema: record types, identifiers, canonical serialization,
and controlled vocabularies."""

from .canonical import (
    EntryParseError,
    MalformedJson,
    MissingRequiredKey,
    TypeMismatch,
    canonical_json_bytes,
    canonical_serialize,
    entry_from_dict,
    entry_to_dict,
    parse_entry,
)
from .entry import (
    CATALOGS,
    FREE_GROUPS,
    GROUPS_BY_CATALOG,
    LINK_OUTCOMES,
    SCHEMA_VERSION,
    STATES,
    CatalogEntry,
    ContributorRef,
    DomainDescriptors,
    LinkStatus,
    SourceRef,
)
from .ids import (
    CATALOG_CODES,
    ID_PATTERN,
    InvalidIdInput,
    is_valid_identifier,
    mint_identifier,
    normalize_title,
    title_slug,
)
from .vocab import (
    BUILTIN_VOCABULARIES,
    ControlledVocabulary,
    VocabularyError,
    load_vocabularies,
    load_vocabulary,
    vocabulary_lookup,
    write_vocabulary_files,
)

__all__ = [
    "CATALOGS",
    "CATALOG_CODES",
    "BUILTIN_VOCABULARIES",
    "CatalogEntry",
    "ContributorRef",
    "ControlledVocabulary",
    "DomainDescriptors",
    "EntryParseError",
    "FREE_GROUPS",
    "GROUPS_BY_CATALOG",
    "ID_PATTERN",
    "InvalidIdInput",
    "LINK_OUTCOMES",
    "LinkStatus",
    "MalformedJson",
    "MissingRequiredKey",
    "SCHEMA_VERSION",
    "STATES",
    "SourceRef",
    "TypeMismatch",
    "VocabularyError",
    "canonical_json_bytes",
    "canonical_serialize",
    "entry_from_dict",
    "entry_to_dict",
    "is_valid_identifier",
    "load_vocabularies",
    "load_vocabulary",
    "mint_identifier",
    "normalize_title",
    "parse_entry",
    "title_slug",
    "vocabulary_lookup",
    "write_vocabulary_files",
]
