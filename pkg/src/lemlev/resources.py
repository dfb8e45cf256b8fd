"""Resource bundle loading and service configuration.

A resource directory holds everything the engine needs:

    <dir>/morphdb/     six TSV tables (+ optional limits.tsv)
    <dir>/lexicon.tsv  (lemma, pos) -> level 1..5
    <dir>/freq.tsv     (lemma, pos) -> corpus count   [optional]
    <dir>/relations.tsv lexical relation edges         [optional]

The package ships a small built-in bundle used when no directory is given;
the LEMLEV_RESOURCES environment variable overrides that default.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from .analyzer import FreqTable, load_freq
from .errors import MissingFileError
from .morphdb import MorphDB, load_db
from .readability import ReadabilityLexicon, load_lexicon
from .report import DEFAULT_PALETTE
from .suggest import RelationDB, load_relations
from .textproc import LOOKUP_PROFILE, PROFILES, NormProfile

ENV_RESOURCES = "LEMLEV_RESOURCES"


def default_resource_dir() -> Path:
    """LEMLEV_RESOURCES if set, else the bundle shipped with the package."""
    env = os.environ.get(ENV_RESOURCES)
    if env:
        return Path(env)
    return Path(__file__).parent / "data"


@dataclass(frozen=True)
class Resources:
    """Immutable engine state shared by CLI and service."""

    root: Path
    db: MorphDB
    lex: ReadabilityLexicon
    freq: FreqTable
    relations: RelationDB

    def counts(self) -> dict[str, int]:
        out = dict(self.db.counts())
        out["lexicon"] = len(self.lex.levels)
        out["freq"] = len(self.freq.counts)
        out["relations"] = len(self.relations)
        return out


def load_resources(path: str | Path | None = None) -> Resources:
    """Load a full bundle; freq and relations default to empty when absent."""
    root = Path(path) if path is not None else default_resource_dir()
    if not root.is_dir():
        raise MissingFileError(root)
    db = load_db(root / "morphdb")
    lex = load_lexicon(root / "lexicon.tsv")
    freq = load_freq(root / "freq.tsv")
    relations = load_relations(root / "relations.tsv")
    return Resources(root=root, db=db, lex=lex, freq=freq, relations=relations)


@dataclass(frozen=True)
class ServiceConfig:
    host: str = "127.0.0.1"
    port: int = 8000
    resource_dir: Path | None = None
    profile_name: str = "default"
    palette: dict[str, str] = field(default_factory=dict)

    @property
    def profile(self) -> NormProfile:
        return PROFILES.get(self.profile_name, LOOKUP_PROFILE)

    def full_palette(self) -> dict[str, str]:
        return {**DEFAULT_PALETTE, **self.palette}


def load_config(path: str | Path) -> ServiceConfig:
    """Read a JSON config file; unknown keys are rejected to catch typos."""
    path = Path(path)
    if not path.is_file():
        raise MissingFileError(path)
    raw = json.loads(path.read_text(encoding="utf-8"))
    allowed = {"host", "port", "resources", "profile", "palette"}
    extra = set(raw) - allowed
    if extra:
        raise ValueError(f"unknown config keys: {', '.join(sorted(extra))}")
    return ServiceConfig(
        host=raw.get("host", "127.0.0.1"),
        port=int(raw.get("port", 8000)),
        resource_dir=Path(raw["resources"]) if "resources" in raw else None,
        profile_name=raw.get("profile", "default"),
        palette=dict(raw.get("palette", {})),
    )
