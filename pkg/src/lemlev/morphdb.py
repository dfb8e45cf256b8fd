"""Load and validate the three-lexicon + three-compatibility-table morphology database.

On-disk format: six UTF-8 TSV files in one directory, no BOM, ``#`` at line
start is a comment, blank lines ignored, duplicate identical rows deduplicated.

    prefixes.tsv / suffixes.tsv   lookup, diac, cat, feats
    stems.tsv                     lookup, diac, cat, lemma, pos, gloss
    compat_ab.tsv                 prefix_cat, stem_cat
    compat_bc.tsv                 stem_cat, suffix_cat
    compat_ac.tsv                 prefix_cat, suffix_cat

An optional ``limits.tsv`` (key, value) overrides the affix length bounds
``max_prefix_len`` (default 4) and ``max_suffix_len`` (default 6).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import DanglingCategoryError, MalformedRowError, MissingFileError

REQUIRED_FILES = (
    "prefixes.tsv",
    "suffixes.tsv",
    "stems.tsv",
    "compat_ab.tsv",
    "compat_bc.tsv",
    "compat_ac.tsv",
)

DEFAULT_MAX_PREFIX_LEN = 4
DEFAULT_MAX_SUFFIX_LEN = 6

PROPER_NOUN_POS = "noun_prop"


@dataclass(frozen=True)
class AffixEntry:
    lookup: str  # undiacritized match key; "" for the null affix
    diac: str
    cat: str
    feats: str = ""


@dataclass(frozen=True)
class StemEntry:
    lookup: str
    diac: str
    cat: str
    lemma: str  # diacritized citation form
    pos: str
    gloss: str = ""


@dataclass(frozen=True)
class Limits:
    max_prefix_len: int = DEFAULT_MAX_PREFIX_LEN
    max_suffix_len: int = DEFAULT_MAX_SUFFIX_LEN


@dataclass(frozen=True)
class MorphDB:
    """Immutable after load; safe to share across threads."""

    prefixes: dict[str, tuple[AffixEntry, ...]]
    stems: dict[str, tuple[StemEntry, ...]]
    suffixes: dict[str, tuple[AffixEntry, ...]]
    compat_ab: frozenset[tuple[str, str]]
    compat_bc: frozenset[tuple[str, str]]
    compat_ac: frozenset[tuple[str, str]]
    limits: Limits = field(default_factory=Limits)

    def prefix_cats(self) -> set[str]:
        return {e.cat for entries in self.prefixes.values() for e in entries}

    def stem_cats(self) -> set[str]:
        return {e.cat for entries in self.stems.values() for e in entries}

    def suffix_cats(self) -> set[str]:
        return {e.cat for entries in self.suffixes.values() for e in entries}

    def counts(self) -> dict[str, int]:
        """Entry counts per table, for health reporting."""
        return {
            "prefixes": sum(len(v) for v in self.prefixes.values()),
            "stems": sum(len(v) for v in self.stems.values()),
            "suffixes": sum(len(v) for v in self.suffixes.values()),
            "compat_ab": len(self.compat_ab),
            "compat_bc": len(self.compat_bc),
            "compat_ac": len(self.compat_ac),
        }


def read_tsv_rows(path, n_cols: int) -> list[tuple[int, tuple[str, ...]]]:
    """Read a TSV file into deduplicated (lineno, cells) pairs.

    Enforces the column count, rejects a BOM, skips blank and ``#`` comment
    lines. Shared by every TSV-backed resource loader.
    """
    path = Path(path)
    rows: list[tuple[int, tuple[str, ...]]] = []
    seen: set[tuple] = set()
    with open(path, encoding="utf-8", newline="") as fh:
        for lineno, line in enumerate(fh, start=1):
            if lineno == 1 and line.startswith("﻿"):
                raise MalformedRowError(path.name, lineno, "BOM not allowed")
            line = line.rstrip("\n").rstrip("\r")
            if not line.strip() or line.startswith("#"):
                continue
            cells = tuple(line.split("\t"))
            if len(cells) != n_cols:
                raise MalformedRowError(
                    path.name, lineno, f"expected {n_cols} columns, got {len(cells)}"
                )
            if cells not in seen:
                seen.add(cells)
                rows.append((lineno, cells))
    return rows


def _read_rows(path: Path, n_cols: int) -> list[tuple]:
    return [cells for _, cells in read_tsv_rows(path, n_cols)]


def _group_affixes(rows) -> dict[str, tuple[AffixEntry, ...]]:
    grouped: dict[str, list[AffixEntry]] = {}
    for lookup, diac, cat, feats in rows:
        grouped.setdefault(lookup, []).append(AffixEntry(lookup, diac, cat, feats))
    return {k: tuple(v) for k, v in grouped.items()}


def _group_stems(rows) -> dict[str, tuple[StemEntry, ...]]:
    grouped: dict[str, list[StemEntry]] = {}
    for lookup, diac, cat, lemma, pos, gloss in rows:
        grouped.setdefault(lookup, []).append(
            StemEntry(lookup, diac, cat, lemma, pos, gloss)
        )
    return {k: tuple(v) for k, v in grouped.items()}


def _read_limits(path: Path) -> Limits:
    values = {"max_prefix_len": DEFAULT_MAX_PREFIX_LEN, "max_suffix_len": DEFAULT_MAX_SUFFIX_LEN}
    for lineno, (key, value) in read_tsv_rows(path, 2):
        if key not in values:
            raise MalformedRowError(path.name, lineno, f"unknown limit {key!r}")
        try:
            n = int(value)
        except ValueError:
            raise MalformedRowError(path.name, lineno, f"non-integer limit {value!r}") from None
        if n < 0:
            raise MalformedRowError(path.name, lineno, "limit must be >= 0")
        values[key] = n
    return Limits(**values)


def load_db(path) -> MorphDB:
    """Load and validate a morphology database directory.

    Raises MissingFileError, MalformedRowError, or DanglingCategoryError.
    """
    root = Path(path)
    for name in REQUIRED_FILES:
        if not (root / name).is_file():
            raise MissingFileError(root / name)

    prefixes = _group_affixes(_read_rows(root / "prefixes.tsv", 4))
    suffixes = _group_affixes(_read_rows(root / "suffixes.tsv", 4))
    stems = _group_stems(_read_rows(root / "stems.tsv", 6))

    compat = {}
    for name in ("compat_ab", "compat_bc", "compat_ac"):
        compat[name] = frozenset(_read_rows(root / f"{name}.tsv", 2))

    limits = Limits()
    if (root / "limits.tsv").is_file():
        limits = _read_limits(root / "limits.tsv")

    db = MorphDB(
        prefixes=prefixes,
        stems=stems,
        suffixes=suffixes,
        compat_ab=compat["compat_ab"],
        compat_bc=compat["compat_bc"],
        compat_ac=compat["compat_ac"],
        limits=limits,
    )
    _check_categories(db)
    return db


def _check_categories(db: MorphDB) -> None:
    pc, sc, xc = db.prefix_cats(), db.stem_cats(), db.suffix_cats()
    checks = (
        ("compat_ab.tsv", db.compat_ab, pc, sc),
        ("compat_bc.tsv", db.compat_bc, sc, xc),
        ("compat_ac.tsv", db.compat_ac, pc, xc),
    )
    for fname, pairs, left_cats, right_cats in checks:
        for left, right in sorted(pairs):
            if left not in left_cats:
                raise DanglingCategoryError(left, fname)
            if right not in right_cats:
                raise DanglingCategoryError(right, fname)


def validate(db: MorphDB, lexicon=None) -> list[str]:
    """Report non-fatal consistency warnings.

    With a readability lexicon wired in, flags stems whose (lemma, pos)
    never appears in it (proper-noun stems are exempt: they grade to the
    ProperNoun class without a lexicon row).
    """
    warnings: list[str] = []

    if "" not in db.prefixes:
        warnings.append("no null prefix entry: bare stems need one to be analyzable")
    if "" not in db.suffixes:
        warnings.append("no null suffix entry: bare stems need one to be analyzable")

    used = {
        "prefix": {c for pair in db.compat_ab for c in (pair[0],)}
        | {c for pair in db.compat_ac for c in (pair[0],)},
        "stem": {pair[1] for pair in db.compat_ab} | {pair[0] for pair in db.compat_bc},
        "suffix": {pair[1] for pair in db.compat_bc} | {pair[1] for pair in db.compat_ac},
    }
    for side, cats in (
        ("prefix", db.prefix_cats()),
        ("stem", db.stem_cats()),
        ("suffix", db.suffix_cats()),
    ):
        for cat in sorted(cats - used[side]):
            warnings.append(f"{side} category {cat!r} is never used by any compat pair")

    if lexicon is not None:
        seen: set[tuple[str, str]] = set()
        for entries in db.stems.values():
            for e in entries:
                key = (e.lemma, e.pos)
                if e.pos == PROPER_NOUN_POS or key in seen:
                    continue
                seen.add(key)
                if lexicon.get(key) is None:
                    warnings.append(
                        f"stem lemma {e.lemma!r} ({e.pos}) has no readability lexicon row"
                    )
    return warnings
