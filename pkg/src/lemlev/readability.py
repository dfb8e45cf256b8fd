"""Lemma-level readability grading: five graded levels plus ProperNoun/Unknown.

Levels 1-5 follow the grade ladder (1 easiest, 5 hardest). Proper nouns are
graded as their own class regardless of lexicon content, and anything the
lexicon cannot vouch for is Unknown rather than silently hard.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from pathlib import Path

from .errors import LevelOutOfRangeError, MalformedRowError
from .morphdb import PROPER_NOUN_POS, read_tsv_rows


class ReadabilityLevel(enum.Enum):
    L1 = 1
    L2 = 2
    L3 = 3
    L4 = 4
    L5 = 5
    PROPER_NOUN = "proper_noun"
    UNKNOWN = "unknown"

    @property
    def is_graded(self) -> bool:
        return isinstance(self.value, int)

    @property
    def token(self) -> str:
        """Stable serialization token: "1".."5", "proper_noun", "unknown"."""
        return str(self.value)

    @property
    def sort_key(self) -> int:
        # Graded levels order by difficulty; the unordered classes sort
        # after them (ProperNoun, then Unknown) purely for determinism.
        if self.is_graded:
            return self.value
        return 6 if self is ReadabilityLevel.PROPER_NOUN else 7

    @classmethod
    def from_int(cls, level: int) -> "ReadabilityLevel":
        if not 1 <= level <= 5:
            raise ValueError(f"graded level must be 1..5, got {level}")
        return cls(level)

    @classmethod
    def from_token(cls, token: str) -> "ReadabilityLevel":
        for member in cls:
            if member.token == token:
                return member
        raise ValueError(f"unknown level token {token!r}")


GRADED_LEVELS = tuple(ReadabilityLevel.from_int(i) for i in range(1, 6))
ALL_LEVELS = GRADED_LEVELS + (ReadabilityLevel.PROPER_NOUN, ReadabilityLevel.UNKNOWN)


@dataclass(frozen=True)
class ReadabilityLexicon:
    """(lemma, pos) -> graded level. Immutable after load."""

    levels: dict[tuple[str, str], ReadabilityLevel] = field(default_factory=dict)

    def get(self, key: tuple[str, str]) -> ReadabilityLevel | None:
        return self.levels.get(key)

    def level_for(self, lemma: str, pos: str) -> ReadabilityLevel:
        """Grade a (lemma, pos) pair; proper nouns win over lexicon rows."""
        if pos == PROPER_NOUN_POS:
            return ReadabilityLevel.PROPER_NOUN
        return self.levels.get((lemma, pos), ReadabilityLevel.UNKNOWN)

    def __len__(self) -> int:
        return len(self.levels)


def load_lexicon(path) -> ReadabilityLexicon:
    """Load lexicon.tsv (lemma, pos, level with level in 1..5)."""
    path = Path(path)
    levels: dict[tuple[str, str], ReadabilityLevel] = {}
    for lineno, (lemma, pos, value) in read_tsv_rows(path, 3):
        try:
            n = int(value)
        except ValueError:
            raise LevelOutOfRangeError(path.name, lineno, value) from None
        if not 1 <= n <= 5:
            raise LevelOutOfRangeError(path.name, lineno, n)
        key = (lemma, pos)
        level = ReadabilityLevel.from_int(n)
        if levels.get(key, level) is not level:
            # One level per (lemma, pos): sense-level rows are not a thing here.
            raise MalformedRowError(path.name, lineno, f"conflicting level for {lemma}/{pos}")
        levels[key] = level
    return ReadabilityLexicon(levels)


def level_of(analysis, lex: ReadabilityLexicon) -> ReadabilityLevel:
    """Grade a chosen analysis; None (out of vocabulary) grades Unknown."""
    if analysis is None:
        return ReadabilityLevel.UNKNOWN
    return lex.level_for(analysis.lemma, analysis.pos)
