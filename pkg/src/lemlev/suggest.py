"""Graded substitution candidates: synonyms, antonyms, hypernyms, hyponyms.

The relation store is a flat directed edge list; each suggested target is
graded through the readability lexicon so a simplification workflow can
pick easier alternatives first.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from pathlib import Path

from .errors import UnknownRelationError
from .morphdb import read_tsv_rows
from .readability import ReadabilityLevel, ReadabilityLexicon


class Relation(enum.Enum):
    SYNONYM = "synonym"
    ANTONYM = "antonym"
    HYPERNYM = "hypernym"
    HYPONYM = "hyponym"


@dataclass(frozen=True)
class Suggestion:
    lemma: str
    pos: str
    relation: Relation
    level: ReadabilityLevel


@dataclass(frozen=True)
class RelationDB:
    """(lemma, pos) -> outgoing edges per relation. Immutable after load."""

    edges: dict[tuple[str, str], dict[Relation, tuple[tuple[str, str], ...]]] = field(
        default_factory=dict
    )

    def targets(self, lemma: str, pos: str, relation: Relation) -> tuple[tuple[str, str], ...]:
        return self.edges.get((lemma, pos), {}).get(relation, ())

    def __len__(self) -> int:
        """Total number of stored edges."""
        return sum(
            len(targets) for by_rel in self.edges.values() for targets in by_rel.values()
        )


def load_relations(path) -> RelationDB:
    """Load relations.tsv (source_lemma, source_pos, relation, target_lemma, target_pos)."""
    path = Path(path)
    if not path.is_file():
        return RelationDB()
    edges: dict[tuple[str, str], dict[Relation, list[tuple[str, str]]]] = {}
    for lineno, (src_lemma, src_pos, rel_name, tgt_lemma, tgt_pos) in read_tsv_rows(path, 5):
        try:
            relation = Relation(rel_name)
        except ValueError:
            raise UnknownRelationError(path.name, lineno, rel_name) from None
        source = (src_lemma, src_pos)
        target = (tgt_lemma, tgt_pos)
        if relation is Relation.SYNONYM and target == source:
            continue  # no self-loops
        bucket = edges.setdefault(source, {}).setdefault(relation, [])
        if target not in bucket:
            bucket.append(target)
    return RelationDB(
        {
            source: {rel: tuple(targets) for rel, targets in by_rel.items()}
            for source, by_rel in edges.items()
        }
    )


def related(
    lemma: str,
    pos: str,
    db: RelationDB,
    lex: ReadabilityLexicon,
    max_level: int | None = None,
) -> dict[Relation, list[Suggestion]]:
    """Graded suggestions per relation, easiest first.

    Within a relation group the order is (level, lemma) ascending, with
    ProperNoun and Unknown after the graded levels. ``max_level`` keeps
    only graded targets at or below that level.
    """
    groups: dict[Relation, list[Suggestion]] = {}
    for relation in Relation:
        suggestions = []
        for tgt_lemma, tgt_pos in db.targets(lemma, pos, relation):
            if relation is Relation.SYNONYM and (tgt_lemma, tgt_pos) == (lemma, pos):
                continue
            level = lex.level_for(tgt_lemma, tgt_pos)
            if max_level is not None and (not level.is_graded or level.value > max_level):
                continue
            suggestions.append(Suggestion(tgt_lemma, tgt_pos, relation, level))
        suggestions.sort(key=lambda s: (s.level.sort_key, s.lemma, s.pos))
        groups[relation] = suggestions
    return groups
