"""Word-level Arabic readability annotation engine."""

from .analyzer import Analysis, FreqTable, analyze, most_likely, segmentations
from .errors import (
    DanglingCategoryError,
    LevelOutOfRangeError,
    MalformedRowError,
    MissingFileError,
    ResourceError,
    UnknownRelationError,
    UnsupportedFormatError,
)
from .markup import (
    DigitScript,
    MarkupMode,
    MarkupSpan,
    SpanStyle,
    apply_mode,
    assign_level,
    emit_markup,
    parse_markup,
)
from .morphdb import MorphDB, load_db
from .readability import (
    ReadabilityLevel,
    ReadabilityLexicon,
    level_of,
    load_lexicon,
)
from .report import (
    AnnotatedDocument,
    DocumentReport,
    WordAnnotation,
    annotate,
    annotate_document,
    emit,
    stats,
)
from .resources import Resources, ServiceConfig, load_resources
from .suggest import Relation, RelationDB, Suggestion, load_relations, related
from .textproc import NormProfile, Token, TokenKind, normalize, tokenize

__version__ = "0.1.0"

__all__ = [
    "Analysis",
    "AnnotatedDocument",
    "DanglingCategoryError",
    "DigitScript",
    "DocumentReport",
    "FreqTable",
    "LevelOutOfRangeError",
    "MalformedRowError",
    "MarkupMode",
    "MarkupSpan",
    "MissingFileError",
    "MorphDB",
    "NormProfile",
    "ReadabilityLevel",
    "ReadabilityLexicon",
    "Relation",
    "RelationDB",
    "ResourceError",
    "Resources",
    "ServiceConfig",
    "SpanStyle",
    "Suggestion",
    "Token",
    "TokenKind",
    "UnknownRelationError",
    "UnsupportedFormatError",
    "WordAnnotation",
    "analyze",
    "annotate",
    "annotate_document",
    "apply_mode",
    "assign_level",
    "emit",
    "emit_markup",
    "level_of",
    "load_db",
    "load_lexicon",
    "load_relations",
    "load_resources",
    "most_likely",
    "normalize",
    "parse_markup",
    "related",
    "segmentations",
    "stats",
    "tokenize",
]
