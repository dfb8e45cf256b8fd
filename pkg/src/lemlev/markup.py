"""The inline ``#i#`` readability-override grammar and the four markup modes.

A run ``#i#`` (ASCII or Arabic-Indic digits, level 1..5) binds to the Word
token whose letters start immediately after it, pinning that word's
readability level. Runs that precede anything else are inert text. The run
grammar doubles as the persistence format: plain-text export keeps
overrides alive across analyzer and lexicon versions.

Binding discipline for pathological chains like ``#1##2#word``: only the
run adjacent to the word letters can bind; other valid runs in the chain
are removed with a diagnostic (they never pin anything), while runs whose
level is outside 1..5 stay in the text as inert content. This keeps
``parse_markup`` stable on its own clean output, which is what makes the
Delete mode idempotent.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .readability import ReadabilityLevel
from .textproc import (
    LOOKUP_PROFILE,
    MARKUP_RUN_RE,
    NormProfile,
    Token,
    normalize,
    tokenize,
    word_body,
    word_body_offset,
)

_ARABIC_INDIC_DIGITS = "٠١٢٣٤٥٦٧٨٩"


class DigitScript(enum.Enum):
    ASCII = "ascii"
    ARABIC_INDIC = "arabic_indic"


class SpanStyle(enum.Enum):
    VISIBLE = "visible"
    MINIMIZED = "minimized"


class MarkupMode(enum.Enum):
    SHOW = "show"
    MINIMIZE = "minimize"
    HIDE = "hide"
    DELETE = "delete"


@dataclass(frozen=True)
class MarkupSpan:
    """A literal ``#i#`` run: level, digit script, offsets, render style."""

    level: int
    digit_script: DigitScript
    start: int
    end: int
    style: SpanStyle = SpanStyle.VISIBLE
    text: str = ""

    def restyled(self, style: SpanStyle) -> "MarkupSpan":
        return MarkupSpan(self.level, self.digit_script, self.start, self.end, style, self.text)


@dataclass(frozen=True)
class Diagnostic:
    kind: str  # "level_out_of_range" | "shadowed_markup"
    offset: int
    text: str
    message: str


@dataclass(frozen=True)
class ParseResult:
    clean_text: str
    overrides: dict[int, MarkupSpan]  # word-token index -> bound span
    diagnostics: tuple[Diagnostic, ...] = ()


def run_literal(level: int, script: DigitScript = DigitScript.ARABIC_INDIC) -> str:
    """The literal run text for a level, e.g. 5 -> ``#٥#`` (or ``#5#``)."""
    if not 1 <= level <= 5:
        raise ValueError(f"override level must be 1..5, got {level}")
    digits = str(level)
    if script is DigitScript.ARABIC_INDIC:
        digits = "".join(_ARABIC_INDIC_DIGITS[int(d)] for d in digits)
    return f"#{digits}#"


def _run_value_and_script(run_text: str) -> tuple[int, DigitScript]:
    digits = run_text[1:-1]
    script = (
        DigitScript.ARABIC_INDIC
        if all(d in _ARABIC_INDIC_DIGITS for d in digits)
        else DigitScript.ASCII
    )
    return int(digits), script  # int() accepts Arabic-Indic decimals


def _attached_runs(token: Token) -> list[tuple[int, str]]:
    """(absolute offset, literal) for each markup run glued to a Word token."""
    runs = []
    i = 0
    while True:
        m = MARKUP_RUN_RE.match(token.surface, i)
        if m is None:
            return runs
        runs.append((token.start + m.start(), m.group()))
        i = m.end()


def parse_markup(text: str) -> ParseResult:
    """Split text into clean content and per-word level overrides.

    Overrides are keyed by the index of the Word token (counting Word
    tokens only) in the clean text; span offsets point into the input
    text. Runs with levels outside 1..5 are reported and left inert.
    """
    clean_parts: list[str] = []
    overrides: dict[int, MarkupSpan] = {}
    diagnostics: list[Diagnostic] = []
    word_index = 0
    for token in tokenize(text):
        if not token.is_word:
            clean_parts.append(token.surface)
            continue
        runs = _attached_runs(token)
        kept = []
        for j, (offset, literal) in enumerate(runs):
            level, script = _run_value_and_script(literal)
            adjacent = j == len(runs) - 1
            if not 1 <= level <= 5:
                diagnostics.append(
                    Diagnostic(
                        "level_out_of_range",
                        offset,
                        literal,
                        f"markup level {level} outside 1..5; run left as text",
                    )
                )
                kept.append(literal)
            elif adjacent:
                overrides[word_index] = MarkupSpan(
                    level, script, offset, offset + len(literal), SpanStyle.VISIBLE, literal
                )
            else:
                diagnostics.append(
                    Diagnostic(
                        "shadowed_markup",
                        offset,
                        literal,
                        "markup run shadowed by a later run on the same word; removed",
                    )
                )
        clean_parts.append("".join(kept) + word_body(token.surface))
        word_index += 1
    return ParseResult("".join(clean_parts), overrides, tuple(diagnostics))


def _splice_inserts(text: str, inserts: list[tuple[int, str]]) -> str:
    """Insert literals at the given offsets (offsets refer to the input)."""
    out = []
    last = 0
    for pos, literal in sorted(inserts):
        out.append(text[last:pos])
        out.append(literal)
        last = pos
    out.append(text[last:])
    return "".join(out)


def _splice_removals(text: str, spans: list[tuple[int, int]]) -> str:
    out = []
    last = 0
    for start, end in sorted(spans):
        out.append(text[last:start])
        last = end
    out.append(text[last:])
    return "".join(out)


def emit_markup(clean_text: str, overrides: dict[int, MarkupSpan]) -> str:
    """Re-insert override runs in front of their word tokens.

    Inverse of parse_markup on its own output: the runs go immediately
    before each word's letters (after any inert junk the clean text kept).
    """
    inserts = []
    word_index = 0
    for token in tokenize(clean_text):
        if not token.is_word:
            continue
        span = overrides.get(word_index)
        if span is not None:
            literal = span.text or run_literal(span.level, span.digit_script)
            inserts.append((token.start + word_body_offset(token.surface), literal))
        word_index += 1
    return _splice_inserts(clean_text, inserts)


def apply_mode(
    text: str,
    mode: MarkupMode,
    annotations,
    emit_script: DigitScript = DigitScript.ARABIC_INDIC,
) -> str:
    """Transform a document's markup per the selected mode.

    ``annotations`` must be the WordAnnotation list computed over
    parse_markup(text).clean_text, one per Word token in order.

    Show marks every graded word with its effective level (existing
    overrides verbatim); Minimize keeps the text and flips span styles;
    Hide drops overrides that agree with the analyzer and keeps only the
    disagreeing ones (minimized); Delete strips all binding markup.
    """
    parsed = parse_markup(text)
    if mode is MarkupMode.DELETE:
        return parsed.clean_text
    if mode is MarkupMode.MINIMIZE:
        return text

    annotations = list(annotations)
    n_words = sum(1 for t in tokenize(parsed.clean_text) if t.is_word)
    if len(annotations) != n_words:
        raise ValueError(
            f"annotations cover {len(annotations)} words, text has {n_words}"
        )

    if mode is MarkupMode.SHOW:
        overrides = dict(parsed.overrides)
        for i, ann in enumerate(annotations):
            if i in overrides:
                continue  # preserved verbatim
            level = ann.effective_level
            if level.is_graded:
                overrides[i] = MarkupSpan(
                    level.value, emit_script, -1, -1, SpanStyle.VISIBLE,
                    run_literal(level.value, emit_script),
                )
        return emit_markup(parsed.clean_text, overrides)

    if mode is MarkupMode.HIDE:
        removals = []
        for i, span in parsed.overrides.items():
            computed = annotations[i].computed_level
            if computed.is_graded and computed.value == span.level:
                removals.append((span.start, span.end))
        return _splice_removals(text, removals)

    raise ValueError(f"unsupported markup mode: {mode!r}")


def mode_span_styles(output_text: str, mode: MarkupMode) -> list[MarkupSpan]:
    """Style metadata for the binding runs left in a mode's output text.

    Minimize and Hide render their surviving markup at minimal size; Show
    and Delete leave it at normal size (Delete leaves none).
    """
    style = (
        SpanStyle.MINIMIZED
        if mode in (MarkupMode.MINIMIZE, MarkupMode.HIDE)
        else SpanStyle.VISIBLE
    )
    parsed = parse_markup(output_text)
    return [span.restyled(style) for _, span in sorted(parsed.overrides.items())]


def assign_level(
    text: str,
    level: int,
    occurrence: int | None = None,
    surface: str | None = None,
    profile: NormProfile = LOOKUP_PROFILE,
    emit_script: DigitScript = DigitScript.ARABIC_INDIC,
) -> str:
    """Pin a level on one word occurrence, or on all words matching a surface.

    ``occurrence`` counts Word tokens from 0; out of range raises
    IndexError. With ``surface``, every Word token whose normalized
    letters equal the normalized surface is re-pinned. Existing valid
    runs on a target are replaced; inert junk runs are left alone.
    """
    if not 1 <= level <= 5:
        raise ValueError(f"assign level must be 1..5, got {level}")
    word_tokens = [t for t in tokenize(text) if t.is_word]

    if occurrence is not None:
        if not 0 <= occurrence < len(word_tokens):
            raise IndexError(
                f"occurrence {occurrence} out of range for {len(word_tokens)} words"
            )
        targets = [word_tokens[occurrence]]
    elif surface is not None:
        key = normalize(word_body(surface), profile)
        targets = [
            t for t in word_tokens if normalize(word_body(t.surface), profile) == key
        ]
    else:
        raise ValueError("assign needs an occurrence index or a surface")

    replacement = run_literal(level, emit_script)
    edits = []  # (start, end, new_text) over the raw input
    for token in targets:
        kept_junk = []
        for offset, literal in _attached_runs(token):
            value, _ = _run_value_and_script(literal)
            if not 1 <= value <= 5:
                kept_junk.append(literal)
        body = word_body(token.surface)
        edits.append((token.start, token.end, "".join(kept_junk) + replacement + body))

    out = []
    last = 0
    for start, end, new in sorted(edits):
        out.append(text[last:start])
        out.append(new)
        last = end
    out.append(text[last:])
    return "".join(out)


def effective_level(
    computed: ReadabilityLevel, override: ReadabilityLevel | None
) -> ReadabilityLevel:
    """Override wins when present; otherwise the analyzer's level stands."""
    return override if override is not None else computed
