"""Document annotation assembly, distribution statistics, and emitters.

The annotation pipeline: parse inline markup, tokenize the clean text,
analyze each Word token, pick the most likely reading, grade it, then let
explicit overrides win. Non-word tokens carry no annotation. Statistics
count effective levels in token space (every occurrence) and type space
(each distinct normalized surface once, at its first occurrence's level).
"""
from __future__ import annotations

import html as _html
import json
from dataclasses import dataclass, field

from .analyzer import Analysis, FreqTable, analyze, most_likely
from .errors import UnsupportedFormatError
from .markup import Diagnostic, MarkupSpan, SpanStyle, parse_markup
from .morphdb import MorphDB
from .readability import ALL_LEVELS, ReadabilityLevel, ReadabilityLexicon, level_of
from .textproc import LOOKUP_PROFILE, NormProfile, Token, normalize, tokenize, word_body

# Engine-wide level palette; config may override per level token.
DEFAULT_PALETTE = {
    "1": "#2e7d32",
    "2": "#9ccc65",
    "3": "#fdd835",
    "4": "#fb8c00",
    "5": "#e53935",
    "proper_noun": "#7e57c2",
    "unknown": "#9e9e9e",
}

FORMATS = ("json", "tsv", "html")

_TSV_COLUMNS = (
    "surface",
    "start",
    "end",
    "lemma",
    "pos",
    "diac",
    "gloss",
    "computed_level",
    "override_level",
    "effective_level",
    "n_analyses",
)


@dataclass(frozen=True)
class WordAnnotation:
    """A Word token with its chosen reading and readability grade."""

    token: Token
    analyses: tuple[Analysis, ...]
    chosen: Analysis | None
    computed_level: ReadabilityLevel
    override_level: ReadabilityLevel | None
    effective_level: ReadabilityLevel
    norm_surface: str
    override_span: MarkupSpan | None = None


@dataclass(frozen=True)
class AnnotatedDocument:
    source_text: str
    clean_text: str
    annotations: tuple[WordAnnotation, ...]
    diagnostics: tuple[Diagnostic, ...] = ()


@dataclass(frozen=True)
class DocumentReport:
    token_counts: dict[ReadabilityLevel, int]
    type_counts: dict[ReadabilityLevel, int]
    total_tokens: int
    total_types: int


def annotate_document(
    text: str,
    db: MorphDB,
    freq: FreqTable,
    lex: ReadabilityLexicon,
    profile: NormProfile = LOOKUP_PROFILE,
) -> AnnotatedDocument:
    """Run the full pipeline and keep the clean text for rendering."""
    parsed = parse_markup(text)
    annotations: list[WordAnnotation] = []
    word_index = 0
    for token in tokenize(parsed.clean_text):
        if not token.is_word:
            continue
        body = word_body(token.surface)
        analyses = tuple(analyze(body, db, profile))
        chosen = most_likely(analyses, freq)
        computed = level_of(chosen, lex)
        span = parsed.overrides.get(word_index)
        override = ReadabilityLevel.from_int(span.level) if span else None
        annotations.append(
            WordAnnotation(
                token=token,
                analyses=analyses,
                chosen=chosen,
                computed_level=computed,
                override_level=override,
                effective_level=override if override is not None else computed,
                norm_surface=normalize(body, profile),
                override_span=span,
            )
        )
        word_index += 1
    return AnnotatedDocument(text, parsed.clean_text, tuple(annotations), parsed.diagnostics)


def annotate(
    text: str,
    db: MorphDB,
    freq: FreqTable,
    lex: ReadabilityLexicon,
    profile: NormProfile = LOOKUP_PROFILE,
) -> list[WordAnnotation]:
    """One WordAnnotation per Word token, in document order."""
    return list(annotate_document(text, db, freq, lex, profile).annotations)


def stats(annotations) -> DocumentReport:
    """Per-level counts in token space and type space.

    A type is a distinct normalized surface; it is binned once, at the
    effective level of its first occurrence, so token order matters for
    homographs annotated at different levels.
    """
    token_counts = {level: 0 for level in ALL_LEVELS}
    type_counts = {level: 0 for level in ALL_LEVELS}
    seen: set[str] = set()
    total = 0
    for ann in annotations:
        token_counts[ann.effective_level] += 1
        total += 1
        if ann.norm_surface not in seen:
            seen.add(ann.norm_surface)
            type_counts[ann.effective_level] += 1
    return DocumentReport(token_counts, type_counts, total, len(seen))


def _word_object(ann: WordAnnotation) -> dict:
    chosen = ann.chosen
    return {
        "surface": ann.token.surface,
        "start": ann.token.start,
        "end": ann.token.end,
        "lemma": chosen.lemma if chosen else None,
        "pos": chosen.pos if chosen else None,
        "diac": chosen.diac if chosen else None,
        "gloss": chosen.gloss if chosen else None,
        "computed_level": ann.computed_level.token,
        "override_level": ann.override_level.token if ann.override_level else None,
        "effective_level": ann.effective_level.token,
        "n_analyses": len(ann.analyses),
    }


def report_object(doc: AnnotatedDocument, report: DocumentReport) -> dict:
    """The machine-readable annotation dump behind the JSON emitter."""
    return {
        "words": [_word_object(ann) for ann in doc.annotations],
        "stats": {
            "tokens": {level.token: n for level, n in report.token_counts.items()},
            "types": {level.token: n for level, n in report.type_counts.items()},
        },
    }


def emit_json(doc: AnnotatedDocument, report: DocumentReport) -> bytes:
    """Canonical JSON: sorted keys, tight separators, UTF-8, one trailing newline.

    Emit -> parse -> emit is byte-identical (integer counts only).
    """
    payload = json.dumps(
        report_object(doc, report), ensure_ascii=False, sort_keys=True, separators=(",", ":")
    )
    return (payload + "\n").encode("utf-8")


def emit_tsv(doc: AnnotatedDocument, report: DocumentReport) -> bytes:
    lines = ["\t".join(_TSV_COLUMNS)]
    for ann in doc.annotations:
        obj = _word_object(ann)
        lines.append(
            "\t".join("" if obj[col] is None else str(obj[col]) for col in _TSV_COLUMNS)
        )
    return ("\n".join(lines) + "\n").encode("utf-8")


_HTML_CSS = """
body { font-family: sans-serif; margin: 2rem auto; max-width: 60rem; color: #222; }
.doc { direction: rtl; font-size: 1.5rem; line-height: 2.4; background: #fafafa;
       border: 1px solid #ddd; border-radius: 6px; padding: 1rem 1.5rem; }
.w { border-radius: 4px; padding: 0 0.15em; }
.run { unicode-bidi: isolate; color: #444; }
.run.min { font-size: 1pt; }
.chart { display: flex; gap: 3rem; margin-top: 2rem; }
.chart .space { flex: 1; }
.bars { display: flex; align-items: flex-end; gap: 0.5rem; height: 140px;
        border-bottom: 1px solid #999; }
.bar { flex: 1; min-width: 1.2rem; }
.bar-col { display: flex; flex-direction: column; justify-content: flex-end;
           align-items: center; flex: 1; height: 100%; }
.bar-label { font-size: 0.75rem; margin-top: 0.3rem; text-align: center; }
.bar-count { font-size: 0.75rem; }
.legend { margin-top: 1rem; font-size: 0.85rem; }
.swatch { display: inline-block; width: 0.9em; height: 0.9em; border-radius: 2px;
          margin-left: 0.3em; vertical-align: -0.1em; }
"""

_LEVEL_LABELS = {
    "1": "Level 1",
    "2": "Level 2",
    "3": "Level 3",
    "4": "Level 4",
    "5": "Level 5",
    "proper_noun": "Proper noun",
    "unknown": "Unknown",
}


def _render_doc_body(doc: AnnotatedDocument, palette: dict[str, str]) -> str:
    parts: list[str] = []
    pos = 0
    for ann in doc.annotations:
        token = ann.token
        if token.start > pos:
            parts.append(_html.escape(doc.clean_text[pos : token.start]))
        if ann.override_span is not None:
            css = "run min" if ann.override_span.style is SpanStyle.MINIMIZED else "run"
            parts.append(f'<span class="{css}">{_html.escape(ann.override_span.text)}</span>')
        color = palette[ann.effective_level.token]
        tip = _html.escape(
            f"{ann.chosen.lemma if ann.chosen else '?'} · {_LEVEL_LABELS[ann.effective_level.token]}"
        )
        parts.append(
            f'<span class="w" style="background:{color}" title="{tip}">'
            f"{_html.escape(token.surface)}</span>"
        )
        pos = token.end
    parts.append(_html.escape(doc.clean_text[pos:]))
    return "".join(parts)


def _render_bars(counts: dict[ReadabilityLevel, int], palette: dict[str, str], title: str) -> str:
    peak = max(counts.values()) if counts else 0
    cols = []
    for level in ALL_LEVELS:
        n = counts[level]
        height = 0 if peak == 0 else round(120 * n / peak)
        color = palette[level.token]
        cols.append(
            '<div class="bar-col">'
            f'<span class="bar-count">{n}</span>'
            f'<div class="bar" style="height:{height}px;background:{color}"></div>'
            f'<span class="bar-label">{_LEVEL_LABELS[level.token]}</span>'
            "</div>"
        )
    return f'<div class="space"><h3>{title}</h3><div class="bars">{"".join(cols)}</div></div>'


def emit_html(
    doc: AnnotatedDocument,
    report: DocumentReport,
    palette: dict[str, str] | None = None,
) -> bytes:
    """Self-contained page: colored word spans plus the distribution chart."""
    palette = {**DEFAULT_PALETTE, **(palette or {})}
    body = _render_doc_body(doc, palette)
    chart = (
        '<div class="chart">'
        + _render_bars(report.token_counts, palette, "Word tokens")
        + _render_bars(report.type_counts, palette, "Word types")
        + "</div>"
    )
    legend = "".join(
        f'<span>{_LEVEL_LABELS[level.token]}'
        f'<span class="swatch" style="background:{palette[level.token]}"></span></span> '
        for level in ALL_LEVELS
    )
    page = f"""<!doctype html>
<html lang="ar">
<head>
<meta charset="utf-8">
<title>Readability report</title>
<style>{_HTML_CSS}</style>
</head>
<body>
<h1>Readability report</h1>
<p>{report.total_tokens} word tokens · {report.total_types} word types</p>
<div class="doc">{body}</div>
{chart}
<div class="legend">{legend}</div>
</body>
</html>
"""
    return page.encode("utf-8")


def emit(
    doc: AnnotatedDocument,
    report: DocumentReport,
    fmt: str,
    palette: dict[str, str] | None = None,
) -> bytes:
    """Serialize an annotated document as json, tsv, or html bytes."""
    if fmt == "json":
        return emit_json(doc, report)
    if fmt == "tsv":
        return emit_tsv(doc, report)
    if fmt == "html":
        return emit_html(doc, report, palette)
    raise UnsupportedFormatError(fmt)
