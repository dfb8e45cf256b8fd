"""Unicode-aware tokenization and orthographic normalization for Arabic text.

Offsets are Unicode codepoint indices into the source string, never bytes.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass

# Arabic letters (hamza..ya), alef wasla, diacritics, dagger alef, tatweel.
_ARABIC_WORD_CHARS = "ء-يٱً-ْٰـ"

# Inline level markup: '#' digits '#', ASCII or Arabic-Indic digits.
MARKUP_RUN_RE = re.compile(r"#[0-9٠-٩]+#")

# A Word token is an Arabic letter run, optionally led by markup runs.
# Markup glued to anything other than an Arabic run stays non-word text.
_WORD_RE = re.compile(
    rf"(?:#[0-9٠-٩]+#)*[{_ARABIC_WORD_CHARS}]+"
)

_DIACRITICS_RE = re.compile(r"[ً-ْٰ]")
_TATWEEL_RE = re.compile("ـ")
_ALEF_VARIANTS = dict.fromkeys(map(ord, "أإآٱ"), "ا")
_YA_VARIANT = {ord("ى"): "ي"}
_TA_MARBUTA_VARIANT = {ord("ة"): "ه"}


class TokenKind(enum.Enum):
    WORD = "word"
    NON_WORD = "non_word"


@dataclass(frozen=True)
class Token:
    """A contiguous span of the source text.

    ``surface`` is the original slice; ``start``/``end`` are codepoint
    offsets. Word tokens may carry leading ``#i#`` markup runs in their
    raw span (see the markup module).
    """

    surface: str
    start: int
    end: int
    kind: TokenKind

    @property
    def is_word(self) -> bool:
        return self.kind is TokenKind.WORD


@dataclass(frozen=True)
class NormProfile:
    """Orthographic normalization switches, independent of each other."""

    strip_diacritics: bool = False
    strip_tatweel: bool = False
    normalize_alef: bool = False
    normalize_ya: bool = False
    normalize_ta_marbuta: bool = False


# Buckwalter-style exact-consonant matching: drop vocalization only.
LOOKUP_PROFILE = NormProfile(strip_diacritics=True, strip_tatweel=True)

# Collapses hamza/ya/ta-marbuta variants as well; inflates ambiguity.
FUZZY_PROFILE = NormProfile(
    strip_diacritics=True,
    strip_tatweel=True,
    normalize_alef=True,
    normalize_ya=True,
    normalize_ta_marbuta=True,
)

PROFILES = {"default": LOOKUP_PROFILE, "fuzzy": FUZZY_PROFILE}


def normalize(surface: str, profile: NormProfile = LOOKUP_PROFILE) -> str:
    """Apply the profile's normalizations. Idempotent, never grows the string."""
    s = surface
    if profile.strip_diacritics:
        s = _DIACRITICS_RE.sub("", s)
    if profile.strip_tatweel:
        s = _TATWEEL_RE.sub("", s)
    if profile.normalize_alef:
        s = s.translate(_ALEF_VARIANTS)
    if profile.normalize_ya:
        s = s.translate(_YA_VARIANT)
    if profile.normalize_ta_marbuta:
        s = s.translate(_TA_MARBUTA_VARIANT)
    return s


def tokenize(text: str) -> list[Token]:
    """Split text into Word and NonWord tokens that partition it exactly.

    Word tokens are maximal Arabic-script runs, optionally led by ``#i#``
    markup runs. Everything else becomes NonWord tokens, split into
    alternating maximal whitespace / non-whitespace stretches.
    """
    tokens: list[Token] = []
    pos = 0
    for m in _WORD_RE.finditer(text):
        if m.start() > pos:
            _append_non_words(tokens, text, pos, m.start())
        tokens.append(Token(m.group(), m.start(), m.end(), TokenKind.WORD))
        pos = m.end()
    if pos < len(text):
        _append_non_words(tokens, text, pos, len(text))
    return tokens


def _append_non_words(tokens, text, start, end):
    # Alternate whitespace / non-whitespace runs inside a non-word stretch.
    i = start
    while i < end:
        is_space = text[i].isspace()
        j = i + 1
        while j < end and text[j].isspace() == is_space:
            j += 1
        tokens.append(Token(text[i:j], i, j, TokenKind.NON_WORD))
        i = j


def word_body(surface: str) -> str:
    """Strip leading ``#i#`` markup runs from a Word token surface."""
    return surface[word_body_offset(surface):]


def word_body_offset(surface: str) -> int:
    """Offset of the first non-markup character within a Word surface."""
    i = 0
    while True:
        m = MARKUP_RUN_RE.match(surface, i)
        if m is None:
            return i
        i = m.end()
