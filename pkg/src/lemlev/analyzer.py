"""Out-of-context morphological analysis over the compat-table database.

Candidate analyses come from exhaustive prefix/stem/suffix segmentation with
hash lookups per slice; an analysis survives only if all three category
pairs (prefix-stem, stem-suffix, prefix-suffix) appear in their
compatibility tables. Disambiguation is frequency-argmax over (lemma, pos),
with a deterministic lexicographic tie-break.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import MalformedRowError
from .morphdb import AffixEntry, Limits, MorphDB, StemEntry, read_tsv_rows
from .textproc import LOOKUP_PROFILE, NormProfile, normalize


@dataclass(frozen=True)
class Analysis:
    """One morphological reading of a word."""

    prefix: AffixEntry
    stem: StemEntry
    suffix: AffixEntry

    @property
    def diac(self) -> str:
        # Concatenative model: no sandhi across morph boundaries.
        return self.prefix.diac + self.stem.diac + self.suffix.diac

    @property
    def lemma(self) -> str:
        return self.stem.lemma

    @property
    def pos(self) -> str:
        return self.stem.pos

    @property
    def gloss(self) -> str:
        return self.stem.gloss

    @property
    def cats(self) -> tuple[str, str, str]:
        return (self.prefix.cat, self.stem.cat, self.suffix.cat)

    def key(self) -> tuple:
        """Deduplication identity: (diac, lemma, pos, cats)."""
        return (self.diac, self.lemma, self.pos, self.cats)


@dataclass(frozen=True)
class FreqTable:
    """(lemma, pos) -> corpus count; missing pairs read as zero."""

    counts: dict[tuple[str, str], int] = field(default_factory=dict)

    def count(self, lemma: str, pos: str) -> int:
        return self.counts.get((lemma, pos), 0)

    def __len__(self) -> int:
        return len(self.counts)


def load_freq(path) -> FreqTable:
    """Load freq.tsv (lemma, pos, count). A missing file yields zero counts."""
    path = Path(path)
    if not path.is_file():
        return FreqTable()
    counts: dict[tuple[str, str], int] = {}
    for lineno, (lemma, pos, value) in read_tsv_rows(path, 3):
        try:
            n = int(value)
        except ValueError:
            raise MalformedRowError(path.name, lineno, f"non-integer count {value!r}") from None
        if n < 0:
            raise MalformedRowError(path.name, lineno, "negative count")
        counts[(lemma, pos)] = counts.get((lemma, pos), 0) + n
    return FreqTable(counts)


def segmentations(word: str, limits: Limits = Limits()) -> list[tuple[str, str, str]]:
    """All (prefix, stem, suffix) splits of an already-normalized word.

    Stems are non-empty; affix lengths respect the limits. Enumeration
    order is suffix length ascending, then prefix length ascending, which
    puts the bare-stem split first.
    """
    n = len(word)
    if n == 0:
        return []
    result = []
    for s_len in range(0, min(limits.max_suffix_len, n - 1) + 1):
        for p_len in range(0, min(limits.max_prefix_len, n - 1 - s_len) + 1):
            result.append((word[:p_len], word[p_len : n - s_len], word[n - s_len : n]))
    return result


def analyze(
    word: str, db: MorphDB, profile: NormProfile = LOOKUP_PROFILE
) -> list[Analysis]:
    """All compat-valid analyses of a word (may be raw surface; normalized here).

    Returns a deduplicated list in deterministic generation order; empty
    means out-of-vocabulary.
    """
    lookup = normalize(word, profile)
    out: list[Analysis] = []
    seen: set[tuple] = set()
    for pre_s, stem_s, suf_s in segmentations(lookup, db.limits):
        stem_entries = db.stems.get(stem_s)
        if not stem_entries:
            continue
        prefix_entries = db.prefixes.get(pre_s)
        if not prefix_entries:
            continue
        suffix_entries = db.suffixes.get(suf_s)
        if not suffix_entries:
            continue
        for pe in prefix_entries:
            for se in stem_entries:
                if (pe.cat, se.cat) not in db.compat_ab:
                    continue
                for xe in suffix_entries:
                    if (se.cat, xe.cat) not in db.compat_bc:
                        continue
                    if (pe.cat, xe.cat) not in db.compat_ac:
                        continue
                    a = Analysis(pe, se, xe)
                    if a.key() not in seen:
                        seen.add(a.key())
                        out.append(a)
    return out


def most_likely(analyses, freq: FreqTable) -> Analysis | None:
    """Frequency argmax over (lemma, pos); ties break on (lemma, pos, diac)."""
    analyses = list(analyses)
    if not analyses:
        return None
    return min(
        analyses,
        key=lambda a: (-freq.count(a.lemma, a.pos), a.lemma, a.pos, a.diac),
    )
