import pytest

from lemlev.errors import DanglingCategoryError, MalformedRowError, MissingFileError
from lemlev.morphdb import Limits, load_db, read_tsv_rows, validate
from lemlev.readability import load_lexicon


def test_fixture_counts(db):
    # frozen against the committed fixture tables
    assert db.counts() == {
        "prefixes": 18,
        "stems": 94,
        "suffixes": 20,
        "compat_ab": 24,
        "compat_bc": 14,
        "compat_ac": 21,
    }


def test_null_affixes_present(db):
    assert "" in db.prefixes
    assert "" in db.suffixes


def test_default_limits(db):
    assert db.limits == Limits(max_prefix_len=4, max_suffix_len=6)


def test_stem_grouping(db):
    lookups = {e.lookup for entries in db.stems.values() for e in entries}
    assert "فرد" in lookups
    assert len(db.stems["فرد"]) == 2
    assert len(db.stems["كتب"]) == 3


def test_missing_file(tmp_path):
    with pytest.raises(MissingFileError):
        load_db(tmp_path)


def test_missing_one_table(bundle_copy):
    (bundle_copy / "morphdb" / "compat_ac.tsv").unlink()
    with pytest.raises(MissingFileError):
        load_db(bundle_copy / "morphdb")


def test_wrong_column_count(bundle_copy):
    path = bundle_copy / "morphdb" / "prefixes.tsv"
    with open(path, "a", encoding="utf-8") as fh:
        fh.write("و\tوَ\tPConj\n")
    with pytest.raises(MalformedRowError) as exc:
        load_db(bundle_copy / "morphdb")
    assert "4 columns" in str(exc.value)


def test_bom_rejected(tmp_path):
    path = tmp_path / "x.tsv"
    path.write_bytes("﻿a\tb\n".encode("utf-8"))
    with pytest.raises(MalformedRowError) as exc:
        read_tsv_rows(path, 2)
    assert "BOM" in str(exc.value)


def test_comments_blanks_and_dedup(tmp_path):
    path = tmp_path / "x.tsv"
    path.write_text("# header\n\na\tb\na\tb\n   \nc\td\n", encoding="utf-8")
    rows = read_tsv_rows(path, 2)
    assert [cells for _, cells in rows] == [("a", "b"), ("c", "d")]


def test_dangling_category(bundle_copy):
    path = bundle_copy / "morphdb" / "compat_ab.tsv"
    with open(path, "a", encoding="utf-8") as fh:
        fh.write("PGhost\tNStem\n")
    with pytest.raises(DanglingCategoryError) as exc:
        load_db(bundle_copy / "morphdb")
    assert "PGhost" in str(exc.value)


def test_limits_override(bundle_copy):
    (bundle_copy / "morphdb" / "limits.tsv").write_text(
        "max_prefix_len\t2\nmax_suffix_len\t3\n", encoding="utf-8"
    )
    db = load_db(bundle_copy / "morphdb")
    assert db.limits == Limits(max_prefix_len=2, max_suffix_len=3)


def test_limits_unknown_key(bundle_copy):
    (bundle_copy / "morphdb" / "limits.tsv").write_text("max_stems\t9\n", encoding="utf-8")
    with pytest.raises(MalformedRowError):
        load_db(bundle_copy / "morphdb")


def test_limits_negative(bundle_copy):
    (bundle_copy / "morphdb" / "limits.tsv").write_text(
        "max_prefix_len\t-1\n", encoding="utf-8"
    )
    with pytest.raises(MalformedRowError):
        load_db(bundle_copy / "morphdb")


class TestValidate:
    def test_fixture_db_clean(self, db, lex):
        assert validate(db, lex) == []

    def test_missing_null_affix_warning(self, bundle_copy):
        path = bundle_copy / "morphdb" / "prefixes.tsv"
        lines = [
            line
            for line in path.read_text(encoding="utf-8").splitlines()
            if not line.startswith("\t\tP0")
        ]
        # keep the AB table satisfied by rewriting P0 pairs onto PConj
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        ab = bundle_copy / "morphdb" / "compat_ab.tsv"
        ab_rows = ab.read_text(encoding="utf-8").replace("P0", "PConj")
        ab.write_text(ab_rows, encoding="utf-8")
        ac = bundle_copy / "morphdb" / "compat_ac.tsv"
        ac.write_text(ac.read_text(encoding="utf-8").replace("P0", "PConj"), encoding="utf-8")
        db = load_db(bundle_copy / "morphdb")
        warnings = validate(db)
        assert any("null prefix" in w for w in warnings)

    def test_unused_category_warning(self, bundle_copy):
        path = bundle_copy / "morphdb" / "stems.tsv"
        with open(path, "a", encoding="utf-8") as fh:
            fh.write("زرع\tزَرَعَ\tOrphanCat\tزَرَعَ\tverb\tplant\n")
        db = load_db(bundle_copy / "morphdb")
        warnings = validate(db)
        assert any("OrphanCat" in w for w in warnings)

    def test_lexicon_gap_warning(self, bundle_copy):
        path = bundle_copy / "morphdb" / "stems.tsv"
        with open(path, "a", encoding="utf-8") as fh:
            fh.write("زرع\tزَرَعَ\tPVStem\tزَرَعَ\tverb\tplant\n")
        db = load_db(bundle_copy / "morphdb")
        lex = load_lexicon(bundle_copy / "lexicon.tsv")
        warnings = validate(db, lex)
        assert any("زَرَعَ" in w for w in warnings)

    def test_proper_noun_stems_exempt(self, db, lex):
        # fixture proper nouns have no lexicon rows yet produce no warnings
        assert all("مِصْر" not in w for w in validate(db, lex))
