import shutil
from pathlib import Path

import pytest

from lemlev.resources import default_resource_dir, load_resources

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def res():
    return load_resources()


@pytest.fixture(scope="session")
def db(res):
    return res.db


@pytest.fixture(scope="session")
def lex(res):
    return res.lex


@pytest.fixture(scope="session")
def freq(res):
    return res.freq


@pytest.fixture(scope="session")
def relations(res):
    return res.relations


@pytest.fixture
def bundle_copy(tmp_path):
    """Writable copy of the packaged resource bundle, for corruption tests."""
    dst = tmp_path / "bundle"
    shutil.copytree(default_resource_dir(), dst)
    return dst


@pytest.fixture(scope="session")
def corpus_text():
    return (DATA / "corpus.txt").read_text(encoding="utf-8")


def doc_paths():
    return sorted((DATA / "docs").glob("doc*.txt"))
