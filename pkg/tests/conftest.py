from __future__ import annotations

import json

import pytest
from hypothesis import settings

import blockfuse.cli as cli
from blockfuse import build_group

settings.register_profile("suite", max_examples=25, deadline=None)
settings.load_profile("suite")

GROUP_NAMES = ("c2", "c3", "c4", "c6", "c2c2", "d8", "s3", "a4", "s4", "d24", "c3sc4")


def load_builtin(name: str):
    path = cli._builtin_path(name)
    with open(path, "r", encoding="utf-8") as fh:
        return build_group(json.load(fh))


@pytest.fixture(scope="session")
def groups():
    return {name: load_builtin(name) for name in GROUP_NAMES}


@pytest.fixture(scope="session")
def d24(groups):
    return groups["d24"]


@pytest.fixture(scope="session")
def corpus_entries():
    return cli.load_corpus(cli.default_corpus_path())


@pytest.fixture(scope="session")
def corpus_run(corpus_entries):
    """One full object-level run of the shipped corpus, shared by the
    acceptance sweeps and the CLI-level checks."""
    return cli.run_corpus(corpus_entries, base=cli.default_corpus_path().parent,
                          keep_objects=True)
