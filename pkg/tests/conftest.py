from __future__ import annotations

from pathlib import Path

import pytest

from multialg.io import load_document

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def corpus_algebra(name: str):
    return load_document(CORPUS / name).algebra


@pytest.fixture
def flip():
    """Two elements swapped by a unary operation; ground is empty."""
    return corpus_algebra("flip.json")


@pytest.fixture
def collapse():
    """Both elements sent to 1; result sets of distinct applications meet."""
    return corpus_algebra("collapse.json")


@pytest.fixture
def absval():
    """Three elements folded onto the non-negatives; ground does not generate."""
    return corpus_algebra("absval.json")


@pytest.fixture
def forest():
    """A two-level forest: one root whose application yields two leaves."""
    return corpus_algebra("forest.json")


@pytest.fixture
def shared_tail():
    """Two roots feeding one finite tail; chainless but not disconnected."""
    return corpus_algebra("shared_tail.json")


@pytest.fixture
def term_truncation():
    """The two-choice term structure over one variable, cut at depth 2."""
    return corpus_algebra("term_truncation.json")


@pytest.fixture
def classical():
    return load_document(CORPUS / "classical.json").to_nmatrix()


@pytest.fixture
def nondet():
    return load_document(CORPUS / "twovalued_nondet.json").to_nmatrix()
