"""Shared helpers: label-indexed access to the bundled fixture corpus."""

import pytest

from tdlab.catalog import document_system, fixture_corpus


def doc_by_label(label):
    for doc in fixture_corpus():
        if doc.label == label:
            return doc
    raise KeyError(label)


def system_by_label(label):
    return document_system(doc_by_label(label))


@pytest.fixture(scope="session")
def corpus():
    return fixture_corpus()
