from __future__ import annotations

import pytest

from latmat import corpus


@pytest.fixture(scope="session")
def small_corpus():
    """Deterministic mixed corpus, n <= 7, for the property suite."""
    spec = corpus.CorpusSpec(
        (
            "catalog-minors",
            "random-transversal",
            "random-sparse-paving",
            "lpm-random",
            "duals-closure",
        ),
        count=60,
        max_n=7,
        seed=1405,
    )
    return corpus.generate(spec)


@pytest.fixture(scope="session")
def tiny_corpus():
    """Smaller and shallower; for quadratic-cost properties."""
    spec = corpus.CorpusSpec(
        ("catalog-minors", "lpm-random", "duals-closure"),
        count=40,
        max_n=6,
        seed=97,
    )
    return corpus.generate(spec)
