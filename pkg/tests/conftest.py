"""Shared fixtures: caches are expensive, so sessions build each once."""

import pytest

from mertenskit import SequenceCache


@pytest.fixture(scope="session")
def cache_small() -> SequenceCache:
    """Covers x up to 10^4; enough for window identities and small squares."""
    return SequenceCache(10 ** 4)


@pytest.fixture(scope="session")
def cache_square() -> SequenceCache:
    """Covers x^2 up to 10^6, i.e. square identities to x = 1000."""
    return SequenceCache(10 ** 6)
