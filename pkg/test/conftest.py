"""
Shared fixtures for the test suite
"""

from functools import lru_cache

import pytest

from affine_simplex_families.enumeration import enumerate_families
from affine_simplex_families.roots import GroupType


@lru_cache(maxsize=None)
def _enumerate(label):
    return tuple(enumerate_families(GroupType.parse(label)))


@pytest.fixture(scope="session")
def families_of():
    """Pruned enumeration of a group label, computed once per session."""
    return _enumerate
