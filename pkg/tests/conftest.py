import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.algebra import GroupAdd, GroupSpec
from core.matching import SetPair


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False,
                     help="run acceptance-scale sweeps")


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def z13():
    return GroupAdd(GroupSpec((13,)))


@pytest.fixture
def z4():
    return GroupAdd(GroupSpec((4,)))


@pytest.fixture
def example_pair(z13):
    """A = {0,1,2,7}, B = {3,4,9,10} in Z/13."""
    return SetPair(z13.of(0, 1, 2, 7), z13.of(3, 4, 9, 10), z13)
