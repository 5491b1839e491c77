from fractions import Fraction

import pytest

from lieranders import catalog, identity_metric


@pytest.fixture(scope="session")
def metric4():
    return identity_metric(4)


@pytest.fixture(scope="session")
def algebras():
    return {cid: catalog(cid) for cid in range(5)}


def fr(*values):
    """Shorthand: exact vector from ints/strings."""
    return tuple(Fraction(v) for v in values)
