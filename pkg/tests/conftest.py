import pytest


@pytest.fixture(scope="session")
def rank4():
    from voronoi4 import ledger

    return ledger.rank4_data()
