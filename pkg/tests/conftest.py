import pytest

from contractads.graphs import connected_graphs_upto


@pytest.fixture(scope="session")
def graphs_upto_5():
    return connected_graphs_upto(5)


@pytest.fixture(scope="session")
def graphs_upto_6():
    return connected_graphs_upto(6)
