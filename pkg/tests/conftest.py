from pathlib import Path

import pytest

from stemleaf.graph import parse_graph6

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def connected_stream():
    """All connected graphs on 1..8 vertices (graph6 lines)."""
    return (DATA / "connected_upto8.g6").read_text().split()


@pytest.fixture(scope="session")
def connected_graphs(connected_stream):
    return [parse_graph6(line) for line in connected_stream]
