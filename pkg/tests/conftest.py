import os

import pytest
from hypothesis import HealthCheck, settings

from proofweave.graph import build_graph, graph_from_json
from proofweave.io import load_fixture

settings.register_profile(
    "default",
    max_examples=int(os.environ.get("PROOFWEAVE_EXAMPLES", "60")),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def fig():
    def load(name):
        return load_fixture(name)

    return load


@pytest.fixture
def fig_graph():
    def load(name):
        return graph_from_json(load_fixture(name))

    return load


def triangle(c1="a", c2="b"):
    """Triangle whose every vertex sees colors c1 then c2."""
    return build_graph(
        ["p", "q", "r"],
        [("pq", [("p", c1), ("q", c2)]), ("qr", [("q", c1), ("r", c2)]), ("rp", [("r", c1), ("p", c2)])],
    )


ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
