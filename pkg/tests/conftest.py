import itertools
import random

import pytest

from taucrit.hypercore import Hypergraph


def cycle(n):
    return Hypergraph.from_edges(2, n, [(i, (i + 1) % n) for i in range(n)])


def matching(k, r=2):
    return Hypergraph.from_edges(r, r * k, [range(r * i, r * i + r) for i in range(k)])


def random_hypergraph(rng, r, n, p=None):
    if p is None:
        p = rng.random()
    return Hypergraph.from_edges(r, n, [c for c in itertools.combinations(range(n), r) if rng.random() < p])


def labeled_graphs(n):
    """Every labeled graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Hypergraph.from_edges(2, n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def k4():
    return Hypergraph.complete(2, 4)


@pytest.fixture
def path3():
    return Hypergraph.from_edges(2, 3, [(0, 1), (1, 2)])


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
