import random

import pytest
from hypothesis import strategies as st

from cordialcube.core import OrientedHypercube, edge_count

ACCEPTANCE_RESULTS = []


def random_friendly(n_vertices: int, rng: random.Random) -> tuple:
    ones = n_vertices // 2 if rng.random() < 0.5 else (n_vertices + 1) // 2
    f = [1] * ones + [0] * (n_vertices - ones)
    rng.shuffle(f)
    return tuple(f)


@st.composite
def hypercubes(draw, min_dim=1, max_dim=4):
    n = draw(st.integers(min_dim, max_dim))
    bits = draw(st.integers(0, (1 << edge_count(n)) - 1))
    return OrientedHypercube(n, bits)


@st.composite
def labelings(draw, n_vertices, friendly=False):
    if friendly:
        ones = draw(st.sampled_from(sorted({n_vertices // 2, (n_vertices + 1) // 2})))
        chosen = draw(st.permutations(range(n_vertices)))[:ones]
        return tuple(1 if v in chosen else 0 for v in range(n_vertices))
    return tuple(draw(st.lists(st.integers(0, 1), min_size=n_vertices, max_size=n_vertices)))


@st.composite
def cubes_with_labeling(draw, min_dim=1, max_dim=4, friendly=False):
    H = draw(hypercubes(min_dim, max_dim))
    return H, draw(labelings(H.vertex_count, friendly))


@pytest.fixture
def record_acceptance():
    def record(number, description, passed):
        line = f"AC{number:>2} {'PASS' if passed else 'FAIL'}  {description}"
        ACCEPTANCE_RESULTS.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
