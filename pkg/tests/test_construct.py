import pytest
from hypothesis import given

from cordialcube import fixtures
from cordialcube.construct import DOUBLING_CYCLE, DoublingMode, base_cube, construct_cordial, double
from cordialcube.core import (
    Digraph,
    LabeledDigraph,
    OrientedHypercube,
    complement,
    hypercube_digraph,
    hypercube_from_digraph,
    is_23_cordial_pair,
    is_friendly,
    lambda_triple,
)
from cordialcube.errors import StructureError

from conftest import cubes_with_labeling


def naive_double(L: LabeledDigraph, mode: DoublingMode) -> LabeledDigraph:
    """Doubling built arc by arc, independent of the packed representation."""
    D = hypercube_digraph(L.graph)
    size = D.vertex_count
    arcs = list(D.arcs)
    arcs += [(t + size, h + size) for t, h in D.arcs]
    arcs += [(x, x + size) for x in range(size)]
    second = complement(L.labels) if mode is DoublingMode.COMPLEMENT else L.labels
    return LabeledDigraph(hypercube_from_digraph(Digraph(2 * size, arcs)), L.labels + second)


@given(cubes_with_labeling(1, 5))
def test_double_matches_naive(pair):
    H, f = pair
    L = LabeledDigraph(H, f)
    for mode in DoublingMode:
        assert double(L, mode) == naive_double(L, mode)


@given(cubes_with_labeling(1, 5, friendly=True))
def test_complement_doubling_law(pair):
    H, f = pair
    a, b, c = lambda_triple(H, f)
    zeros = f.count(0)
    ones = f.count(1)
    assert double(LabeledDigraph(H, f), DoublingMode.COMPLEMENT).lambda_triple() == (
        a + b + zeros,
        a + b + ones,
        2 * c,
    )


@given(cubes_with_labeling(1, 5))
def test_identity_doubling_law(pair):
    H, f = pair
    a, b, c = lambda_triple(H, f)
    assert double(LabeledDigraph(H, f), DoublingMode.IDENTITY).lambda_triple() == (2 * a, 2 * b, 2 * c + len(f))


@given(cubes_with_labeling(1, 5, friendly=True))
def test_doubling_keeps_friendliness(pair):
    H, f = pair
    for mode in DoublingMode:
        assert is_friendly(double(LabeledDigraph(H, f), mode).labels)


def test_doubling_sequence_from_base():
    L = base_cube()
    assert L.lambda_triple() == (4, 4, 4)
    seen = []
    for mode in DOUBLING_CYCLE:
        L = double(L, mode)
        seen.append(tuple(L.lambda_triple()))
    assert seen == [(12, 12, 8), (32, 32, 16), (64, 64, 64)]


@pytest.mark.parametrize("n", [3, 6, 9])
def test_construct_cordial_balanced(n):
    L = construct_cordial(n)
    assert isinstance(L.graph, OrientedHypercube)
    assert L.graph.dimension == n
    each = n * (1 << (n - 1)) // 3
    assert L.lambda_triple() == (each, each, each)
    assert is_23_cordial_pair(L.graph, L.labels)


def test_construct_cordial_is_deterministic():
    assert construct_cordial(6) == construct_cordial(6)
    assert construct_cordial(3) == fixtures.cube("C3")


@pytest.mark.parametrize("n", [0, 1, 2, 4, 5, -3, 3.0, True, "6"])
def test_construct_cordial_rejects(n):
    with pytest.raises(ValueError):
        construct_cordial(n)


def test_double_rejects_non_hypercube():
    L = LabeledDigraph(Digraph(4, [(0, 1), (1, 2)]), (0, 1, 0, 1))
    with pytest.raises(StructureError):
        double(L, DoublingMode.IDENTITY)


def test_mode_accepts_string_values():
    L = base_cube()
    assert double(L, "identity") == double(L, DoublingMode.IDENTITY)
