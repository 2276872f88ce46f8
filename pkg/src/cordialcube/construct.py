"""Doubling construction of (2,3)-cordial oriented hypercubes.

Starting from a balanced 3-cube, three doublings add three dimensions:
two *complement* doublings (the new copy carries the complemented labels)
followed by one *identity* doubling (the new copy is identical).  Each
doubling adds a new highest axis, so copy 1 holds vertex ids ``x + 2**k``,
and every connector arc runs from ``x`` in copy 0 to ``x + 2**k`` in copy 1.
"""

from __future__ import annotations

import enum

from . import fixtures
from .core import LabeledDigraph, OrientedHypercube, complement, hypercube_from_digraph
from .errors import StructureError


class DoublingMode(enum.Enum):
    COMPLEMENT = "complement"
    IDENTITY = "identity"


def base_cube() -> LabeledDigraph:
    """The balanced 3-cube with triple (4,4,4) used as the induction base."""
    return fixtures.cube("C3")


def _as_hypercube(L: LabeledDigraph) -> OrientedHypercube:
    if isinstance(L.graph, OrientedHypercube):
        return L.graph
    try:
        return hypercube_from_digraph(L.graph)
    except StructureError as exc:
        raise StructureError(f"doubling needs an oriented hypercube: {exc}") from None


def double(L: LabeledDigraph, mode: DoublingMode) -> LabeledDigraph:
    """Glue two copies of ``L`` along a new highest axis.

    Intra-copy orientations are duplicated, connector arcs all point from
    copy 0 to copy 1 (bit 0 on the new axis).
    """
    H = _as_hypercube(L)
    k = H.dimension
    half = 1 << (k - 1)  # edges per axis in Q_k
    block_mask = (1 << half) - 1
    bits = 0
    for axis in range(k):
        block = (H.bits >> (axis * half)) & block_mask
        # in Q_{k+1} each axis block has 2*half edges: copy 0 ranks, then copy 1 ranks
        bits |= (block | (block << half)) << (axis * 2 * half)
    # the new axis block is all zeros: x -> x + 2**k

    mode = DoublingMode(mode)
    second = complement(L.labels) if mode is DoublingMode.COMPLEMENT else L.labels
    return LabeledDigraph(OrientedHypercube(k + 1, bits), L.labels + second)


DOUBLING_CYCLE = (DoublingMode.COMPLEMENT, DoublingMode.COMPLEMENT, DoublingMode.IDENTITY)


def construct_cordial(n: int) -> LabeledDigraph:
    """Build a (2,3)-cordial labeled oriented Q_n for ``n`` a positive multiple of 3."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 3 or n % 3:
        raise ValueError(f"dimension must be a positive multiple of 3, got {n!r}")
    L = base_cube()
    for _ in range(n // 3 - 1):
        for mode in DOUBLING_CYCLE:
            L = double(L, mode)
    return L
