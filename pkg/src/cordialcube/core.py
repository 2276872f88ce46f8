"""Digraphs, oriented hypercubes, vertex labelings and induced arc labels.

Vertices of the n-cube are the integers ``0 .. 2**n - 1``; bit ``i`` of a
vertex id is its coordinate along axis ``i``.  Edges are numbered
axis-major: for axis ``i`` the edges ``{u, u ^ 2**i}`` with bit ``i`` of
``u`` clear come in increasing ``u``.  An oriented hypercube stores one bit
per edge packed into a Python int (bit ``k`` belongs to edge ``k``); a clear
bit means the arc runs from the low endpoint to the high endpoint.

A vertex labeling is a tuple of 0/1 ints indexed by vertex id; an arc
labeling is a tuple of -1/0/+1 ints aligned with the digraph's arc list.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence, Union

from .errors import DimensionError, StructureError

VertexLabeling = tuple  # tuple[int, ...] of 0/1
ArcLabeling = tuple  # tuple[int, ...] of -1/0/1


@dataclass(frozen=True)
class Digraph:
    vertex_count: int
    arcs: tuple

    def __post_init__(self):
        arcs = tuple((int(t), int(h)) for t, h in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        if self.vertex_count < 0:
            raise StructureError(f"negative vertex count {self.vertex_count}")
        seen = set()
        for t, h in arcs:
            if t == h:
                raise StructureError(f"self-loop at vertex {t}")
            if not (0 <= t < self.vertex_count and 0 <= h < self.vertex_count):
                raise StructureError(f"arc ({t}, {h}) has an endpoint outside 0..{self.vertex_count - 1}")
            if (t, h) in seen:
                raise StructureError(f"duplicate arc ({t}, {h})")
            seen.add((t, h))

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def degrees(self) -> list:
        """Total (in + out) degree of every vertex."""
        deg = [0] * self.vertex_count
        for t, h in self.arcs:
            deg[t] += 1
            deg[h] += 1
        return deg


def edge_count(n: int) -> int:
    return n << (n - 1) if n > 0 else 0


def edge_index(n: int, axis: int, low: int) -> int:
    """Position of the edge ``{low, low | 2**axis}`` of Q_n in the canonical order.

    ``low`` must have bit ``axis`` clear.
    """
    rank = ((low >> (axis + 1)) << axis) | (low & ((1 << axis) - 1))
    return (axis << (n - 1)) + rank


@lru_cache(maxsize=None)
def hypercube_edges(n: int) -> tuple:
    """Edges of Q_n as ``(low, high)`` pairs in canonical order."""
    if n < 1:
        raise StructureError(f"hypercube dimension must be positive, got {n}")
    edges = []
    for axis in range(n):
        step = 1 << axis
        edges.extend((u, u | step) for u in range(1 << n) if not u & step)
    return tuple(edges)


@lru_cache(maxsize=None)
def _edge_lookup(n: int) -> dict:
    return {e: k for k, e in enumerate(hypercube_edges(n))}


@dataclass(frozen=True)
class OrientedHypercube:
    dimension: int
    bits: int = 0

    def __post_init__(self):
        if self.dimension < 1:
            raise StructureError(f"hypercube dimension must be positive, got {self.dimension}")
        if self.bits < 0 or self.bits >> self.edge_count:
            raise DimensionError(
                f"orientation does not fit in {self.edge_count} bits for dimension {self.dimension}"
            )

    @property
    def edge_count(self) -> int:
        return edge_count(self.dimension)

    @property
    def vertex_count(self) -> int:
        return 1 << self.dimension

    def bit(self, k: int) -> int:
        return (self.bits >> k) & 1

    def bit_sequence(self) -> tuple:
        """Orientation bits listed in canonical edge order."""
        return tuple((self.bits >> k) & 1 for k in range(self.edge_count))

    @classmethod
    def from_bit_sequence(cls, dimension: int, seq: Sequence[int]) -> "OrientedHypercube":
        if len(seq) != edge_count(dimension):
            raise DimensionError(
                f"expected {edge_count(dimension)} orientation bits for dimension {dimension}, got {len(seq)}"
            )
        bits = 0
        for k, b in enumerate(seq):
            if b not in (0, 1):
                raise DimensionError(f"orientation bit {k} is {b!r}, expected 0 or 1")
            bits |= b << k
        return cls(dimension, bits)

    def to_digraph(self) -> Digraph:
        return hypercube_digraph(self)


@lru_cache(maxsize=4096)
def hypercube_digraph(H: OrientedHypercube) -> Digraph:
    """Expand ``H`` into a digraph whose arc ``k`` realises edge ``k``."""
    arcs = []
    bits = H.bits
    for k, (lo, hi) in enumerate(hypercube_edges(H.dimension)):
        arcs.append((hi, lo) if (bits >> k) & 1 else (lo, hi))
    return Digraph(H.vertex_count, tuple(arcs))


def hypercube_from_digraph(D: Digraph) -> OrientedHypercube:
    """Recover the oriented hypercube whose expansion has the arcs of ``D``.

    The arcs of ``D`` may come in any order but must cover every edge of
    Q_n exactly once.
    """
    n = D.vertex_count.bit_length() - 1
    if n < 1 or D.vertex_count != 1 << n:
        raise StructureError(f"{D.vertex_count} vertices is not a power of two >= 2")
    if D.arc_count != edge_count(n):
        raise StructureError(f"Q_{n} has {edge_count(n)} edges but the digraph has {D.arc_count} arcs")
    lookup = _edge_lookup(n)
    bits = 0
    covered = set()
    for t, h in D.arcs:
        lo, hi = (t, h) if t < h else (h, t)
        k = lookup.get((lo, hi))
        if k is None:
            raise StructureError(f"arc ({t}, {h}) is not an edge of Q_{n}")
        if k in covered:
            raise StructureError(f"edge {{{lo}, {hi}}} appears twice")
        covered.add(k)
        if t > h:
            bits |= 1 << k
    return OrientedHypercube(n, bits)


GraphLike = Union[Digraph, OrientedHypercube]


def as_digraph(G: GraphLike) -> Digraph:
    if isinstance(G, OrientedHypercube):
        return hypercube_digraph(G)
    return G


class LambdaTriple(NamedTuple):
    """Counts of arcs labeled +1, -1 and 0."""

    alpha: int
    beta: int
    gamma: int

    def is_balanced(self) -> bool:
        return max(self) - min(self) <= 1

    def __str__(self):
        return f"({self.alpha},{self.beta},{self.gamma})"


@dataclass(frozen=True)
class LabeledDigraph:
    graph: GraphLike
    labels: VertexLabeling

    def __post_init__(self):
        labels = check_labeling(self.labels, self.graph.vertex_count)
        object.__setattr__(self, "labels", labels)

    @property
    def digraph(self) -> Digraph:
        return as_digraph(self.graph)

    @property
    def dimension(self):
        return self.graph.dimension if isinstance(self.graph, OrientedHypercube) else None

    def lambda_triple(self) -> LambdaTriple:
        return lambda_triple(self.graph, self.labels)

    def arc_labels(self) -> ArcLabeling:
        return induce_arc_labeling(self.graph, self.labels)

    def complemented(self) -> "LabeledDigraph":
        return LabeledDigraph(self.graph, complement(self.labels))


def check_labeling(f: Sequence[int], vertex_count: int) -> VertexLabeling:
    f = tuple(f)
    if len(f) != vertex_count:
        raise DimensionError(f"labeling has {len(f)} entries but the graph has {vertex_count} vertices")
    for v, x in enumerate(f):
        if x not in (0, 1):
            raise DimensionError(f"label of vertex {v} is {x!r}, expected 0 or 1")
    return tuple(int(x) for x in f)


def induce_arc_labeling(D: GraphLike, f: Sequence[int]) -> ArcLabeling:
    """Label each arc ``u -> v`` with ``f(v) - f(u)``."""
    D = as_digraph(D)
    f = check_labeling(f, D.vertex_count)
    return tuple(f[h] - f[t] for t, h in D.arcs)


def lambda_triple(D: GraphLike, f: Sequence[int]) -> LambdaTriple:
    D = as_digraph(D)
    f = check_labeling(f, D.vertex_count)
    plus = minus = 0
    for t, h in D.arcs:
        d = f[h] - f[t]
        if d > 0:
            plus += 1
        elif d < 0:
            minus += 1
    return LambdaTriple(plus, minus, D.arc_count - plus - minus)


def is_friendly(f: Sequence[int]) -> bool:
    ones = sum(f)
    return abs((len(f) - ones) - ones) <= 1


def is_23_cordial_pair(D: GraphLike, f: Sequence[int]) -> bool:
    """True when ``f`` is friendly and the +1/-1/0 arc counts differ by at most one."""
    triple = lambda_triple(D, f)
    return is_friendly(f) and triple.is_balanced()


def reverse(D: GraphLike) -> GraphLike:
    """Reverse every arc, keeping arc positions.

    An oriented hypercube stays an oriented hypercube (all bits flipped).
    """
    if isinstance(D, OrientedHypercube):
        return OrientedHypercube(D.dimension, D.bits ^ ((1 << D.edge_count) - 1))
    return Digraph(D.vertex_count, tuple((h, t) for t, h in D.arcs))


def complement(f: Sequence[int]) -> VertexLabeling:
    return tuple(1 - x for x in f)


def is_digon_free(D: GraphLike) -> bool:
    if isinstance(D, OrientedHypercube):
        return True
    arcs = set(D.arcs)
    return not any((h, t) in arcs for t, h in arcs)


def labeling_from_mask(mask: int, vertex_count: int) -> VertexLabeling:
    """Labeling whose vertex ``v`` carries bit ``v`` of ``mask``."""
    return tuple((mask >> v) & 1 for v in range(vertex_count))
