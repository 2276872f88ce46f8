"""Cube-of-cubes assemblies and the label-agreement count between cubes.

An arrangement places a labeled k-cube on every vertex ("slot") of a meta
cube Q_j.  Each meta-edge stands for the 2**k edges joining vertex ``v`` of
the tail slot to vertex ``b(v)`` of the head slot, where ``b`` is the
meta-arc's vertex bijection.  Slot ``s`` owns vertex ids ``(s << k) | v``,
so with identity bijections the assembly is exactly Q_{j+k} with the meta
axes on top.

Edges joining equally labeled vertices get arc label 0 whatever their
direction; the others stay *free* until :func:`balance_free_arcs` orients
them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .core import (
    Digraph,
    LabeledDigraph,
    LambdaTriple,
    as_digraph,
    hypercube_edges,
    hypercube_from_digraph,
    lambda_triple,
)
from .errors import ConfigurationError, DimensionError, InfeasibleError, StructureError


@dataclass(frozen=True)
class VertexBijection:
    forward: tuple

    def __post_init__(self):
        forward = tuple(int(x) for x in self.forward)
        object.__setattr__(self, "forward", forward)
        if sorted(forward) != list(range(len(forward))):
            raise StructureError(f"not a permutation of 0..{len(forward) - 1}: {list(forward)}")

    def __len__(self):
        return len(self.forward)

    def __call__(self, v: int) -> int:
        return self.forward[v]

    @classmethod
    def identity(cls, size: int) -> "VertexBijection":
        return cls(tuple(range(size)))

    def inverse(self) -> "VertexBijection":
        inv = [0] * len(self.forward)
        for v, w in enumerate(self.forward):
            inv[w] = v
        return VertexBijection(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self.forward))


def phi(L1: LabeledDigraph, L2: LabeledDigraph, b: Optional[VertexBijection] = None) -> int:
    """Number of vertices ``v`` with ``f1(v) == f2(b(v))``."""
    n = len(L1.labels)
    if len(L2.labels) != n:
        raise DimensionError(f"cannot compare labelings of sizes {n} and {len(L2.labels)}")
    if b is None:
        b = VertexBijection.identity(n)
    if len(b) != n:
        raise DimensionError(f"bijection has size {len(b)}, graphs have {n} vertices")
    f1, f2 = L1.labels, L2.labels
    return sum(1 for v in range(n) if f1[v] == f2[b(v)])


@dataclass(frozen=True)
class TableEntry:
    """A row/column of the agreement table: a base cube, possibly complemented."""

    name: str
    base: str
    complemented: bool = False


def lookup_bijection(bijections: Mapping, a: str, b: str, size: int) -> VertexBijection:
    """Bijection from base cube ``a`` to base cube ``b``.

    ``bijections`` is keyed by ``(a, b)`` pairs; a stored ``(b, a)`` entry is
    inverted.  Same-cube pairs default to the identity.
    """
    if (a, b) in bijections:
        return bijections[(a, b)]
    if (b, a) in bijections:
        return bijections[(b, a)].inverse()
    if a == b:
        return VertexBijection.identity(size)
    raise ConfigurationError(f"no bijection between cubes {a!r} and {b!r}")


def phi_table(entries: Sequence[TableEntry], cubes: Mapping[str, LabeledDigraph], bijections: Mapping) -> list:
    """Symmetric matrix of agreement counts between every pair of entries."""
    labeled = []
    for e in entries:
        if e.base not in cubes:
            raise ConfigurationError(f"unknown cube {e.base!r}")
        L = cubes[e.base]
        labeled.append(L.complemented() if e.complemented else L)
    size = len(labeled[0].labels) if labeled else 0
    m = len(entries)
    table = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            b = lookup_bijection(bijections, entries[i].base, entries[j].base, size)
            table[i][j] = table[j][i] = phi(labeled[i], labeled[j], b)
    return table


@dataclass(frozen=True)
class Slot:
    cube: str
    complemented: bool = False


@dataclass(frozen=True)
class MetaArc:
    tail: int
    head: int
    bijection: str = "identity"


@dataclass(frozen=True)
class CubeArrangement:
    meta_dimension: int
    slots: tuple
    meta_arcs: tuple
    cubes: Mapping = field(hash=False, compare=True)
    bijections: Mapping = field(default_factory=dict, hash=False, compare=True)

    def __post_init__(self):
        object.__setattr__(self, "slots", tuple(self.slots))
        object.__setattr__(self, "meta_arcs", tuple(self.meta_arcs))
        validate_arrangement(self)

    @property
    def cube_dimension(self) -> int:
        return _cube_size(self.cubes[self.slots[0].cube]).bit_length() - 1

    def slot_cube(self, s: int) -> LabeledDigraph:
        slot = self.slots[s]
        L = self.cubes[slot.cube]
        return L.complemented() if slot.complemented else L

    def bijection(self, name: str) -> VertexBijection:
        """Resolve a bijection name; a ``^-1`` suffix selects the inverse."""
        if name.endswith("^-1"):
            return self.bijection(name[:-3]).inverse()
        if name in self.bijections:
            return self.bijections[name]
        if name == "identity":
            return VertexBijection.identity(_cube_size(self.cubes[self.slots[0].cube]))
        raise ConfigurationError(f"unknown bijection {name!r}")


def _cube_size(L: LabeledDigraph) -> int:
    return len(L.labels)


def validate_arrangement(arr: CubeArrangement) -> None:
    j = arr.meta_dimension
    if j < 1:
        raise StructureError(f"meta dimension must be positive, got {j}")
    if len(arr.slots) != 1 << j:
        raise StructureError(f"meta dimension {j} needs {1 << j} slots, got {len(arr.slots)}")
    sizes = set()
    for s, slot in enumerate(arr.slots):
        if slot.cube not in arr.cubes:
            raise ConfigurationError(f"slot {s}: unknown cube {slot.cube!r}")
        L = arr.cubes[slot.cube]
        n = _cube_size(L)
        if n < 2 or n & (n - 1):
            raise StructureError(f"slot {s}: cube {slot.cube!r} has {n} vertices, not a cube")
        sizes.add(n)
    if len(sizes) != 1:
        raise StructureError(f"slot cubes have different sizes: {sorted(sizes)}")
    (size,) = sizes
    wanted = set(hypercube_edges(j))
    seen = set()
    for a in arr.meta_arcs:
        key = (min(a.tail, a.head), max(a.tail, a.head))
        if key not in wanted:
            raise StructureError(f"meta-arc ({a.tail}, {a.head}) is not an edge of the meta cube Q_{j}")
        if key in seen:
            raise StructureError(f"meta-edge {key} given twice")
        seen.add(key)
        if len(arr.bijection(a.bijection)) != size:
            raise StructureError(f"bijection {a.bijection!r} does not match cube size {size}")
    if seen != wanted:
        missing = sorted(wanted - seen)
        raise StructureError(f"meta-edges without an arc: {missing}")


@dataclass(frozen=True)
class PartialOrientedCube:
    """A labeled cube whose free edges still await an orientation.

    ``free_edges`` are ``(low, high)`` pairs in canonical order; both
    endpoints carry different labels.
    """

    dimension: int
    labels: tuple
    intra_arcs: tuple
    inter_zero_arcs: tuple
    free_edges: tuple

    @property
    def fixed_arcs(self) -> tuple:
        return self.intra_arcs + self.inter_zero_arcs

    @property
    def inter_edge_count(self) -> int:
        return len(self.inter_zero_arcs) + len(self.free_edges)

    def fixed_triple(self) -> LambdaTriple:
        return lambda_triple(Digraph(len(self.labels), self.fixed_arcs), self.labels)


def _meta_edge_key(arc: MetaArc):
    lo, hi = min(arc.tail, arc.head), max(arc.tail, arc.head)
    return ((hi ^ lo).bit_length() - 1, lo)


def assemble(arr: CubeArrangement) -> PartialOrientedCube:
    """Join the slot cubes along the meta-arcs."""
    k = arr.cube_dimension
    size = 1 << k
    labels = []
    intra = []
    for s in range(len(arr.slots)):
        L = arr.slot_cube(s)
        base = s << k
        labels.extend(L.labels)
        intra.extend((base | t, base | h) for t, h in as_digraph(L.graph).arcs)

    zero_arcs = []
    free = []
    for a in sorted(arr.meta_arcs, key=_meta_edge_key):
        b = arr.bijection(a.bijection)
        tb, hb = a.tail << k, a.head << k
        for v in range(size):
            u, w = tb | v, hb | b(v)
            if labels[u] == labels[w]:
                zero_arcs.append((u, w))
            else:
                free.append((min(u, w), max(u, w)))
    return PartialOrientedCube(
        arr.meta_dimension + k, tuple(labels), tuple(intra), tuple(zero_arcs), tuple(free)
    )


def _choose_plus_count(fixed: LambdaTriple, free: int):
    """Number of free edges to label +1 giving the tightest triple.

    Ties go to the smallest count.
    """
    best = None
    for x in range(free + 1):
        t = LambdaTriple(fixed.alpha + x, fixed.beta + free - x, fixed.gamma)
        spread = max(t) - min(t)
        if best is None or spread < best[0]:
            best = (spread, x, t)
    return best


def balance_free_arcs(p: PartialOrientedCube) -> LabeledDigraph:
    """Orient the free edges so the +1/-1/0 counts differ by at most one.

    Free edges are taken in canonical order; the first ones are pointed
    from their 0-labeled endpoint to their 1-labeled endpoint (label +1)
    until the +1 quota is met, the rest the other way (label -1).
    """
    fixed = p.fixed_triple()
    spread, plus, triple = _choose_plus_count(fixed, len(p.free_edges))
    if spread > 1:
        raise InfeasibleError(
            f"free edges cannot balance fixed counts {fixed}; best reachable triple is {triple}", triple
        )
    f = p.labels
    oriented = []
    for i, (lo, hi) in enumerate(p.free_edges):
        zero_end, one_end = (lo, hi) if f[lo] == 0 else (hi, lo)
        oriented.append((zero_end, one_end) if i < plus else (one_end, zero_end))
    D = Digraph(len(f), p.fixed_arcs + tuple(oriented))
    try:
        graph = hypercube_from_digraph(D)
    except StructureError:
        graph = D
    return LabeledDigraph(graph, f)
