"""Exhaustive searches: cordial labelings, orientations and cube classes.

Isomorphism of oriented hypercubes is taken to be the action of the
hyperoctahedral group (axis permutations combined with axis reflections)
on Q_n.  A group element moves edges to edges and reverses the arc of an
edge exactly when it reflects the edge's axis, so its action on the packed
orientation bits is a bit permutation followed by an XOR mask.  The
canonical form of an orientation is the lexicographically smallest
sequence of bits (edge 0 first) in its orbit.
"""

from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional

from .core import (
    Digraph,
    GraphLike,
    OrientedHypercube,
    as_digraph,
    edge_count,
    edge_index,
    hypercube_edges,
    is_digon_free,
)
from .errors import BudgetError, DomainError, StructureError

MAX_CLASSIFY_DIMENSION = 3
DEFAULT_ORIENTATION_BUDGET = 1 << 24


# -- labelings ---------------------------------------------------------------


def friendly_labelings(vertex_count: int) -> Iterator[tuple]:
    """All friendly labelings; the 1-sets come in lexicographic order.

    For an odd vertex count the labelings with fewer ones come first.
    """
    counts = sorted({vertex_count // 2, (vertex_count + 1) // 2})
    for ones in counts:
        for chosen in itertools.combinations(range(vertex_count), ones):
            f = [0] * vertex_count
            for v in chosen:
                f[v] = 1
            yield tuple(f)


def friendly_labeling_count(vertex_count: int) -> int:
    counts = {vertex_count // 2, (vertex_count + 1) // 2}
    return sum(math.comb(vertex_count, k) for k in counts)


@dataclass(frozen=True)
class LabelingSearch:
    """Outcome of an exhaustive labeling search.

    ``examined`` counts the friendly labelings tried; when ``labeling`` is
    None it equals ``friendly_total`` and certifies exhaustion.
    """

    labeling: Optional[tuple]
    examined: int
    friendly_total: int

    @property
    def found(self) -> bool:
        return self.labeling is not None


def _balanced(plus: int, minus: int, zero: int) -> bool:
    return max(plus, minus, zero) - min(plus, minus, zero) <= 1


def search_cordial_labeling(D: GraphLike) -> LabelingSearch:
    D = as_digraph(D)
    if not is_digon_free(D):
        raise DomainError("cordial labeling search is only defined for digon-free digraphs")
    arcs = D.arcs
    m = len(arcs)
    examined = 0
    for f in friendly_labelings(D.vertex_count):
        examined += 1
        plus = minus = 0
        for t, h in arcs:
            d = f[h] - f[t]
            if d > 0:
                plus += 1
            elif d < 0:
                minus += 1
        if _balanced(plus, minus, m - plus - minus):
            return LabelingSearch(f, examined, friendly_labeling_count(D.vertex_count))
    return LabelingSearch(None, examined, friendly_labeling_count(D.vertex_count))


def find_cordial_labeling(D: GraphLike) -> Optional[tuple]:
    return search_cordial_labeling(D).labeling


# -- hyperoctahedral group ---------------------------------------------------


@dataclass(frozen=True)
class SignedPermutation:
    """Automorphism ``x -> permute_bits(x) ^ flip_mask`` of Q_n.

    Bit ``i`` of ``x`` moves to bit ``axis_perm[i]``.
    """

    axis_perm: tuple
    flip_mask: int = 0

    def __post_init__(self):
        object.__setattr__(self, "axis_perm", tuple(self.axis_perm))
        n = len(self.axis_perm)
        if sorted(self.axis_perm) != list(range(n)):
            raise StructureError(f"axis_perm {self.axis_perm} is not a permutation")
        if self.flip_mask < 0 or self.flip_mask >> n:
            raise StructureError(f"flip mask {self.flip_mask} has bits beyond dimension {n}")

    @property
    def dimension(self) -> int:
        return len(self.axis_perm)

    def apply_vertex(self, x: int) -> int:
        return _map_vertex(self.axis_perm, self.flip_mask, x)

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        """``self`` after ``other``."""
        perm = tuple(self.axis_perm[other.axis_perm[i]] for i in range(self.dimension))
        flips = 0
        for i in range(self.dimension):
            flips |= ((other.flip_mask >> i) & 1) << self.axis_perm[i]
        return SignedPermutation(perm, flips ^ self.flip_mask)

    def edge_action(self) -> tuple:
        """``(target edge, reversed)`` for every source edge."""
        return _edge_action(self.axis_perm, self.flip_mask)

    def apply(self, H: OrientedHypercube) -> OrientedHypercube:
        if H.dimension != self.dimension:
            raise StructureError(f"group element of dimension {self.dimension} applied to Q_{H.dimension}")
        bits = 0
        for k, (target, flip) in enumerate(self.edge_action()):
            bits |= (((H.bits >> k) & 1) ^ flip) << target
        return OrientedHypercube(H.dimension, bits)


def _map_vertex(axis_perm: tuple, flip_mask: int, x: int) -> int:
    y = 0
    for i, p in enumerate(axis_perm):
        y |= ((x >> i) & 1) << p
    return y ^ flip_mask


@lru_cache(maxsize=None)
def _edge_action(axis_perm: tuple, flip_mask: int) -> tuple:
    n = len(axis_perm)
    action = []
    for axis in range(n):
        new_axis = axis_perm[axis]
        flip = (flip_mask >> new_axis) & 1
        for lo, _ in hypercube_edges(n)[axis << (n - 1):(axis + 1) << (n - 1)]:
            image = _map_vertex(axis_perm, flip_mask, lo)
            new_low = image ^ (flip << new_axis)
            action.append((edge_index(n, new_axis, new_low), flip))
    return tuple(action)


@lru_cache(maxsize=None)
def hyperoctahedral_group(n: int) -> tuple:
    """All ``n! * 2**n`` signed permutations, identity first."""
    return tuple(
        SignedPermutation(perm, mask)
        for perm in itertools.permutations(range(n))
        for mask in range(1 << n)
    )


# -- canonical forms ---------------------------------------------------------

_CHUNK = 8


@lru_cache(maxsize=None)
def _key_tables(n: int) -> tuple:
    """Per group element: byte lookup tables and the XOR mask.

    The *key* of an orientation is its bit sequence read as a binary
    number with edge 0 most significant, so smaller key = lexicographically
    smaller sequence.
    """
    m = edge_count(n)
    chunks = (m + _CHUNK - 1) // _CHUNK
    tables = []
    for g in hyperoctahedral_group(n):
        action = g.edge_action()
        weights = [1 << (m - 1 - target) for target, _ in action]
        flip_key = 0
        for (target, flip), w in zip(action, weights):
            if flip:
                flip_key |= w
        per_chunk = []
        for c in range(chunks):
            lo = c * _CHUNK
            width = min(_CHUNK, m - lo)
            table = [0] * (1 << width)
            for byte in range(1, 1 << width):
                low_bit = byte & -byte
                table[byte] = table[byte ^ low_bit] | weights[lo + low_bit.bit_length() - 1]
            per_chunk.append(tuple(table))
        tables.append((tuple(per_chunk), flip_key))
    return tuple(tables)


def _keys_in_orbit(n: int, bits: int) -> Iterator[int]:
    for per_chunk, flip_key in _key_tables(n):
        key = flip_key
        b = bits
        for table in per_chunk:
            key ^= table[b & 0xFF]
            b >>= _CHUNK
        yield key


def canonical_key(H: OrientedHypercube) -> int:
    return min(_keys_in_orbit(H.dimension, H.bits))


def key_to_hypercube(n: int, key: int) -> OrientedHypercube:
    m = edge_count(n)
    bits = 0
    for k in range(m):
        bits |= ((key >> (m - 1 - k)) & 1) << k
    return OrientedHypercube(n, bits)


def hypercube_key(H: OrientedHypercube) -> int:
    m = H.edge_count
    key = 0
    for k in range(m):
        key |= H.bit(k) << (m - 1 - k)
    return key


def canonical_form(H: OrientedHypercube) -> OrientedHypercube:
    """Lexicographically smallest orientation isomorphic to ``H``."""
    return key_to_hypercube(H.dimension, canonical_key(H))


def are_isomorphic(H1: OrientedHypercube, H2: OrientedHypercube) -> bool:
    return H1.dimension == H2.dimension and canonical_key(H1) == canonical_key(H2)


def burnside_orbit_count(n: int) -> int:
    """Number of orientation classes of Q_n by Burnside's lemma.

    Works from the vertex action alone: each group element permutes the
    edges (as vertex pairs) and may reverse them; an orientation is fixed
    exactly when every edge cycle reverses an even number of times, giving
    two fixed choices per cycle.  Independent of the canonical-form tables.
    """
    vertices = range(1 << n)
    edges = [(u, v) for u in vertices for v in vertices if u < v and bin(u ^ v).count("1") == 1]
    position = {e: i for i, e in enumerate(edges)}
    group = []
    for perm in itertools.permutations(range(n)):
        for mask in range(1 << n):
            group.append([sum(((x >> i) & 1) << perm[i] for i in range(n)) ^ mask for x in vertices])
    total = Fraction(0)
    for vmap in group:
        image = []
        for u, v in edges:
            a, b = vmap[u], vmap[v]
            image.append((position[(min(a, b), max(a, b))], a > b))
        seen = [False] * len(edges)
        fixed = 1
        for start in range(len(edges)):
            if seen[start]:
                continue
            parity = 0
            e = start
            while not seen[e]:
                seen[e] = True
                target, rev = image[e]
                parity ^= rev
                e = target
            fixed *= 0 if parity else 2
        total += fixed
    return int(total / len(group))


# -- enumeration and classification ------------------------------------------


def _check_classify_dimension(dim: int) -> None:
    if not isinstance(dim, int) or dim < 1:
        raise ValueError(f"dimension must be a positive integer, got {dim!r}")
    if dim > MAX_CLASSIFY_DIMENSION:
        raise ValueError(
            f"exhaustive enumeration is limited to dimension <= {MAX_CLASSIFY_DIMENSION} "
            f"(Q_{dim} has 2**{edge_count(dim)} orientations)"
        )


def _canonical_keys_in_range(dim: int, start: int, stop: int) -> tuple:
    keys = set()
    for bits in range(start, stop):
        keys.add(min(_keys_in_orbit(dim, bits)))
    return stop - start, tuple(sorted(keys))


def _partitions(total_bits: int, jobs: int) -> list:
    """Split ``range(2**total_bits)`` into blocks sharing their high bits."""
    high = 0
    while (1 << high) < jobs and high < total_bits:
        high += 1
    size = 1 << (total_bits - high)
    return [(p * size, (p + 1) * size) for p in range(1 << high)]


def _enumerate_keys(dim: int, jobs: int = 1):
    parts = _partitions(edge_count(dim), max(1, jobs))
    if jobs <= 1 or len(parts) == 1:
        results = [_canonical_keys_in_range(dim, a, b) for a, b in parts]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_canonical_keys_in_range, [dim] * len(parts), *zip(*parts)))
    visited = sum(r[0] for r in results)
    keys = sorted(set().union(*(r[1] for r in results)))
    return visited, keys


def enumerate_classes(dim: int, jobs: int = 1) -> list:
    """One canonical representative per isomorphism class, in lexicographic order."""
    _check_classify_dimension(dim)
    _, keys = _enumerate_keys(dim, jobs)
    return [key_to_hypercube(dim, k) for k in keys]


@dataclass(frozen=True)
class ClassificationReport:
    dimension: int
    total_orientations: int
    isomorphism_class_count: int
    non_cordial_class_representatives: tuple
    witnesses: dict = field(default_factory=dict, compare=False, repr=False)


def classify_cordiality(dim: int, jobs: int = 1) -> ClassificationReport:
    """Check every orientation class of Q_dim for a (2,3)-cordial labeling."""
    _check_classify_dimension(dim)
    visited, keys = _enumerate_keys(dim, jobs)
    bad = []
    witnesses = {}
    for k in keys:
        H = key_to_hypercube(dim, k)
        f = find_cordial_labeling(H)
        if f is None:
            bad.append(H)
        else:
            witnesses[H] = f
    return ClassificationReport(dim, visited, len(keys), tuple(bad), witnesses)


# -- undirected graphs and orientability --------------------------------------


@dataclass(frozen=True)
class UndirectedGraph:
    vertex_count: int
    edges: tuple

    def __post_init__(self):
        edges = []
        seen = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise StructureError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise StructureError(f"edge ({u}, {v}) has an endpoint outside 0..{self.vertex_count - 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise StructureError(f"duplicate edge {key}")
            seen.add(key)
            edges.append(key)
        object.__setattr__(self, "edges", tuple(edges))

    def non_isolated(self) -> tuple:
        return tuple(sorted({v for e in self.edges for v in e}))


def remove_isolated(G: UndirectedGraph) -> tuple:
    """Induced subgraph on the non-isolated vertices and the kept old ids."""
    keep = G.non_isolated()
    new_id = {v: i for i, v in enumerate(keep)}
    return UndirectedGraph(len(keep), tuple((new_id[u], new_id[v]) for u, v in G.edges)), keep


def x_graph(n: int) -> UndirectedGraph:
    """Three disjoint edges on vertices 0..5 plus ``n - 6`` isolated vertices."""
    if n < 6:
        raise ValueError(f"x_graph needs at least 6 vertices, got {n}")
    return UndirectedGraph(n, ((0, 1), (2, 3), (4, 5)))


def orientation_work(G: UndirectedGraph) -> int:
    return (1 << len(G.edges)) * friendly_labeling_count(G.vertex_count)


def find_23_orientation(
    G: UndirectedGraph, keep_isolated: bool = False, budget: int = DEFAULT_ORIENTATION_BUDGET
) -> Optional[tuple]:
    """Search every orientation and friendly labeling for a cordial pair.

    Isolated vertices are dropped first unless ``keep_isolated``.  Returns
    ``(digraph, labeling)`` on the original vertex ids, or None.
    """
    if keep_isolated:
        H, keep = G, tuple(range(G.vertex_count))
    else:
        H, keep = remove_isolated(G)
    work = orientation_work(H)
    if work > budget:
        raise BudgetError(f"search needs {work} work units, budget is {budget}", work, budget)
    labelings = list(friendly_labelings(H.vertex_count))
    m = len(H.edges)
    for mask in range(1 << m):
        arcs = tuple((v, u) if (mask >> i) & 1 else (u, v) for i, (u, v) in enumerate(H.edges))
        for f in labelings:
            plus = minus = 0
            for t, h in arcs:
                d = f[h] - f[t]
                if d > 0:
                    plus += 1
                elif d < 0:
                    minus += 1
            if _balanced(plus, minus, m - plus - minus):
                # lift back to the original vertex ids; dropped vertices take label 0
                full = [0] * G.vertex_count
                for i, v in enumerate(keep):
                    full[v] = f[i]
                return Digraph(G.vertex_count, tuple((keep[t], keep[h]) for t, h in arcs)), tuple(full)
    return None


# -- randomized exploration ----------------------------------------------------


@dataclass(frozen=True)
class ExplorationSample:
    orientation: OrientedHypercube
    labeling: Optional[tuple]
    exhaustive: bool


def explore_orientations(
    dim: int, samples: int, seed: int, labeling_tries: int = 20000
) -> list:
    """Random orientations of Q_dim, each searched for a cordial labeling.

    Small cubes are searched exhaustively; beyond ``labeling_tries``
    friendly labelings the search samples labelings at random and a
    negative answer proves nothing.
    """
    rng = random.Random(seed)
    m = edge_count(dim)
    nv = 1 << dim
    exhaustive = friendly_labeling_count(nv) <= labeling_tries
    out = []
    for _ in range(samples):
        H = OrientedHypercube(dim, rng.getrandbits(m))
        if exhaustive:
            f = find_cordial_labeling(H)
        else:
            f = _sample_labelings(H, rng, labeling_tries)
        out.append(ExplorationSample(H, f, exhaustive))
    return out


def _sample_labelings(H: OrientedHypercube, rng: random.Random, tries: int) -> Optional[tuple]:
    arcs = as_digraph(H).arcs
    m = len(arcs)
    nv = H.vertex_count
    base = [0] * (nv // 2) + [1] * (nv - nv // 2)
    for _ in range(tries):
        rng.shuffle(base)
        plus = sum(1 for t, h in arcs if base[h] > base[t])
        minus = sum(1 for t, h in arcs if base[h] < base[t])
        if _balanced(plus, minus, m - plus - minus):
            return tuple(base)
    return None


def apply_random_automorphism(H: OrientedHypercube, rng: random.Random) -> OrientedHypercube:
    return rng.choice(hyperoctahedral_group(H.dimension)).apply(H)


def orbit(H: OrientedHypercube) -> set:
    return {g.apply(H) for g in hyperoctahedral_group(H.dimension)}

