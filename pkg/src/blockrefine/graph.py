"""Finite simple graphs over string labels, with bitmask vertex sets.

Vertices are kept in lexicographic label order and vertex ``i`` of that
order is bit ``i`` of a vertex-set mask. Every set-valued quantity in the
package is such a mask, interpreted against the graph it came from.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import BoundExceeded, InputError

DEFAULT_AUTOMORPHISM_CAP = 10


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]
    adjacency: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if list(self.vertices) != sorted(set(self.vertices)):
            raise InputError("vertices must be distinct and sorted")
        index = {v: i for i, v in enumerate(self.vertices)}
        adj = [0] * len(self.vertices)
        for e in self.edges:
            if len(e) != 2:
                raise InputError(f"not a simple edge: {sorted(e)}")
            u, v = sorted(e)
            if u not in index or v not in index:
                raise InputError(f"edge endpoint outside vertex set: {u} {v}")
            adj[index[u]] |= 1 << index[v]
            adj[index[v]] |= 1 << index[u]
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "adjacency", tuple(adj))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple], vertices: Iterable = ()) -> "Graph":
        """Build a graph from label pairs; labels are converted with ``str``."""
        vs = {str(v) for v in vertices}
        es = set()
        for u, v in edges:
            u, v = str(u), str(v)
            if u == v:
                raise InputError(f"self-loop at {u}")
            vs.update((u, v))
            es.add(frozenset((u, v)))
        return cls(tuple(sorted(vs)), frozenset(es))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def full(self) -> int:
        return (1 << len(self.vertices)) - 1

    def index(self, label) -> int:
        return self._index[str(label)]

    def mask(self, labels: Iterable) -> int:
        m = 0
        for v in labels:
            m |= 1 << self._index[str(v)]
        return m

    def labels(self, mask: int) -> list[str]:
        return [self.vertices[i] for i in bits(mask)]

    def has_edge(self, u, v) -> bool:
        return bool(self.adjacency[self.index(u)] >> self.index(v) & 1)

    def edge_masks(self) -> list[int]:
        """Every edge as a two-bit mask, in a fixed order."""
        out = []
        for i, nb in enumerate(self.adjacency):
            for j in bits(nb >> (i + 1)):
                out.append((1 << i) | (1 << (i + 1 + j)))
        return out

    def degree(self, i: int) -> int:
        return self.adjacency[i].bit_count()

    def relabel(self, mapping: dict[str, str]) -> "Graph":
        return Graph.from_edges(
            ((mapping[u], mapping[v]) for u, v in (sorted(e) for e in self.edges)),
            vertices=(mapping[v] for v in self.vertices),
        )

    def map_mask(self, mask: int, mapping: dict[str, str]) -> int:
        """Image of a vertex set under a label map onto this graph's labels."""
        out = 0
        for i in bits(mask):
            out |= 1 << self._index[mapping[self.vertices[i]]]
        return out


def neighbourhood(g: Graph, s: int) -> int:
    """All vertices outside ``s`` adjacent to some vertex of ``s``."""
    out = 0
    for i in bits(s):
        out |= g.adjacency[i]
    return out & ~s


def _component_from(g: Graph, start: int, allowed: int) -> int:
    comp = frontier = 1 << start
    while frontier:
        grow = 0
        for i in bits(frontier):
            grow |= g.adjacency[i]
        frontier = grow & allowed & ~comp
        comp |= frontier
    return comp


def components(g: Graph, removed: int = 0) -> list[int]:
    """Vertex sets of the components of ``g - removed``, by smallest vertex."""
    rest = g.full & ~removed
    out = []
    while rest:
        low = (rest & -rest).bit_length() - 1
        comp = _component_from(g, low, rest)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def automorphisms(g: Graph, cap: int | None = DEFAULT_AUTOMORPHISM_CAP) -> list[dict[str, str]]:
    """All automorphisms of ``g`` as label maps, identity first.

    Plain backtracking over vertex images, pruned by degree and by
    adjacency to the vertices already placed.
    """
    n = g.n
    if cap is not None and n > cap:
        raise BoundExceeded(f"automorphism search on {n} vertices exceeds cap {cap}")
    adj = g.adjacency
    deg = [g.degree(i) for i in range(n)]
    image = [-1] * n
    found: list[tuple[int, ...]] = []

    def extend(i: int, used: int):
        if i == n:
            found.append(tuple(image))
            return
        for j in range(n):
            if used >> j & 1 or deg[j] != deg[i]:
                continue
            ok = True
            for p in range(i):
                if (adj[i] >> p & 1) != (adj[j] >> image[p] & 1):
                    ok = False
                    break
            if ok:
                image[i] = j
                extend(i + 1, used | 1 << j)
        image[i] = -1

    extend(0, 0)
    vs = g.vertices
    return [{vs[i]: vs[p[i]] for i in range(n)} for p in sorted(found)]
