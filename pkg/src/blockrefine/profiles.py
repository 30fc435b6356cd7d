"""k-blocks, separability and k-profiles.

Blocks come from the pairwise k-inseparability relation; profiles are
enumerated by backtracking over orientations with constraint propagation
(down-closure for consistency, closure under low-order joins for the
profile property).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import BoundExceeded, InvariantViolation
from .graph import Graph, _component_from, bits, components, neighbourhood
from .separations import OrientedSeparation, Separation, enumerate_separations

DEFAULT_PROFILE_CAP = 20
BRUTE_FORCE_LIMIT = 12


@dataclass(frozen=True, order=True)
class Block:
    vertices: int
    k: int

    def labels(self, g: Graph) -> list[str]:
        return g.labels(self.vertices)

    def __len__(self):
        return self.vertices.bit_count()


@dataclass(frozen=True)
class Profile:
    """An orientation of every separation of order < k (improper ones too)."""

    k: int
    oriented: frozenset[OrientedSeparation]

    def __contains__(self, x: OrientedSeparation) -> bool:
        return x in self.oriented

    def orientation_of(self, s: Separation) -> OrientedSeparation:
        for x in s.orientations():
            if x in self.oriented:
                return x
        raise KeyError(s)

    def is_regular(self, g: Graph) -> bool:
        return all(x.small != g.full for x in self.oriented)

    def key(self) -> tuple:
        return tuple(sorted((x.small, x.big) for x in self.oriented))


# -- inseparability ---------------------------------------------------------


def _separates(g: Graph, u: int, v: int, removed: int) -> bool:
    allowed = g.full & ~removed
    return not _component_from(g, u, allowed) >> v & 1


def _min_separator_brute(g: Graph, u: int, v: int) -> int:
    others = [i for i in range(g.n) if i not in (u, v)]
    for size in range(len(others) + 1):
        for idx in combinations(others, size):
            removed = 0
            for i in idx:
                removed |= 1 << i
            if _separates(g, u, v, removed):
                return size
    raise AssertionError("non-adjacent vertices are separated by all other vertices")


def _min_separator_flow(g: Graph, u: int, v: int) -> int:
    # vertex i splits into in-node 2i and out-node 2i+1
    n = g.n
    big = n + 1
    cap: dict[int, dict[int, int]] = {x: {} for x in range(2 * n)}

    def arc(x, y, c):
        cap[x][y] = cap[x].get(y, 0) + c
        cap[y].setdefault(x, 0)

    for i in range(n):
        arc(2 * i, 2 * i + 1, big if i in (u, v) else 1)
        for j in bits(g.adjacency[i]):
            arc(2 * i + 1, 2 * j, big)
    source, sink = 2 * u + 1, 2 * v
    flow = 0
    while True:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            x = queue.popleft()
            for y, c in cap[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if sink not in parent:
            return flow
        y = sink
        while parent[y] is not None:
            x = parent[y]
            cap[x][y] -= 1
            cap[y][x] += 1
            y = x
        flow += 1


def min_separator_size(g: Graph, u, v, method: str = "auto") -> float:
    """Fewest vertices other than u, v whose removal separates them.

    Infinite for adjacent vertices. ``method`` is ``"brute"`` (subset
    enumeration), ``"flow"`` (unit vertex capacities) or ``"auto"``.
    """
    i, j = g.index(u), g.index(v)
    if i == j:
        raise ValueError("u and v must differ")
    if g.adjacency[i] >> j & 1:
        return math.inf
    if method == "auto":
        method = "brute" if g.n <= BRUTE_FORCE_LIMIT else "flow"
    if method == "brute":
        return _min_separator_brute(g, i, j)
    if method == "flow":
        return _min_separator_flow(g, i, j)
    raise ValueError(f"unknown method {method!r}")


def inseparability(g: Graph, k: int, method: str = "auto") -> list[int]:
    """For every vertex, the mask of other vertices it is k-inseparable from."""
    rel = [0] * g.n
    vs = g.vertices
    for i, j in combinations(range(g.n), 2):
        if min_separator_size(g, vs[i], vs[j], method) >= k:
            rel[i] |= 1 << j
            rel[j] |= 1 << i
    return rel


def maximal_cliques(rel: list[int]) -> list[int]:
    """Maximal cliques of a graph given by adjacency masks (pivoting
    Bron-Kerbosch)."""
    out: list[int] = []

    def expand(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        pivot = max(bits(p | x), key=lambda w: (p & rel[w]).bit_count())
        for w in bits(p & ~rel[pivot]):
            expand(r | 1 << w, p & rel[w], x & rel[w])
            p &= ~(1 << w)
            x |= 1 << w

    expand(0, (1 << len(rel)) - 1, 0)
    return out


def find_k_blocks(g: Graph, k: int, method: str = "auto") -> list[Block]:
    if k < 1:
        raise ValueError("k must be at least 1")
    cliques = maximal_cliques(inseparability(g, k, method))
    blocks = [Block(c, k) for c in cliques if c.bit_count() >= k]
    return sorted(blocks, key=lambda b: g.labels(b.vertices))


def is_separable_block(g: Graph, b: Block) -> bool:
    return all(neighbourhood(g, c).bit_count() < b.k for c in components(g, b.vertices))


# -- profiles ---------------------------------------------------------------


def induced_profile(g: Graph, b: Block) -> Profile:
    """Orient every separation of order < k towards the side containing b."""
    chosen = set()
    for s in enumerate_separations(g, b.k):
        in_a = not b.vertices & ~s.a
        in_b = not b.vertices & ~s.b
        if in_a == in_b:
            raise InvariantViolation(
                f"block {g.labels(b.vertices)} lies in {'both' if in_a else 'neither'} "
                f"side(s) of a separation of order {s.order}"
            )
        chosen.add(OrientedSeparation(s.b, s.a) if in_a else OrientedSeparation(s.a, s.b))
    return Profile(b.k, frozenset(chosen))


def enumerate_profiles(
    g: Graph, k: int, regular_only: bool = True, cap: int | None = DEFAULT_PROFILE_CAP
) -> list[Profile]:
    """All k-profiles of ``g`` (only the regular ones by default).

    ``cap`` bounds the number of proper separations of order < k; improper
    ones are cheap because regularity fixes their orientation.
    """
    seps = enumerate_separations(g, k)
    if any(s.a == s.b for s in seps):
        # (V, V) is oriented by every orientation and violates the
        # profile property with itself
        return []
    proper = [s for s in seps if s.is_proper]
    improper = [s for s in seps if not s.is_proper]
    if cap is not None and len(proper) > cap:
        raise BoundExceeded(f"{len(proper)} proper separations of order < {k} exceed cap {cap}")
    search = _ProfileSearch(g, k, proper if regular_only else proper + improper, regular_only)
    out = []
    for assignment in search.run():
        chosen = {search.oriented(2 * i + o) for i, o in enumerate(assignment)}
        if regular_only:
            chosen.update(s.oriented() if s.a != g.full else OrientedSeparation(s.b, s.a)
                          for s in improper)
        p = Profile(k, frozenset(chosen))
        if not regular_only or p.is_regular(g):
            out.append(p)
    return out


class _ProfileSearch:
    """Backtracking over orientations of ``variables``.

    In regular mode the improper separations are not variables: each
    (S, V) is in every regular profile, and its joins with a chosen
    (A, B) are the separations (A | T, B) with T inside B - A.
    """

    def __init__(self, g: Graph, k: int, variables: list[Separation], regular: bool):
        self.k = k
        self.full = g.full
        self.regular = regular
        self.small: list[int] = []
        self.big: list[int] = []
        for s in variables:
            self.small += [s.a, s.b]
            self.big += [s.b, s.a]
        self.lookup = {(a, b): x for x, (a, b) in enumerate(zip(self.small, self.big))}
        self.count = len(variables)
        self._lower: dict[int, list[int]] = {}

    def oriented(self, x: int) -> OrientedSeparation:
        return OrientedSeparation(self.small[x], self.big[x])

    def lower(self, x: int) -> list[int]:
        if x not in self._lower:
            a, b = self.small[x], self.big[x]
            sm, bg = self.small, self.big
            self._lower[x] = [
                y for y in range(2 * self.count)
                if y >> 1 != x >> 1 and not sm[y] & ~a and not b & ~bg[y]
            ]
        return self._lower[x]

    def propagate(self, assign: list[int], chosen: list[int], queue: list[int]) -> bool:
        k, full, sm, bg = self.k, self.full, self.small, self.big
        while queue:
            x = queue.pop()
            i, o = x >> 1, x & 1
            if assign[i] == o:
                continue
            if assign[i] != -1:
                return False
            assign[i] = o
            a, b = sm[x], bg[x]
            queue.extend(self.lower(x))
            if self.regular:
                if b.bit_count() < k:
                    return False
                room = k - 1 - (a & b).bit_count()
                free = list(bits(b & ~a))
                for size in range(1, min(room, len(free)) + 1):
                    for idx in combinations(free, size):
                        t = 0
                        for v in idx:
                            t |= 1 << v
                        queue.append(self.lookup[(a | t, b)])
            for z in chosen:
                js, jb = a | sm[z], b & bg[z]
                if (js & jb).bit_count() < k:
                    if self.regular and js == full:
                        return False
                    queue.append(self.lookup[(js, jb)])
            chosen.append(x)
        return True

    def run(self) -> list[list[int]]:
        found: list[list[int]] = []

        def search(assign: list[int], chosen: list[int], start: int):
            i = start
            while i < self.count and assign[i] != -1:
                i += 1
            if i == self.count:
                found.append(assign)
                return
            for o in (0, 1):
                a2, c2 = assign.copy(), chosen.copy()
                if self.propagate(a2, c2, [2 * i + o]):
                    search(a2, c2, i + 1)

        search([-1] * self.count, [], 0)
        return found


def distinguishing_order(p1: Profile, p2: Profile) -> int | None:
    """Least order of a separation the two profiles orient differently."""
    diff = p1.oriented - p2.oriented
    if not diff:
        return None
    return min(x.order for x in diff)


def distinguishes(s: Separation, p1: Profile, p2: Profile) -> bool:
    return p1.orientation_of(s) != p2.orientation_of(s)


def efficiently_distinguishes(g: Graph, s: Separation, p1: Profile, p2: Profile) -> bool:
    if not distinguishes(s, p1, p2):
        return False
    return distinguishing_order(p1, p2) == s.order


def is_robust(g: Graph, p: Profile, n: int, include_improper: bool = True) -> bool:
    """n-robustness: low-order corner pairs of a member are never both out."""
    others = [s for s in enumerate_separations(g, n) if include_improper or s.is_proper]
    for x in p.oriented:
        a, b = x.small, x.big
        limit = x.order
        for s in others:
            c, d = s.a, s.b
            first = OrientedSeparation(a | c, b & d)
            second = OrientedSeparation(a | d, b & c)
            if first.order < limit and second.order < limit:
                if first not in p.oriented and second not in p.oriented:
                    return False
    return True
