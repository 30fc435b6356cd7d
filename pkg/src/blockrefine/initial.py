"""A brute-force tight decomposition that efficiently distinguishes all
regular k-profiles.

Small graphs only: every regular k-profile is enumerated, their efficient
distinguishers are collected level by level, and the ones nested with the
rest of their level (and with everything kept so far) form a nested
system, which is turned into a tree-decomposition through its consistent
orientations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import IncompleteSystem, InvariantViolation
from .graph import Graph
from .profiles import (
    DEFAULT_PROFILE_CAP,
    Profile,
    distinguishing_order,
    enumerate_profiles,
    find_k_blocks,
)
from .separations import OrientedSeparation, Separation, is_nested, is_tight, lt
from .treedec import (
    TreeDecomposition,
    adhesion,
    is_tight_td,
    separations_of,
    td_distinguishes,
    validate,
)


@dataclass(frozen=True)
class NestedSystem:
    separations: tuple[Separation, ...]
    k: int

    def __len__(self):
        return len(self.separations)


def distinguishing_system(g: Graph, k: int, cap: int | None = DEFAULT_PROFILE_CAP,
                          profiles: list[Profile] | None = None) -> NestedSystem:
    if profiles is None:
        profiles = enumerate_profiles(g, k, regular_only=True, cap=cap)
    pairs = [(p, q, distinguishing_order(p, q)) for p, q in combinations(profiles, 2)]
    kept: list[Separation] = []
    for level in range(k):
        candidates = set()
        for p, q, order in pairs:
            if order != level:
                continue
            candidates.update(x.underlying for x in p.oriented - q.oriented if x.order == level)
        pool = sorted(candidates)
        kept += [s for s in pool
                 if all(is_nested(s, t) for t in pool) and all(is_nested(s, t) for t in kept)]
    kept.sort(key=lambda s: (s.order, s.a, s.b))
    for s in kept:
        if not s.is_proper or not is_tight(g, s):
            raise InvariantViolation(
                f"efficient distinguisher {s.oriented().labels(g)} is not tight and proper")
    missing = []
    for p, q, order in pairs:
        if not any(s.order == order and p.orientation_of(s) != q.orientation_of(s) for s in kept):
            missing.append((p, q))
    if missing:
        raise IncompleteSystem(
            f"{len(missing)} of {len(pairs)} profile pairs not efficiently distinguished "
            f"by the nested candidates (k={k})")
    return NestedSystem(tuple(kept), k)


def _consistent(x: OrientedSeparation, y: OrientedSeparation) -> bool:
    return not lt(x.inverse(), y) and not lt(y.inverse(), x)


def consistent_orientations(system: NestedSystem) -> list[tuple[OrientedSeparation, ...]]:
    seps = list(system.separations)
    out = []

    def extend(chosen: list[OrientedSeparation]):
        if len(chosen) == len(seps):
            out.append(tuple(chosen))
            return
        for x in seps[len(chosen)].orientations():
            if all(_consistent(x, y) for y in chosen):
                extend(chosen + [x])

    extend([])
    return out


def tree_from_nested(g: Graph, system: NestedSystem) -> TreeDecomposition:
    """One node per consistent orientation, bagged by the intersection of
    its big sides; orientations differing in one place are adjacent."""
    nodes = consistent_orientations(system)
    bags = {}
    for i, orientation in enumerate(nodes):
        bag = g.full
        for x in orientation:
            bag &= x.big
        bags[i] = bag
    edges = [(i, j) for i, j in combinations(range(len(nodes)), 2)
             if sum(x != y for x, y in zip(nodes[i], nodes[j])) == 1]
    td = TreeDecomposition(bags, edges)
    report = validate(g, td)
    if not report.ok:
        raise InvariantViolation("nested system gave an invalid decomposition: "
                                 + "; ".join(report.lines()))
    if separations_of(g, td) != set(system.separations):
        raise InvariantViolation("decomposition does not induce exactly the nested system")
    return td


def initial_decomposition(g: Graph, k: int, cap: int | None = DEFAULT_PROFILE_CAP,
                          profiles: list[Profile] | None = None) -> TreeDecomposition:
    """Tight decomposition of adhesion < k efficiently distinguishing every
    two regular k-profiles; all of that is re-checked before returning."""
    if profiles is None:
        profiles = enumerate_profiles(g, k, regular_only=True, cap=cap)
    td = tree_from_nested(g, distinguishing_system(g, k, cap, profiles))
    if not is_tight_td(g, td):
        raise InvariantViolation("initial decomposition is not tight")
    if adhesion(g, td) >= k:
        raise InvariantViolation("initial decomposition has adhesion >= k")
    for p, q in combinations(profiles, 2):
        if not td_distinguishes(g, td, p, q, efficiently=True):
            raise InvariantViolation("initial decomposition misses a profile pair")
    blocks = find_k_blocks(g, k)
    for t, bag in td.bags.items():
        if sum(1 for b in blocks if not b.vertices & ~bag) > 1:
            raise InvariantViolation(f"bag of node {t} contains two {k}-blocks")
    return td
