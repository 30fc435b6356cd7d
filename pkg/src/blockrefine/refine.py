"""Refining a tight decomposition so that separable blocks become bags.

For a separable block b inside the bag of a node t, the star of separations
pointing at t is replaced by a star whose interior is exactly b: every
component C of G - b not hidden in the strict small side of a star element
contributes (X_C, Y_C), where X_C is C, its neighbourhood and the strict
small sides of the star elements C reaches into; elements whose separator
lies inside b are kept. The part at t then becomes a star-shaped
decomposition with centre b, and the parts are glued along the old edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .errors import BlockCollision, InvariantViolation, NoGluingLeaf, PreconditionViolation
from .graph import Graph, components, neighbourhood
from .profiles import Block, is_separable_block
from .separations import (
    OrientedSeparation,
    interior,
    is_star,
    is_tight,
    le,
    star_le,
)
from .treedec import (
    TreeDecomposition,
    induced_separation,
    node_star,
    refines,
    separations_of,
    validate,
)


@dataclass(frozen=True)
class BlockStarResult:
    rho: frozenset[OrientedSeparation]
    per_component: dict[int, OrientedSeparation]
    retained: frozenset[OrientedSeparation]


def _check_preconditions(g: Graph, b: Block, sigma: Iterable[OrientedSeparation]):
    sigma = list(sigma)
    for x in sigma:
        if not is_tight(g, x):
            raise PreconditionViolation(f"star element {x.labels(g)} is not tight")
    if b.vertices & ~interior(g, sigma):
        raise PreconditionViolation(f"block {b.labels(g)} is not inside the interior of the star")


def eligible_components(g: Graph, b: Block, sigma: Iterable[OrientedSeparation]) -> list[int]:
    """Components of G - b meeting the big side of every star element."""
    sigma = list(sigma)
    _check_preconditions(g, b, sigma)
    return [c for c in components(g, b.vertices) if all(c & x.big for x in sigma)]


def component_separation(g: Graph, b: Block, sigma: Iterable[OrientedSeparation],
                         c: int) -> OrientedSeparation:
    sigma = list(sigma)
    if c not in components(g, b.vertices) or not all(c & x.big for x in sigma):
        raise PreconditionViolation(f"{g.labels(c)} is not an eligible component")
    absorbed = c
    for x in sigma:
        if x.small & c:
            absorbed |= x.strict_small
    nb = neighbourhood(g, c)
    sep = OrientedSeparation(absorbed | nb, g.full & ~absorbed)
    if sep.separator != nb or not sep.is_valid(g):
        raise InvariantViolation(
            f"(X_C, Y_C) for component {g.labels(c)} is not a separation with separator N(C); "
            f"got sides {sep.labels(g)}")
    if sep.order >= b.k:
        raise InvariantViolation(
            f"component {g.labels(c)} has |N(C)| = {sep.order} >= k = {b.k}: block not separable")
    return sep


def block_star(g: Graph, b: Block, sigma: Iterable[OrientedSeparation]) -> BlockStarResult:
    """The star rho with sigma <= rho and interior(rho) = b; the four
    properties are checked before returning."""
    sigma = frozenset(sigma)
    if not is_separable_block(g, b):
        raise PreconditionViolation(f"block {b.labels(g)} is not separable")
    per_component = {c: component_separation(g, b, sigma, c)
                     for c in eligible_components(g, b, sigma)}
    retained = frozenset(x for x in sigma if not x.separator & ~b.vertices)
    rho = frozenset(per_component.values()) | retained

    if not is_star(rho):
        raise InvariantViolation(f"rho for block {b.labels(g)} is not a star")
    if not star_le(sigma, rho):
        raise InvariantViolation(f"sigma is not <= rho for block {b.labels(g)}")
    if interior(g, rho) != b.vertices:
        raise InvariantViolation(
            f"interior of rho is {g.labels(interior(g, rho))}, not the block {b.labels(g)}")
    worst = max((x.order for x in rho), default=0)
    if worst >= b.k:
        raise InvariantViolation(f"rho has an element of order {worst} >= {b.k}")
    return BlockStarResult(rho, per_component, retained)


@dataclass(frozen=True)
class StarFragment:
    """Star-shaped decomposition of one part: centre bag plus one leaf per
    element of rho (leaf bag = small side restricted to the part)."""

    part: int
    centre: int
    leaves: tuple[tuple[OrientedSeparation, int], ...] = field(default=())

    def as_tree_decomposition(self) -> TreeDecomposition:
        bags = {0: self.centre}
        bags.update({i + 1: bag for i, (_, bag) in enumerate(self.leaves)})
        return TreeDecomposition(bags, [(0, i + 1) for i in range(len(self.leaves))])


def _check_fragment(g: Graph, frag: StarFragment):
    part = frag.part
    bags = [frag.centre] + [bag for _, bag in frag.leaves]
    union = 0
    for bag in bags:
        if bag & ~part:
            raise InvariantViolation("fragment bag leaves its part")
        union |= bag
    if union != part:
        raise InvariantViolation("fragment does not cover its part")
    for e in g.edge_masks():
        if not e & ~part and not any(not e & ~bag for bag in bags):
            raise InvariantViolation(f"fragment misses edge {g.labels(e)}")
    seen = 0
    for _, bag in frag.leaves:
        if bag & seen & ~frag.centre:
            raise InvariantViolation("vertex in two leaves but not the centre")
        seen |= bag


def star_decomposition(g: Graph, td: TreeDecomposition, t: int, b: Block | None) -> StarFragment:
    part = td.bags[t]
    if b is None:
        return StarFragment(part, part)
    if b.vertices & ~part:
        raise PreconditionViolation(f"block {b.labels(g)} is not inside the bag of node {t}")
    rho = block_star(g, b, node_star(g, td, t)).rho
    leaves = tuple((x, x.small & part) for x in sorted(rho))
    frag = StarFragment(part, b.vertices, leaves)
    _check_fragment(g, frag)
    return frag


def _blocks_distinguished(g: Graph, td: TreeDecomposition, b1: Block, b2: Block) -> bool:
    bound = min(b1.k, b2.k)
    for u, v in td.edges:
        s = induced_separation(g, td, u, v)
        if s.order >= bound:
            continue
        for x in (s, s.inverse()):
            if not b1.vertices & ~x.small and not b2.vertices & ~x.big:
                return True
    return False


def refine_td(g: Graph, td: TreeDecomposition, blocks: Iterable[Block],
              simplify: bool = False) -> TreeDecomposition:
    """Refine ``td`` so every listed separable block is a bag.

    Requires ``td`` valid, tight and distinguishing the listed blocks.
    """
    blocks = sorted(set(blocks))
    report = validate(g, td)
    if not report.ok:
        raise PreconditionViolation("invalid decomposition: " + "; ".join(report.lines()))
    for u, v in td.edges:
        s = induced_separation(g, td, u, v)
        if s.is_degenerate:
            raise PreconditionViolation(f"edge {u}-{v} induces (V(G), V(G))")
        if not is_tight(g, s):
            raise PreconditionViolation(f"edge {u}-{v} induces a separation that is not tight")
    for b in blocks:
        if not is_separable_block(g, b):
            raise PreconditionViolation(f"block {b.labels(g)} is not separable")

    home: dict[int, Block] = {}
    for b in blocks:
        holders = [t for t, bag in td.bags.items() if not b.vertices & ~bag]
        if not holders:
            raise PreconditionViolation(f"block {b.labels(g)} lies in no bag")
        for t in holders:
            if t in home:
                raise BlockCollision(
                    f"blocks {home[t].labels(g)} and {b.labels(g)} share the bag of node {t}")
            home[t] = b
    for b1, b2 in combinations(blocks, 2):
        if not _blocks_distinguished(g, td, b1, b2):
            raise PreconditionViolation(
                f"decomposition does not distinguish {b1.labels(g)} and {b2.labels(g)}")

    bags: dict[int, int] = {}
    edges: list[tuple[int, int]] = []
    centre_of: dict[int, int] = {}
    leaves_of: dict[int, list[tuple[OrientedSeparation, int]]] = {}
    for t in td.nodes:
        frag = star_decomposition(g, td, t, home.get(t))
        centre = len(bags)
        bags[centre] = frag.centre
        centre_of[t] = centre
        leaves_of[t] = []
        for x, bag in frag.leaves:
            leaf = len(bags)
            bags[leaf] = bag
            edges.append((centre, leaf))
            leaves_of[t].append((x, leaf))

    def attach(t: int, other: int) -> int:
        if t not in home:
            return centre_of[t]
        s = induced_separation(g, td, other, t)
        hits = [leaf for x, leaf in leaves_of[t] if le(s, x)]
        if len(hits) != 1:
            raise NoGluingLeaf(f"{len(hits)} leaves of node {t} lie above the separation "
                               f"from node {other}")
        return hits[0]

    glued = {}
    for t1, t2 in td.edges:
        v1, v2 = attach(t1, t2), attach(t2, t1)
        edges.append((v1, v2))
        glued[(t1, t2)] = (v1, v2)
    out = TreeDecomposition(bags, edges)

    report = validate(g, out)
    if not report.ok:
        raise InvariantViolation("refined decomposition is invalid: " + "; ".join(report.lines()))
    for (t1, t2), (v1, v2) in glued.items():
        if induced_separation(g, out, v1, v2) != induced_separation(g, td, t1, t2):
            raise InvariantViolation(f"edge {t1}-{t2} no longer induces the same separation")
    if not refines(g, out, td):
        raise InvariantViolation("refined decomposition does not refine its input")
    _check_blocks_are_bags(g, out, blocks)

    if simplify:
        out = simplify_decomposition(g, out, blocks)
    return out


def _check_blocks_are_bags(g: Graph, td: TreeDecomposition, blocks: Iterable[Block]):
    for b in blocks:
        holders = [t for t, bag in td.bags.items() if not b.vertices & ~bag]
        if len(holders) != 1 or td.bags[holders[0]] != b.vertices:
            raise InvariantViolation(
                f"block {b.labels(g)} is not the unique bag containing it "
                f"({len(holders)} bags contain it)")


def simplify_decomposition(g: Graph, td: TreeDecomposition,
                           blocks: Iterable[Block] = ()) -> TreeDecomposition:
    """Contract edges whose separation is also induced by another edge and
    whose one end's bag contains the other's; induced separations and
    block bags are unchanged."""
    bags = dict(td.bags)
    edges = set(td.edges)
    while True:
        current = TreeDecomposition(bags, edges)
        seps = {e: induced_separation(g, current, *e).underlying for e in current.edges}
        counts: dict = {}
        for s in seps.values():
            counts[s] = counts.get(s, 0) + 1
        target = None
        for (u, v) in current.edges:
            if counts[seps[(u, v)]] > 1 and (not bags[u] & ~bags[v] or not bags[v] & ~bags[u]):
                target = (u, v)
                break
        if target is None:
            break
        u, v = target
        bags[u] |= bags.pop(v)
        edges.discard(target)
        edges = {(u if a == v else a, u if b == v else b) for a, b in edges}
    out = TreeDecomposition(bags, edges).relabel_nodes()
    if separations_of(g, out) != separations_of(g, td):
        raise InvariantViolation("simplification changed the induced separations")
    _check_blocks_are_bags(g, out, blocks)
    return out
