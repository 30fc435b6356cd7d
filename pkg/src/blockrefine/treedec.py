"""Tree-decompositions: induced separations, node stars, validation and
the comparisons (refinement, distinction, canonicity) built on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .errors import InvariantViolation
from .graph import DEFAULT_AUTOMORPHISM_CAP, Graph, automorphisms, bits
from .profiles import Profile, distinguishes, efficiently_distinguishes
from .separations import OrientedSeparation, Separation, interior, is_tight


@dataclass(frozen=True)
class TreeDecomposition:
    """A tree on integer node ids with a vertex-mask bag per node."""

    bags: Mapping[int, int]
    edges: tuple[tuple[int, int], ...] = ()
    _adj: dict = field(init=False, repr=False, compare=False)
    _edge_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "bags", dict(sorted(self.bags.items())))
        edges = tuple(sorted({(min(u, v), max(u, v)) for u, v in self.edges}))
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_edge_set", frozenset(edges))
        adj: dict[int, list[int]] = {t: [] for t in self.bags}
        for u, v in edges:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        object.__setattr__(self, "_adj", {t: sorted(ns) for t, ns in adj.items()})

    @property
    def nodes(self) -> list[int]:
        return list(self.bags)

    def neighbours(self, t: int) -> list[int]:
        return self._adj.get(t, [])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_set

    def side(self, frm: int, to: int) -> list[int]:
        """Nodes of the component of T - {frm, to} containing ``frm``."""
        seen = {frm, to}
        stack = [frm]
        out = []
        while stack:
            t = stack.pop()
            out.append(t)
            for u in self.neighbours(t):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return out

    def relabel_nodes(self) -> "TreeDecomposition":
        """Same decomposition with node ids 0..n-1 in current id order."""
        ids = {t: i for i, t in enumerate(self.bags)}
        return TreeDecomposition({ids[t]: b for t, b in self.bags.items()},
                                 [(ids[u], ids[v]) for u, v in self.edges])


def induced_separation(g: Graph, td: TreeDecomposition, frm: int, to: int) -> OrientedSeparation:
    if not td.has_edge(frm, to):
        raise ValueError(f"{frm}-{to} is not an edge of the decomposition tree")
    u_from = u_to = 0
    for t in td.side(frm, to):
        u_from |= td.bags[t]
    for t in td.side(to, frm):
        u_to |= td.bags[t]
    return OrientedSeparation(u_from, u_to)


def edge_separations(g: Graph, td: TreeDecomposition) -> dict[tuple[int, int], OrientedSeparation]:
    """Separation induced by every oriented tree edge, keyed (from, to)."""
    out = {}
    for u, v in td.edges:
        s = induced_separation(g, td, u, v)
        out[(u, v)] = s
        out[(v, u)] = s.inverse()
    return out


def separations_of(g: Graph, td: TreeDecomposition) -> set[Separation]:
    return {induced_separation(g, td, u, v).underlying for u, v in td.edges}


def node_star(g: Graph, td: TreeDecomposition, t: int) -> frozenset[OrientedSeparation]:
    star = frozenset(induced_separation(g, td, u, t) for u in td.neighbours(t))
    for x in star:
        if x.is_degenerate:
            raise InvariantViolation(
                f"edge into node {t} induces the degenerate separation (V(G), V(G))")
    if interior(g, star) != td.bags[t]:
        raise InvariantViolation(f"interior of the star at node {t} differs from its bag")
    return star


@dataclass
class ValidationReport:
    violations: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, witness: str):
        self.violations.append((kind, witness))

    def lines(self) -> list[str]:
        return [f"{kind} {witness}" for kind, witness in self.violations]


def _is_tree(td: TreeDecomposition, report: ValidationReport) -> bool:
    nodes = set(td.bags)
    if not nodes:
        report.add("not-a-tree", "no nodes")
        return False
    for u, v in td.edges:
        if u == v or u not in nodes or v not in nodes:
            report.add("not-a-tree", f"bad edge {u}-{v}")
            return False
    start = next(iter(nodes))
    reached = {start}
    stack = [start]
    while stack:
        for u in td.neighbours(stack.pop()):
            if u not in reached:
                reached.add(u)
                stack.append(u)
    if len(td.edges) != len(nodes) - 1 or reached != nodes:
        report.add("not-a-tree", f"{len(nodes)} nodes, {len(td.edges)} edges, "
                                 f"{len(reached)} reachable")
        return False
    return True


def validate(g: Graph, td: TreeDecomposition) -> ValidationReport:
    """Check every tree-decomposition axiom; never raises."""
    report = ValidationReport()
    tree_ok = _is_tree(td, report)
    covered = 0
    for t, bag in td.bags.items():
        if bag & ~g.full:
            report.add("bag-outside-graph", f"node {t}")
        covered |= bag
    for i in bits(g.full & ~covered):
        report.add("vertex-uncovered", g.vertices[i])
    for e in g.edge_masks():
        if not any(not e & ~bag for bag in td.bags.values()):
            report.add("edge-uncovered", "{" + ",".join(g.labels(e)) + "}")
    if not tree_ok:
        return report
    for i in range(g.n):
        holding = {t for t, bag in td.bags.items() if bag >> i & 1}
        if not holding:
            continue
        start = min(holding)
        seen = {start}
        stack = [start]
        while stack:
            t = stack.pop()
            for u in td.neighbours(t):
                if u in holding and u not in seen:
                    seen.add(u)
                    stack.append(u)
        if seen != holding:
            report.add("trace-disconnected", g.vertices[i])
    if report.ok:
        for (u, v), s in edge_separations(g, td).items():
            if not s.is_valid(g):
                report.add("invalid-separation", f"edge {u}-{v}")
    return report


def adhesion(g: Graph, td: TreeDecomposition) -> int:
    return max(((td.bags[u] & td.bags[v]).bit_count() for u, v in td.edges), default=0)


def is_tight_td(g: Graph, td: TreeDecomposition) -> bool:
    return all(is_tight(g, s) for s in separations_of(g, td))


def td_distinguishes(g: Graph, td: TreeDecomposition, p1: Profile, p2: Profile,
                     efficiently: bool = False) -> bool:
    for s in separations_of(g, td):
        if s.order >= min(p1.k, p2.k):
            continue
        if efficiently:
            if efficiently_distinguishes(g, s, p1, p2):
                return True
        elif distinguishes(s, p1, p2):
            return True
    return False


def refines(g: Graph, fine: TreeDecomposition, coarse: TreeDecomposition) -> bool:
    return separations_of(g, fine) >= separations_of(g, coarse)


# -- canonicity ---------------------------------------------------------------


def map_decomposition(g: Graph, td: TreeDecomposition, phi: Mapping[str, str]) -> TreeDecomposition:
    return TreeDecomposition({t: g.map_mask(b, phi) for t, b in td.bags.items()}, td.edges)


def _rooted_code(td: TreeDecomposition, t: int, parent: int | None) -> tuple:
    kids = sorted(_rooted_code(td, u, t) for u in td.neighbours(t) if u != parent)
    return (td.bags[t], tuple(kids))


def bag_isomorphic(td1: TreeDecomposition, td2: TreeDecomposition) -> bool:
    """Is there a tree isomorphism carrying every bag of td1 onto an equal bag
    of td2?"""
    if len(td1.bags) != len(td2.bags) or len(td1.edges) != len(td2.edges):
        return False
    if sorted(td1.bags.values()) != sorted(td2.bags.values()):
        return False
    root = td1.nodes[0]
    code = _rooted_code(td1, root, None)
    return any(_rooted_code(td2, t, None) == code
               for t in td2.nodes if td2.bags[t] == td1.bags[root])


def check_canonical(g: Graph, construct: Callable[[Graph], TreeDecomposition],
                    cap: int | None = DEFAULT_AUTOMORPHISM_CAP,
                    auts: Iterable[Mapping[str, str]] | None = None) -> bool:
    """Does ``construct`` commute with every automorphism of ``g``?

    An automorphism maps g onto itself, so construct(phi(g)) is
    construct(g); the check is that phi(construct(g)) matches it bag for bag.
    """
    auts = automorphisms(g, cap) if auts is None else auts
    td = construct(g)
    return all(bag_isomorphic(map_decomposition(g, td, phi), td) for phi in auts)
