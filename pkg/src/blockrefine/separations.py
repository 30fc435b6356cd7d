"""Oriented separations, their partial order, stars and corners."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Union

from .graph import Graph, components, neighbourhood


@dataclass(frozen=True, order=True)
class OrientedSeparation:
    """The oriented separation (small, big); both sides are vertex masks."""

    small: int
    big: int

    @property
    def separator(self) -> int:
        return self.small & self.big

    @property
    def order(self) -> int:
        return (self.small & self.big).bit_count()

    @property
    def strict_small(self) -> int:
        return self.small & ~self.big

    @property
    def strict_big(self) -> int:
        return self.big & ~self.small

    def inverse(self) -> "OrientedSeparation":
        return OrientedSeparation(self.big, self.small)

    @property
    def is_proper(self) -> bool:
        return bool(self.small & ~self.big) and bool(self.big & ~self.small)

    @property
    def is_degenerate(self) -> bool:
        return self.small == self.big

    @property
    def underlying(self) -> "Separation":
        return Separation.of(self.small, self.big)

    def is_valid(self, g: Graph) -> bool:
        if self.small | self.big != g.full:
            return False
        return not neighbourhood(g, self.strict_small) & self.strict_big

    def labels(self, g: Graph) -> tuple[list[str], list[str]]:
        return g.labels(self.small), g.labels(self.big)


@dataclass(frozen=True, order=True)
class Separation:
    """An unoriented separation, stored by its canonical orientation.

    The canonical orientation puts the least vertex outside the separator
    on the small side; the degenerate separation has only one orientation.
    """

    a: int
    b: int

    @classmethod
    def of(cls, x: int, y: int) -> "Separation":
        outside = x ^ y
        if outside and not (outside & -outside) & x:
            x, y = y, x
        return cls(x, y)

    @property
    def separator(self) -> int:
        return self.a & self.b

    @property
    def order(self) -> int:
        return (self.a & self.b).bit_count()

    @property
    def is_proper(self) -> bool:
        return self.oriented().is_proper

    def oriented(self) -> OrientedSeparation:
        return OrientedSeparation(self.a, self.b)

    def orientations(self) -> tuple[OrientedSeparation, ...]:
        if self.a == self.b:
            return (OrientedSeparation(self.a, self.b),)
        return OrientedSeparation(self.a, self.b), OrientedSeparation(self.b, self.a)


AnySeparation = Union[Separation, OrientedSeparation]
Star = frozenset  # frozenset[OrientedSeparation]


def _sides(s: AnySeparation) -> tuple[int, int]:
    if isinstance(s, Separation):
        return s.a, s.b
    return s.small, s.big


def le(s: OrientedSeparation, t: OrientedSeparation) -> bool:
    """(A, B) <= (C, D) iff A is a subset of C and B a superset of D."""
    return not s.small & ~t.small and not t.big & ~s.big


def lt(s: OrientedSeparation, t: OrientedSeparation) -> bool:
    return s != t and le(s, t)


def is_proper(s: AnySeparation) -> bool:
    a, b = _sides(s)
    return bool(a & ~b) and bool(b & ~a)


def is_tight(g: Graph, s: AnySeparation) -> bool:
    """Both strict sides contain a component of G - (A & B) whose
    neighbourhood is the whole separator."""
    a, b = _sides(s)
    sep = a & b
    small_ok = big_ok = False
    for comp in components(g, sep):
        if neighbourhood(g, comp) != sep:
            continue
        if comp & a:
            small_ok = True
        else:
            big_ok = True
    return small_ok and big_ok


def is_star(elements: Iterable[OrientedSeparation]) -> bool:
    elems = list(elements)
    for x in elems:
        if x.is_degenerate:
            return False
    for x, y in combinations(elems, 2):
        if not le(x, y.inverse()):
            return False
    return True


def interior(g: Graph, star: Iterable[OrientedSeparation]) -> int:
    """Intersection of the big sides; the empty star has interior V(G)."""
    out = g.full
    for x in star:
        out &= x.big
    return out


def star_le(st1: Iterable[OrientedSeparation], st2: Iterable[OrientedSeparation]) -> bool:
    st2 = list(st2)
    return all(any(le(x, y) for y in st2) for x in st1)


def is_nested(s: AnySeparation, t: AnySeparation) -> bool:
    a, b = _sides(s)
    c, d = _sides(t)
    for x in (OrientedSeparation(a, b), OrientedSeparation(b, a)):
        for y in (OrientedSeparation(c, d), OrientedSeparation(d, c)):
            if le(x, y):
                return True
    return False


def corner(s: OrientedSeparation, t: OrientedSeparation) -> OrientedSeparation:
    """The join (A | C, B & D); the other corners come from pre-orienting."""
    return OrientedSeparation(s.small | t.small, s.big & t.big)


@lru_cache(maxsize=256)
def enumerate_separations(g: Graph, max_order: int) -> tuple[Separation, ...]:
    """All separations of ``g`` of order less than ``max_order``.

    Includes the improper separations {S, V(G)} and, when |V(G)| is below
    ``max_order``, the degenerate separation {V(G), V(G)}. Sorted by
    order, then separator, then canonical small side.
    """
    out: list[Separation] = []
    full = g.full
    for size in range(min(max_order, g.n + 1)):
        for idx in combinations(range(g.n), size):
            sep = 0
            for i in idx:
                sep |= 1 << i
            comps = components(g, sep)
            if not comps:
                out.append(Separation(full, full))
                continue
            first, rest = comps[0], comps[1:]
            for choice in range(1 << len(rest)):
                side = sep | first
                for j, c in enumerate(rest):
                    if choice >> j & 1:
                        side |= c
                other = full & ~side | sep
                out.append(Separation.of(side, other))
    out.sort(key=lambda s: (s.order, s.separator, s.a, s.b))
    return tuple(out)
