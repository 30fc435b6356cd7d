"""Brute-force oracles over plain label sets.

Nothing here uses the package's masks or search code; graphs are read
through ``g.vertices`` and ``g.edges`` only.
"""

from __future__ import annotations

from itertools import combinations, permutations, product


def adjacency(g) -> dict[str, set[str]]:
    adj = {v: set() for v in g.vertices}
    for e in g.edges:
        u, v = tuple(e)
        adj[u].add(v)
        adj[v].add(u)
    return adj


def dfs_components(g, removed=frozenset()) -> list[frozenset]:
    adj = adjacency(g)
    left = [v for v in g.vertices if v not in removed]
    seen: set[str] = set()
    out = []
    for v in left:
        if v in seen:
            continue
        comp = set()
        stack = [v]
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(y for y in adj[x] if y not in removed and y not in comp)
        seen |= comp
        out.append(frozenset(comp))
    return out


def scan_neighbourhood(g, s) -> frozenset:
    adj = adjacency(g)
    return frozenset(y for x in s for y in adj[x] if y not in s)


def all_separations(g, max_order: int) -> set[tuple[frozenset, frozenset]]:
    """Every oriented separation (A, B) of order < max_order, by checking
    all pairs of subsets (tiny graphs only)."""
    vs = list(g.vertices)
    full = frozenset(vs)
    adj = adjacency(g)
    out = set()
    # assign each vertex to A-only, B-only or both
    for assign in product((0, 1, 2), repeat=len(vs)):
        a = frozenset(v for v, c in zip(vs, assign) if c in (0, 2))
        b = frozenset(v for v, c in zip(vs, assign) if c in (1, 2))
        if len(a & b) >= max_order:
            continue
        if any(y in b - a for x in a - b for y in adj[x]):
            continue
        assert a | b == full
        out.add((a, b))
    return out


def le(x, y) -> bool:
    return x[0] <= y[0] and x[1] >= y[1]


def unordered(x) -> frozenset:
    return frozenset((x[0], x[1]))


def is_profile(orientation: set, k: int) -> bool:
    """Consistency plus the profile property, straight from the definitions."""
    for x in orientation:
        for y in orientation:
            if unordered(x) != unordered(y):
                inv_x = (x[1], x[0])
                # (B,A) and (C,D) with (A,B) < (C,D) forbidden; here x=(B,A) means (A,B)=inv_x
                if le(inv_x, y) and inv_x != y:
                    return False
            corner = (x[1] & y[1], x[0] | y[0])
            if corner in orientation:
                return False
    return True


def brute_profiles(g, k: int, regular_only: bool = True) -> list[frozenset]:
    """All (regular) k-profiles by trying every orientation."""
    full = frozenset(g.vertices)
    seps = {}
    for a, b in all_separations(g, k):
        seps.setdefault(unordered((a, b)), []).append((a, b))
    fixed = []
    free = []
    for key, ors in seps.items():
        ors = sorted(ors, key=lambda x: (sorted(x[0]), sorted(x[1])))
        if regular_only and any(x[0] == full for x in ors):
            allowed = [x for x in ors if x[0] != full]
            if not allowed:
                return []
            fixed.append(allowed[0])
        elif len(ors) == 1:
            fixed.append(ors[0])
        else:
            free.append(ors)
    out = []
    for choice in product(*free):
        o = set(fixed) | set(choice)
        if regular_only and any(x[0] == full for x in o):
            continue
        if is_profile(o, k):
            out.append(frozenset(o))
    return out


def separates(g, u, v, removed) -> bool:
    return not any(u in c and v in c for c in dfs_components(g, removed))


def brute_min_separator(g, u, v):
    if frozenset((u, v)) in g.edges:
        return float("inf")
    others = [w for w in g.vertices if w not in (u, v)]
    for size in range(len(others) + 1):
        for s in combinations(others, size):
            if separates(g, u, v, frozenset(s)):
                return size
    raise AssertionError


def brute_blocks(g, k: int, relation=None) -> list[frozenset]:
    """Maximal pairwise k-inseparable sets of size >= k, by subset scan."""
    vs = list(g.vertices)
    if relation is None:
        relation = {frozenset(p): brute_min_separator(g, *p) >= k for p in combinations(vs, 2)}
    good = []
    for r in range(len(vs), 0, -1):
        for s in combinations(vs, r):
            s = frozenset(s)
            if any(s < t for t in good):
                continue
            if all(relation[frozenset(p)] for p in combinations(sorted(s), 2)):
                good.append(s)
    return sorted((s for s in good if len(s) >= k), key=sorted)


def brute_automorphisms(g) -> list[dict]:
    vs = list(g.vertices)
    out = []
    for perm in permutations(vs):
        phi = dict(zip(vs, perm))
        if all(frozenset(phi[x] for x in e) in g.edges for e in g.edges):
            out.append(phi)
    return out


def brute_maximal_cliques(rel: list[int]) -> set[int]:
    n = len(rel)
    cliques = []
    for m in range(1 << n):
        members = [i for i in range(n) if m >> i & 1]
        if all(rel[i] >> j & 1 for i, j in combinations(members, 2)):
            cliques.append(m)
    return {c for c in cliques if not any(c != d and c & d == c for d in cliques)}
