"""Named small graphs and the exhaustive small-graph corpus."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph


def path(n: int) -> Graph:
    return Graph.from_edges([(i, i + 1) for i in range(n - 1)], vertices=range(n))


def cycle(n: int) -> Graph:
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)])


def complete(n: int, offset: int = 0) -> Graph:
    return Graph.from_edges(combinations(range(offset, offset + n), 2), vertices=range(offset, offset + n))


def complete_bipartite(m: int, n: int) -> Graph:
    return Graph.from_edges([(i, m + j) for i in range(m) for j in range(n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return complete_bipartite(1, leaves)


def glued_k4s() -> Graph:
    """Two K4s on {0,1,2,3} and {2,3,4,5} sharing the edge 23."""
    return Graph.from_edges(list(combinations(range(4), 2)) + list(combinations(range(2, 6), 2)))


def k4_pendant() -> Graph:
    """K4 on {0,1,2,3} plus the pendant edge 4-0."""
    return Graph.from_edges(list(combinations(range(4), 2)) + [(4, 0)])


def prism() -> Graph:
    """Triangular prism: triangles 012 and 345 joined by 03, 14, 25."""
    return Graph.from_edges([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])


def named_graphs() -> dict[str, Graph]:
    out = {f"C{n}": cycle(n) for n in range(3, 9)}
    out.update({
        "K13": star(3),
        "K23": complete_bipartite(2, 3),
        "glued-K4": glued_k4s(),
        "prism": prism(),
        "K4+pendant": k4_pendant(),
        "P4": path(4),
    })
    return out


def symmetric_family() -> dict[str, Graph]:
    names = [f"C{n}" for n in range(3, 9)] + ["K13", "K23", "glued-K4", "prism"]
    graphs = named_graphs()
    return {name: graphs[name] for name in names}


def connected_graphs(max_n: int = 7) -> list[Graph]:
    """One representative of every connected graph on 1..max_n vertices
    (max_n <= 7), taken from the networkx graph atlas."""
    import networkx as nx

    if max_n > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n == 0 or n > max_n or not nx.is_connected(h):
            continue
        out.append(Graph.from_edges(h.edges(), vertices=h.nodes()))
    return out
