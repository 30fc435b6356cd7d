"""Edge-list input, and json / dot / text renderings of decompositions."""

from __future__ import annotations

import json
from typing import Iterable

from .errors import InputError, ParseError, SelfLoopError
from .graph import Graph
from .profiles import Block
from .treedec import TreeDecomposition


def parse_graph(text: str) -> Graph:
    """Edge list: ``u v`` per line, a lone label declares an isolated
    vertex, ``#`` starts a comment line. Duplicate edges are merged."""
    vertices: set[str] = set()
    edges: set[frozenset[str]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) == 1:
            vertices.add(parts[0])
        elif len(parts) == 2:
            u, v = parts
            if u == v:
                raise SelfLoopError(f"self-loop at {u}", lineno)
            vertices.update(parts)
            edges.add(frozenset(parts))
        else:
            raise ParseError(f"expected one or two labels, got {len(parts)}", lineno)
    if not vertices:
        raise InputError("graph has no vertices")
    return Graph(tuple(sorted(vertices)), frozenset(edges))


def block_nodes(td: TreeDecomposition, blocks: Iterable[Block]) -> list[tuple[int, Block]]:
    """Pair every block with the node whose bag equals it (if any)."""
    out = []
    for b in blocks:
        for t, bag in td.bags.items():
            if bag == b.vertices:
                out.append((t, b))
                break
    return out


def decomposition_dict(g: Graph, td: TreeDecomposition, k: int, blocks: Iterable[Block] = ()) -> dict:
    return {
        "k": k,
        "nodes": [{"id": t, "bag": g.labels(bag)} for t, bag in td.bags.items()],
        "edges": [{"u": u, "v": v, "separator": g.labels(td.bags[u] & td.bags[v])}
                  for u, v in td.edges],
        "blocks": sorted(({"node_id": t, "vertices": b.labels(g)}
                          for t, b in block_nodes(td, blocks)),
                         key=lambda d: (d["node_id"], d["vertices"])),
    }


def to_json(g: Graph, td: TreeDecomposition, k: int, blocks: Iterable[Block] = ()) -> str:
    return json.dumps(decomposition_dict(g, td, k, blocks), indent=2, sort_keys=True) + "\n"


def from_json(g: Graph, text: str) -> tuple[TreeDecomposition, int | None]:
    """Read a decomposition in the json schema produced by :func:`to_json`."""
    try:
        data = json.loads(text)
        nodes = data["nodes"]
        bags = {}
        for node in nodes:
            t = int(node["id"])
            if t in bags:
                raise InputError(f"duplicate node id {t}")
            unknown = [v for v in node["bag"] if str(v) not in g.vertices]
            if unknown:
                raise InputError(f"node {t} has labels outside the graph: {unknown}")
            bags[t] = g.mask(node["bag"])
        edges = [(int(e["u"]), int(e["v"])) for e in data.get("edges", [])]
        k = data.get("k")
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"bad decomposition json: {exc}") from exc
    for u, v in edges:
        if u not in bags or v not in bags:
            raise InputError(f"edge {u}-{v} refers to an unknown node")
    return TreeDecomposition(bags, edges), (int(k) if k is not None else None)


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, td: TreeDecomposition, k: int, blocks: Iterable[Block] = ()) -> str:
    marked = {t for t, _ in block_nodes(td, blocks)}
    lines = [f"graph decomposition {{", f"  label={_quote(f'k = {k}')};", "  node [shape=box];"]
    for t, bag in td.bags.items():
        attrs = [f"label={_quote(' '.join(g.labels(bag)))}"]
        if t in marked:
            attrs += ["block=true", "style=filled", "fillcolor=lightgrey", "peripheries=2"]
        lines.append(f"  n{t} [{', '.join(attrs)}];")
    for u, v in td.edges:
        sep = " ".join(g.labels(td.bags[u] & td.bags[v]))
        lines.append(f"  n{u} -- n{v} [label={_quote(sep)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_text(g: Graph, td: TreeDecomposition, k: int, blocks: Iterable[Block] = ()) -> str:
    marked = {t for t, _ in block_nodes(td, blocks)}
    lines = [f"k {k}", f"nodes {len(td.bags)}"]
    for t, bag in td.bags.items():
        tag = "  [block]" if t in marked else ""
        lines.append(f"  {t}: {' '.join(g.labels(bag)) or '-'}{tag}")
    lines.append(f"edges {len(td.edges)}")
    for u, v in td.edges:
        lines.append(f"  {u} -- {v}  separator {' '.join(g.labels(td.bags[u] & td.bags[v])) or '-'}")
    return "\n".join(lines) + "\n"


RENDERERS = {"json": to_json, "dot": to_dot, "text": to_text}


def emit_decomposition(g: Graph, td: TreeDecomposition, k: int, blocks: Iterable[Block] = (),
                       fmt: str = "json") -> str:
    return RENDERERS[fmt](g, td, k, list(blocks))
