"""Graph transforms: middle graph with provenance, line graph, join, vertex deletion."""

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import networkx as nx

from domination.errors import GraphError
from domination.graph import Graph, VertexSet, induced_subgraph


@dataclass(frozen=True)
class Original:
    i: int

    def to_json(self) -> dict:
        return {"kind": "orig", "i": self.i}


@dataclass(frozen=True)
class Subdivision:
    i: int
    j: int  # i < j

    def to_json(self) -> dict:
        return {"kind": "sub", "i": self.i, "j": self.j}


Provenance = Original | Subdivision


@dataclass(frozen=True)
class MiddleGraph:
    """M(G): originals 0..n-1 keep their labels, edge k of G becomes vertex n+k."""

    g: Graph
    provenance: tuple[Provenance, ...]
    origin_n: int
    origin_m: int

    def subdivision_of(self, i: int, j: int) -> int:
        """Vertex of M(G) standing for the source edge {i, j}."""
        key = Subdivision(min(i, j), max(i, j))
        try:
            return self._index[key]
        except KeyError:
            raise GraphError(f"({i}, {j}) is not an edge of the source graph") from None

    @cached_property
    def _index(self) -> dict[Subdivision, int]:
        return {p: v for v, p in enumerate(self.provenance) if isinstance(p, Subdivision)}

    def to_json(self) -> dict:
        return {
            "n": self.g.n,
            "m": self.g.m,
            "edges": [[u, v] for u, v in self.g.edges()],
            "provenance": [p.to_json() for p in self.provenance],
        }


def middle_graph(g: Graph) -> MiddleGraph:
    edges = g.edges()
    n = g.n

    mg_edges = []
    for k, (i, j) in enumerate(edges):
        mg_edges += [(i, n + k), (j, n + k)]
    mg_edges += [(n + a, n + b) for a, b in line_graph(g).edges()]

    provenance: list[Provenance] = [Original(i) for i in range(n)]
    provenance += [Subdivision(i, j) for i, j in edges]
    return MiddleGraph(
        g=Graph.from_edges(n + len(edges), mg_edges),
        provenance=tuple(provenance),
        origin_n=n,
        origin_m=len(edges),
    )


def line_graph(g: Graph) -> Graph:
    """L(G): vertex k is the k-th edge of g in lexicographic order."""
    edge_index = {e: k for k, e in enumerate(g.edges())}

    def index(e: tuple[int, int]) -> int:
        return edge_index[(min(e), max(e))]

    lg = nx.line_graph(g.nx_view)
    return Graph.from_edges(len(edge_index), [(index(a), index(b)) for a, b in lg.edges()])


def join(g: Graph, h: Graph) -> Graph:
    """G + H: h's labels shifted by g.n, every cross pair joined."""
    shift = g.n
    edges = g.edges() + [(u + shift, v + shift) for u, v in h.edges()]
    edges += [(u, shift + v) for u in range(g.n) for v in range(h.n)]
    return Graph.from_edges(g.n + h.n, edges)


class Deletion(NamedTuple):
    graph: Graph
    relabel: dict[int, int]  # old -> new, t absent


def delete_vertex(g: Graph, t: int) -> Deletion:
    if not 0 <= t < g.n:
        raise GraphError(f"vertex {t} outside 0..{g.n - 1}")
    graph, relabel = induced_subgraph(g, (v for v in range(g.n) if v != t))
    return Deletion(graph, relabel)


def subdivision_vertices(mg: MiddleGraph) -> VertexSet:
    return VertexSet.of(mg.g.n, range(mg.origin_n, mg.origin_n + mg.origin_m))


def original_vertices(mg: MiddleGraph) -> VertexSet:
    return VertexSet.of(mg.g.n, range(mg.origin_n))
