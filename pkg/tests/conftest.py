"""Shared hypothesis strategies and small fixtures."""

from hypothesis import strategies as st

from domination.graph import Family, FamilySpec, Graph, generate


def family(name: str, n: int, m: int = 0) -> Graph:
    return generate(FamilySpec(family=Family(name), n=n, m=m))


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return Graph.from_edges(n, chosen)


@st.composite
def isolate_free_graphs(draw, min_n: int = 2, max_n: int = 8) -> Graph:
    """Random graph, then each isolated vertex joined to vertex 0 (or 1)."""
    g = draw(graphs(min_n=max(2, min_n), max_n=max_n))
    edges = set(g.edges())
    for v in range(g.n):
        if not g.adj[v]:
            w = 1 if v == 0 else 0
            edges.add((min(v, w), max(v, w)))
    return Graph.from_edges(g.n, edges)
