"""Simple undirected graphs: construction, families, random generators, distances, edge-list I/O."""

import random
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import NamedTuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

from domination.errors import EdgeListError, GraphError

# Distance to a vertex in another component. Arithmetic on it fails loudly.
UNREACHABLE = None


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """Subset of 0..universe-1 kept as a bitmask; iteration is ascending."""

    universe: int
    mask: int = 0

    @classmethod
    def of(cls, universe: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < universe:
                raise GraphError(f"vertex {v} outside 0..{universe - 1}")
            mask |= 1 << v
        return cls(universe, mask)

    @classmethod
    def full(cls, universe: int) -> "VertexSet":
        return cls(universe, (1 << universe) - 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.universe and bool(self.mask >> v & 1)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(max(self.universe, other.universe), self.mask | other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.universe, self.mask & ~other.mask)

    def union(self, other: "VertexSet") -> "VertexSet":
        return self | other

    def difference(self, other: "VertexSet") -> "VertexSet":
        return self - other

    def issubset(self, other: "VertexSet") -> bool:
        return self.mask & ~other.mask == 0

    def to_list(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..n-1 with sorted neighbor lists."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        neighbors: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if v in neighbors[u]:
                raise GraphError(f"duplicate edge ({min(u, v)}, {max(u, v)})")
            neighbors[u].add(v)
            neighbors[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in neighbors))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_edges(n, ())

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[self._check(v)])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[self._check(v)]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.open_masks[self._check(u)] >> self._check(v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def _check(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} outside 0..{self.n - 1}")
        return v

    # Bitmask views used by the checkers and the solver

    @cached_property
    def open_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << u for u in a) for a in self.adj)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        return tuple(mask | 1 << v for v, mask in enumerate(self.open_masks))

    @cached_property
    def dist2_masks(self) -> tuple[int, ...]:
        """Vertices at distance exactly two."""
        result = []
        for v in range(self.n):
            reach = 0
            for u in self.adj[v]:
                reach |= self.open_masks[u]
            result.append(reach & ~self.closed_masks[v])
        return tuple(result)

    @cached_property
    def nx_view(self) -> nx.Graph:
        """Frozen networkx copy for traversal queries."""
        return nx.freeze(to_networkx(self))


# ---------------------------------------------------------------------------
# Graph families
# ---------------------------------------------------------------------------

class Family(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    STAR = "star"
    WHEEL = "wheel"
    DOUBLE_STAR = "double_star"
    FRIENDSHIP = "friendship"
    SUBDIVIDED_STAR = "subdivided_star"
    STAR_OF_STARS = "star_of_stars"


class FamilySpec(BaseModel):
    """Family plus its parameters.

    n is the family's main parameter (order for paths, cycles and complete
    graphs; leaf count for stars; rim size for wheels; triangle count for
    friendship graphs; leg count for spiders). m is the second parameter
    where one exists: the second part of K_{n,m}, the leaves on the second
    center of D_{n,m}, the leaves per support of a star of stars.
    """

    model_config = ConfigDict(frozen=True)

    family: Family
    n: int = Field(ge=0)
    m: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _check_range(self) -> "FamilySpec":
        minimum = {
            Family.PATH: 1,
            Family.CYCLE: 3,
            Family.COMPLETE: 1,
            Family.COMPLETE_BIPARTITE: 1,
            Family.STAR: 1,
            Family.WHEEL: 3,
            Family.DOUBLE_STAR: 0,
            Family.FRIENDSHIP: 1,
            Family.SUBDIVIDED_STAR: 1,
            Family.STAR_OF_STARS: 1,
        }[self.family]
        if self.n < minimum:
            raise ValueError(f"{self.family.value} requires n >= {minimum}, got n={self.n}")
        if self.family is Family.COMPLETE_BIPARTITE and self.m < 1:
            raise ValueError(f"complete_bipartite requires m >= 1, got m={self.m}")
        if self.family is Family.DOUBLE_STAR and self.m > self.n:
            raise ValueError(f"double_star requires n >= m >= 0, got n={self.n}, m={self.m}")
        if self.family is Family.STAR_OF_STARS and self.m < 1:
            raise ValueError(f"star_of_stars requires m >= 1 leaves per support, got m={self.m}")
        return self

    def describe(self) -> str:
        n, m = self.n, self.m
        return {
            Family.PATH: f"P_{n}",
            Family.CYCLE: f"C_{n}",
            Family.COMPLETE: f"K_{n}",
            Family.COMPLETE_BIPARTITE: f"K_{{{n},{m}}}",
            Family.STAR: f"K_{{1,{n}}}",
            Family.WHEEL: f"W_{n}",
            Family.DOUBLE_STAR: f"D_{{{n},{m}}}",
            Family.FRIENDSHIP: f"F_{n}",
            Family.SUBDIVIDED_STAR: f"S2_{n}",
            Family.STAR_OF_STARS: f"SS_{{{n},{m}}}",
        }[self.family]


def _family_networkx(spec: FamilySpec) -> nx.Graph | None:
    """Families networkx generates with the labeling used here, or None."""
    n, m = spec.n, spec.m
    match spec.family:
        case Family.PATH:
            return nx.path_graph(n)
        case Family.CYCLE:
            return nx.cycle_graph(n)
        case Family.COMPLETE:
            return nx.complete_graph(n)
        case Family.COMPLETE_BIPARTITE:
            return nx.complete_bipartite_graph(n, m)
        case Family.STAR:
            return nx.star_graph(n)
        case Family.WHEEL:
            # hub 0, rim 1..n
            return nx.wheel_graph(n + 1)
        case Family.FRIENDSHIP:
            # triangles {0, 2i-1, 2i}; one triangle is K_3
            return nx.windmill_graph(n, 3) if n >= 2 else nx.complete_graph(3)
    return None


def _tree_family_edges(spec: FamilySpec) -> tuple[int, list[tuple[int, int]]]:
    n, m = spec.n, spec.m
    match spec.family:
        case Family.DOUBLE_STAR:
            # centers a=0, b=1; leaves 2..n+1 on a, n+2..n+m+1 on b
            edges = [(0, 1)]
            edges += [(0, v) for v in range(2, n + 2)]
            edges += [(1, v) for v in range(n + 2, n + m + 2)]
            return n + m + 2, edges
        case Family.SUBDIVIDED_STAR:
            edges = []
            for i in range(1, n + 1):
                edges += [(0, 2 * i - 1), (2 * i - 1, 2 * i)]
            return 2 * n + 1, edges
        case Family.STAR_OF_STARS:
            edges = []
            for i in range(n):
                support = 1 + i * (m + 1)
                edges.append((0, support))
                edges += [(support, support + j) for j in range(1, m + 1)]
            return 1 + n * (m + 1), edges
    raise GraphError(f"unknown family {spec.family}")


def generate(spec: FamilySpec) -> Graph:
    ng = _family_networkx(spec)
    if ng is not None:
        return from_networkx(ng)
    order, edges = _tree_family_edges(spec)
    return Graph.from_edges(order, edges)



# ---------------------------------------------------------------------------
# Random generators
# ---------------------------------------------------------------------------

def _random_tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    tree = nx.from_prufer_sequence(sequence)
    return [(min(u, v), max(u, v)) for u, v in tree.edges()]


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree from a random Prüfer sequence."""
    if n < 1:
        raise GraphError(f"random tree needs n >= 1, got {n}")
    return Graph.from_edges(n, _random_tree_edges(n, random.Random(seed)))


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """Random spanning tree plus each other pair with probability p."""
    if n < 2:
        raise GraphError(f"random connected graph needs n >= 2, got {n}")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    tree = set(_random_tree_edges(n, rng))
    extra = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in tree and rng.random() < p
    ]
    return Graph.from_edges(n, sorted(tree) + extra)


# ---------------------------------------------------------------------------
# Inspection
# ---------------------------------------------------------------------------

class DegreeProfile(NamedTuple):
    degrees: tuple[int, ...]
    max_degree: int
    leaves: list[int]


def distances_from(g: Graph, v: int) -> tuple[int | None, ...]:
    """Shortest-path distances from v; UNREACHABLE for other components."""
    g._check(v)
    lengths = nx.single_source_shortest_path_length(g.nx_view, v)
    return tuple(lengths.get(u, UNREACHABLE) for u in range(g.n))


def degree_profile(g: Graph) -> DegreeProfile:
    degrees = tuple(len(a) for a in g.adj)
    return DegreeProfile(
        degrees=degrees,
        max_degree=max(degrees, default=0),
        leaves=[v for v, d in enumerate(degrees) if d == 1],
    )


def components(g: Graph) -> list[list[int]]:
    """Connected components, each ascending, ordered by smallest vertex."""
    return sorted(sorted(c) for c in nx.connected_components(g.nx_view))


def is_connected(g: Graph) -> bool:
    return g.n == 0 or nx.is_connected(g.nx_view)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and nx.is_tree(g.nx_view)


def diameter(g: Graph) -> int:
    if not is_connected(g):
        raise GraphError("diameter is undefined for a disconnected graph")
    return nx.diameter(g.nx_view) if g.n else 0


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph on the given vertices, relabeled order-preservingly; returns old->new."""
    keep = sorted(set(vertices))
    for v in keep:
        g._check(v)
    relabel = {old: new for new, old in enumerate(keep)}
    edges = [(relabel[u], relabel[v]) for u, v in g.edges() if u in relabel and v in relabel]
    return Graph.from_edges(len(keep), edges), relabel


def to_networkx(g: Graph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(range(g.n))
    result.add_edges_from(g.edges())
    return result


def from_networkx(ng: nx.Graph) -> Graph:
    """Graph from a networkx graph whose nodes are 0..n-1."""
    return Graph.from_edges(ng.number_of_nodes(), ng.edges())


# ---------------------------------------------------------------------------
# Edge-list format: "n m" header, then m lines "u v"
# ---------------------------------------------------------------------------

def _is_ascii_number(token: str) -> bool:
    return token.isascii() and token.isdigit()


def parse_edge_list(text: str) -> Graph:
    lines = text.split("\n")
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise EdgeListError(1, "missing header 'n m'")

    header = lines[0].split()
    if len(header) != 2 or not all(_is_ascii_number(t) for t in header):
        raise EdgeListError(1, f"header must be two nonnegative integers 'n m', got {lines[0]!r}")
    n, m = int(header[0]), int(header[1])

    body = lines[1:]
    if len(body) != m:
        raise EdgeListError(len(lines), f"header announces {m} edges, found {len(body)}")

    seen: set[tuple[int, int]] = set()
    for lineno, line in enumerate(body, start=2):
        tokens = line.split()
        if len(tokens) != 2 or not all(_is_ascii_number(t) for t in tokens):
            raise EdgeListError(lineno, f"expected 'u v', got {line!r}")
        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise EdgeListError(lineno, f"self-loop at vertex {u}")
        if u >= n or v >= n:
            raise EdgeListError(lineno, f"endpoint outside 0..{n - 1} in edge ({u}, {v})")
        edge = (min(u, v), max(u, v))
        if edge in seen:
            raise EdgeListError(lineno, f"duplicate edge {edge}")
        seen.add(edge)
    return Graph.from_edges(n, seen)


def serialize_edge_list(g: Graph) -> str:
    return "\n".join([f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()])
