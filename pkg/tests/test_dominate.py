import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import family, isolate_free_graphs
from domination.dominate import DominationKind, check, has_perfect_matching, uncovered
from domination.errors import GraphError, IsolatedVertexError
from domination.graph import Graph, VertexSet, distances_from, to_networkx
from domination.solve import minimum
from domination.transform import middle_graph

PDD = DominationKind.PAIRED_DISJUNCTIVE


def vs(g: Graph, *vertices: int) -> VertexSet:
    return VertexSet.of(g.n, vertices)


def test_kind_coverage_and_flags():
    assert PDD.coverage is DominationKind.DISJUNCTIVE
    assert DominationKind.PAIRED.coverage is DominationKind.DOMINATING
    assert DominationKind.TOTAL_DISJUNCTIVE.total and DominationKind.TOTAL_DISJUNCTIVE.disjunctive
    assert PDD.paired and not PDD.total
    assert DominationKind("pdd") is PDD


def test_c5_edge_is_paired_disjunctive():
    g = family("cycle", 5)
    verdict = check(g, vs(g, 0, 1), PDD)
    assert verdict.satisfied
    assert verdict.matching == ((0, 1),)


def test_whole_vertex_set_dominates():
    g = family("path", 5)
    assert check(g, g.vertices(), DominationKind.DOMINATING).satisfied


def test_p3_whole_set_has_no_pairing():
    g = family("path", 3)
    verdict = check(g, g.vertices(), DominationKind.PAIRED)
    assert not verdict.satisfied
    assert verdict.matching_failed
    assert verdict.violators == g.vertices()


def test_uncovered_and_unpaired_reports_both():
    g = family("path", 4)
    verdict = check(g, vs(g, 0), DominationKind.PAIRED)
    assert not verdict.satisfied
    assert verdict.violators.to_list() == [2, 3]
    assert verdict.matching_failed


def test_total_rule_covers_members_too():
    g = family("path", 3)
    assert check(g, vs(g, 1), DominationKind.DOMINATING).satisfied
    assert uncovered(g, vs(g, 1), DominationKind.TOTAL_DOMINATING).to_list() == [1]
    assert check(g, vs(g, 0, 1), DominationKind.TOTAL_DOMINATING).satisfied


def test_disjunctive_rule_needs_two_at_distance_two():
    g = family("path", 5)
    # vertex 2 sees 0 and 4 at distance two
    assert check(g, vs(g, 0, 4), DominationKind.DISJUNCTIVE).satisfied
    assert uncovered(g, vs(g, 0, 4), DominationKind.DOMINATING).to_list() == [2]
    # one member at distance two is not enough
    assert uncovered(g, vs(g, 0), DominationKind.DISJUNCTIVE).to_list() == [2, 3, 4]


def test_uncovered_examples():
    p4 = family("path", 4)
    assert uncovered(p4, vs(p4, 1), DominationKind.DOMINATING).to_list() == [3]
    c6 = family("cycle", 6)
    for kind in DominationKind:
        assert uncovered(c6, VertexSet(6), kind).to_list() == list(range(6))


def test_uncovered_on_middle_p4():
    mg = middle_graph(family("path", 4))
    d = VertexSet.of(mg.g.n, [mg.subdivision_of(0, 1), mg.subdivision_of(1, 2)])
    assert uncovered(mg.g, d, DominationKind.DISJUNCTIVE).to_list() == [3]


def test_perfect_matching_examples():
    g = family("cycle", 5)
    assert has_perfect_matching(g, VertexSet(5))
    assert has_perfect_matching(g, vs(g, 2, 3)).pairs == ((2, 3),)
    assert not has_perfect_matching(g, vs(g, 0, 2))
    assert not has_perfect_matching(g, vs(g, 0, 1, 2))


def test_middle_c8_proof_set_pairs_up():
    mg = middle_graph(family("cycle", 8))
    u1, u2 = mg.subdivision_of(0, 1), mg.subdivision_of(1, 2)
    u5, u6 = mg.subdivision_of(4, 5), mg.subdivision_of(5, 6)
    pairing = has_perfect_matching(mg.g, VertexSet.of(mg.g.n, [u1, u2, u5, u6]))
    assert pairing
    assert set(pairing.pairs) == {(u1, u2), (u5, u6)}


@settings(max_examples=80)
@given(isolate_free_graphs(max_n=8), st.data())
def test_perfect_matching_agrees_with_networkx(g, data):
    members = data.draw(st.sets(st.integers(0, g.n - 1)))
    d = VertexSet.of(g.n, members)
    sub = to_networkx(g).subgraph(members)
    expected = len(members) % 2 == 0 and len(nx.max_weight_matching(sub, maxcardinality=True)) * 2 == len(members)
    pairing = has_perfect_matching(g, d)
    assert bool(pairing) == expected
    if pairing:
        assert sorted(v for pair in pairing.pairs for v in pair) == sorted(members)
        assert all(g.has_edge(u, v) for u, v in pairing.pairs)


@settings(max_examples=80)
@given(isolate_free_graphs(max_n=8), st.data())
def test_disjunctive_is_weaker_than_dominating(g, data):
    d = VertexSet.of(g.n, data.draw(st.sets(st.integers(0, g.n - 1))))
    assert uncovered(g, d, DominationKind.DISJUNCTIVE).issubset(uncovered(g, d, DominationKind.DOMINATING))
    assert uncovered(g, d, DominationKind.TOTAL_DISJUNCTIVE).issubset(
        uncovered(g, d, DominationKind.TOTAL_DOMINATING)
    )
    assert uncovered(g, d, DominationKind.DOMINATING).issubset(uncovered(g, d, DominationKind.TOTAL_DOMINATING))


def test_isolated_vertices_are_rejected():
    g = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(IsolatedVertexError) as err:
        check(g, g.vertices(), DominationKind.DOMINATING)
    assert err.value.vertices == [2]


def test_members_outside_the_graph_are_rejected():
    g = family("path", 3)
    with pytest.raises(GraphError):
        check(g, VertexSet(5, 0b10000), DominationKind.DOMINATING)


def _covered(g: Graph, d: VertexSet, kind: DominationKind, v: int) -> bool:
    """The coverage rule of kind, evaluated for one vertex from distances."""
    if not kind.total and v in d:
        return True
    if any(w in d for w in g.adj[v]):
        return True
    if kind.disjunctive:
        dist = distances_from(g, v)
        return sum(1 for u in d if dist[u] == 2) >= 2
    return False


@settings(max_examples=80, deadline=None)
@given(isolate_free_graphs(max_n=8), st.sampled_from(list(DominationKind)), st.data())
def test_each_violator_fails_the_rule_on_its_own(g, kind, data):
    d = VertexSet.of(g.n, data.draw(st.sets(st.integers(0, g.n - 1))))
    verdict = check(g, d, kind)
    failing = [v for v in range(g.n) if not _covered(g, d, kind, v)]
    if failing:
        assert not verdict.satisfied
        assert verdict.violators.to_list() == failing
    elif kind.paired and not has_perfect_matching(g, d):
        assert not verdict.satisfied and verdict.matching_failed
        assert verdict.violators == d
    else:
        assert verdict.satisfied and not verdict.violators


@settings(max_examples=60, deadline=None)
@given(
    isolate_free_graphs(max_n=8),
    st.sampled_from([k for k in DominationKind if not k.paired]),
    st.data(),
)
def test_supersets_of_a_dominating_set_stay_dominating(g, kind, data):
    d = minimum(g, kind).witness
    extra = VertexSet.of(g.n, data.draw(st.sets(st.integers(0, g.n - 1))))
    assert check(g, d, kind).satisfied
    assert check(g, d | extra, kind).satisfied
