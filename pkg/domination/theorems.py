"""Closed-form values, proof constructions and bounds for paired disjunctive domination, checked against the solver."""

import random
from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple

from pydantic import BaseModel, ConfigDict, Field

from domination.config import DEFAULT_MAX_N, DEFAULT_SAMPLES, DEFAULT_SEED, RANDOM_EDGE_PROBABILITY, log
from domination.dominate import DominationKind, check
from domination.errors import GraphError
from domination.graph import (
    Family,
    FamilySpec,
    Graph,
    VertexSet,
    components,
    degree_profile,
    diameter,
    distances_from,
    generate,
    induced_subgraph,
    is_tree,
    random_connected_graph,
    random_tree,
)
from domination.solve import SolveOptions, SolveResult, SolveStatus, minimum, minimum_restricted
from domination.transform import delete_vertex, join, middle_graph, subdivision_vertices

PDD = DominationKind.PAIRED_DISJUNCTIVE


class TheoremId(str, Enum):
    T34_CYCLE = "T34_cycle"
    T34_PATH = "T34_path"
    T34_COMPLETE = "T34_complete"
    T34_BIPARTITE = "T34_bipartite"
    O31_CHAIN = "O31_chain"
    O32_TOTAL = "O32_total"
    O33_SUPPORT = "O33_support"
    T35_BOUNDS = "T35_bounds"
    T41_CERTIFICATE = "T41_certificate"
    P42_MAXDEG = "P42_maxdeg"
    P43_BIPARTITE = "P43_bipartite"
    T44_MID_CYCLE = "T44_mid_cycle"
    T45_MID_PATH = "T45_mid_path"
    P46_FRIENDSHIP = "P46_friendship"
    T47_DOUBLE_STAR = "T47_double_star"
    L51_SD_RESTRICTION = "L51_sd_restriction"
    L52_DELETION = "L52_deletion"
    T53_PATH_BOUND = "T53_path_bound"
    T54_TREE_BOUND = "T54_tree_bound"
    C55_STRONG_SUPPORT = "C55_strong_support"
    C56_NO_STRONG_SUPPORT = "C56_no_strong_support"
    P57_JOIN = "P57_join"


class Verdict(str, Enum):
    MATCH = "Match"
    MISMATCH = "Mismatch"
    NOT_APPLICABLE = "NotApplicable"
    SKIPPED = "Skipped"
    DIAGNOSTIC = "Diagnostic"


@dataclass(frozen=True)
class TheoremReport:
    theorem: TheoremId
    instance: str
    expected: str
    solver_values: tuple[int | None, ...]
    verdict: Verdict
    witnesses: tuple[VertexSet | None, ...] = ()
    millis: int = 0
    reason: str = ""

    @property
    def verdict_label(self) -> str:
        """Verdict cell; only Skipped carries its reason, other reasons stay in `reason`."""
        if self.verdict is Verdict.SKIPPED and self.reason:
            return f"{self.verdict.value}({self.reason})"
        return self.verdict.value

    @property
    def solver_label(self) -> str:
        return "|".join("-" if v is None else str(v) for v in self.solver_values)

    @property
    def witness_label(self) -> str:
        return "|".join(" ".join(map(str, w)) if w is not None else "-" for w in self.witnesses)


class VerifyRange(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    max_n: int = Field(default=DEFAULT_MAX_N, ge=2)
    samples: int = Field(default=DEFAULT_SAMPLES, ge=0)
    seed: int = DEFAULT_SEED
    options: SolveOptions = Field(default_factory=SolveOptions)


# ---------------------------------------------------------------------------
# Cached solving
# ---------------------------------------------------------------------------

@lru_cache(maxsize=4096)
def _cached_minimum(
    g: Graph, kind: DominationKind, time_budget: float, node_budget: int, allowed: int | None, deterministic: bool,
) -> SolveResult:
    options = SolveOptions(time_budget=time_budget, node_budget=node_budget, deterministic=deterministic)
    if allowed is None:
        return minimum(g, kind, options)
    return minimum_restricted(g, kind, VertexSet(g.n, allowed), options)


def solve(g: Graph, kind: DominationKind, options: SolveOptions, allowed: VertexSet | None = None) -> SolveResult:
    """minimum() memoized per process, so a campaign never solves one instance twice."""
    mask = allowed.mask if allowed is not None else None
    return _cached_minimum(g, kind, options.time_budget, options.node_budget, mask, options.deterministic)


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def middle_path_value(n: int) -> int:
    base = 2 * _ceil_div(n - 1, 4)
    return base if n % 4 in (2, 3) else base + 2


def formula_value(theorem: TheoremId, *params: int) -> int | None:
    """Closed-form value of the statement, or None outside its stated range."""
    match theorem, params:
        case TheoremId.T34_CYCLE, (n,) if n >= 3:
            return 2 * _ceil_div(n, 5)
        case TheoremId.T34_PATH, (n,) if n >= 2:
            return 2 * _ceil_div(n + 1, 5)
        case TheoremId.T34_COMPLETE | TheoremId.P42_MAXDEG, (n,) if n >= 2:
            return 2
        case TheoremId.T34_BIPARTITE | TheoremId.P43_BIPARTITE, (m, n) if m >= 1 and n >= 1:
            return 2
        case TheoremId.T44_MID_CYCLE, (n,) if n >= 3:
            return 2 * _ceil_div(n, 4)
        case TheoremId.T45_MID_PATH | TheoremId.T53_PATH_BOUND, (n,) if n >= 2:
            return middle_path_value(n)
        case TheoremId.P46_FRIENDSHIP, (k,) if k >= 2:
            return 2
        case TheoremId.T47_DOUBLE_STAR, (n, m) if n >= 1 and m >= 1:
            return 4
        case TheoremId.P57_JOIN, (order_g, order_h) if order_g >= 1 and order_h >= 2:
            return 2
    return None


# ---------------------------------------------------------------------------
# Proof constructions on the canonical middle-graph labels
# ---------------------------------------------------------------------------

def witness_middle_cycle(n: int) -> VertexSet:
    """D = {u_j : j = 1, 2 mod 4}, plus original vertex n when n = 1 mod 4.

    u_j is the subdivision vertex of the cycle edge between 1-based
    vertices j and j+1, i.e. 0-based {j-1, j mod n}.
    """
    if n < 3:
        raise GraphError(f"cycle witness needs n >= 3, got {n}")
    mg = middle_graph(generate(FamilySpec(family=Family.CYCLE, n=n)))
    members = [mg.subdivision_of(j - 1, j % n) for j in range(1, n + 1) if j % 4 in (1, 2)]
    if n % 4 == 1:
        members.append(n - 1)
    return VertexSet.of(mg.g.n, members)


def witness_middle_path(n: int) -> VertexSet:
    """S built from D = {u_j : j = 1, 2 mod 4} by the residue of n mod 4."""
    if n < 2:
        raise GraphError(f"path witness needs n >= 2, got {n}")
    mg = middle_graph(generate(FamilySpec(family=Family.PATH, n=n)))

    def u(j: int) -> int:
        return mg.subdivision_of(j - 1, j)

    members = [u(j) for j in range(1, n) if j % 4 in (1, 2)]
    last = n - 1  # v_n
    match n % 4:
        case 0 | 1:
            members += [u(n - 1), last]
        case 2:
            members.append(last)
    return VertexSet.of(mg.g.n, members)


def witness_double_star(n: int, m: int) -> VertexSet:
    """{a, u_a, b, u_b} with u_a, u_b on the first pendant edge of each center."""
    if n < 1 or m < 1:
        raise GraphError(f"double star witness needs n, m >= 1, got n={n}, m={m}")
    mg = middle_graph(generate(FamilySpec(family=Family.DOUBLE_STAR, n=max(n, m), m=min(n, m))))
    a, b = 0, 1
    first_leaf_a, first_leaf_b = 2, max(n, m) + 2
    return VertexSet.of(mg.g.n, [a, mg.subdivision_of(a, first_leaf_a), b, mg.subdivision_of(b, first_leaf_b)])


class Certificate(NamedTuple):
    u: int
    v1: int
    v2: int
    x1: int
    x2: int


def two_subdivision_certificate(g: Graph) -> Certificate | None:
    """First (u, v1, v2) whose subdivision pair {x1, x2} is a PDD-set of M(G)."""
    mg = middle_graph(g)
    if any(not a for a in mg.g.adj):
        return None
    for u in range(g.n):
        for idx, v1 in enumerate(g.adj[u]):
            for v2 in g.adj[u][idx + 1:]:
                x1, x2 = mg.subdivision_of(u, v1), mg.subdivision_of(u, v2)
                if check(mg.g, VertexSet.of(mg.g.n, (x1, x2)), PDD).satisfied:
                    return Certificate(u, v1, v2, x1, x2)
    return None


# ---------------------------------------------------------------------------
# Trees
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TreeProfile:
    leaves: VertexSet
    supports: VertexSet
    strong_supports: VertexSet
    k: int
    degree_term: int  # sum of deg(v) - 1 over strong supports
    bound_t54: int
    bound_c55: int
    bound_c56: int
    diameter: int
    is_star: bool
    leaf_conditions: bool  # pairwise disjoint leaf neighborhoods and leaf distance > 3

    @property
    def reported_t54(self) -> int:
        return max(2, self.bound_t54)

    @property
    def all_leaves_on_strong(self) -> bool:
        return self.k > 0 and self.supports == self.strong_supports


def tree_profile(t: Graph) -> TreeProfile:
    if not is_tree(t):
        raise GraphError(f"tree profile needs a tree, got n={t.n}, m={t.m}")
    profile = degree_profile(t)
    leaves = profile.leaves
    support_of = {leaf: t.adj[leaf][0] for leaf in leaves}
    supports = sorted(set(support_of.values()))
    strong = [s for s in supports if sum(1 for leaf in leaves if support_of[leaf] == s) >= 2]
    degree_term = sum(profile.degrees[s] - 1 for s in strong)
    k = len(strong)

    leaf_conditions = True
    for idx, u in enumerate(leaves):
        dist = distances_from(t, u)
        for w in leaves[idx + 1:]:
            if support_of[u] == support_of[w] or dist[w] <= 3:
                leaf_conditions = False
                break
        if not leaf_conditions:
            break

    return TreeProfile(
        leaves=VertexSet.of(t.n, leaves),
        supports=VertexSet.of(t.n, supports),
        strong_supports=VertexSet.of(t.n, strong),
        k=k,
        degree_term=degree_term,
        bound_t54=2 * k + 2 * (len(leaves) - degree_term),
        bound_c55=2 * k,
        bound_c56=2 * len(leaves),
        diameter=diameter(t),
        is_star=t.n >= 2 and profile.max_degree == t.n - 1,
        leaf_conditions=leaf_conditions,
    )


# ---------------------------------------------------------------------------
# Report helpers
# ---------------------------------------------------------------------------

def _skipped(theorem: TheoremId, instance: str, expected: str, *results: SolveResult) -> TheoremReport:
    statuses = sorted({r.status.value for r in results if not r.optimal})
    return TheoremReport(
        theorem, instance, expected,
        tuple(r.value for r in results), Verdict.SKIPPED,
        tuple(r.witness for r in results), sum(r.millis for r in results),
        reason=",".join(statuses),
    )


def _report(
    theorem: TheoremId, instance: str, expected: str, holds: bool, *results: SolveResult, reason: str = "",
) -> TheoremReport:
    verdict = Verdict.MATCH if holds else Verdict.MISMATCH
    report = TheoremReport(
        theorem, instance, expected,
        tuple(r.value for r in results), verdict,
        tuple(r.witness for r in results), sum(r.millis for r in results), reason,
    )
    if not holds:
        log.warning("%s mismatch on %s: expected %s, solver %s", theorem.value, instance, expected, report.solver_label)
    return report


def _diagnostic(theorem: TheoremId, instance: str, expected: str, result: SolveResult, reason: str) -> TheoremReport:
    return TheoremReport(
        theorem, instance, expected, (result.value,), Verdict.DIAGNOSTIC, (result.witness,), result.millis, reason,
    )


def _not_applicable(theorem: TheoremId, instance: str, reason: str) -> TheoremReport:
    return TheoremReport(theorem, instance, "-", (), Verdict.NOT_APPLICABLE, reason=reason)


def _family(family: Family, n: int, m: int = 0) -> tuple[str, Graph]:
    spec = FamilySpec(family=family, n=n, m=m)
    return spec.describe(), generate(spec)


def _sample_connected(rng: VerifyRange, i: int, n_min: int, n_max: int) -> tuple[str, Graph]:
    seed = rng.seed * 1000 + i
    n = random.Random(seed).randint(n_min, n_max)
    p = RANDOM_EDGE_PROBABILITY
    return f"random_connected(n={n},p={p},seed={seed})", random_connected_graph(n, p, seed)


def _sample_tree(rng: VerifyRange, i: int, n_min: int, n_max: int) -> tuple[str, Graph]:
    seed = rng.seed * 1000 + i
    n = random.Random(seed).randint(n_min, n_max)
    return f"random_tree(n={n},seed={seed})", random_tree(n, seed)


def _sample_range(rng: VerifyRange, n_min: int, n_max: int) -> tuple[int, int] | None:
    n_max = min(n_max, rng.max_n)
    return (n_min, n_max) if n_min <= n_max else None


# ---------------------------------------------------------------------------
# Statement verifiers
# ---------------------------------------------------------------------------

def _formula_rows(
    theorem: TheoremId,
    instances: list[tuple[str, Graph, tuple[int, ...]]],
    middle: bool,
    rng: VerifyRange,
    construction: Callable[..., VertexSet] | None = None,
) -> list[TheoremReport]:
    """One row per instance; with a construction, its set must also be a PDD-set of the expected size."""
    rows = []
    for name, g, params in instances:
        instance = f"M({name})" if middle else name
        expected = formula_value(theorem, *params)
        if expected is None:
            rows.append(_not_applicable(theorem, instance, f"parameters {params} outside the stated range"))
            continue
        target = middle_graph(g).g if middle else g
        result = solve(target, PDD, rng.options)
        if not result.optimal:
            rows.append(_skipped(theorem, instance, str(expected), result))
        else:
            holds, reason = result.value == expected, ""
            if construction is not None:
                built = construction(*params)
                if len(built) != expected or not check(target, built, PDD).satisfied:
                    holds, reason = False, "proof construction fails"
            rows.append(_report(theorem, instance, str(expected), holds, result, reason=reason))
    return rows


def _capped(lo: int, hi: int, rng: VerifyRange) -> range:
    return range(lo, min(hi, rng.max_n) + 1)


def _verify_t34_cycle(rng: VerifyRange) -> list[TheoremReport]:
    instances = [(*_family(Family.CYCLE, n), (n,)) for n in _capped(3, 12, rng)]
    return _formula_rows(TheoremId.T34_CYCLE, instances, middle=False, rng=rng)


def _verify_t34_path(rng: VerifyRange) -> list[TheoremReport]:
    instances = [(*_family(Family.PATH, n), (n,)) for n in _capped(2, 12, rng)]
    return _formula_rows(TheoremId.T34_PATH, instances, middle=False, rng=rng)


def _verify_t34_complete(rng: VerifyRange) -> list[TheoremReport]:
    instances = [(*_family(Family.COMPLETE, n), (n,)) for n in _capped(2, 6, rng)]
    return _formula_rows(TheoremId.T34_COMPLETE, instances, middle=False, rng=rng)


def _bipartite_pairs(rng: VerifyRange) -> list[tuple[str, Graph, tuple[int, ...]]]:
    return [
        (*_family(Family.COMPLETE_BIPARTITE, a, b), (a, b))
        for a in range(1, 4)
        for b in range(a, 4)
        if a + b <= rng.max_n
    ]


def _verify_t34_bipartite(rng: VerifyRange) -> list[TheoremReport]:
    return _formula_rows(TheoremId.T34_BIPARTITE, _bipartite_pairs(rng), middle=False, rng=rng)


def _verify_p42(rng: VerifyRange) -> list[TheoremReport]:
    instances = []
    for n in _capped(2, 5, rng):
        name, g = _family(Family.COMPLETE, n)
        instances.append((name, g, (g.n,)))
    for q in range(2, 6):
        name, g = _family(Family.STAR, q)
        if g.n <= rng.max_n:
            instances.append((name, g, (g.n,)))
    for h in range(3, 6):
        name, g = _family(Family.WHEEL, h)
        if g.n <= rng.max_n:
            instances.append((name, g, (g.n,)))
    return _formula_rows(TheoremId.P42_MAXDEG, instances, middle=True, rng=rng)


def _verify_p43(rng: VerifyRange) -> list[TheoremReport]:
    return _formula_rows(TheoremId.P43_BIPARTITE, _bipartite_pairs(rng), middle=True, rng=rng)


def _verify_t44(rng: VerifyRange) -> list[TheoremReport]:
    instances = [(*_family(Family.CYCLE, n), (n,)) for n in _capped(3, 12, rng)]
    return _formula_rows(TheoremId.T44_MID_CYCLE, instances, middle=True, rng=rng, construction=witness_middle_cycle)


def _verify_t45(rng: VerifyRange) -> list[TheoremReport]:
    instances = [(*_family(Family.PATH, n), (n,)) for n in _capped(2, 13, rng)]
    return _formula_rows(TheoremId.T45_MID_PATH, instances, middle=True, rng=rng, construction=witness_middle_path)


def _verify_p46(rng: VerifyRange) -> list[TheoremReport]:
    instances = [(*_family(Family.FRIENDSHIP, k), (k,)) for k in range(2, 4) if 2 * k + 1 <= rng.max_n]
    return _formula_rows(TheoremId.P46_FRIENDSHIP, instances, middle=True, rng=rng)


def _verify_t47(rng: VerifyRange) -> list[TheoremReport]:
    instances = [
        (*_family(Family.DOUBLE_STAR, n, m), (n, m))
        for n in range(1, 4)
        for m in range(1, n + 1)
        if n + m + 2 <= rng.max_n
    ]
    return _formula_rows(TheoremId.T47_DOUBLE_STAR, instances, middle=True, rng=rng, construction=witness_double_star)


_JOIN_OPERANDS = [
    (Family.COMPLETE, 1),
    (Family.PATH, 2),
    (Family.PATH, 3),
    (Family.CYCLE, 3),
    (Family.CYCLE, 4),
]


def _verify_p57(rng: VerifyRange) -> list[TheoremReport]:
    rows = []
    for family_g, n_g in _JOIN_OPERANDS:
        for family_h, n_h in _JOIN_OPERANDS:
            name_g, g = _family(family_g, n_g)
            name_h, h = _family(family_h, n_h)
            instance = f"M({name_g}+{name_h})"
            result = solve(middle_graph(join(g, h)).g, PDD, rng.options)
            expected = formula_value(TheoremId.P57_JOIN, g.n, h.n)
            if not result.optimal:
                rows.append(_skipped(TheoremId.P57_JOIN, instance, str(expected or 2), result))
            elif expected is None:
                # the construction picks two vertices of H
                rows.append(_diagnostic(TheoremId.P57_JOIN, instance, "2", result, "second operand has one vertex"))
            else:
                rows.append(_report(TheoremId.P57_JOIN, instance, str(expected), result.value == expected, result))
    return rows


def _certificate_instances(rng: VerifyRange) -> list[tuple[str, Graph]]:
    fixed = [_family(Family.STAR, q) for q in range(2, 6)]
    fixed += [_family(Family.FRIENDSHIP, k) for k in (2, 3)]
    fixed += [_family(Family.PATH, n) for n in range(3, 8)]
    fixed += [_family(Family.CYCLE, n) for n in range(3, 8)]
    fixed += [_family(Family.COMPLETE, n) for n in range(3, 6)]
    fixed += [_family(Family.COMPLETE_BIPARTITE, 2, 3), _family(Family.DOUBLE_STAR, 2, 2), _family(Family.WHEEL, 4)]
    fixed = [(name, g) for name, g in fixed if g.n <= rng.max_n]
    bounds = _sample_range(rng, 3, 7)
    if bounds:
        fixed += [_sample_connected(rng, i, *bounds) for i in range(rng.samples)]
    return fixed


def _verify_t41(rng: VerifyRange) -> list[TheoremReport]:
    theorem = TheoremId.T41_CERTIFICATE
    rows = []
    for name, g in _certificate_instances(rng):
        instance = f"M({name})"
        if max(degree_profile(g).degrees, default=0) < 2:
            rows.append(_not_applicable(theorem, instance, "no two edges share a vertex"))
            continue
        certificate = two_subdivision_certificate(g)
        result = solve(middle_graph(g).g, PDD, rng.options)
        expected = "2" if certificate else ">=4"
        if not result.optimal:
            rows.append(_skipped(theorem, instance, expected, result))
            continue
        holds = result.value == 2 if certificate else result.value >= 4
        reason = f"u={certificate.u},v1={certificate.v1},v2={certificate.v2}" if certificate else ""
        rows.append(_report(theorem, instance, expected, holds, result, reason=reason))
    return rows


def _verify_l51(rng: VerifyRange) -> list[TheoremReport]:
    theorem = TheoremId.L51_SD_RESTRICTION
    bounds = _sample_range(rng, 5, 8)
    if not bounds:
        return []
    rows = []
    for i in range(rng.samples):
        name, g = _sample_connected(rng, i, *bounds)
        mg = middle_graph(g)
        instance = f"M({name})"
        restricted = solve(mg.g, PDD, rng.options, allowed=subdivision_vertices(mg))
        full = solve(mg.g, PDD, rng.options)
        expected = "restricted_to_SD=unrestricted"
        if not full.optimal or restricted.status is SolveStatus.BUDGET_EXCEEDED:
            rows.append(_skipped(theorem, instance, expected, restricted, full))
            continue
        holds = restricted.optimal and restricted.value == full.value
        rows.append(_report(theorem, instance, expected, holds, restricted, full))
    return rows


def middle_pdd_by_components(g: Graph, options: SolveOptions) -> list[SolveResult]:
    """gamma_prd(M(C)) for each component C of g."""
    results = []
    for comp in components(g):
        sub, _ = induced_subgraph(g, comp)
        results.append(solve(middle_graph(sub).g, PDD, options))
    return results


def _verify_l52(rng: VerifyRange) -> list[TheoremReport]:
    theorem = TheoremId.L52_DELETION
    bounds = _sample_range(rng, 5, 8)
    if not bounds:
        return []
    rows = []
    attempt = 0
    while len(rows) < rng.samples and attempt < 20 * max(1, rng.samples):
        name, g = _sample_connected(rng, attempt, *bounds)
        attempt += 1
        supports = {g.adj[leaf][0] for leaf in degree_profile(g).leaves}
        candidates = [v for v in range(g.n) if v not in supports]
        if not candidates:
            continue
        t = random.Random(rng.seed * 1000 + attempt).choice(candidates)
        instance = f"M({name}),t={t}"

        whole = solve(middle_graph(g).g, PDD, rng.options)
        parts = middle_pdd_by_components(delete_vertex(g, t).graph, rng.options)
        expected = "M(G-t)<=M(G)<=M(G-t)+2"
        if not whole.optimal or not all(r.optimal for r in parts):
            rows.append(_skipped(theorem, instance, expected, whole, *parts))
            continue
        reduced = sum(r.value for r in parts)
        report = _report(theorem, instance, expected, reduced <= whole.value <= reduced + 2, whole, *parts)
        rows.append(TheoremReport(
            theorem, instance, expected, (whole.value, reduced), report.verdict,
            report.witnesses, report.millis, f"{len(parts)} component(s)",
        ))
    return rows


def _verify_t53(rng: VerifyRange) -> list[TheoremReport]:
    theorem = TheoremId.T53_PATH_BOUND
    bounds = _sample_range(rng, 2, 8)
    if not bounds:
        return []
    rows = []
    for i in range(rng.samples):
        name, g = _sample_connected(rng, i, *bounds)
        bound = formula_value(theorem, g.n)
        expected = f"2<=v<={bound}"
        instance = f"M({name})"
        result = solve(middle_graph(g).g, PDD, rng.options)
        if not result.optimal:
            rows.append(_skipped(theorem, instance, expected, result))
        else:
            rows.append(_report(theorem, instance, expected, 2 <= result.value <= bound, result))
    return rows


def _tree_samples(rng: VerifyRange) -> list[tuple[str, Graph]]:
    bounds = _sample_range(rng, 5, 10)
    if not bounds:
        return []
    return [_sample_tree(rng, i, *bounds) for i in range(rng.samples)]


def _verify_t54(rng: VerifyRange) -> list[TheoremReport]:
    theorem = TheoremId.T54_TREE_BOUND
    rows = []
    for name, t in _tree_samples(rng):
        instance = f"M({name})"
        profile = tree_profile(t)
        if profile.is_star:
            rows.append(_not_applicable(theorem, instance, "star"))
            continue
        expected = f">={profile.reported_t54}"
        result = solve(middle_graph(t).g, PDD, rng.options)
        if not result.optimal:
            rows.append(_skipped(theorem, instance, expected, result))
        elif profile.leaf_conditions:
            rows.append(_report(theorem, instance, expected, result.value >= profile.reported_t54, result))
        else:
            rows.append(_diagnostic(theorem, instance, expected, result, "leaf conditions do not hold"))
    return rows


def _corollary_row(
    theorem: TheoremId, instance: str, t: Graph, bound: int, diam: int, rng: VerifyRange,
) -> TheoremReport:
    equality = diam == 4
    expected = f"={bound}" if equality else f">={bound}"
    result = solve(middle_graph(t).g, PDD, rng.options)
    if not result.optimal:
        return _skipped(theorem, instance, expected, result)
    holds = result.value == bound if equality else result.value >= bound
    return _report(theorem, instance, expected, holds, result)


def _verify_c55(rng: VerifyRange) -> list[TheoremReport]:
    theorem = TheoremId.C55_STRONG_SUPPORT
    rows = []
    spiders = [_family(Family.STAR_OF_STARS, k, 2) for k in range(2, 5)]
    for name, t in [(n, t) for n, t in spiders if t.n <= max(rng.max_n, 13)] + _tree_samples(rng):
        instance = f"M({name})"
        profile = tree_profile(t)
        if profile.is_star or not profile.all_leaves_on_strong:
            rows.append(_not_applicable(theorem, instance, "a leaf sits on a weak support"))
            continue
        rows.append(_corollary_row(theorem, instance, t, profile.bound_c55, profile.diameter, rng))
    return rows


def _verify_c56(rng: VerifyRange) -> list[TheoremReport]:
    theorem = TheoremId.C56_NO_STRONG_SUPPORT
    rows = []
    spiders = [_family(Family.SUBDIVIDED_STAR, k) for k in range(2, 5)]
    for name, t in [(n, t) for n, t in spiders if t.n <= max(rng.max_n, 9)] + _tree_samples(rng):
        instance = f"M({name})"
        profile = tree_profile(t)
        if profile.is_star or profile.k:
            rows.append(_not_applicable(theorem, instance, "has a strong support" if profile.k else "star"))
            continue
        rows.append(_corollary_row(theorem, instance, t, profile.bound_c56, profile.diameter, rng))
    return rows


def _verify_o33(rng: VerifyRange) -> list[TheoremReport]:
    theorem = TheoremId.O33_SUPPORT
    rows = []
    for name, t in _tree_samples(rng):
        result = solve(t, PDD, rng.options)
        if not result.optimal:
            rows.append(_skipped(theorem, name, "support condition", result))
            continue
        d = result.witness
        supports = tree_profile(t).supports
        satisfied = sum(
            1 for s in supports
            if (s in d and any(w in d for w in t.adj[s])) or sum(1 for w in t.adj[s] if w in d) >= 2
        )
        rows.append(_diagnostic(theorem, name, "support condition", result, f"{satisfied}/{len(supports)} supports"))
    return rows


# ---------------------------------------------------------------------------
# Inequality chains
# ---------------------------------------------------------------------------

def check_inequalities(g: Graph, instance: str = "G", options: SolveOptions | None = None) -> list[TheoremReport]:
    """Observation chains and the global bounds on one isolate-free graph."""
    options = options or SolveOptions()
    d = solve(g, DominationKind.DISJUNCTIVE, options)
    td = solve(g, DominationKind.TOTAL_DISJUNCTIVE, options)
    pr = solve(g, DominationKind.PAIRED, options)
    prd = solve(g, PDD, options)

    checks = [
        (TheoremId.O31_CHAIN, "gamma_d<=gamma_prd", (d, prd), lambda: d.value <= prd.value),
        (TheoremId.O31_CHAIN, "gamma_prd<=gamma_pr", (prd, pr), lambda: prd.value <= pr.value),
        (TheoremId.O31_CHAIN, "gamma_prd<=2*gamma_d", (prd, d), lambda: prd.value <= 2 * d.value),
        (TheoremId.O32_TOTAL, "gamma_td<=gamma_prd", (td, prd), lambda: td.value <= prd.value),
        (
            TheoremId.T35_BOUNDS, f"2<=gamma_prd<={g.n},even", (prd,),
            lambda: 2 <= prd.value <= g.n and prd.value % 2 == 0,
        ),
    ]
    rows = []
    for theorem, relation, results, holds in checks:
        if not all(r.optimal for r in results):
            rows.append(_skipped(theorem, instance, relation, *results))
        else:
            rows.append(_report(theorem, instance, relation, holds(), *results))
    return rows


def _chain_rows(theorem: TheoremId, rng: VerifyRange) -> list[TheoremReport]:
    bounds = _sample_range(rng, 2, 8)
    if not bounds:
        return []
    rows = []
    for i in range(rng.samples):
        name, g = _sample_connected(rng, i, *bounds)
        for instance, target in ((name, g), (f"M({name})", middle_graph(g).g)):
            rows += [r for r in check_inequalities(target, instance, rng.options) if r.theorem is theorem]
    return rows


# ---------------------------------------------------------------------------
# Campaign entry points
# ---------------------------------------------------------------------------

_VERIFIERS: dict[TheoremId, Callable[[VerifyRange], list[TheoremReport]]] = {
    TheoremId.T34_CYCLE: _verify_t34_cycle,
    TheoremId.T34_PATH: _verify_t34_path,
    TheoremId.T34_COMPLETE: _verify_t34_complete,
    TheoremId.T34_BIPARTITE: _verify_t34_bipartite,
    TheoremId.O31_CHAIN: lambda rng: _chain_rows(TheoremId.O31_CHAIN, rng),
    TheoremId.O32_TOTAL: lambda rng: _chain_rows(TheoremId.O32_TOTAL, rng),
    TheoremId.O33_SUPPORT: _verify_o33,
    TheoremId.T35_BOUNDS: lambda rng: _chain_rows(TheoremId.T35_BOUNDS, rng),
    TheoremId.T41_CERTIFICATE: _verify_t41,
    TheoremId.P42_MAXDEG: _verify_p42,
    TheoremId.P43_BIPARTITE: _verify_p43,
    TheoremId.T44_MID_CYCLE: _verify_t44,
    TheoremId.T45_MID_PATH: _verify_t45,
    TheoremId.P46_FRIENDSHIP: _verify_p46,
    TheoremId.T47_DOUBLE_STAR: _verify_t47,
    TheoremId.L51_SD_RESTRICTION: _verify_l51,
    TheoremId.L52_DELETION: _verify_l52,
    TheoremId.T53_PATH_BOUND: _verify_t53,
    TheoremId.T54_TREE_BOUND: _verify_t54,
    TheoremId.C55_STRONG_SUPPORT: _verify_c55,
    TheoremId.C56_NO_STRONG_SUPPORT: _verify_c56,
    TheoremId.P57_JOIN: _verify_p57,
}


def verify_theorem(theorem: TheoremId, rng: VerifyRange | None = None) -> list[TheoremReport]:
    rng = rng or VerifyRange()
    log.info("Verifying %s (max_n=%d, samples=%d, seed=%d)", theorem.value, rng.max_n, rng.samples, rng.seed)
    rows = _VERIFIERS[theorem](rng)
    mismatches = sum(1 for r in rows if r.verdict is Verdict.MISMATCH)
    log.info("%s: %d rows, %d mismatch(es)", theorem.value, len(rows), mismatches)
    return rows


def suite_ids(suite: str) -> list[TheoremId]:
    """'all', a full id such as 'T45_mid_path', or its prefix such as 'T45'."""
    key = suite.strip().lower()
    if key == "all":
        return list(TheoremId)
    ids = [t for t in TheoremId if t.value.lower() == key or t.value.lower().split("_")[0] == key]
    if not ids:
        raise ValueError(f"unknown suite {suite!r}; use 'all' or one of {', '.join(t.value for t in TheoremId)}")
    return ids


# ---------------------------------------------------------------------------
# Random-instance sweeps
# ---------------------------------------------------------------------------

SWEEP_COLUMNS = [
    "instance", "n", "m", "gamma_d", "gamma_td", "gamma_pr", "gamma_prd",
    "path_bound", "bound_t54", "bound_c55", "bound_c56", "o31", "o32", "t35", "t53",
]


@dataclass(frozen=True)
class SweepRow:
    instance: str
    n: int
    m: int
    values: dict[DominationKind, int | None]
    path_bound: int | None
    tree: TreeProfile | None
    chains: dict[str, Verdict]

    @property
    def violated(self) -> bool:
        return any(v is Verdict.MISMATCH for v in self.chains.values())

    def to_row(self) -> list[str]:
        def cell(value: object) -> str:
            return "" if value is None else str(value)

        tree = self.tree
        return [
            self.instance, str(self.n), str(self.m),
            cell(self.values[DominationKind.DISJUNCTIVE]),
            cell(self.values[DominationKind.TOTAL_DISJUNCTIVE]),
            cell(self.values[DominationKind.PAIRED]),
            cell(self.values[PDD]),
            cell(self.path_bound),
            cell(tree.reported_t54 if tree and not tree.is_star else None),
            cell(tree.bound_c55 if tree else None),
            cell(tree.bound_c56 if tree else None),
            *(self.chains[key].value for key in ("o31", "o32", "t35", "t53")),
        ]


def sweep_instance(name: str, g: Graph, options: SolveOptions) -> SweepRow:
    """All four parameters of M(G) plus chain and bound verdicts."""
    mg = middle_graph(g).g
    rows = check_inequalities(mg, f"M({name})", options)

    def fold(theorem: TheoremId) -> Verdict:
        verdicts = {r.verdict for r in rows if r.theorem is theorem}
        for v in (Verdict.MISMATCH, Verdict.SKIPPED):
            if v in verdicts:
                return v
        return Verdict.MATCH

    values = {
        kind: solve(mg, kind, options).value
        for kind in (DominationKind.DISJUNCTIVE, DominationKind.TOTAL_DISJUNCTIVE, DominationKind.PAIRED, PDD)
    }
    path_bound = formula_value(TheoremId.T53_PATH_BOUND, g.n)
    prd = solve(mg, PDD, options)
    if not prd.optimal or path_bound is None:
        t53 = Verdict.SKIPPED if not prd.optimal else Verdict.NOT_APPLICABLE
    else:
        t53 = Verdict.MATCH if 2 <= prd.value <= path_bound else Verdict.MISMATCH

    return SweepRow(
        instance=name,
        n=g.n,
        m=g.m,
        values=values,
        path_bound=path_bound,
        tree=tree_profile(g) if is_tree(g) else None,
        chains={
            "o31": fold(TheoremId.O31_CHAIN),
            "o32": fold(TheoremId.O32_TOTAL),
            "t35": fold(TheoremId.T35_BOUNDS),
            "t53": t53,
        },
    )
