"""Domination checks for a candidate vertex set, including the paired (perfect matching) condition."""

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from domination.errors import GraphError, IsolatedVertexError
from domination.graph import Graph, VertexSet, iter_bits


class DominationKind(str, Enum):
    DOMINATING = "dom"
    TOTAL_DOMINATING = "tdom"
    DISJUNCTIVE = "dd"
    TOTAL_DISJUNCTIVE = "tdd"
    PAIRED = "pr"
    PAIRED_DISJUNCTIVE = "pdd"

    @property
    def paired(self) -> bool:
        return self in (DominationKind.PAIRED, DominationKind.PAIRED_DISJUNCTIVE)

    @property
    def coverage(self) -> "DominationKind":
        """The unpaired kind whose coverage rule this kind uses."""
        if self is DominationKind.PAIRED:
            return DominationKind.DOMINATING
        if self is DominationKind.PAIRED_DISJUNCTIVE:
            return DominationKind.DISJUNCTIVE
        return self

    @property
    def total(self) -> bool:
        return self.coverage in (DominationKind.TOTAL_DOMINATING, DominationKind.TOTAL_DISJUNCTIVE)

    @property
    def disjunctive(self) -> bool:
        return self.coverage in (DominationKind.DISJUNCTIVE, DominationKind.TOTAL_DISJUNCTIVE)

    @property
    def symbol(self) -> str:
        return {
            DominationKind.DOMINATING: "gamma",
            DominationKind.TOTAL_DOMINATING: "gamma_t",
            DominationKind.DISJUNCTIVE: "gamma_d",
            DominationKind.TOTAL_DISJUNCTIVE: "gamma_td",
            DominationKind.PAIRED: "gamma_pr",
            DominationKind.PAIRED_DISJUNCTIVE: "gamma_prd",
        }[self]


class CoverageRule:
    """Bitmask form of a kind's coverage rule on one graph.

    direct[v]: vertices whose membership alone covers v (N[v], or N(v) for
    total kinds). far[v]: vertices at distance two, two of which cover v
    under the disjunctive rules. reach[x]: vertices x helps to cover.
    """

    def __init__(self, g: Graph, kind: DominationKind) -> None:
        self.n = g.n
        self.disjunctive = kind.disjunctive
        self.direct = g.open_masks if kind.total else g.closed_masks
        self.far = g.dist2_masks if self.disjunctive else tuple(0 for _ in range(g.n))
        self.reach = tuple(d | f for d, f in zip(self.direct, self.far))

    def is_covered(self, v: int, chosen: int) -> bool:
        if self.direct[v] & chosen:
            return True
        return self.disjunctive and (self.far[v] & chosen).bit_count() >= 2

    def deficit(self, chosen: int) -> int:
        direct, far = self.direct, self.far
        mask = 0
        for v in range(self.n):
            if direct[v] & chosen:
                continue
            if self.disjunctive and (far[v] & chosen).bit_count() >= 2:
                continue
            mask |= 1 << v
        return mask

    def coverable(self, v: int, chosen: int, undecided: int) -> bool:
        """Whether v can still be covered using vertices from undecided."""
        if self.direct[v] & undecided:
            return True
        return self.disjunctive and (self.far[v] & (chosen | undecided)).bit_count() >= 2


@lru_cache(maxsize=256)
def coverage_rule(g: Graph, kind: DominationKind) -> CoverageRule:
    return CoverageRule(g, kind.coverage)


@dataclass(frozen=True)
class Pairing:
    found: bool
    pairs: tuple[tuple[int, int], ...] = ()

    def __bool__(self) -> bool:
        return self.found


@dataclass(frozen=True)
class DominationVerdict:
    satisfied: bool
    violators: VertexSet
    matching: tuple[tuple[int, int], ...] | None = None
    # set when the coverage rule holds but G[D] has no perfect matching;
    # violators is then D itself
    matching_failed: bool = field(default=False)


def require_isolate_free(g: Graph) -> None:
    isolated = [v for v, a in enumerate(g.adj) if not a]
    if isolated:
        raise IsolatedVertexError(isolated)


def _check_members(g: Graph, d: VertexSet) -> None:
    if d.mask >> g.n:
        raise GraphError(f"vertex set {d.to_list()} has members outside 0..{g.n - 1}")


def find_pairing(open_masks: tuple[int, ...], mask: int, memo: dict[int, tuple | None]) -> tuple | None:
    """Pair the lowest unmatched vertex with each neighbor in turn; memo keyed on the unmatched set."""
    if mask == 0:
        return ()
    if mask in memo:
        return memo[mask]
    v = (mask & -mask).bit_length() - 1
    rest = mask ^ (1 << v)
    result = None
    for u in iter_bits(open_masks[v] & rest):
        sub = find_pairing(open_masks, rest ^ (1 << u), memo)
        if sub is not None:
            result = ((v, u),) + sub
            break
    memo[mask] = result
    return result


def has_perfect_matching(g: Graph, d: VertexSet) -> Pairing:
    _check_members(g, d)
    if len(d) % 2:
        return Pairing(False)
    pairs = find_pairing(g.open_masks, d.mask, {})
    return Pairing(pairs is not None, pairs or ())


def uncovered(g: Graph, d: VertexSet, kind: DominationKind) -> VertexSet:
    require_isolate_free(g)
    _check_members(g, d)
    return VertexSet(g.n, coverage_rule(g, kind).deficit(d.mask))


def check(g: Graph, d: VertexSet, kind: DominationKind) -> DominationVerdict:
    violators = uncovered(g, d, kind)
    if not kind.paired:
        return DominationVerdict(satisfied=not violators, violators=violators)

    pairing = has_perfect_matching(g, d)
    if violators:
        return DominationVerdict(
            satisfied=False,
            violators=violators,
            matching=pairing.pairs if pairing else None,
            matching_failed=not pairing,
        )
    if not pairing:
        return DominationVerdict(satisfied=False, violators=d, matching_failed=True)
    return DominationVerdict(satisfied=True, violators=violators, matching=pairing.pairs)
