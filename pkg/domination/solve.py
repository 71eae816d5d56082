"""Exact minimum domination-type sets: branch-and-bound, greedy incumbent, brute-force oracle."""

import time
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from pydantic import BaseModel, ConfigDict, Field

from domination.config import BUDGET_CHECK_INTERVAL, NODE_BUDGET, ORACLE_MAX_VERTICES, TIME_BUDGET, log
from domination.dominate import DominationKind, coverage_rule, find_pairing, require_isolate_free
from domination.errors import GraphError, OracleCapError
from domination.graph import Graph, VertexSet, iter_bits


class SolveStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    BUDGET_EXCEEDED = "budget_exceeded"


class SolveOptions(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    time_budget: float = Field(default_factory=lambda: TIME_BUDGET, gt=0)
    node_budget: int = Field(default=NODE_BUDGET, gt=0)
    allowed: VertexSet | None = None
    deterministic: bool = True


@dataclass(frozen=True)
class SolveResult:
    kind: DominationKind
    value: int | None
    witness: VertexSet | None
    nodes: int
    millis: int
    status: SolveStatus

    @property
    def optimal(self) -> bool:
        return self.status is SolveStatus.OPTIMAL

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "value": self.value,
            "witness": self.witness.to_list() if self.witness is not None else [],
            "nodes": self.nodes,
            "millis": self.millis,
            "status": self.status.value,
        }


class _BudgetExceeded(Exception):
    pass


class _BranchAndBound:
    """Include/exclude search over a fixed vertex order.

    minimize(): strict improvement of the incumbent, order by degree.
    first_of_size(): first set of exactly the target size in include-first
    ascending order, which is the lexicographically least one.
    """

    def __init__(self, g: Graph, kind: DominationKind, options: SolveOptions) -> None:
        self.rule = coverage_rule(g, kind)
        self.paired = kind.paired
        self.open_masks = g.open_masks
        self.memo: dict[int, tuple | None] = {}
        self.node_budget = options.node_budget
        self.deadline = time.monotonic() + options.time_budget
        self.nodes = 0
        self.best_size = 0
        self.best_mask: int | None = None
        self.floor = 0
        self.target: int | None = None
        self.found: int | None = None

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise _BudgetExceeded("node budget exceeded")
        if self.nodes % BUDGET_CHECK_INTERVAL == 0 and time.monotonic() > self.deadline:
            raise _BudgetExceeded("time budget exceeded")

    def _extra_needed(self, deficit: int, chosen: int, undecided: int) -> int | None:
        """Lower bound on further picks; None when some deficit vertex is lost."""
        rule = self.rule
        for v in iter_bits(deficit):
            if not rule.coverable(v, chosen, undecided):
                return None
        most = 0
        for x in iter_bits(undecided):
            c = (rule.reach[x] & deficit).bit_count()
            if c > most:
                most = c
        if most == 0:
            return None
        return -(-deficit.bit_count() // most)

    def _matched(self, chosen: int) -> bool:
        return find_pairing(self.open_masks, chosen, self.memo) is not None

    def _explore(self, i: int, chosen: int, size: int) -> bool:
        """Returns True when the search can stop."""
        self._tick()
        undecided = self.suffix[i]
        deficit = self.rule.deficit(chosen)
        if not deficit:
            if not self.paired or (size % 2 == 0 and self._matched(chosen)):
                return self._accept(chosen, size)
            extra = 1
        else:
            extra = self._extra_needed(deficit, chosen, undecided)
            if extra is None:
                return False
        bound = size + extra
        if self.paired and bound % 2:
            bound += 1
        if self.target is None:
            if bound >= self.best_size:
                return False
        elif bound > self.target:
            return False
        if i == len(self.order):
            return False

        bit = 1 << self.order[i]
        if self._explore(i + 1, chosen | bit, size + 1):
            return True
        return self._explore(i + 1, chosen, size)

    def _accept(self, chosen: int, size: int) -> bool:
        if self.target is not None:
            if size == self.target:
                self.found = chosen
                return True
            return False
        if size < self.best_size:
            self.best_size, self.best_mask = size, chosen
            log.debug("incumbent improved to %d after %d nodes", size, self.nodes)
        return self.best_size <= self.floor

    def _prepare(self, order: list[int]) -> None:
        self.order = order
        self.suffix = [0] * (len(order) + 1)
        for i in range(len(order) - 1, -1, -1):
            self.suffix[i] = self.suffix[i + 1] | 1 << order[i]

    def minimize(self, order: list[int]) -> None:
        self._prepare(order)
        self.target = None
        self._explore(0, 0, 0)

    def first_of_size(self, order: list[int], target: int) -> int | None:
        self._prepare(order)
        self.target, self.found = target, None
        self._explore(0, 0, 0)
        return self.found


def _greedy(g: Graph, kind: DominationKind, allowed: int) -> tuple[int, int] | None:
    rule = coverage_rule(g, kind)
    chosen = 0
    deficit = rule.deficit(chosen)
    while deficit:
        remaining = deficit.bit_count()
        best: tuple[int, int] | None = None
        best_gain = 0
        free = allowed & ~chosen
        for u in iter_bits(free):
            if kind.paired:
                candidates = [(1 << u) | (1 << w) for w in iter_bits(g.open_masks[u] & free) if w > u]
            else:
                candidates = [1 << u]
            for add in candidates:
                gain = remaining - rule.deficit(chosen | add).bit_count()
                if gain > best_gain:
                    best, best_gain = (add, gain), gain
        if best is None:
            return None
        chosen |= best[0]
        deficit = rule.deficit(chosen)
    return chosen.bit_count(), chosen


def greedy_upper_bound(g: Graph, kind: DominationKind) -> tuple[int, VertexSet]:
    """Feasible set built by best-gain vertices (or edges, for paired kinds)."""
    require_isolate_free(g)
    size, mask = _greedy(g, kind, (1 << g.n) - 1)
    return size, VertexSet(g.n, mask)


def _solve(g: Graph, kind: DominationKind, allowed: VertexSet, options: SolveOptions) -> SolveResult:
    require_isolate_free(g)
    if allowed.mask >> g.n:
        raise GraphError(f"restriction {allowed.to_list()} has members outside 0..{g.n - 1}")
    start = time.monotonic()
    search = _BranchAndBound(g, kind, options)
    search.floor = 0 if g.n == 0 else 2 if kind.paired else 1
    members = list(iter_bits(allowed.mask))

    seed = _greedy(g, kind, allowed.mask)
    if seed is not None:
        search.best_size, search.best_mask = seed
    else:
        search.best_size = len(members) + 1

    status = SolveStatus.OPTIMAL
    try:
        if search.best_size > search.floor:
            search.minimize(sorted(members, key=lambda v: (-len(g.adj[v]), v)))
        if search.best_mask is None:
            status = SolveStatus.INFEASIBLE
        elif options.deterministic:
            try:
                least = search.first_of_size(members, search.best_size)
                if least is not None:
                    search.best_mask = least
            except _BudgetExceeded:
                log.warning("budget exhausted while ordering the %s witness; keeping an optimal one", kind.value)
    except _BudgetExceeded as e:
        incumbent = search.best_size if search.best_mask is not None else None
        log.warning("%s solve on n=%d stopped: %s (incumbent %s)", kind.value, g.n, e, incumbent)
        status = SolveStatus.BUDGET_EXCEEDED

    millis = int((time.monotonic() - start) * 1000)
    if search.best_mask is None:
        return SolveResult(kind, None, None, search.nodes, millis, status)
    return SolveResult(kind, search.best_size, VertexSet(g.n, search.best_mask), search.nodes, millis, status)


def minimum(g: Graph, kind: DominationKind, options: SolveOptions | None = None) -> SolveResult:
    options = options or SolveOptions()
    allowed = options.allowed if options.allowed is not None else VertexSet.full(g.n)
    return _solve(g, kind, allowed, options)


def minimum_restricted(
    g: Graph, kind: DominationKind, allowed: VertexSet, options: SolveOptions | None = None,
) -> SolveResult:
    return _solve(g, kind, allowed, options or SolveOptions())


def brute_force_oracle(g: Graph, kind: DominationKind) -> SolveResult:
    """Subsets by ascending size, lexicographic within a size; first hit is optimal."""
    if g.n > ORACLE_MAX_VERTICES:
        raise OracleCapError(f"brute-force oracle is capped at {ORACLE_MAX_VERTICES} vertices, got {g.n}")
    require_isolate_free(g)
    start = time.monotonic()
    rule = coverage_rule(g, kind)
    memo: dict[int, tuple | None] = {}
    examined = 0
    for size in range(g.n + 1):
        if kind.paired and size % 2:
            continue
        for subset in combinations(range(g.n), size):
            examined += 1
            mask = sum(1 << v for v in subset)
            if rule.deficit(mask):
                continue
            if kind.paired and find_pairing(g.open_masks, mask, memo) is None:
                continue
            millis = int((time.monotonic() - start) * 1000)
            return SolveResult(kind, size, VertexSet(g.n, mask), examined, millis, SolveStatus.OPTIMAL)
    millis = int((time.monotonic() - start) * 1000)
    return SolveResult(kind, None, None, examined, millis, SolveStatus.INFEASIBLE)
