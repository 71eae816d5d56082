"""Typed run configuration built from the command line."""

from enum import Enum
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, model_validator

from domination.config import DEFAULT_MAX_N, DEFAULT_SAMPLES, DEFAULT_SEED, NODE_BUDGET, RANDOM_EDGE_PROBABILITY, TIME_BUDGET
from domination.dominate import DominationKind
from domination.graph import Family, FamilySpec
from domination.solve import SolveOptions


class Command(str, Enum):
    GEN = "gen"
    COMPUTE = "compute"
    VERIFY = "verify"
    SWEEP = "sweep"


class Transform(str, Enum):
    NONE = "none"
    MIDDLE = "middle"
    LINE = "line"
    JOIN = "join"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class RandomFamily(str, Enum):
    TREE = "tree"
    CONNECTED = "connected"


class Restriction(str, Enum):
    SUBDIVISION = "subdivision"
    ORIGINAL = "original"


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    command: Command
    family: Family | None = None
    n: int | None = None
    m: int = 0
    p: float = Field(default=RANDOM_EDGE_PROBABILITY, ge=0.0, le=1.0)
    seed: int = DEFAULT_SEED
    random: RandomFamily | None = None
    input: Path | None = None
    second: Path | None = None  # join operand
    transform: Transform = Transform.NONE
    kind: DominationKind = DominationKind.PAIRED_DISJUNCTIVE
    format: OutputFormat = OutputFormat.TEXT
    out: Path | None = None
    restrict: Restriction | None = None

    suite: str = "all"
    max_n: int = Field(default=DEFAULT_MAX_N, ge=2)
    samples: int = Field(default=DEFAULT_SAMPLES, ge=0)
    trees: int = Field(default=0, ge=0)
    graphs: int = Field(default=0, ge=0)
    n_min: int = Field(default=5, ge=2)
    n_max: int = Field(default=10, ge=2)

    time_budget: float = Field(default_factory=lambda: TIME_BUDGET, gt=0)
    node_budget: int = Field(default=NODE_BUDGET, gt=0)
    timings: bool = False
    allow_skipped: bool = False

    @model_validator(mode="after")
    def _check_inputs(self) -> "RunConfig":
        if self.transform is Transform.JOIN and self.second is None:
            raise ValueError("--transform join needs a second graph (--second)")
        if self.second is not None and self.transform is not Transform.JOIN:
            raise ValueError("--second is only used with --transform join")
        if self.command in (Command.GEN, Command.COMPUTE):
            sources = [s for s in (self.input, self.family, self.random) if s is not None]
            if len(sources) != 1:
                raise ValueError(f"{self.command.value} needs exactly one of --input, --family, --random")
            if self.random is not None and self.n is None:
                raise ValueError("--random needs --n")
        if self.restrict is not None and self.transform is not Transform.MIDDLE:
            raise ValueError("--restrict applies to middle graphs only (--transform middle)")
        if self.n_min > self.n_max:
            raise ValueError(f"--n-min {self.n_min} exceeds --n-max {self.n_max}")
        return self

    def family_spec(self) -> FamilySpec | None:
        if self.family is None:
            return None
        return FamilySpec(family=self.family, n=self.n if self.n is not None else 0, m=self.m)

    def solve_options(self) -> SolveOptions:
        return SolveOptions(time_budget=self.time_budget, node_budget=self.node_budget)
