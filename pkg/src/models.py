"""Data models for the application."""

from enum import Enum
from fractions import Fraction
from functools import total_ordering
from math import gcd
from typing import Any, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Property(str, Enum):
    """Sequence properties the verifiers decide."""

    N_WINDOW = "n_window"
    ORIENTABLE = "orientable"
    NEGATIVE_ORIENTABLE = "negative_orientable"
    GOOD = "good"


class Parity(str, Enum):
    """Kind of a tower stage."""

    OS = "OS"
    NOS = "NOS"

    @property
    def target(self) -> Property:
        if self is Parity.OS:
            return Property.ORIENTABLE
        return Property.NEGATIVE_ORIENTABLE

    def flipped(self) -> "Parity":
        return Parity.NOS if self is Parity.OS else Parity.OS


class Method(str, Enum):
    """Generator that produced a sequence."""

    OS2 = "os2"
    NOS2_CIRCUITS = "nos2_circuits"
    NOS_PSEUDOWEIGHT = "nos_pseudoweight"
    NOS_ZEROFREE = "nos_zerofree"
    OS_LIFT = "os_lift"


class TransformKind(str, Enum):
    """Symbol-wise and positional transforms of a ring sequence."""

    NEGATE = "negate"
    REVERSE = "reverse"
    TRANSLATE = "translate"
    SHIFT = "shift"


class CountKind(str, Enum):
    """Which weight class a count table holds."""

    PSEUDOWEIGHT_R = "pseudoweight_r"
    ZEROFREE_K = "zerofree_k"


class CountPredicate(str, Enum):
    """Tuple predicates the exhaustive scanner understands."""

    NEGASYMMETRIC = "negasymmetric"
    PSEUDOWEIGHT = "pseudoweight"
    ZEROFREE_WEIGHT = "zerofree_weight"


@total_ordering
class HalfInt(BaseModel):
    """Exact integer or half-integer, stored as twice its value."""

    model_config = ConfigDict(frozen=True)

    doubled: int

    @classmethod
    def of(cls, value: Union["HalfInt", int, float, str, Fraction]) -> "HalfInt":
        """Build from an int, float, decimal string or Fraction on the half grid."""
        if isinstance(value, HalfInt):
            return value
        twice = Fraction(value) * 2
        if twice.denominator != 1:
            raise ValueError(f"{value} is not a multiple of 1/2")
        return cls(doubled=int(twice))

    @property
    def value(self) -> Fraction:
        return Fraction(self.doubled, 2)

    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def __add__(self, other: Any) -> "HalfInt":
        return HalfInt(doubled=self.doubled + HalfInt.of(other).doubled)

    def __eq__(self, other: Any) -> bool:
        try:
            return self.doubled == HalfInt.of(other).doubled
        except (TypeError, ValueError):
            return NotImplemented

    def __lt__(self, other: Any) -> bool:
        return self.doubled < HalfInt.of(other).doubled

    def __hash__(self) -> int:
        return hash(self.value)

    def __float__(self) -> float:
        return self.doubled / 2

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.doubled // 2)
        return f"{self.doubled / 2:.1f}"


def _render(q: int, symbols: tuple) -> str:
    if q <= 10:
        return "".join(str(s) for s in symbols)
    return ",".join(str(s) for s in symbols)


class Alphabet(BaseModel):
    """The ring Z_q."""

    model_config = ConfigDict(frozen=True)

    q: int = Field(ge=2)

    def neg(self, symbol: int) -> int:
        return (-symbol) % self.q

    def units(self) -> list[int]:
        return [u for u in range(1, self.q) if gcd(u, self.q) == 1]


class QaryTuple(BaseModel):
    """A q-ary n-tuple."""

    model_config = ConfigDict(frozen=True)

    q: int = Field(ge=2)
    symbols: tuple[int, ...] = Field(min_length=1)

    @model_validator(mode="after")
    def check_symbols(self) -> "QaryTuple":
        """Every symbol must lie in [0, q-1]."""
        bad = [s for s in self.symbols if not 0 <= s < self.q]
        if bad:
            raise ValueError(f"symbols {bad} are outside Z_{self.q}")
        return self

    @property
    def n(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return "(" + _render(self.q, self.symbols) + ")"


class RingSequence(BaseModel):
    """One period of a periodic sequence over Z_q."""

    model_config = ConfigDict(frozen=True)

    q: int = Field(ge=2)
    symbols: tuple[int, ...] = Field(min_length=1)

    @model_validator(mode="after")
    def check_symbols(self) -> "RingSequence":
        """Every symbol must lie in [0, q-1]."""
        bad = sorted({s for s in self.symbols if not 0 <= s < self.q})
        if bad:
            raise ValueError(f"symbols {bad} are outside Z_{self.q}")
        return self

    @property
    def period(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return "[" + _render(self.q, self.symbols) + "]"


class VerificationVerdict(BaseModel):
    """Outcome of one property check."""

    kind: Property
    holds: bool
    witness: Optional[tuple[int, int]] = None  # window indices, or (run start, length) for GOOD
    detail: Optional[str] = None

    def __bool__(self) -> bool:
        return self.holds


class RunProfile(BaseModel):
    """Cyclic maximal runs of every symbol present in a sequence."""

    runs: dict[int, list[tuple[int, int]]] = Field(default_factory=dict)  # symbol -> [(start, length)]
    max_run: dict[int, int] = Field(default_factory=dict)

    def maximal_runs(self, symbol: int) -> list[tuple[int, int]]:
        """Runs of `symbol` having the longest length, by start index."""
        longest = self.max_run.get(symbol, 0)
        return [run for run in self.runs.get(symbol, []) if run[1] == longest]


class ConstructionReport(BaseModel):
    """Provenance of a generated sequence."""

    method: Method
    q: int
    n: int
    period: int
    weight_mod_q: int
    predicted_period: int
    bound: Optional[int] = None  # upper bound on the period, when one is known
    gap: Optional[int] = None
    guaranteed_period: Optional[int] = None  # theorem lower bound for lift pipelines
    deleted: list[int] = Field(default_factory=list)

    def summary_line(self) -> str:
        """`method period weight bound gap` with '-' for unknown values."""
        bound = "-" if self.bound is None else str(self.bound)
        gap = "-" if self.gap is None else str(self.gap)
        return f"{self.method.value} {self.period} {self.weight_mod_q} {bound} {gap}"


class LiftResult(BaseModel):
    """Outcome of integrating a sequence one order up."""

    input_period: int
    weight: int  # w_q of the input
    order: int  # additive order h of the weight
    start: int
    beta: int
    sequence: RingSequence
    verified: bool = False


class RecursionStep(BaseModel):
    """One stage of a lift-and-extend tower."""

    order: int
    period: int
    weight: int
    parity: Parity
    inserted: Optional[int] = None
    lift_start: Optional[int] = None
    run_index: Optional[int] = None

    def row(self) -> str:
        return f"{self.order} {self.period} {self.weight} {self.parity.value}"


class RecursionTrace(BaseModel):
    """All stages of a tower, seed first."""

    q: int
    steps: list[RecursionStep] = Field(default_factory=list)

    @property
    def final(self) -> RecursionStep:
        return self.steps[-1]


class CircuitResult(BaseModel):
    """A closed walk consuming every arc (or edge) of a graph once."""

    vertices: list[Any]
    arcs_consumed: int
    labels: list[Any] = Field(default_factory=list)  # arc labels in walk order (directed walks only)

    @property
    def closed(self) -> bool:
        return bool(self.vertices) and self.vertices[0] == self.vertices[-1]


class SearchResult(BaseModel):
    """Longest sequence found by exhaustive search."""

    q: int
    n: int
    kind: Property
    max_period: int
    witness: Optional[RingSequence] = None
    nodes_explored: int = 0
    elapsed_seconds: float = 0.0


class CheckResult(BaseModel):
    """One reproduced worked example."""

    name: str
    expected: str
    actual: str
    passed: bool

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name} {self.expected} {self.actual} {status}"
