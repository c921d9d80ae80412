from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Annotated, Any, Dict, FrozenSet, List, Optional, Tuple

from pydantic import (BaseModel, Field, PlainSerializer, PlainValidator,
                      field_validator, model_validator)


def _parse_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"Not a rational value: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Not a rational value: {value!r}") from e
    raise ValueError(f"Not a rational value: {value!r}")


def format_fraction(value: Fraction) -> str:
    """Serialize a rational as "p/q" (integers keep a "/1" denominator)."""
    return f"{value.numerator}/{value.denominator}"


Rational = Annotated[Fraction,
                     PlainValidator(_parse_fraction),
                     PlainSerializer(format_fraction, return_type=str, when_used="json")]

Edge = Tuple[int, ...]


class Hypergraph(BaseModel):
    """An r-uniform hypergraph on the labelled vertex set 1..n.

    Edges are stored sorted inside and sorted lexicographically, which makes
    equality of two instances the same thing as equality of labelled graphs.
    """
    r: int = Field(ge=1)
    n: int = Field(ge=0)
    edges: Tuple[Edge, ...] = ()

    model_config = {
        "frozen": True
    }

    @model_validator(mode="before")
    @classmethod
    def _normalize_edges(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        r = data.get("r")
        n = data.get("n")
        raw_edges = data.get("edges", ())
        if not isinstance(r, int) or not isinstance(n, int):
            return data
        normalized = []
        for raw in raw_edges:
            edge = tuple(sorted(int(v) for v in raw))
            if len(edge) != r:
                raise ValueError(f"Edge {tuple(raw)} has {len(edge)} vertices, expected {r}")
            if len(set(edge)) != r:
                raise ValueError(f"Edge {tuple(raw)} repeats a vertex")
            if edge and (edge[0] < 1 or edge[-1] > n):
                raise ValueError(f"Edge {tuple(raw)} has a vertex outside 1..{n}")
            normalized.append(edge)
        normalized.sort()
        for previous, current in zip(normalized, normalized[1:]):
            if previous == current:
                raise ValueError(f"Duplicate edge {current}")
        return {**data, "edges": tuple(normalized)}

    @classmethod
    def trusted(cls, r: int, n: int, edges) -> "Hypergraph":
        """Build without validation; `edges` must already be canonical-sorted."""
        return cls.model_construct(r=r, n=n, edges=tuple(edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def __str__(self) -> str:
        body = " ".join("".join(map(str, e)) if self.n < 10 else "-".join(map(str, e))
                        for e in self.edges)
        return f"r={self.r} n={self.n} {{{body}}}"


class Embedding(BaseModel):
    """Injective map from pattern vertices to host vertices.

    Pattern vertex p is sent to ``mapping[p - 1]``.
    """
    mapping: Tuple[int, ...]

    model_config = {
        "frozen": True
    }

    @field_validator("mapping")
    @classmethod
    def _check_injective(cls, v):
        if len(set(v)) != len(v):
            raise ValueError(f"Embedding {v} is not injective")
        return v

    def image(self, edge: Edge) -> Edge:
        return tuple(sorted(self.mapping[p - 1] for p in edge))


class ForbiddenFamily(BaseModel):
    members: List[Hypergraph]
    name: Optional[str] = None

    model_config = {
        "frozen": True
    }

    @field_validator("members")
    @classmethod
    def _check_members(cls, v):
        if not v:
            raise ValueError("A forbidden family needs at least one member")
        if len({m.r for m in v}) != 1:
            raise ValueError("All members of a forbidden family must share the same uniformity")
        return v

    @property
    def r(self) -> int:
        return self.members[0].r

    def label(self) -> str:
        return self.name or "{" + ",".join(str(m) for m in self.members) + "}"


class WeightVector(BaseModel):
    """A point of the standard simplex."""
    weights: Tuple[float, ...]

    model_config = {
        "frozen": True
    }

    @field_validator("weights")
    @classmethod
    def _check_simplex(cls, v):
        # pylint: disable=import-outside-toplevel
        from .utils.config import WEIGHT_SUM_TOL
        if any(w < 0 or w > 1 for w in v):
            raise ValueError("Weights must lie in [0, 1]")
        if v and abs(sum(v) - 1.0) > WEIGHT_SUM_TOL * max(1, len(v)):
            raise ValueError(f"Weights sum to {sum(v)!r}, not 1")
        return v

    def support(self) -> Tuple[int, ...]:
        return tuple(i + 1 for i, w in enumerate(self.weights) if w > 0)


class SolverMethod(str, Enum):
    ASCENT = "ascent"
    SUPPORT_ENUM = "support-enum"
    MOTZKIN_STRAUS = "motzkin-straus"
    CLOSED_FORM = "closed-form"


class SolverOptions(BaseModel):
    tol: Optional[float] = None
    starts: Optional[int] = None
    seed: int = 0
    support_enum_threshold: Optional[int] = None
    use_support_enum: bool = True
    use_exact_oracle: bool = True
    max_iters: Optional[int] = None
    jobs: int = 1

    def __init__(self, **data):
        # pylint: disable=import-outside-toplevel
        from .utils.config import (STATIONARITY_TOL, SUPPORT_ENUM_THRESHOLD,
                                   MAX_ASCENT_ITERS)
        if data.get('tol') is None:
            data['tol'] = STATIONARITY_TOL
        if data.get('support_enum_threshold') is None:
            data['support_enum_threshold'] = SUPPORT_ENUM_THRESHOLD
        if data.get('max_iters') is None:
            data['max_iters'] = MAX_ASCENT_ITERS
        super().__init__(**data)

    def starts_for(self, n: int) -> int:
        # pylint: disable=import-outside-toplevel
        from .utils.config import STARTS_PER_VERTEX
        return self.starts if self.starts is not None else STARTS_PER_VERTEX * max(n, 1)


class LagrangianCertificate(BaseModel):
    value: float
    weights: WeightVector
    support: Tuple[int, ...]
    kkt_residual: float = Field(ge=0)
    method: SolverMethod
    starts_used: int = 0
    seed: int = 0
    converged: bool = True
    exact: Optional[Rational] = None
    exact_weights: Optional[List[Rational]] = None


class KnownValue(BaseModel):
    name: str
    params: Tuple[int, ...] = ()
    value: Rational
    citation: str


class SearchReport(BaseModel):
    schema_version: str
    n: int
    r: int
    family: str
    seed: int
    enumerated: int
    free_count: int
    maximal_free_count: int
    reduction_factor: float
    max_value: float
    max_value_scaled: float
    max_exact: Optional[Rational] = None
    achievers: List[Hypergraph] = []
    bound: Optional[Rational] = None
    bound_pass: Optional[bool] = None
    turan_number: Optional[int] = None
    wall_time: Optional[float] = None


class LedgerStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class CheckKind(str, Enum):
    CLOSED_FORM = "closed-form identity"
    GRID = "grid inequality"
    SEARCH = "search bound"
    STRUCTURAL = "structural"


class LedgerEntry(BaseModel):
    id: str
    citation: str
    kind: CheckKind
    parameters: Dict[str, Any] = {}
    status: LedgerStatus
    detail: str = ""
    witness: Optional[Any] = None

    @model_validator(mode="after")
    def _failures_carry_witness(self):
        if self.status is LedgerStatus.FAIL and self.witness is None:
            raise ValueError(f"Failed ledger entry {self.id} must carry a witness")
        return self


class SuiteLevel(str, Enum):
    QUICK = "quick"
    FULL = "full"


class RunConfig(BaseModel):
    command: str
    seed: int = Field(default=0, ge=0, lt=2 ** 64)
    jobs: int = Field(default=1, ge=1)
    tol: Optional[float] = Field(default=None, gt=0)
    out: Optional[str] = None
    json_out: Optional[str] = None
    csv_out: Optional[str] = None
    force: bool = False

    model_config = {
        "extra": "forbid"
    }


def all_r_subsets(n: int, r: int) -> List[Edge]:
    """Every r-subset of 1..n in lexicographic order."""
    return list(combinations(range(1, n + 1), r))
