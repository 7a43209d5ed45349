"""Core type definitions shared across Cramer."""

from enum import Enum
from typing import Any, Literal

from pydantic import BaseModel


class OmegaMode(str, Enum):
    """Whether the ideal carries the extra coordinate omega."""

    WITH_OMEGA = "with-omega"
    OMEGA_LESS = "omega-less"


class Stratum(str, Enum):
    """Boundary strata of the orbit closure."""

    OPEN_ORBIT = "OpenOrbit"
    DIVISOR_V1 = "Divisor_V1"
    CASE1_DEEP = "Case1Deep"  # rank M = r, omega = 0, rank N <= s - 2
    CASE2 = "Case2"
    CASE3 = "Case3"
    OFF_VARIETY = "OffVariety"


CheckStatus = Literal["pass", "fail", "inconclusive", "skipped"]


class CheckResult(BaseModel):
    """Outcome of a single verification check."""

    name: str
    status: CheckStatus
    detail: str = ""
    witness: dict[str, Any] | None = None

    @property
    def failed(self) -> bool:
        return self.status == "fail"


class VerifyReport(BaseModel):
    """Report written by ``cramer verify``."""

    suite: str
    r: int
    s: int
    omega_mode: OmegaMode
    seed: int
    samples: int
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return not any(c.failed for c in self.checks)


class PairStatus(BaseModel):
    """Transition status for one ordered pair of pivot subsets (1-based)."""

    source: list[int]
    target: list[int]
    status: Literal["pass", "fail", "inconclusive"]
    transition: str | None = None  # (M_source / M_target)^s at the witness, as p/q
    witness: dict[str, Any] | None = None


class CartierReport(BaseModel):
    r: int
    s: int
    samples: int
    pairs: list[PairStatus]

    @property
    def passed(self) -> bool:
        return all(p.status != "fail" for p in self.pairs)

    @property
    def inconclusive(self) -> list[PairStatus]:
        return [p for p in self.pairs if p.status == "inconclusive"]


class SearchOutcome(BaseModel):
    """Result of a coordinate-map search."""

    found: bool
    nodes: int
    budget: int
    seed: int
    maps: list[dict[str, dict[str, Any]]] = []
    log: list[str] = []


class OgrReport(BaseModel):
    """Report written by ``cramer ogr``."""

    cramer_terms: list[int]
    spinor_terms: list[int]
    spinor_convention: str
    cramer_span_rank: int
    spinor_span_rank: int
    map_source: Literal["committed", "search", "none"]
    identical_spans: bool | None = None
    cross_membership: CheckResult | None = None
    search: SearchOutcome | None = None

    @property
    def passed(self) -> bool:
        if any(n != 4 for n in self.cramer_terms + self.spinor_terms):
            return False
        if self.identical_spans is False:
            return False
        return self.cross_membership is None or not self.cross_membership.failed


class ExportTerm(BaseModel):
    coeff: str  # "p/q"
    exponents: list[int]


class ExportGenerator(BaseModel):
    label: str
    terms: list[ExportTerm]


class IdealExport(BaseModel):
    """JSON form of a generated ideal, written by ``cramer ideal``."""

    r: int
    s: int
    omega_mode: OmegaMode
    variables: list[str]
    generators: list[ExportGenerator]
