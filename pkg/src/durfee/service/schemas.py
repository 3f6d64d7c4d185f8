"""Request/response models for the HTTP service.

Exact integer counts are carried as JSON integers (arbitrary precision);
probabilities as floats plus, where underflow is possible, a string rendering
derived from the exact ratio.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

Rule = Literal["symmetric", "minwidth"]
Method = Literal["recursive_unranking", "boltzmann_rejection"]


class PartitionCountOut(BaseModel):
    n: int
    count: int
    hardy_ramanujan: str
    ratio: Optional[float] = None


class DistributionOut(BaseModel):
    n: int
    max_h: int
    total: int
    counts: list[int]
    probabilities: list[float]
    mode: int


class IntervalOut(BaseModel):
    n: int
    epsilon: float
    rule: Rule
    low: int
    high: int
    mass: float
    mode: int
    estimate: float
    estimate_display: float


class TailOut(BaseModel):
    n: int
    t: int
    probability: float
    display: str


class EstimateOut(BaseModel):
    n: int
    estimate: float
    estimate_display: float
    max_h: int


class ConcentrationOut(BaseModel):
    n: int
    epsilon: float
    mu: float
    window_low: float
    window_high: float
    mass: float


class ScholarIn(BaseModel):
    name: str = ""
    citations: int = Field(ge=0)
    h: int = Field(ge=0)
    citations_nonbook: Optional[int] = None
    h_nonbook: Optional[int] = None


class IntervalCells(BaseModel):
    low: int
    high: int
    mass: float
    rule: Rule
    epsilon: float


class AssessmentOut(BaseModel):
    name: str
    citations: int
    h: int
    estimate: float
    estimate_display: float
    interval: IntervalCells
    in_interval: bool
    anomaly: Literal["none", "below_interval", "above_interval"]
    distance: int
    ratio: Optional[float] = None
    shortfall_percent: Optional[float] = None
    hirsch_a: Optional[float] = None
    revised: Optional["AssessmentOut"] = None


class AssessRequest(BaseModel):
    scholar: ScholarIn
    epsilon: float = 0.02
    rule: Rule = "symmetric"


class ProfileIn(BaseModel):
    name: str = ""
    citations_per_paper: list[int]


class ProfileAnalyzeRequest(BaseModel):
    profiles: list[ProfileIn]
    epsilon: float = 0.02
    rule: Rule = "symmetric"


class ProfileAssessmentOut(BaseModel):
    name: str
    n_papers: int
    citations: int
    h: int
    assessment: AssessmentOut


class ProfileAnalyzeOut(BaseModel):
    profiles: list[ProfileAssessmentOut]


class CohortRequest(BaseModel):
    records: list[ScholarIn]
    epsilon: float = 0.02
    rule: Rule = "symmetric"


class CohortOut(BaseModel):
    assessments: list[AssessmentOut]
    pearson_r: Optional[float] = None
    pearson_error: Optional[str] = None
    pearson_r_nonbook: Optional[float] = None
    pearson_nonbook_error: Optional[str] = None
    scatter_points: list[tuple[float, int]]
    scatter_points_nonbook: list[tuple[float, int]]
    out_of_interval: list[str]


class SampleRequest(BaseModel):
    n: int = Field(ge=1)
    samples: int = Field(default=1000, ge=1)
    seed: int = 0
    method: Method = "recursive_unranking"
    compare_exact: bool = False


class SampleOut(BaseModel):
    n: int
    samples: int
    seed: int
    method: Method
    rng: str
    histogram: dict[int, int]
    frequencies: dict[int, float]
    tv_distance: Optional[float] = None


class ReproduceOut(BaseModel):
    target: str
    rows: list[dict]
    summary: dict
