"""Request and response models for the HTTP service.

Wire conventions: permutations travel as their text form (compact digits
for n <= 9, comma separated above), pile configurations as
{"n": int, "piles": [[bottom..top], ...]}, pairs as {"R": ..., "S": ...},
and all positions and values are 1-based.
"""

from __future__ import annotations

from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class PermIn(BaseModel):
    perm: str


class PermOut(BaseModel):
    perm: str


class PatternQuery(BaseModel):
    perm: str
    pattern: str


class PileConfigModel(BaseModel):
    n: int
    piles: list[list[int]]


class PairModel(BaseModel):
    R: PileConfigModel
    S: PileConfigModel


class ShadowOut(BaseModel):
    lines: list[list[list[int]]]


class ClassOut(BaseModel):
    perms: list[str]


class AvoidOut(BaseModel):
    avoids: bool


class OccurrencesOut(BaseModel):
    occurrences: list[list[int]]


class CountReportModel(BaseModel):
    n: int
    label: str
    value: int


class EnumerateIn(BaseModel):
    what: Literal["configs", "noncrossing", "stable-pairs", "avoiders"]
    n: int
    pattern: Optional[str] = None


class EnumerateOut(BaseModel):
    items: Optional[list[dict[str, Any]]] = None
    report: Optional[CountReportModel] = None


class VerifyIn(BaseModel):
    max_n: int = 5


class CheckResultModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    label: str
    max_n: int
    passed: bool = Field(alias="pass")
    detail: str


class VerifyOut(BaseModel):
    results: list[CheckResultModel]
    ok: bool
