"""
Pydantic schemas for the cofinite injection API
"""

from pydantic import BaseModel, Field
from typing import Annotated, Optional, List, Dict, Any

from models.algebra import ElementKind, GreenRelation, Side


class ErrorResponse(BaseModel):
    """Standard error response schema"""
    error: str
    message: str
    details: Optional[Dict[str, Any]] = None


class ExpressionRequest(BaseModel):
    """A single element expression"""
    expression: str = Field(..., description="Element expression, e.g. shift(1) * idem{0}")


class PairRequest(BaseModel):
    """Two element expressions"""
    left: str = Field(..., description="First element expression")
    right: str = Field(..., description="Second element expression")


class RelationRequest(PairRequest):
    relation: GreenRelation = Field(..., description="One of R, L, H, D, J")


class HClassRequest(BaseModel):
    domain_holes: List[Annotated[int, Field(ge=0)]] = Field(default_factory=list, description="Points outside the domain")
    range_holes: List[Annotated[int, Field(ge=0)]] = Field(default_factory=list, description="Points outside the range")


class SolveRequest(PairRequest):
    side: Side = Field(..., description="right solves left*X = right, left solves X*left = right")


class WindowRequest(ExpressionRequest):
    width: int = Field(..., ge=0, description="Number of rows to evaluate")


class UnitRepresentativeRequest(ExpressionRequest):
    targets: Optional[List[int]] = Field(None, description="Ordering of the range holes")


class ChainRequest(BaseModel):
    """Finite description of an omega-chain"""
    start: str = Field("id", description="Top idempotent expression")
    prefix: List[int] = Field(default_factory=list, description="Explicit first hole points")


class ChainElementRequest(BaseModel):
    chain: ChainRequest
    position: int = Field(..., ge=1, description="1-based chain position")


class EmbedRequest(BaseModel):
    members: List[str] = Field(..., min_length=1, description="Strictly descending idempotents")


class TranslateRequest(BaseModel):
    nu: str = Field(..., description="Idempotent expression")
    chain: ChainRequest = Field(default_factory=ChainRequest)
    count: int = Field(..., ge=1, description="Number of chain members to return")


class ElementResponse(BaseModel):
    element: str


class StatsResponse(BaseModel):
    element: str
    dbar: int
    rbar: int
    index: int


class ClassifyResponse(BaseModel):
    element: str
    kinds: List[ElementKind]


class BooleanResponse(BaseModel):
    result: bool


class IndexResponse(BaseModel):
    index: int


class WindowResponse(BaseModel):
    width: int
    rows: List[Optional[int]]
    text: str


class FactorizationResponse(BaseModel):
    gamma: str
    delta: str


class SeparatingIdempotentResponse(BaseModel):
    idempotent: str
    point: int


class SigmaResponse(BaseModel):
    related: bool
    witness: Optional[str] = None


class UnitRepresentativeResponse(BaseModel):
    unit: str
    idempotent: str


class SolveResponse(BaseModel):
    side: Side
    count: int
    solutions: List[str]


class GeneratorsResponse(BaseModel):
    chain: str
    p: str
    q: str
    unit: str


class ChainMembersResponse(BaseModel):
    members: List[str]


class SeparationChainResponse(GeneratorsResponse):
    lower: str
    upper: str
