"""
Congruence router: index homomorphism, index congruence, sigma, unit
representatives and translation equations
"""

from fastapi import APIRouter
from loguru import logger

from models.schemas import (
    BooleanResponse,
    ExpressionRequest,
    IndexResponse,
    PairRequest,
    SigmaResponse,
    SolveRequest,
    SolveResponse,
    UnitRepresentativeRequest,
    UnitRepresentativeResponse,
)
from services.congruences import CongruenceEngine
from services.expression import evaluate_text, format_element

router = APIRouter()

# Initialize services
congruence_engine = CongruenceEngine()


@router.post("/index", response_model=IndexResponse)
async def index_hom(request: ExpressionRequest):
    return IndexResponse(index=congruence_engine.index_hom(evaluate_text(request.expression)))


@router.post("/dequiv", response_model=BooleanResponse)
async def d_equiv(request: PairRequest):
    return BooleanResponse(
        result=congruence_engine.d_equiv(evaluate_text(request.left), evaluate_text(request.right))
    )


@router.post("/sigma", response_model=SigmaResponse)
async def sigma_related(request: PairRequest):
    """
    Witness idempotent for the least group congruence, if the elements are related
    """
    witness = congruence_engine.sigma_related(evaluate_text(request.left), evaluate_text(request.right))
    if witness is None:
        return SigmaResponse(related=False)
    return SigmaResponse(related=True, witness=format_element(witness))


@router.post("/unitrep", response_model=UnitRepresentativeResponse)
async def unit_representative(request: UnitRepresentativeRequest):
    """
    Unit sigma-related to an index-zero element
    """
    unit, epsilon = congruence_engine.unit_representative(
        evaluate_text(request.expression), request.targets
    )
    return UnitRepresentativeResponse(unit=format_element(unit), idempotent=format_element(epsilon))


@router.post("/solve", response_model=SolveResponse)
async def solve_translation(request: SolveRequest):
    """
    All solutions of a translation equation
    """
    logger.info(f"Solving {request.side.value} equation for {request.left}, {request.right}")
    solutions = congruence_engine.solve_translation(
        request.side, evaluate_text(request.left), evaluate_text(request.right)
    )
    return SolveResponse(
        side=request.side,
        count=len(solutions),
        solutions=[format_element(chi) for chi in solutions],
    )
