"""
Green's relations router
"""

from fastapi import APIRouter
from loguru import logger

from models.schemas import (
    BooleanResponse,
    ElementResponse,
    ExpressionRequest,
    FactorizationResponse,
    HClassRequest,
    PairRequest,
    RelationRequest,
    SeparatingIdempotentResponse,
)
from services.expression import evaluate_text, format_element
from services.green_relations import GreenRelations

router = APIRouter()

# Initialize services
green_relations = GreenRelations()


@router.post("/green", response_model=BooleanResponse)
async def decide_relation(request: RelationRequest):
    """
    Decide whether two elements are related by one of Green's relations
    """
    logger.info(f"Deciding {request.relation.value} for {request.left}, {request.right}")
    result = green_relations.related(
        request.relation, evaluate_text(request.left), evaluate_text(request.right)
    )
    return BooleanResponse(result=result)


@router.post("/green/hclass", response_model=ElementResponse)
async def h_class_element(request: HClassRequest):
    """
    Canonical member of the H-class with the given complements
    """
    element = green_relations.h_class_element(request.domain_holes, request.range_holes)
    return ElementResponse(element=format_element(element))


@router.post("/green/dwitness", response_model=ElementResponse)
async def d_witness(request: PairRequest):
    """
    Element R-related to the left and L-related to the right expression
    """
    witness = green_relations.d_witness(evaluate_text(request.left), evaluate_text(request.right))
    return ElementResponse(element=format_element(witness))


@router.post("/green/factor", response_model=FactorizationResponse)
async def simple_factorization(request: PairRequest):
    """
    gamma, delta with gamma * left * delta = right
    """
    gamma, delta = green_relations.simple_factorization(
        evaluate_text(request.left), evaluate_text(request.right)
    )
    return FactorizationResponse(gamma=format_element(gamma), delta=format_element(delta))


@router.post("/green/sepidem", response_model=SeparatingIdempotentResponse)
async def separating_idempotent(request: ExpressionRequest):
    """
    Idempotent separating a non-identity unit from its H-class
    """
    epsilon, point = green_relations.separating_idempotent(evaluate_text(request.expression))
    return SeparatingIdempotentResponse(idempotent=format_element(epsilon), point=point)
