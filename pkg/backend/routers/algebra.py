"""
Algebra router: evaluation, statistics and classification of elements
"""

from fastapi import APIRouter
from loguru import logger

from models.schemas import (
    BooleanResponse,
    ClassifyResponse,
    ElementResponse,
    ExpressionRequest,
    PairRequest,
    StatsResponse,
    WindowRequest,
    WindowResponse,
)
from services.core_algebra import classify, natural_leq, stats
from services.expression import evaluate_text, format_element
from services.oracle import BruteForceOracle

router = APIRouter()

# Initialize services
oracle = BruteForceOracle()


@router.post("/eval", response_model=ElementResponse)
async def evaluate_expression(request: ExpressionRequest):
    """
    Evaluate an expression to its canonical normal form
    """
    logger.info(f"Evaluating {request.expression}")
    return ElementResponse(element=format_element(evaluate_text(request.expression)))


@router.post("/stats", response_model=StatsResponse)
async def element_stats(request: ExpressionRequest):
    """
    Domain and range complement sizes and the index of an element
    """
    element = evaluate_text(request.expression)
    result = stats(element)
    return StatsResponse(
        element=format_element(element),
        dbar=result.dbar,
        rbar=result.rbar,
        index=result.index,
    )


@router.post("/classify", response_model=ClassifyResponse)
async def classify_element(request: ExpressionRequest):
    element = evaluate_text(request.expression)
    kinds = sorted(classify(element), key=lambda kind: kind.value)
    return ClassifyResponse(element=format_element(element), kinds=kinds)


@router.post("/leq", response_model=BooleanResponse)
async def natural_order(request: PairRequest):
    """
    Natural partial order on idempotents: left <= right
    """
    return BooleanResponse(result=natural_leq(evaluate_text(request.left), evaluate_text(request.right)))


@router.post("/window", response_model=WindowResponse)
async def window(request: WindowRequest):
    """
    Pointwise values of an element on [0, width)
    """
    table = oracle.window_eval(evaluate_text(request.expression), request.width)
    return WindowResponse(width=table.width, rows=list(table.rows), text=table.to_text())
