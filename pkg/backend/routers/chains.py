"""
Chain router: omega-chains of idempotents and bicyclic generators
"""

from fastapi import APIRouter
from loguru import logger

from models.algebra import BicyclicPair, ChainSpec
from models.schemas import (
    ChainElementRequest,
    ChainMembersResponse,
    ChainRequest,
    ElementResponse,
    EmbedRequest,
    GeneratorsResponse,
    PairRequest,
    SeparationChainResponse,
    TranslateRequest,
)
from services.chains import ChainEngine
from services.expression import evaluate_text, format_element

router = APIRouter()

# Initialize services
chain_engine = ChainEngine()


def to_chain(request: ChainRequest) -> ChainSpec:
    return ChainSpec(start=evaluate_text(request.start), prefix=tuple(request.prefix))


def generators_response(chain: ChainSpec, pair: BicyclicPair) -> GeneratorsResponse:
    return GeneratorsResponse(
        chain=chain.to_text(),
        p=format_element(pair.p),
        q=format_element(pair.q),
        unit=format_element(pair.unit),
    )


@router.post("/chain/generators", response_model=GeneratorsResponse)
async def bicyclic_generators(request: ChainRequest):
    """
    Generators p, q of the bicyclic subsemigroup carried by a chain
    """
    chain = to_chain(request)
    logger.info(f"Building generators for {chain}")
    return generators_response(chain, chain_engine.bicyclic_generators(chain))


@router.post("/chain/element", response_model=ElementResponse)
async def chain_element(request: ChainElementRequest):
    element = chain_engine.chain_element(to_chain(request.chain), request.position)
    return ElementResponse(element=format_element(element))


@router.post("/chain/embed", response_model=GeneratorsResponse)
async def embed_finite_chain(request: EmbedRequest):
    """
    Extend a finite descending chain of idempotents to a maximal one
    """
    chain, pair = chain_engine.embed_finite_chain([evaluate_text(member) for member in request.members])
    return generators_response(chain, pair)


@router.post("/chain/translate", response_model=ChainMembersResponse)
async def translate_chain(request: TranslateRequest):
    members = chain_engine.translate_chain(evaluate_text(request.nu), to_chain(request.chain), request.count)
    return ChainMembersResponse(members=[format_element(member) for member in members])


@router.post("/chain/collapse", response_model=GeneratorsResponse)
async def collapse_chain(request: TranslateRequest):
    """
    Embed the identity, nu and nu times the chain in one bicyclic subsemigroup
    """
    chain, pair = chain_engine.collapse_chain(evaluate_text(request.nu), to_chain(request.chain), request.count)
    return generators_response(chain, pair)


@router.post("/chain/separate", response_model=SeparationChainResponse)
async def separation_chain(request: PairRequest):
    """
    Comparable idempotents derived from two non-H-related elements, with their chain
    """
    lower, upper, chain, pair = chain_engine.separation_chain(
        evaluate_text(request.left), evaluate_text(request.right)
    )
    base = generators_response(chain, pair)
    return SeparationChainResponse(
        **base.model_dump(),
        lower=format_element(lower),
        upper=format_element(upper),
    )
