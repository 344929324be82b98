"""
Chain service: omega-chains of idempotents and their bicyclic subsemigroups

A ChainSpec removes one hole point per step from dom(start): first the
explicit prefix, then every remaining point in increasing order. Because
the tail of that hole sequence is consecutive, the shift-along-the-holes
generator is an eventually-shift map and so lives in the engine.
"""

from typing import Iterator, Sequence

from loguru import logger

from models.algebra import BicyclicPair, ChainSpec, CofiniteInjection, check_table_size
from services.core_algebra import (
    IDENTITY,
    compose,
    domain_complement,
    domain_idempotent,
    idempotent_on_complement,
    invert,
    natural_leq,
    power,
    range_idempotent,
    require_idempotent,
)
from utils.config import settings
from utils.errors import HRelated, InvalidArgument, InvariantViolation, NonRepresentable, NotAChain


def iter_holes(chain: ChainSpec) -> Iterator[int]:
    """Yield the hole sequence x1, x2, ... of a chain (infinite)"""
    yield from chain.prefix
    skipped = domain_complement(chain.start) | frozenset(chain.prefix)
    n = 0
    while True:
        if n not in skipped:
            yield n
        n += 1


def hole_sequence(chain: ChainSpec, count: int) -> list[int]:
    """The first `count` hole points"""
    holes = iter_holes(chain)
    return [next(holes) for _ in range(count)]


class ChainEngine:
    """
    Engine for idempotent chains and the bicyclic generators they carry
    """

    def __init__(self, check_depth: int | None = None):
        """Initialize chain engine"""
        self.check_depth = settings.bicyclic_check_depth if check_depth is None else check_depth
        logger.info(f"ChainEngine initialized with check depth {self.check_depth}")

    def chain_element(self, chain: ChainSpec, i: int) -> CofiniteInjection:
        """epsilon_i: dom(start) minus the first i-1 holes"""
        if i < 1:
            raise InvalidArgument(f"chain positions start at 1, got {i}")
        removed = hole_sequence(chain, i - 1)
        return idempotent_on_complement(domain_complement(chain.start) | frozenset(removed))

    def covers(self, epsilon: CofiniteInjection, iota: CofiniteInjection) -> bool:
        """epsilon sits exactly one step below iota"""
        require_idempotent(epsilon, iota)
        below, above = domain_complement(epsilon), domain_complement(iota)
        return above < below and len(below - above) == 1

    def bicyclic_generators(self, chain: ChainSpec) -> BicyclicPair:
        """
        p moves each hole x_n to x_{n+1}, q = p^-1 moves it back

        Both are undefined outside dom(start); p·q is the chain start, which
        acts as identity on the pair, and q^m·p^m is the chain member
        epsilon_{m+1}.
        """
        logger.debug(f"Building bicyclic generators for {chain}")
        excluded = domain_complement(chain.start) | frozenset(chain.prefix)
        # every point from here on is a hole in increasing order
        consecutive_from = max(excluded, default=-1) + 1
        holes = hole_sequence(chain, consecutive_from - len(domain_complement(chain.start)) + 1)
        if holes[-1] != consecutive_from:
            raise NonRepresentable(f"hole sequence of {chain} is not eventually consecutive")

        threshold = check_table_size(consecutive_from)
        table: list[int | None] = [None] * threshold
        for current, following in zip(holes, holes[1:]):
            table[current] = following
        p = CofiniteInjection.canonical(table, 1)
        pair = BicyclicPair(p=p, q=invert(p), unit=chain.start)
        self._verify_pair(chain, pair)
        return pair

    def _verify_pair(self, chain: ChainSpec, pair: BicyclicPair) -> None:
        if compose(pair.p, pair.q) != pair.unit:
            raise InvariantViolation(f"p·q differs from the chain start for {chain}")
        for m in range(1, self.check_depth + 1):
            if self.bicyclic_element(pair, m, m) != self.chain_element(chain, m + 1):
                raise InvariantViolation(f"q^{m}·p^{m} is not chain member {m + 1} of {chain}")

    def bicyclic_element(self, pair: BicyclicPair, i: int, j: int) -> CofiniteInjection:
        """q^i·p^j"""
        if i < 0 or j < 0:
            raise InvalidArgument(f"bicyclic exponents must be natural, got ({i}, {j})")
        return compose(power(pair.q, i), power(pair.p, j))

    def embed_finite_chain(self, members: Sequence[CofiniteInjection]) -> tuple[ChainSpec, BicyclicPair]:
        """
        Extend a strictly descending finite chain to a maximal one

        Each gap contributes its points in increasing order to the prefix.
        """
        if not members:
            logger.warning("embed_finite_chain called with no members")
            raise NotAChain("a chain needs at least one idempotent")
        require_idempotent(*members)

        prefix: list[int] = []
        for upper, lower in zip(members, members[1:]):
            if upper == lower or not natural_leq(lower, upper):
                logger.warning(f"Chain members out of order: {lower} after {upper}")
                raise NotAChain(f"{lower} is not strictly below {upper}")
            prefix.extend(sorted(domain_complement(lower) - domain_complement(upper)))

        chain = ChainSpec(start=members[0], prefix=tuple(prefix))
        return chain, self.bicyclic_generators(chain)

    def chain_position(self, chain: ChainSpec, member: CofiniteInjection) -> int:
        """Position an idempotent would take in the chain, forced by complement size"""
        return 1 + len(domain_complement(member)) - len(domain_complement(chain.start))

    def translate_chain(self, nu: CofiniteInjection, chain: ChainSpec, count: int) -> list[CofiniteInjection]:
        """First `count` distinct members of nu·L, strictly descending"""
        logger.debug(f"Translating {chain} by {nu}, {count} members")
        require_idempotent(nu)
        if count < 1:
            raise InvalidArgument(f"count must be positive, got {count}")

        members: list[CofiniteInjection] = []
        i = 1
        while len(members) < count:
            product = compose(nu, self.chain_element(chain, i))
            if not members or product != members[-1]:
                members.append(product)
            i += 1
        return members

    def collapse_chain(
        self, nu: CofiniteInjection, chain: ChainSpec, count: int
    ) -> tuple[ChainSpec, BicyclicPair]:
        """Embed {1} + {nu} + nu·L (first `count` members) in a bicyclic subsemigroup"""
        members: list[CofiniteInjection] = [IDENTITY]
        for member in [nu, *self.translate_chain(nu, chain, count)]:
            if member != members[-1]:
                members.append(member)
        return self.embed_finite_chain(members)

    def separation_chain(
        self, alpha: CofiniteInjection, beta: CofiniteInjection
    ) -> tuple[CofiniteInjection, CofiniteInjection, ChainSpec, BicyclicPair]:
        """
        Two comparable distinct idempotents derived from non-H-related alpha, beta

        Returns (lower, upper, chain, generators) with lower < upper both in
        the chain.
        """
        first, second = domain_idempotent(alpha), domain_idempotent(beta)
        if first == second:
            first, second = range_idempotent(alpha), range_idempotent(beta)
        if first == second:
            logger.warning(f"Cannot separate H-related {alpha} and {beta}")
            raise HRelated(f"{alpha} and {beta} are H-related")

        meet = compose(first, second)
        if meet == second:
            lower, upper = second, first
        else:
            lower, upper = meet, second
        chain, pair = self.embed_finite_chain([upper, lower])
        return lower, upper, chain, pair
