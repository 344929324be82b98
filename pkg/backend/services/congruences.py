"""
Congruence service: the index homomorphism onto the integers, the index
congruence, the least group congruence with explicit witnesses, unit
representatives and solution sets of translation equations
"""

from itertools import combinations, permutations
from typing import Optional, Sequence

from loguru import logger

from models.algebra import CofiniteInjection, Side
from services.core_algebra import (
    complements,
    compose,
    domain_complement,
    extend,
    idempotent_on_complement,
    invert,
    is_idempotent,
    range_complement,
    stats,
)
from utils.errors import IndexNonzero, InvalidArgument, InvariantViolation


class CongruenceEngine:
    """
    Engine for the group congruences of the monoid
    """

    def __init__(self):
        """Initialize congruence engine"""
        logger.info("CongruenceEngine initialized")

    def index_hom(self, alpha: CofiniteInjection) -> int:
        """dbar(alpha) - rbar(alpha); additive under composition"""
        return stats(alpha).index

    def d_equiv(self, alpha: CofiniteInjection, beta: CofiniteInjection) -> bool:
        return self.index_hom(alpha) == self.index_hom(beta)

    def sigma_witness_threshold(self, alpha: CofiniteInjection, beta: CofiniteInjection) -> int:
        """Least M at which both elements run on their tails, shifted past positive tails"""
        return max(alpha.threshold, beta.threshold) + max(0, alpha.shift, beta.shift)

    def sigma_related(self, alpha: CofiniteInjection, beta: CofiniteInjection) -> Optional[CofiniteInjection]:
        """
        Return an idempotent epsilon with alpha·epsilon = beta·epsilon, or None

        epsilon is the identity on [M, inf). The witness path does not look
        at indices; its verdict is then cross-checked against d_equiv.
        """
        bound = self.sigma_witness_threshold(alpha, beta)
        epsilon = idempotent_on_complement(range(bound))
        related = compose(alpha, epsilon) == compose(beta, epsilon)

        if related != self.d_equiv(alpha, beta):
            logger.error(f"sigma witness and index disagree on {alpha}, {beta}")
            raise InvariantViolation(
                f"sigma witness path says {related} but index path says {not related}"
            )
        return epsilon if related else None

    def unit_representative(
        self, beta: CofiniteInjection, targets: Optional[Sequence[int]] = None
    ) -> tuple[CofiniteInjection, CofiniteInjection]:
        """
        Extend beta to a unit alpha with alpha·epsilon = beta·epsilon

        The domain holes x1 < ... < xk of beta are sent to the range holes,
        ascending unless `targets` gives another ordering of them; epsilon is
        the identity on ran beta.
        """
        logger.debug(f"Building unit representative for {beta}")
        result = stats(beta)
        if result.dbar != result.rbar:
            logger.warning(f"No unit representative for {beta}: index {result.index}")
            raise IndexNonzero(f"dbar={result.dbar} and rbar={result.rbar} differ for {beta}")

        domain_holes, range_holes = complements(beta)
        if targets is None:
            targets = sorted(range_holes)
        elif sorted(targets) != sorted(range_holes) or len(set(targets)) != len(targets):
            raise InvalidArgument(f"targets {list(targets)} are not an ordering of {sorted(range_holes)}")

        alpha = extend(beta, dict(zip(sorted(domain_holes), targets)))
        epsilon = idempotent_on_complement(range_holes)
        if compose(alpha, epsilon) != compose(beta, epsilon):
            raise InvariantViolation(f"unit representative of {beta} does not agree on its range")
        return alpha, epsilon

    def solve_translation(
        self, side: Side, alpha: CofiniteInjection, beta: CofiniteInjection
    ) -> list[CofiniteInjection]:
        """
        All chi with alpha·chi = beta (right) or chi·alpha = beta (left)

        The list is free of repeats and sorted by canonical text.
        """
        side = Side(side)
        logger.debug(f"Solving {side.value} translation equation for {alpha}, {beta}")
        if side is Side.LEFT:
            solutions = [invert(chi) for chi in self._solve_right(invert(alpha), invert(beta))]
        else:
            solutions = self._solve_right(alpha, beta)
        return sorted(set(solutions), key=lambda chi: chi.to_text())

    def _solve_right(self, alpha: CofiniteInjection, beta: CofiniteInjection) -> list[CofiniteInjection]:
        if not domain_complement(alpha) <= domain_complement(beta):
            # some point of dom beta is missing from dom alpha
            return []

        forced = compose(invert(alpha), beta)
        free_points = sorted(range_complement(alpha))
        free_targets = sorted(range_complement(forced))

        solutions = []
        for size in range(min(len(free_points), len(free_targets)) + 1):
            for rows in combinations(free_points, size):
                for values in permutations(free_targets, size):
                    chi = extend(forced, dict(zip(rows, values)))
                    if compose(alpha, chi) != beta:
                        raise InvariantViolation(f"{chi} does not solve the equation")
                    solutions.append(chi)
        return solutions


def is_group_congruence_witness(
    alpha: CofiniteInjection, beta: CofiniteInjection, epsilon: CofiniteInjection
) -> bool:
    """epsilon is idempotent and identifies alpha with beta"""
    return is_idempotent(epsilon) and compose(alpha, epsilon) == compose(beta, epsilon)

