"""
Green's relations service: decisions and constructive witnesses

R compares domains, L compares ranges, H both; the monoid is bisimple and
simple, so D and J are universal and come with explicit certificates
(d_witness and simple_factorization).
"""

from typing import Iterable, Iterator

from loguru import logger

from models.algebra import CofiniteInjection, FiniteSet, GreenRelation, check_table_size
from services.core_algebra import (
    IDENTITY,
    apply,
    complements,
    compose,
    domain_complement,
    idempotent_on_complement,
    invert,
    is_unit,
    range_complement,
)
from utils.errors import InvalidArgument, IsIdentity, NotAUnit


def _ascending_complement(points: FiniteSet) -> Iterator[int]:
    """Enumerate omega minus a finite set in increasing order"""
    n = 0
    while True:
        if n not in points:
            yield n
        n += 1


def h_class_element(domain_holes: Iterable[int], range_holes: Iterable[int]) -> CofiniteInjection:
    """
    Order-preserving bijection from omega minus domain_holes onto omega minus range_holes

    The result is the canonical member of the H-class with these complements.
    """
    holes_in = frozenset(domain_holes)
    holes_out = frozenset(range_holes)
    if any(point < 0 for point in holes_in | holes_out):
        logger.warning(f"h_class_element called with negative holes {sorted(holes_in)}, {sorted(holes_out)}")
        raise InvalidArgument(f"hole sets {sorted(holes_in)}, {sorted(holes_out)} contain a negative point")
    shift = len(holes_out) - len(holes_in)
    top_in = max(holes_in, default=-1)
    top_out = max(holes_out, default=-1)
    # past both hole sets the matching is n -> n + shift
    threshold = check_table_size(max(top_in + 1, top_out + 1 - shift, 0))

    targets = _ascending_complement(holes_out)
    table = [None if row in holes_in else next(targets) for row in range(threshold)]
    return CofiniteInjection.canonical(table, shift)


class GreenRelations:
    """
    Service deciding Green's relations and building the witnesses
    """

    def __init__(self):
        """Initialize Green's relations service"""
        logger.info("GreenRelations initialized")

    def related(self, relation: GreenRelation, alpha: CofiniteInjection, beta: CofiniteInjection) -> bool:
        """Decide alpha <relation> beta"""
        relation = GreenRelation(relation)
        if relation in (GreenRelation.D, GreenRelation.J):
            return True
        alpha_dom, alpha_ran = complements(alpha)
        beta_dom, beta_ran = complements(beta)
        if relation is GreenRelation.R:
            return alpha_dom == beta_dom
        if relation is GreenRelation.L:
            return alpha_ran == beta_ran
        return alpha_dom == beta_dom and alpha_ran == beta_ran

    def related_by_idempotents(
        self, relation: GreenRelation, alpha: CofiniteInjection, beta: CofiniteInjection
    ) -> bool:
        """Definitional test: R via alpha·alpha^-1, L via alpha^-1·alpha"""
        relation = GreenRelation(relation)
        if relation in (GreenRelation.D, GreenRelation.J):
            return True
        same_r = compose(alpha, invert(alpha)) == compose(beta, invert(beta))
        same_l = compose(invert(alpha), alpha) == compose(invert(beta), beta)
        if relation is GreenRelation.R:
            return same_r
        if relation is GreenRelation.L:
            return same_l
        return same_r and same_l

    def h_class_element(self, domain_holes: Iterable[int], range_holes: Iterable[int]) -> CofiniteInjection:
        return h_class_element(domain_holes, range_holes)

    def d_witness(self, alpha: CofiniteInjection, beta: CofiniteInjection) -> CofiniteInjection:
        """gamma with alpha R gamma L beta: dom alpha onto ran beta, ascending"""
        logger.debug(f"D-witness between {alpha} and {beta}")
        return h_class_element(domain_complement(alpha), range_complement(beta))

    def simple_factorization(
        self, alpha: CofiniteInjection, beta: CofiniteInjection
    ) -> tuple[CofiniteInjection, CofiniteInjection]:
        """
        Find gamma, delta with gamma·alpha·delta = beta

        gamma is the ascending bijection dom beta -> dom alpha and
        delta = (gamma·alpha)^-1·beta.
        """
        logger.debug(f"Factoring {beta} through {alpha}")
        gamma = h_class_element(domain_complement(beta), domain_complement(alpha))
        return gamma, self.complete_factorization(gamma, alpha, beta)

    def complete_factorization(
        self, gamma: CofiniteInjection, alpha: CofiniteInjection, beta: CofiniteInjection
    ) -> CofiniteInjection:
        """delta = (gamma·alpha)^-1·beta for any bijection gamma: dom beta -> dom alpha"""
        return compose(invert(compose(gamma, alpha)), beta)

    def separating_idempotent(self, gamma: CofiniteInjection) -> tuple[CofiniteInjection, int]:
        """
        For a unit gamma other than the identity, return (epsilon, x0)

        x0 is the least point moved by gamma and epsilon the identity on
        omega minus {x0}; epsilon and epsilon·gamma are not H-related.
        """
        if not is_unit(gamma):
            logger.warning(f"separating_idempotent called on non-unit {gamma}")
            raise NotAUnit(f"{gamma} is not a unit")
        if gamma == IDENTITY:
            logger.warning("separating_idempotent called on the identity")
            raise IsIdentity("the identity moves no point")
        moved = next(row for row in range(gamma.threshold) if apply(gamma, row) != row)
        return idempotent_on_complement({moved}), moved
