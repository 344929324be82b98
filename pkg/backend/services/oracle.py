"""
Brute-force oracle used to cross-check the symbolic engine

Works pointwise on finite windows and by exhaustive enumeration. It shares
only the element value type and `apply` with the engine; compose is
imported solely as the subject of compose_check.
"""

from math import comb, factorial
from typing import Optional

from loguru import logger

from models.algebra import CofiniteInjection, FiniteSet, Side, WindowTable
from services.core_algebra import apply, compose
from utils.config import settings
from utils.errors import AlgebraError, BoundExceeded, WindowTooSmall

PartialInjection = dict[int, int]


def partial_injection_count(a: int, b: int) -> int:
    """Number of partial injections from an a-set into a b-set"""
    return sum(comb(a, j) * comb(b, j) * factorial(j) for j in range(min(a, b) + 1))


def _window_holes(alpha: CofiniteInjection) -> tuple[set[int], set[int]]:
    """Domain and range complements recomputed pointwise"""
    bound = alpha.threshold + abs(alpha.shift) + 1
    images = {apply(alpha, n) for n in range(bound)}
    domain_holes = {n for n in range(bound) if apply(alpha, n) is None}
    range_holes = {v for v in range(alpha.threshold + alpha.shift) if v not in images}
    return domain_holes, range_holes


def _transpose(alpha: CofiniteInjection) -> CofiniteInjection:
    """Inverse partial map rebuilt from a window"""
    tail = alpha.threshold + alpha.shift
    rows: list[Optional[int]] = [None] * tail
    for n in range(alpha.threshold):
        value = apply(alpha, n)
        if value is not None:
            rows[value] = n
    return CofiniteInjection.from_raw(rows, tail, -alpha.shift)


class BruteForceOracle:
    """
    Independent semantics for differential testing
    """

    def __init__(self, bound: int | None = None):
        """Initialize oracle with its complement-size bound"""
        self.bound = settings.brute_force_bound if bound is None else bound
        logger.info(f"BruteForceOracle initialized with bound {self.bound}")

    def window_eval(self, alpha: CofiniteInjection, width: int) -> WindowTable:
        return WindowTable(width=width, rows=tuple(apply(alpha, n) for n in range(width)))

    def sufficient_width(
        self, alpha: CofiniteInjection, beta: CofiniteInjection, composite: CofiniteInjection
    ) -> int:
        """Every threshold involved plus the total absolute shift plus one"""
        return max(alpha.threshold, beta.threshold, composite.threshold) + abs(alpha.shift) + abs(beta.shift) + 1

    def compose_check(
        self,
        alpha: CofiniteInjection,
        beta: CofiniteInjection,
        width: int,
        composite: Optional[CofiniteInjection] = None,
    ) -> bool:
        """
        compose(alpha, beta) (or the given composite) agrees on [0, width)
        with applying alpha, then beta, pointwise
        """
        if composite is None:
            composite = compose(alpha, beta)
        needed = self.sufficient_width(alpha, beta, composite)
        if width < needed:
            logger.warning(f"Window {width} too small for {alpha}, {beta}")
            raise WindowTooSmall(f"window {width} is below the sufficient width {needed}")

        left = self.window_eval(alpha, width)
        # alpha's window values stay below width + |shift|
        right = self.window_eval(beta, width + abs(alpha.shift) + 1)
        expected = self.window_eval(composite, width)
        for n in range(width):
            value = left.rows[n]
            pointwise = None if value is None else right.rows[value]
            if pointwise != expected.rows[n]:
                logger.warning(f"Pointwise mismatch at {n}: expected {pointwise}, got {expected.rows[n]}")
                return False
        return composite.shift == alpha.shift + beta.shift

    def enumerate_partial_injections(self, sources: FiniteSet, targets: FiniteSet) -> list[PartialInjection]:
        """Every partial injection sources -> targets, the empty map included"""
        points = sorted(sources)
        available = sorted(targets)
        found: list[PartialInjection] = []

        def extend(index: int, current: PartialInjection) -> None:
            if index == len(points):
                found.append(dict(current))
                return
            extend(index + 1, current)
            used = set(current.values())
            for target in available:
                if target not in used:
                    current[points[index]] = target
                    extend(index + 1, current)
                    del current[points[index]]

        extend(0, {})
        found.sort(key=lambda mapping: (len(mapping), sorted(mapping.items())))
        return found

    def solves(self, alpha: CofiniteInjection, chi: CofiniteInjection, beta: CofiniteInjection) -> bool:
        """Pointwise check of alpha·chi = beta, exact thanks to the affine tails"""
        if alpha.shift + chi.shift != beta.shift:
            return False
        width = max(alpha.threshold, beta.threshold, chi.threshold - alpha.shift, 0) + 1
        for n in range(width):
            value = apply(alpha, n)
            if (None if value is None else apply(chi, value)) != apply(beta, n):
                return False
        return True

    def brute_force_solutions(
        self, side: Side, alpha: CofiniteInjection, beta: CofiniteInjection
    ) -> list[CofiniteInjection]:
        """All chi with alpha·chi = beta (right) or chi·alpha = beta (left), by enumeration"""
        side = Side(side)
        for element in (alpha, beta):
            domain_holes, range_holes = _window_holes(element)
            if max(len(domain_holes), len(range_holes)) > self.bound:
                logger.warning(f"{element} exceeds the oracle bound {self.bound}")
                raise BoundExceeded(f"{element} has complements beyond the oracle bound {self.bound}")

        logger.debug(f"Brute-forcing {side.value} solutions for {alpha}, {beta}")
        if side is Side.LEFT:
            found = [_transpose(chi) for chi in self._right_solutions(_transpose(alpha), _transpose(beta))]
        else:
            found = self._right_solutions(alpha, beta)
        return sorted(set(found), key=lambda chi: chi.to_text())

    def _right_solutions(self, alpha: CofiniteInjection, beta: CofiniteInjection) -> list[CofiniteInjection]:
        shift = beta.shift - alpha.shift
        # chi runs on its tail once alpha's and beta's tails line up
        threshold = max(alpha.threshold + alpha.shift, beta.threshold + alpha.shift, 0)
        preimage = {}
        for n in range(threshold - alpha.shift + alpha.threshold + 1):
            value = apply(alpha, n)
            if value is not None:
                preimage[value] = n

        forced: list[Optional[int]] = []
        free_rows = []
        for y in range(threshold):
            if y in preimage:
                forced.append(apply(beta, preimage[y]))
            else:
                forced.append(None)
                free_rows.append(y)

        taken = {value for value in forced if value is not None}
        candidates = {v for v in range(threshold + shift) if v not in taken}
        solutions = []
        for extra in self.enumerate_partial_injections(frozenset(free_rows), frozenset(candidates)):
            rows = list(forced)
            for row, value in extra.items():
                rows[row] = value
            try:
                chi = CofiniteInjection.from_raw(rows, threshold, shift)
            except AlgebraError:
                continue
            if self.solves(alpha, chi, beta):
                solutions.append(chi)
        return solutions
