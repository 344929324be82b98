"""
Inverse-monoid operations on the eventually-shift normal form

Composition is left to right: compose(a, b) applies a first, then b.
All functions are pure; values are immutable and safe to share.
"""

from typing import Iterable, Mapping, Optional, Sequence

from loguru import logger

from models.algebra import (
    CofiniteInjection,
    ElementKind,
    FiniteSet,
    Stats,
    check_magnitude,
    check_table_size,
)
from utils.errors import InvalidArgument, NotAUnit, NotIdempotent

IDENTITY = CofiniteInjection()


def normalize(table: Sequence[Optional[int]], threshold: int, shift: int) -> CofiniteInjection:
    """
    Return the unique minimal-threshold normal form of a raw description

    Raises InjectivityViolation, TailCollision or NegativeTail for tables
    that do not describe an injective map with cofinite domain and range.
    """
    return CofiniteInjection.from_raw(table, threshold, shift)


def apply(alpha: CofiniteInjection, n: int) -> Optional[int]:
    """Value of alpha at n, or None when n is outside the domain"""
    if n < 0:
        raise InvalidArgument(f"cannot apply to negative point {n}")
    if n < alpha.threshold:
        return alpha.table[n]
    return n + alpha.shift


def compose(alpha: CofiniteInjection, beta: CofiniteInjection) -> CofiniteInjection:
    """Left-to-right composite: x(alpha·beta) = (x alpha) beta"""
    shift = check_magnitude(alpha.shift + beta.shift, "shift")
    # past this row, alpha runs on its tail and lands on beta's tail
    threshold = check_table_size(max(alpha.threshold, beta.threshold - alpha.shift, 0))
    table = []
    for n in range(threshold):
        value = apply(alpha, n)
        table.append(None if value is None else apply(beta, value))
    return CofiniteInjection.canonical(table, shift)


def invert(alpha: CofiniteInjection) -> CofiniteInjection:
    """Inverse partial map; its shift is the negated shift"""
    threshold = check_table_size(alpha.tail_start)
    table: list[Optional[int]] = [None] * threshold
    for row, value in enumerate(alpha.table):
        if value is not None:
            table[value] = row
    return CofiniteInjection.canonical(table, -alpha.shift)


def power(alpha: CofiniteInjection, exponent: int) -> CofiniteInjection:
    """alpha^n by repeated squaring; negative exponents use the inverse"""
    base = alpha if exponent >= 0 else invert(alpha)
    remaining = abs(exponent)
    result = IDENTITY
    while remaining:
        if remaining & 1:
            result = compose(result, base)
        remaining >>= 1
        if remaining:
            base = compose(base, base)
    return result


def domain_complement(alpha: CofiniteInjection) -> FiniteSet:
    return frozenset(row for row, value in enumerate(alpha.table) if value is None)


def range_complement(alpha: CofiniteInjection) -> FiniteSet:
    values = {value for value in alpha.table if value is not None}
    return frozenset(v for v in range(alpha.tail_start) if v not in values)


def complements(alpha: CofiniteInjection) -> tuple[FiniteSet, FiniteSet]:
    """(omega minus dom alpha, omega minus ran alpha)"""
    return domain_complement(alpha), range_complement(alpha)


def stats(alpha: CofiniteInjection) -> Stats:
    defined = alpha.defined_rows
    dbar = alpha.threshold - defined
    rbar = alpha.tail_start - defined
    return Stats(dbar=dbar, rbar=rbar, index=dbar - rbar)


def is_idempotent(alpha: CofiniteInjection) -> bool:
    """An element is idempotent iff it fixes every point of its domain"""
    return alpha.shift == 0 and all(
        value is None or value == row for row, value in enumerate(alpha.table)
    )


def require_idempotent(*elements: CofiniteInjection) -> None:
    for element in elements:
        if not is_idempotent(element):
            logger.warning(f"Expected an idempotent, got {element}")
            raise NotIdempotent(f"{element} is not an idempotent")


def idempotent_on_complement(points: Iterable[int]) -> CofiniteInjection:
    """Identity map on omega minus a finite set"""
    holes = frozenset(points)
    if any(point < 0 for point in holes):
        raise InvalidArgument(f"complement {sorted(holes)} contains a negative point")
    threshold = check_table_size(max(holes) + 1 if holes else 0)
    table = [None if row in holes else row for row in range(threshold)]
    return CofiniteInjection.canonical(table, 0)


def domain_idempotent(alpha: CofiniteInjection) -> CofiniteInjection:
    """alpha·alpha^-1, the identity on dom alpha"""
    return idempotent_on_complement(domain_complement(alpha))


def range_idempotent(alpha: CofiniteInjection) -> CofiniteInjection:
    """alpha^-1·alpha, the identity on ran alpha"""
    return idempotent_on_complement(range_complement(alpha))


def natural_leq(epsilon: CofiniteInjection, iota: CofiniteInjection) -> bool:
    """epsilon <= iota for idempotents, i.e. dom epsilon is inside dom iota"""
    require_idempotent(epsilon, iota)
    return domain_complement(iota) <= domain_complement(epsilon)


def is_unit(alpha: CofiniteInjection) -> bool:
    result = stats(alpha)
    return result.dbar == 0 and result.rbar == 0


def classify(alpha: CofiniteInjection) -> frozenset[ElementKind]:
    kinds = set()
    if is_unit(alpha):
        # units of the fragment have shift 0 and a permutation table
        kinds.update({ElementKind.UNIT, ElementKind.FINITARY_UNIT})
    if is_idempotent(alpha):
        kinds.add(ElementKind.IDEMPOTENT)
    if not kinds:
        kinds.add(ElementKind.GENERAL)
    return frozenset(kinds)


def support(alpha: CofiniteInjection) -> FiniteSet:
    """Points moved by a unit"""
    if not is_unit(alpha):
        logger.warning(f"support called on non-unit {alpha}")
        raise NotAUnit(f"{alpha} is not a unit")
    return frozenset(row for row, value in enumerate(alpha.table) if value != row)


def shift_by(k: int) -> CofiniteInjection:
    """n -> n + k; for k < 0 the points below |k| are dropped"""
    check_magnitude(k, "shift")
    if k >= 0:
        return CofiniteInjection.canonical((), k)
    return CofiniteInjection.canonical([None] * check_table_size(-k), k)


def permutation(cycles: Iterable[Sequence[int]]) -> CofiniteInjection:
    """Finitary unit from disjoint cycles, (a b c) meaning a->b->c->a"""
    mapping: dict[int, int] = {}
    for cycle in cycles:
        for position, point in enumerate(cycle):
            if point < 0:
                raise InvalidArgument(f"cycle point {point} is negative")
            if point in mapping:
                raise InvalidArgument(f"point {point} appears in more than one cycle position")
            mapping[point] = cycle[(position + 1) % len(cycle)]
    threshold = max(mapping) + 1 if mapping else 0
    return normalize([mapping.get(row, row) for row in range(threshold)], threshold, 0)


def extend(alpha: CofiniteInjection, rows: Mapping[int, int]) -> CofiniteInjection:
    """Add rows on points outside dom alpha, with values outside ran alpha"""
    table = list(alpha.table)
    for row, value in rows.items():
        if row >= alpha.threshold or table[row] is not None:
            raise InvalidArgument(f"row {row} is already in the domain of {alpha}")
        table[row] = value
    return normalize(table, alpha.threshold, alpha.shift)
