"""
Domain value types for injective partial cofinite selfmaps of the naturals

Every element is held in its eventually-shift normal form: a finite exception
table on the rows 0..N-1 followed by the tail rule n -> n + k.
"""

from enum import Enum
from typing import Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator

from utils.config import settings
from utils.errors import (
    ArithmeticOverflow,
    InjectivityViolation,
    InvalidArgument,
    NegativeTail,
    NonCanonical,
    NotIdempotent,
    TailCollision,
)

# Finite set of naturals: complements of domains and ranges, semilattice image
FiniteSet = frozenset[int]

UNDEFINED_MARK = "_"


def check_magnitude(value: int, what: str = "value") -> int:
    """Checked arithmetic: reject anything beyond the configured integer range"""
    if abs(value) > settings.int_limit:
        raise ArithmeticOverflow(f"{what} {value} exceeds the integer limit {settings.int_limit}")
    return value


def check_table_size(threshold: int) -> int:
    if threshold > settings.max_threshold:
        raise ArithmeticOverflow(
            f"threshold {threshold} exceeds the table limit {settings.max_threshold}"
        )
    return threshold


def validate_raw(table: Sequence[Optional[int]], threshold: int, shift: int) -> None:
    """Raise if (table, threshold, shift) does not describe an injective cofinite map"""
    check_magnitude(shift, "shift")
    check_magnitude(threshold, "threshold")
    if threshold < 0:
        raise InvalidArgument(f"threshold must be a natural, got {threshold}")
    check_table_size(threshold)
    if len(table) != threshold:
        raise InvalidArgument(f"table has {len(table)} rows but threshold is {threshold}")
    tail_start = check_magnitude(threshold + shift, "tail start")
    if tail_start < 0:
        raise NegativeTail(f"N + k = {tail_start} is negative")

    seen: dict[int, int] = {}
    for row, value in enumerate(table):
        if value is None:
            continue
        if value < 0:
            raise TailCollision(f"row {row} maps to negative value {value}")
        if value >= tail_start:
            raise TailCollision(f"row {row} value {value} collides with the tail image [{tail_start}, inf)")
        if value in seen:
            raise InjectivityViolation(f"rows {seen[value]} and {row} both map to {value}")
        seen[value] = row


def absorb_tail(table: Sequence[Optional[int]], shift: int) -> tuple[Optional[int], ...]:
    """Drop trailing rows that already follow n -> n + k"""
    end = len(table)
    while end > 0 and table[end - 1] == end - 1 + shift:
        end -= 1
    return tuple(table[:end])


class CofiniteInjection(BaseModel):
    """
    Canonical normal form {table; N; k} of an element

    Direct construction only accepts an already minimal, valid form; use
    `from_raw` (or core_algebra.normalize) for arbitrary descriptions.
    """

    model_config = ConfigDict(frozen=True)

    shift: int = 0
    threshold: int = Field(default=0, ge=0)
    table: tuple[Optional[int], ...] = ()

    @model_validator(mode="after")
    def _check_normal_form(self) -> "CofiniteInjection":
        validate_raw(self.table, self.threshold, self.shift)
        if absorb_tail(self.table, self.shift) != self.table:
            raise NonCanonical(
                f"row {self.threshold - 1} is absorbed by the tail; threshold is not minimal"
            )
        return self

    @classmethod
    def from_raw(cls, table: Sequence[Optional[int]], threshold: int, shift: int) -> "CofiniteInjection":
        """Validate a raw description and return its minimal-threshold normal form"""
        validate_raw(table, threshold, shift)
        return cls.canonical(table, shift)

    @classmethod
    def canonical(cls, table: Sequence[Optional[int]], shift: int) -> "CofiniteInjection":
        """Absorb the tail of an already valid table (no validation)"""
        rows = absorb_tail(table, shift)
        return cls.model_construct(shift=shift, threshold=len(rows), table=rows)

    @property
    def tail_start(self) -> int:
        """First value of the tail image, N + k"""
        return self.threshold + self.shift

    @property
    def defined_rows(self) -> int:
        return sum(1 for value in self.table if value is not None)

    def to_text(self) -> str:
        """Canonical text form `cfinj{k=..; N=..; t=[..]}`"""
        rows = ", ".join(
            f"{row}->{UNDEFINED_MARK if value is None else value}"
            for row, value in enumerate(self.table)
        )
        return f"cfinj{{k={self.shift}; N={self.threshold}; t=[{rows}]}}"

    def __str__(self) -> str:
        return self.to_text()


class Stats(BaseModel):
    """Complement sizes and index of an element"""

    model_config = ConfigDict(frozen=True)

    dbar: int = Field(ge=0)
    rbar: int = Field(ge=0)
    index: int

    @model_validator(mode="after")
    def _check_index(self) -> "Stats":
        if self.index != self.dbar - self.rbar:
            raise InvalidArgument(f"index {self.index} != dbar - rbar = {self.dbar - self.rbar}")
        return self


class ElementKind(str, Enum):
    """Classification flags"""

    UNIT = "unit"
    FINITARY_UNIT = "finitary_unit"
    IDEMPOTENT = "idempotent"
    GENERAL = "general"


class GreenRelation(str, Enum):
    R = "R"
    L = "L"
    H = "H"
    D = "D"
    J = "J"


class Side(str, Enum):
    """Side of the unknown in a translation equation"""

    LEFT = "left"
    RIGHT = "right"


class WindowTable(BaseModel):
    """Finite shadow of an element on [0, width)"""

    model_config = ConfigDict(frozen=True)

    width: int = Field(ge=0)
    rows: tuple[Optional[int], ...]

    @model_validator(mode="after")
    def _check_rows(self) -> "WindowTable":
        if len(self.rows) != self.width:
            raise InvalidArgument(f"window has {len(self.rows)} rows but width {self.width}")
        values = [value for value in self.rows if value is not None]
        if len(values) != len(set(values)):
            raise InjectivityViolation("window values are not pairwise distinct")
        return self

    def to_text(self) -> str:
        return "[" + ", ".join(
            f"{row}->{UNDEFINED_MARK if value is None else value}" for row, value in enumerate(self.rows)
        ) + "]"


class ChainSpec(BaseModel):
    """
    Finite description of a maximal omega-chain of idempotents

    The hole sequence is `prefix` in order, then every remaining point of
    dom(start) ascending; the i-th member of the chain drops the first i-1
    holes from dom(start).
    """

    model_config = ConfigDict(frozen=True)

    start: CofiniteInjection
    prefix: tuple[int, ...] = ()

    @model_validator(mode="after")
    def _check_chain(self) -> "ChainSpec":
        from services.core_algebra import apply, is_idempotent

        if not is_idempotent(self.start):
            raise NotIdempotent(f"chain start {self.start} is not an idempotent")
        if len(set(self.prefix)) != len(self.prefix):
            raise InvalidArgument(f"prefix {list(self.prefix)} repeats a point")
        for point in self.prefix:
            if point < 0 or apply(self.start, point) is None:
                raise InvalidArgument(f"prefix point {point} is not in the domain of the chain start")
        return self

    def to_text(self) -> str:
        return f"chain{{start={self.start.to_text()}; prefix=[{','.join(map(str, self.prefix))}]}}"

    def __str__(self) -> str:
        return self.to_text()


class BicyclicPair(BaseModel):
    """Generators p, q of a bicyclic subsemigroup with p·q = unit"""

    model_config = ConfigDict(frozen=True)

    p: CofiniteInjection
    q: CofiniteInjection
    unit: CofiniteInjection
