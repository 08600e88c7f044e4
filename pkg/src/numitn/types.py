"""Core value types shared by the grammar, formatter and pipeline layers."""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal
from enum import Enum
from typing import Optional, Union

MAX_MANTISSA = 10**15
MAX_SCALE = 6


class ExpressionType(Enum):
    YEAR = "year"
    TIMESTAMP = "timestamp"
    CURRENCY = "currency"
    QUANTITY = "quantity"


class PeriodHint(Enum):
    """Day-period information attached to a spoken clock time."""

    MORNING = "morning"
    AFTERNOON = "afternoon"
    EVENING = "evening"
    NIGHT = "night"
    EXPLICIT_AM = "explicit_am"
    EXPLICIT_PM = "explicit_pm"
    UNSPECIFIED = "unspecified"


class ParseKind(Enum):
    CARDINAL = "cardinal"
    CLOCK = "clock"
    CURRENCY = "currency"


@dataclass(frozen=True)
class NumericValue:
    """Exact decimal number: sign * mantissa * 10**-scale.

    The mantissa carries all spoken digits; the scale counts digits after
    the decimal point ("nine point one" -> mantissa 91, scale 1).
    """

    mantissa: int
    scale: int = 0
    negative: bool = False

    def __post_init__(self) -> None:
        if not 0 <= self.mantissa <= MAX_MANTISSA:
            raise ValueError(f"mantissa out of range: {self.mantissa}")
        if not 0 <= self.scale <= MAX_SCALE:
            raise ValueError(f"scale out of range: {self.scale}")

    @classmethod
    def from_int(cls, n: int) -> "NumericValue":
        return cls(abs(n), 0, n < 0)

    def to_decimal(self) -> Decimal:
        d = Decimal(self.mantissa).scaleb(-self.scale)
        return -d if self.negative else d

    @property
    def is_integer(self) -> bool:
        return self.scale == 0

    def as_int(self) -> int:
        if self.scale:
            raise ValueError(f"not an integer value: {self!r}")
        return -self.mantissa if self.negative else self.mantissa

    def digit_parts(self) -> tuple[str, str]:
        """Split into (integer digits, fraction digits) without separators."""
        digits = str(self.mantissa).rjust(self.scale + 1, "0")
        if self.scale:
            return digits[: -self.scale], digits[-self.scale :]
        return digits, ""


@dataclass(frozen=True)
class TimeOfDay:
    hour: int
    minute: int
    period_hint: PeriodHint = PeriodHint.UNSPECIFIED

    def __post_init__(self) -> None:
        if not 0 <= self.hour <= 23:
            raise ValueError(f"hour out of range: {self.hour}")
        if not 0 <= self.minute <= 59:
            raise ValueError(f"minute out of range: {self.minute}")


@dataclass(frozen=True)
class Span:
    """Half-open index range; token indices in parses, char offsets in matches."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if self.start < 0 or self.end < self.start:
            raise ValueError(f"bad span: {self.start}..{self.end}")

    def __len__(self) -> int:
        return self.end - self.start


@dataclass(frozen=True)
class MoneyParse:
    """Raw currency phrase parse before locale resolution."""

    major: NumericValue
    minor: Optional[NumericValue]
    unit_word: str


@dataclass(frozen=True)
class CandidateParse:
    """One parsed number-word span found in a token stream."""

    span: Span
    kind: ParseKind
    value: Union[NumericValue, TimeOfDay, MoneyParse]
    magnitude_word: Optional[str] = None
    pair_reading: bool = False


@dataclass(frozen=True)
class MoneyAmount:
    """Classified currency payload; ``minor`` is None when no cents were spoken."""

    major: NumericValue
    minor: Optional[NumericValue]
    currency: str
    magnitude_word: Optional[str] = None


@dataclass(frozen=True)
class QuantityAmount:
    value: NumericValue
    unit_word: str = ""
    magnitude_word: Optional[str] = None


Payload = Union[int, TimeOfDay, MoneyAmount, QuantityAmount]


@dataclass(frozen=True)
class ParsedExpression:
    span: Span
    expr_type: ExpressionType
    payload: Payload
