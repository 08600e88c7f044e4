"""Locale-aware rendering of classified expressions into written form."""

from __future__ import annotations

from typing import Optional

from .locales import CurrencyUnit, DEFAULT_CURRENCIES, Locale
from .types import (
    ExpressionType,
    MoneyAmount,
    NumericValue,
    ParsedExpression,
    QuantityAmount,
    TimeOfDay,
)

YEAR_MIN = 1000
YEAR_MAX = 2100


def group_thousands(digits: str, separator: str) -> str:
    """Insert a separator every three digits from the right ("1234567")."""
    if not digits.isdigit():
        raise ValueError(f"expected plain digits, got {digits!r}")
    out = []
    for i, ch in enumerate(reversed(digits)):
        if i and i % 3 == 0:
            out.append(separator)
        out.append(ch)
    return "".join(reversed(out))


def format_year(year: int) -> str:
    if not YEAR_MIN <= year <= YEAR_MAX:
        raise ValueError(f"year out of range: {year}")
    return str(year)


def format_time(t: TimeOfDay) -> str:
    """Hour unpadded, minute two-digit: 7:05, 19:45, 0:30."""
    return f"{t.hour}:{t.minute:02d}"


def _decimal_string(value: NumericValue, locale: Locale) -> str:
    int_part, frac_part = value.digit_parts()
    out = group_thousands(int_part, locale.thousands_separator)
    if frac_part:
        out += locale.decimal_mark + frac_part
    if value.negative:
        out = "-" + out
    return out


def _place_symbol(body: str, symbol: str, locale: Locale) -> str:
    if locale.currency_placement == "suffix":
        return body + symbol
    return symbol + body


def format_currency(major: NumericValue, minor: Optional[NumericValue],
                    unit: CurrencyUnit, magnitude_word: Optional[str],
                    locale: Locale) -> str:
    """Render a currency amount; cents only when spoken ("$0", "$1,000.50")."""
    if major.negative or (minor is not None and minor.negative):
        raise ValueError("negative currency amounts are not supported")
    if magnitude_word:
        body = f"{_decimal_string(major, locale)} {magnitude_word}"
        return _place_symbol(body, unit.symbol, locale)
    digits = unit.minor_unit_digits
    if major.scale > digits:
        raise ValueError(f"major value has more than {digits} fraction digits")
    minor_units = major.mantissa * 10**(digits - major.scale)
    spoken_minor = minor is not None or major.scale > 0
    if minor is not None:
        if not minor.is_integer or minor.mantissa >= 10**digits:
            raise ValueError(f"minor value out of range: {minor}")
        minor_units += minor.mantissa
    whole, cents = divmod(minor_units, 10**digits)
    body = group_thousands(str(whole), locale.thousands_separator)
    if spoken_minor and digits:
        body += locale.decimal_mark + str(cents).rjust(digits, "0")
    return _place_symbol(body, unit.symbol, locale)


def format_quantity(value: NumericValue, unit_word: str,
                    magnitude_word: Optional[str], locale: Locale) -> str:
    """Render a counted amount: "2,000 pieces", "9.1 million", "7"."""
    out = _decimal_string(value, locale)
    if magnitude_word:
        out += f" {magnitude_word}"
    if unit_word:
        out += f" {unit_word}"
    return out


def format_expression(expr: ParsedExpression, locale: Locale,
                      currencies: Optional[dict[str, CurrencyUnit]] = None) -> str:
    """Dispatch a classified expression to its type-specific formatter."""
    registry = currencies if currencies is not None else DEFAULT_CURRENCIES
    if expr.expr_type == ExpressionType.YEAR:
        return format_year(expr.payload)
    if expr.expr_type == ExpressionType.TIMESTAMP:
        return format_time(expr.payload)
    if expr.expr_type == ExpressionType.CURRENCY:
        money: MoneyAmount = expr.payload
        return format_currency(money.major, money.minor, registry[money.currency],
                               money.magnitude_word, locale)
    quantity: QuantityAmount = expr.payload
    return format_quantity(quantity.value, quantity.unit_word,
                           quantity.magnitude_word, locale)
