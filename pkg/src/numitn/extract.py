"""Finding already-formatted numeric literals in plain text."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .lexicon import is_de_number_word, is_en_number_word
from .locales import DEFAULT_CURRENCIES, CurrencyUnit, Locale
from .tokenizer import tokenize
from .types import ExpressionType, Span

_YEAR_GUESS_RE = re.compile(r"^[12]\d{3}$")

# Overlapping matches are resolved in this order.
_PRIORITY = {ExpressionType.CURRENCY: 0, ExpressionType.TIMESTAMP: 1,
             ExpressionType.QUANTITY: 2}


@dataclass(frozen=True)
class LiteralMatch:
    span: Span
    text: str
    guessed_type: ExpressionType


def _number_pattern(locale: Locale) -> str:
    sep = re.escape(locale.thousands_separator)
    mark = re.escape(locale.decimal_mark)
    return rf"(?:\d{{1,3}}(?:{sep}\d{{3}})+|\d+)(?:{mark}\d+)?"


def _magnitude_pattern(locale: Locale) -> str:
    if locale.language == "de":
        return r"(?:\s(?i:million(?:en)?|milliarden?))?"
    return r"(?:\s(?i:million|billion))?"


def _build_patterns(locale: Locale,
                    currencies: dict[str, CurrencyUnit]) -> list[tuple[ExpressionType, re.Pattern[str]]]:
    number = _number_pattern(locale)
    magnitude = _magnitude_pattern(locale)
    symbols = "".join(re.escape(u.symbol) for u in currencies.values() if u.symbol)
    patterns: list[tuple[ExpressionType, re.Pattern[str]]] = []
    if symbols:
        if locale.currency_placement == "prefix":
            money = rf"[{symbols}]{number}{magnitude}\b"
        else:
            money = rf"\b{number}{magnitude}[{symbols}]"
        patterns.append((ExpressionType.CURRENCY, re.compile(money)))
    patterns.append((ExpressionType.TIMESTAMP,
                     re.compile(r"\b(?:[01]?\d|2[0-3]):[0-5]\d\b")))
    patterns.append((ExpressionType.QUANTITY,
                     re.compile(rf"\b{number}{magnitude}\b")))
    return patterns


def extract_numeric_literals(text: str, locale: Locale,
                             currencies: Optional[dict[str, CurrencyUnit]] = None
                             ) -> list[LiteralMatch]:
    """All formatted numeric literals, left to right, non-overlapping."""
    registry = currencies if currencies is not None else DEFAULT_CURRENCIES
    raw: list[tuple[int, int, int, ExpressionType, str]] = []
    for expr_type, pattern in _build_patterns(locale, registry):
        for m in pattern.finditer(text):
            raw.append((m.start(), _PRIORITY[expr_type], -m.end(),
                        expr_type, m.group()))
    raw.sort(key=lambda r: r[:3])
    kept: list[LiteralMatch] = []
    last_end = -1
    for start, _, neg_end, expr_type, surface in raw:
        end = -neg_end
        if start < last_end:
            continue
        if expr_type == ExpressionType.QUANTITY and _YEAR_GUESS_RE.match(surface) \
                and 1000 <= int(surface) <= 2100:
            expr_type = ExpressionType.YEAR
        kept.append(LiteralMatch(Span(start, end), surface, expr_type))
        last_end = end
    return kept


def contains_numeric_expression(text: str, locale: Locale,
                                currencies: Optional[dict[str, CurrencyUnit]] = None) -> bool:
    """True when the text holds a digit literal or a spoken number word."""
    if extract_numeric_literals(text, locale, currencies):
        return True
    de = locale.language == "de"
    for token in tokenize(text):
        if not token.is_word:
            continue
        if de:
            # Bare articles are not treated as numerals here; "eins" is.
            if token.lowercased in ("ein", "eine"):
                continue
            if is_de_number_word(token.lowercased):
                return True
        elif is_en_number_word(token.lowercased):
            return True
    return False
