"""Context-driven typing of parsed spans and day-period resolution."""

from __future__ import annotations

from .grammar import _is_magnitude_word
from .lexicon import fold_german, is_de_number_word, is_en_number_word
from .locales import CURRENCY_WORDS, DEFAULT_CURRENCY_CODE, Locale, MINOR_UNIT_WORDS
from .tokenizer import Token
from .types import (
    CandidateParse,
    ExpressionType,
    MoneyAmount,
    MoneyParse,
    ParsedExpression,
    ParseKind,
    PeriodHint,
    QuantityAmount,
    Span,
    TimeOfDay,
)

YEAR_MIN = 1000
YEAR_MAX = 2100

# Words immediately left of a cardinal that signal a calendar year.
YEAR_CUES = {
    "en": {"in", "since", "year", "by", "from", "until"},
    "de": {"seit", "jahr", "bis"},
}

# Function words and phrase starters that cannot serve as a quantity unit.
_UNIT_STOPWORDS = {
    "en": {"a", "an", "and", "are", "as", "at", "be", "been", "but", "by",
           "for", "from", "half", "if", "in", "is", "it", "minute", "minutes",
           "of", "o'clock", "oh", "on", "or", "past", "per", "point",
           "quarter", "so", "than", "that", "the", "then", "this", "to",
           "until", "was", "were", "when", "while", "with"},
    "de": {"aber", "als", "am", "an", "auf", "bei", "bis", "das", "dem",
           "den", "der", "des", "die", "doch", "eine", "einem", "einen",
           "einer", "fuer", "halb", "im", "in", "ist", "komma", "minute",
           "minuten", "mit", "nach", "oder", "pro", "seit", "sind", "so",
           "uhr", "um", "und", "viertel", "von", "vor", "war", "waren",
           "wenn", "zu"},
}

_AM_HINTS = (PeriodHint.EXPLICIT_AM, PeriodHint.MORNING)
_PM_HINTS = (PeriodHint.EXPLICIT_PM, PeriodHint.AFTERNOON, PeriodHint.EVENING,
             PeriodHint.NIGHT)


def resolve_time(t: TimeOfDay) -> TimeOfDay:
    """Map a spoken 12-hour reading onto the 24-hour clock. Idempotent."""
    if t.hour >= 13 or t.period_hint == PeriodHint.UNSPECIFIED:
        return t
    hour = t.hour
    if t.period_hint in _PM_HINTS and 1 <= hour <= 11:
        hour += 12
    elif t.period_hint in _AM_HINTS and hour == 12:
        hour = 0
    if hour == t.hour:
        return t
    return TimeOfDay(hour, t.minute, t.period_hint)


def _currency_code(money: MoneyParse, locale: Locale) -> str:
    word = money.unit_word.lower()
    if locale.language == "de":
        word = fold_german(word)
    if word in MINOR_UNIT_WORDS:
        return DEFAULT_CURRENCY_CODE[locale.language]
    return CURRENCY_WORDS[locale.language][word]


def _is_number_word(word: str, locale: Locale) -> bool:
    if locale.language == "de":
        return is_de_number_word(word)
    return is_en_number_word(word)


def _unit_word_after(candidate: CandidateParse, tokens: list[Token], locale: Locale) -> str:
    i = candidate.span.end
    if i >= len(tokens) or not tokens[i].is_word:
        return ""
    word = tokens[i].lowercased
    if any(ch.isdigit() for ch in word):
        return ""
    key = fold_german(word) if locale.language == "de" else word
    if key in _UNIT_STOPWORDS[locale.language]:
        return ""
    if _is_number_word(word, locale) or _is_magnitude_word(word, locale.language):
        return ""
    return tokens[i].surface


def classify(candidate: CandidateParse, tokens: list[Token], locale: Locale) -> ParsedExpression:
    """Assign an expression type to a candidate using its sentence context."""
    if candidate.kind == ParseKind.CURRENCY:
        money = candidate.value
        payload = MoneyAmount(money.major, money.minor,
                              _currency_code(money, locale),
                              candidate.magnitude_word)
        return ParsedExpression(candidate.span, ExpressionType.CURRENCY, payload)

    if candidate.kind == ParseKind.CLOCK:
        return ParsedExpression(candidate.span, ExpressionType.TIMESTAMP,
                                candidate.value)

    value = candidate.value
    if (value.is_integer and candidate.magnitude_word is None
            and YEAR_MIN <= value.mantissa <= YEAR_MAX and not value.negative):
        cued = False
        before = candidate.span.start - 1
        if before >= 0:
            prev = tokens[before].lowercased
            if locale.language == "de":
                prev = fold_german(prev)
            cued = prev in YEAR_CUES[locale.language]
        if cued or candidate.pair_reading:
            return ParsedExpression(candidate.span, ExpressionType.YEAR,
                                    value.mantissa)

    unit_word = _unit_word_after(candidate, tokens, locale)
    span = candidate.span
    if unit_word:
        span = Span(span.start, span.end + 1)
    payload = QuantityAmount(value, unit_word, candidate.magnitude_word)
    return ParsedExpression(span, ExpressionType.QUANTITY, payload)
