"""End-to-end sentence normalization: spoken numbers in, digits out."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Iterator, Optional

from .classify import classify, resolve_time
from .extract import extract_numeric_literals
from .formatting import format_expression
from .grammar import scan_tokens
from .locales import DEFAULT_CONFIG, CurrencyUnit, Locale
from .tokenizer import Token, tokenize
from .types import ExpressionType, ParsedExpression, Span


@dataclass(frozen=True)
class NormalizedExpression:
    """One replacement made while normalizing a sentence."""

    expression: ParsedExpression
    source_span: Span
    source_text: str
    formatted: str
    output_span: Span

    def restore(self, normalized: str) -> str:
        """Splice the original wording back over the output span."""
        return (normalized[: self.output_span.start] + self.source_text
                + normalized[self.output_span.end:])


@dataclass(frozen=True)
class NormalizationOutcome:
    text: str
    replacements: tuple[NormalizedExpression, ...]

    @property
    def changed(self) -> bool:
        return bool(self.replacements)


def _char_range(tokens: list[Token], span: Span) -> tuple[int, int]:
    return tokens[span.start].start, tokens[span.end - 1].end


def normalize_sentence(sentence: str, locale: Locale,
                       currencies: Optional[dict[str, CurrencyUnit]] = None
                       ) -> NormalizationOutcome:
    registry = currencies if currencies is not None else DEFAULT_CONFIG.currencies
    tokens = tokenize(sentence)
    literals = extract_numeric_literals(sentence, locale, registry)
    parts: list[str] = []
    produced: list[NormalizedExpression] = []
    cursor = 0
    out_len = 0
    for candidate in scan_tokens(tokens, locale):
        start, end = _char_range(tokens, candidate.span)
        # Already-formatted literals stay untouched; a candidate only
        # proceeds when it covers more text than the digit match itself
        # ("15.45 Uhr", "4:30 pm").
        if any(lit.span.start <= start and end <= lit.span.end for lit in literals):
            continue
        expr = classify(candidate, tokens, locale)
        if expr.expr_type == ExpressionType.TIMESTAMP:
            expr = replace(expr, payload=resolve_time(expr.payload))
        start, end = _char_range(tokens, expr.span)
        formatted = format_expression(expr, locale, registry)
        parts.append(sentence[cursor:start])
        out_len += start - cursor
        parts.append(formatted)
        produced.append(NormalizedExpression(
            expression=expr,
            source_span=Span(start, end),
            source_text=sentence[start:end],
            formatted=formatted,
            output_span=Span(out_len, out_len + len(formatted)),
        ))
        out_len += len(formatted)
        cursor = end
    parts.append(sentence[cursor:])
    return NormalizationOutcome("".join(parts), tuple(produced))


def normalize_text(sentence: str, locale: Locale,
                   currencies: Optional[dict[str, CurrencyUnit]] = None) -> str:
    return normalize_sentence(sentence, locale, currencies).text


def normalize_lines(lines: Iterable[str], locale: Locale,
                    currencies: Optional[dict[str, CurrencyUnit]] = None
                    ) -> Iterator[NormalizationOutcome]:
    for line in lines:
        yield normalize_sentence(line, locale, currencies)
