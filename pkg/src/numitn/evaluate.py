"""Corpus-level scoring: per-type literal accuracy plus pooled WER."""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, ROUND_HALF_UP
from typing import Iterable, Mapping, Optional

from .types import ExpressionType
from .wer import edit_distance

_COLUMNS = (
    (ExpressionType.YEAR, "Years"),
    (ExpressionType.TIMESTAMP, "Timestamps"),
    (ExpressionType.CURRENCY, "Currency amounts"),
    (ExpressionType.QUANTITY, "Quantities"),
)

_TSV_FIELDS = ("wer_distance", "wer_tokens",
               "years_correct", "years_total",
               "timestamps_correct", "timestamps_total",
               "currencies_correct", "currencies_total",
               "quantities_correct", "quantities_total")


@dataclass(frozen=True)
class TypeCount:
    correct: int = 0
    total: int = 0


@dataclass(frozen=True)
class EvalItem:
    reference: str
    hypothesis: str
    expected: tuple[tuple[str, ExpressionType], ...] = ()


@dataclass(frozen=True)
class EvalReport:
    """Raw tallies; every percentage is derived on demand."""

    wer_distance: int = 0
    wer_tokens: int = 0
    counts: Mapping[ExpressionType, TypeCount] = field(default_factory=dict)

    @property
    def wer(self) -> float:
        return self.wer_distance / max(self.wer_tokens, 1)

    def accuracy(self, expr_type: ExpressionType) -> Optional[Decimal]:
        count = self.counts.get(expr_type)
        if count is None or count.total == 0:
            return None
        return _percent(count.correct, count.total)

    @property
    def average_accuracy(self) -> Optional[Decimal]:
        ratios = [Decimal(c.correct * 100) / Decimal(c.total)
                  for c in self.counts.values() if c.total]
        if not ratios:
            return None
        return _round1(sum(ratios) / len(ratios))


def _percent(numerator: int, denominator: int) -> Decimal:
    return _round1(Decimal(numerator * 100) / Decimal(denominator))


def _round1(value: Decimal) -> Decimal:
    return value.quantize(Decimal("0.1"), rounding=ROUND_HALF_UP)


def literal_present(hypothesis: str, surface: str) -> bool:
    """Substring match with non-alphanumeric neighbours on both sides."""
    at = hypothesis.find(surface)
    while at != -1:
        before_ok = at == 0 or not hypothesis[at - 1].isalnum()
        end = at + len(surface)
        after_ok = end == len(hypothesis) or not hypothesis[end].isalnum()
        if before_ok and after_ok:
            return True
        at = hypothesis.find(surface, at + 1)
    return False


def evaluate(items: Iterable[EvalItem]) -> EvalReport:
    distance = 0
    tokens = 0
    tallies: dict[ExpressionType, list[int]] = {}
    for item in items:
        ref_tokens = item.reference.split()
        distance += edit_distance(ref_tokens, item.hypothesis.split())
        tokens += len(ref_tokens)
        for surface, expr_type in item.expected:
            tally = tallies.setdefault(expr_type, [0, 0])
            tally[1] += 1
            if literal_present(item.hypothesis, surface):
                tally[0] += 1
    counts = {t: TypeCount(c, n) for t, (c, n) in tallies.items()}
    return EvalReport(distance, tokens, counts)


def render_report(report: EvalReport, fmt: str = "table") -> str:
    if fmt == "tsv":
        values = [report.wer_distance, report.wer_tokens]
        for expr_type, _ in _COLUMNS:
            count = report.counts.get(expr_type, TypeCount())
            values.extend((count.correct, count.total))
        return "\t".join(_TSV_FIELDS) + "\n" + "\t".join(str(v) for v in values)
    if fmt != "table":
        raise ValueError(f"unknown report format: {fmt!r}")
    headers = ["WER"] + [label for _, label in _COLUMNS] + ["Average"]
    cells = [str(_percent(report.wer_distance, max(report.wer_tokens, 1)))]
    for expr_type, _ in _COLUMNS:
        acc = report.accuracy(expr_type)
        cells.append("-" if acc is None else str(acc))
    avg = report.average_accuracy
    cells.append("-" if avg is None else str(avg))
    widths = [max(len(h), len(c)) for h, c in zip(headers, cells)]
    head = "  ".join(h.ljust(w) for h, w in zip(headers, widths))
    body = "  ".join(c.ljust(w) for c, w in zip(cells, widths))
    return f"{head.rstrip()}\n{body.rstrip()}"


def parse_report_tsv(text: str) -> EvalReport:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2:
        raise ValueError("expected a header line and a value line")
    header = tuple(lines[0].split("\t"))
    if header != _TSV_FIELDS:
        raise ValueError(f"unexpected report header: {header!r}")
    values = [int(v) for v in lines[1].split("\t")]
    counts: dict[ExpressionType, TypeCount] = {}
    for (expr_type, _), at in zip(_COLUMNS, range(2, len(values), 2)):
        correct, total = values[at], values[at + 1]
        if total or correct:
            counts[expr_type] = TypeCount(correct, total)
    return EvalReport(values[0], values[1], counts)
