"""Three-step corpus generation: sentences, audio, conversions.

Text-client calls run sequentially so a stateful mock stays reproducible;
synthesis calls are stateless and fan out over a thread pool.
"""

from __future__ import annotations

import hashlib
import random
import re
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Mapping, Optional, Sequence, TypeVar

from .extract import extract_numeric_literals
from .grammar import scan_tokens
from .locales import DEFAULT_CONFIG, CurrencyUnit, Locale
from .manifest import ManifestError, ManifestRecord
from .pipeline import normalize_text
from .tokenizer import tokenize
from .types import (
    ExpressionType,
    MoneyAmount,
    NumericValue,
    ParsedExpression,
    QuantityAmount,
    Span,
    TimeOfDay,
)
from .verbalize import (
    applicable_time_styles,
    enumerate_timestamp_phrasings,
    verbalize_time,
    verbalize_value,
    verbalize_year,
    year_styles,
)

PROMPT_NOUNS = {
    ExpressionType.YEAR: "year",
    ExpressionType.TIMESTAMP: "timestamp",
    ExpressionType.CURRENCY: "currency amount",
    ExpressionType.QUANTITY: "quantity",
}

ANTI_ENUMERATION = ("Write one sentence per line and do not number, "
                    "bullet or otherwise enumerate them.")

DEFAULT_VOICES = ("alloy", "echo", "nova", "onyx")


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class SentencePromptSpec:
    n: int
    expr_type: ExpressionType
    locale: Locale

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("a prompt must request at least one sentence")


@dataclass(frozen=True)
class SplitSpec:
    train: float
    dev: float
    test: float
    seed: int = 0

    def __post_init__(self) -> None:
        ratios = (self.train, self.dev, self.test)
        if any(r <= 0 for r in ratios):
            raise ValueError("split ratios must be positive")
        if abs(sum(ratios) - 1.0) > 1e-9:
            raise ValueError("split ratios must sum to 1")


def _marker(locale: Locale) -> str:
    return "German " if locale.language == "de" else ""


def build_sentence_prompt(spec: SentencePromptSpec) -> str:
    noun = PROMPT_NOUNS[spec.expr_type]
    return (f"Generate {spec.n} diverse {_marker(spec.locale)}sentences "
            f"containing a {noun} written down using number words. "
            f"{ANTI_ENUMERATION}")


def build_conversion_prompt(expr_type: ExpressionType) -> str:
    return f"Convert the {PROMPT_NOUNS[expr_type]} in the sentences to numeric literals."


def build_timestamp_prompt(phrase: str, locale: Locale) -> str:
    if not phrase.strip():
        raise ValueError("empty timestamp phrase")
    return (f"Generate a {_marker(locale)}sentence containing the timestamp "
            f"{phrase} written down using number words. {ANTI_ENUMERATION}")


# --- validation ---------------------------------------------------------------


def validate_record(verbalized: str, converted: str, locale: Locale,
                    currencies: Optional[dict[str, CurrencyUnit]] = None) -> bool:
    """Filter rule: the conversion must add literals and change nothing else."""
    if any(ch.isdigit() for ch in verbalized):
        return False
    registry = currencies if currencies is not None else DEFAULT_CONFIG.currencies
    literals = extract_numeric_literals(converted, locale, registry)
    if not literals:
        return False
    converted_rest = [
        t.surface for t in tokenize(converted)
        if not any(lit.span.start <= t.start and t.end <= lit.span.end
                   for lit in literals)
    ]
    verbalized_tokens = tokenize(verbalized)
    covered: set[int] = set()
    for candidate in scan_tokens(verbalized_tokens, locale):
        covered.update(range(candidate.span.start, candidate.span.end))
    verbalized_rest = [t.surface for t in verbalized_tokens
                       if t.index not in covered]
    return verbalized_rest == converted_rest


# --- splitting ----------------------------------------------------------------


def split_disjoint(records: Sequence[ManifestRecord], spec: SplitSpec
                   ) -> tuple[list[ManifestRecord], list[ManifestRecord], list[ManifestRecord]]:
    """Partition records so no expression surface appears in two splits.

    Records sharing a surface are glued into one group (transitively) and a
    group always lands in a single split. Group order is first-occurrence,
    then a seeded shuffle; split sizes follow the ratios in whole groups.
    """
    parent: dict[str, str] = {}

    def find(key: str) -> str:
        root = key
        while parent[root] != root:
            root = parent[root]
        while parent[key] != root:
            parent[key], key = root, parent[key]
        return root

    def union(a: str, b: str) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    for record in records:
        surfaces = record.surfaces()
        for surface in surfaces:
            parent.setdefault(surface, surface)
        for other in surfaces[1:]:
            union(surfaces[0], other)

    groups: dict[str, list[ManifestRecord]] = {}
    order: list[str] = []
    for record in records:
        root = find(record.surfaces()[0])
        if root not in groups:
            groups[root] = []
            order.append(root)
        groups[root].append(record)
    if len(order) < 3:
        raise ValueError(f"need at least 3 disjoint surface groups, got {len(order)}")

    rng = random.Random(spec.seed)
    rng.shuffle(order)
    n = len(order)
    first = int(spec.train * n + 0.5)
    second = int((spec.train + spec.dev) * n + 0.5)
    first = min(max(first, 1), n - 2)
    second = min(max(second, first + 1), n - 1)
    splits: tuple[list[ManifestRecord], ...] = ([], [], [])
    for at, root in enumerate(order):
        bucket = 0 if at < first else 1 if at < second else 2
        splits[bucket].extend(groups[root])
    return splits


# --- client interfaces --------------------------------------------------------


@dataclass(frozen=True)
class ClientConfig:
    endpoint: str = ""
    api_key_env: str = ""
    timeout_seconds: float = 30.0
    max_concurrency: int = 4
    max_retries: int = 2

    def __post_init__(self) -> None:
        if self.max_concurrency < 1:
            raise ValueError("max_concurrency must be at least 1")
        if self.max_retries < 0:
            raise ValueError("max_retries must be non-negative")


class TextGenerator(ABC):
    def __init__(self, config: ClientConfig = ClientConfig()) -> None:
        self.config = config

    @abstractmethod
    def complete(self, prompt: str) -> str:
        ...


@dataclass(frozen=True)
class SynthesisResult:
    data: bytes
    format_tag: str
    duration_seconds: float


class SpeechSynthesizer(ABC):
    is_mock = False

    def __init__(self, config: ClientConfig = ClientConfig()) -> None:
        self.config = config

    @abstractmethod
    def synthesize(self, text: str, voice: str) -> SynthesisResult:
        ...


class MockSpeechSynthesizer(SpeechSynthesizer):
    """Deterministic placeholder audio; nothing is persisted for it."""

    is_mock = True

    def synthesize(self, text: str, voice: str) -> SynthesisResult:
        digest = hashlib.sha256(f"{voice}|{text}".encode("utf-8")).digest()
        return SynthesisResult(digest, "wav", 0.0)


# --- rule-based text client -----------------------------------------------


_SENTENCE_PROMPT_RE = re.compile(
    r"^Generate (\d+) diverse (German )?sentences containing a "
    r"(year|timestamp|currency amount|quantity) written down using number words\.")
_TIMESTAMP_PROMPT_RE = re.compile(
    r"^Generate a (German )?sentence containing the timestamp (.+) "
    r"written down using number words\.")
_CONVERSION_PROMPT_RE = re.compile(
    r"^Convert the (year|timestamp|currency amount|quantity) in the sentences "
    r"to numeric literals\.\n(.*)$", re.DOTALL)

_CARRIERS = {
    ("en", ExpressionType.YEAR): (
        "The treaty was signed in {}.",
        "The family moved abroad in {}.",
        "Nothing much has changed since {}.",
        "The archive covers the year {}.",
    ),
    ("en", ExpressionType.TIMESTAMP): (
        "The meeting starts at {}.",
        "The train leaves at {}.",
        "She called me at {}.",
        "Doors open at {}.",
    ),
    ("en", ExpressionType.CURRENCY): (
        "The ticket costs {}.",
        "They paid {} for the repairs.",
        "The invoice came to {}.",
        "He donated {} last spring.",
    ),
    ("en", ExpressionType.QUANTITY): (
        "They ordered {} boxes for the fair.",
        "The village has {} residents.",
        "We walked {} kilometers together.",
        "The warehouse stores {} crates.",
    ),
    ("de", ExpressionType.YEAR): (
        "Der Vertrag wurde im Jahr {} unterzeichnet.",
        "Seit {} wohnt sie in der Stadt.",
        "Die Brücke stammt aus dem Jahr {}.",
        "Bis {} blieb alles beim Alten.",
    ),
    ("de", ExpressionType.TIMESTAMP): (
        "Das Treffen beginnt um {}.",
        "Der Zug fährt um {} ab.",
        "Sie rief mich um {} an.",
        "Die Türen öffnen um {}.",
    ),
    ("de", ExpressionType.CURRENCY): (
        "Die Karte kostet {}.",
        "Die Rechnung belief sich auf {}.",
        "Er spendete {} im Frühjahr.",
        "Sie zahlten {} für die Reparatur.",
    ),
    ("de", ExpressionType.QUANTITY): (
        "Das Lager fasst {} Kisten.",
        "Das Dorf hat {} Einwohner.",
        "Sie bestellten {} Schachteln für das Fest.",
        "Der Verein zählt {} Mitglieder.",
    ),
}

_PROMPT_NOUN_TYPES = {noun: t for t, noun in PROMPT_NOUNS.items()}


class RuleBasedTextGenerator(TextGenerator):
    """Offline stand-in for the LLM steps, built on the library itself.

    Understands the three prompt shapes this module produces and answers
    them with the verbalizer (step 1) or the normalizer (step 3), so a
    fully deterministic corpus can be generated without any service.
    """

    def __init__(self, locale: Locale, seed: int = 0,
                 config: ClientConfig = ClientConfig()) -> None:
        super().__init__(config)
        self._locale = locale
        self._rng = random.Random(seed)

    def complete(self, prompt: str) -> str:
        m = _SENTENCE_PROMPT_RE.match(prompt)
        if m:
            expr_type = _PROMPT_NOUN_TYPES[m.group(3)]
            return "\n".join(self._sentence(expr_type)
                             for _ in range(int(m.group(1))))
        m = _TIMESTAMP_PROMPT_RE.match(prompt)
        if m:
            carrier = self._rng.choice(
                _CARRIERS[(self._locale.language, ExpressionType.TIMESTAMP)])
            return carrier.format(m.group(2))
        m = _CONVERSION_PROMPT_RE.match(prompt)
        if m:
            return "\n".join(normalize_text(line, self._locale)
                             for line in m.group(2).splitlines())
        raise ValueError(f"unrecognized prompt: {prompt!r}")

    def _sentence(self, expr_type: ExpressionType) -> str:
        carrier = self._rng.choice(_CARRIERS[(self._locale.language, expr_type)])
        return carrier.format(self._phrase(expr_type))

    def _phrase(self, expr_type: ExpressionType) -> str:
        rng = self._rng
        language = self._locale.language
        if expr_type == ExpressionType.YEAR:
            year = rng.randint(1000, 2100)
            return verbalize_year(year, language, rng.choice(year_styles(year, language)))
        if expr_type == ExpressionType.TIMESTAMP:
            t = TimeOfDay(rng.randint(0, 23), rng.randint(0, 59))
            return verbalize_time(t, self._locale, rng.choice(applicable_time_styles(t, self._locale)))
        if expr_type == ExpressionType.CURRENCY:
            return self._money_phrase()
        return self._quantity_phrase()

    def _money_phrase(self) -> str:
        rng = self._rng
        language = self._locale.language
        code = rng.choice(("USD", "EUR", "GBP")) if language == "en" else "EUR"
        shape = rng.randrange(3)
        if shape == 0:
            major = rng.randint(1, 999)
            word = self._magnitude_word(major)
            money = MoneyAmount(NumericValue(major), None, code, word)
        elif shape == 1:
            money = MoneyAmount(NumericValue(rng.randint(1, 9999)),
                                NumericValue(rng.randint(1, 99)), code)
        else:
            money = MoneyAmount(NumericValue(rng.randint(1, 9999)), None, code)
        expr = ParsedExpression(Span(0, 1), ExpressionType.CURRENCY, money)
        return verbalize_value(expr, self._locale)

    def _quantity_phrase(self) -> str:
        rng = self._rng
        shape = rng.randrange(3)
        if shape == 0:
            value = NumericValue(rng.randint(2, 999999))
            word = None
        elif shape == 1:
            value = NumericValue(rng.randint(2, 9999), 1)
            word = None
        else:
            major = rng.randint(2, 999)
            value = NumericValue(major)
            word = self._magnitude_word(major)
        expr = ParsedExpression(Span(0, 1), ExpressionType.QUANTITY,
                                QuantityAmount(value, "", word))
        return verbalize_value(expr, self._locale)

    def _magnitude_word(self, count: int) -> str:
        rng = self._rng
        if self._locale.language == "de":
            stem = rng.choice(("Million", "Milliarde"))
            return stem if count == 1 else stem + "n" if stem.endswith("e") else stem + "en"
        return rng.choice(("million", "billion"))


# --- the pipeline -------------------------------------------------------------


@dataclass(frozen=True)
class GenerationPlan:
    locale: Locale
    counts: Mapping[ExpressionType, int] = field(default_factory=dict)
    sweep_timestamp_phrasings: bool = False
    batch_size: int = 5
    voices: tuple[str, ...] = DEFAULT_VOICES
    seed: int = 0

    def __post_init__(self) -> None:
        if self.batch_size < 1:
            raise ValueError("batch_size must be at least 1")
        if not self.voices:
            raise ValueError("at least one voice is required")
        if any(c < 0 for c in self.counts.values()):
            raise ValueError("counts must be non-negative")


@dataclass(frozen=True)
class GenerationStats:
    prompts_issued: int
    sentences_generated: int
    accepted: int
    discarded: int
    failures: tuple[str, ...]
    audio_seconds: float
    per_type: Mapping[str, int]


_ENUM_PREFIX_RE = re.compile(r"^\s*(?:\d+[.)]\s+|[-*•]\s+)")

T = TypeVar("T")


def _with_retries(call: Callable[[], T], retries: int) -> T:
    last: Exception
    for _ in range(retries + 1):
        try:
            return call()
        except Exception as err:
            last = err
    raise last


def run_generation(plan: GenerationPlan, textgen: TextGenerator,
                   synthesizer: SpeechSynthesizer,
                   output_dir: Optional[str | Path] = None
                   ) -> tuple[list[ManifestRecord], GenerationStats]:
    """Steps: prompt sentences, synthesize audio, convert, filter."""
    locale = plan.locale
    rng = random.Random(plan.seed)
    failures: list[str] = []
    prompts_issued = 0

    # Step 1: collect (type, sentence) pairs batch by batch.
    batches: list[tuple[ExpressionType, list[str]]] = []
    requests: list[tuple[ExpressionType, str, int]] = []
    for expr_type, count in plan.counts.items():
        remaining = count
        while remaining > 0:
            take = min(plan.batch_size, remaining)
            prompt = build_sentence_prompt(SentencePromptSpec(take, expr_type, locale))
            requests.append((expr_type, prompt, take))
            remaining -= take
    if plan.sweep_timestamp_phrasings:
        for phrase, _ in enumerate_timestamp_phrasings(locale):
            requests.append((ExpressionType.TIMESTAMP,
                             build_timestamp_prompt(phrase, locale), 1))

    for expr_type, prompt, expected in requests:
        prompts_issued += 1
        try:
            reply = _with_retries(lambda: textgen.complete(prompt),
                                  textgen.config.max_retries)
        except Exception as err:
            failures.append(f"sentence prompt failed: {err}")
            continue
        sentences = [_ENUM_PREFIX_RE.sub("", line).strip()
                     for line in reply.splitlines() if line.strip()]
        batches.append((expr_type, sentences[:expected]))

    flat: list[tuple[int, ExpressionType, str]] = []
    for expr_type, sentences in batches:
        for sentence in sentences:
            flat.append((len(flat), expr_type, sentence))

    # Step 2: synthesis fans out; voices are drawn up front to keep the
    # record → voice pairing independent of thread scheduling.
    voices = [rng.choice(plan.voices) for _ in flat]
    audio_results: list[Optional[SynthesisResult]] = [None] * len(flat)

    def synth(at: int) -> Optional[SynthesisResult]:
        _, _, sentence = flat[at]
        return _with_retries(lambda: synthesizer.synthesize(sentence, voices[at]),
                             synthesizer.config.max_retries)

    if flat:
        workers = max(1, synthesizer.config.max_concurrency)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            jobs = {at: pool.submit(synth, at) for at in range(len(flat))}
        for at, job in jobs.items():
            try:
                audio_results[at] = job.result()
            except Exception as err:
                failures.append(f"synthesis failed for {flat[at][2]!r}: {err}")

    # Step 3: one conversion call per original batch.
    converted: dict[int, str] = {}
    offset = 0
    for expr_type, sentences in batches:
        if not sentences:
            continue
        prompt = build_conversion_prompt(expr_type) + "\n" + "\n".join(sentences)
        prompts_issued += 1
        try:
            reply = _with_retries(lambda: textgen.complete(prompt),
                                  textgen.config.max_retries)
            lines = reply.splitlines()
            if len(lines) != len(sentences):
                raise ValueError(
                    f"conversion returned {len(lines)} lines for {len(sentences)} sentences")
        except Exception as err:
            failures.append(f"conversion failed: {err}")
            offset += len(sentences)
            continue
        for at, line in enumerate(lines):
            converted[offset + at] = line.strip()
        offset += len(sentences)

    records: list[ManifestRecord] = []
    discarded = 0
    per_type: dict[str, int] = {}
    audio_seconds = 0.0
    audio_dir: Optional[Path] = None
    if output_dir is not None and not synthesizer.is_mock:
        audio_dir = Path(output_dir) / "audio"
        audio_dir.mkdir(parents=True, exist_ok=True)

    for at, expr_type, sentence in flat:
        formatted = converted.get(at)
        if formatted is None:
            continue
        if not validate_record(sentence, formatted, locale):
            discarded += 1
            continue
        literals = extract_numeric_literals(formatted, locale)
        record_id = f"{locale.language}-{expr_type.value}-{at:05d}"
        synthesis = audio_results[at]
        audio_ref = None
        if synthesis is not None:
            audio_seconds += synthesis.duration_seconds
            if audio_dir is not None:
                name = f"{record_id}.{synthesis.format_tag}"
                (audio_dir / name).write_bytes(synthesis.data)
                audio_ref = f"audio/{name}"
        try:
            records.append(ManifestRecord(
                id=record_id,
                locale=locale.language,
                type=expr_type.value,
                verbalized=sentence,
                formatted=formatted,
                expressions=tuple((lit.text, lit.guessed_type.value)
                                  for lit in literals),
                audio=audio_ref,
                voice=voices[at],
            ))
        except ManifestError as err:
            failures.append(str(err))
            continue
        per_type[expr_type.value] = per_type.get(expr_type.value, 0) + 1

    stats = GenerationStats(
        prompts_issued=prompts_issued,
        sentences_generated=len(flat),
        accepted=len(records),
        discarded=discarded,
        failures=tuple(failures),
        audio_seconds=audio_seconds,
        per_type=per_type,
    )
    if prompts_issued and not records and failures and not discarded:
        raise GenerationError(
            f"all records failed ({len(failures)} errors); first: {failures[0]}")
    return records, stats


def corpus_statistics(splits: Mapping[str, Sequence[ManifestRecord]],
                      audio_seconds: Optional[Mapping[str, float]] = None) -> str:
    """Utterance and hour counts per subset, one row each."""
    rows = [("Subset", "Utterances", "Hours")]
    for name, records in splits.items():
        seconds = (audio_seconds or {}).get(name, 0.0)
        rows.append((name, str(len(records)), f"{seconds / 3600:.1f}"))
    widths = [max(len(row[col]) for row in rows) for col in range(3)]
    return "\n".join("  ".join(cell.ljust(width) for cell, width
                               in zip(row, widths)).rstrip() for row in rows)
