"""Number-word grammar: cardinals, clock phrases and currency phrases.

All parse functions are pure, work on a token list starting at a given
index and return the longest matching ``CandidateParse`` or ``None``.
"""

from __future__ import annotations

import re
from typing import Optional

from .lexicon import (
    DE_MAGNITUDE_WORDS,
    EN_MAGNITUDE_WORDS,
    digit_word_value,
    en_scale,
    en_tens,
    en_two_digit,
    en_unit,
    fold_german,
    parse_de_compound,
)
from .locales import CURRENCY_WORDS, Locale, MINOR_UNIT_WORDS
from .tokenizer import Token, tokenize
from .types import (
    MAX_MANTISSA,
    MAX_SCALE,
    CandidateParse,
    MoneyParse,
    NumericValue,
    ParseKind,
    PeriodHint,
    Span,
    TimeOfDay,
)

_DIGIT_HOUR_RE = re.compile(r"(\d{1,2})$")
_DIGIT_TIME_RE = re.compile(r"(\d{1,2})[.:]([0-5]\d)$")
_DIGIT_HOUR_AMPM_RE = re.compile(r"(\d{1,2})(am|pm)$")
_DIGIT_TIME_AMPM_RE = re.compile(r"(\d{1,2})[.:]([0-5]\d)(am|pm)$")

_EN_PERIOD_WORDS = {"morning": PeriodHint.MORNING, "afternoon": PeriodHint.AFTERNOON,
                    "evening": PeriodHint.EVENING}
_DE_PERIOD_WORDS = {"morgens": PeriodHint.MORNING, "vormittags": PeriodHint.MORNING,
                    "mittags": PeriodHint.AFTERNOON, "nachmittags": PeriodHint.AFTERNOON,
                    "abends": PeriodHint.EVENING, "nachts": PeriodHint.NIGHT}

_EN_MINUTE_NOUNS = {"minutes", "minute"}
_DE_MINUTE_NOUNS = {"minuten", "minute"}


def _word(tokens: list[Token], i: int) -> Optional[str]:
    if 0 <= i < len(tokens) and tokens[i].is_word:
        return tokens[i].lowercased
    return None


def _surface(tokens: list[Token], i: int) -> str:
    return tokens[i].surface


def _is_magnitude_word(word: str, language: str) -> bool:
    if language == "de":
        return fold_german(word) in DE_MAGNITUDE_WORDS
    return word in EN_MAGNITUDE_WORDS


# --- cardinals ---------------------------------------------------------------


def _en_two_digit_span(tokens: list[Token], i: int) -> Optional[tuple[int, int]]:
    """Read 10..99 as one token or a tens + unit pair ("forty five")."""
    w = _word(tokens, i)
    if w is None:
        return None
    tens = en_tens(w)
    if tens is not None:
        nxt = _word(tokens, i + 1)
        unit = en_unit(nxt) if nxt else None
        if unit:
            return tens + unit, i + 2
        return tens, i + 1
    value = en_two_digit(w)
    if value is not None:
        return value, i + 1
    return None


def _en_sub_thousand(tokens: list[Token], i: int) -> Optional[tuple[int, int]]:
    w = _word(tokens, i)
    if w is None:
        return None
    unit = en_unit(w)
    if unit is not None and unit >= 1 and _word(tokens, i + 1) == "hundred":
        value, i = unit * 100, i + 2
        tail = _en_two_digit_span(tokens, i)
        if tail is None:
            nxt = _word(tokens, i)
            tail_unit = en_unit(nxt) if nxt else None
            if tail_unit:
                tail = (tail_unit, i + 1)
        if tail:
            value += tail[0]
            i = tail[1]
        return value, i
    two = _en_two_digit_span(tokens, i)
    if two is not None:
        return two
    if unit is not None:
        return unit, i + 1
    return None


def _en_integer(tokens: list[Token], at: int) -> Optional[tuple[int, int, Optional[tuple[int, str]]]]:
    """Parse an English integer cardinal.

    Returns (value, end, sole_magnitude) where sole_magnitude is
    (scale, surface) when the whole parse is one "<n> million/billion"
    group. A dangling or non-decreasing scale word makes the phrase
    malformed and the parse absent.
    """
    total = 0
    min_scale: Optional[int] = None
    scale_groups: list[int] = []
    last_scale_surface = ""
    bare_tail = False
    i = at
    while True:
        sub = _en_sub_thousand(tokens, i)
        if sub is None:
            break
        value, j = sub
        scale = en_scale(_word(tokens, j) or "")
        if scale is not None:
            if value == 0 or (min_scale is not None and scale >= min_scale):
                return None
            total += value * scale
            min_scale = scale
            scale_groups.append(scale)
            last_scale_surface = _surface(tokens, j)
            i = j + 1
            continue
        total += value
        bare_tail = True
        i = j
        break
    if i == at:
        return None
    if en_scale(_word(tokens, i) or "") is not None:
        return None
    sole = None
    if not bare_tail and len(scale_groups) == 1 and scale_groups[0] >= 1_000_000:
        sole = (scale_groups[0], last_scale_surface)
    return total, i, sole


def _en_pair_reading(tokens: list[Token], at: int) -> Optional[tuple[int, int, bool]]:
    """Two-digit-pair year forms; returns (value, end, true_pair_flag)."""
    w = _word(tokens, at)
    if w is None:
        return None
    first = en_two_digit(w)
    if first is None or not 11 <= first <= 20:
        return None
    nxt = _word(tokens, at + 1)
    if nxt is None:
        return None
    if nxt == "hundred":
        # "nineteen hundred [forty-five]" is a compact cardinal, not a
        # pair split, so year classification still needs a context cue.
        value, end = first * 100, at + 2
        tail = _en_two_digit_span(tokens, end)
        if tail is None:
            unit = en_unit(_word(tokens, end) or "")
            if unit:
                tail = (unit, end + 1)
        if tail:
            value += tail[0]
            end = tail[1]
        return value, end, False
    if nxt == "oh":
        unit = en_unit(_word(tokens, at + 2) or "")
        if unit:
            return first * 100 + unit, at + 3, True
        return None
    second = _en_two_digit_span(tokens, at + 1)
    if second is not None:
        return first * 100 + second[0], second[1], True
    return None


def _de_pair_style(tokens: list[Token], at: int, value: int, end: int) -> bool:
    """Paired year compounds ("neunzehnhundertfünfundvierzig").

    The plain cardinal for 1100..1999 goes through "tausend"; a hundert
    compound with a nonzero tail is the year reading. Round hundreds
    ("elfhundert") stay count-like and need a context cue.
    """
    if end != at + 1 or not 1100 <= value <= 1999 or value % 100 == 0:
        return False
    return "tausend" not in fold_german(_word(tokens, at) or "")


def _de_integer(tokens: list[Token], at: int) -> Optional[tuple[int, int, Optional[tuple[int, str]]]]:
    """Parse a German integer cardinal across magnitude-noun groups."""
    total = 0
    min_scale: Optional[int] = None
    scale_groups: list[int] = []
    last_scale_surface = ""
    bare_tail = False
    i = at
    while True:
        w = _word(tokens, i)
        if w is None:
            break
        value = parse_de_compound(w)
        if value is None:
            break
        mag = DE_MAGNITUDE_WORDS.get(fold_german(_word(tokens, i + 1) or ""))
        if mag is not None:
            if value == 0 or value > 999:
                return None
            if min_scale is not None and mag >= min_scale:
                return None
            total += value * mag
            min_scale = mag
            scale_groups.append(mag)
            last_scale_surface = _surface(tokens, i + 1)
            i += 2
            continue
        total += value
        bare_tail = True
        i += 1
        break
    if i == at:
        return None
    if fold_german(_word(tokens, i) or "") in DE_MAGNITUDE_WORDS:
        return None
    sole = None
    if not bare_tail and len(scale_groups) == 1:
        sole = (scale_groups[0], last_scale_surface)
    return total, i, sole


def _decimal_digits(tokens: list[Token], i: int, language: str) -> Optional[tuple[int, int, int]]:
    """Read up to MAX_SCALE individually spoken digits after the point."""
    value = 0
    count = 0
    while count < MAX_SCALE:
        w = _word(tokens, i)
        if w is None:
            break
        digit = digit_word_value(w, language)
        if digit is None:
            break
        value = value * 10 + digit
        count += 1
        i += 1
    if count == 0:
        return None
    return value, count, i


def parse_cardinal(tokens: list[Token], at: int, locale: Locale) -> Optional[CandidateParse]:
    """Longest cardinal (integer or decimal) starting at token ``at``."""
    language = locale.language
    point_word = "komma" if language == "de" else "point"
    candidates: list[CandidateParse] = []

    de_pair = False
    if language == "de":
        integer = _de_integer(tokens, at)
        pair = None
        if integer is not None and integer[2] is None:
            de_pair = _de_pair_style(tokens, at, integer[0], integer[1])
    else:
        integer = _en_integer(tokens, at)
        pair = _en_pair_reading(tokens, at)

    if integer is not None:
        value, end, sole = integer
        if sole is not None:
            scale, word = sole
            candidates.append(CandidateParse(
                Span(at, end), ParseKind.CARDINAL,
                NumericValue(value // scale), magnitude_word=word))
        else:
            decimal = None
            if fold_german(_word(tokens, end) or "") == point_word:
                frac = _decimal_digits(tokens, end + 1, language)
                if frac is not None:
                    frac_value, ndigits, frac_end = frac
                    mantissa = value * 10**ndigits + frac_value
                    if mantissa <= MAX_MANTISSA:
                        magnitude = None
                        trailer = _word(tokens, frac_end)
                        if trailer is not None and _is_magnitude_word(trailer, language):
                            magnitude = _surface(tokens, frac_end)
                            frac_end += 1
                        decimal = CandidateParse(
                            Span(at, frac_end), ParseKind.CARDINAL,
                            NumericValue(mantissa, ndigits), magnitude)
            if decimal is not None:
                candidates.append(decimal)
            else:
                candidates.append(CandidateParse(
                    Span(at, end), ParseKind.CARDINAL, NumericValue(value),
                    pair_reading=de_pair))

    if pair is not None:
        pair_value, pair_end, pair_flag = pair
        candidates.append(CandidateParse(
            Span(at, pair_end), ParseKind.CARDINAL, NumericValue(pair_value),
            pair_reading=pair_flag))

    if not candidates:
        return None
    return max(candidates, key=lambda c: len(c.span))


# --- clock phrases -----------------------------------------------------------


def _ampm_hint(word: Optional[str]) -> Optional[PeriodHint]:
    if word is None:
        return None
    stripped = word.replace(".", "")
    if stripped == "am":
        return PeriodHint.EXPLICIT_AM
    if stripped == "pm":
        return PeriodHint.EXPLICIT_PM
    return None


def _en_hour_word(tokens: list[Token], i: int) -> Optional[int]:
    # Word hours run to 23 ("nineteen forty-five"); the 12-hour idioms
    # re-check their own bound.
    w = _word(tokens, i)
    if w is None:
        return None
    value = en_unit(w)
    if value is None:
        value = en_two_digit(w)
    if value is not None:
        return value if 1 <= value <= 23 else None
    m = _DIGIT_HOUR_RE.match(w)
    if m and int(m.group(1)) <= 23:
        return int(m.group(1))
    return None


def _de_hour_word(tokens: list[Token], i: int, *, allow_digits: bool = True,
                  high: bool = True) -> Optional[int]:
    w = _word(tokens, i)
    if w is None:
        return None
    value = parse_de_compound(w)
    if value is not None:
        return value if 0 <= value <= (23 if high else 12) else None
    if allow_digits:
        m = _DIGIT_HOUR_RE.match(w)
        if m and int(m.group(1)) <= 23:
            return int(m.group(1))
    return None


def _en_minute_words(tokens: list[Token], i: int) -> Optional[tuple[int, int]]:
    w = _word(tokens, i)
    if w is None:
        return None
    if w == "oh":
        unit = en_unit(_word(tokens, i + 1) or "")
        if unit:
            return unit, i + 2
        return None
    two = _en_two_digit_span(tokens, i)
    if two is not None and two[0] <= 59:
        return two
    return None


def _relative_minutes(tokens: list[Token], at: int, locale: Locale) -> Optional[tuple[int, int]]:
    """Leading minute count of "M [minutes] past/to H"; returns (M, end)."""
    cardinal = parse_cardinal(tokens, at, locale)
    if cardinal is None or cardinal.magnitude_word or cardinal.pair_reading:
        return None
    value = cardinal.value
    if not value.is_integer or not 1 <= value.mantissa <= 59:
        return None
    end = cardinal.span.end
    nouns = _DE_MINUTE_NOUNS if locale.language == "de" else _EN_MINUTE_NOUNS
    if fold_german(_word(tokens, end) or "") in nouns:
        return value.mantissa, end + 1
    if value.mantissa <= 29:
        # Bare counts ("five past seven") are idiomatic up to 29.
        return value.mantissa, end
    return None


def _period_lookahead(tokens: list[Token], i: int, language: str) -> Optional[PeriodHint]:
    if language == "de":
        return _DE_PERIOD_WORDS.get(fold_german(_word(tokens, i) or ""))
    if _word(tokens, i) == "at" and _word(tokens, i + 1) == "night":
        return PeriodHint.NIGHT
    if _word(tokens, i) == "in" and _word(tokens, i + 1) == "the":
        return _EN_PERIOD_WORDS.get(_word(tokens, i + 2) or "")
    return None


def _clock_candidate(tokens: list[Token], at: int, end: int, hour: int,
                     minute: int, hint: Optional[PeriodHint],
                     language: str) -> CandidateParse:
    if hint is None:
        hint = _period_lookahead(tokens, end, language) or PeriodHint.UNSPECIFIED
    return CandidateParse(Span(at, end), ParseKind.CLOCK,
                          TimeOfDay(hour, minute, hint))


def _wrap_back(hour: int, language: str) -> int:
    # "quarter to one": EN keeps the 12-hour face, DE wraps to 0.
    if hour == 0:
        return 12 if language == "en" else 0
    return hour


def _parse_clock_en(tokens: list[Token], at: int, locale: Locale) -> list[CandidateParse]:
    out: list[CandidateParse] = []
    w = _word(tokens, at)
    if w is None:
        return out

    m = _DIGIT_HOUR_AMPM_RE.match(w)
    if m and int(m.group(1)) <= 23:
        out.append(_clock_candidate(tokens, at, at + 1, int(m.group(1)), 0,
                                    _ampm_hint(m.group(2)), "en"))
    m = _DIGIT_TIME_AMPM_RE.match(w)
    if m and int(m.group(1)) <= 23:
        out.append(_clock_candidate(tokens, at, at + 1, int(m.group(1)),
                                    int(m.group(2)), _ampm_hint(m.group(3)), "en"))
    m = _DIGIT_TIME_RE.match(w)
    if m and int(m.group(1)) <= 23:
        hint = _ampm_hint(_word(tokens, at + 1))
        if hint is not None:
            out.append(_clock_candidate(tokens, at, at + 2, int(m.group(1)),
                                        int(m.group(2)), hint, "en"))

    def with_trailing_ampm(end: int, hour: int, minute: int) -> None:
        hint = _ampm_hint(_word(tokens, end))
        if hint is not None:
            out.append(_clock_candidate(tokens, at, end + 1, hour, minute, hint, "en"))
        else:
            out.append(_clock_candidate(tokens, at, end, hour, minute, None, "en"))

    if w == "quarter" and _word(tokens, at + 1) in ("past", "to"):
        hour = _en_hour_word(tokens, at + 2)
        if hour is not None and hour <= 12:
            if _word(tokens, at + 1) == "past":
                with_trailing_ampm(at + 3, hour, 15)
            else:
                with_trailing_ampm(at + 3, _wrap_back(hour - 1, "en"), 45)
    if w == "half" and _word(tokens, at + 1) == "past":
        hour = _en_hour_word(tokens, at + 2)
        if hour is not None and hour <= 12:
            with_trailing_ampm(at + 3, hour, 30)

    rel = _relative_minutes(tokens, at, locale)
    if rel is not None:
        minutes, i = rel
        direction = _word(tokens, i)
        if direction in ("past", "to"):
            hour = _en_hour_word(tokens, i + 1)
            if hour is not None and hour <= 12:
                if direction == "past":
                    with_trailing_ampm(i + 2, hour, minutes)
                elif minutes < 60:
                    with_trailing_ampm(i + 2, _wrap_back(hour - 1, "en"), 60 - minutes)

    hour = _en_hour_word(tokens, at)
    if hour is not None:
        if _word(tokens, at + 1) == "o'clock":
            with_trailing_ampm(at + 2, hour, 0)
        hint = _ampm_hint(_word(tokens, at + 1))
        if hint is not None:
            out.append(_clock_candidate(tokens, at, at + 2, hour, 0, hint, "en"))
        minutes = _en_minute_words(tokens, at + 1)
        if minutes is not None:
            hint = _ampm_hint(_word(tokens, minutes[1]))
            if hint is not None:
                out.append(_clock_candidate(tokens, at, minutes[1] + 1, hour,
                                            minutes[0], hint, "en"))
            elif _period_lookahead(tokens, minutes[1], "en") is not None:
                # Bare hour-minute pairs need a period phrase to outrank
                # the year reading ("nineteen forty-five in the evening").
                out.append(_clock_candidate(tokens, at, minutes[1], hour,
                                            minutes[0], None, "en"))
    return out


def _parse_clock_de(tokens: list[Token], at: int, locale: Locale) -> list[CandidateParse]:
    out: list[CandidateParse] = []
    w = _word(tokens, at)
    if w is None:
        return out
    folded = fold_german(w)

    hour = _de_hour_word(tokens, at)
    if hour is not None and fold_german(_word(tokens, at + 1) or "") == "uhr":
        i = at + 2
        out.append(_clock_candidate(tokens, at, i, hour, 0, None, "de"))
        nxt = _word(tokens, i)
        minute = parse_de_compound(nxt) if nxt else None
        if minute is None and nxt and nxt.isdigit() and len(nxt) <= 2:
            minute = int(nxt)
        if minute is not None and 0 <= minute <= 59:
            out.append(_clock_candidate(tokens, at, i + 1, hour, minute, None, "de"))

    m = _DIGIT_TIME_RE.match(w)
    if m and int(m.group(1)) <= 23 and fold_german(_word(tokens, at + 1) or "") == "uhr":
        # "15.45 Uhr" or "15:45 Uhr": reformat and drop the Uhr token.
        out.append(_clock_candidate(tokens, at, at + 2, int(m.group(1)),
                                    int(m.group(2)), None, "de"))

    if folded == "viertel":
        direction = fold_german(_word(tokens, at + 1) or "")
        if direction in ("nach", "vor"):
            hour = _de_hour_word(tokens, at + 2, allow_digits=False, high=False)
            if hour is not None and hour >= 1:
                if direction == "nach":
                    out.append(_clock_candidate(tokens, at, at + 3, hour, 15, None, "de"))
                else:
                    out.append(_clock_candidate(tokens, at, at + 3,
                                                _wrap_back(hour - 1, "de"), 45, None, "de"))
    if folded == "halb":
        hour = _de_hour_word(tokens, at + 1, allow_digits=False, high=False)
        if hour is not None and hour >= 1:
            out.append(_clock_candidate(tokens, at, at + 2,
                                        _wrap_back(hour - 1, "de"), 30, None, "de"))

    rel = _relative_minutes(tokens, at, locale)
    if rel is not None:
        minutes, i = rel
        direction = fold_german(_word(tokens, i) or "")
        if direction in ("nach", "vor"):
            hour = _de_hour_word(tokens, i + 1, allow_digits=False, high=False)
            if hour is not None and hour >= 1:
                if direction == "nach":
                    out.append(_clock_candidate(tokens, at, i + 2, hour, minutes, None, "de"))
                elif minutes < 60:
                    out.append(_clock_candidate(tokens, at, i + 2,
                                                _wrap_back(hour - 1, "de"),
                                                60 - minutes, None, "de"))
    return out


def parse_clock_phrase(tokens: list[Token], at: int, locale: Locale) -> Optional[CandidateParse]:
    """Longest spoken clock-time phrase starting at token ``at``."""
    if locale.language == "de":
        candidates = _parse_clock_de(tokens, at, locale)
    else:
        candidates = _parse_clock_en(tokens, at, locale)
    if not candidates:
        return None
    return max(candidates, key=lambda c: len(c.span))


# --- currency phrases --------------------------------------------------------


def parse_currency_phrase(tokens: list[Token], at: int, locale: Locale) -> Optional[CandidateParse]:
    """Currency amount phrase: "<amount> <unit> [and <cents> cents]"."""
    language = locale.language
    cardinal = parse_cardinal(tokens, at, locale)
    if cardinal is None:
        return None
    value = cardinal.value
    i = cardinal.span.end
    unit = _word(tokens, i)
    if unit is None:
        return None
    if language == "de":
        unit = fold_german(unit)

    if unit in MINOR_UNIT_WORDS:
        # Cents-only amount ("fifty cents" -> $0.50).
        if cardinal.magnitude_word or not value.is_integer or value.mantissa >= 100:
            return None
        money = MoneyParse(NumericValue(0), value, _surface(tokens, i))
        return CandidateParse(Span(at, i + 1), ParseKind.CURRENCY, money)

    if unit not in CURRENCY_WORDS[language]:
        return None
    if cardinal.magnitude_word is None and value.scale > 2:
        return None
    end = i + 1
    minor: Optional[NumericValue] = None
    conj = "und" if language == "de" else "and"
    if cardinal.magnitude_word is None and value.is_integer and _word(tokens, end) == conj:
        tail = parse_cardinal(tokens, end + 1, locale)
        if tail is not None and tail.magnitude_word is None and tail.value.is_integer:
            after = tail.span.end
            tail_unit = _word(tokens, after) or ""
            if language == "de":
                tail_unit = fold_german(tail_unit)
            if tail_unit in MINOR_UNIT_WORDS:
                if tail.value.mantissa >= 100:
                    return None
                minor = tail.value
                end = after + 1
    money = MoneyParse(value, minor, _surface(tokens, i))
    return CandidateParse(Span(at, end), ParseKind.CURRENCY, money,
                          magnitude_word=cardinal.magnitude_word)


# --- sentence scan -----------------------------------------------------------


def scan_tokens(tokens: list[Token], locale: Locale) -> list[CandidateParse]:
    """Non-overlapping candidates, longest match, left to right.

    Ties on span length prefer currency over clock over cardinal.
    """
    out: list[CandidateParse] = []
    i = 0
    n = len(tokens)
    while i < n:
        best: Optional[CandidateParse] = None
        for parser in (parse_currency_phrase, parse_clock_phrase, parse_cardinal):
            candidate = parser(tokens, i, locale)
            if candidate is not None and (best is None or len(candidate.span) > len(best.span)):
                best = candidate
        if best is not None:
            out.append(best)
            i = best.span.end
        else:
            i += 1
    return out


def scan_sentence(sentence: str, locale: Locale) -> list[CandidateParse]:
    return scan_tokens(tokenize(sentence), locale)
