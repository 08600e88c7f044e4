import pytest
from hypothesis import given, settings, strategies as st

from numitn.grammar import (
    parse_cardinal,
    parse_clock_phrase,
    parse_currency_phrase,
    scan_sentence,
    scan_tokens,
)
from numitn.lexicon import verbalize_cardinal
from numitn.locales import get_locale
from numitn.tokenizer import tokenize
from numitn.types import MoneyParse, NumericValue, ParseKind, PeriodHint

EN = get_locale("en")
DE = get_locale("de")


def cardinal(text, locale):
    return parse_cardinal(tokenize(text), 0, locale)


def clock(text, locale):
    return parse_clock_phrase(tokenize(text), 0, locale)


def money(text, locale):
    return parse_currency_phrase(tokenize(text), 0, locale)


class TestEnglishCardinals:
    @pytest.mark.parametrize("text,value,end", [
        ("zero", 0, 1),
        ("seventeen", 17, 1),
        ("forty-five", 45, 1),
        ("forty five", 45, 2),
        ("two hundred", 200, 2),
        ("two hundred eight", 208, 3),
        ("nine hundred ninety nine", 999, 4),
        ("one thousand nine hundred forty-five", 1945, 5),
        ("twelve thousand", 12000, 2),
        ("two million three thousand one", 2003001, 5),
    ])
    def test_integers(self, text, value, end):
        c = cardinal(text, EN)
        assert c is not None
        assert c.value == NumericValue(value)
        assert c.span.end == end
        assert c.magnitude_word is None

    def test_pair_reading(self):
        c = cardinal("nineteen forty-five", EN)
        assert c.value == NumericValue(1945)
        assert c.pair_reading

    def test_pair_oh(self):
        c = cardinal("nineteen oh five", EN)
        assert c.value == NumericValue(1905)
        assert c.pair_reading

    def test_pair_twenty_twenty_five(self):
        c = cardinal("twenty twenty-five", EN)
        assert c.value == NumericValue(2025)
        assert c.pair_reading

    def test_hundred_form_is_not_a_pair(self):
        c = cardinal("nineteen hundred forty-five", EN)
        assert c.value == NumericValue(1945)
        assert not c.pair_reading

    def test_no_pair_below_eleven(self):
        c = cardinal("five three", EN)
        assert c.value == NumericValue(5)
        assert c.span.end == 1

    def test_decimal(self):
        c = cardinal("nine point one", EN)
        assert c.value == NumericValue(91, 1)

    def test_decimal_keeps_leading_zero_digits(self):
        c = cardinal("one point oh five", EN)
        assert c.value == NumericValue(105, 2)

    def test_terminal_magnitude_single_group(self):
        c = cardinal("nine million", EN)
        assert c.value == NumericValue(9)
        assert c.magnitude_word == "million"

    def test_decimal_magnitude(self):
        c = cardinal("nine point one million", EN)
        assert c.value == NumericValue(91, 1)
        assert c.magnitude_word == "million"

    def test_multi_group_magnitude_is_expanded(self):
        c = cardinal("two million three thousand", EN)
        assert c.value == NumericValue(2003000)
        assert c.magnitude_word is None

    @pytest.mark.parametrize("text", [
        "two thousand million thousand",
        "two thousand thousand",
        "three million billion",
    ])
    def test_malformed_scale_chains_absent(self, text):
        assert cardinal(text, EN) is None

    def test_dangling_scale_word_absent(self):
        # A scale word with no leading count never starts a parse either.
        assert cardinal("thousand pieces", EN) is None


class TestGermanCardinals:
    @pytest.mark.parametrize("text,value,end", [
        ("fünfundvierzig", 45, 1),
        ("neunzehnhundertfünfundvierzig", 1945, 1),
        ("zweitausend", 2000, 1),
        ("zwei Millionen", 2, 2),
        ("eine Million", 1, 2),
        ("zwei Millionen dreitausend", 2003000, 3),
        ("neun Komma eins", 91, 3),
    ])
    def test_values(self, text, value, end):
        c = cardinal(text, DE)
        assert c is not None
        assert c.span.end == end
        if c.magnitude_word:
            assert c.value.mantissa == value
        else:
            assert c.value in (NumericValue(value), NumericValue(value, 1))

    def test_terminal_magnitude(self):
        c = cardinal("neun Komma eins Millionen", DE)
        assert c.value == NumericValue(91, 1)
        assert c.magnitude_word == "Millionen"

    def test_magnitude_chain_expanded(self):
        c = cardinal("zwei Milliarden drei Millionen", DE)
        assert c.value == NumericValue(2_003_000_000)
        assert c.magnitude_word is None

    def test_non_decreasing_magnitudes_absent(self):
        assert cardinal("zwei Millionen drei Milliarden", DE) is None

    def test_hundert_compound_with_tail_is_a_pair(self):
        assert cardinal("neunzehnhundertfünfundvierzig", DE).pair_reading
        assert cardinal("neunzehnhundertfünf", DE).pair_reading

    @pytest.mark.parametrize("text", [
        "elfhundert",             # round hundreds stay count-like
        "eintausendneunhundertfünfundvierzig",  # tausend form is plain
        "zweitausend",
    ])
    def test_non_pair_compounds(self, text):
        assert not cardinal(text, DE).pair_reading


class TestEnglishClock:
    @pytest.mark.parametrize("text,hour,minute,hint", [
        ("ten o'clock", 10, 0, PeriodHint.UNSPECIFIED),
        ("quarter past one", 1, 15, PeriodHint.UNSPECIFIED),
        ("half past twelve", 12, 30, PeriodHint.UNSPECIFIED),
        ("quarter to eight", 7, 45, PeriodHint.UNSPECIFIED),
        ("quarter to one", 12, 45, PeriodHint.UNSPECIFIED),
        ("five past seven", 7, 5, PeriodHint.UNSPECIFIED),
        ("twenty-five to ten", 9, 35, PeriodHint.UNSPECIFIED),
        ("thirty-five minutes past two", 2, 35, PeriodHint.UNSPECIFIED),
        ("seven forty-five pm", 7, 45, PeriodHint.EXPLICIT_PM),
        ("nine oh five am", 9, 5, PeriodHint.EXPLICIT_AM),
        # Meridiem forms stay as spoken here; the 24h shift happens later.
        ("4pm", 4, 0, PeriodHint.EXPLICIT_PM),
        ("4:30pm", 4, 30, PeriodHint.EXPLICIT_PM),
        ("4:30 pm", 4, 30, PeriodHint.EXPLICIT_PM),
        ("10 o'clock", 10, 0, PeriodHint.UNSPECIFIED),
    ])
    def test_times(self, text, hour, minute, hint):
        c = clock(text, EN)
        assert c is not None, text
        t = c.value
        assert (t.hour, t.minute, t.period_hint) == (hour, minute, hint)

    def test_lookahead_period_is_not_consumed(self):
        tokens = tokenize("quarter to eight in the evening")
        c = parse_clock_phrase(tokens, 0, EN)
        assert c.value.period_hint == PeriodHint.EVENING
        assert c.span.end == 3

    def test_pair_time_needs_period_context(self):
        assert clock("nineteen forty-five", EN) is None
        c = clock("nineteen forty-five in the evening", EN)
        assert (c.value.hour, c.value.minute) == (19, 45)

    def test_at_night_lookahead(self):
        c = clock("eleven o'clock at night", EN)
        assert c.value.period_hint == PeriodHint.NIGHT

    def test_bare_minutes_to_is_rejected(self):
        # "forty to five" reads as a count, not a time.
        assert clock("forty to five", EN) is None

    def test_digit_time_without_meridiem_is_not_claimed(self):
        assert clock("19:45", EN) is None


class TestGermanClock:
    @pytest.mark.parametrize("text,hour,minute", [
        ("ein Uhr", 1, 0),
        ("dreizehn Uhr", 13, 0),
        ("neunzehn Uhr fünfundvierzig", 19, 45),
        ("null Uhr", 0, 0),
        ("15.45 Uhr", 15, 45),
        ("15:45 Uhr", 15, 45),
        ("viertel nach eins", 1, 15),
        ("viertel vor acht", 7, 45),
        ("viertel vor eins", 0, 45),
        ("halb zwei", 1, 30),
        ("halb eins", 0, 30),
        ("fünf nach sieben", 7, 5),
        ("zehn Minuten vor zwölf", 11, 50),
        ("13 Uhr 5", 13, 5),
    ])
    def test_times(self, text, hour, minute):
        c = clock(text, DE)
        assert c is not None, text
        assert (c.value.hour, c.value.minute) == (hour, minute)

    def test_uhr_token_is_consumed(self):
        tokens = tokenize("15.45 Uhr war es.")
        c = parse_clock_phrase(tokens, 0, DE)
        assert c.span.end == 2

    def test_period_adverb_lookahead(self):
        c = clock("viertel vor acht abends", DE)
        assert c.value.period_hint == PeriodHint.EVENING
        assert c.span.end == 3

    def test_am_is_not_a_meridiem_in_german(self):
        # "am" is a preposition; "acht am" must not become 8:00 AM.
        c = clock("acht am Morgen", DE)
        assert c is None

    def test_idiom_hours_are_words_only(self):
        assert clock("halb 2", DE) is None


class TestCurrency:
    def test_simple(self):
        c = money("fifty dollars", EN)
        assert c.value == MoneyParse(NumericValue(50), None, "dollars")

    def test_with_cents_tail(self):
        c = money("one thousand dollars and fifty cents", EN)
        assert c.value.major == NumericValue(1000)
        assert c.value.minor == NumericValue(50)
        assert c.span.end == 6

    def test_german_cents_tail(self):
        c = money("eintausend Euro und fünfzig Cent", DE)
        assert c.value.major == NumericValue(1000)
        assert c.value.minor == NumericValue(50)

    def test_cents_only(self):
        c = money("fifty cents", EN)
        assert c.value.major == NumericValue(0)
        assert c.value.minor == NumericValue(50)

    def test_cents_overflow_poisons_whole_parse(self):
        assert money("five dollars and two hundred cents", EN) is None

    def test_decimal_major_needs_magnitude(self):
        assert money("nine point one two three dollars", EN) is None

    def test_magnitude_currency(self):
        c = money("nine point one million dollars", EN)
        assert c.magnitude_word == "million"
        assert c.value.major == NumericValue(91, 1)

    def test_pound_word(self):
        c = money("two hundred pounds", EN)
        assert c.value.unit_word == "pounds"

    def test_not_a_currency_unit(self):
        assert money("fifty pieces", EN) is None


class TestScan:
    def test_priority_currency_over_year(self):
        cands = scan_sentence("nineteen forty-five dollars", EN)
        assert len(cands) == 1
        assert cands[0].kind == ParseKind.CURRENCY

    def test_clock_beats_pair_on_tie(self):
        cands = scan_sentence("nineteen forty-five in the evening", EN)
        assert cands[0].kind == ParseKind.CLOCK

    def test_multiple_candidates_in_order(self):
        cands = scan_sentence(
            "Pay fifty dollars at ten o'clock for two thousand pieces.", EN)
        kinds = [c.kind for c in cands]
        assert kinds == [ParseKind.CURRENCY, ParseKind.CLOCK, ParseKind.CARDINAL]
        starts = [c.span.start for c in cands]
        assert starts == sorted(starts)

    def test_no_overlap(self):
        for sentence in ("two quarter past three", "fünf halb zwei Uhr drei"):
            locale = DE if "halb" in sentence else EN
            cands = scan_tokens(tokenize(sentence), locale)
            for a, b in zip(cands, cands[1:]):
                assert a.span.end <= b.span.start


@settings(max_examples=300)
@given(st.integers(min_value=0, max_value=99_999_999),
       st.sampled_from(["en", "de"]))
def test_cardinal_round_trip(n, code):
    locale = EN if code == "en" else DE
    tokens = tokenize(verbalize_cardinal(n, code))
    c = parse_cardinal(tokens, 0, locale)
    assert c is not None
    assert c.span.end == len(tokens)
    if c.magnitude_word is None:
        assert c.value == NumericValue(n)
    else:
        # Terminal magnitudes stay compact: value times the named scale.
        scale = {"million": 10**6, "billion": 10**9,
                 "Million": 10**6, "Millionen": 10**6,
                 "Milliarde": 10**9, "Milliarden": 10**9}[c.magnitude_word]
        assert c.value.to_decimal() * scale == n
