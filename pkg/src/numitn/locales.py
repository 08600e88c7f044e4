"""Locale and currency presets plus configuration-file loading."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Union

_PLACEMENTS = ("prefix", "suffix")


@dataclass(frozen=True)
class Locale:
    language: str
    thousands_separator: str
    decimal_mark: str
    currency_placement: str

    def __post_init__(self) -> None:
        if self.thousands_separator == self.decimal_mark:
            raise ValueError("thousands separator and decimal mark must differ")
        if self.currency_placement not in _PLACEMENTS:
            raise ValueError(f"currency placement must be one of {_PLACEMENTS}")


@dataclass(frozen=True)
class CurrencyUnit:
    code: str
    symbol: str
    minor_unit_digits: int = 2

    def __post_init__(self) -> None:
        if self.minor_unit_digits < 0:
            raise ValueError("minor_unit_digits must be non-negative")


EN = Locale("en", thousands_separator=",", decimal_mark=".", currency_placement="prefix")
DE = Locale("de", thousands_separator=".", decimal_mark=",", currency_placement="suffix")

DEFAULT_LOCALES: dict[str, Locale] = {"en": EN, "de": DE}

DEFAULT_CURRENCIES: dict[str, CurrencyUnit] = {
    "USD": CurrencyUnit("USD", "$"),
    "EUR": CurrencyUnit("EUR", "€"),
    "GBP": CurrencyUnit("GBP", "£"),
}

# Spoken unit word (folded lowercase) -> currency code. "cent"/"cents" maps
# to the locale's default currency and is handled separately.
CURRENCY_WORDS: dict[str, dict[str, str]] = {
    "en": {"dollar": "USD", "dollars": "USD", "euro": "EUR", "euros": "EUR",
           "pound": "GBP", "pounds": "GBP"},
    "de": {"dollar": "USD", "euro": "EUR", "pfund": "GBP"},
}

MINOR_UNIT_WORDS = {"cent", "cents"}

DEFAULT_CURRENCY_CODE = {"en": "USD", "de": "EUR"}

# Spoken currency words for verbalization, keyed by (code, language).
CURRENCY_SPOKEN = {
    ("USD", "en"): ("dollar", "dollars"),
    ("EUR", "en"): ("euro", "euros"),
    ("GBP", "en"): ("pound", "pounds"),
    ("USD", "de"): ("Dollar", "Dollar"),
    ("EUR", "de"): ("Euro", "Euro"),
    ("GBP", "de"): ("Pfund", "Pfund"),
}


@dataclass(frozen=True)
class LocaleConfig:
    """Resolved locale/currency registry, possibly extended via a config file."""

    locales: dict[str, Locale]
    currencies: dict[str, CurrencyUnit]

    def locale(self, code: str) -> Locale:
        try:
            return self.locales[code]
        except KeyError:
            raise KeyError(f"unknown locale: {code!r}") from None

    def currency(self, code: str) -> CurrencyUnit:
        try:
            return self.currencies[code]
        except KeyError:
            raise KeyError(f"unknown currency: {code!r}") from None

    def currency_symbols(self) -> str:
        return "".join(unit.symbol for unit in self.currencies.values())


DEFAULT_CONFIG = LocaleConfig(dict(DEFAULT_LOCALES), dict(DEFAULT_CURRENCIES))


def load_locale_config(path: Union[str, Path]) -> LocaleConfig:
    """Read a JSON config with optional "locales" and "currencies" sections.

    File entries are merged over the built-in presets, e.g.::

        {"locales": {"en-in": {"language": "en", "thousands_separator": ",",
                               "decimal_mark": ".", "currency_placement": "prefix"}},
         "currencies": {"INR": {"symbol": "₹", "minor_unit_digits": 2}}}
    """
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(raw, dict):
        raise ValueError("locale config must be a JSON object")
    locales = dict(DEFAULT_LOCALES)
    for code, entry in raw.get("locales", {}).items():
        base = locales.get(code)
        locales[code] = Locale(
            language=entry.get("language", base.language if base else code),
            thousands_separator=entry.get(
                "thousands_separator", base.thousands_separator if base else ","),
            decimal_mark=entry.get("decimal_mark", base.decimal_mark if base else "."),
            currency_placement=entry.get(
                "currency_placement", base.currency_placement if base else "prefix"),
        )
    currencies = dict(DEFAULT_CURRENCIES)
    for code, entry in raw.get("currencies", {}).items():
        base_unit = currencies.get(code)
        currencies[code] = CurrencyUnit(
            code=code,
            symbol=entry.get("symbol", base_unit.symbol if base_unit else ""),
            minor_unit_digits=entry.get(
                "minor_unit_digits",
                base_unit.minor_unit_digits if base_unit else 2),
        )
    return LocaleConfig(locales, currencies)


def get_locale(code: str) -> Locale:
    return DEFAULT_CONFIG.locale(code)
