"""Line-oriented command line front end.

Data goes to standard output, diagnostics to standard error. Exit codes:
0 success, 1 operational error, 2 misaligned inputs.
"""

from __future__ import annotations

import argparse
import random
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import IO, Iterator, Optional

from .datagen import (
    DEFAULT_VOICES,
    GenerationError,
    GenerationPlan,
    MockSpeechSynthesizer,
    RuleBasedTextGenerator,
    SplitSpec,
    corpus_statistics,
    run_generation,
    split_disjoint,
)
from .evaluate import EvalItem, evaluate, render_report
from .extract import extract_numeric_literals
from .locales import DEFAULT_CONFIG, LocaleConfig, load_locale_config
from .manifest import iter_manifest, read_manifest, write_manifest
from .pipeline import normalize_text
from .types import ExpressionType
from .verbalize import verbalize_line
from .wer import GuardConfig, guard


class MisalignedInputs(RuntimeError):
    pass


_SENTINEL = object()


def _config(args: argparse.Namespace) -> LocaleConfig:
    if getattr(args, "config", None):
        return load_locale_config(args.config)
    return DEFAULT_CONFIG


@contextmanager
def _open_in(path: Optional[str]) -> Iterator[IO[str]]:
    if path in (None, "-"):
        yield sys.stdin
    else:
        with open(path, encoding="utf-8") as handle:
            yield handle


@contextmanager
def _open_out(path: Optional[str]) -> Iterator[IO[str]]:
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as handle:
            yield handle


def _stripped(handle: IO[str]) -> Iterator[str]:
    for line in handle:
        yield line.rstrip("\n")


def _cmd_normalize(args: argparse.Namespace) -> int:
    cfg = _config(args)
    locale = cfg.locale(args.locale)
    with _open_in(args.input) as src, _open_out(args.output) as dst:
        for line in _stripped(src):
            dst.write(normalize_text(line, locale, cfg.currencies) + "\n")
    return 0


def _cmd_verbalize(args: argparse.Namespace) -> int:
    cfg = _config(args)
    locale = cfg.locale(args.locale)
    rng = random.Random(args.seed)
    with _open_in(args.input) as src, _open_out(args.output) as dst:
        for line in _stripped(src):
            dst.write(verbalize_line(line, locale, rng, cfg.currencies) + "\n")
    return 0


def _cmd_extract(args: argparse.Namespace) -> int:
    cfg = _config(args)
    locale = cfg.locale(args.locale)
    with _open_in(args.input) as src, _open_out(args.output) as dst:
        for line_no, line in enumerate(_stripped(src), start=1):
            for lit in extract_numeric_literals(line, locale, cfg.currencies):
                dst.write(f"{line_no}\t{lit.guessed_type.value}\t{lit.text}\n")
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    cfg = _config(args)
    records = iter_manifest(args.manifest)
    with _open_in(args.hypotheses) as handle:
        hyp_lines = _stripped(handle)

        def items() -> Iterator[EvalItem]:
            for record in records:
                line = next(hyp_lines, _SENTINEL)
                if line is _SENTINEL:
                    raise MisalignedInputs(
                        "hypothesis file has fewer lines than the manifest")
                hypothesis = line
                if args.normalize_before_wer:
                    hypothesis = normalize_text(
                        hypothesis, cfg.locale(record.locale), cfg.currencies)
                expected = tuple((surface, ExpressionType(expr_type))
                                 for surface, expr_type in record.expressions)
                yield EvalItem(record.formatted, hypothesis, expected)
            if next(hyp_lines, _SENTINEL) is not _SENTINEL:
                raise MisalignedInputs(
                    "hypothesis file has more lines than the manifest")

        report = evaluate(items())
    print(render_report(report, args.format))
    return 0


def _cmd_guard(args: argparse.Namespace) -> int:
    config = GuardConfig(args.threshold)
    with _open_in(args.source) as src, _open_in(args.rewritten) as rew:
        source_lines = _stripped(src)
        rewritten_lines = _stripped(rew)
        for line_no, source in enumerate(source_lines, start=1):
            rewritten = next(rewritten_lines, _SENTINEL)
            if rewritten is _SENTINEL:
                raise MisalignedInputs("rewritten file has fewer lines than source")
            decision = guard(source, rewritten, config)
            print(decision.text)
            verdict = "kept" if decision.kept else "reverted"
            print(f"line {line_no}: {verdict} wer={decision.wer:.3f}",
                  file=sys.stderr)
        if next(rewritten_lines, _SENTINEL) is not _SENTINEL:
            raise MisalignedInputs("rewritten file has more lines than source")
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    cfg = _config(args)
    locale = cfg.locale(args.locale)
    counts = {
        ExpressionType.YEAR: args.years,
        ExpressionType.TIMESTAMP: args.timestamps,
        ExpressionType.CURRENCY: args.currencies,
        ExpressionType.QUANTITY: args.quantities,
    }
    plan = GenerationPlan(
        locale=locale,
        counts={t: n for t, n in counts.items() if n},
        sweep_timestamp_phrasings=args.sweep_timestamps,
        batch_size=args.batch_size,
        voices=tuple(args.voices.split(",")) if args.voices else DEFAULT_VOICES,
        seed=args.seed,
    )
    textgen = RuleBasedTextGenerator(locale, args.seed)
    synthesizer = MockSpeechSynthesizer()
    records, stats = run_generation(plan, textgen, synthesizer)
    if args.out:
        write_manifest(records, args.out)
    else:
        for record in records:
            print(record.to_json())
    print(f"prompts={stats.prompts_issued} sentences={stats.sentences_generated} "
          f"accepted={stats.accepted} discarded={stats.discarded} "
          f"failures={len(stats.failures)}", file=sys.stderr)
    for failure in stats.failures:
        print(f"failure: {failure}", file=sys.stderr)
    return 0


def _cmd_split(args: argparse.Namespace) -> int:
    records = read_manifest(args.manifest)
    spec = SplitSpec(args.train, args.dev, args.test, args.seed)
    train, dev, test = split_disjoint(records, spec)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    named = {"train": train, "dev": dev, "test": test}
    for name, part in named.items():
        write_manifest(part, out_dir / f"{name}.jsonl")
    print(corpus_statistics(named), file=sys.stderr)
    return 0


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="numitn",
        description="Normalize, verbalize and evaluate numeric expressions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_locale(p: argparse.ArgumentParser) -> None:
        p.add_argument("--locale", choices=("en", "de"), required=True)
        p.add_argument("--config", help="JSON file overriding locale conventions")

    p = sub.add_parser("normalize", help="number words to numeric literals")
    add_locale(p)
    p.add_argument("input", nargs="?", help="input file, default stdin")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("verbalize", help="numeric literals to number words")
    add_locale(p)
    p.add_argument("input", nargs="?")
    p.add_argument("-o", "--output")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verbalize)

    p = sub.add_parser("extract", help="list formatted literals per line")
    add_locale(p)
    p.add_argument("input", nargs="?")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("eval", help="score hypotheses against a manifest")
    p.add_argument("--manifest", required=True)
    p.add_argument("--hypotheses", required=True)
    p.add_argument("--format", choices=("table", "tsv"), default="table")
    p.add_argument("--normalize-before-wer", action="store_true")
    p.add_argument("--config")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("guard", help="revert rewrites that drift too far")
    p.add_argument("source")
    p.add_argument("rewritten")
    p.add_argument("--threshold", type=float, default=0.5)
    p.set_defaults(func=_cmd_guard)

    p = sub.add_parser("gen", help="generate a synthetic corpus manifest")
    add_locale(p)
    p.add_argument("--years", type=int, default=0)
    p.add_argument("--timestamps", type=int, default=0)
    p.add_argument("--currencies", type=int, default=0)
    p.add_argument("--quantities", type=int, default=0)
    p.add_argument("--sweep-timestamps", action="store_true",
                   help="one sentence per timestamp phrase family and hour")
    p.add_argument("--batch-size", type=int, default=5)
    p.add_argument("--voices", help="comma-separated voice names")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="manifest path, default stdout")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("split", help="pairwise-disjoint train/dev/test split")
    p.add_argument("--manifest", required=True)
    p.add_argument("--train", type=float, default=0.7)
    p.add_argument("--dev", type=float, default=0.1)
    p.add_argument("--test", type=float, default=0.2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=_cmd_split)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except MisalignedInputs as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (OSError, ValueError, GenerationError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
