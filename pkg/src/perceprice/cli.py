"""Command-line entry point.

Grammar: perceprice <group> <command> [flags].  Groups: perception (identity
computations and solvers), replicate (survey tables and figures), corpus
(validation and export), serve (HTTP service).  Exit status 0 on success, 2
on usage errors, 1 on data or computation errors; diagnostics go to standard
error, payload to standard output or --out.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .corpus import (
    Corpus,
    EtaVariant,
    Mode,
    corpus_checksum,
    embedded_corpus,
    export_csv,
    load_csv,
)
from .errors import PercepriceError, UnsupportedFormat
from .identity import (
    DEFAULT_EPSILON,
    ElasticityPair,
    PricePair,
    SolveResult,
    assess,
    solve_actual_price,
    solve_income_elasticity,
    solve_price_elasticity,
    solve_reference_price,
)
from .reports import (
    OutputFormat,
    discrepancy_table,
    figure1,
    figure2,
    plot_payload,
    render,
    table1,
    table2,
    table3_4,
    table5_6,
    table_payload,
)
from .reports.model import format_number
from .statkit import LogTransformPolicy

_MODES = {"recomputed": Mode.RECOMPUTED, "as-published": Mode.AS_PUBLISHED}
_POLICIES = {
    "abs": LogTransformPolicy.ABS_LOG,
    "signed-log1p": LogTransformPolicy.SIGNED_LOG1P,
    "drop": LogTransformPolicy.DROP_NON_POSITIVE,
}
_VARIANTS = {
    "reconciled": EtaVariant.SIGN_RECONCILED,
    "as-printed": EtaVariant.AS_PRINTED,
}
_FORMATS = {
    "text": OutputFormat.PLAIN_TEXT,
    "csv": OutputFormat.DELIMITED_VALUES,
    "json": OutputFormat.STRUCTURED_DATA,
    "svg": OutputFormat.VECTOR_GRAPHIC,
}


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--corpus",
        metavar="embedded|PATH",
        default=None,
        help="corpus source; defaults to $PERCEPRICE_CORPUS or the embedded rows",
    )
    parser.add_argument("--mode", choices=sorted(_MODES), default="recomputed")
    parser.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    parser.add_argument("--log-policy", choices=sorted(_POLICIES), default="abs")
    parser.add_argument(
        "--eta-variant",
        choices=sorted(_VARIANTS),
        default="reconciled",
        help="income-elasticity column: sign-reconciled or exactly as stored",
    )
    parser.add_argument("--format", choices=("text", "csv", "json", "svg"), default="text")
    parser.add_argument("--out", metavar="PATH", default=None)
    parser.add_argument(
        "--strict-paper",
        action="store_true",
        help="reproduce the published cells verbatim instead of recomputing",
    )


def _elasticity_flags(parser: argparse.ArgumentParser, eta_p: bool, eta_i: bool) -> None:
    if eta_p:
        parser.add_argument("--eta-p", type=float, required=True)
    if eta_i:
        parser.add_argument("--eta-i", type=float, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perceprice",
        description="Price-perception analysis from price and income elasticities.",
    )
    groups = parser.add_subparsers(dest="group", required=True, metavar="group")

    perception = groups.add_parser("perception", help="identity computations and solvers")
    commands = perception.add_subparsers(dest="command", required=True, metavar="command")

    error_cmd = commands.add_parser("error", help="perception error and classification")
    _elasticity_flags(error_cmd, True, True)
    error_cmd.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)

    classify_cmd = commands.add_parser("classify", help="classification only")
    _elasticity_flags(classify_cmd, True, True)
    classify_cmd.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)

    solve_price = commands.add_parser("solve-price", help="actual price from the rest")
    solve_price.add_argument("--pr", type=float, required=True, help="reference price")
    _elasticity_flags(solve_price, True, True)

    solve_reference = commands.add_parser(
        "solve-reference", help="reference price from the rest"
    )
    solve_reference.add_argument("--pa", type=float, required=True, help="actual price")
    _elasticity_flags(solve_reference, True, True)

    solve_eta_p = commands.add_parser("solve-eta-p", help="price elasticity from prices")
    solve_eta_p.add_argument("--pa", type=float, required=True)
    solve_eta_p.add_argument("--pr", type=float, required=True)
    _elasticity_flags(solve_eta_p, False, True)

    solve_eta_i = commands.add_parser("solve-eta-i", help="income elasticity from prices")
    solve_eta_i.add_argument("--pa", type=float, required=True)
    solve_eta_i.add_argument("--pr", type=float, required=True)
    _elasticity_flags(solve_eta_i, True, False)

    replicate = groups.add_parser("replicate", help="survey tables and figures")
    replicate.add_argument(
        "artifact",
        choices=(
            "table1",
            "table2",
            "table3",
            "table4",
            "table5",
            "table6",
            "figure1",
            "figure2",
            "all",
            "discrepancies",
        ),
    )
    _add_common_flags(replicate)
    replicate.add_argument("--bin-width", type=float, default=1.0)
    replicate.add_argument("--anchor", type=float, default=0.0)
    replicate.add_argument(
        "--dependent",
        choices=("log", "raw"),
        default="log",
        help="transform of the ratio in the log regressions",
    )
    replicate.add_argument("--no-curve", action="store_true", help="omit the fitted curve")

    corpus_group = groups.add_parser("corpus", help="corpus validation and export")
    corpus_group.add_argument("action", choices=("validate", "export"))
    corpus_group.add_argument("--corpus", metavar="embedded|PATH", default=None)
    corpus_group.add_argument("--out", metavar="PATH", default=None)

    serve = groups.add_parser("serve", help="start the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8080)
    serve.add_argument("--corpus", metavar="embedded|PATH", default=None)

    return parser


def _load_corpus(flag: str | None) -> Corpus:
    source = flag or os.environ.get("PERCEPRICE_CORPUS") or "embedded"
    if source == "embedded":
        return embedded_corpus()
    return load_csv(source)


def _emit(payload: bytes, out: str | None) -> None:
    if out:
        Path(out).write_bytes(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()


def _print_warnings(result: SolveResult) -> None:
    for warning in result.warnings:
        print(f"warning: {warning}", file=sys.stderr)


def _run_perception(args: argparse.Namespace) -> int:
    if args.command in ("error", "classify"):
        outcome = assess(ElasticityPair(args.eta_p, args.eta_i), epsilon=args.epsilon)
        if args.command == "error":
            print(f"{format_number(outcome.error, 2)}  {outcome.classification.value}")
        else:
            print(outcome.classification.value)
        return 0
    if args.command == "solve-price":
        result = solve_actual_price(args.pr, ElasticityPair(args.eta_p, args.eta_i))
    elif args.command == "solve-reference":
        result = solve_reference_price(args.pa, ElasticityPair(args.eta_p, args.eta_i))
    elif args.command == "solve-eta-p":
        result = solve_price_elasticity(PricePair(args.pa, args.pr), args.eta_i)
    else:
        result = solve_income_elasticity(PricePair(args.pa, args.pr), args.eta_p)
    _print_warnings(result)
    print(f"{result.value:g}")
    return 0


def _replication_artifacts(corpus: Corpus, args: argparse.Namespace) -> dict:
    mode = _MODES[args.mode]
    variant = _VARIANTS[args.eta_variant]
    policy = _POLICIES[args.log_policy]
    strict = args.strict_paper
    log_dependent = args.dependent == "log"

    def tables_3_4():
        return table3_4(corpus, eta_variant=variant, strict=strict)

    def tables_5_6():
        return table5_6(
            corpus,
            policy=policy,
            log_dependent=log_dependent,
            ratio_mode=mode,
            eta_variant=variant,
            strict=strict,
        )

    return {
        "table1": lambda: table1(corpus, mode, variant, strict=strict),
        "table2": lambda: table2(corpus, mode, args.epsilon, strict=strict),
        "table3": lambda: tables_3_4()[0],
        "table4": lambda: tables_3_4()[1],
        "table5": lambda: tables_5_6()[0],
        "table6": lambda: tables_5_6()[1],
        "figure1": lambda: figure1(
            corpus, mode, args.bin_width, args.anchor, variant, strict=strict
        ),
        "figure2": lambda: figure2(
            corpus, not args.no_curve, variant, strict=strict
        ),
        "discrepancies": lambda: discrepancy_table(corpus),
    }


_ALL_ARTIFACTS = (
    "table1",
    "table2",
    "table3",
    "table4",
    "table5",
    "table6",
    "figure1",
    "figure2",
)


def _run_replicate(args: argparse.Namespace) -> int:
    corpus = _load_corpus(args.corpus)
    output_format = _FORMATS[args.format]
    builders = _replication_artifacts(corpus, args)
    if args.artifact != "all":
        payload = render(builders[args.artifact](), output_format)
        _emit(payload, args.out)
        return 0
    if output_format is OutputFormat.PLAIN_TEXT:
        sections = [
            render(builders[name](), output_format).decode("utf-8")
            for name in _ALL_ARTIFACTS
        ]
        _emit("\n".join(sections).encode("utf-8"), args.out)
        return 0
    if output_format is OutputFormat.STRUCTURED_DATA:
        import json

        combined: dict = {}
        for name in _ALL_ARTIFACTS:
            artifact = builders[name]()
            combined[name] = (
                table_payload(artifact)
                if name.startswith("table")
                else plot_payload(artifact)
            )
        _emit(
            (json.dumps(combined, ensure_ascii=False, indent=2) + "\n").encode("utf-8"),
            args.out,
        )
        return 0
    raise UnsupportedFormat(
        f"format {args.format!r} is not available for the combined replication run"
    )


def _run_corpus(args: argparse.Namespace) -> int:
    corpus = _load_corpus(args.corpus)
    if args.action == "validate":
        print(
            f"OK: {len(corpus)} records from {corpus.origin}; "
            f"checksum {corpus_checksum(corpus)}"
        )
        return 0
    _emit(export_csv(corpus).encode("utf-8"), args.out)
    return 0


def _run_serve(args: argparse.Namespace) -> int:
    from .service import serve_forever

    corpus = _load_corpus(args.corpus)
    serve_forever(args.host, args.port, corpus)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "strict_paper", False):
        source = args.corpus or os.environ.get("PERCEPRICE_CORPUS") or "embedded"
        if source != "embedded":
            parser.error("--strict-paper reproduces the embedded rows; --corpus must be embedded")
    if getattr(args, "epsilon", DEFAULT_EPSILON) < 0:
        parser.error("--epsilon must be >= 0")
    try:
        if args.group == "perception":
            return _run_perception(args)
        if args.group == "replicate":
            return _run_replicate(args)
        if args.group == "corpus":
            return _run_corpus(args)
        return _run_serve(args)
    except PercepriceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        return 0


if __name__ == "__main__":
    sys.exit(main())
