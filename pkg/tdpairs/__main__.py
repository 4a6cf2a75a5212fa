from __future__ import annotations

import argparse
from typing import Sequence

from .main import (
    run_analyze_command,
    run_conjectures_command,
    run_corpus_command,
    run_gen_command,
    run_iso_command,
    run_verify_command,
)


def _add_common(parser: argparse.ArgumentParser, *, formatted: bool = True) -> None:
    if formatted:
        parser.add_argument(
            "--format",
            type=str,
            choices=["json", "text"],
            default="json",
            help="Output format (default: json).",
        )
    parser.add_argument(
        "--log-level",
        type=str,
        default="WARNING",
        help="Logging level (DEBUG, INFO, WARNING, ERROR).",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m tdpairs",
        description="Exact-arithmetic toolkit for tridiagonal pairs of Krawtchouk type",
    )
    subparsers = parser.add_subparsers(
        title="commands", dest="command", required=True
    )

    # gen command
    gen_parser = subparsers.add_parser(
        "gen", help="Build a Krawtchouk pair from a spec such as '1:2,1:3'."
    )
    gen_parser.add_argument("spec", type=str, help="Comma-separated d:a factors.")
    gen_parser.add_argument(
        "--output",
        type=str,
        default=None,
        help="Pair document path (defaults to stdout).",
    )
    gen_parser.add_argument(
        "--unchecked",
        action="store_true",
        help="Skip parameter validation and verification (for negative instances).",
    )
    _add_common(gen_parser, formatted=False)
    gen_parser.set_defaults(handler=run_gen_command)

    # verify command
    verify_parser = subparsers.add_parser("verify", help="Check the TD-pair axioms.")
    verify_parser.add_argument("pair", type=str, help="Pair document path.")
    _add_common(verify_parser)
    verify_parser.set_defaults(handler=run_verify_command)

    # analyze command
    analyze_parser = subparsers.add_parser(
        "analyze", help="Emit invariants of a verified pair."
    )
    analyze_parser.add_argument("pair", type=str, help="Pair document path.")
    analyze_parser.add_argument("--shape", action="store_true", help="Shape and its factorizations.")
    analyze_parser.add_argument("--split", action="store_true", help="Split decomposition and sequences.")
    analyze_parser.add_argument(
        "--param-array", dest="param_array", action="store_true", help="Parameter array."
    )
    analyze_parser.add_argument("--drinfeld", action="store_true", help="Drinfel'd polynomial.")
    analyze_parser.add_argument(
        "--form", action="store_true", help="Invariant form and isomorphism certificates."
    )
    analyze_parser.add_argument("--dagger", action="store_true", help="Antiautomorphism checks.")
    analyze_parser.add_argument(
        "--iso-poly",
        dest="iso_poly",
        action="store_true",
        help="Express the isomorphisms as polynomials in A and A* (slow for large pairs).",
    )
    analyze_parser.add_argument(
        "--all", action="store_true", help="Every section except --iso-poly (the default)."
    )
    _add_common(analyze_parser)
    analyze_parser.set_defaults(handler=run_analyze_command)

    # iso command
    iso_parser = subparsers.add_parser("iso", help="Decide isomorphism of two pairs.")
    iso_parser.add_argument("first", type=str, help="First pair document.")
    iso_parser.add_argument("second", type=str, help="Second pair document.")
    _add_common(iso_parser)
    iso_parser.set_defaults(handler=run_iso_command)

    # conjectures command
    conj_parser = subparsers.add_parser(
        "conjectures", help="Run the conjecture tests and theorem checks."
    )
    conj_parser.add_argument("pair", type=str, help="Pair document path.")
    _add_common(conj_parser)
    conj_parser.set_defaults(handler=run_conjectures_command)

    # corpus command
    corpus_parser = subparsers.add_parser(
        "corpus", help="Run every check over a list of construction specs."
    )
    corpus_parser.add_argument("spec_list", type=str, help="File with one spec per line.")
    corpus_parser.add_argument(
        "--workers",
        type=int,
        default=None,
        help="Worker processes (defaults to TDPAIRS_WORKERS or 1).",
    )
    corpus_parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="Seed for randomized checks (defaults to TDPAIRS_RANDOM_SEED or 0).",
    )
    corpus_parser.add_argument(
        "--output",
        type=str,
        default=None,
        help="Report path (defaults to stdout).",
    )
    corpus_parser.add_argument(
        "--save",
        action="store_true",
        help="Write the report to <TDPAIRS_OUTPUT_DIR>/<spec list>_corpus.json when --output is absent.",
    )
    corpus_parser.add_argument(
        "--no-progress",
        dest="no_progress",
        action="store_true",
        help="Disable the progress bar.",
    )
    _add_common(corpus_parser, formatted=False)
    corpus_parser.set_defaults(handler=run_corpus_command)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.handler(args)


if __name__ == "__main__":
    raise SystemExit(main())
