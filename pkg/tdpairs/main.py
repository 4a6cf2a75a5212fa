from __future__ import annotations

"""
Shared command implementations for the tdpairs CLI.

Every handler returns the process exit code: 0 on success, 1 on a semantic
negative (axiom failure, non-isomorphic pairs, failing verdict or hard
corpus failure) and 2 on usage or input-format errors.
"""

from pathlib import Path
from typing import Callable, Dict, Optional

from .config import ToolkitConfig
from .conjectures import Verdict, conj_parameter_array_iso, eight_split_sequences, run_all
from .constructions import onsager_tensor, parse_spec, tensor_matrices
from .corpus import run_corpus
from .drinfeld import drinfeld_checks
from .errors import (
    BadParameter,
    ConstructionRejected,
    DocumentError,
    IrrationalSpectrum,
    NotDiagonalizable,
    Rho0NotOne,
    TDPairError,
)
from .forms import (
    dagger_report,
    dual_iso_check,
    four_iso_report,
    invariant_form,
    iso_polynomials,
    iso_solver,
)
from .logging import configure_logging, get_logger, parse_log_level
from .pairs import (
    TDPair,
    check_shape,
    default_orderings,
    krawtchouk_type,
    parameter_array,
    shape_factorization,
    shape_of,
    split_decomposition,
    split_sequence,
    split_sums_check,
    verify_td_pair,
)
from .storage import (
    PairDocument,
    read_pair_document,
    read_spec_list,
    render_text,
    write_json,
    write_pair_document,
    write_report,
)

log = get_logger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2

ANALYSIS_SECTIONS = ("shape", "split", "param_array", "drinfeld", "form", "dagger", "iso_poly")


def run_gen_command(args) -> int:
    """Build a pair document from a construction spec."""
    configure_logging(parse_log_level(args.log_level))
    try:
        spec = parse_spec(args.spec)
        if args.unchecked:
            A, Astar = tensor_matrices(spec.factors)
            doc = PairDocument(A, Astar, provenance=f"unchecked:{spec.to_string()}")
        else:
            pair = onsager_tensor(spec)
            doc = PairDocument(pair.A, pair.Astar, provenance=spec.to_string())
    except BadParameter as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    except ConstructionRejected as exc:
        log.error("Construction rejected: %s", exc)
        if exc.report is not None:
            write_json(exc.report.to_dict(), None)
        return EXIT_NEGATIVE

    output = Path(args.output) if args.output else None
    write_pair_document(doc, output)
    if output is not None:
        log.info("Pair document written to %s", output)
    return EXIT_OK


def run_verify_command(args) -> int:
    """Check the four TD-pair axioms for a pair document."""
    configure_logging(parse_log_level(args.log_level))
    doc = _load(args.pair)
    if doc is None:
        return EXIT_USAGE
    try:
        report = verify_td_pair(doc.A, doc.Astar)
    except IrrationalSpectrum as exc:
        log.error("Outside exact rational scope: %s", exc)
        return EXIT_USAGE
    _emit(report.to_dict(), args)
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def run_analyze_command(args) -> int:
    """Verify, then emit the requested invariants of a pair document."""
    configure_logging(parse_log_level(args.log_level))
    pair, code = _load_verified(args.pair)
    if pair is None:
        return code

    requested = [name for name in ANALYSIS_SECTIONS if getattr(args, name, False)]
    if args.all or not requested:
        requested = [name for name in ANALYSIS_SECTIONS if name != "iso_poly" or args.iso_poly]
    cfg = ToolkitConfig.load()

    builders: Dict[str, Callable[[], object]] = {
        "shape": lambda: _shape_section(pair),
        "split": lambda: _split_section(pair),
        "param_array": lambda: parameter_array(pair).to_dict(),
        "drinfeld": lambda: drinfeld_checks(pair).to_dict(),
        "form": lambda: invariant_form(pair).to_dict(),
        "dagger": lambda: dagger_report(
            pair, cfg.random_samples, cfg.random_seed, cfg.random_bound
        ),
        "iso_poly": lambda: iso_polynomials(pair),
    }

    document: Dict[str, object] = {
        "dim": pair.dim,
        "diameter": pair.diameter,
        "krawtchouk": krawtchouk_type(pair).to_dict(),
    }
    for name in requested:
        try:
            document[name] = builders[name]()
        except TDPairError as exc:
            log.warning("Section %s unavailable: %s", name, exc)
            document[name] = {"error": str(exc)}
    if "form" in requested and "error" not in document.get("form", {}):
        document["four_isomorphisms"] = four_iso_report(pair).to_dict()
        document["dual_isomorphism"] = dual_iso_check(pair).to_dict()
    _emit(document, args)
    return EXIT_OK


def run_iso_command(args) -> int:
    """Decide whether two pair documents describe isomorphic TD pairs."""
    configure_logging(parse_log_level(args.log_level))
    first, code = _load_verified(args.first)
    if first is None:
        return code
    second, code = _load_verified(args.second)
    if second is None:
        return code

    intertwiner = iso_solver(first, second)
    document: Dict[str, object] = {"isomorphic": intertwiner is not None}
    if intertwiner is not None:
        document["certificate"] = intertwiner.to_dict()
        document["certificate_checked"] = intertwiner.check(first, second)
    document["parameter_array_test"] = conj_parameter_array_iso(first, second).to_dict()
    _emit(document, args)
    return EXIT_OK if intertwiner is not None else EXIT_NEGATIVE


def run_conjectures_command(args) -> int:
    """Run every conjecture test and theorem check on a pair document."""
    configure_logging(parse_log_level(args.log_level))
    pair, code = _load_verified(args.pair)
    if pair is None:
        return code
    cfg = ToolkitConfig.load()
    reports = run_all(pair, cfg.random_samples, cfg.random_seed, cfg.random_bound)
    _emit({"reports": [report.to_dict() for report in reports]}, args)
    failed = any(report.verdict is Verdict.FAILS for report in reports)
    return EXIT_NEGATIVE if failed else EXIT_OK


def run_corpus_command(args) -> int:
    """Run the full battery over every spec in a spec list."""
    configure_logging(parse_log_level(args.log_level))
    try:
        specs = read_spec_list(Path(args.spec_list))
        cfg = ToolkitConfig.load(
            workers=args.workers, random_seed=args.seed, create_dirs=args.save
        )
    except (DocumentError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_USAGE

    log.info("Running %d instances with %d worker(s)", len(specs), cfg.workers)
    report = run_corpus(specs, cfg, show_progress=not args.no_progress)
    if args.output:
        output: Optional[Path] = Path(args.output)
    elif args.save:
        output = _derive_report_path(cfg, Path(args.spec_list))
    else:
        output = None
    write_report(report.to_dict(), output)
    if output is not None:
        log.info("Corpus report written to %s", output)
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def _derive_report_path(cfg: ToolkitConfig, spec_list: Path) -> Path:
    return cfg.output_dir / f"{spec_list.stem}_corpus.json"


def _load(path: str) -> Optional[PairDocument]:
    try:
        return read_pair_document(Path(path))
    except DocumentError as exc:
        log.error("%s", exc)
        return None


def _load_verified(path: str):
    """Load a pair document and require it to pass verification."""
    doc = _load(path)
    if doc is None:
        return None, EXIT_USAGE
    try:
        pair = TDPair.from_matrices(doc.A, doc.Astar, label=doc.provenance or Path(path).stem)
    except NotDiagonalizable as exc:
        log.error("Not a TD pair: %s", exc)
        return None, EXIT_NEGATIVE
    except IrrationalSpectrum as exc:
        log.error("Outside exact rational scope: %s", exc)
        return None, EXIT_USAGE
    if not pair.is_verified:
        log.error("Not a TD pair: axioms %s fail", pair.verification.failing())
        _emit_error(pair.verification.to_dict())
        return None, EXIT_NEGATIVE
    return pair, EXIT_OK


def _shape_section(pair: TDPair) -> dict:
    shape = shape_of(pair)
    return {
        **shape.to_dict(),
        "checks": check_shape(shape),
        "factorizations": [list(f) for f in shape_factorization(shape)],
    }


def _split_section(pair: TDPair) -> dict:
    theta, theta_star = default_orderings(pair)
    try:
        split = split_sequence(pair, theta, theta_star)
    except Rho0NotOne:
        split = split_decomposition(pair, theta, theta_star)
    return {
        **split.to_dict(),
        "partial_sums": split_sums_check(pair, theta, theta_star),
        "eight_sequences": eight_split_sequences(pair),
    }


def _emit(document: dict, args) -> None:
    if getattr(args, "format", "json") == "text":
        print(render_text(document))
    else:
        write_json(document, None)


def _emit_error(document: dict) -> None:
    write_json(document, None)


__all__ = [
    "EXIT_OK",
    "EXIT_NEGATIVE",
    "EXIT_USAGE",
    "run_gen_command",
    "run_verify_command",
    "run_analyze_command",
    "run_iso_command",
    "run_conjectures_command",
    "run_corpus_command",
]
