from __future__ import annotations

"""
Batch runner: build every instance of a spec list and run the full battery
of theorem checks and conjecture tests on it.
"""

from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from tqdm import tqdm

from .config import ToolkitConfig
from .conjectures import run_all
from .constructions import onsager_tensor, parse_spec
from .drinfeld import drinfeld_checks, injectivity_matrix, isomorphism_invariance_check
from .errors import TDPairError
from .forms import commutant_check, dagger_report, dual_iso_check, four_iso_report, invariant_form
from .logging import get_logger
from .pairs import shape_factorization, shape_of

log = get_logger(__name__)


@dataclass
class InstanceResult:
    spec: str
    dim: Optional[int] = None
    diameter: Optional[int] = None
    checks: Dict[str, object] = field(default_factory=dict)
    conjectures: List[dict] = field(default_factory=list)
    hard_failures: List[str] = field(default_factory=list)
    conjecture_failures: List[str] = field(default_factory=list)
    hypotheses: Dict[str, object] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "spec": self.spec,
            "dim": self.dim,
            "diameter": self.diameter,
            "hard_failures": self.hard_failures,
            "conjecture_failures": self.conjecture_failures,
            "hypotheses": self.hypotheses,
            "checks": self.checks,
            "conjectures": self.conjectures,
        }


def run_instance(spec_text: str, samples: int = 20, seed: int = 0, bound: int = 5) -> InstanceResult:
    """Build one construction and run every check on it. Never raises."""
    result = InstanceResult(spec=spec_text)
    try:
        spec = parse_spec(spec_text)
        pair = onsager_tensor(spec)
    except TDPairError as exc:
        result.hard_failures.append(f"construction: {exc}")
        return result

    result.dim, result.diameter = pair.dim, pair.diameter
    expected = tuple(sorted((d for d, _ in spec.factors), reverse=True))

    def record(name: str, check) -> None:
        try:
            outcome, ok = check()
        except TDPairError as exc:
            result.checks[name] = {"error": str(exc)}
            result.hard_failures.append(f"{name}: {exc}")
            return
        result.checks[name] = outcome
        if not ok:
            result.hard_failures.append(name)

    def shape_check():
        shape = shape_of(pair)
        factorizations = shape_factorization(shape)
        outcome = {
            **shape.to_dict(),
            "factorizations": [list(f) for f in factorizations],
        }
        return outcome, expected in factorizations and shape.is_symmetric and shape.is_unimodal

    def form_check():
        form = invariant_form(pair)
        dagger = dagger_report(pair, samples, seed, bound, form=form)
        ok = all(dagger[key] for key in ("fixes_A", "fixes_Astar", "involution", "antiautomorphism"))
        return {"form": form.to_dict(), "dagger": dagger}, ok

    def four_iso_check():
        report = four_iso_report(pair)
        return report.to_dict(), report.passed

    def dual_check():
        report = dual_iso_check(pair)
        return report.to_dict(), report.passed

    def commutant():
        outcome = commutant_check(pair)
        return outcome, bool(outcome["scalars_only"])

    def drinfeld():
        report = drinfeld_checks(pair, spec)
        invariance = isomorphism_invariance_check(pair)
        result.hypotheses["drinfeld_multiplicative"] = report.multiplicative
        outcome = {**report.to_dict(), "isomorphism_invariance": invariance}
        return outcome, report.passed and all(invariance.values())

    record("shape", shape_check)
    record("form_and_dagger", form_check)
    record("four_isomorphisms", four_iso_check)
    record("dual_isomorphism", dual_check)
    record("commutant", commutant)
    record("drinfeld", drinfeld)

    try:
        reports = run_all(pair, samples, seed, bound)
    except TDPairError as exc:
        result.hard_failures.append(f"conjectures: {exc}")
        return result
    for report in reports:
        result.conjectures.append(report.to_dict())
        if report.hard_failure:
            result.hard_failures.append(report.key)
        elif report.verdict.value == "fails":
            result.conjecture_failures.append(report.key)
    return result


@dataclass
class CorpusReport:
    instances: List[InstanceResult]
    injectivity: List[dict] = field(default_factory=list)

    @property
    def hard_failure_count(self) -> int:
        inconsistent = sum(1 for entry in self.injectivity if not entry["consistent"])
        return sum(1 for item in self.instances if item.hard_failures) + inconsistent

    @property
    def passed(self) -> bool:
        return self.hard_failure_count == 0

    def to_dict(self) -> dict:
        return {
            "summary": {
                "instances": len(self.instances),
                "hard_failures": self.hard_failure_count,
                "conjecture_failures": sum(len(item.conjecture_failures) for item in self.instances),
                "passed": self.passed,
            },
            "instances": [item.to_dict() for item in self.instances],
            "drinfeld_injectivity": self.injectivity,
        }


def _cross_check(results: Sequence[InstanceResult]) -> List[dict]:
    """Equal Drinfel'd polynomial iff isomorphic, over every pair of built instances."""
    specs = [item.spec for item in results if item.dim is not None and not item.hard_failures]
    if len(specs) < 2:
        return []
    pairs = [onsager_tensor(parse_spec(text)) for text in specs]
    return [entry.to_dict() for entry in injectivity_matrix(pairs)]


def run_corpus(specs: Sequence[str], cfg: ToolkitConfig, show_progress: bool = True) -> CorpusReport:
    """Run every spec, in parallel when ``cfg.workers > 1``; results keep input order."""
    results: List[Optional[InstanceResult]] = [None] * len(specs)
    args = (cfg.random_samples, cfg.random_seed, cfg.random_bound)
    progress = tqdm(desc="instances", total=len(specs), disable=not show_progress)

    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as executor:
            futures = {
                executor.submit(run_instance, spec, *args): index
                for index, spec in enumerate(specs)
            }
            for future in as_completed(futures):
                index = futures[future]
                results[index] = future.result()
                progress.update(1)
    else:
        for index, spec in enumerate(specs):
            results[index] = run_instance(spec, *args)
            progress.update(1)
    progress.close()

    finished = [item for item in results if item is not None]
    for item in finished:
        if item.hard_failures:
            log.error("%s: hard failures %s", item.spec, item.hard_failures)
        elif item.conjecture_failures:
            log.warning("%s: conjecture counterexample candidates %s", item.spec, item.conjecture_failures)

    injectivity = _cross_check(finished)
    return CorpusReport(instances=finished, injectivity=injectivity)


__all__ = [
    "InstanceResult",
    "run_instance",
    "CorpusReport",
    "run_corpus",
]
