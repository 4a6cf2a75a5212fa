from __future__ import annotations

"""
Executable checks for the open conjectures about TD pairs.

Every check recomputes both sides of a statement independently and returns a
``ConjectureReport`` with one of three verdicts. Checks that are theorems for
Krawtchouk pairs are tagged ``theorem-check``; a failure there is a bug in
the toolkit, while a failure of a ``conjecture-test`` is a counterexample
candidate and carries its exact witness.
"""

from dataclasses import dataclass, field
from enum import Enum
from math import factorial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .constructions import dual, swap
from .drinfeld import drinfeld_from_zeta
from .errors import NotAPath, Rho0NotOne, TDPairError
from .forms import FormMatrix, dagger_report, form_space, iso_solver
from .linalg import (
    Scalar,
    commutator,
    format_matrix,
    format_scalar,
    format_vector,
    identity,
    matrices_equal,
    normalize_first_nonzero,
    shifted,
    trace,
)
from .logging import get_logger
from .pairs import (
    ParameterArray,
    TDPair,
    all_parameter_arrays,
    default_orderings,
    krawtchouk_orderings,
    krawtchouk_type,
    parameter_array,
    shape_factorization_general,
    shape_of,
    split_sequence,
    standard_orderings,
)

log = get_logger(__name__)


class Verdict(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_APPLICABLE = "not-applicable"


class CheckKind(str, Enum):
    THEOREM = "theorem-check"
    CONJECTURE = "conjecture-test"


@dataclass
class ConjectureReport:
    key: str
    instance: Optional[str]
    verdict: Verdict
    kind: CheckKind
    witness: Dict[str, object] = field(default_factory=dict)

    @property
    def hard_failure(self) -> bool:
        return self.kind is CheckKind.THEOREM and self.verdict is Verdict.FAILS

    def to_dict(self) -> dict:
        return {
            "id": self.key,
            "instance": self.instance,
            "verdict": self.verdict.value,
            "kind": self.kind.value,
            "witness": self.witness,
        }


def _verdict(ok: bool) -> Verdict:
    return Verdict.HOLDS if ok else Verdict.FAILS


def _kind(pair: TDPair, krawtchouk_theorem: bool) -> CheckKind:
    if krawtchouk_theorem and krawtchouk_type(pair).is_krawtchouk:
        return CheckKind.THEOREM
    return CheckKind.CONJECTURE


def _not_applicable(key: str, pair: TDPair, kind: CheckKind, reason: str) -> ConjectureReport:
    return ConjectureReport(key, pair.label, Verdict.NOT_APPLICABLE, kind, {"reason": reason})


# ---------------------------------------------------------------------------
# Idempotents and polynomial prefixes
# ---------------------------------------------------------------------------


def idempotent_E0(
    pair: TDPair, pa: Optional[ParameterArray] = None
) -> Tuple[DomainMatrix, DomainMatrix]:
    """Primitive idempotents of A for theta_0 and of A* for theta*_0."""
    if pa is None:
        theta, theta_star = default_orderings(pair)
    else:
        theta, theta_star = pa.theta, pa.theta_star
    return pair.eig_a.projector_for(theta[0]), pair.eig_astar.projector_for(theta_star[0])


def _prefixes(M: DomainMatrix, values: Sequence[Scalar]) -> List[DomainMatrix]:
    """tau_0..tau_d with tau_i = (M - v_0)(M - v_1)...(M - v_{i-1})."""
    current = identity(M.shape[0])
    prefixes = [current]
    for value in values[:-1]:
        current = current * shifted(M, value)
        prefixes.append(current)
    return prefixes


def _leading_differences(values: Sequence[Scalar], i: int) -> Scalar:
    product = QQ.one
    for k in range(1, i + 1):
        product *= values[0] - values[k]
    return product


def _resolve_array(pair: TDPair, key: str, kind: CheckKind) -> Tuple[Optional[ParameterArray], Optional[ConjectureReport]]:
    try:
        return parameter_array(pair), None
    except Rho0NotOne as exc:
        return None, _not_applicable(key, pair, kind, f"rho_0 = {exc.dimension}")
    except NotAPath as exc:
        return None, _not_applicable(key, pair, kind, str(exc))


# ---------------------------------------------------------------------------
# Trace formulas for the split sequence
# ---------------------------------------------------------------------------


def conjz_report(pair: TDPair, pa: Optional[ParameterArray] = None) -> ConjectureReport:
    """Both trace formulas for zeta_i against the split sequence."""
    key = "split-trace-formulas"
    kind = CheckKind.CONJECTURE
    if pa is None:
        pa, skipped = _resolve_array(pair, key, kind)
        if skipped:
            return skipped

    E0, E0_star = idempotent_E0(pair, pa)
    tau = _prefixes(pair.A, pa.theta)
    tau_star = _prefixes(pair.Astar, pa.theta_star)
    rows = []
    ok = True
    for i, zeta_i in enumerate(pa.zeta):
        first = _leading_differences(pa.theta_star, i) * trace(tau[i] * E0_star)
        second = _leading_differences(pa.theta, i) * trace(tau_star[i] * E0)
        holds = first == zeta_i and second == zeta_i
        ok = ok and holds
        rows.append(
            {
                "i": i,
                "zeta": format_scalar(zeta_i),
                "first_formula": format_scalar(first),
                "second_formula": format_scalar(second),
                "verdict": _verdict(holds).value,
            }
        )
    return ConjectureReport(key, pair.label, _verdict(ok), kind, {"rows": rows})


def trace_ratio_report(pair: TDPair, pa: Optional[ParameterArray] = None) -> ConjectureReport:
    """tr(E_0 E*_0) != 0 and both trace ratios reproduce zeta_i."""
    key = "trace-ratio"
    kind = CheckKind.CONJECTURE
    if pa is None:
        pa, skipped = _resolve_array(pair, key, kind)
        if skipped:
            return skipped

    E0, E0_star = idempotent_E0(pair, pa)
    base = trace(E0 * E0_star)
    if base == 0:
        return ConjectureReport(
            key, pair.label, Verdict.FAILS, kind, {"trace_E0_E0star": "0"}
        )
    companion_base = trace(E0_star * E0)
    tau = _prefixes(pair.A, pa.theta)
    tau_star = _prefixes(pair.Astar, pa.theta_star)
    rows = []
    ok = True
    for i, zeta_i in enumerate(pa.zeta):
        ratio = trace(E0 * tau_star[i] * tau[i] * E0_star) / base
        companion = trace(E0_star * tau[i] * tau_star[i] * E0) / companion_base
        holds = ratio == zeta_i and companion == zeta_i
        ok = ok and holds
        rows.append(
            {
                "i": i,
                "zeta": format_scalar(zeta_i),
                "ratio": format_scalar(ratio),
                "companion_ratio": format_scalar(companion),
                "verdict": _verdict(holds).value,
            }
        )
    witness = {"trace_E0_E0star": format_scalar(base), "rows": rows}
    return ConjectureReport(key, pair.label, _verdict(ok), kind, witness)


# ---------------------------------------------------------------------------
# The eight split sequences
# ---------------------------------------------------------------------------


def eight_split_sequences(pair: TDPair) -> List[Dict[str, object]]:
    """
    Split sequences of (A, A*) and of (A*, A) under the four combinations of
    an ordering and its reversal; None where U_0 is not one-dimensional.
    """
    theta, theta_star = default_orderings(pair)
    rev, rev_star = tuple(reversed(theta)), tuple(reversed(theta_star))
    swapped = swap(pair)
    combinations = [
        ("A,A*", pair, theta, theta_star),
        ("A,A*", pair, rev, theta_star),
        ("A,A*", pair, theta, rev_star),
        ("A,A*", pair, rev, rev_star),
        ("A*,A", swapped, theta_star, theta),
        ("A*,A", swapped, rev_star, theta),
        ("A*,A", swapped, theta_star, rev),
        ("A*,A", swapped, rev_star, rev),
    ]
    table = []
    for name, subject, first, second in combinations:
        try:
            zeta = format_vector(split_sequence(subject, first, second).zeta)
        except Rho0NotOne:
            zeta = None
        table.append(
            {
                "pair": name,
                "theta": format_vector(first),
                "theta_star": format_vector(second),
                "zeta": zeta,
            }
        )
    return table


def conjzz_report(pair: TDPair) -> ConjectureReport:
    """
    The split sequence of (A, A*) for (theta; theta*) coincides with that of
    (A*, A) for (theta*; theta). The full eight-sequence table is attached.
    """
    key = "swapped-split-sequence"
    kind = CheckKind.CONJECTURE
    try:
        table = eight_split_sequences(pair)
    except NotAPath as exc:
        return _not_applicable(key, pair, kind, str(exc))
    first, second = table[0]["zeta"], table[4]["zeta"]
    if first is None or second is None:
        return ConjectureReport(key, pair.label, Verdict.NOT_APPLICABLE, kind, {"table": table})
    return ConjectureReport(key, pair.label, _verdict(first == second), kind, {"table": table})


# ---------------------------------------------------------------------------
# Parameter array conditions
# ---------------------------------------------------------------------------


def conj_main_check(pa: ParameterArray, instance: Optional[str] = None) -> ConjectureReport:
    """
    Necessary conditions on a parameter array:
    (i) zeta_0 = 1, zeta_d != 0 and a weighted sum of the zeta_i is nonzero;
    (ii) both eigenvalue sequences are injective;
    (iii) the ratios (th_{i-2} - th_{i+1}) / (th_{i-1} - th_i) for both
    sequences are one common constant for 2 <= i <= d-1.
    """
    d = pa.diameter
    total = QQ.zero
    for i, zeta_i in enumerate(pa.zeta):
        term = zeta_i
        for k in range(i + 1, d + 1):
            term *= (pa.theta[0] - pa.theta[k]) * (pa.theta_star[0] - pa.theta_star[k])
        total += term
    first = pa.zeta[0] == 1 and pa.zeta[d] != 0 and total != 0

    second = len(set(pa.theta)) == d + 1 and len(set(pa.theta_star)) == d + 1

    ratios: List[Scalar] = []
    third = True
    for i in range(2, d):
        for values in (pa.theta, pa.theta_star):
            denominator = values[i - 1] - values[i]
            if denominator == 0:
                third = False
                continue
            ratios.append((values[i - 2] - values[i + 1]) / denominator)
    if ratios and any(ratio != ratios[0] for ratio in ratios):
        third = False

    conditions = {
        "i": _verdict(first).value,
        "ii": _verdict(second).value,
        "iii": _verdict(third).value if d >= 3 else Verdict.HOLDS.value,
    }
    witness = {
        "conditions": conditions,
        "sum": format_scalar(total),
        "ratios": format_vector(ratios),
        "parameter_array": pa.to_dict(),
    }
    if (tuple(pa.theta), tuple(pa.theta_star)) == krawtchouk_orderings(d):
        # sum = (-4)^d (d!)^2 P(1) on Krawtchouk orderings
        scale = QQ((-4) ** d * factorial(d) ** 2)
        drinfeld_side = scale * drinfeld_from_zeta(pa.zeta).at(1)
        witness["drinfeld_side"] = format_scalar(drinfeld_side)
        witness["drinfeld_side_matches"] = drinfeld_side == total
    return ConjectureReport(
        "parameter-array-conditions", instance, _verdict(first and second and third), CheckKind.CONJECTURE, witness
    )


def conj_main_report(pair: TDPair, pa: Optional[ParameterArray] = None) -> ConjectureReport:
    if pa is None:
        pa, skipped = _resolve_array(pair, "parameter-array-conditions", CheckKind.CONJECTURE)
        if skipped:
            return skipped
    return conj_main_check(pa, pair.label)


def conj_parameter_array_iso(p1: TDPair, p2: TDPair) -> ConjectureReport:
    """Isomorphic iff some parameter array is shared."""
    key = "parameter-array-isomorphism"
    instance = f"{p1.label} vs {p2.label}"
    try:
        arrays_first = all_parameter_arrays(p1)
        arrays_second = all_parameter_arrays(p2)
    except (Rho0NotOne, NotAPath) as exc:
        return ConjectureReport(
            key, instance, Verdict.NOT_APPLICABLE, CheckKind.CONJECTURE, {"reason": str(exc)}
        )
    shared = any(a == b for a in arrays_first for b in arrays_second)
    isomorphic = iso_solver(p1, p2) is not None if p1.dim == p2.dim else False
    witness = {"shared_parameter_array": shared, "isomorphic": isomorphic}
    return ConjectureReport(key, instance, _verdict(shared == isomorphic), CheckKind.CONJECTURE, witness)


# ---------------------------------------------------------------------------
# Shape, form, antiautomorphism and duality
# ---------------------------------------------------------------------------


def conj_shape_report(pair: TDPair) -> ConjectureReport:
    key = "shape-factorization"
    kind = _kind(pair, krawtchouk_theorem=True)
    try:
        shape = shape_of(pair)
    except NotAPath as exc:
        return _not_applicable(key, pair, kind, str(exc))
    factorizations = shape_factorization_general(shape)
    witness = {
        "rho": list(shape.rho),
        "factorizations": [list(f) for f in factorizations],
    }
    return ConjectureReport(key, pair.label, _verdict(bool(factorizations)), kind, witness)


def _form_or_none(pair: TDPair) -> Tuple[Optional[FormMatrix], int]:
    space = form_space(pair)
    if len(space) != 1:
        return None, len(space)
    return FormMatrix(normalize_first_nonzero(space[0])), 1


def conj_form_report(pair: TDPair) -> ConjectureReport:
    """A unique nondegenerate symmetric invariant form exists."""
    key = "invariant-form"
    kind = _kind(pair, krawtchouk_theorem=True)
    form, dimension = _form_or_none(pair)
    if form is None:
        return ConjectureReport(key, pair.label, Verdict.FAILS, kind, {"form_space_dim": dimension})
    ok = form.is_symmetric and form.is_nondegenerate
    return ConjectureReport(key, pair.label, _verdict(ok), kind, {"form_space_dim": 1, "form": form.to_dict()})


def conj_dagger_report(pair: TDPair, samples: int = 20, seed: int = 0, bound: int = 5) -> ConjectureReport:
    """The form's adjoint fixes A and A* and is an antiautomorphism."""
    key = "form-antiautomorphism"
    kind = _kind(pair, krawtchouk_theorem=True)
    form, dimension = _form_or_none(pair)
    if form is None or not form.is_nondegenerate:
        return _not_applicable(key, pair, kind, f"no nondegenerate form (space dim {dimension})")
    checks = dagger_report(pair, samples, seed, bound, form=form)
    ok = all(checks[name] for name in ("fixes_A", "fixes_Astar", "involution", "antiautomorphism"))
    return ConjectureReport(key, pair.label, _verdict(ok), kind, checks)


def conj_dual_report(pair: TDPair) -> ConjectureReport:
    """(A, A*) is isomorphic to (A^T, A*^T)."""
    key = "transpose-isomorphism"
    kind = _kind(pair, krawtchouk_theorem=True)
    try:
        intertwiner = iso_solver(pair, dual(pair))
    except TDPairError as exc:
        return ConjectureReport(key, pair.label, Verdict.FAILS, kind, {"error": str(exc)})
    if intertwiner is None:
        return ConjectureReport(key, pair.label, Verdict.FAILS, kind, {"intertwiner": None})
    return ConjectureReport(key, pair.label, Verdict.HOLDS, kind, {"intertwiner": intertwiner.to_dict()})


# ---------------------------------------------------------------------------
# Dolan-Grady relations
# ---------------------------------------------------------------------------


def dolan_grady_check(pair: TDPair) -> ConjectureReport:
    """[A,[A,[A,A*]]] = 4[A,A*] and [A*,[A*,[A*,A]]] = 4[A*,A]."""
    key = "dolan-grady"
    kind = CheckKind.THEOREM
    if not krawtchouk_type(pair).is_krawtchouk:
        return _not_applicable(key, pair, kind, "not a Krawtchouk pair")
    witness: Dict[str, object] = {}
    ok = True
    for name, X, Y in (("A", pair.A, pair.Astar), ("A*", pair.Astar, pair.A)):
        inner = commutator(X, Y)
        lhs = commutator(X, commutator(X, inner))
        rhs = inner * QQ(4)
        if not matrices_equal(lhs, rhs):
            ok = False
            witness[name] = {"lhs": format_matrix(lhs), "rhs": format_matrix(rhs)}
    return ConjectureReport(key, pair.label, _verdict(ok), kind, witness)


# ---------------------------------------------------------------------------
# Harness
# ---------------------------------------------------------------------------


def across_parameter_arrays(
    pair: TDPair,
    key: str,
    check: Callable[[TDPair, ParameterArray], ConjectureReport],
) -> ConjectureReport:
    """
    Run a parameter-array check once per combination of standard orderings.

    Combinations whose U_0 is not one-dimensional are not applicable; the
    overall verdict fails if any combination fails.
    """
    kind = CheckKind.CONJECTURE
    try:
        orderings_a, orderings_astar = standard_orderings(pair)
    except NotAPath as exc:
        return _not_applicable(key, pair, kind, str(exc))

    rows: List[Dict[str, object]] = []
    verdicts: List[Verdict] = []
    for theta in orderings_a:
        for theta_star in orderings_astar:
            row: Dict[str, object] = {
                "theta": format_vector(theta),
                "theta_star": format_vector(theta_star),
            }
            try:
                pa = parameter_array(pair, theta, theta_star)
            except Rho0NotOne as exc:
                verdict, witness = Verdict.NOT_APPLICABLE, {"reason": f"rho_0 = {exc.dimension}"}
            else:
                report = check(pair, pa)
                verdict, witness = report.verdict, report.witness
            row["verdict"] = verdict.value
            row["witness"] = witness
            verdicts.append(verdict)
            rows.append(row)

    if Verdict.FAILS in verdicts:
        overall = Verdict.FAILS
    elif Verdict.HOLDS in verdicts:
        overall = Verdict.HOLDS
    else:
        overall = Verdict.NOT_APPLICABLE
    return ConjectureReport(key, pair.label, overall, kind, {"arrays": rows})


def run_all(
    pair: TDPair, samples: int = 20, seed: int = 0, bound: int = 5
) -> List[ConjectureReport]:
    """Every single-pair check, in a fixed order."""
    checks: List[Callable[[], ConjectureReport]] = [
        lambda: conj_shape_report(pair),
        lambda: conj_form_report(pair),
        lambda: conj_dagger_report(pair, samples, seed, bound),
        lambda: conj_dual_report(pair),
        lambda: across_parameter_arrays(pair, "parameter-array-conditions", conj_main_report),
        lambda: across_parameter_arrays(pair, "split-trace-formulas", conjz_report),
        lambda: across_parameter_arrays(pair, "trace-ratio", trace_ratio_report),
        lambda: conjzz_report(pair),
        lambda: dolan_grady_check(pair),
    ]
    reports = []
    for check in checks:
        report = check()
        if report.verdict is Verdict.FAILS:
            log.warning("%s fails on %s (%s)", report.key, pair.label, report.kind.value)
        reports.append(report)
    return reports


__all__ = [
    "Verdict",
    "CheckKind",
    "ConjectureReport",
    "idempotent_E0",
    "conjz_report",
    "trace_ratio_report",
    "eight_split_sequences",
    "conjzz_report",
    "conj_main_check",
    "conj_main_report",
    "conj_parameter_array_iso",
    "conj_shape_report",
    "conj_form_report",
    "conj_dagger_report",
    "conj_dual_report",
    "dolan_grady_check",
    "across_parameter_arrays",
    "run_all",
]
