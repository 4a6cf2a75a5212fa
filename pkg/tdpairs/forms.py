from __future__ import annotations

"""
Invariant bilinear forms, the antiautomorphism they induce, and
isomorphism solving between TD pairs.

All three reduce to one problem: find every matrix X with ``X P_k = Q_k X``
for a list of matrix pairs. The first pair is diagonalizable with known
eigenspaces, so X is written on an eigenbasis of P_0 where it is block
diagonal, and only the block entries are unknowns.
"""

from dataclasses import dataclass, field
import random
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .constructions import dual, negate, swap
from .errors import (
    FormSpaceDimension,
    InternalInvariantViolation,
    SolutionSpaceDimension,
)
from .linalg import (
    Scalar,
    Vector,
    Word,
    apply,
    flatten,
    format_matrix,
    format_scalar,
    from_columns,
    identity,
    inverse,
    is_invertible,
    is_zero,
    kernel_basis,
    matrices_equal,
    matrix,
    normalize_first_nonzero,
    proportionality,
    random_matrix,
    solve,
    word_basis,
)
from .logging import get_logger
from .pairs import TDPair, eigenspace_bases

log = get_logger(__name__)


def solve_intertwiners(
    source_spaces: Sequence[Tuple[Scalar, Sequence[Vector]]],
    target_spaces: Mapping[Scalar, Sequence[Vector]],
    constraints: Sequence[Tuple[DomainMatrix, DomainMatrix]],
    target_dim: int,
) -> List[DomainMatrix]:
    """
    Basis of {X : X P_0 = Q_0 X and X P_k = Q_k X for every constraint}.

    ``source_spaces`` lists the eigenspaces of P_0 (they must span the
    source), ``target_spaces`` maps each eigenvalue to an eigenspace basis of
    Q_0. X sends each source eigenvector into the matching target eigenspace,
    so X is a combination of rank-one generators ``t (S^-1)_c``.
    """
    columns = [v for _, basis in source_spaces for v in basis]
    source_dim = len(columns[0])
    if len(columns) != source_dim:
        raise InternalInvariantViolation("Source eigenspaces do not span the space.")
    dual_rows = inverse(from_columns(columns, source_dim)).to_list()

    generators: List[Tuple[Vector, Vector]] = []
    offset = 0
    for theta, basis in source_spaces:
        for t in target_spaces.get(theta, []):
            for c in range(offset, offset + len(basis)):
                generators.append((list(t), dual_rows[c]))
        offset += len(basis)
    if not generators:
        return []

    constraint_rows = [(P.transpose(), Q) for P, Q in constraints]
    stacked: List[Vector] = []
    for t, r in generators:
        # (t r) P - Q (t r) = t (P^T r)^T - (Q t) r^T
        column: Vector = []
        for P_t, Q in constraint_rows:
            rP = apply(P_t, r)
            Qt = apply(Q, t)
            column.extend(a * b - c * e for a, c in zip(t, Qt) for b, e in zip(rP, r))
        stacked.append(column)

    if stacked and stacked[0]:
        coefficients = kernel_basis(from_columns(stacked, len(stacked[0])))
    else:
        coefficients = [
            [QQ.one if i == j else QQ.zero for j in range(len(generators))]
            for i in range(len(generators))
        ]

    solutions = []
    for coefficient in coefficients:
        entries = [[QQ.zero] * source_dim for _ in range(target_dim)]
        for weight, (t, r) in zip(coefficient, generators):
            if not weight:
                continue
            for i, t_i in enumerate(t):
                if t_i:
                    scaled = weight * t_i
                    row = entries[i]
                    for j, r_j in enumerate(r):
                        if r_j:
                            row[j] += scaled * r_j
        solutions.append(matrix(entries))
    return solutions


def _source_spaces(pair: TDPair) -> List[Tuple[Scalar, Sequence[Vector]]]:
    return list(zip(pair.eig_a.eigenvalues, pair.eig_a.bases))


# ---------------------------------------------------------------------------
# Invariant bilinear forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FormMatrix:
    """Gram matrix M of a bilinear form with <Xu, v> = <u, X^dagger v>."""

    M: DomainMatrix

    @property
    def is_symmetric(self) -> bool:
        return matrices_equal(self.M, self.M.transpose())

    @property
    def is_nondegenerate(self) -> bool:
        return is_invertible(self.M)

    def to_dict(self) -> dict:
        return {
            "matrix": format_matrix(self.M),
            "symmetric": self.is_symmetric,
            "nondegenerate": self.is_nondegenerate,
        }


def form_space(pair: TDPair) -> List[DomainMatrix]:
    """Basis of {M : A^T M = M A and A*^T M = M A*}."""
    At, Astar_t = pair.A.transpose(), pair.Astar.transpose()
    targets = eigenspace_bases(At, pair.eig_a.eigenvalues)
    return solve_intertwiners(_source_spaces(pair), targets, [(pair.Astar, Astar_t)], pair.dim)


def invariant_form(pair: TDPair) -> FormMatrix:
    """
    The unique (up to scalar) invariant form, normalised so its first
    nonzero entry is 1. Raises FormSpaceDimension if the space is not a line.
    """
    space = form_space(pair)
    if len(space) != 1:
        raise FormSpaceDimension(len(space))
    form = FormMatrix(normalize_first_nonzero(space[0]))
    if not form.is_symmetric or not form.is_nondegenerate:
        raise InternalInvariantViolation(
            f"Invariant form of {pair.label} is not a nondegenerate symmetric matrix."
        )
    return form


class Dagger:
    """X -> M^-1 X^T M for the invariant form M."""

    def __init__(self, form: FormMatrix) -> None:
        self.form = form
        self._inverse = inverse(form.M)

    def __call__(self, X: DomainMatrix) -> DomainMatrix:
        return self._inverse * X.transpose() * self.form.M


def dagger_apply(pair: TDPair, X: DomainMatrix) -> DomainMatrix:
    return Dagger(invariant_form(pair))(X)


def dagger_report(
    pair: TDPair,
    samples: int = 20,
    seed: int = 0,
    bound: int = 5,
    form: Optional[FormMatrix] = None,
) -> Dict[str, object]:
    """
    Check that dagger fixes A and A*, is an involution and reverses products
    on seeded random rational matrices.
    """
    form = form or invariant_form(pair)
    dagger = Dagger(form)
    rng = random.Random(seed)
    involution = True
    anti = True
    for _ in range(samples):
        X = random_matrix(pair.dim, rng, bound)
        Y = random_matrix(pair.dim, rng, bound)
        if not matrices_equal(dagger(dagger(X)), X):
            involution = False
        if not matrices_equal(dagger(X * Y), dagger(Y) * dagger(X)):
            anti = False
    return {
        "fixes_A": matrices_equal(dagger(pair.A), pair.A),
        "fixes_Astar": matrices_equal(dagger(pair.Astar), pair.Astar),
        "involution": involution,
        "antiautomorphism": anti,
        "samples": samples,
        "seed": seed,
    }


# ---------------------------------------------------------------------------
# Isomorphisms
# ---------------------------------------------------------------------------


@dataclass
class Intertwiner:
    """Invertible gamma with gamma A1 = A2 gamma and gamma A1* = A2* gamma."""

    gamma: DomainMatrix
    source: Optional[str] = None
    target: Optional[str] = None

    def check(self, source: TDPair, target: TDPair) -> bool:
        g = self.gamma
        return (
            is_invertible(g)
            and matrices_equal(g * source.A, target.A * g)
            and matrices_equal(g * source.Astar, target.Astar * g)
        )

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "target": self.target,
            "gamma": format_matrix(self.gamma),
        }


def intertwiner_space(p1: TDPair, p2: TDPair) -> List[DomainMatrix]:
    if p1.dim != p2.dim:
        return []
    targets = {
        theta: list(basis) for theta, basis in zip(p2.eig_a.eigenvalues, p2.eig_a.bases)
    }
    return solve_intertwiners(_source_spaces(p1), targets, [(p1.Astar, p2.Astar)], p2.dim)


def iso_solver(p1: TDPair, p2: TDPair) -> Optional[Intertwiner]:
    """
    An isomorphism from p1 to p2, or None when they are not isomorphic.

    Raises SolutionSpaceDimension if the intertwiner space has dimension > 1.
    """
    space = intertwiner_space(p1, p2)
    if not space:
        log.debug("No intertwiner from %s to %s", p1.label, p2.label)
        return None
    if len(space) > 1:
        raise SolutionSpaceDimension(len(space))
    gamma = normalize_first_nonzero(space[0])
    if not is_invertible(gamma):
        raise InternalInvariantViolation(
            f"Intertwiner from {p1.label} to {p2.label} is singular."
        )
    return Intertwiner(gamma, p1.label, p2.label)


@dataclass
class FourIsoReport:
    negate: Optional[Intertwiner]
    swap: Optional[Intertwiner]
    negate_swap: Optional[Intertwiner]
    composition_coherent: bool = False

    @property
    def passed(self) -> bool:
        return (
            self.negate is not None
            and self.swap is not None
            and self.negate_swap is not None
            and self.composition_coherent
        )

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "composition_coherent": self.composition_coherent,
            "negate": self.negate.to_dict() if self.negate else None,
            "swap": self.swap.to_dict() if self.swap else None,
            "negate_swap": self.negate_swap.to_dict() if self.negate_swap else None,
        }


def four_iso_report(pair: TDPair) -> FourIsoReport:
    """
    Certify (A, A*) ≅ (-A, -A*) ≅ (A*, A) ≅ (-A*, -A).

    Coherence: the isomorphism (A*, A) -> (-A, -A*) composed with the swap
    isomorphism must be proportional to the negation isomorphism.
    """
    negated, swapped = negate(pair), swap(pair)
    both = negate(swapped)
    report = FourIsoReport(
        negate=_certified(pair, negated),
        swap=_certified(pair, swapped),
        negate_swap=_certified(pair, both),
    )
    if report.negate and report.swap:
        bridge = iso_solver(swapped, negated)
        if bridge is not None:
            composed = flatten(bridge.gamma * report.swap.gamma)
            report.composition_coherent = (
                proportionality(composed, flatten(report.negate.gamma)) is not None
            )
    return report


def _certified(source: TDPair, target: TDPair) -> Optional[Intertwiner]:
    intertwiner = iso_solver(source, target)
    if intertwiner is None or not intertwiner.check(source, target):
        return None
    return intertwiner


@dataclass
class DualIsoReport:
    form: Optional[FormMatrix]
    intertwiner: Optional[Intertwiner]
    form_intertwines: bool
    gamma_matches_form: bool

    @property
    def passed(self) -> bool:
        return self.intertwiner is not None and self.form_intertwines and self.gamma_matches_form

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "form_intertwines": self.form_intertwines,
            "gamma_matches_form": self.gamma_matches_form,
            "intertwiner": self.intertwiner.to_dict() if self.intertwiner else None,
        }


def dual_iso_check(pair: TDPair, form: Optional[FormMatrix] = None) -> DualIsoReport:
    """Certify (A, A*) ≅ (A^T, A*^T) and that the form matrix is such an isomorphism."""
    form = form or invariant_form(pair)
    transposed = dual(pair)
    M = form.M
    intertwines = (
        form.is_nondegenerate
        and matrices_equal(M * pair.A, transposed.A * M)
        and matrices_equal(M * pair.Astar, transposed.Astar * M)
    )
    intertwiner = _certified(pair, transposed)
    matches = intertwiner is not None and (
        proportionality(flatten(intertwiner.gamma), flatten(M)) is not None
    )
    return DualIsoReport(form, intertwiner, intertwines, matches)


def commutant_check(pair: TDPair) -> Dict[str, object]:
    """Matrices commuting with A and A* must be the scalars."""
    space = intertwiner_space(pair, pair)
    scalar = len(space) == 1 and (
        proportionality(flatten(space[0]), flatten(identity(pair.dim))) is not None
    )
    return {"dimension": len(space), "scalars_only": scalar}


# ---------------------------------------------------------------------------
# Expressing matrices as noncommutative polynomials in A and A*
# ---------------------------------------------------------------------------


def word_label(word: Word) -> str:
    return "".join(word) if word else "I"


@dataclass
class AlgebraExpression:
    terms: List[Tuple[Word, Scalar]] = field(default_factory=list)

    def coefficient(self, word: Word) -> Scalar:
        for candidate, value in self.terms:
            if candidate == word:
                return value
        return QQ.zero

    def to_dict(self) -> dict:
        return {word_label(word): format_scalar(value) for word, value in self.terms}


def express_in_pair_algebra(pair: TDPair, X: DomainMatrix) -> AlgebraExpression:
    """
    Coefficients of X on the word basis of the algebra generated by A and A*.

    Only nonzero coefficients are kept. The algebra must be the full matrix
    algebra, so a solution always exists.
    """
    basis = word_basis(pair.A, pair.Astar)
    system = from_columns([flatten(M) for _, M in basis], pair.dim * pair.dim)
    solution = solve(system, flatten(X))
    if solution is None:
        raise InternalInvariantViolation(f"Matrix is not in the algebra generated by {pair.label}.")
    terms = [(word, value) for (word, _), value in zip(basis, solution) if value]
    return AlgebraExpression(terms)


def iso_polynomials(pair: TDPair, report: Optional[FourIsoReport] = None) -> Dict[str, dict]:
    """Word expansions of the three isomorphisms from the four-pair report."""
    report = report or four_iso_report(pair)
    expansions = {}
    for name, intertwiner in (
        ("negate", report.negate),
        ("swap", report.swap),
        ("negate_swap", report.negate_swap),
    ):
        if intertwiner is not None and not is_zero(intertwiner.gamma):
            expansions[name] = express_in_pair_algebra(pair, intertwiner.gamma).to_dict()
    return expansions


__all__ = [
    "solve_intertwiners",
    "FormMatrix",
    "form_space",
    "invariant_form",
    "Dagger",
    "dagger_apply",
    "dagger_report",
    "Intertwiner",
    "intertwiner_space",
    "iso_solver",
    "FourIsoReport",
    "four_iso_report",
    "DualIsoReport",
    "dual_iso_check",
    "commutant_check",
    "word_label",
    "AlgebraExpression",
    "express_in_pair_algebra",
    "iso_polynomials",
]
