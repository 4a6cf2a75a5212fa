from __future__ import annotations

"""
Tridiagonal pair recognition and the invariants derived from it.

A ``TDPair`` carries its two matrices together with their cached eigen
analysis and the result of checking the four defining axioms. Split
decompositions, split sequences, parameter arrays and shapes are computed
from a verified pair and a chosen standard ordering of each spectrum.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Poly
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .errors import (
    InternalInvariantViolation,
    IrrationalSpectrum,
    NotAPath,
    NotDiagonalizable,
    Rho0NotOne,
)
from .linalg import (
    Scalar,
    Vector,
    apply,
    format_scalar,
    format_vector,
    generated_algebra_dim,
    identity,
    invariant_subspace_witness,
    is_squarefree,
    is_zero,
    kernel_basis,
    min_poly,
    poly_from_coefficients,
    proportionality,
    rational_roots,
    same_span,
    shifted,
    subspace_contains,
    subspace_intersection,
)
from .logging import get_logger

log = get_logger(__name__)

Ordering = Tuple[Scalar, ...]


# ---------------------------------------------------------------------------
# Eigen analysis
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EigenData:
    """Eigenvalues (descending), primitive idempotents and eigenspace bases."""

    eigenvalues: Tuple[Scalar, ...]
    projectors: Tuple[DomainMatrix, ...]
    bases: Tuple[Tuple[Vector, ...], ...]

    @property
    def diameter(self) -> int:
        return len(self.eigenvalues) - 1

    def index_of(self, theta: Scalar) -> int:
        try:
            return self.eigenvalues.index(theta)
        except ValueError as exc:
            raise KeyError(f"{format_scalar(theta)} is not an eigenvalue.") from exc

    def projector_for(self, theta: Scalar) -> DomainMatrix:
        return self.projectors[self.index_of(theta)]

    def basis_for(self, theta: Scalar) -> Tuple[Vector, ...]:
        return self.bases[self.index_of(theta)]

    def mapped(self, alpha: Scalar, beta: Scalar) -> "EigenData":
        """Eigen data of ``alpha*M + beta*I`` for nonzero alpha."""
        pairs = sorted(
            zip((alpha * theta + beta for theta in self.eigenvalues), self.projectors, self.bases),
            key=lambda item: item[0],
            reverse=True,
        )
        return EigenData(
            eigenvalues=tuple(item[0] for item in pairs),
            projectors=tuple(item[1] for item in pairs),
            bases=tuple(item[2] for item in pairs),
        )


def eigen_analyze(M: DomainMatrix) -> EigenData:
    """
    Eigenvalues, primitive idempotents and eigenspace bases of M.

    Raises NotDiagonalizable when the minimal polynomial has a repeated
    factor and IrrationalSpectrum when it has a nonlinear irreducible factor.
    """
    minimal = min_poly(M)
    if not is_squarefree(minimal):
        raise NotDiagonalizable(f"Minimal polynomial {minimal.as_expr()} is not squarefree.")
    roots, splits = rational_roots(minimal)
    if not splits:
        raise IrrationalSpectrum(
            f"Minimal polynomial {minimal.as_expr()} has an irreducible factor of degree > 1."
        )

    n = M.shape[0]
    eye = identity(n)
    shifts = [shifted(M, theta) for theta in roots]
    projectors = []
    for i, theta in enumerate(roots):
        projector = eye
        for j, other in enumerate(roots):
            if j != i:
                projector = projector * shifts[j] * (QQ.one / (theta - other))
        projectors.append(projector)

    bases = tuple(tuple(kernel_basis(shift)) for shift in shifts)
    log.debug("Eigenvalues %s with multiplicities %s", format_vector(roots), [len(b) for b in bases])
    return EigenData(eigenvalues=tuple(roots), projectors=tuple(projectors), bases=bases)


def eigenspace_bases(M: DomainMatrix, eigenvalues: Sequence[Scalar]) -> Dict[Scalar, List[Vector]]:
    """Kernel bases of ``M - theta*I`` for already known eigenvalues."""
    return {theta: kernel_basis(shifted(M, theta)) for theta in eigenvalues}


# ---------------------------------------------------------------------------
# Axiom verification
# ---------------------------------------------------------------------------


@dataclass
class AxiomResult:
    name: str
    passed: bool
    detail: str = ""
    witness: Optional[dict] = None

    def to_dict(self) -> dict:
        payload = {"axiom": self.name, "passed": self.passed, "detail": self.detail}
        if self.witness is not None:
            payload["witness"] = self.witness
        return payload


@dataclass
class VerificationReport:
    """Per-axiom outcome of checking the tridiagonal pair axioms."""

    diagonalizable: AxiomResult
    tridiagonal_a: AxiomResult
    tridiagonal_astar: AxiomResult
    irreducible: AxiomResult
    algebra_dim: Optional[int] = None

    @property
    def axioms(self) -> List[AxiomResult]:
        return [self.diagonalizable, self.tridiagonal_a, self.tridiagonal_astar, self.irreducible]

    @property
    def passed(self) -> bool:
        return all(axiom.passed for axiom in self.axioms)

    def failing(self) -> List[str]:
        return [axiom.name for axiom in self.axioms if not axiom.passed]

    def swapped(self) -> "VerificationReport":
        """Report for the pair with the roles of A and A* exchanged."""
        return VerificationReport(
            diagonalizable=self.diagonalizable,
            tridiagonal_a=AxiomResult(
                "ii", self.tridiagonal_astar.passed, self.tridiagonal_astar.detail,
                self.tridiagonal_astar.witness,
            ),
            tridiagonal_astar=AxiomResult(
                "iii", self.tridiagonal_a.passed, self.tridiagonal_a.detail,
                self.tridiagonal_a.witness,
            ),
            irreducible=self.irreducible,
            algebra_dim=self.algebra_dim,
        )

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "failing": self.failing(),
            "algebra_dim": self.algebra_dim,
            "axioms": [axiom.to_dict() for axiom in self.axioms],
        }


def _support_edges(eig: EigenData, other: DomainMatrix) -> List[Tuple[int, int]]:
    """Index pairs i < j with E_i X E_j != 0 or E_j X E_i != 0."""
    right = [other * projector for projector in eig.projectors]
    edges = []
    size = len(eig.projectors)
    for i in range(size):
        for j in range(i + 1, size):
            if not is_zero(eig.projectors[i] * right[j]) or not is_zero(
                eig.projectors[j] * right[i]
            ):
                edges.append((i, j))
    return edges


def _path_components(size: int, edges: Sequence[Tuple[int, int]]) -> Optional[List[List[int]]]:
    """Split a graph into simple paths, or None if it is not a linear forest."""
    neighbours: Dict[int, List[int]] = {vertex: [] for vertex in range(size)}
    for i, j in edges:
        neighbours[i].append(j)
        neighbours[j].append(i)
    if any(len(adjacent) > 2 for adjacent in neighbours.values()):
        return None

    seen = set()
    components = []
    for start in range(size):
        if start in seen or len(neighbours[start]) == 2:
            continue
        path = [start]
        seen.add(start)
        previous, current = None, start
        while True:
            following = [v for v in neighbours[current] if v != previous]
            if not following:
                break
            previous, current = current, following[0]
            path.append(current)
            seen.add(current)
        components.append(path)
    if len(seen) != size:
        # vertices of degree two not reached from an endpoint lie on a cycle
        return None
    return components


def _tridiagonal_axiom(name: str, eig: EigenData, other: DomainMatrix) -> AxiomResult:
    edges = _support_edges(eig, other)
    components = _path_components(len(eig.eigenvalues), edges)
    if components is None:
        return AxiomResult(
            name,
            False,
            "Eigenspace support graph is not a union of paths.",
            {"edges": [[format_scalar(eig.eigenvalues[i]), format_scalar(eig.eigenvalues[j])] for i, j in edges]},
        )
    ordering = [format_scalar(eig.eigenvalues[index]) for path in components for index in path]
    return AxiomResult(name, True, "An ordering satisfying the tridiagonal condition exists.", {"ordering": ordering})


def _verify(
    A: DomainMatrix,
    Astar: DomainMatrix,
    eig_a: Optional[EigenData],
    eig_astar: Optional[EigenData],
    diagonal_detail: str = "",
) -> VerificationReport:
    if eig_a is None or eig_astar is None:
        skipped = "Not evaluated: axiom (i) failed."
        return VerificationReport(
            diagonalizable=AxiomResult("i", False, diagonal_detail),
            tridiagonal_a=AxiomResult("ii", False, skipped),
            tridiagonal_astar=AxiomResult("iii", False, skipped),
            irreducible=AxiomResult("iv", False, skipped),
        )

    n = A.shape[0]
    algebra_dim = generated_algebra_dim(A, Astar)
    if algebra_dim == n * n:
        irreducible = AxiomResult("iv", True, f"Generated algebra has dimension {n * n}.")
    else:
        witness = invariant_subspace_witness(A, Astar)
        irreducible = AxiomResult(
            "iv",
            False,
            f"Generated algebra has dimension {algebra_dim} < {n * n}.",
            {
                "algebra_dim": algebra_dim,
                "invariant_subspace": (
                    [format_vector(v) for v in witness] if witness is not None else None
                ),
            },
        )

    return VerificationReport(
        diagonalizable=AxiomResult("i", True, "Both minimal polynomials split into distinct linear factors."),
        tridiagonal_a=_tridiagonal_axiom("ii", eig_a, Astar),
        tridiagonal_astar=_tridiagonal_axiom("iii", eig_astar, A),
        irreducible=irreducible,
        algebra_dim=algebra_dim,
    )


def refresh_tridiagonal(
    report: VerificationReport,
    A: DomainMatrix,
    Astar: DomainMatrix,
    eig_a: EigenData,
    eig_astar: EigenData,
) -> VerificationReport:
    """Recompute axioms (ii)/(iii) after an affine change of A and A*; (i) and (iv) carry over."""
    return VerificationReport(
        diagonalizable=report.diagonalizable,
        tridiagonal_a=_tridiagonal_axiom("ii", eig_a, Astar),
        tridiagonal_astar=_tridiagonal_axiom("iii", eig_astar, A),
        irreducible=report.irreducible,
        algebra_dim=report.algebra_dim,
    )


def verify_td_pair(A: DomainMatrix, Astar: DomainMatrix) -> VerificationReport:
    """
    Check the four TD-pair axioms.

    Never raises on a negative outcome except IrrationalSpectrum, which puts
    the input outside the scope of exact rational analysis.
    """
    if A.shape != Astar.shape or A.shape[0] != A.shape[1]:
        raise ValueError("A and A* must be square matrices of the same size.")
    try:
        eig_a = eigen_analyze(A)
        eig_astar = eigen_analyze(Astar)
    except NotDiagonalizable as exc:
        return _verify(A, Astar, None, None, str(exc))
    return _verify(A, Astar, eig_a, eig_astar)


# ---------------------------------------------------------------------------
# The pair object
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TDPair:
    """Two square matrices with cached eigen analysis and verification status."""

    A: DomainMatrix
    Astar: DomainMatrix
    eig_a: EigenData
    eig_astar: EigenData
    verification: VerificationReport
    label: Optional[str] = None

    @classmethod
    def from_matrices(
        cls, A: DomainMatrix, Astar: DomainMatrix, label: Optional[str] = None
    ) -> "TDPair":
        """Analyse both matrices; raises NotDiagonalizable / IrrationalSpectrum."""
        if A.shape != Astar.shape or A.shape[0] != A.shape[1]:
            raise ValueError("A and A* must be square matrices of the same size.")
        eig_a = eigen_analyze(A)
        eig_astar = eigen_analyze(Astar)
        report = _verify(A, Astar, eig_a, eig_astar)
        return cls(A, Astar, eig_a, eig_astar, report, label)

    @property
    def dim(self) -> int:
        return self.A.shape[0]

    @property
    def diameter(self) -> int:
        return self.eig_a.diameter

    @property
    def is_verified(self) -> bool:
        return self.verification.passed


def _require_path(eig: EigenData, other: DomainMatrix) -> List[int]:
    edges = _support_edges(eig, other)
    components = _path_components(len(eig.eigenvalues), edges)
    if components is None or len(components) != 1:
        raise NotAPath(
            f"Support graph on {len(eig.eigenvalues)} eigenvalues with edges {edges} is not a path."
        )
    return components[0]


def standard_orderings(pair: TDPair) -> Tuple[List[Ordering], List[Ordering]]:
    """
    The standard orderings of the eigenvalues of A and of A*.

    Each list holds an ordering and its reversal; for diameter 0 the single
    ordering is returned once.
    """
    result = []
    for eig, other in ((pair.eig_a, pair.Astar), (pair.eig_astar, pair.A)):
        path = _require_path(eig, other)
        ordering = tuple(eig.eigenvalues[index] for index in path)
        reverse = tuple(reversed(ordering))
        result.append([ordering] if ordering == reverse else [ordering, reverse])
    return result[0], result[1]


def _check_standard(pair: TDPair, theta: Ordering, theta_star: Ordering) -> None:
    orderings_a, orderings_astar = standard_orderings(pair)
    if tuple(theta) not in orderings_a:
        raise ValueError(f"{format_vector(theta)} is not a standard ordering of A.")
    if tuple(theta_star) not in orderings_astar:
        raise ValueError(f"{format_vector(theta_star)} is not a standard ordering of A*.")


# ---------------------------------------------------------------------------
# Krawtchouk recognition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KrawtchoukType:
    is_krawtchouk: bool
    diameter: int
    theta: Ordering
    theta_star: Ordering

    def to_dict(self) -> dict:
        return {
            "is_krawtchouk": self.is_krawtchouk,
            "diameter": self.diameter,
            "theta": format_vector(self.theta),
            "theta_star": format_vector(self.theta_star),
        }


def krawtchouk_orderings(d: int) -> Tuple[Ordering, Ordering]:
    """``theta_i = d - 2i`` and ``theta*_i = 2i - d``."""
    return (
        tuple(QQ(d - 2 * i) for i in range(d + 1)),
        tuple(QQ(2 * i - d) for i in range(d + 1)),
    )


def krawtchouk_type(pair: TDPair) -> KrawtchoukType:
    """Decide whether ``d - 2i`` and ``2i - d`` are standard orderings."""
    d = pair.diameter
    theta, theta_star = krawtchouk_orderings(d)
    if not pair.is_verified or pair.eig_astar.diameter != d:
        return KrawtchoukType(False, d, theta, theta_star)
    try:
        orderings_a, orderings_astar = standard_orderings(pair)
    except NotAPath:
        return KrawtchoukType(False, d, theta, theta_star)
    matches = theta in orderings_a and theta_star in orderings_astar
    return KrawtchoukType(matches, d, theta, theta_star)


def default_orderings(pair: TDPair) -> Tuple[Ordering, Ordering]:
    """Krawtchouk orderings when they apply, else the first standard orderings."""
    kraw = krawtchouk_type(pair)
    if kraw.is_krawtchouk:
        return kraw.theta, kraw.theta_star
    orderings_a, orderings_astar = standard_orderings(pair)
    return orderings_a[0], orderings_astar[0]


# ---------------------------------------------------------------------------
# Split decomposition and split sequences
# ---------------------------------------------------------------------------


@dataclass
class SplitData:
    theta: Ordering
    theta_star: Ordering
    bases: List[List[Vector]]
    zeta: Tuple[Scalar, ...] = ()

    @property
    def dimensions(self) -> List[int]:
        return [len(basis) for basis in self.bases]

    def to_dict(self) -> dict:
        return {
            "theta": format_vector(self.theta),
            "theta_star": format_vector(self.theta_star),
            "dimensions": self.dimensions,
            "bases": [[format_vector(v) for v in basis] for basis in self.bases],
            "zeta": format_vector(self.zeta),
        }


def _images_inside(
    M: DomainMatrix, theta: Scalar, source: Sequence[Vector], target: Sequence[Vector], n: int
) -> bool:
    images = [apply(shifted(M, theta), vector) for vector in source]
    nonzero = [image for image in images if any(image)]
    if not nonzero:
        return True
    return bool(target) and subspace_contains(target, nonzero, n)


def split_decomposition(pair: TDPair, theta: Sequence[Scalar], theta_star: Sequence[Scalar]) -> SplitData:
    """
    Split decomposition U_i = (V*_0 + ... + V*_i) ∩ (V_i + ... + V_d) for the
    given standard orderings.

    The direct-sum, dimension, raising/lowering and partial-sum invariants are
    asserted; a failure raises InternalInvariantViolation.
    """
    theta, theta_star = tuple(theta), tuple(theta_star)
    _check_standard(pair, theta, theta_star)
    n, d = pair.dim, pair.diameter
    spaces = [list(pair.eig_a.basis_for(t)) for t in theta]
    dual_spaces = [list(pair.eig_astar.basis_for(t)) for t in theta_star]

    bases: List[List[Vector]] = []
    for i in range(d + 1):
        lower = [v for space in dual_spaces[: i + 1] for v in space]
        upper = [v for space in spaces[i:] for v in space]
        bases.append(subspace_intersection(lower, upper, n))

    dimensions = [len(basis) for basis in bases]
    rho = [len(space) for space in spaces]
    if dimensions != rho:
        raise InternalInvariantViolation(
            f"Split dimensions {dimensions} differ from eigenspace dimensions {rho}."
        )
    if sum(dimensions) != n or not same_span([v for b in bases for v in b], identity_rows(n), n):
        raise InternalInvariantViolation("Split subspaces do not form a direct sum decomposition.")

    for i in range(d + 1):
        following = bases[i + 1] if i < d else []
        if not _images_inside(pair.A, theta[i], bases[i], following, n):
            raise InternalInvariantViolation(f"(A - theta_{i}) U_{i} is not inside U_{i + 1}.")
        preceding = bases[i - 1] if i > 0 else []
        if not _images_inside(pair.Astar, theta_star[i], bases[i], preceding, n):
            raise InternalInvariantViolation(f"(A* - theta*_{i}) U_{i} is not inside U_{i - 1}.")

    sums = _partial_sums(bases, spaces, dual_spaces, n)
    if not all(sums["lower"]):
        i = sums["lower"].index(False)
        raise InternalInvariantViolation(f"U_0 + ... + U_{i} differs from V*_0 + ... + V*_{i}.")
    if not all(sums["upper"]):
        i = sums["upper"].index(False)
        raise InternalInvariantViolation(f"U_{i} + ... + U_d differs from V_{i} + ... + V_d.")

    return SplitData(theta=theta, theta_star=theta_star, bases=bases)


def _partial_sums(
    bases: Sequence[Sequence[Vector]],
    spaces: Sequence[Sequence[Vector]],
    dual_spaces: Sequence[Sequence[Vector]],
    n: int,
) -> Dict[str, List[bool]]:
    def flat(groups):
        return [v for group in groups for v in group]

    size = len(bases)
    return {
        "lower": [same_span(flat(bases[: i + 1]), flat(dual_spaces[: i + 1]), n) for i in range(size)],
        "upper": [same_span(flat(bases[i:]), flat(spaces[i:]), n) for i in range(size)],
    }


def split_sums_check(
    pair: TDPair, theta: Sequence[Scalar], theta_star: Sequence[Scalar]
) -> Dict[str, List[bool]]:
    """
    Per-index comparison of U_0 + ... + U_i with V*_0 + ... + V*_i ("lower")
    and of U_i + ... + U_d with V_i + ... + V_d ("upper").
    """
    split = split_decomposition(pair, theta, theta_star)
    spaces = [list(pair.eig_a.basis_for(t)) for t in split.theta]
    dual_spaces = [list(pair.eig_astar.basis_for(t)) for t in split.theta_star]
    return _partial_sums(split.bases, spaces, dual_spaces, pair.dim)


def identity_rows(n: int) -> List[Vector]:
    return [[QQ.one if i == j else QQ.zero for j in range(n)] for i in range(n)]


def split_sequence(pair: TDPair, theta: Sequence[Scalar], theta_star: Sequence[Scalar]) -> SplitData:
    """
    Split decomposition together with the split sequence zeta_0..zeta_d.

    zeta_i is the eigenvalue of (A*-th*_1)...(A*-th*_i)(A-th_{i-1})...(A-th_0)
    on the one-dimensional space U_0.
    """
    split = split_decomposition(pair, theta, theta_star)
    if split.dimensions[0] != 1:
        raise Rho0NotOne(split.dimensions[0])

    u = split.bases[0][0]
    zeta: List[Scalar] = [QQ.one]
    raised = u
    for i in range(1, pair.diameter + 1):
        raised = apply(shifted(pair.A, split.theta[i - 1]), raised)
        lowered = raised
        for k in range(i, 0, -1):
            lowered = apply(shifted(pair.Astar, split.theta_star[k]), lowered)
        ratio = proportionality(lowered, u)
        if ratio is None:
            raise InternalInvariantViolation(f"Split operator {i} does not preserve U_0.")
        zeta.append(ratio)

    split.zeta = tuple(zeta)
    return split


# ---------------------------------------------------------------------------
# Parameter arrays
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParameterArray:
    theta: Ordering
    theta_star: Ordering
    zeta: Tuple[Scalar, ...]

    @property
    def diameter(self) -> int:
        return len(self.theta) - 1

    def to_dict(self) -> dict:
        return {
            "theta": format_vector(self.theta),
            "theta_star": format_vector(self.theta_star),
            "zeta": format_vector(self.zeta),
        }


def parameter_array(
    pair: TDPair,
    theta: Optional[Sequence[Scalar]] = None,
    theta_star: Optional[Sequence[Scalar]] = None,
) -> ParameterArray:
    """Parameter array for the given (default: Krawtchouk) standard orderings."""
    if theta is None or theta_star is None:
        theta, theta_star = default_orderings(pair)
    split = split_sequence(pair, theta, theta_star)
    return ParameterArray(split.theta, split.theta_star, split.zeta)


def all_parameter_arrays(pair: TDPair) -> List[ParameterArray]:
    """Parameter arrays over every combination of standard orderings."""
    orderings_a, orderings_astar = standard_orderings(pair)
    return [
        parameter_array(pair, theta, theta_star)
        for theta in orderings_a
        for theta_star in orderings_astar
    ]


# ---------------------------------------------------------------------------
# Shapes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Shape:
    rho: Tuple[int, ...]

    @property
    def is_symmetric(self) -> bool:
        return self.rho == tuple(reversed(self.rho))

    @property
    def is_unimodal(self) -> bool:
        half = (len(self.rho) - 1) // 2
        return all(self.rho[i - 1] <= self.rho[i] for i in range(1, half + 1))

    def polynomial(self) -> Poly:
        return poly_from_coefficients([QQ(r) for r in self.rho])

    def to_dict(self) -> dict:
        return {
            "rho": list(self.rho),
            "symmetric": self.is_symmetric,
            "unimodal": self.is_unimodal,
        }


def shape_of(pair: TDPair) -> Shape:
    theta, _ = default_orderings(pair)
    return Shape(tuple(len(pair.eig_a.basis_for(t)) for t in theta))


def _segment(k: int) -> Poly:
    return poly_from_coefficients([QQ.one] * (k + 1))


def _factorizations(poly: Poly, largest: int) -> List[Tuple[int, ...]]:
    if poly.degree() == 0:
        return [()] if poly.LC() == 1 else []
    found = []
    for k in range(min(poly.degree(), largest), 0, -1):
        quotient, remainder = poly.div(_segment(k))
        if remainder.is_zero:
            found.extend((k,) + rest for rest in _factorizations(quotient, k))
    return found


def shape_factorization(shape: Shape) -> List[Tuple[int, ...]]:
    """
    Every multiset {d_j} (as a nonincreasing tuple) with
    sum rho_i x^i = prod (1 + x + ... + x^{d_j}). Empty if ρ_0 != 1 or none exists.
    """
    if not shape.rho or shape.rho[0] != 1:
        return []
    return _factorizations(shape.polynomial(), len(shape.rho) - 1)


def shape_factorization_general(shape: Shape) -> List[Tuple[int, ...]]:
    """Factorizations of the shape polynomial divided by ρ_0."""
    if not shape.rho or shape.rho[0] == 0:
        return []
    rho0 = shape.rho[0]
    if any(r % rho0 for r in shape.rho):
        return []
    return shape_factorization(Shape(tuple(r // rho0 for r in shape.rho)))


def check_shape(shape: Shape) -> Dict[str, bool]:
    """Symmetry and unimodality, which hold for the shape of every TD pair."""
    return {"symmetric": shape.is_symmetric, "unimodal": shape.is_unimodal}


__all__ = [
    "Ordering",
    "EigenData",
    "eigen_analyze",
    "eigenspace_bases",
    "AxiomResult",
    "VerificationReport",
    "refresh_tridiagonal",
    "verify_td_pair",
    "TDPair",
    "standard_orderings",
    "KrawtchoukType",
    "krawtchouk_orderings",
    "krawtchouk_type",
    "default_orderings",
    "SplitData",
    "split_decomposition",
    "split_sequence",
    "split_sums_check",
    "identity_rows",
    "ParameterArray",
    "parameter_array",
    "all_parameter_arrays",
    "Shape",
    "shape_of",
    "shape_factorization",
    "shape_factorization_general",
    "check_shape",
]
