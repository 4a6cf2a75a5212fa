from __future__ import annotations

"""
Generators for Krawtchouk TD pairs and the affine transformations between
them.

Every Krawtchouk pair over QQ is isomorphic to a tensor product of
evaluation modules of the sl2 loop algebra. The module of diameter d has a
basis w_0..w_d with ``e w_i = i(d-i+1) w_{i-1}`` and ``f w_i = w_{i+1}``; for
a nonzero parameter a the pair acts as ``A = e + f`` and ``A* = a e + a^-1 f``.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .errors import BadParameter, ConstructionRejected
from .linalg import (
    Scalar,
    format_scalar,
    identity,
    kron,
    matrix,
    poly_from_coefficients,
    to_scalar,
    zeros,
)
from .logging import get_logger
from .pairs import (
    EigenData,
    TDPair,
    eigenspace_bases,
    krawtchouk_type,
    refresh_tridiagonal,
    shape_of,
)

log = get_logger(__name__)


@dataclass(frozen=True)
class ConstructionSpec:
    """Ordered factors (d_j, a_j) of a tensor product of evaluation modules."""

    factors: Tuple[Tuple[int, Scalar], ...]

    @property
    def diameter(self) -> int:
        return sum(d for d, _ in self.factors)

    @property
    def dim(self) -> int:
        total = 1
        for d, _ in self.factors:
            total *= d + 1
        return total

    def validate(self) -> None:
        """Raise BadParameter unless the factors meet the tensor-product constraints."""
        if not self.factors:
            raise BadParameter("A construction needs at least one factor.")
        for d, a in self.factors:
            if d < 1:
                raise BadParameter(f"Diameter {d} must be a positive integer.")
            _check_parameter(a)
        for i, (_, a_i) in enumerate(self.factors):
            for _, a_j in self.factors[i + 1:]:
                if a_i == a_j:
                    raise BadParameter(f"Parameters repeat: {format_scalar(a_i)}.")
                if a_i * a_j == 1:
                    raise BadParameter(
                        f"Parameters {format_scalar(a_i)} and {format_scalar(a_j)} are mutually inverse."
                    )

    def to_string(self) -> str:
        return ",".join(f"{d}:{format_scalar(a)}" for d, a in self.factors)

    def __str__(self) -> str:
        return self.to_string()


def _check_parameter(a: Scalar) -> None:
    if a == 0 or a == 1 or a == -1:
        raise BadParameter(f"Parameter a={format_scalar(a)} must avoid 0, 1 and -1.")


def parse_spec(text: str) -> ConstructionSpec:
    """Parse ``"d1:a1,d2:a2,..."`` into a ConstructionSpec (not yet validated)."""
    factors: List[Tuple[int, Scalar]] = []
    if not text or not text.strip():
        raise BadParameter("Empty construction spec.")
    for token in text.split(","):
        parts = token.strip().split(":")
        if len(parts) != 2:
            raise BadParameter(f"Malformed factor {token!r}; expected 'd:a'.")
        try:
            d = int(parts[0])
            a = to_scalar(parts[1].strip())
        except (TypeError, ValueError) as exc:
            raise BadParameter(f"Malformed factor {token!r}: {exc}") from exc
        factors.append((d, a))
    return ConstructionSpec(tuple(factors))


def sl2_module(d: int) -> Tuple[DomainMatrix, DomainMatrix]:
    """Raising and lowering matrices (e, f) on the (d+1)-dimensional module."""
    if d == 0:
        return zeros(1, 1), zeros(1, 1)
    e = [[QQ.zero] * (d + 1) for _ in range(d + 1)]
    f = [[QQ.zero] * (d + 1) for _ in range(d + 1)]
    for i in range(1, d + 1):
        e[i - 1][i] = QQ(i * (d - i + 1))
    for i in range(d):
        f[i + 1][i] = QQ.one
    return matrix(e), matrix(f)


def leonard_matrices(d: int, a: Scalar) -> Tuple[DomainMatrix, DomainMatrix]:
    """Matrices of the evaluation module without parameter checks."""
    e, f = sl2_module(d)
    if d == 0:
        return e, f
    a = to_scalar(a)
    return e + f, e * a + f * (QQ.one / a)


def leonard_krawtchouk(d: int, a: object, label: Optional[str] = None) -> TDPair:
    """
    Krawtchouk Leonard pair of diameter d with parameter a.

    For d = 0 the pair is ([0], [0]) and a is not restricted.
    """
    if d < 0:
        raise BadParameter(f"Diameter {d} must be non-negative.")
    a = to_scalar(a)
    if d > 0:
        _check_parameter(a)
    A, Astar = leonard_matrices(d, a)
    return _accept(TDPair.from_matrices(A, Astar, label or f"{d}:{format_scalar(a)}"), d)


def tensor_matrices(factors: Sequence[Tuple[int, object]]) -> Tuple[DomainMatrix, DomainMatrix]:
    """
    Sum over slots of I ⊗ ... ⊗ X_j ⊗ ... ⊗ I for both matrices.

    No parameter validation, so degenerate products can be built on purpose.
    """
    blocks = [leonard_matrices(d, to_scalar(a)) for d, a in factors]
    sizes = [d + 1 for d, _ in factors]
    total = 1
    for size in sizes:
        total *= size
    A, Astar = zeros(total, total), zeros(total, total)
    for slot, (slot_a, slot_astar) in enumerate(blocks):
        left = 1
        for size in sizes[:slot]:
            left *= size
        right = total // (left * sizes[slot])
        A = A + kron(identity(left), kron(slot_a, identity(right)))
        Astar = Astar + kron(identity(left), kron(slot_astar, identity(right)))
    return A, Astar


def onsager_tensor(spec: ConstructionSpec, label: Optional[str] = None) -> TDPair:
    """
    Krawtchouk TD pair on the tensor product of evaluation modules.

    The result is verified, recognised as Krawtchouk of diameter sum(d_j) and
    checked to have shape coefficients of prod (1 + x + ... + x^{d_j});
    ConstructionRejected carries the report otherwise.
    """
    spec.validate()
    A, Astar = tensor_matrices(spec.factors)
    pair = TDPair.from_matrices(A, Astar, label or spec.to_string())
    pair = _accept(pair, spec.diameter)

    expected = poly_from_coefficients([QQ.one])
    for d, _ in spec.factors:
        expected = expected * poly_from_coefficients([QQ.one] * (d + 1))
    observed = shape_of(pair).polynomial()
    if observed != expected:
        raise ConstructionRejected(
            f"Shape {shape_of(pair).rho} does not match the factor diameters.",
            pair.verification,
        )
    log.info("Built %s (dim %d, diameter %d)", pair.label, pair.dim, pair.diameter)
    return pair


def _accept(pair: TDPair, diameter: int) -> TDPair:
    if not pair.is_verified:
        raise ConstructionRejected(
            f"{pair.label} fails axioms {pair.verification.failing()}.", pair.verification
        )
    kraw = krawtchouk_type(pair)
    if not kraw.is_krawtchouk or kraw.diameter != diameter:
        raise ConstructionRejected(
            f"{pair.label} is not of Krawtchouk type with diameter {diameter}.",
            pair.verification,
        )
    return pair


def transform(
    pair: TDPair,
    alpha: object,
    beta: object,
    alpha_star: object,
    beta_star: object,
    label: Optional[str] = None,
) -> TDPair:
    """The pair (alpha A + beta I, alpha* A* + beta* I)."""
    alpha, beta = to_scalar(alpha), to_scalar(beta)
    alpha_star, beta_star = to_scalar(alpha_star), to_scalar(beta_star)
    if alpha == 0 or alpha_star == 0:
        raise BadParameter("Scale factors alpha and alpha* must be nonzero.")
    eye = identity(pair.dim)
    A = pair.A * alpha + eye * beta
    Astar = pair.Astar * alpha_star + eye * beta_star
    eig_a = pair.eig_a.mapped(alpha, beta)
    eig_astar = pair.eig_astar.mapped(alpha_star, beta_star)
    return TDPair(
        A=A,
        Astar=Astar,
        eig_a=eig_a,
        eig_astar=eig_astar,
        verification=refresh_tridiagonal(pair.verification, A, Astar, eig_a, eig_astar),
        label=label,
    )


def negate(pair: TDPair) -> TDPair:
    """The pair (-A, -A*)."""
    return transform(pair, -1, 0, -1, 0, label=f"negate({pair.label})")


def swap(pair: TDPair) -> TDPair:
    """The pair (A*, A)."""
    return TDPair(
        A=pair.Astar,
        Astar=pair.A,
        eig_a=pair.eig_astar,
        eig_astar=pair.eig_a,
        verification=pair.verification.swapped(),
        label=f"swap({pair.label})",
    )


def _transposed(eig: EigenData, M: DomainMatrix) -> EigenData:
    bases = eigenspace_bases(M, eig.eigenvalues)
    return EigenData(
        eigenvalues=eig.eigenvalues,
        projectors=tuple(projector.transpose() for projector in eig.projectors),
        bases=tuple(tuple(bases[theta]) for theta in eig.eigenvalues),
    )


def dual(pair: TDPair) -> TDPair:
    """The pair (A^T, A*^T)."""
    At, Astar_t = pair.A.transpose(), pair.Astar.transpose()
    return TDPair(
        A=At,
        Astar=Astar_t,
        eig_a=_transposed(pair.eig_a, At),
        eig_astar=_transposed(pair.eig_astar, Astar_t),
        verification=pair.verification,
        label=f"dual({pair.label})",
    )


__all__ = [
    "ConstructionSpec",
    "parse_spec",
    "sl2_module",
    "leonard_matrices",
    "leonard_krawtchouk",
    "tensor_matrices",
    "onsager_tensor",
    "transform",
    "negate",
    "swap",
    "dual",
]
