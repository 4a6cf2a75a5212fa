from __future__ import annotations

"""
Drinfel'd polynomial of a Krawtchouk TD pair.

With split sequence zeta_0..zeta_d for the orderings ``d - 2i`` / ``2i - d``
the polynomial is ``P(x) = sum_i (-1)^i zeta_i / ((i!)^2 4^i) x^i``. It
classifies Krawtchouk pairs up to isomorphism.
"""

from dataclasses import dataclass
from math import factorial
from typing import Dict, List, Optional, Sequence

from sympy import Poly
from sympy.polys.domains import QQ

from .constructions import ConstructionSpec, leonard_krawtchouk, negate, swap
from .errors import BadParameter
from .forms import iso_solver
from .linalg import (
    Scalar,
    format_scalar,
    format_vector,
    poly_coefficients,
    poly_from_coefficients,
    to_scalar,
)
from .logging import get_logger
from .pairs import TDPair, krawtchouk_type, split_sequence

log = get_logger(__name__)


@dataclass(frozen=True)
class DrinfeldPoly:
    poly: Poly

    @property
    def coefficients(self) -> List[Scalar]:
        return poly_coefficients(self.poly)

    def at(self, x: object) -> Scalar:
        value = QQ.zero
        for coefficient in reversed(self.coefficients):
            value = value * to_scalar(x) + coefficient
        return value

    def text(self) -> str:
        """Render as ``1 - 9/8 λ + 3/2 λ^2``."""
        pieces: List[str] = []
        for power, coefficient in enumerate(self.coefficients):
            if not coefficient and power:
                continue
            magnitude = format_scalar(abs(coefficient))
            if power == 0:
                body = format_scalar(coefficient)
            else:
                variable = "λ" if power == 1 else f"λ^{power}"
                body = variable if magnitude == "1" else f"{magnitude} {variable}"
                pieces.append("- " if coefficient < 0 else "+ ")
            pieces.append(body)
        return " ".join(_join(pieces))

    def to_dict(self) -> dict:
        return {
            "coefficients": format_vector(self.coefficients),
            "text": self.text(),
            "degree": self.poly.degree(),
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DrinfeldPoly):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(tuple(format_vector(self.coefficients)))


def _join(pieces: Sequence[str]) -> List[str]:
    # sign markers glue onto the term that follows them
    joined: List[str] = []
    pending = ""
    for piece in pieces:
        if piece in ("- ", "+ "):
            pending = piece
            continue
        joined.append(f"{pending}{piece}")
        pending = ""
    return joined


def drinfeld_from_zeta(zeta: Sequence[Scalar]) -> DrinfeldPoly:
    coefficients = [
        QQ((-1) ** i) * zeta_i / QQ(factorial(i) ** 2 * 4 ** i)
        for i, zeta_i in enumerate(zeta)
    ]
    return DrinfeldPoly(poly_from_coefficients(coefficients))


def drinfeld_poly(pair: TDPair) -> DrinfeldPoly:
    """Drinfel'd polynomial of a verified Krawtchouk pair."""
    kraw = krawtchouk_type(pair)
    if not kraw.is_krawtchouk:
        raise BadParameter(f"{pair.label} is not a Krawtchouk TD pair.")
    split = split_sequence(pair, kraw.theta, kraw.theta_star)
    return drinfeld_from_zeta(split.zeta)


def single_factor_polynomial(d: int, a: object) -> DrinfeldPoly:
    """Drinfel'd polynomial of the evaluation module (d, a)."""
    return drinfeld_poly(leonard_krawtchouk(d, a))


@dataclass
class DrinfeldReport:
    polynomial: DrinfeldPoly
    constant_term_one: bool
    value_at_one: Scalar
    product: Optional[DrinfeldPoly] = None

    @property
    def nonzero_at_one(self) -> bool:
        return self.value_at_one != 0

    @property
    def multiplicative(self) -> Optional[bool]:
        if self.product is None:
            return None
        return self.product == self.polynomial

    @property
    def passed(self) -> bool:
        return self.constant_term_one and self.nonzero_at_one

    def to_dict(self) -> dict:
        payload = {
            "polynomial": self.polynomial.to_dict(),
            "constant_term_one": self.constant_term_one,
            "value_at_one": format_scalar(self.value_at_one),
            "nonzero_at_one": self.nonzero_at_one,
        }
        if self.product is not None:
            payload["factor_product"] = self.product.to_dict()
            payload["multiplicative"] = self.multiplicative
        return payload


def drinfeld_checks(pair: TDPair, spec: Optional[ConstructionSpec] = None) -> DrinfeldReport:
    """
    P(0) = 1 and P(1) != 0; with a construction spec, also compare P against
    the product of the single-factor polynomials.
    """
    polynomial = drinfeld_poly(pair)
    product = None
    if spec is not None:
        product_poly = poly_from_coefficients([QQ.one])
        for d, a in spec.factors:
            product_poly = product_poly * single_factor_polynomial(d, a).poly
        product = DrinfeldPoly(product_poly)
    report = DrinfeldReport(
        polynomial=polynomial,
        constant_term_one=polynomial.coefficients[0] == 1,
        value_at_one=polynomial.at(1),
        product=product,
    )
    if report.multiplicative is False:
        log.warning("P for %s differs from the product of its factor polynomials", pair.label)
    return report


def isomorphism_invariance_check(pair: TDPair) -> Dict[str, bool]:
    """P agrees across (A, A*), (-A, -A*), (A*, A) and (-A*, -A)."""
    reference = drinfeld_poly(pair)
    swapped = swap(pair)
    variants = {
        "negate": negate(pair),
        "swap": swapped,
        "negate_swap": negate(swapped),
    }
    return {name: drinfeld_poly(variant) == reference for name, variant in variants.items()}


@dataclass
class InjectivityEntry:
    first: str
    second: str
    same_polynomial: bool
    isomorphic: bool

    @property
    def consistent(self) -> bool:
        return self.same_polynomial == self.isomorphic

    def to_dict(self) -> dict:
        return {
            "first": self.first,
            "second": self.second,
            "same_polynomial": self.same_polynomial,
            "isomorphic": self.isomorphic,
            "consistent": self.consistent,
        }


def injectivity_matrix(pairs: Sequence[TDPair]) -> List[InjectivityEntry]:
    """Compare equality of P with isomorphism for every pair of instances."""
    polynomials = [drinfeld_poly(pair) for pair in pairs]
    entries = []
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            isomorphic = (
                pairs[i].dim == pairs[j].dim and iso_solver(pairs[i], pairs[j]) is not None
            )
            entries.append(
                InjectivityEntry(
                    pairs[i].label or str(i),
                    pairs[j].label or str(j),
                    polynomials[i] == polynomials[j],
                    isomorphic,
                )
            )
    return entries


__all__ = [
    "DrinfeldPoly",
    "drinfeld_from_zeta",
    "drinfeld_poly",
    "single_factor_polynomial",
    "DrinfeldReport",
    "drinfeld_checks",
    "isomorphism_invariance_check",
    "InjectivityEntry",
    "injectivity_matrix",
]
