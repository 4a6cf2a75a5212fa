from __future__ import annotations

"""
Exact rational linear algebra kernel.

Matrices are dense sympy ``DomainMatrix`` objects over ``QQ``, vectors are
lists of ``QQ`` elements and polynomials are sympy ``Poly`` objects over
``QQ`` in the indeterminate ``lambda``. No floating point is used anywhere.
"""

from fractions import Fraction
import random
import re
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy import Basic, Poly, Symbol
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .logging import get_logger

log = get_logger(__name__)

LAMBDA = Symbol("lambda")

Scalar = QQ.dtype
Vector = List[Scalar]
Word = Tuple[str, ...]

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


# ---------------------------------------------------------------------------
# Scalars
# ---------------------------------------------------------------------------


def to_scalar(value: object) -> Scalar:
    """Coerce ints, Fractions, sympy rationals and ``"p/q"`` strings to QQ."""
    if QQ.of_type(value):
        return value
    if isinstance(value, bool):
        raise TypeError("Booleans are not rationals.")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        match = _RATIONAL_PATTERN.match(value)
        if not match:
            raise ValueError(f"Not a rational literal: {value!r}")
        numerator = int(match.group(1))
        denominator = int(match.group(2) or 1)
        if denominator == 0:
            raise ValueError(f"Zero denominator in {value!r}")
        return QQ(numerator, denominator)
    if isinstance(value, Basic) and value.is_Rational:
        return QQ.from_sympy(value)
    raise TypeError(f"Cannot interpret {value!r} as an exact rational.")


def format_scalar(value: Scalar) -> str:
    """Render a rational in lowest terms as ``"p"`` or ``"p/q"``."""
    numerator = int(QQ.numer(value))
    denominator = int(QQ.denom(value))
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def format_vector(vector: Sequence[Scalar]) -> List[str]:
    return [format_scalar(entry) for entry in vector]


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


def matrix(rows: Sequence[Sequence[object]]) -> DomainMatrix:
    """Build a dense matrix over QQ from rows of rational-like entries."""
    converted = [[to_scalar(entry) for entry in row] for row in rows]
    if not converted or not converted[0]:
        raise ValueError("Matrices must have at least one row and one column.")
    width = len(converted[0])
    if any(len(row) != width for row in converted):
        raise ValueError("Ragged matrix rows.")
    return DomainMatrix(converted, (len(converted), width), QQ)


def identity(n: int) -> DomainMatrix:
    return matrix([[QQ.one if i == j else QQ.zero for j in range(n)] for i in range(n)])


def zeros(rows: int, cols: int) -> DomainMatrix:
    return matrix([[QQ.zero] * cols for _ in range(rows)])


def from_columns(columns: Sequence[Sequence[Scalar]], height: int) -> DomainMatrix:
    return matrix([[column[i] for column in columns] for i in range(height)])


def flatten(M: DomainMatrix) -> Vector:
    """Row-major entry list."""
    return [entry for row in M.to_list() for entry in row]


def is_zero(M: DomainMatrix) -> bool:
    return all(not entry for row in M.to_list() for entry in row)


def matrices_equal(M: DomainMatrix, N: DomainMatrix) -> bool:
    return M.shape == N.shape and M.to_list() == N.to_list()


def shifted(M: DomainMatrix, theta: Scalar) -> DomainMatrix:
    """Return ``M - theta*I``."""
    rows = M.to_list()
    for i, row in enumerate(rows):
        row[i] = row[i] - theta
    return matrix(rows)


def trace(M: DomainMatrix) -> Scalar:
    rows = M.to_list()
    total = QQ.zero
    for i, row in enumerate(rows):
        total += row[i]
    return total


def commutator(M: DomainMatrix, N: DomainMatrix) -> DomainMatrix:
    return M * N - N * M


def kron(M: DomainMatrix, N: DomainMatrix) -> DomainMatrix:
    """Kronecker product with the left factor indexing the outer blocks."""
    rows_m, rows_n = M.to_list(), N.to_list()
    return matrix(
        [
            [a * b for a in row_m for b in row_n]
            for row_m in rows_m
            for row_n in rows_n
        ]
    )


def apply(M: DomainMatrix, vector: Sequence[Scalar]) -> Vector:
    return _apply_rows(M.to_list(), vector)


def _apply_rows(rows: Sequence[Sequence[Scalar]], vector: Sequence[Scalar]) -> Vector:
    result = []
    for row in rows:
        total = QQ.zero
        for a, b in zip(row, vector):
            if a and b:
                total += a * b
        result.append(total)
    return result


def is_invertible(M: DomainMatrix) -> bool:
    rows, cols = M.shape
    return rows == cols and rank(M) == rows


def inverse(M: DomainMatrix) -> DomainMatrix:
    if not is_invertible(M):
        raise ValueError("Matrix is singular.")
    return M.inv()


def random_matrix(n: int, rng: random.Random, bound: int = 5) -> DomainMatrix:
    """Random rational matrix with numerators in [-bound, bound], denominators in [1, bound]."""
    return matrix(
        [
            [QQ(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(n)]
            for _ in range(n)
        ]
    )


def format_matrix(M: DomainMatrix) -> List[List[str]]:
    return [format_vector(row) for row in M.to_list()]


# ---------------------------------------------------------------------------
# Row reduction, kernels and solving
# ---------------------------------------------------------------------------


def rank(M: DomainMatrix) -> int:
    _, pivots = M.rref()
    return len(pivots)


def kernel_basis(M: DomainMatrix) -> List[Vector]:
    """
    Basis of the right kernel of M, one vector per free column with that
    free variable set to 1 and the other free variables set to 0.
    """
    _, cols = M.shape
    reduced, pivots = M.rref()
    entries = reduced.to_list()
    pivot_set = set(pivots)
    basis: List[Vector] = []
    for free in range(cols):
        if free in pivot_set:
            continue
        vector = [QQ.zero] * cols
        vector[free] = QQ.one
        for row_index, pivot in enumerate(pivots):
            vector[pivot] = -entries[row_index][free]
        basis.append(vector)
    return basis


def solve(M: DomainMatrix, rhs: Sequence[Scalar]) -> Optional[Vector]:
    """One solution of ``M x = rhs`` (free variables 0), or None if inconsistent."""
    rows, cols = M.shape
    augmented = matrix([row + [rhs[i]] for i, row in enumerate(M.to_list())])
    reduced, pivots = augmented.rref()
    if cols in pivots:
        return None
    entries = reduced.to_list()
    solution = [QQ.zero] * cols
    for row_index, pivot in enumerate(pivots):
        solution[pivot] = entries[row_index][cols]
    return solution


class SpanBuilder:
    """
    Incremental semi-echelon basis.

    Each stored vector has a pivot and is zero at the pivots of the vectors
    stored before it, so one forward sweep reduces a candidate completely.
    """

    def __init__(self, length: int) -> None:
        self.length = length
        self._rows: List[Tuple[int, Vector]] = []

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, vector: Sequence[Scalar]) -> Vector:
        residue = list(vector)
        for pivot, row in self._rows:
            factor = residue[pivot]
            if factor:
                for index in range(pivot, self.length):
                    if row[index]:
                        residue[index] -= factor * row[index]
        return residue

    def add(self, vector: Sequence[Scalar]) -> bool:
        """Add ``vector`` if it enlarges the span; report whether it did."""
        residue = self.reduce(vector)
        for index, entry in enumerate(residue):
            if entry:
                scale = QQ.one / entry
                self._rows.append((index, [value * scale for value in residue]))
                return True
        return False

    def contains(self, vector: Sequence[Scalar]) -> bool:
        return not any(self.reduce(vector))


def span_basis(vectors: Iterable[Sequence[Scalar]], length: int) -> List[Vector]:
    """Independent subset of ``vectors`` with the same span, in input order."""
    builder = SpanBuilder(length)
    return [list(vector) for vector in vectors if builder.add(vector)]


def subspace_dim(vectors: Iterable[Sequence[Scalar]], length: int) -> int:
    return len(span_basis(vectors, length))


def subspace_contains(
    basis: Sequence[Sequence[Scalar]], vectors: Iterable[Sequence[Scalar]], length: int
) -> bool:
    builder = SpanBuilder(length)
    for vector in basis:
        builder.add(vector)
    return all(builder.contains(vector) for vector in vectors)


def same_span(
    first: Sequence[Sequence[Scalar]], second: Sequence[Sequence[Scalar]], length: int
) -> bool:
    dim_first = subspace_dim(first, length)
    dim_second = subspace_dim(second, length)
    return dim_first == dim_second and subspace_contains(first, second, length)


def subspace_intersection(
    first: Sequence[Sequence[Scalar]], second: Sequence[Sequence[Scalar]], length: int
) -> List[Vector]:
    """Basis of span(first) ∩ span(second), both given by independent vectors."""
    if not first or not second:
        return []
    columns = [list(vector) for vector in first] + [
        [-entry for entry in vector] for vector in second
    ]
    relations = kernel_basis(from_columns(columns, length))
    vectors = []
    for relation in relations:
        combined = [QQ.zero] * length
        for coefficient, vector in zip(relation[: len(first)], first):
            if coefficient:
                for index, entry in enumerate(vector):
                    combined[index] += coefficient * entry
        vectors.append(combined)
    return span_basis(vectors, length)


def proportionality(vector: Sequence[Scalar], reference: Sequence[Scalar]) -> Optional[Scalar]:
    """Return c with ``vector == c*reference``, or None when not proportional."""
    anchor = next((index for index, entry in enumerate(reference) if entry), None)
    if anchor is None:
        return None
    ratio = vector[anchor] / reference[anchor]
    if all(a == ratio * b for a, b in zip(vector, reference)):
        return ratio
    return None


def normalize_first_nonzero(M: DomainMatrix) -> DomainMatrix:
    """Scale M so its first nonzero entry in row-major order is 1."""
    entries = flatten(M)
    pivot = next((entry for entry in entries if entry), None)
    if pivot is None:
        return M
    return M * (QQ.one / pivot)


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


def poly_from_coefficients(coefficients: Sequence[Scalar]) -> Poly:
    """Build a Poly in ``lambda`` from coefficients in ascending degree order."""
    descending = [QQ.to_sympy(to_scalar(c)) for c in reversed(list(coefficients))]
    if not descending:
        descending = [0]
    return Poly(descending, LAMBDA, domain=QQ)


def poly_coefficients(poly: Poly) -> List[Scalar]:
    """Coefficients in ascending degree order."""
    return [QQ.from_sympy(c) for c in reversed(poly.all_coeffs())]


def char_poly(M: DomainMatrix) -> Poly:
    """Monic characteristic polynomial ``det(lambda*I - M)``."""
    coefficients = M.charpoly()
    return Poly([QQ.to_sympy(c) for c in coefficients], LAMBDA, domain=QQ)


def poly_at_matrix(poly: Poly, M: DomainMatrix) -> DomainMatrix:
    n = M.shape[0]
    result = zeros(n, n)
    eye = identity(n)
    for coefficient in poly.all_coeffs():
        result = result * M + eye * QQ.from_sympy(coefficient)
    return result


def is_squarefree(poly: Poly) -> bool:
    return poly.gcd(poly.diff(LAMBDA)).degree() == 0


def _product(factors: Sequence[Tuple[Poly, int]]) -> Poly:
    result = Poly(1, LAMBDA, domain=QQ)
    for factor, exponent in factors:
        result = result * factor ** exponent
    return result


def min_poly(M: DomainMatrix) -> Poly:
    """
    Minimal polynomial of M.

    The squarefree part of the characteristic polynomial is tried first;
    otherwise each factor's exponent is lowered while the product still
    annihilates M.
    """
    _, factors = char_poly(M).factor_list()
    radical = [(factor, 1) for factor, _ in factors]
    if is_zero(poly_at_matrix(_product(radical), M)):
        return _product(radical).monic()

    exponents = [exponent for _, exponent in factors]
    for index in range(len(factors)):
        while exponents[index] > 1:
            exponents[index] -= 1
            trial = [(factor, e) for (factor, _), e in zip(factors, exponents)]
            if not is_zero(poly_at_matrix(_product(trial), M)):
                exponents[index] += 1
                break
    minimal = _product([(factor, e) for (factor, _), e in zip(factors, exponents)])
    return minimal.monic()


def rational_roots(poly: Poly) -> Tuple[List[Scalar], bool]:
    """
    Distinct rational roots in descending order, plus a flag telling whether
    the polynomial splits into linear factors over QQ.
    """
    _, factors = poly.factor_list()
    roots: List[Scalar] = []
    splits = True
    for factor, _ in factors:
        if factor.degree() == 1:
            lead, constant = (QQ.from_sympy(c) for c in factor.all_coeffs())
            roots.append(-constant / lead)
        elif factor.degree() > 1:
            splits = False
    roots.sort(reverse=True)
    return roots, splits


# ---------------------------------------------------------------------------
# Modules over the algebra generated by two matrices
# ---------------------------------------------------------------------------


def spin(
    vectors: Iterable[Sequence[Scalar]], generators: Sequence[DomainMatrix]
) -> List[Vector]:
    """Basis of the smallest subspace containing ``vectors`` and stable under ``generators``."""
    generator_rows = [g.to_list() for g in generators]
    length = len(generator_rows[0])
    builder = SpanBuilder(length)
    queue = [list(v) for v in vectors if builder.add(v)]
    cursor = 0
    while cursor < len(queue) and len(builder) < length:
        current = queue[cursor]
        cursor += 1
        for rows in generator_rows:
            image = _apply_rows(rows, current)
            if builder.add(image):
                queue.append(image)
    return queue


def _annihilator(vectors: Sequence[Vector]) -> List[Vector]:
    return kernel_basis(matrix(vectors)) if vectors else []


def irreducibility_certificate(A: DomainMatrix, B: DomainMatrix) -> Optional[bool]:
    """
    Decide absolute irreducibility of the pair from a one-dimensional
    rational eigenspace.

    With v spanning ker(M - theta) and w spanning ker(M^T - theta), the pair
    is absolutely irreducible iff v spins to the whole space under (A, B) and
    w spins to the whole space under (A^T, B^T). Returns None when neither
    matrix has a one-dimensional rational eigenspace.
    """
    n = A.shape[0]
    transposes = [A.transpose(), B.transpose()]
    for M, Mt in ((A, transposes[0]), (B, transposes[1])):
        roots, _ = rational_roots(char_poly(M))
        for theta in roots:
            kernel = kernel_basis(shifted(M, theta))
            if len(kernel) != 1:
                continue
            if len(spin(kernel, [A, B])) < n:
                return False
            dual_kernel = kernel_basis(shifted(Mt, theta))
            return len(spin(dual_kernel, transposes)) == n
    return None


def word_basis(
    A: DomainMatrix, B: DomainMatrix, names: Tuple[str, str] = ("A", "A*")
) -> List[Tuple[Word, DomainMatrix]]:
    """
    Basis of the unital algebra generated by A and B, made of words.

    Words grow by left multiplication in breadth-first order, and a word is
    kept only when it is independent of the words kept before it.
    """
    n = A.shape[0]
    letters = ((names[0], A), (names[1], B))
    builder = SpanBuilder(n * n)
    eye = identity(n)
    builder.add(flatten(eye))
    basis: List[Tuple[Word, DomainMatrix]] = [((), eye)]
    cursor = 0
    while cursor < len(basis) and len(basis) < n * n:
        word, current = basis[cursor]
        cursor += 1
        for name, letter in letters:
            candidate = letter * current
            if builder.add(flatten(candidate)):
                basis.append(((name,) + word, candidate))
    return basis


def generated_algebra_dim(A: DomainMatrix, B: DomainMatrix) -> int:
    """Dimension of the unital algebra generated by A and B."""
    n = A.shape[0]
    if irreducibility_certificate(A, B):
        return n * n
    return len(word_basis(A, B))


def invariant_subspace_witness(A: DomainMatrix, B: DomainMatrix) -> Optional[List[Vector]]:
    """
    Basis of a proper nonzero subspace stable under A and B, searched from
    eigenvectors of A and B and annihilators of eigenvectors of the
    transposes. None if no rational witness was found.
    """
    n = A.shape[0]
    transposes = [A.transpose(), B.transpose()]
    for M in (A, B):
        roots, _ = rational_roots(char_poly(M))
        for theta in roots:
            for vector in kernel_basis(shifted(M, theta)):
                candidate = spin([vector], [A, B])
                if len(candidate) < n:
                    return candidate
    for Mt in transposes:
        roots, _ = rational_roots(char_poly(Mt))
        for theta in roots:
            for vector in kernel_basis(shifted(Mt, theta)):
                dual = spin([vector], transposes)
                if len(dual) < n:
                    return _annihilator(dual)
    return None


__all__ = [
    "LAMBDA",
    "Scalar",
    "Vector",
    "Word",
    "to_scalar",
    "format_scalar",
    "format_vector",
    "matrix",
    "identity",
    "zeros",
    "from_columns",
    "flatten",
    "is_zero",
    "matrices_equal",
    "shifted",
    "trace",
    "commutator",
    "kron",
    "apply",
    "is_invertible",
    "inverse",
    "random_matrix",
    "format_matrix",
    "rank",
    "kernel_basis",
    "solve",
    "SpanBuilder",
    "span_basis",
    "subspace_dim",
    "subspace_contains",
    "same_span",
    "subspace_intersection",
    "proportionality",
    "normalize_first_nonzero",
    "poly_from_coefficients",
    "poly_coefficients",
    "char_poly",
    "poly_at_matrix",
    "is_squarefree",
    "min_poly",
    "rational_roots",
    "spin",
    "irreducibility_certificate",
    "word_basis",
    "generated_algebra_dim",
    "invariant_subspace_witness",
]
