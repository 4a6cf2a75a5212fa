from __future__ import annotations

import pytest
from sympy.polys.domains import QQ

from tdpairs.constructions import leonard_matrices
from tdpairs.errors import IrrationalSpectrum
from tdpairs.linalg import identity, matrices_equal, matrix, min_poly, poly_coefficients, proportionality
from tdpairs.pairs import (
    Shape,
    TDPair,
    all_parameter_arrays,
    check_shape,
    krawtchouk_type,
    parameter_array,
    shape_factorization,
    shape_factorization_general,
    shape_of,
    split_decomposition,
    split_sequence,
    split_sums_check,
    standard_orderings,
    verify_td_pair,
)

X = matrix([[0, 1], [1, 0]])


def test_smallest_pair_is_verified(k12):
    assert k12.is_verified
    assert k12.dim == 2
    assert k12.diameter == 1
    assert k12.verification.algebra_dim == 4
    assert k12.eig_a.eigenvalues == (QQ(1), QQ(-1))
    assert k12.eig_astar.eigenvalues == (QQ(1), QQ(-1))


def test_minimal_polynomial_and_idempotents(k12):
    assert poly_coefficients(min_poly(k12.A)) == [QQ(-1), QQ(0), QQ(1)]
    assert matrices_equal(
        k12.eig_a.projector_for(QQ(1)), matrix([["1/2", "1/2"], ["1/2", "1/2"]])
    )
    assert matrices_equal(
        k12.eig_astar.projector_for(QQ(-1)), matrix([["1/2", -1], ["-1/4", "1/2"]])
    )


def test_mapped_eigen_data_moves_projectors(k12):
    negated = k12.eig_a.mapped(QQ(-1), QQ(0))
    assert negated.eigenvalues == (QQ(1), QQ(-1))
    assert matrices_equal(negated.projector_for(QQ(1)), k12.eig_a.projector_for(QQ(-1)))

    shifted = k12.eig_a.mapped(QQ(2), QQ(1))
    assert shifted.eigenvalues == (QQ(3), QQ(-1))


def test_standard_orderings_hold_ordering_and_reversal(k12):
    orderings_a, orderings_astar = standard_orderings(k12)
    assert set(orderings_a) == {(QQ(1), QQ(-1)), (QQ(-1), QQ(1))}
    assert set(orderings_astar) == {(QQ(1), QQ(-1)), (QQ(-1), QQ(1))}


def test_krawtchouk_recognition(k12, tensor_12_13):
    kraw = krawtchouk_type(k12)
    assert kraw.is_krawtchouk
    assert kraw.theta == (QQ(1), QQ(-1))
    assert kraw.theta_star == (QQ(-1), QQ(1))
    assert krawtchouk_type(tensor_12_13).is_krawtchouk


def test_split_decomposition_of_smallest_pair(k12):
    split = split_decomposition(k12, (QQ(1), QQ(-1)), (QQ(-1), QQ(1)))
    assert split.dimensions == [1, 1]
    assert proportionality(split.bases[0][0], [QQ(-2), QQ(1)]) is not None
    assert proportionality(split.bases[1][0], [QQ(1), QQ(-1)]) is not None


def test_split_sequence_of_smallest_pair(k12):
    split = split_sequence(k12, (QQ(1), QQ(-1)), (QQ(-1), QQ(1)))
    assert split.zeta == (QQ(1), QQ(9, 2))
    assert parameter_array(k12).zeta == (QQ(1), QQ(9, 2))


def test_split_partial_sums_match_eigenspace_sums(k12, tensor_12_13):
    sums = split_sums_check(k12, (QQ(1), QQ(-1)), (QQ(-1), QQ(1)))
    assert sums == {"lower": [True, True], "upper": [True, True]}
    theta = (QQ(2), QQ(0), QQ(-2))
    sums = split_sums_check(tensor_12_13, theta, tuple(-t for t in theta))
    assert sums == {"lower": [True] * 3, "upper": [True] * 3}


def test_split_decomposition_rejects_non_standard_ordering(tensor_12_13):
    with pytest.raises(ValueError):
        split_decomposition(tensor_12_13, (QQ(0), QQ(2), QQ(-2)), (QQ(-2), QQ(0), QQ(2)))


def test_every_parameter_array_starts_with_one(k12):
    arrays = all_parameter_arrays(k12)
    assert len(arrays) == 4
    assert all(array.zeta[0] == 1 for array in arrays)


def test_tensor_product_invariants(tensor_12_13):
    assert tensor_12_13.dim == 4
    assert tensor_12_13.diameter == 2
    assert poly_coefficients(min_poly(tensor_12_13.A)) == [QQ(0), QQ(-4), QQ(0), QQ(1)]
    assert shape_of(tensor_12_13).rho == (1, 2, 1)
    assert parameter_array(tensor_12_13).zeta == (QQ(1), QQ(59, 6), QQ(96))


def test_trivial_pair_of_diameter_zero(trivial_pair):
    assert trivial_pair.is_verified
    assert trivial_pair.diameter == 0
    assert shape_of(trivial_pair).rho == (1,)
    assert parameter_array(trivial_pair).zeta == (QQ(1),)
    assert matrices_equal(trivial_pair.eig_a.projector_for(QQ(0)), identity(1))


@pytest.mark.parametrize(
    "rho, expected",
    [
        ((1, 1), [(1,)]),
        ((1, 2, 1), [(1, 1)]),
        ((1, 1, 1, 1), [(3,)]),
        ((1, 2, 2, 1), [(2, 1)]),
        ((1, 3, 3, 1), [(1, 1, 1)]),
        ((1, 3, 1), []),
        ((2, 2), []),
    ],
)
def test_shape_factorization(rho, expected):
    assert shape_factorization(Shape(rho)) == expected


def test_shape_factorization_general_divides_out_rho0():
    assert shape_factorization_general(Shape((2, 2))) == [(1,)]
    assert shape_factorization_general(Shape((2, 3))) == []


def test_shape_symmetry_and_unimodality():
    assert Shape((1, 2, 1)).is_symmetric and Shape((1, 2, 1)).is_unimodal
    assert not Shape((1, 3, 2, 1)).is_symmetric
    assert not Shape((2, 1, 2)).is_unimodal
    assert check_shape(Shape((2, 1, 2))) == {"symmetric": True, "unimodal": False}


def test_equal_matrices_fail_only_irreducibility():
    report = verify_td_pair(X, X)
    assert report.failing() == ["iv"]
    assert report.algebra_dim == 2
    assert report.irreducible.witness["invariant_subspace"] is not None


def test_parameter_one_fails_only_irreducibility():
    A, Astar = leonard_matrices(1, QQ(1))
    assert verify_td_pair(A, Astar).failing() == ["iv"]


def test_nilpotent_matrix_fails_diagonalizability():
    report = verify_td_pair(matrix([[0, 1], [0, 0]]), identity(2))
    assert not report.passed
    assert "i" in report.failing()


def test_irrational_spectrum_is_out_of_scope():
    with pytest.raises(IrrationalSpectrum):
        verify_td_pair(matrix([[0, 2], [1, 0]]), identity(2))


def test_swapped_report_exchanges_tridiagonal_axioms():
    pair = TDPair.from_matrices(X, X)
    swapped = pair.verification.swapped()
    assert swapped.failing() == ["iv"]
    assert swapped.tridiagonal_a.name == "ii"
