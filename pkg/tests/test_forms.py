from __future__ import annotations

import pytest
from sympy.polys.domains import QQ

from tdpairs.constructions import negate, swap
from tdpairs.errors import FormSpaceDimension
from tdpairs.forms import (
    Dagger,
    commutant_check,
    dagger_report,
    dual_iso_check,
    express_in_pair_algebra,
    form_space,
    four_iso_report,
    invariant_form,
    iso_polynomials,
    iso_solver,
)
from tdpairs.linalg import matrices_equal, matrix
from tdpairs.pairs import TDPair


def test_invariant_form_of_smallest_pair(k12):
    form = invariant_form(k12)
    assert matrices_equal(form.M, matrix([[0, 1], [1, 0]]))
    assert form.is_symmetric
    assert form.is_nondegenerate


def test_dagger_fixes_generators(k12):
    dagger = Dagger(invariant_form(k12))
    assert matrices_equal(dagger(k12.A), k12.A)
    assert matrices_equal(dagger(k12.Astar), k12.Astar)


def test_dagger_report_on_tensor_product(tensor_12_13):
    report = dagger_report(tensor_12_13, samples=5, seed=3)
    assert report["fixes_A"] and report["fixes_Astar"]
    assert report["involution"] and report["antiautomorphism"]
    assert report["seed"] == 3


def test_form_space_of_reducible_pair_is_not_a_line():
    X = matrix([[0, 1], [1, 0]])
    pair = TDPair.from_matrices(X, X)
    assert len(form_space(pair)) == 2
    with pytest.raises(FormSpaceDimension):
        invariant_form(pair)


def test_isomorphism_to_negated_pair(k12):
    intertwiner = iso_solver(k12, negate(k12))
    assert intertwiner is not None
    assert matrices_equal(intertwiner.gamma, matrix([[1, 0], [0, -1]]))
    assert intertwiner.check(k12, negate(k12))


def test_isomorphism_to_swapped_pair(k12):
    intertwiner = iso_solver(k12, swap(k12))
    assert matrices_equal(intertwiner.gamma, matrix([[0, 1], ["1/2", 0]]))


def test_isomorphism_between_inverse_parameters(k12, k1_half):
    intertwiner = iso_solver(k12, k1_half)
    assert matrices_equal(intertwiner.gamma, matrix([[0, 1], [1, 0]]))
    assert intertwiner.to_dict()["source"] == "1:2"


def test_distinct_parameters_are_not_isomorphic(k12, k13):
    assert iso_solver(k12, k13) is None


def test_four_isomorphisms_and_coherence(k12, tensor_12_13):
    for pair in (k12, tensor_12_13):
        report = four_iso_report(pair)
        assert report.passed
        assert report.composition_coherent


def test_dual_isomorphism_matches_form(k12):
    report = dual_iso_check(k12)
    assert report.passed
    assert report.form_intertwines
    assert report.gamma_matches_form


def test_commutant_is_scalars(k12, tensor_12_13):
    assert commutant_check(k12) == {"dimension": 1, "scalars_only": True}
    assert commutant_check(tensor_12_13)["scalars_only"]


def test_express_negation_isomorphism_in_words(k12):
    expression = express_in_pair_algebra(k12, matrix([[1, 0], [0, -1]]))
    assert expression.coefficient(()) == QQ(-5, 3)
    assert expression.coefficient(("A*", "A")) == QQ(4, 3)
    assert expression.coefficient(("A",)) == 0
    assert expression.to_dict() == {"I": "-5/3", "A*A": "4/3"}


def test_iso_polynomials_cover_three_isomorphisms(k12):
    expansions = iso_polynomials(k12)
    assert set(expansions) == {"negate", "swap", "negate_swap"}
    assert expansions["negate"] == {"I": "-5/3", "A*A": "4/3"}
