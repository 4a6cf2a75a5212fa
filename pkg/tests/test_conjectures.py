from __future__ import annotations

from sympy.polys.domains import QQ

from tdpairs.conjectures import (
    CheckKind,
    ConjectureReport,
    Verdict,
    across_parameter_arrays,
    conj_dagger_report,
    conj_dual_report,
    conj_form_report,
    conj_main_check,
    conj_main_report,
    conj_parameter_array_iso,
    conj_shape_report,
    conjz_report,
    conjzz_report,
    dolan_grady_check,
    eight_split_sequences,
    idempotent_E0,
    run_all,
    trace_ratio_report,
)
from tdpairs.constructions import transform
from tdpairs.linalg import matrices_equal, matrix, trace
from tdpairs.pairs import ParameterArray


def test_idempotents_for_krawtchouk_orderings(k12):
    E0, E0_star = idempotent_E0(k12)
    assert matrices_equal(E0, matrix([["1/2", "1/2"], ["1/2", "1/2"]]))
    assert matrices_equal(E0_star, matrix([["1/2", -1], ["-1/4", "1/2"]]))
    assert trace(E0 * E0_star) == QQ(-1, 8)


def test_trace_formulas_reproduce_split_sequence(k12):
    report = conjz_report(k12)
    assert report.verdict is Verdict.HOLDS
    assert report.kind is CheckKind.CONJECTURE
    row = report.witness["rows"][1]
    assert row["zeta"] == "9/2"
    assert row["first_formula"] == "9/2"
    assert row["second_formula"] == "9/2"


def test_trace_ratio_on_smallest_pair(k12):
    report = trace_ratio_report(k12)
    assert report.verdict is Verdict.HOLDS
    assert report.witness["trace_E0_E0star"] == "-1/8"
    assert report.witness["rows"][1]["ratio"] == "9/2"
    assert report.witness["rows"][1]["companion_ratio"] == "9/2"


def test_swapped_split_sequence_table(k12):
    table = eight_split_sequences(k12)
    assert len(table) == 8
    assert table[0]["zeta"] == ["1", "9/2"]
    assert all(entry["zeta"][0] == "1" for entry in table)

    report = conjzz_report(k12)
    assert report.verdict is Verdict.HOLDS
    assert report.witness["table"][4]["zeta"] == ["1", "9/2"]


def test_parameter_array_conditions(k12, tensor_12_13):
    report = conj_main_report(k12)
    assert report.verdict is Verdict.HOLDS
    assert report.witness["sum"] == "1/2"
    assert report.witness["drinfeld_side"] == "1/2"
    tensor = conj_main_report(tensor_12_13).witness
    assert tensor["sum"] == tensor["drinfeld_side"] == "8/3"
    assert tensor["drinfeld_side_matches"] is True


def test_parameter_array_conditions_flag_bad_arrays():
    pa = ParameterArray(
        theta=(QQ(1), QQ(1)),
        theta_star=(QQ(-1), QQ(1)),
        zeta=(QQ(1), QQ(0)),
    )
    report = conj_main_check(pa, "handmade")
    assert report.verdict is Verdict.FAILS
    assert report.witness["conditions"]["i"] == "fails"
    assert report.witness["conditions"]["ii"] == "fails"
    assert report.instance == "handmade"
    assert "drinfeld_side" not in report.witness


def test_parameter_array_isomorphism(k12, k13, k1_half):
    same = conj_parameter_array_iso(k12, k1_half)
    assert same.verdict is Verdict.HOLDS
    assert same.witness == {"shared_parameter_array": True, "isomorphic": True}

    different = conj_parameter_array_iso(k12, k13)
    assert different.verdict is Verdict.HOLDS
    assert different.witness == {"shared_parameter_array": False, "isomorphic": False}


def test_krawtchouk_theorems_are_theorem_checks(tensor_12_13):
    shape = conj_shape_report(tensor_12_13)
    assert shape.kind is CheckKind.THEOREM
    assert shape.verdict is Verdict.HOLDS
    assert shape.witness["factorizations"] == [[1, 1]]

    for report in (
        conj_form_report(tensor_12_13),
        conj_dagger_report(tensor_12_13, samples=3),
        conj_dual_report(tensor_12_13),
    ):
        assert report.kind is CheckKind.THEOREM
        assert report.verdict is Verdict.HOLDS
        assert not report.hard_failure


def test_non_krawtchouk_pairs_are_conjecture_tests(k12):
    moved = transform(k12, 2, 1, 1, 0, label="moved")
    report = conj_form_report(moved)
    assert report.kind is CheckKind.CONJECTURE
    assert report.verdict is Verdict.HOLDS
    assert dolan_grady_check(moved).verdict is Verdict.NOT_APPLICABLE


def test_dolan_grady_relations(k12, tensor_12_13):
    for pair in (k12, tensor_12_13):
        report = dolan_grady_check(pair)
        assert report.verdict is Verdict.HOLDS
        assert report.kind is CheckKind.THEOREM


def test_run_all_has_no_failures(k12):
    reports = run_all(k12, samples=3)
    assert len(reports) == 9
    assert len({report.key for report in reports}) == 9
    assert all(report.verdict is not Verdict.FAILS for report in reports)
    assert all(report.to_dict()["instance"] == "1:2" for report in reports)


def test_checks_run_over_every_parameter_array(tensor_12_13):
    for key, check in (
        ("parameter-array-conditions", conj_main_report),
        ("split-trace-formulas", conjz_report),
        ("trace-ratio", trace_ratio_report),
    ):
        report = across_parameter_arrays(tensor_12_13, key, check)
        assert report.key == key
        assert report.verdict is Verdict.HOLDS
        rows = report.witness["arrays"]
        assert len(rows) == 4
        assert {row["verdict"] for row in rows} == {"holds"}
    first = across_parameter_arrays(tensor_12_13, "trace-ratio", trace_ratio_report)
    assert first.witness["arrays"][0]["theta"] == ["2", "0", "-2"]
    assert first.witness["arrays"][0]["theta_star"] == ["2", "0", "-2"]
    assert first.witness["arrays"][1]["theta_star"] == ["-2", "0", "2"]
    assert first.witness["arrays"][1]["witness"]["rows"][1]["zeta"] == "59/6"


def test_one_failing_array_fails_the_whole_check(k12):
    def positive_start(pair, pa):
        verdict = Verdict.HOLDS if pa.theta[0] > 0 else Verdict.FAILS
        return ConjectureReport("positive-start", pair.label, verdict, CheckKind.CONJECTURE)

    report = across_parameter_arrays(k12, "positive-start", positive_start)
    assert report.verdict is Verdict.FAILS
    assert [row["verdict"] for row in report.witness["arrays"]] == [
        "holds",
        "holds",
        "fails",
        "fails",
    ]


def test_run_all_covers_all_parameter_arrays(k12):
    reports = {report.key: report for report in run_all(k12, samples=3)}
    for key in ("parameter-array-conditions", "split-trace-formulas", "trace-ratio"):
        assert len(reports[key].witness["arrays"]) == 4
        assert reports[key].verdict is Verdict.HOLDS
