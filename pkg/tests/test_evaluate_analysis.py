import json
import pytest

import nttkern.arith.reductions as R
import nttkern.common.contracts as contracts
import nttkern.evaluate.analysis as analysis


@pytest.fixture(scope="module")
def found(analysis_ctx):
    return {sem.mode: analysis.search_counterexamples(analysis_ctx, sem)
            for sem in R.BOTH_SEMANTICS}


def test_crt_predicted_value_known_case(analysis_ctx):
    assert analysis.crt_predicted_value(19, -5, analysis_ctx) == -15
    assert analysis.crt_predicted_value(1, 1, analysis_ctx) == -8


def test_crt_residue(analysis_ctx):
    assert analysis.crt_residue(1, analysis_ctx) == -1057
    assert analysis.input_bound(analysis_ctx) == 31


def test_crt_predicted_value_exhaustive(analysis_ctx):
    for W in range(-31, 32):
        for T in range(-31, 32):
            K = analysis.crt_predicted_value(W, T, analysis_ctx)
            assert -31 < 2 * K < 31
            assert (K * 4096 + W * T) % 31 == 0


def test_crt_predicted_value_range(analysis_ctx):
    with pytest.raises(contracts.PreconditionError):
        analysis.crt_predicted_value(32, 0, analysis_ctx)
    with pytest.raises(contracts.PreconditionError):
        analysis.crt_predicted_value(1, 1, R.ReductionContext(31, 6, 1))


def test_verify_case_known(analysis_ctx):
    report = analysis.verify_signed_plantard_case(19, -5, analysis_ctx,
                                                  R.ARITHMETIC_FLOOR)
    assert (report.A, report.K, report.alg_output) == (-95, -15, -16)
    assert report.is_mismatch
    report = analysis.verify_signed_plantard_case(19, -5, analysis_ctx,
                                                  R.SIGNED_FLOOR)
    assert report.alg_output == -14
    assert report.verdict == analysis.MISMATCH


def test_verify_case_semantics_differ(analysis_ctx):
    arith = analysis.verify_signed_plantard_case(1, 1, analysis_ctx,
                                                 R.ARITHMETIC_FLOOR)
    signed = analysis.verify_signed_plantard_case(1, 1, analysis_ctx,
                                                  R.SIGNED_FLOOR)
    assert arith.verdict == analysis.MATCH
    assert signed.verdict == analysis.MISMATCH


def test_case_report_json(analysis_ctx):
    report = analysis.verify_signed_plantard_case(19, -5, analysis_ctx,
                                                  R.SIGNED_FLOOR)
    data = json.loads(report.to_json())
    assert data["semantics"] == "signed-floor"
    assert data["verdict"] == "mismatch"
    assert (data["W"], data["T"], data["K"]) == (19, -5, -15)


def test_search_finds_known_case(found):
    for mode, reports in found.items():
        keys = [(r.W, r.T) for r in reports]
        assert (19, -5) in keys
        assert keys == sorted(set(keys))
        assert all(r.is_mismatch for r in reports)
    assert analysis.has_known_case(found)


def test_has_known_case_partial(found):
    assert analysis.has_known_case({"arithmetic-floor":
                                    found["arithmetic-floor"]})
    assert not analysis.has_known_case({})
    assert not analysis.has_known_case({"arithmetic-floor": []})
    swapped = {"signed-floor": found["arithmetic-floor"]}
    assert not analysis.has_known_case(swapped)


def test_search_is_independent_of_jobs(analysis_ctx, found):
    parallel = analysis.search_counterexamples(
        analysis_ctx, R.SIGNED_FLOOR, n_jobs=2)
    assert parallel == found["signed-floor"]


def test_search_budget(analysis_ctx):
    with pytest.raises(analysis.BudgetExceededError):
        analysis.search_counterexamples(analysis_ctx, R.SIGNED_FLOOR,
                                        budget=100)
    space = analysis.SearchSpace.explicit([(19, -5)])
    assert len(analysis.search_counterexamples(
        analysis_ctx, R.SIGNED_FLOOR, space, budget=1)) == 1


def test_explicit_space(analysis_ctx):
    space = analysis.SearchSpace.explicit([(1, 1), (19, -5), (1, 1)])
    signed = analysis.search_counterexamples(analysis_ctx, R.SIGNED_FLOOR,
                                             space)
    arith = analysis.search_counterexamples(analysis_ctx,
                                            R.ARITHMETIC_FLOOR, space)
    assert [(r.W, r.T) for r in signed] == [(1, 1), (19, -5)]
    assert [(r.W, r.T) for r in arith] == [(19, -5)]


def test_random_space_reproducible(analysis_ctx):
    space = analysis.SearchSpace.random(300, seed=3)
    assert space.size(analysis_ctx) == 300
    a = analysis.search_counterexamples(analysis_ctx, R.SIGNED_FLOOR, space)
    b = analysis.search_counterexamples(analysis_ctx, R.SIGNED_FLOOR, space)
    assert a == b


def test_default_space(analysis_ctx, integration_config):
    space = analysis.SearchSpace.default(analysis_ctx, integration_config)
    assert space.mode == analysis.SearchSpace.EXHAUSTIVE
    assert space.size(analysis_ctx) == 63 * 63
    wide = R.ReductionContext(31, 10)
    space = analysis.SearchSpace.default(wide, integration_config)
    assert space.mode == analysis.SearchSpace.RANDOM
    assert space.size(wide) == 500


def test_mismatch_census(analysis_ctx, found):
    census = analysis.mismatch_census(analysis_ctx)
    assert list(census.index) == ["signed-floor", "arithmetic-floor"]
    assert (census["cases"] == 63 * 63).all()
    for mode in census.index:
        assert census.loc[mode, "mismatches"] == len(found[mode])
        assert census.loc[mode, "mismatches"] > 0


def test_mismatch_census_counts_distinct_pairs(analysis_ctx):
    space = analysis.SearchSpace.explicit([(19, -5), (19, -5), (1, 1)])
    assert space.size(analysis_ctx) == 3
    assert space.distinct_size(analysis_ctx) == 2
    census = analysis.mismatch_census(analysis_ctx, space)
    assert (census["cases"] == 2).all()
    for mode in census.index:
        mismatches = census.loc[mode, "mismatches"]
        assert 1 <= mismatches <= 2
        assert census.loc[mode, "fraction"] == mismatches / 2.0


def test_mismatch_census_random_space_within_box(analysis_ctx):
    space = analysis.SearchSpace.random(8000, seed=3)
    distinct = space.distinct_size(analysis_ctx)
    assert distinct <= 63 * 63
    census = analysis.mismatch_census(analysis_ctx, space)
    assert (census["cases"] == distinct).all()
    assert (census["fraction"] <= 1.0).all()


def test_reports_to_frame(found):
    df = analysis.reports_to_frame(found["signed-floor"])
    assert len(df) == len(found["signed-floor"])
    assert set(df["semantics"]) == {"signed-floor"}
    empty = analysis.reports_to_frame([])
    assert empty.empty
    assert list(empty.columns) == list(analysis.CaseReport._fields)
