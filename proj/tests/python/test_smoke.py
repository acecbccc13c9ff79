"""Smoke tests for the python bindings: a few frozen values per surface."""

import math
import os
import tempfile

import pytest

import countreg


def test_special_functions():
    assert countreg.ln_gamma(10.0) == pytest.approx(12.8018274801, abs=1e-9)
    assert countreg.chi2_sf(0.0, 6.0) == 1.0
    assert countreg.chi2_sf(5622.496, 5821.0) == pytest.approx(0.968193, abs=5e-5)
    assert countreg.chi2_sf(38.314, 6.0) == pytest.approx(9.752e-7, abs=1e-9)
    assert countreg.normal_cdf(0.0) == 0.5
    assert countreg.normal_quantile(0.975) == pytest.approx(1.959964, abs=1e-6)
    assert countreg.poisson_pmf(0, 1.0) == pytest.approx(math.exp(-1.0))
    assert countreg.poisson_sf(0, 1.0) == pytest.approx(1.0 - math.exp(-1.0))
    with pytest.raises(ValueError):
        countreg.normal_quantile(1.5)


def test_gof_pipeline():
    observed = [1695.0, 2310.0, 1787.0, 885.0, 357.0, 122.0, 64.0]
    table = countreg.poisson_probability_table(observed, 1.522438, 5, "rounded3")
    result = countreg.chisq_gof(table)
    assert result.statistic == pytest.approx(38.314, abs=0.01)
    assert result.df == 6
    assert result.p_value == pytest.approx(9.752e-7, abs=1e-9)
    assert [round(r.prob, 3) for r in table.rows] == [
        0.218, 0.332, 0.253, 0.128, 0.049, 0.015, 0.005,
    ]


def _write_matches(path):
    rows = [
        "Date,HomeTeam,AwayTeam,FTHG,HTAG,HST,HC,HR,AR",
        "19/08/00,Alpha,Beta,1,0,4,3,0,0",
        "26/08/00,Alpha,Beta,2,1,6,4,0,0",
        "02/09/00,Beta,Alpha,0,0,3,5,0,0",
        "09/09/00,Alpha,Beta,1,0,5,2,1,0",
        "16/09/00,Beta,Alpha,2,0,7,6,0,1",
        "23/09/00,Alpha,Beta,0,1,2,4,0,0",
        "30/09/00,Beta,Alpha,1,0,4,3,0,0",
        "07/10/00,Beta,Alpha,3,0,8,5,0,0",
    ]
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("\n".join(rows) + "\n")


def test_ingest_and_fit():
    with tempfile.TemporaryDirectory() as tmp:
        csv_path = os.path.join(tmp, "season.csv")
        _write_matches(csv_path)
        table = countreg.load_matches([csv_path])
        assert table.rows == 8
        stats = table.describe("FTHG")
        assert stats.n == 8
        assert stats.missing == 0

        frame = countreg.build_model_frame(table, ["Alpha", "Beta"], "log1p")
        assert frame.n == 8

        formula = countreg.Formula.parse("FTHG ~ logHST")
        design, y = countreg.build_design(frame, formula)
        fit = countreg.irls_fit(design, y)
        assert fit.converged
        assert fit.aic == pytest.approx(2 * 2 - 2 * fit.llf)
        assert len(countreg.summarize(fit)) == 2

        # Intercept-only recovers the log of the sample mean.
        intercept = countreg.Formula.parse("FTHG ~ 1")
        design0, y0 = countreg.build_design(frame, intercept)
        fit0 = countreg.irls_fit(design0, y0)
        mean = sum(frame.response) / frame.n
        assert fit0.coefficients[0] == pytest.approx(math.log(mean), abs=1e-10)


def test_model_search_orders_by_aic():
    formulas = countreg.enumerate_formulas("y", ["a", "b", "c"])
    assert [f.terms_string() for f in formulas[:3]] == ["a", "b", "c"]
    assert len(formulas) == 7
    assert len(countreg.enumerate_formulas("y", list("abcdef"))) == 63
