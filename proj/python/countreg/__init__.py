"""Poisson count-regression toolkit.

Thin wrapper over the C++ core: IRLS-fitted Poisson GLMs, chi-square
goodness-of-fit checks, exhaustive AIC model search, and regression
diagnostics for football-data.co.uk style match tables.
"""

from ._countreg import (
    CoefficientDelta,
    CoefficientRow,
    DesignMatrix,
    FitOptions,
    Formula,
    GlmFit,
    GofResult,
    GofRow,
    GofTable,
    MatchTable,
    ModelFrame,
    PipelineError,
    RefitResult,
    SelectionEntry,
    SummaryStats,
    build_design,
    build_model_frame,
    check_team,
    chi2_sf,
    chisq_gof,
    deviance,
    enumerate_formulas,
    fit_all,
    gof_filter,
    irls_fit,
    leverage,
    ln_gamma,
    load_matches,
    log_likelihood,
    normal_cdf,
    normal_quantile,
    pearson_chi2,
    pearson_residuals,
    poisson_pmf,
    poisson_probability_table,
    poisson_sf,
    qq_points,
    rank_by_aic,
    refit_without,
    select_teams,
    standardized_residuals,
    summarize,
)

__all__ = [
    "CoefficientDelta",
    "CoefficientRow",
    "DesignMatrix",
    "FitOptions",
    "Formula",
    "GlmFit",
    "GofResult",
    "GofRow",
    "GofTable",
    "MatchTable",
    "ModelFrame",
    "PipelineError",
    "RefitResult",
    "SelectionEntry",
    "SummaryStats",
    "build_design",
    "build_model_frame",
    "check_team",
    "chi2_sf",
    "chisq_gof",
    "deviance",
    "enumerate_formulas",
    "fit_all",
    "gof_filter",
    "irls_fit",
    "leverage",
    "ln_gamma",
    "load_matches",
    "log_likelihood",
    "normal_cdf",
    "normal_quantile",
    "pearson_chi2",
    "pearson_residuals",
    "poisson_pmf",
    "poisson_probability_table",
    "poisson_sf",
    "qq_points",
    "rank_by_aic",
    "refit_without",
    "select_teams",
    "standardized_residuals",
    "summarize",
]

__version__ = "0.1.0"
