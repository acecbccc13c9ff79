// Python bindings for the count-regression core: special functions,
// CSV ingestion, Poisson GOF checks, IRLS fitting, exhaustive model
// search, and diagnostics.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "countreg/diagnostics.hpp"
#include "countreg/dist_check.hpp"
#include "countreg/errors.hpp"
#include "countreg/glm.hpp"
#include "countreg/ingest.hpp"
#include "countreg/model_search.hpp"
#include "countreg/pipeline.hpp"
#include "countreg/specfun.hpp"

namespace py = pybind11;
using namespace countreg;

namespace {

ProbMode prob_mode_from_string(const std::string& name) { return parse_prob_mode(name); }
LogMode log_mode_from_string(const std::string& name) { return parse_log_mode(name); }

} // namespace

PYBIND11_MODULE(_countreg, m) {
    m.doc() = "Poisson count-regression toolkit (IRLS GLM, chi-square GOF, AIC search)";

    // --- special functions ---
    m.def("ln_gamma", &specfun::ln_gamma, py::arg("x"));
    m.def("chi2_sf", &specfun::chi2_sf, py::arg("x"), py::arg("df"));
    m.def("normal_cdf", &specfun::normal_cdf, py::arg("z"));
    m.def("normal_quantile", &specfun::normal_quantile, py::arg("p"));
    m.def("poisson_pmf", &specfun::poisson_pmf, py::arg("k"), py::arg("lam"));
    m.def("poisson_sf", &specfun::poisson_sf, py::arg("k"), py::arg("lam"));

    // --- ingestion ---
    py::class_<SummaryStats>(m, "SummaryStats")
        .def_readonly("min", &SummaryStats::min)
        .def_readonly("q1", &SummaryStats::q1)
        .def_readonly("median", &SummaryStats::median)
        .def_readonly("q3", &SummaryStats::q3)
        .def_readonly("max", &SummaryStats::max)
        .def_readonly("mean", &SummaryStats::mean)
        .def_readonly("sd", &SummaryStats::sd)
        .def_readonly("n", &SummaryStats::n)
        .def_readonly("missing", &SummaryStats::missing);

    py::class_<MatchTable>(m, "MatchTable")
        .def_property_readonly("rows", [](const MatchTable& t) { return t.rows; })
        .def_property_readonly("columns",
                               [](const MatchTable& t) {
                                   std::vector<std::string> names;
                                   for (const auto& c : t.columns) names.push_back(c.name);
                                   return names;
                               })
        .def_readonly("source_files", &MatchTable::source_files)
        .def("missingness",
             [](const MatchTable& t) {
                 py::dict out;
                 for (const auto& e : missingness_report(t)) {
                     out[py::str(e.column)] = py::make_tuple(e.missing, e.fraction);
                 }
                 return out;
             })
        .def("describe", &describe, py::arg("column"))
        .def("goal_histogram", &goal_histogram, py::arg("tail_threshold") = 5)
        .def("home_teams", &home_teams)
        .def("team_match_counts", &team_match_counts)
        .def("prune",
             [](const MatchTable& t, double threshold, std::size_t max_levels) {
                 return prune_columns(t, threshold, max_levels);
             },
             py::arg("missing_threshold") = 0.05, py::arg("max_category_levels") = 50);

    m.def("load_matches", &load_matches, py::arg("paths"));

    py::class_<ModelFrame>(m, "ModelFrame")
        .def_property_readonly("n", &ModelFrame::n)
        .def_readonly("response", &ModelFrame::response)
        .def_readonly("covariate_names", &ModelFrame::covariate_names)
        .def_readonly("team_levels", &ModelFrame::team_levels)
        .def_readonly("team", &ModelFrame::team)
        .def_readonly("observation_ids", &ModelFrame::observation_ids)
        .def_readonly("zero_rows_excluded", &ModelFrame::zero_rows_excluded)
        .def("covariate", &ModelFrame::covariate, py::arg("name"),
             py::return_value_policy::copy);

    m.def(
        "build_model_frame",
        [](const MatchTable& table, const std::vector<std::string>& teams,
           const std::string& log_mode) {
            return build_model_frame(table, teams, log_mode_from_string(log_mode));
        },
        py::arg("table"), py::arg("teams"), py::arg("log_mode") = "plain-log-drop-zeros");

    // --- distribution checks ---
    py::class_<GofRow>(m, "GofRow")
        .def_readonly("label", &GofRow::label)
        .def_readonly("observed", &GofRow::observed)
        .def_readonly("prob", &GofRow::prob)
        .def_readonly("expected", &GofRow::expected);

    py::class_<GofTable>(m, "GofTable")
        .def_readonly("rows", &GofTable::rows)
        .def("total", &GofTable::total);

    py::class_<GofResult>(m, "GofResult")
        .def_readonly("statistic", &GofResult::statistic)
        .def_readonly("df", &GofResult::df)
        .def_readonly("p_value", &GofResult::p_value)
        .def_readonly("table", &GofResult::table);

    m.def(
        "poisson_probability_table",
        [](const std::vector<double>& observed, double lam, int tail_threshold,
           const std::string& mode) {
            return poisson_probability_table(observed, lam, tail_threshold,
                                             prob_mode_from_string(mode));
        },
        py::arg("observed"), py::arg("lam"), py::arg("tail_threshold") = 5,
        py::arg("prob_mode") = "rounded3");
    m.def("chisq_gof", &chisq_gof, py::arg("table"));
    m.def("check_team", &check_team, py::arg("table"), py::arg("team"),
          py::arg("tail_threshold") = 5);
    m.def("select_teams", &select_teams, py::arg("table"), py::arg("alpha") = 0.05,
          py::arg("tail_threshold") = 5);

    // --- GLM ---
    py::class_<Formula>(m, "Formula")
        .def_static("parse", &Formula::parse, py::arg("text"))
        .def_readonly("response", &Formula::response)
        .def_readonly("terms", &Formula::terms)
        .def("terms_string", &Formula::terms_string);

    py::class_<DesignMatrix>(m, "DesignMatrix")
        .def_readonly("values", &DesignMatrix::values)
        .def_readonly("column_names", &DesignMatrix::column_names)
        .def_readonly("reference_levels", &DesignMatrix::reference_levels);

    py::class_<FitOptions>(m, "FitOptions")
        .def(py::init<>())
        .def_readwrite("max_iter", &FitOptions::max_iter)
        .def_readwrite("tol", &FitOptions::tol);

    py::class_<GlmFit>(m, "GlmFit")
        .def_readonly("coefficients", &GlmFit::coefficients)
        .def_readonly("covariance", &GlmFit::covariance)
        .def_readonly("fitted_means", &GlmFit::fitted_means)
        .def_readonly("column_names", &GlmFit::column_names)
        .def_readonly("deviance", &GlmFit::deviance)
        .def_readonly("pearson_chi2", &GlmFit::pearson_chi2)
        .def_readonly("llf", &GlmFit::llf)
        .def_readonly("aic", &GlmFit::aic)
        .def_readonly("df_resid", &GlmFit::df_resid)
        .def_readonly("df_model", &GlmFit::df_model)
        .def_readonly("iterations", &GlmFit::iterations)
        .def_readonly("converged", &GlmFit::converged)
        .def_readonly("deviance_path", &GlmFit::deviance_path)
        .def_property_readonly("n_obs", &GlmFit::n_obs);

    m.def("build_design", &build_design, py::arg("frame"), py::arg("formula"));
    m.def("irls_fit", &irls_fit, py::arg("design"), py::arg("y"),
          py::arg("options") = FitOptions{});
    m.def("log_likelihood", &log_likelihood, py::arg("y"), py::arg("mu"));
    m.def("deviance", &deviance, py::arg("y"), py::arg("mu"));
    m.def("pearson_chi2", &pearson_chi2, py::arg("y"), py::arg("mu"));

    py::class_<CoefficientRow>(m, "CoefficientRow")
        .def_readonly("name", &CoefficientRow::name)
        .def_readonly("coef", &CoefficientRow::coef)
        .def_readonly("std_err", &CoefficientRow::std_err)
        .def_readonly("z", &CoefficientRow::z)
        .def_readonly("p_value", &CoefficientRow::p_value)
        .def_readonly("ci_low", &CoefficientRow::ci_low)
        .def_readonly("ci_high", &CoefficientRow::ci_high);
    m.def("summarize", &summarize, py::arg("fit"), py::arg("level") = 0.95);

    // --- model search ---
    py::class_<SelectionEntry>(m, "SelectionEntry")
        .def_readonly("model", &SelectionEntry::model)
        .def_readonly("deviance", &SelectionEntry::deviance)
        .def_readonly("pearson_chi2", &SelectionEntry::pearson_chi2)
        .def_readonly("llf", &SelectionEntry::llf)
        .def_readonly("df_resid", &SelectionEntry::df_resid)
        .def_readonly("aic", &SelectionEntry::aic)
        .def_readonly("p_chisq", &SelectionEntry::p_chisq)
        .def_readonly("failed", &SelectionEntry::failed)
        .def_readonly("failure", &SelectionEntry::failure);

    m.def("enumerate_formulas", &enumerate_formulas, py::arg("response"),
          py::arg("variables"));
    m.def("fit_all", &fit_all, py::arg("frame"), py::arg("formulas"),
          py::arg("options") = FitOptions{}, py::arg("workers") = 0);
    m.def("gof_filter", &gof_filter, py::arg("table"), py::arg("alpha") = 0.05);
    m.def("rank_by_aic", &rank_by_aic, py::arg("table"));

    // --- diagnostics ---
    m.def("pearson_residuals", &pearson_residuals, py::arg("y"), py::arg("mu"));
    m.def("leverage", &leverage, py::arg("design"), py::arg("weights"));
    m.def("standardized_residuals", &standardized_residuals, py::arg("pearson"),
          py::arg("leverage"));
    m.def("qq_points", &qq_points, py::arg("residuals"));

    py::class_<CoefficientDelta>(m, "CoefficientDelta")
        .def_readonly("name", &CoefficientDelta::name)
        .def_readonly("before", &CoefficientDelta::before)
        .def_readonly("after", &CoefficientDelta::after)
        .def_readonly("delta", &CoefficientDelta::delta);

    py::class_<RefitResult>(m, "RefitResult")
        .def_readonly("before", &RefitResult::before)
        .def_readonly("after", &RefitResult::after)
        .def_readonly("deltas", &RefitResult::deltas)
        .def_readonly("dropped", &RefitResult::dropped);

    m.def("refit_without", &refit_without, py::arg("frame"), py::arg("formula"),
          py::arg("drop_ids"), py::arg("options") = FitOptions{});

    // Exceptions surface as ValueError subclasses with the class tag in
    // the message.
    py::register_exception<PipelineError>(m, "PipelineError", PyExc_ValueError);
}
