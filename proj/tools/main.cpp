// countreg — count-regression pipeline for home-goal match data.
//
// Subcommands: describe, gof, select-teams, search, fit, diagnose.
// Every command is a deterministic function of (flags, config file,
// input CSVs); tables are written as CSV plus aligned text, plots as
// standalone SVG.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "countreg/errors.hpp"
#include "countreg/pipeline.hpp"
#include "countreg/report.hpp"
#include "countreg/specfun.hpp"
#include "countreg/svg.hpp"

namespace fs = std::filesystem;
using namespace countreg;

namespace {

struct Options {
    PipelineConfig config;
    std::string log_mode = "plain-log-drop-zeros";
    std::string prob_mode = "rounded3";
    std::string model;
    std::vector<std::size_t> drop_ids;
    double resid_threshold = 0.0;
    double leverage_multiplier = 0.0;
    bool per_team = false;
};

void add_common_options(CLI::App* cmd, Options& opts) {
    cmd->add_option("-i,--input", opts.config.inputs, "season CSV files (football-data.co.uk layout)")
        ->required();
    cmd->add_option("-o,--out", opts.config.out_dir, "output directory")
        ->envname("COUNTREG_OUT")
        ->capture_default_str();
    cmd->add_option("--missing-threshold", opts.config.missing_threshold,
                    "drop columns with a higher missing fraction")
        ->capture_default_str();
    cmd->add_option("--max-category-levels", opts.config.max_category_levels,
                    "drop categorical columns with more distinct levels")
        ->capture_default_str();
    cmd->add_option("--tail-threshold", opts.config.tail_threshold,
                    "goal count at which histogram bins collapse into one tail")
        ->capture_default_str();
    cmd->add_option("--alpha-team", opts.config.alpha_team,
                    "significance level of the per-team Poisson screen")
        ->capture_default_str();
    cmd->add_option("--alpha-gof", opts.config.alpha_gof,
                    "significance level of the deviance goodness-of-fit screen")
        ->capture_default_str();
    cmd->add_option("--log-mode", opts.log_mode,
                    "zero handling for logHST/logHC: plain-log-drop-zeros or log1p")
        ->capture_default_str();
    cmd->add_option("--prob-mode", opts.prob_mode,
                    "Poisson cell probabilities: rounded3 or exact")
        ->capture_default_str();
    cmd->add_option("--ci-level", opts.config.ci_level, "confidence level of coefficient intervals")
        ->capture_default_str();
    cmd->add_option("--variables", opts.config.variables,
                    "explanatory variable universe for the model search")
        ->delimiter(',')
        ->capture_default_str();
    cmd->add_option("--workers", opts.config.workers,
                    "worker threads for the model search (0 = hardware)")
        ->capture_default_str();
    cmd->add_option("--max-iter", opts.config.fit_options.max_iter, "IRLS iteration cap")
        ->capture_default_str();
    cmd->add_option("--tol", opts.config.fit_options.tol, "IRLS relative deviance tolerance")
        ->capture_default_str();
    cmd->set_config("--config", "", "key=value config file; command-line flags win");
}

fs::path prepare_out_dir(Options& opts) {
    opts.config.log_mode = parse_log_mode(opts.log_mode);
    opts.config.prob_mode = parse_prob_mode(opts.prob_mode);
    opts.config.validate();
    const fs::path dir(opts.config.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory: " + dir.string());
    write_text_file((dir / "run_config.txt").string(), opts.config.echo());
    return dir;
}

Formula model_formula(const Options& opts) {
    if (!opts.model.empty()) return Formula::parse(opts.model);
    Formula f;
    f.response = "FTHG";
    f.terms = opts.config.variables;
    return f;
}

std::vector<double> histogram_counts(const std::vector<std::pair<std::string, long>>& bins) {
    std::vector<double> counts;
    counts.reserve(bins.size());
    for (const auto& [label, count] : bins) counts.push_back(static_cast<double>(count));
    return counts;
}

void cmd_describe(Options& opts) {
    const fs::path dir = prepare_out_dir(opts);
    const MatchTable raw = load_matches(opts.config.inputs);
    const auto missing = missingness_report(raw);
    write_text_file((dir / "missingness.csv").string(), render_missingness_csv(missing));
    write_text_file((dir / "missingness.txt").string(), render_missingness_text(missing));
    for (const auto& entry : missing) {
        if (entry.fraction > opts.config.missing_threshold) {
            std::cout << "column above missing threshold: " << entry.column << " ("
                      << format_fixed(entry.fraction, 4) << ")\n";
        }
    }

    const MatchTable table =
        prune_columns(raw, opts.config.missing_threshold, opts.config.max_category_levels);
    if (table.rows == 0) {
        std::cout << "warning: dataset is empty; nothing to describe\n";
    }

    std::ostringstream all_stats;
    all_stats << "column,min,q1,median,q3,max,mean,sd,n,missing\n";
    for (const auto& col : table.columns) {
        if (col.kind != ColumnKind::numeric) continue;
        const SummaryStats s = describe(table, col.name);
        if (col.name == "FTHG") {
            write_text_file((dir / "summary_FTHG.txt").string(), render_summary_line(s));
        }
        all_stats << csv_escape(col.name) << "," << format_compact(s.min) << ","
                  << format_compact(s.q1) << "," << format_compact(s.median) << ","
                  << format_compact(s.q3) << "," << format_compact(s.max) << ","
                  << format_fixed(s.mean, 6) << "," << format_fixed(s.sd, 6) << "," << s.n
                  << "," << s.missing << "\n";
    }
    write_text_file((dir / "summary_stats.csv").string(), all_stats.str());

    const auto bins = goal_histogram(table, opts.config.tail_threshold);
    std::ostringstream hist_csv;
    hist_csv << "goals,matches\n";
    std::vector<std::string> labels;
    for (const auto& [label, count] : bins) {
        hist_csv << csv_escape(label) << "," << count << "\n";
        labels.push_back(label);
    }
    write_text_file((dir / "goal_histogram.csv").string(), hist_csv.str());

    svg::Series observed{"matches", {}, "#1f6fb2"};
    for (std::size_t i = 0; i < bins.size(); ++i) {
        observed.points.emplace_back(static_cast<double>(i),
                                     static_cast<double>(bins[i].second));
    }
    svg::PlotOptions plot;
    plot.title = "Home goals per match";
    plot.x_label = "goals";
    plot.y_label = "matches";
    write_text_file((dir / "goal_histogram.svg").string(),
                    svg::grouped_bars(labels, {observed}, plot));

    std::ostringstream teams_csv;
    teams_csv << "team,matches\n";
    for (const auto& [team, count] : team_match_counts(table)) {
        teams_csv << csv_escape(team) << "," << count << "\n";
    }
    write_text_file((dir / "team_counts.csv").string(), teams_csv.str());
    if (table.has("FTHG") && table.rows > 0) {
        std::cout << render_summary_line(describe(table, "FTHG"));
    }
    std::cout << "wrote describe report to " << dir.string() << "\n";
}

void cmd_gof(Options& opts) {
    const fs::path dir = prepare_out_dir(opts);
    const MatchTable table = load_and_prune(opts.config);

    if (opts.per_team) {
        const auto checks = check_all_teams(table, opts.config.tail_threshold);
        for (const auto& check : checks) {
            std::cout << check.team << " has p-value from chisq test: "
                      << format_probability(check.p_value) << "\n";
        }
        write_text_file((dir / "team_pvalues.csv").string(),
                        render_team_checks_csv(checks, opts.config.alpha_team));
        std::cout << "wrote per-team GOF report to " << dir.string() << "\n";
        return;
    }

    const auto bins = goal_histogram(table, opts.config.tail_threshold);
    const auto observed = histogram_counts(bins);
    const double lambda = describe(table, "FTHG").mean;

    const GofTable table_rounded = poisson_probability_table(
        observed, lambda, opts.config.tail_threshold, ProbMode::rounded3);
    const GofTable table_exact = poisson_probability_table(
        observed, lambda, opts.config.tail_threshold, ProbMode::exact);
    const GofResult rounded = chisq_gof(table_rounded);
    const GofResult exact = chisq_gof(table_exact);
    const GofTable& shown =
        opts.config.prob_mode == ProbMode::rounded3 ? table_rounded : table_exact;

    write_text_file((dir / "gof_table.csv").string(), render_gof_table_csv(shown));
    write_text_file((dir / "gof_table.txt").string(), render_gof_table_text(shown));
    write_text_file((dir / "gof_result.txt").string(),
                    render_gof_verdict(rounded, exact, opts.config.alpha_gof));

    svg::Series actual{"observed", {}, "#1f6fb2"};
    svg::Series expected{"expected", {}, "#d08a2a"};
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < shown.rows.size(); ++i) {
        labels.push_back(shown.rows[i].label);
        actual.points.emplace_back(static_cast<double>(i), shown.rows[i].observed);
        expected.points.emplace_back(static_cast<double>(i), shown.rows[i].expected);
    }
    svg::PlotOptions plot;
    plot.title = "Observed vs expected matches per goal count";
    plot.x_label = "goals";
    plot.y_label = "matches";
    write_text_file((dir / "gof_observed_expected.svg").string(),
                    svg::grouped_bars(labels, {actual, expected}, plot));

    const GofResult& headline = opts.config.prob_mode == ProbMode::rounded3 ? rounded : exact;
    std::cout << "X-squared = " << format_fixed(headline.statistic, 3)
              << ", df = " << headline.df
              << ", p-value = " << format_probability(headline.p_value) << "\n";
    std::cout << (headline.p_value < opts.config.alpha_gof ? "reject H0" : "fail to reject H0")
              << " at alpha = " << format_compact(opts.config.alpha_gof) << "\n";
    std::cout << "wrote GOF report to " << dir.string() << "\n";
}

void cmd_select_teams(Options& opts) {
    const fs::path dir = prepare_out_dir(opts);
    const MatchTable table = load_and_prune(opts.config);
    const auto checks = check_all_teams(table, opts.config.tail_threshold);
    write_text_file((dir / "team_pvalues.csv").string(),
                    render_team_checks_csv(checks, opts.config.alpha_team));

    std::string selected;
    std::size_t count = 0;
    for (const auto& check : checks) {
        if (!check.degenerate && check.p_value >= opts.config.alpha_team) {
            selected += check.team + "\n";
            ++count;
        }
    }
    write_text_file((dir / "selected_teams.txt").string(), selected);
    if (count == 0) {
        std::cout << "warning: no team passed the Poisson screen at alpha = "
                  << format_compact(opts.config.alpha_team) << "\n";
    } else {
        std::cout << count << " team(s) selected at alpha = "
                  << format_compact(opts.config.alpha_team) << ":\n"
                  << selected;
    }
    std::cout << "wrote team selection to " << dir.string() << "\n";
}

void cmd_search(Options& opts) {
    const fs::path dir = prepare_out_dir(opts);
    const MatchTable table = load_and_prune(opts.config);
    const ModelFrame frame = pipeline_frame(opts.config, table);
    std::cout << "model frame: " << frame.n() << " observations, "
              << frame.team_levels.size() << " teams";
    if (frame.zero_rows_excluded > 0) {
        std::cout << " (" << frame.zero_rows_excluded
                  << " rows dropped for zero HST/HC under plain-log mode)";
    }
    std::cout << "\n";

    const auto formulas = enumerate_formulas("FTHG", opts.config.variables);
    const SelectionTable all =
        fit_all(frame, formulas, opts.config.fit_options, opts.config.workers);
    for (const auto& entry : all) {
        if (entry.failed) {
            std::cerr << "fit failed for model " << entry.model << ": " << entry.failure
                      << "\n";
        }
    }
    write_text_file((dir / "selection_all.csv").string(), render_selection_csv(all, false));
    write_text_file((dir / "selection_all.txt").string(), render_selection_text(all, false));

    const SelectionTable ranked = rank_by_aic(gof_filter(all, opts.config.alpha_gof));
    write_text_file((dir / "selection_filtered.csv").string(),
                    render_selection_csv(ranked, true));
    write_text_file((dir / "selection_filtered.txt").string(),
                    render_selection_text(ranked, true));

    std::cout << formulas.size() << " models fitted; " << ranked.size()
              << " pass the goodness-of-fit screen at alpha = "
              << format_compact(opts.config.alpha_gof) << "\n";
    if (!ranked.empty()) {
        write_text_file((dir / "best_model.txt").string(), ranked.front().model + "\n");
        std::cout << "best model by AIC: FTHG ~ " << ranked.front().model << " (AIC "
                  << format_fixed(ranked.front().aic, 4) << ")\n";
    } else {
        std::cout << "warning: no model passed the goodness-of-fit screen\n";
    }
    std::cout << "wrote selection tables to " << dir.string() << "\n";
}

void cmd_fit(Options& opts) {
    const fs::path dir = prepare_out_dir(opts);
    const MatchTable table = load_and_prune(opts.config);
    const ModelFrame frame = pipeline_frame(opts.config, table);
    const Formula formula = model_formula(opts);
    auto [design, y] = build_design(frame, formula);
    const GlmFit fit = irls_fit(design, y, opts.config.fit_options);

    write_text_file((dir / "fit_summary.txt").string(),
                    render_fit_summary(fit, formula.response, opts.config.ci_level));
    write_text_file((dir / "coefficients.csv").string(),
                    render_coefficients_csv(fit, opts.config.ci_level));
    std::cout << "model FTHG ~ " << formula.terms_string() << "\n";
    std::cout << "n = " << fit.n_obs() << ", deviance = " << format_fixed(fit.deviance, 1)
              << ", log-likelihood = " << format_fixed(fit.llf, 1)
              << ", AIC = " << format_fixed(fit.aic, 4)
              << ", iterations = " << fit.iterations << "\n";
    if (!fit.converged) std::cout << "warning: IRLS did not converge\n";
    std::cout << "wrote fit report to " << dir.string() << "\n";
}

void cmd_diagnose(Options& opts) {
    const fs::path dir = prepare_out_dir(opts);
    const MatchTable table = load_and_prune(opts.config);
    const ModelFrame frame = pipeline_frame(opts.config, table);
    const Formula formula = model_formula(opts);
    auto [design, y] = build_design(frame, formula);
    const GlmFit fit = irls_fit(design, y, opts.config.fit_options);
    const DiagnosticsBundle bundle = compute_diagnostics(frame, design, fit);
    write_text_file((dir / "diagnostics.csv").string(), render_diagnostics_csv(bundle));

    svg::PlotOptions plot;
    plot.x_label = "fitted value";
    plot.y_label = "Pearson residual";
    plot.title = "Residuals vs fitted values";
    plot.zero_line = true;
    svg::Series series{"", {}, "#1f6fb2"};
    for (std::size_t i = 0; i < bundle.fitted_means.size(); ++i) {
        series.points.emplace_back(bundle.fitted_means[i], bundle.pearson_residuals[i]);
    }
    write_text_file((dir / "residuals_vs_fitted.svg").string(), svg::scatter({series}, plot));

    svg::Series qq{"", {}, "#1f6fb2"};
    for (const auto& [theoretical, sample] : qq_points(bundle.pearson_residuals)) {
        qq.points.emplace_back(theoretical, sample);
    }
    plot = {};
    plot.title = "Normal Q-Q plot of Pearson residuals";
    plot.x_label = "theoretical quantile";
    plot.y_label = "sample quantile";
    plot.identity_line = true;
    write_text_file((dir / "qq_plot.svg").string(), svg::scatter({qq}, plot));

    svg::Series lev{"", {}, "#1f6fb2"};
    for (std::size_t i = 0; i < bundle.leverage.size(); ++i) {
        lev.points.emplace_back(bundle.leverage[i], bundle.standardized_residuals[i]);
    }
    plot = {};
    plot.title = "Standardized residuals vs leverage";
    plot.x_label = "leverage";
    plot.y_label = "standardized residual";
    plot.zero_line = true;
    write_text_file((dir / "residuals_vs_leverage.svg").string(), svg::scatter({lev}, plot));

    OutlierRule rule;
    if (!opts.drop_ids.empty()) {
        rule.kind = OutlierRule::Kind::explicit_ids;
        rule.ids = opts.drop_ids;
    } else if (opts.resid_threshold > 0.0) {
        rule.kind = OutlierRule::Kind::residual_threshold;
        rule.c = opts.resid_threshold;
    } else if (opts.leverage_multiplier > 0.0) {
        rule.kind = OutlierRule::Kind::leverage_threshold;
        rule.m = opts.leverage_multiplier;
    }
    std::vector<std::string> warnings;
    const auto flagged = flag_outliers(bundle, rule,
                                       static_cast<std::size_t>(fit.n_params()), &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    if (!flagged.empty()) {
        std::cout << "flagged observation ids:";
        for (auto id : flagged) std::cout << " " << id;
        std::cout << "\n";
    }

    const RefitResult refit =
        refit_without(frame, formula, flagged, opts.config.fit_options);
    write_text_file((dir / "refit_summary.txt").string(),
                    render_refit_report(refit, formula.response, opts.config.ci_level));
    write_text_file((dir / "refit_coefficients.csv").string(),
                    render_coefficients_csv(refit.after, opts.config.ci_level));
    std::cout << "refit without " << refit.dropped << " observation(s): n = "
              << refit.after.n_obs() << ", deviance = "
              << format_fixed(refit.after.deviance, 1) << ", log-likelihood = "
              << format_fixed(refit.after.llf, 1) << "\n";
    std::cout << "wrote diagnostics to " << dir.string() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"count-regression toolkit for home-goal match data"};
    app.require_subcommand(1);

    Options describe_opts, gof_opts, select_opts, search_opts, fit_opts, diagnose_opts;

    add_common_options(app.add_subcommand("describe", "missingness, summaries, histograms"),
                       describe_opts);
    CLI::App* gof = app.add_subcommand("gof", "Poisson goodness-of-fit of the goal counts");
    add_common_options(gof, gof_opts);
    gof->add_flag("--per-team", gof_opts.per_team, "run the chi-square test per home team");
    add_common_options(
        app.add_subcommand("select-teams", "teams whose goals pass the Poisson screen"),
        select_opts);
    add_common_options(app.add_subcommand("search", "exhaustive AIC model search"),
                       search_opts);
    CLI::App* fit = app.add_subcommand("fit", "fit one Poisson GLM and report it");
    add_common_options(fit, fit_opts);
    fit->add_option("--model", fit_opts.model, "formula, e.g. \"FTHG ~ logHST + HomeTeam\"");
    CLI::App* diagnose =
        app.add_subcommand("diagnose", "residual/leverage diagnostics and refit");
    add_common_options(diagnose, diagnose_opts);
    diagnose->add_option("--model", diagnose_opts.model, "formula to diagnose");
    diagnose->add_option("--drop-ids", diagnose_opts.drop_ids,
                         "observation ids to drop before the refit")
        ->delimiter(',');
    diagnose->add_option("--resid-threshold", diagnose_opts.resid_threshold,
                         "flag |standardized residual| above this value");
    diagnose->add_option("--leverage-multiplier", diagnose_opts.leverage_multiplier,
                         "flag leverage above multiplier * p / n");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("describe")) cmd_describe(describe_opts);
        else if (app.got_subcommand("gof")) cmd_gof(gof_opts);
        else if (app.got_subcommand("select-teams")) cmd_select_teams(select_opts);
        else if (app.got_subcommand("search")) cmd_search(search_opts);
        else if (app.got_subcommand("fit")) cmd_fit(fit_opts);
        else if (app.got_subcommand("diagnose")) cmd_diagnose(diagnose_opts);
    } catch (const PipelineError& e) {
        std::cerr << "error:" << e.error_class() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error:domain: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error:usage: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error:internal: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
