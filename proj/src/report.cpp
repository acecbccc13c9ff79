#include "countreg/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "countreg/errors.hpp"

namespace countreg {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

} // namespace

TextTable::TextTable(std::vector<std::string> header, std::vector<Align> align)
    : header_(std::move(header)), align_(std::move(align)) {
    if (align_.empty()) align_.assign(header_.size(), Align::right);
}

void TextTable::add_row(std::vector<std::string> cells) {
    cells.resize(header_.size());
    rows_.push_back(std::move(cells));
}

std::string TextTable::to_string() const {
    std::vector<std::size_t> widths(header_.size());
    for (std::size_t c = 0; c < header_.size(); ++c) widths[c] = header_[c].size();
    for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << "  ";
            const auto pad = widths[c] - row[c].size();
            if (align_[c] == Align::right) out << std::string(pad, ' ') << row[c];
            else out << row[c] << std::string(pad, ' ');
        }
        out << "\n";
    };
    emit(header_);
    for (const auto& row : rows_) emit(row);
    return out.str();
}

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

std::string format_compact(double v) {
    if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.0f", v);
        return buf;
    }
    return fmt("%.6g", v);
}

std::string format_probability(double p) {
    if (p != 0.0 && p < 1e-4) return fmt("%.4g", p);
    return format_fixed(p, 6);
}

std::string render_summary_line(const SummaryStats& s) {
    std::ostringstream out;
    out << "min Q1 median Q3 max mean sd n missing\n";
    out << format_compact(s.min) << " " << format_compact(s.q1) << " "
        << format_compact(s.median) << " " << format_compact(s.q3) << " "
        << format_compact(s.max) << " " << format_fixed(s.mean, 6) << " "
        << format_fixed(s.sd, 6) << " " << s.n << " " << s.missing << "\n";
    return out.str();
}

std::string render_missingness_text(const std::vector<MissingEntry>& report) {
    TextTable table({"column", "missing", "fraction"}, {Align::left, Align::right, Align::right});
    for (const auto& e : report) {
        table.add_row({e.column, std::to_string(e.missing), format_fixed(e.fraction, 6)});
    }
    return table.to_string();
}

std::string render_missingness_csv(const std::vector<MissingEntry>& report) {
    std::ostringstream out;
    out << "column,missing,fraction\n";
    for (const auto& e : report) {
        out << csv_escape(e.column) << "," << e.missing << "," << format_fixed(e.fraction, 6)
            << "\n";
    }
    return out.str();
}

std::string render_gof_table_text(const GofTable& table) {
    TextTable t({"FTHG", "ActualMatches", "PoisProb", "ExpectedMatches"},
                {Align::left, Align::right, Align::right, Align::right});
    for (const auto& row : table.rows) {
        t.add_row({row.label, format_compact(row.observed), format_fixed(row.prob, 3),
                   format_compact(std::round(row.expected))});
    }
    return t.to_string();
}

std::string render_gof_table_csv(const GofTable& table) {
    std::ostringstream out;
    out << "label,observed,prob,expected\n";
    for (const auto& row : table.rows) {
        out << csv_escape(row.label) << "," << format_compact(row.observed) << ","
            << format_fixed(row.prob, 6) << "," << format_fixed(row.expected, 6) << "\n";
    }
    return out.str();
}

std::string render_gof_verdict(const GofResult& rounded, const GofResult& exact,
                               double alpha) {
    std::ostringstream out;
    out << "Chi-square test for given probabilities\n\n";
    out << "rounded 3-decimal probabilities: X-squared = " << format_fixed(rounded.statistic, 3)
        << ", df = " << rounded.df << ", p-value = " << format_probability(rounded.p_value)
        << "\n";
    out << "exact probabilities:             X-squared = " << format_fixed(exact.statistic, 3)
        << ", df = " << exact.df << ", p-value = " << format_probability(exact.p_value)
        << "\n\n";
    const bool reject = rounded.p_value < alpha;
    out << "decision at alpha = " << format_compact(alpha) << ": "
        << (reject ? "reject H0 — the counts are not Poisson-distributed"
                   : "fail to reject H0 — the counts are consistent with a Poisson distribution")
        << "\n";
    return out.str();
}

std::string render_team_checks_csv(const std::vector<TeamCheck>& checks, double alpha) {
    std::ostringstream out;
    out << "team,matches,lambda,p_value,degenerate,selected\n";
    for (const auto& c : checks) {
        const bool selected = !c.degenerate && c.p_value >= alpha;
        out << csv_escape(c.team) << "," << c.matches << "," << format_fixed(c.lambda, 6)
            << "," << format_probability(c.p_value) << "," << (c.degenerate ? 1 : 0) << ","
            << (selected ? 1 : 0) << "\n";
    }
    return out.str();
}

namespace {

std::vector<std::string> selection_row(const SelectionEntry& e, bool with_p) {
    std::vector<std::string> row = {e.model};
    if (e.failed) {
        row.insert(row.end(), {"failed", "failed", "failed", "failed", "failed"});
        if (with_p) row.push_back("failed");
        return row;
    }
    row.push_back(format_fixed(e.deviance, 6));
    row.push_back(format_fixed(e.pearson_chi2, 6));
    row.push_back(format_fixed(e.llf, 5));
    row.push_back(std::to_string(e.df_resid));
    row.push_back(format_fixed(e.aic, 4));
    if (with_p) row.push_back(e.p_chisq ? format_fixed(*e.p_chisq, 6) : "");
    return row;
}

} // namespace

std::string render_selection_csv(const SelectionTable& table, bool with_p_chisq) {
    std::ostringstream out;
    out << "model,deviance,pearson_chi2,llf,df_resid,AIC";
    if (with_p_chisq) out << ",p_chisq";
    out << "\n";
    for (const auto& e : table) {
        const auto row = selection_row(e, with_p_chisq);
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ",";
            out << csv_escape(row[c]);
        }
        out << "\n";
    }
    return out.str();
}

std::string render_selection_text(const SelectionTable& table, bool with_p_chisq) {
    std::vector<std::string> header = {"model", "deviance", "pearson_chi2",
                                       "llf",   "df_resid", "AIC"};
    std::vector<Align> align = {Align::left,  Align::right, Align::right,
                                Align::right, Align::right, Align::right};
    if (with_p_chisq) {
        header.push_back("p_chisq");
        align.push_back(Align::right);
    }
    TextTable t(header, align);
    for (const auto& e : table) t.add_row(selection_row(e, with_p_chisq));
    return t.to_string();
}

std::string render_fit_summary(const GlmFit& fit, const std::string& response,
                               double ci_level) {
    std::ostringstream out;
    const auto left = std::vector<std::pair<std::string, std::string>>{
        {"Dep. Variable:", response},
        {"Model:", "GLM"},
        {"Model Family:", "Poisson"},
        {"Link Function:", "log"},
        {"Method:", "IRLS"},
        {"No. Iterations:", std::to_string(fit.iterations)},
        {"Covariance Type:", "nonrobust"},
    };
    const auto right = std::vector<std::pair<std::string, std::string>>{
        {"No. Observations:", std::to_string(fit.n_obs())},
        {"Df Residuals:", std::to_string(fit.df_resid)},
        {"Df Model:", std::to_string(fit.df_model)},
        {"Scale:", "1"},
        {"Log-Likelihood:", format_fixed(fit.llf, 1)},
        {"Deviance:", format_fixed(fit.deviance, 1)},
        {"Pearson chi2:", fmt("%.2e", fit.pearson_chi2)},
    };
    std::size_t lw = 0, lv = 0, rw = 0;
    for (const auto& [k, v] : left) {
        lw = std::max(lw, k.size());
        lv = std::max(lv, v.size());
    }
    for (const auto& [k, v] : right) rw = std::max(rw, k.size());
    for (std::size_t i = 0; i < left.size(); ++i) {
        out << left[i].first << std::string(lw - left[i].first.size() + 2, ' ')
            << left[i].second << std::string(lv - left[i].second.size() + 4, ' ')
            << right[i].first << std::string(rw - right[i].first.size() + 2, ' ')
            << right[i].second << "\n";
    }
    out << "\n";

    const double lo_tail = (1.0 - ci_level) / 2.0;
    TextTable t({"", "coef", "std err", "z", "P>|z|", "[" + format_fixed(lo_tail, 3),
                 format_fixed(1.0 - lo_tail, 3) + "]"},
                {Align::left, Align::right, Align::right, Align::right, Align::right,
                 Align::right, Align::right});
    for (const auto& row : summarize(fit, ci_level)) {
        t.add_row({row.name, format_fixed(row.coef, 4), format_fixed(row.std_err, 3),
                   std::isnan(row.z) ? "nan" : format_fixed(row.z, 3),
                   std::isnan(row.p_value) ? "nan" : format_fixed(row.p_value, 3),
                   format_fixed(row.ci_low, 3), format_fixed(row.ci_high, 3)});
    }
    out << t.to_string();
    return out.str();
}

std::string render_coefficients_csv(const GlmFit& fit, double ci_level) {
    std::ostringstream out;
    out << "name,coef,std_err,z,p_value,ci_low,ci_high\n";
    for (const auto& row : summarize(fit, ci_level)) {
        out << csv_escape(row.name) << "," << format_fixed(row.coef, 10) << ","
            << format_fixed(row.std_err, 10) << ","
            << (std::isnan(row.z) ? "nan" : format_fixed(row.z, 6)) << ","
            << (std::isnan(row.p_value) ? "nan" : format_probability(row.p_value)) << ","
            << format_fixed(row.ci_low, 10) << "," << format_fixed(row.ci_high, 10) << "\n";
    }
    return out.str();
}

std::string render_diagnostics_csv(const DiagnosticsBundle& bundle) {
    std::ostringstream out;
    out << "observation_id,response,fitted,pearson_residual,leverage,standardized_residual\n";
    for (std::size_t i = 0; i < bundle.observation_ids.size(); ++i) {
        out << bundle.observation_ids[i] << "," << format_compact(bundle.response[i]) << ","
            << format_fixed(bundle.fitted_means[i], 6) << ","
            << format_fixed(bundle.pearson_residuals[i], 6) << ","
            << format_fixed(bundle.leverage[i], 8) << ","
            << format_fixed(bundle.standardized_residuals[i], 6) << "\n";
    }
    return out.str();
}

std::string render_refit_report(const RefitResult& refit, const std::string& response,
                                double ci_level) {
    std::ostringstream out;
    out << "=== fit on the full frame ===\n";
    out << render_fit_summary(refit.before, response, ci_level) << "\n";
    out << "=== fit after dropping " << refit.dropped << " observation(s) ===\n";
    out << render_fit_summary(refit.after, response, ci_level) << "\n";
    out << "=== coefficient changes ===\n";
    TextTable t({"", "before", "after", "delta"},
                {Align::left, Align::right, Align::right, Align::right});
    for (const auto& d : refit.deltas) {
        t.add_row({d.name, format_fixed(d.before, 6), format_fixed(d.after, 6),
                   format_fixed(d.delta, 6)});
    }
    out << t.to_string();
    return out.str();
}

} // namespace countreg
