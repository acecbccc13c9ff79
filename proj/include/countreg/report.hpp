#pragma once

#include <string>
#include <vector>

#include "countreg/diagnostics.hpp"
#include "countreg/dist_check.hpp"
#include "countreg/glm.hpp"
#include "countreg/ingest.hpp"
#include "countreg/model_search.hpp"

namespace countreg {

enum class Align { left, right };

// Minimal fixed-width table renderer for the aligned-text reports.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header,
                       std::vector<Align> align = {});
    void add_row(std::vector<std::string> cells);
    std::string to_string() const;

private:
    std::vector<std::string> header_;
    std::vector<Align> align_;
    std::vector<std::vector<std::string>> rows_;
};

std::string csv_escape(const std::string& cell);
void write_text_file(const std::string& path, const std::string& content);
std::string format_fixed(double v, int decimals);
std::string format_compact(double v); // integers without decimals, else %g
std::string format_probability(double p);

// "min Q1 median Q3 max mean sd n missing" header plus one value line.
std::string render_summary_line(const SummaryStats& stats);

std::string render_missingness_text(const std::vector<MissingEntry>& report);
std::string render_missingness_csv(const std::vector<MissingEntry>& report);

std::string render_gof_table_text(const GofTable& table);
std::string render_gof_table_csv(const GofTable& table);
std::string render_gof_verdict(const GofResult& rounded, const GofResult& exact,
                               double alpha);

std::string render_team_checks_csv(const std::vector<TeamCheck>& checks, double alpha);

std::string render_selection_csv(const SelectionTable& table, bool with_p_chisq);
std::string render_selection_text(const SelectionTable& table, bool with_p_chisq);

// Two-block header with fit statistics followed by the coefficient table.
std::string render_fit_summary(const GlmFit& fit, const std::string& response,
                               double ci_level);
std::string render_coefficients_csv(const GlmFit& fit, double ci_level);

std::string render_diagnostics_csv(const DiagnosticsBundle& bundle);
std::string render_refit_report(const RefitResult& refit, const std::string& response,
                                double ci_level);

} // namespace countreg
