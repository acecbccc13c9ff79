#pragma once

#include <string>
#include <vector>

#include "countreg/diagnostics.hpp"
#include "countreg/dist_check.hpp"
#include "countreg/ingest.hpp"
#include "countreg/model_search.hpp"

namespace countreg {

struct PipelineConfig {
    std::vector<std::string> inputs;
    double missing_threshold = 0.05;
    std::size_t max_category_levels = 50;
    int tail_threshold = 5;
    double alpha_team = 0.05;
    double alpha_gof = 0.05;
    LogMode log_mode = LogMode::plain_log_drop_zeros;
    ProbMode prob_mode = ProbMode::rounded3;
    double ci_level = 0.95;
    std::vector<std::string> variables = {"HTAG", "logHST", "logHC", "HR", "AR", "HomeTeam"};
    OutlierRule outlier_rule;
    std::string out_dir = "countreg_out";
    unsigned workers = 0; // 0 = hardware concurrency
    FitOptions fit_options;

    void validate() const;
    // Deterministic key=value echo written next to every command's output.
    std::string echo() const;
};

// Shared pipeline stages. Each command recomputes what it needs from the
// raw inputs, so results are deterministic functions of (config, files).
MatchTable load_and_prune(const PipelineConfig& config);
std::vector<std::string> pipeline_select_teams(const PipelineConfig& config,
                                               const MatchTable& table);
ModelFrame pipeline_frame(const PipelineConfig& config, const MatchTable& table);

std::string log_mode_name(LogMode mode);
std::string prob_mode_name(ProbMode mode);
LogMode parse_log_mode(const std::string& name);
ProbMode parse_prob_mode(const std::string& name);

} // namespace countreg
