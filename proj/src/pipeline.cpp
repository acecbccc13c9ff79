#include "countreg/pipeline.hpp"

#include <sstream>

#include "countreg/errors.hpp"

namespace countreg {

void PipelineConfig::validate() const {
    if (inputs.empty()) throw ConfigError("no input files given");
    if (missing_threshold < 0.0 || missing_threshold > 1.0) {
        throw ConfigError("missing-threshold must lie in [0, 1]");
    }
    if (tail_threshold < 1) throw ConfigError("tail-threshold must be >= 1");
    if (!(alpha_team > 0.0 && alpha_team < 1.0)) {
        throw ConfigError("alpha-team must lie in (0, 1)");
    }
    if (!(alpha_gof > 0.0 && alpha_gof < 1.0)) {
        throw ConfigError("alpha-gof must lie in (0, 1)");
    }
    if (!(ci_level > 0.0 && ci_level < 1.0)) {
        throw ConfigError("ci-level must lie in (0, 1)");
    }
    if (variables.empty()) throw ConfigError("variable universe is empty");
    if (out_dir.empty()) throw ConfigError("output directory is empty");
}

std::string PipelineConfig::echo() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        out << "input." << i << "=" << inputs[i] << "\n";
    }
    out << "missing_threshold=" << missing_threshold << "\n";
    out << "max_category_levels=" << max_category_levels << "\n";
    out << "tail_threshold=" << tail_threshold << "\n";
    out << "alpha_team=" << alpha_team << "\n";
    out << "alpha_gof=" << alpha_gof << "\n";
    out << "log_mode=" << log_mode_name(log_mode) << "\n";
    out << "prob_mode=" << prob_mode_name(prob_mode) << "\n";
    out << "ci_level=" << ci_level << "\n";
    out << "variables=";
    for (std::size_t i = 0; i < variables.size(); ++i) {
        if (i) out << "+";
        out << variables[i];
    }
    out << "\n";
    out << "out_dir=" << out_dir << "\n";
    out << "workers=" << workers << "\n";
    return out.str();
}

MatchTable load_and_prune(const PipelineConfig& config) {
    const MatchTable raw = load_matches(config.inputs);
    return prune_columns(raw, config.missing_threshold, config.max_category_levels);
}

std::vector<std::string> pipeline_select_teams(const PipelineConfig& config,
                                               const MatchTable& table) {
    return select_teams(table, config.alpha_team, config.tail_threshold);
}

ModelFrame pipeline_frame(const PipelineConfig& config, const MatchTable& table) {
    const auto teams = pipeline_select_teams(config, table);
    if (teams.empty()) {
        throw ConfigError("no team passed the Poisson goodness-of-fit screen");
    }
    return build_model_frame(table, teams, config.log_mode);
}

std::string log_mode_name(LogMode mode) {
    return mode == LogMode::plain_log_drop_zeros ? "plain-log-drop-zeros" : "log1p";
}

std::string prob_mode_name(ProbMode mode) {
    return mode == ProbMode::rounded3 ? "rounded3" : "exact";
}

LogMode parse_log_mode(const std::string& name) {
    if (name == "plain-log-drop-zeros") return LogMode::plain_log_drop_zeros;
    if (name == "log1p") return LogMode::log1p;
    throw ConfigError("unknown log mode: " + name +
                      " (expected plain-log-drop-zeros or log1p)");
}

ProbMode parse_prob_mode(const std::string& name) {
    if (name == "rounded3") return ProbMode::rounded3;
    if (name == "exact") return ProbMode::exact;
    throw ConfigError("unknown probability mode: " + name + " (expected rounded3 or exact)");
}

} // namespace countreg
