#include "countreg/dist_check.hpp"

#include <cmath>
#include <stdexcept>

#include "countreg/errors.hpp"
#include "countreg/specfun.hpp"

namespace countreg {

namespace {

std::vector<double> team_goals(const MatchTable& table, const std::string& team) {
    const Column& home = table.require("HomeTeam");
    const Column& fthg = table.require("FTHG");
    std::vector<double> goals;
    for (std::size_t i = 0; i < table.rows; ++i) {
        if (home.missing[i] || home.text[i] != team || fthg.missing[i]) continue;
        goals.push_back(fthg.num[i]);
    }
    return goals;
}

} // namespace

double GofTable::total() const {
    double n = 0.0;
    for (const auto& r : rows) n += r.observed;
    return n;
}

GofTable poisson_probability_table(const std::vector<double>& observed, double lambda,
                                   int tail_threshold, ProbMode mode) {
    if (tail_threshold < 1) throw ConfigError("tail threshold must be >= 1");
    const std::size_t bins = static_cast<std::size_t>(tail_threshold) + 2;
    if (observed.size() != bins) {
        throw ConfigError("expected " + std::to_string(bins) + " observed bins, got " +
                          std::to_string(observed.size()));
    }
    if (!(lambda > 0.0)) throw std::domain_error("lambda must be positive");

    std::vector<double> probs(bins);
    for (int k = 0; k <= tail_threshold; ++k) {
        probs[static_cast<std::size_t>(k)] = specfun::poisson_pmf(k, lambda);
    }
    probs.back() = specfun::poisson_sf(tail_threshold, lambda);
    if (mode == ProbMode::rounded3) {
        for (auto& p : probs) p = std::round(p * 1000.0) / 1000.0;
    }
    double sum = 0.0;
    for (double p : probs) sum += p;
    if (std::fabs(sum - 1.0) > 1e-9) {
        throw InternalError("bin probabilities sum to " + std::to_string(sum) +
                            ", not 1; use exact probability mode");
    }

    double n = 0.0;
    for (double o : observed) n += o;
    GofTable table;
    table.rows.reserve(bins);
    for (std::size_t i = 0; i < bins; ++i) {
        GofRow row;
        row.label = (i + 1 < bins) ? std::to_string(i)
                                   : "more than " + std::to_string(tail_threshold);
        row.observed = observed[i];
        row.prob = probs[i];
        row.expected = n * probs[i];
        table.rows.push_back(std::move(row));
    }
    return table;
}

GofResult chisq_gof(const GofTable& table) {
    if (table.rows.size() < 2) {
        throw DegenerateBinsError("chi-square test needs at least 2 bins");
    }
    double statistic = 0.0;
    for (const auto& row : table.rows) {
        if (!(row.expected > 0.0)) {
            throw DegenerateBinsError("expected count is not positive in bin " + row.label);
        }
        const double d = row.observed - row.expected;
        statistic += d * d / row.expected;
    }
    GofResult result;
    result.statistic = statistic;
    result.df = static_cast<int>(table.rows.size()) - 1;
    result.p_value = specfun::chi2_sf(statistic, static_cast<double>(result.df));
    result.table = table;
    return result;
}

TeamCheck check_team_detail(const MatchTable& table, const std::string& team,
                            int tail_threshold) {
    const auto goals = team_goals(table, team);
    TeamCheck check;
    check.team = team;
    check.matches = static_cast<long>(goals.size());
    if (goals.empty()) throw ConfigError("unknown team: " + team);

    double sum = 0.0;
    for (double g : goals) sum += g;
    check.lambda = sum / static_cast<double>(goals.size());

    std::vector<double> observed(static_cast<std::size_t>(tail_threshold) + 2, 0.0);
    for (double g : goals) {
        const long k = static_cast<long>(g);
        if (k > tail_threshold) {
            observed.back() += 1.0;
        } else if (k >= 0) {
            observed[static_cast<std::size_t>(k)] += 1.0;
        }
    }
    std::size_t nonempty = 0;
    for (double o : observed) nonempty += o > 0.0 ? 1 : 0;

    check.degenerate = true;
    check.p_value = 0.0;
    if (!(check.lambda > 0.0) || nonempty < 2) return check;

    try {
        // Per-team tables use exact probabilities so the cells always sum
        // to one regardless of the team's sample mean.
        GofTable gof = poisson_probability_table(observed, check.lambda, tail_threshold,
                                                 ProbMode::exact);
        // An underflowed tail collapses into the last regular bin so every
        // expected count stays positive.
        if (gof.rows.size() >= 2 && gof.rows.back().expected <= 0.0) {
            GofRow tail = gof.rows.back();
            gof.rows.pop_back();
            gof.rows.back().observed += tail.observed;
            gof.rows.back().prob += tail.prob;
            gof.rows.back().expected += tail.expected;
        }
        const GofResult result = chisq_gof(gof);
        check.p_value = result.p_value;
        check.degenerate = false;
    } catch (const PipelineError&) {
        check.p_value = 0.0;
        check.degenerate = true;
    }
    return check;
}

double check_team(const MatchTable& table, const std::string& team, int tail_threshold) {
    return check_team_detail(table, team, tail_threshold).p_value;
}

std::vector<TeamCheck> check_all_teams(const MatchTable& table, int tail_threshold) {
    std::vector<TeamCheck> checks;
    for (const auto& team : home_teams(table)) {
        checks.push_back(check_team_detail(table, team, tail_threshold));
    }
    return checks;
}

std::vector<std::string> select_teams(const MatchTable& table, double alpha,
                                      int tail_threshold) {
    if (alpha < 0.0 || alpha >= 1.0) {
        throw ConfigError("team selection alpha must lie in [0, 1)");
    }
    std::vector<std::string> selected;
    for (const auto& check : check_all_teams(table, tail_threshold)) {
        if (!check.degenerate && check.p_value >= alpha) selected.push_back(check.team);
    }
    return selected;
}

} // namespace countreg
