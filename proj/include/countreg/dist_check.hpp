#pragma once

#include <string>
#include <vector>

#include "countreg/ingest.hpp"

namespace countreg {

enum class ProbMode { exact, rounded3 };

struct GofRow {
    std::string label;
    double observed = 0.0;
    double prob = 0.0;
    double expected = 0.0;
};

struct GofTable {
    std::vector<GofRow> rows;
    double total() const;
};

struct GofResult {
    double statistic = 0.0;
    int df = 0;
    double p_value = 0.0;
    GofTable table;
};

// Poisson cell probabilities for bins 0..tail_threshold plus the upper
// tail; `observed` must hold tail_threshold + 2 bin counts. In rounded3
// mode each probability is rounded to 3 decimals before expected counts
// are formed (the probabilities must still sum to one).
GofTable poisson_probability_table(const std::vector<double>& observed, double lambda,
                                   int tail_threshold, ProbMode mode);

// Chi-square test with given probabilities; requires every expected
// count to be positive.
GofResult chisq_gof(const GofTable& table);

struct TeamCheck {
    std::string team;
    double p_value = 0.0;
    bool degenerate = false;
    double lambda = 0.0;
    long matches = 0;
};

// Chi-square GOF of one team's home-goal counts against Poisson with the
// team's sample mean. Degenerate tests (an expected bin <= 0 after tail
// collapse, fewer than 2 nonempty observed bins, or a test error) report
// p = 0.
TeamCheck check_team_detail(const MatchTable& table, const std::string& team,
                            int tail_threshold);

double check_team(const MatchTable& table, const std::string& team, int tail_threshold);

// Teams whose check_team p-value is >= alpha, first-appearance order.
// Degenerate tests never qualify.
std::vector<std::string> select_teams(const MatchTable& table, double alpha,
                                      int tail_threshold);

std::vector<TeamCheck> check_all_teams(const MatchTable& table, int tail_threshold);

} // namespace countreg
